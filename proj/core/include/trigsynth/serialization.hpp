#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "trigsynth/certificate.hpp"
#include "trigsynth/trig_poly.hpp"

namespace trigsynth {

// Shortest round-trip decimal form of x; stable across runs.
std::string format_double(double x);

// JSON with one {clause, bound, achieved, n, verified} object per clause,
// plus the overall pass flag, index, and a parameter snapshot.
std::string certificate_to_json(const Certificate& cert, int indent = 2);

// Coefficient triples "k,re,im" with ascending k, one per line after the
// header.  read_coeff_csv accepts the same format back.
void write_coeff_csv(std::ostream& out, const TrigPoly& p);
TrigPoly read_coeff_csv(std::istream& in);

// Sampled curve "t,re,im" on a uniform grid of the given size.
void write_curve_csv(std::ostream& out, const TrigPoly& p, std::size_t grid);

// Flat key=value config text; '#' starts a comment, blank lines ignored.
// Later assignments win.  Throws std::invalid_argument on a malformed line.
std::map<std::string, std::string> parse_config(std::istream& in);

}  // namespace trigsynth

#include "trigsynth/serialization.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "trigsynth/circle.hpp"
#include "trigsynth/grid.hpp"

namespace trigsynth {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string certificate_to_json(const Certificate& cert, int indent) {
  nlohmann::ordered_json j;
  j["pass"] = cert.pass();
  j["n"] = cert.n;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : cert.parameters) params[key] = value;
  j["parameters"] = std::move(params);
  nlohmann::ordered_json clauses = nlohmann::ordered_json::array();
  for (const CertificateClause& c : cert.clauses) {
    nlohmann::ordered_json jc;
    jc["clause"] = c.clause;
    jc["bound"] = c.bound;
    jc["achieved"] = c.achieved;
    jc["n"] = c.n;
    jc["verified"] = c.verified;
    clauses.push_back(std::move(jc));
  }
  j["clauses"] = std::move(clauses);
  return j.dump(indent) + "\n";
}

void write_coeff_csv(std::ostream& out, const TrigPoly& p) {
  out << "k,re,im\n";
  for (int k = -p.degree(); k <= p.degree(); ++k) {
    const cplx c = p.coeff(k);
    out << k << ',' << format_double(c.real()) << ','
        << format_double(c.imag()) << '\n';
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_field(std::string_view s, const char* what) {
  s = trim(s);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument(std::string("bad ") + what + " field: " +
                                std::string(s));
  return v;
}

}  // namespace

TrigPoly read_coeff_csv(std::istream& in) {
  std::string line;
  std::vector<std::pair<int, cplx>> entries;
  int max_abs_k = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    if (!saw_header && row.rfind("k,", 0) == 0) {
      saw_header = true;
      continue;
    }
    const auto c1 = row.find(',');
    const auto c2 = row.find(',', c1 == std::string_view::npos ? 0 : c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos)
      throw std::invalid_argument("coefficient row needs k,re,im: " + line);
    const int k = static_cast<int>(parse_field(row.substr(0, c1), "index"));
    const double re = parse_field(row.substr(c1 + 1, c2 - c1 - 1), "real");
    const double im = parse_field(row.substr(c2 + 1), "imaginary");
    entries.emplace_back(k, cplx(re, im));
    max_abs_k = std::max(max_abs_k, std::abs(k));
  }
  std::vector<cplx> coeffs(2 * static_cast<std::size_t>(max_abs_k) + 1, cplx(0.0));
  for (const auto& [k, c] : entries)
    coeffs[static_cast<std::size_t>(k + max_abs_k)] += c;
  return TrigPoly::from_coeffs(max_abs_k, std::move(coeffs));
}

void write_curve_csv(std::ostream& out, const TrigPoly& p, std::size_t grid) {
  if (grid == 0) throw std::invalid_argument("curve grid must be nonempty");
  out << "t,re,im\n";
  const std::size_t min_exact = 2 * static_cast<std::size_t>(p.degree()) + 1;
  if (fft::is_power_of_two(grid)) {
    // Sample on a power-of-two refinement and decimate, so large-degree
    // curves avoid the quadratic pointwise path.
    std::size_t n = grid;
    while (n < min_exact) n *= 2;
    const std::vector<cplx> samples = sample_values(p, n);
    const std::size_t stride = n / grid;
    for (std::size_t j = 0; j < grid; ++j) {
      const cplx v = samples[j * stride];
      out << format_double(two_pi * j / grid) << ',' << format_double(v.real())
          << ',' << format_double(v.imag()) << '\n';
    }
    return;
  }
  for (std::size_t j = 0; j < grid; ++j) {
    const cplx v = p.eval(two_pi * j / grid);
    out << format_double(two_pi * j / grid) << ',' << format_double(v.real())
        << ',' << format_double(v.imag()) << '\n';
  }
}

std::map<std::string, std::string> parse_config(std::istream& in) {
  std::map<std::string, std::string> config;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view row = line;
    if (const auto hash = row.find('#'); hash != std::string_view::npos)
      row = row.substr(0, hash);
    row = trim(row);
    if (row.empty()) continue;
    const auto eq = row.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  " is not key=value: " + line);
    const std::string key(trim(row.substr(0, eq)));
    if (key.empty())
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  " has an empty key");
    config[key] = std::string(trim(row.substr(eq + 1)));
  }
  return config;
}

}  // namespace trigsynth

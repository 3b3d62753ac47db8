#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trigsynth {

/// Outcome of one gate criterion.  `transcript` is the byte-comparable
/// record of every artifact the criterion produced (certificates, report
/// summaries, formatted measurements); rerunning with the same seed must
/// reproduce it exactly.  `seconds` is wall time and never enters any
/// comparison or output file.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
  double seconds = 0.0;
  std::string transcript;
};

/// Runs the nine gate criteria in order.  Every random draw derives from
/// the seed; no other entropy enters.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// One pass/fail line per criterion, supplementary notes indented below.
/// Timing is appended only when requested, so files written from the
/// untimed form are byte-identical across repeated runs.
std::string render_acceptance(const std::vector<CriterionResult>& results,
                              bool with_timing);

bool acceptance_pass(const std::vector<CriterionResult>& results);

}  // namespace trigsynth

#pragma once

#include <map>
#include <string>
#include <vector>

namespace trigsynth {

// One strict-inequality check: achieved < bound, recomputed from the final
// result by an evaluation path independent of the construction.
struct CertificateClause {
  std::string clause;
  double bound = 0.0;
  double achieved = 0.0;
  int n = 0;
  bool verified = false;
};

// Machine-checkable record of a synthesis result.
struct Certificate {
  std::vector<CertificateClause> clauses;
  int n = 0;
  std::map<std::string, std::string> parameters;

  bool pass() const;

  void add_clause(std::string clause, double bound, double achieved, int n);
};

}  // namespace trigsynth

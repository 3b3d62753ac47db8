#include "trigsynth/certificate.hpp"

namespace trigsynth {

bool Certificate::pass() const {
  if (clauses.empty()) return false;
  for (const CertificateClause& c : clauses)
    if (!c.verified) return false;
  return true;
}

void Certificate::add_clause(std::string clause, double bound, double achieved,
                             int clause_n) {
  clauses.push_back(CertificateClause{std::move(clause), bound, achieved,
                                      clause_n, achieved < bound});
}

}  // namespace trigsynth

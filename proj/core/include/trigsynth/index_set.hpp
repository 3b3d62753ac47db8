#pragma once

#include <optional>
#include <vector>

namespace trigsynth {

// Bounded, filterable set of candidate partial-sum indices.
//
// The admissible set is { n in [n_min, n_cap] : filter(n) } where the filter
// is one of: every integer, an arithmetic progression a + b*j, or an explicit
// finite list.  Searches walk the admissible set in increasing order.
class IndexSetSpec {
 public:
  static IndexSetSpec all(int n_min, int n_cap);
  static IndexSetSpec progression(int n_min, int n_cap, int a, int b);
  static IndexSetSpec explicit_list(std::vector<int> values);

  int n_min() const { return n_min_; }
  int n_cap() const { return n_cap_; }

  bool admissible(int n) const;

  // Smallest admissible index >= from, if any.
  std::optional<int> first_admissible(int from) const;

  // Smallest admissible index strictly greater than n, if any.
  std::optional<int> next_admissible(int n) const;

  // Largest admissible index, if any.
  std::optional<int> last_admissible() const;

  // Copy with the lower end raised to max(n_min, from); the admissible set
  // may become empty, which callers surface as SearchExhausted.
  IndexSetSpec restricted_to_at_least(int from) const;

  bool empty() const { return !first_admissible(n_min_).has_value(); }

 private:
  enum class Filter { kAll, kProgression, kExplicit };

  IndexSetSpec() = default;

  int n_min_ = 0;
  int n_cap_ = 0;
  Filter filter_ = Filter::kAll;
  int prog_a_ = 0;
  int prog_b_ = 1;
  std::vector<int> values_;
};

}  // namespace trigsynth

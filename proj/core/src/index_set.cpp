#include "trigsynth/index_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace trigsynth {

IndexSetSpec IndexSetSpec::all(int n_min, int n_cap) {
  if (n_min < 0) throw std::invalid_argument("index sets hold indices >= 0");
  if (n_min > n_cap) throw std::invalid_argument("index set lower end exceeds cap");
  IndexSetSpec s;
  s.n_min_ = n_min;
  s.n_cap_ = n_cap;
  s.filter_ = Filter::kAll;
  return s;
}

IndexSetSpec IndexSetSpec::progression(int n_min, int n_cap, int a, int b) {
  if (n_min < 0) throw std::invalid_argument("index sets hold indices >= 0");
  if (n_min > n_cap) throw std::invalid_argument("index set lower end exceeds cap");
  if (b <= 0) throw std::invalid_argument("progression step must be positive");
  IndexSetSpec s;
  s.n_min_ = n_min;
  s.n_cap_ = n_cap;
  s.filter_ = Filter::kProgression;
  s.prog_a_ = a;
  s.prog_b_ = b;
  return s;
}

IndexSetSpec IndexSetSpec::explicit_list(std::vector<int> values) {
  if (values.empty()) throw std::invalid_argument("explicit index list is empty");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.front() < 0) throw std::invalid_argument("index sets hold indices >= 0");
  IndexSetSpec s;
  s.n_min_ = values.front();
  s.n_cap_ = values.back();
  s.filter_ = Filter::kExplicit;
  s.values_ = std::move(values);
  return s;
}

bool IndexSetSpec::admissible(int n) const {
  if (n < n_min_ || n > n_cap_) return false;
  switch (filter_) {
    case Filter::kAll:
      return true;
    case Filter::kProgression: {
      const long long d = static_cast<long long>(n) - prog_a_;
      return d >= 0 && d % prog_b_ == 0;
    }
    case Filter::kExplicit:
      return std::binary_search(values_.begin(), values_.end(), n);
  }
  return false;
}

std::optional<int> IndexSetSpec::first_admissible(int from) const {
  int n = std::max(from, n_min_);
  if (n > n_cap_) return std::nullopt;
  switch (filter_) {
    case Filter::kAll:
      return n;
    case Filter::kProgression: {
      if (n <= prog_a_) n = prog_a_;
      else {
        const long long over = static_cast<long long>(n) - prog_a_;
        const long long steps = (over + prog_b_ - 1) / prog_b_;
        const long long cand = prog_a_ + steps * prog_b_;
        if (cand > n_cap_) return std::nullopt;
        n = static_cast<int>(cand);
      }
      return n >= n_min_ && n <= n_cap_ ? std::optional<int>(n) : std::nullopt;
    }
    case Filter::kExplicit: {
      auto it = std::lower_bound(values_.begin(), values_.end(), n);
      if (it == values_.end() || *it > n_cap_) return std::nullopt;
      return *it;
    }
  }
  return std::nullopt;
}

std::optional<int> IndexSetSpec::next_admissible(int n) const {
  if (n >= n_cap_) return std::nullopt;
  return first_admissible(n + 1);
}

std::optional<int> IndexSetSpec::last_admissible() const {
  switch (filter_) {
    case Filter::kAll:
      return n_cap_;
    case Filter::kProgression: {
      if (n_cap_ < prog_a_) return std::nullopt;
      const long long steps = (static_cast<long long>(n_cap_) - prog_a_) / prog_b_;
      const int cand = static_cast<int>(prog_a_ + steps * prog_b_);
      return cand >= n_min_ ? std::optional<int>(cand) : std::nullopt;
    }
    case Filter::kExplicit: {
      auto it = std::upper_bound(values_.begin(), values_.end(), n_cap_);
      if (it == values_.begin()) return std::nullopt;
      const int cand = *std::prev(it);
      return cand >= n_min_ ? std::optional<int>(cand) : std::nullopt;
    }
  }
  return std::nullopt;
}

IndexSetSpec IndexSetSpec::restricted_to_at_least(int from) const {
  IndexSetSpec s = *this;
  s.n_min_ = std::max(n_min_, from);
  return s;
}

}  // namespace trigsynth

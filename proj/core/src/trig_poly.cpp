#include "trigsynth/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trigsynth/grid.hpp"

namespace trigsynth {

namespace {

// Walks e^{ik t} for k = start, start+1, ... with a periodic resync so the
// phase error stays near machine precision for arbitrarily long runs.
class PhaseWalker {
public:
  PhaseWalker(double t, long long start) : t_(t), k_(start), step_(std::polar(1.0, t)) {
    resync();
  }
  cplx value() const { return w_; }
  void advance() {
    ++k_;
    if (++since_sync_ == kSyncEvery) {
      resync();
    } else {
      w_ *= step_;
    }
  }

private:
  static constexpr int kSyncEvery = 2048;
  void resync() {
    w_ = std::polar(1.0, t_ * static_cast<double>(k_));
    since_sync_ = 0;
  }
  double t_;
  long long k_;
  cplx step_;
  cplx w_;
  int since_sync_ = 0;
};

}  // namespace

TrigPoly TrigPoly::constant(cplx c) {
  return from_coeffs(0, {c});
}

TrigPoly TrigPoly::harmonic(int k, cplx c) {
  const int d = std::abs(k);
  std::vector<cplx> coeffs(2 * static_cast<std::size_t>(d) + 1, cplx(0.0));
  coeffs[static_cast<std::size_t>(k + d)] = c;
  return from_coeffs(d, std::move(coeffs));
}

TrigPoly TrigPoly::from_coeffs(int degree, std::vector<cplx> coeffs) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  if (coeffs.size() != 2 * static_cast<std::size_t>(degree) + 1)
    throw std::invalid_argument("coefficient vector must have size 2*degree + 1");
  TrigPoly p;
  p.degree_ = degree;
  p.coeffs_ = std::move(coeffs);
  return p;
}

cplx TrigPoly::partial_sum_at(int n, double t) const {
  if (n < 0) throw std::invalid_argument("partial sum order must be >= 0");
  const int m = std::min(n, degree_);
  PhaseWalker w(t, -m);
  cplx acc(0.0);
  for (int k = -m; k <= m; ++k) {
    acc += coeff(k) * w.value();
    w.advance();
  }
  return acc;
}

TrigPoly TrigPoly::partial_sum(int n) const {
  if (n < 0) throw std::invalid_argument("partial sum order must be >= 0");
  if (n >= degree_) return *this;
  std::vector<cplx> coeffs(coeffs_.begin() + (degree_ - n), coeffs_.end() - (degree_ - n));
  return from_coeffs(n, std::move(coeffs));
}

TrigPoly TrigPoly::modulate(int shift) const {
  if (shift == 0) return *this;
  const int d = degree_ + std::abs(shift);
  std::vector<cplx> coeffs(2 * static_cast<std::size_t>(d) + 1, cplx(0.0));
  for (int k = -degree_; k <= degree_; ++k)
    coeffs[static_cast<std::size_t>(k + shift + d)] = coeff(k);
  return from_coeffs(d, std::move(coeffs));
}

TrigPoly TrigPoly::translate(double a) const {
  std::vector<cplx> coeffs(coeffs_.size());
  PhaseWalker w(-a, -degree_);
  for (int k = -degree_; k <= degree_; ++k) {
    coeffs[static_cast<std::size_t>(k + degree_)] = coeff(k) * w.value();
    w.advance();
  }
  return from_coeffs(degree_, std::move(coeffs));
}

TrigPoly TrigPoly::conjugate() const {
  std::vector<cplx> coeffs(coeffs_.size());
  for (int k = -degree_; k <= degree_; ++k)
    coeffs[static_cast<std::size_t>(k + degree_)] = std::conj(coeff(-k));
  return from_coeffs(degree_, std::move(coeffs));
}

TrigPoly TrigPoly::trimmed(double tol) const {
  int d = degree_;
  while (d > 0 && std::abs(coeff(d)) <= tol && std::abs(coeff(-d)) <= tol) --d;
  if (d == degree_) return *this;
  std::vector<cplx> coeffs(coeffs_.begin() + (degree_ - d), coeffs_.end() - (degree_ - d));
  return from_coeffs(d, std::move(coeffs));
}

bool TrigPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](cplx c) { return c == cplx(0.0); });
}

double TrigPoly::realness_defect() const {
  double worst = 0.0;
  for (int k = 0; k <= degree_; ++k)
    worst = std::max(worst, std::abs(coeff(-k) - std::conj(coeff(k))));
  return worst;
}

double TrigPoly::coeff_l1() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::abs(c);
  return s;
}

double TrigPoly::coeff_l2() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
  const int d = std::max(a.degree_, b.degree_);
  std::vector<cplx> coeffs(2 * static_cast<std::size_t>(d) + 1);
  for (int k = -d; k <= d; ++k)
    coeffs[static_cast<std::size_t>(k + d)] = a.coeff(k) + b.coeff(k);
  return TrigPoly::from_coeffs(d, std::move(coeffs));
}

TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) {
  const int d = std::max(a.degree_, b.degree_);
  std::vector<cplx> coeffs(2 * static_cast<std::size_t>(d) + 1);
  for (int k = -d; k <= d; ++k)
    coeffs[static_cast<std::size_t>(k + d)] = a.coeff(k) - b.coeff(k);
  return TrigPoly::from_coeffs(d, std::move(coeffs));
}

TrigPoly operator*(cplx s, const TrigPoly& p) {
  std::vector<cplx> coeffs(p.coeffs_);
  for (auto& c : coeffs) c *= s;
  return TrigPoly::from_coeffs(p.degree_, std::move(coeffs));
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  const int d = a.degree_ + b.degree_;
  const std::size_t out_len = 2 * static_cast<std::size_t>(d) + 1;
  const std::size_t la = a.coeffs_.size();
  const std::size_t lb = b.coeffs_.size();
  std::vector<cplx> coeffs(out_len, cplx(0.0));
  if (la * lb <= 1u << 16) {
    for (std::size_t i = 0; i < la; ++i) {
      if (a.coeffs_[i] == cplx(0.0)) continue;
      for (std::size_t j = 0; j < lb; ++j)
        coeffs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  } else {
    const std::size_t n = fft::next_power_of_two(out_len);
    std::vector<cplx> fa(n, cplx(0.0));
    std::vector<cplx> fb(n, cplx(0.0));
    std::copy(a.coeffs_.begin(), a.coeffs_.end(), fa.begin());
    std::copy(b.coeffs_.begin(), b.coeffs_.end(), fb.begin());
    fft::forward_inplace(fa);
    fft::forward_inplace(fb);
    for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
    fft::inverse_inplace(fa);
    std::copy(fa.begin(), fa.begin() + static_cast<std::ptrdiff_t>(out_len), coeffs.begin());
  }
  return TrigPoly::from_coeffs(d, std::move(coeffs));
}

SpectralBand spectral_band(const TrigPoly& p, double tol) {
  int lo = 0;
  int hi = 0;
  bool found = false;
  for (int k = -p.degree(); k <= p.degree(); ++k) {
    if (std::abs(p.coeff(k)) > tol) {
      if (!found) lo = k;
      hi = k;
      found = true;
    }
  }
  return SpectralBand{lo, hi};
}

std::vector<cplx> sample_values(const TrigPoly& p, std::size_t n) {
  if (!fft::is_power_of_two(n)) throw std::invalid_argument("sample count must be a power of two");
  if (n < 2 * static_cast<std::size_t>(p.degree()) + 1)
    throw std::invalid_argument("sample count must be at least 2*degree + 1");
  std::vector<cplx> bins(n, cplx(0.0));
  for (int k = -p.degree(); k <= p.degree(); ++k) {
    const std::size_t bin = static_cast<std::size_t>((k + static_cast<int>(n)) % static_cast<int>(n));
    bins[bin] += p.coeff(k);
  }
  fft::inverse_inplace(bins);
  const double scale = static_cast<double>(n);
  for (auto& v : bins) v *= scale;
  return bins;
}

}  // namespace trigsynth

#include "ansl/profile.hpp"

#include "ansl/common.hpp"
#include "ansl/fft.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace ansl {

Profile Profile::sample(double period, std::size_t n,
                        const std::function<double(double)>& f) {
  Profile p(n, period);
  for (std::size_t i = 0; i < n; ++i) p.v_[i] = f(p.s_at(i));
  return p;
}

Profile Profile::derivative(int order, bool dealias) const {
  const std::size_t n = v_.size();
  Profile out(n, period_);
  if (order == 0 && !dealias) {
    out.v_ = v_;
    return out;
  }
  std::vector<std::complex<double>> c;
  fft::forward(v_, c);
  const double omega = 2.0 * kPi / period_;
  const std::size_t kmax = n / 2;
  const std::size_t kcut = dealias ? n / 3 : kmax;
  for (std::size_t k = 0; k <= kmax; ++k) {
    if (k > kcut) {
      c[k] = 0.0;
      continue;
    }
    std::complex<double> mult{1.0, 0.0};
    const std::complex<double> ik{0.0, omega * static_cast<double>(k)};
    for (int j = 0; j < order; ++j) mult *= ik;
    c[k] *= mult;
  }
  // The unpaired Nyquist mode has no consistent odd derivative; drop it.
  if (n % 2 == 0 && order % 2 == 1) c[kmax] = 0.0;
  fft::inverse(c, n, out.v_);
  return out;
}

double Profile::interp(double s) const {
  const std::size_t n = v_.size();
  std::vector<std::complex<double>> c;
  fft::forward(v_, c);
  const double theta = 2.0 * kPi * s / period_;
  double acc = c[0].real();
  const std::size_t kmax = n / 2;
  for (std::size_t k = 1; k < (n + 1) / 2; ++k) {
    const double ang = theta * static_cast<double>(k);
    acc += 2.0 * (c[k].real() * std::cos(ang) - c[k].imag() * std::sin(ang));
  }
  if (n % 2 == 0)
    acc += c[kmax].real() * std::cos(theta * static_cast<double>(kmax));
  return acc / static_cast<double>(n);
}

Profile Profile::resampled(std::size_t m) const {
  const std::size_t n = v_.size();
  if (m == n) return *this;
  std::vector<std::complex<double>> c;
  fft::forward(v_, c);
  std::vector<std::complex<double>> cm(m / 2 + 1, 0.0);
  const std::size_t keep = std::min(n / 2, m / 2);
  for (std::size_t k = 0; k <= keep; ++k) cm[k] = c[k];
  if (m % 2 == 0 && keep == m / 2 && m < n) cm[keep] = c[keep].real(); // fold
  Profile out(m, period_);
  fft::inverse(cm, m, out.v_);
  const double scale = static_cast<double>(m) / static_cast<double>(n);
  for (double& x : out.v_) x *= scale;
  return out;
}

double Profile::max_abs() const { return ansl::max_abs(v_); }

double Profile::min_value() const {
  double m = v_.empty() ? 0.0 : v_[0];
  for (double x : v_) m = std::min(m, x);
  return m;
}

double Profile::max_value() const {
  double m = v_.empty() ? 0.0 : v_[0];
  for (double x : v_) m = std::max(m, x);
  return m;
}

double Profile::integral() const {
  const double h = period_ / static_cast<double>(v_.size());
  return pairwise_sum(v_) * h;
}

Profile& Profile::operator+=(const Profile& o) {
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}
Profile& Profile::operator-=(const Profile& o) {
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}
Profile& Profile::operator*=(const Profile& o) {
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] *= o.v_[i];
  return *this;
}
Profile& Profile::operator/=(const Profile& o) {
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] /= o.v_[i];
  return *this;
}
Profile& Profile::operator*=(double c) {
  for (double& x : v_) x *= c;
  return *this;
}

} // namespace ansl

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace ansl {

// Periodic profile sampled uniformly on [0, period): value i lives at
// s_i = i * period / size(). Spectral operations treat the data as a
// trigonometric polynomial.
class Profile {
public:
  Profile() = default;
  Profile(std::size_t n, double period, double fill = 0.0)
      : v_(n, fill), period_(period) {}

  static Profile sample(double period, std::size_t n,
                        const std::function<double(double)>& f);

  std::size_t size() const { return v_.size(); }
  double period() const { return period_; }
  double s_at(std::size_t i) const {
    return period_ * static_cast<double>(i) / static_cast<double>(v_.size());
  }

  double& operator[](std::size_t i) { return v_[i]; }
  double operator[](std::size_t i) const { return v_[i]; }
  std::span<const double> values() const { return v_; }
  std::span<double> values() { return v_; }

  // Spectral s-derivative. With dealias, modes above 2/3 of Nyquist are
  // dropped (used by the quadratic-nonlinearity marching kernels).
  Profile derivative(int order = 1, bool dealias = false) const;

  // Trigonometric interpolation at arbitrary s.
  double interp(double s) const;

  // Spectral resampling to m points.
  Profile resampled(std::size_t m) const;

  double max_abs() const;
  double min_value() const;
  double max_value() const;
  // Periodic trapezoid rule == spectrally accurate mean * period.
  double integral() const;

  Profile& operator+=(const Profile& o);
  Profile& operator-=(const Profile& o);
  Profile& operator*=(const Profile& o);
  Profile& operator/=(const Profile& o);
  Profile& operator*=(double c);

  friend Profile operator+(Profile a, const Profile& b) { return a += b; }
  friend Profile operator-(Profile a, const Profile& b) { return a -= b; }
  friend Profile operator*(Profile a, const Profile& b) { return a *= b; }
  friend Profile operator/(Profile a, const Profile& b) { return a /= b; }
  friend Profile operator*(Profile a, double c) { return a *= c; }
  friend Profile operator*(double c, Profile a) { return a *= c; }

private:
  std::vector<double> v_;
  double period_ = 0.0;
};

} // namespace ansl

#pragma once

#include "ansl/profile.hpp"

#include <vector>

namespace ansl {

// Truncated Taylor expansion in the collar depth t about t = 0, whose
// coefficients are periodic s-profiles: f(s,t) ~ sum_m c_m(s) t^m.
// Binary operations truncate to the shorter operand.
class TJet {
public:
  TJet() = default;
  explicit TJet(std::vector<Profile> coeffs) : c_(std::move(coeffs)) {}
  static TJet zeros(int order, std::size_t ns, double period);
  static TJet constant(Profile p0, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Profile& coeff(int m) const { return c_[m]; }
  Profile& coeff(int m) { return c_[m]; }
  // m-th t-derivative profile at t = 0 (Taylor coefficient times m!).
  Profile deriv(int m) const;

  TJet truncated(int order) const;
  TJet dt() const;                  // d/dt, order drops by one
  TJet ds() const;                  // spectral s-derivative per coefficient
  Profile eval(double t) const;     // Horner
  Profile eval_deriv(double t, int m) const;

  friend TJet operator+(const TJet& a, const TJet& b);
  friend TJet operator-(const TJet& a, const TJet& b);
  friend TJet operator*(const TJet& a, const TJet& b);
  friend TJet operator/(const TJet& a, const TJet& b);
  TJet& operator+=(const TJet& o) { return *this = *this + o; }
  TJet& operator-=(const TJet& o) { return *this = *this - o; }

  friend TJet sqrt(const TJet& a);

private:
  std::vector<Profile> c_;
};

} // namespace ansl

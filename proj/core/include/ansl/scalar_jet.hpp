#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace ansl {

// Truncated scalar Taylor series; coefficient recurrences only, no
// expression trees. Used by the closed-form fixtures to expose exact
// derivatives of composite formulas.
class ScalarJet {
public:
  ScalarJet() = default;
  ScalarJet(int order, double c0 = 0.0) : c_(order + 1, 0.0) { c_[0] = c0; }
  static ScalarJet variable(double x0, int order) {
    ScalarJet j(order, x0);
    if (order >= 1) j.c_[1] = 1.0;
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double coeff(int m) const { return c_[m]; }
  double& coeff(int m) { return c_[m]; }
  double deriv(int m) const {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return c_[m] * f;
  }
  double value() const { return c_[0]; }

  friend ScalarJet operator+(const ScalarJet& a, const ScalarJet& b) {
    ScalarJet r(std::min(a.order(), b.order()));
    for (int m = 0; m <= r.order(); ++m) r.c_[m] = a.c_[m] + b.c_[m];
    return r;
  }
  friend ScalarJet operator-(const ScalarJet& a, const ScalarJet& b) {
    ScalarJet r(std::min(a.order(), b.order()));
    for (int m = 0; m <= r.order(); ++m) r.c_[m] = a.c_[m] - b.c_[m];
    return r;
  }
  friend ScalarJet operator*(const ScalarJet& a, const ScalarJet& b) {
    ScalarJet r(std::min(a.order(), b.order()));
    for (int m = 0; m <= r.order(); ++m)
      for (int i = 0; i <= m; ++i) r.c_[m] += a.c_[i] * b.c_[m - i];
    return r;
  }
  friend ScalarJet operator/(const ScalarJet& a, const ScalarJet& b) {
    ScalarJet r(std::min(a.order(), b.order()));
    for (int m = 0; m <= r.order(); ++m) {
      double num = a.c_[m];
      for (int i = 0; i < m; ++i) num -= r.c_[i] * b.c_[m - i];
      r.c_[m] = num / b.c_[0];
    }
    return r;
  }
  friend ScalarJet operator+(ScalarJet a, double s) {
    a.c_[0] += s;
    return a;
  }
  friend ScalarJet operator+(double s, ScalarJet a) { return a + s; }
  friend ScalarJet operator-(ScalarJet a, double s) { return a + (-s); }
  friend ScalarJet operator*(ScalarJet a, double s) {
    for (auto& c : a.c_) c *= s;
    return a;
  }
  friend ScalarJet operator*(double s, ScalarJet a) { return a * s; }

  // Shift coefficients: multiply by t^k (k > 0) or divide (k < 0; requires
  // the low coefficients to vanish).
  ScalarJet shifted(int k) const {
    ScalarJet r(order());
    for (int m = 0; m <= order(); ++m) {
      const int src = m - k;
      r.c_[m] = (src >= 0 && src <= order()) ? c_[src] : 0.0;
    }
    return r;
  }

  ScalarJet truncated(int p) const {
    ScalarJet r(p);
    for (int m = 0; m <= p && m <= order(); ++m) r.c_[m] = c_[m];
    return r;
  }

  ScalarJet derivative() const {
    ScalarJet r(order() - 1);
    for (int m = 0; m < order(); ++m) r.c_[m] = c_[m + 1] * (m + 1);
    return r;
  }

  friend ScalarJet sqrt(const ScalarJet& a) {
    ScalarJet r(a.order());
    r.c_[0] = std::sqrt(a.c_[0]);
    const double inv2 = 1.0 / (2.0 * r.c_[0]);
    for (int m = 1; m <= a.order(); ++m) {
      double num = a.c_[m];
      for (int i = 1; i < m; ++i) num -= r.c_[i] * r.c_[m - i];
      r.c_[m] = num * inv2;
    }
    return r;
  }

  // sin/cos of a jet via the coupled ODE recurrences.
  friend void sincos(const ScalarJet& u, ScalarJet& s, ScalarJet& c) {
    const int p = u.order();
    s = ScalarJet(p, std::sin(u.c_[0]));
    c = ScalarJet(p, std::cos(u.c_[0]));
    for (int m = 1; m <= p; ++m) {
      double as = 0.0, ac = 0.0;
      for (int k = 1; k <= m; ++k) {
        as += k * u.c_[k] * c.c_[m - k];
        ac += k * u.c_[k] * s.c_[m - k];
      }
      s.c_[m] = as / m;
      c.c_[m] = -ac / m;
    }
  }
  friend ScalarJet sin(const ScalarJet& u) {
    ScalarJet s, c;
    sincos(u, s, c);
    return s;
  }
  friend ScalarJet cos(const ScalarJet& u) {
    ScalarJet s, c;
    sincos(u, s, c);
    return c;
  }
  friend ScalarJet exp(const ScalarJet& u) {
    ScalarJet r(u.order(), std::exp(u.c_[0]));
    for (int m = 1; m <= u.order(); ++m) {
      double acc = 0.0;
      for (int k = 1; k <= m; ++k) acc += k * u.c_[k] * r.c_[m - k];
      r.c_[m] = acc / m;
    }
    return r;
  }

private:
  std::vector<double> c_;
};

} // namespace ansl

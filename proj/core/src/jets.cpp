#include "ansl/jets.hpp"

#include <algorithm>
#include <cmath>

namespace ansl {

TJet TJet::zeros(int order, std::size_t ns, double period) {
  std::vector<Profile> c(order + 1, Profile(ns, period));
  return TJet(std::move(c));
}

TJet TJet::constant(Profile p0, int order) {
  TJet j = zeros(order, p0.size(), p0.period());
  j.c_[0] = std::move(p0);
  return j;
}

Profile TJet::deriv(int m) const {
  double fact = 1.0;
  for (int i = 2; i <= m; ++i) fact *= i;
  return c_[m] * fact;
}

TJet TJet::truncated(int order) const {
  std::vector<Profile> c(c_.begin(), c_.begin() + std::min<std::size_t>(order + 1, c_.size()));
  while (static_cast<int>(c.size()) < order + 1)
    c.emplace_back(c_[0].size(), c_[0].period());
  return TJet(std::move(c));
}

TJet TJet::dt() const {
  std::vector<Profile> c;
  c.reserve(c_.size() - 1);
  for (std::size_t m = 1; m < c_.size(); ++m)
    c.push_back(c_[m] * static_cast<double>(m));
  return TJet(std::move(c));
}

TJet TJet::ds() const {
  std::vector<Profile> c;
  c.reserve(c_.size());
  for (const auto& p : c_) c.push_back(p.derivative(1));
  return TJet(std::move(c));
}

Profile TJet::eval(double t) const {
  Profile acc = c_.back();
  for (int m = static_cast<int>(c_.size()) - 2; m >= 0; --m)
    acc = acc * t + c_[m];
  return acc;
}

Profile TJet::eval_deriv(double t, int m) const {
  Profile acc(c_[0].size(), c_[0].period());
  for (int k = m; k < static_cast<int>(c_.size()); ++k) {
    double fact = 1.0;
    for (int i = k - m + 1; i <= k; ++i) fact *= i;
    acc += c_[k] * (fact * std::pow(t, k - m));
  }
  return acc;
}

TJet operator+(const TJet& a, const TJet& b) {
  const int p = std::min(a.order(), b.order());
  std::vector<Profile> c;
  c.reserve(p + 1);
  for (int m = 0; m <= p; ++m) c.push_back(a.c_[m] + b.c_[m]);
  return TJet(std::move(c));
}

TJet operator-(const TJet& a, const TJet& b) {
  const int p = std::min(a.order(), b.order());
  std::vector<Profile> c;
  c.reserve(p + 1);
  for (int m = 0; m <= p; ++m) c.push_back(a.c_[m] - b.c_[m]);
  return TJet(std::move(c));
}

TJet operator*(const TJet& a, const TJet& b) {
  const int p = std::min(a.order(), b.order());
  TJet out = TJet::zeros(p, a.c_[0].size(), a.c_[0].period());
  for (int m = 0; m <= p; ++m)
    for (int i = 0; i <= m; ++i) out.c_[m] += a.c_[i] * b.c_[m - i];
  return out;
}

TJet operator/(const TJet& a, const TJet& b) {
  const int p = std::min(a.order(), b.order());
  TJet h = TJet::zeros(p, a.c_[0].size(), a.c_[0].period());
  for (int m = 0; m <= p; ++m) {
    Profile num = a.c_[m];
    for (int i = 0; i < m; ++i) num -= h.c_[i] * b.c_[m - i];
    h.c_[m] = num / b.c_[0];
  }
  return h;
}

TJet sqrt(const TJet& a) {
  const int p = a.order();
  TJet h = TJet::zeros(p, a.c_[0].size(), a.c_[0].period());
  Profile h0 = a.c_[0];
  for (std::size_t i = 0; i < h0.size(); ++i) h0[i] = std::sqrt(h0[i]);
  h.c_[0] = h0;
  const Profile two_h0 = h0 * 2.0;
  for (int m = 1; m <= p; ++m) {
    Profile num = a.c_[m];
    for (int i = 1; i < m; ++i) num -= h.c_[i] * h.c_[m - i];
    h.c_[m] = num / two_h0;
  }
  return h;
}

} // namespace ansl

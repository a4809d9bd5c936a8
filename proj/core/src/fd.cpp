#include "ansl/fd.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace ansl::fd {

std::vector<double> weights(double z, std::span<const double> nodes, int m) {
  const int n = static_cast<int>(nodes.size()) - 1;
  assert(n >= m);
  // Fornberg's recursion, SIAM Rev. 40 (1998) form.
  std::vector<double> C(static_cast<std::size_t>(n + 1) * (m + 1), 0.0);
  auto c = [&](int i, int k) -> double& {
    return C[static_cast<std::size_t>(i) * (m + 1) + k];
  };
  double c1 = 1.0;
  double c4 = nodes[0] - z;
  c(0, 0) = 1.0;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c(i, k) = c1 * (k * c(i - 1, k - 1) - c5 * c(i - 1, k)) / c2;
        c(i, 0) = -c1 * c5 * c(i - 1, 0) / c2;
      }
      for (int k = mn; k >= 1; --k)
        c(j, k) = (c4 * c(j, k) - k * c(j, k - 1)) / c3;
      c(j, 0) = c4 * c(j, 0) / c3;
    }
    c1 = c2;
  }
  std::vector<double> out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = c(i, m);
  return out;
}

DerivOp::DerivOp(std::span<const double> nodes, int order, int accuracy)
    : order_(order) {
  const int n = static_cast<int>(nodes.size());
  width_ = std::min(n, order + accuracy);
  lo_.resize(n);
  w_.resize(static_cast<std::size_t>(n) * width_);
  for (int j = 0; j < n; ++j) {
    int lo = std::clamp(j - width_ / 2, 0, n - width_);
    lo_[j] = lo;
    auto ws = weights(nodes[j], nodes.subspan(lo, width_), order);
    std::copy(ws.begin(), ws.end(), w_.begin() + static_cast<std::size_t>(j) * width_);
  }
}

void DerivOp::apply(std::span<const double> x, std::span<double> y) const {
  for (std::size_t j = 0; j < lo_.size(); ++j) y[j] = at(x, j);
}

double DerivOp::at(std::span<const double> x, std::size_t j) const {
  const double* w = w_.data() + j * width_;
  const int lo = lo_[j];
  double acc = 0.0;
  for (int k = 0; k < width_; ++k) acc += w[k] * x[lo + k];
  return acc;
}

PointStencil point_stencil(std::span<const double> nodes, double z, int m,
                           int width) {
  const int n = static_cast<int>(nodes.size());
  width = std::min(width, n);
  // nodes are sorted ascending; find the window whose center brackets z
  int j = static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), z) -
                           nodes.begin());
  int lo = std::clamp(j - width / 2, 0, n - width);
  PointStencil st;
  st.lo = lo;
  st.w = weights(z, nodes.subspan(lo, width), m);
  return st;
}

} // namespace ansl::fd

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ansl::fd {

// Finite-difference weights (Fornberg) for the m-th derivative at point z
// from the given nodes. Works for arbitrary node spacing; nodes must be
// distinct.
std::vector<double> weights(double z, std::span<const double> nodes, int m);

// Banded derivative operator along a 1-d node set. Node j uses a window of
// `width` nodes, centered where possible and one-sided at the ends.
class DerivOp {
public:
  DerivOp() = default;
  DerivOp(std::span<const double> nodes, int order, int accuracy);

  int order() const { return order_; }
  // y_j = sum_k w[j][k] * x[lo_j + k]
  void apply(std::span<const double> x, std::span<double> y) const;
  double at(std::span<const double> x, std::size_t j) const;

private:
  int order_ = 0;
  int width_ = 0;
  std::vector<int> lo_;
  std::vector<double> w_; // node-major, width_ entries per node
};

// Interpolation / differentiation at an arbitrary point from the `width`
// nearest nodes.
struct PointStencil {
  int lo = 0;
  std::vector<double> w;
};
PointStencil point_stencil(std::span<const double> nodes, double z, int m,
                           int width);

} // namespace ansl::fd

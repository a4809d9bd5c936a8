#pragma once

#include "ansl/chart.hpp"
#include "ansl/jets.hpp"

namespace ansl {

// Boundary Taylor data of the second fundamental form on t = 0.
// M and N are stored to `order`, L to `order`+1. All coefficient profiles
// are periodic in s.
struct BoundaryJet {
  int order = 0;
  TJet L, M, N;

  std::size_t ns() const { return N.coeff(0).size(); }
  double period() const { return N.coeff(0).period(); }
};

// Intrinsic boundary traces: L = M = 0, N = sqrt(K_t/B_t),
// dL/dt = sqrt(K_t B_t) on t = 0. Throws DegenerateBoundaryData when
// K_t(s,0) or B_t(s,0) fails to be positive.
BoundaryJet boundary_values(const GeodesicChart& chart);

// Extends the boundary data to t-derivatives of order k: each step solves
// the compatibility system obtained by differentiating the Codazzi and
// Gauss equations through truncated jet arithmetic and inverting the
// resulting 2x2 system pointwise in s.
BoundaryJet jet_recursion(const GeodesicChart& chart, int order);

// Taylor jet of the mean curvature H = (L/B^2 + N)/2 at t = 0, to the
// jet's stored order.
TJet mean_curvature_jet(const BoundaryJet& jet, const GeodesicChart& chart);

} // namespace ansl

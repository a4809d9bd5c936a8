#pragma once

#include "ansl/chart.hpp"
#include "ansl/grid.hpp"
#include "ansl/jet_recursion.hpp"

namespace ansl {

// Second fundamental form sampled over the collar, t-major grids sharing
// one t-node vector. H = (L/B^2 + N)/2 is derived.
struct FundamentalForm {
  Grid2D L, M, N, H;

  // March diagnostics (zero for sampled closed forms).
  double gc3_conservation_max = 0.0; // |N L_gc1 - M^2 - K B^2| / (1 + K B^2)
  double t_start = 0.0;              // first marched node
  std::size_t start_index = 0;

  std::size_t ns() const { return N.ns(); }
  std::size_t nt() const { return N.nt(); }
  double period() const { return N.period(); }
  const std::vector<double>& tnodes() const { return N.tnodes(); }
};

// Taylor start-off for the marching: (M, N) profiles at depth t0, with the
// relative size of the last retained jet term as a truncation indicator.
struct StartOff {
  double t0 = 0.0;
  Profile M, N;
  double truncation_rel = 0.0;
  BoundaryJet jet;
};

// Throws StartoffTooDeep when the last retained term of either field
// exceeds 1e-3 of that field's magnitude at t0.
StartOff taylor_startoff(const BoundaryJet& jet, double t0);

struct IntegrateOptions {
  double gc3_cap = 1e-4;      // relative conservation cap per step
  double blowup_limit = 1e6;  // |M| or |N| bound
  bool dealias = true;        // 2/3-rule on spectral s-derivatives
};

// Marches (M, N) from the start-off depth to t_end with fixed-step RK4;
// L is closed from the Gauss equation at every stage. The output t-grid is
// uniform with `steps`+1 nodes on [0, t_end]; nodes below the start depth
// are filled from the jet. Deterministic for any worker count.
FundamentalForm integrate(const GeodesicChart& chart, const StartOff& start,
                          double t_end, int steps,
                          const IntegrateOptions& opts = {});

// L = (M^2 + K B^2) / N on the grids' nodes. Throws NonpositiveN.
Grid2D close_L(const GeodesicChart& chart, const Grid2D& M, const Grid2D& N);

// Pointwise residuals of the two Codazzi equations evaluated with the
// chart's differentiation stencils.
struct CodazziResiduals {
  Grid2D gc1, gc2;
  double max_gc1 = 0.0, max_gc2 = 0.0;
};
CodazziResiduals codazzi_residuals(const FundamentalForm& form,
                                   const GeodesicChart& chart);

} // namespace ansl

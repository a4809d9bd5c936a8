#pragma once

#include "ansl/chart.hpp"
#include "ansl/codazzi.hpp"
#include "ansl/scalar_jet.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>

namespace ansl {

// Closed-form surface with exact intrinsic and extrinsic data in geodesic
// collar coordinates. Field callbacks take (s, t, dt) and return the dt-th
// t-derivative; position takes (s, t, ds, dt) with ds + dt <= 2 guaranteed.
struct SurfaceFixture {
  std::string name;
  std::map<std::string, double> params;
  double period = 0.0;
  double t_max = 0.0;
  bool is_AN = true;
  bool has_embedding = true;

  AnalyticMetric metric;
  std::function<double(double, double, int)> L, M, N, H;
  std::function<std::array<double, 3>(double, double, int, int)> position;
  std::function<std::array<double, 3>(double, double)> normal;

  GeodesicChart chart(std::size_t ns, std::size_t nt,
                      double t_max_override = 0.0) const;
};

// Outer half of the torus with tube radius a and center radius R; the
// boundary circle is planar with a horizontal tangent plane. N = 1/a,
// M = 0, L = (R + a sin(t/a)) sin(t/a) / R^2.
SurfaceFixture torus_fixture(double a, double R);

// Surface of revolution built from an analytic curvature profile K(t) with
// K(0) = 0, K'(0) > 0 and prescribed boundary geodesic curvature k_g < 0.
// The meridian data solve B'' = -K B to ~1e-12 and are treated as exact.
struct CurvatureProfile {
  // jet of K about the evaluation point t, to the requested order
  std::function<ScalarJet(double, int)> K;
  double kg = 0.0;
  double t_max = 0.0;
};
SurfaceFixture revolution_fixture(const CurvatureProfile& profile);

// Named profiles: "torus" (params a, R) and "poly" (K = c t (1 - t/2),
// params kg, t_max, optional c).
CurvatureProfile curvature_profile(const std::string& id,
                                   const std::map<std::string, double>& params);

// Samples the fixture's exact fields onto a uniform collar grid.
FundamentalForm sample_form(const SurfaceFixture& fx, std::size_t ns,
                            std::size_t nt, double t_end);

// Residuals of the position-vector identities evaluated with numerical
// Hessians (chart Christoffels) against the exact embedding data:
//   K h^{ij} rho_{ij} = -2H - 2K r.n
//   (r.n)^2 + |grad rho|^2 = |r|^2
//   det(rho_{ij} + delta_{ij}) = K (-2 rho - |grad rho|^2)
struct PositionIdentityReport {
  double max_trace = 0.0;
  double max_support = 0.0;
  double max_det = 0.0;
};
PositionIdentityReport position_identities(const SurfaceFixture& fx,
                                           std::size_t ns, std::size_t nt);

// Global mean-curvature bound: smallest C with
//   sup H <= C * ( sup_boundary sqrt(|grad K|/|k_g|)
//                  + l * sup K + l * sup sqrt|Lap K| ),
// where l is the boundary length (the scale-carrying factor).
struct MeanCurvatureBoundReport {
  bool applicable = false;
  double sup_H = 0.0;
  double boundary_term = 0.0;
  double sup_K = 0.0;
  double sup_sqrt_lap_K = 0.0;
  double length_scale = 0.0;
  double implied_C = 0.0;
};
MeanCurvatureBoundReport mean_curvature_bound_check(const SurfaceFixture& fx,
                                                    std::size_t ns,
                                                    std::size_t nt);

// Analytic chart registry for tests and CLI input. Known ids:
//   torus {a, R}, revolution_poly {kg, t_max, c}, revolution_torus {a, R},
//   perturbed_torus {a, R, eps}, flat {}, sphere_like {}.
GeodesicChart fixture_chart(const std::string& id,
                            const std::map<std::string, double>& params,
                            std::size_t ns, std::size_t nt,
                            double t_max_override = 0.0);

// Embedded fixture registry; ids: torus {a,R}, revolution_poly {kg,t_max,c},
// revolution_torus {a,R}.
SurfaceFixture fixture_by_id(const std::string& id,
                             const std::map<std::string, double>& params);

} // namespace ansl

#pragma once

#include "ansl/fd.hpp"
#include "ansl/grid.hpp"
#include "ansl/jets.hpp"
#include "ansl/profile.hpp"

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace ansl {

// Analytic metric source: callbacks for partial derivatives of B (and
// optionally the Gauss curvature K) of the collar metric B^2 ds^2 + dt^2.
// Arguments: (s, t, ds_order, dt_order).
struct AnalyticMetric {
  std::function<double(double, double, int, int)> B;
  std::function<double(double, double, int, int)> K; // empty -> derived
  int max_t_order = 8;
};

// t-grid layouts for the collar direction.
struct TGrading {
  enum class Kind { Uniform, Power } kind = Kind::Uniform;
  double gamma = 1.0; // Power: t_j = t_max * (j/(nt-1))^gamma
  std::vector<double> nodes(std::size_t nt, double t_max) const;
};

struct ChartTolerances {
  double normalization_analytic = 1e-10;
  double normalization_grid = 1e-6;
};

// Geodesic-coordinate collar: metric B^2 ds^2 + dt^2 with s periodic,
// t in [0, t_max], B(s,0) = 1. Immutable after construction; all
// evaluators are pure.
class GeodesicChart {
public:
  double period() const { return period_; }
  double t_max() const { return t_max_; }
  std::size_t ns() const { return ns_; }
  std::size_t nt() const { return nt_; }
  const std::vector<double>& tnodes() const { return tnodes_; }
  bool analytic() const { return static_cast<bool>(src_.B); }
  bool full_surface() const { return full_surface_; }
  const std::string& name() const { return name_; }

  // Highest t-derivative order the source supports.
  int max_t_derivative() const;

  const Grid2D& B_grid() const { return Bgrid_; }
  const Grid2D& K_grid() const { return Kgrid_; }

  // Profiles of ds-,dt-derivatives of B / K on the s-grid at arbitrary t.
  Profile B_row(double t, int ds = 0, int dt = 0) const;
  Profile K_row(double t, int ds = 0, int dt = 0) const;
  double B_at(double s, double t, int ds = 0, int dt = 0) const;
  double K_at(double s, double t, int ds = 0, int dt = 0) const;

  // Boundary Taylor data at t = 0 (coefficients are s-profiles).
  TJet B_jet(int order) const;
  TJet K_jet(int order) const; // = -B_tt/B via jet algebra

  // Banded t-derivative operator on the chart's t-nodes (cached).
  const fd::DerivOp& t_deriv_op(int order) const;

  // Geodesic curvature of the boundary curve: k_g(s) = -B_t(s, 0).
  Profile boundary_geodesic_curvature() const;

private:
  friend GeodesicChart build_chart(const AnalyticMetric&, double, double,
                                   std::size_t, std::size_t, const TGrading&,
                                   const ChartTolerances&);
  friend GeodesicChart build_chart(Grid2D, const TGrading&,
                                   const ChartTolerances&);
  friend Grid2D gauss_curvature(GeodesicChart&);

  double period_ = 0.0, t_max_ = 0.0;
  std::size_t ns_ = 0, nt_ = 0;
  std::vector<double> tnodes_;
  AnalyticMetric src_;
  Grid2D Bgrid_, Kgrid_;
  bool full_surface_ = false;
  std::string name_ = "chart";
  mutable std::map<int, fd::DerivOp> tops_;
  mutable std::mutex tops_mutex_;

public:
  GeodesicChart() = default;
  GeodesicChart(const GeodesicChart& o);
  GeodesicChart& operator=(const GeodesicChart& o);
  void set_name(std::string n) { name_ = std::move(n); }
  void set_full_surface(bool f) { full_surface_ = f; }
};

// Builds a chart from an analytic source. Checks positivity of B on the
// sample grid and the boundary normalization B(.,0) = 1.
GeodesicChart build_chart(const AnalyticMetric& src, double period,
                          double t_max, std::size_t ns, std::size_t nt,
                          const TGrading& grading = {},
                          const ChartTolerances& tol = {});

// Builds a chart from tabulated B values (Grid2D carries the t-nodes and
// period); derivatives are reconstructed spectrally in s and by
// finite differences in t.
GeodesicChart build_chart(Grid2D B_values, const TGrading& grading = {},
                          const ChartTolerances& tol = {});

// K = -B_tt / B on the chart grid; recomputes and installs the K grid.
Grid2D gauss_curvature(GeodesicChart& chart);

// (G^1_11, G^1_12, G^1_22, G^2_11, G^2_12, G^2_22)
// = (B_s/B, B_t/B, 0, -B B_t, 0, 0) at the given point.
std::array<double, 6> christoffels(const GeodesicChart& chart, double s,
                                   double t);

struct ValidationEntry {
  std::string id;
  enum class Status { Pass, Fail, Warn, NotApplicable } status;
  double max_violation = 0.0;
  std::size_t violations = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;
  bool overall_pass() const;
  const ValidationEntry* find(const std::string& id) const;
};

struct AnTolerances {
  double boundary_K = 1e-8;   // |K(s,0)| threshold
  double kt_lower = 1e-8;     // required dK/dt(s,0) lower bound
  double total_curvature = 1e-3;
};

// Checks the defining conditions for an admissible degenerate collar:
// K > 0 inside, K(.,0) = 0 with dK/dt(.,0) > 0, k_g < 0, B_t > 0.
// Failures are report entries, not exceptions.
ValidationReport validate_an(const GeodesicChart& chart,
                             const AnTolerances& tol = {});

} // namespace ansl

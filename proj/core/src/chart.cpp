#include "ansl/chart.hpp"

#include "ansl/common.hpp"
#include "ansl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

namespace ansl {

namespace {

constexpr int kGridMaxTDeriv = 4; // contract for tabulated charts
constexpr int kJetStencilAccuracy = 6;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

} // namespace

std::vector<double> TGrading::nodes(std::size_t nt, double t_max) const {
  std::vector<double> t(nt);
  for (std::size_t j = 0; j < nt; ++j) {
    const double xi = static_cast<double>(j) / static_cast<double>(nt - 1);
    t[j] = (kind == Kind::Uniform) ? t_max * xi : t_max * std::pow(xi, gamma);
  }
  t.front() = 0.0;
  t.back() = t_max;
  return t;
}

GeodesicChart::GeodesicChart(const GeodesicChart& o)
    : period_(o.period_), t_max_(o.t_max_), ns_(o.ns_), nt_(o.nt_),
      tnodes_(o.tnodes_), src_(o.src_), Bgrid_(o.Bgrid_), Kgrid_(o.Kgrid_),
      full_surface_(o.full_surface_), name_(o.name_) {}

GeodesicChart& GeodesicChart::operator=(const GeodesicChart& o) {
  if (this == &o) return *this;
  period_ = o.period_;
  t_max_ = o.t_max_;
  ns_ = o.ns_;
  nt_ = o.nt_;
  tnodes_ = o.tnodes_;
  src_ = o.src_;
  Bgrid_ = o.Bgrid_;
  Kgrid_ = o.Kgrid_;
  full_surface_ = o.full_surface_;
  name_ = o.name_;
  std::lock_guard<std::mutex> lk(tops_mutex_);
  tops_.clear();
  return *this;
}

int GeodesicChart::max_t_derivative() const {
  return analytic() ? src_.max_t_order : kGridMaxTDeriv;
}

const fd::DerivOp& GeodesicChart::t_deriv_op(int order) const {
  std::lock_guard<std::mutex> lk(tops_mutex_);
  auto it = tops_.find(order);
  if (it == tops_.end())
    it = tops_.emplace(order, fd::DerivOp(tnodes_, order, 4)).first;
  return it->second;
}

Profile GeodesicChart::B_row(double t, int ds, int dt) const {
  Profile row(ns_, period_);
  if (analytic()) {
    if (dt > src_.max_t_order)
      throw InsufficientSmoothness("analytic source supports t-order <= " +
                                   std::to_string(src_.max_t_order));
    for (std::size_t i = 0; i < ns_; ++i)
      row[i] = src_.B(row.s_at(i), t, ds, dt);
    return row;
  }
  if (dt > kGridMaxTDeriv)
    throw InsufficientSmoothness("tabulated charts support t-order <= 4");
  auto st = fd::point_stencil(tnodes_, t, dt, dt + kJetStencilAccuracy);
  for (std::size_t i = 0; i < ns_; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < st.w.size(); ++k)
      acc += st.w[k] * Bgrid_.at(st.lo + k, i);
    row[i] = acc;
  }
  if (ds > 0) row = row.derivative(ds);
  return row;
}

Profile GeodesicChart::K_row(double t, int ds, int dt) const {
  Profile row(ns_, period_);
  if (analytic() && src_.K) {
    for (std::size_t i = 0; i < ns_; ++i)
      row[i] = src_.K(row.s_at(i), t, ds, dt);
    return row;
  }
  if (analytic()) {
    // K = -B_tt / B from the metric callbacks; low orders only.
    auto B = [&](int dds, int ddt) { return B_row(t, dds, ddt); };
    if (ds == 0 && dt == 0) {
      Profile b = B(0, 0), btt = B(0, 2);
      Profile out = btt / b;
      return out * -1.0;
    }
    if (ds == 0 && dt == 1) {
      Profile b = B(0, 0), bt = B(0, 1), btt = B(0, 2), bttt = B(0, 3);
      return (btt * bt - bttt * b) / (b * b);
    }
    if (ds == 1 && dt == 0) {
      Profile b = B(0, 0), bs = B(1, 0), btt = B(0, 2), bstt = B(1, 2);
      return (btt * bs - bstt * b) / (b * b);
    }
    throw InsufficientSmoothness(
        "derived Gauss curvature supports (ds,dt) in {(0,0),(0,1),(1,0)}");
  }
  if (dt > kGridMaxTDeriv)
    throw InsufficientSmoothness("tabulated charts support t-order <= 4");
  auto st = fd::point_stencil(tnodes_, t, dt, dt + kJetStencilAccuracy);
  for (std::size_t i = 0; i < ns_; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < st.w.size(); ++k)
      acc += st.w[k] * Kgrid_.at(st.lo + k, i);
    row[i] = acc;
  }
  if (ds > 0) row = row.derivative(ds);
  return row;
}

double GeodesicChart::B_at(double s, double t, int ds, int dt) const {
  if (analytic()) return src_.B(s, t, ds, dt);
  return B_row(t, ds, dt).interp(s);
}

double GeodesicChart::K_at(double s, double t, int ds, int dt) const {
  if (analytic() && src_.K) return src_.K(s, t, ds, dt);
  return K_row(t, ds, dt).interp(s);
}

TJet GeodesicChart::B_jet(int order) const {
  if (order > max_t_derivative())
    throw InsufficientSmoothness("requested B-jet order " +
                                 std::to_string(order) + " exceeds source");
  std::vector<Profile> coeffs;
  coeffs.reserve(order + 1);
  double fact = 1.0;
  for (int m = 0; m <= order; ++m) {
    if (m > 1) fact *= m;
    if (analytic()) {
      coeffs.push_back(B_row(0.0, 0, m) * (1.0 / fact));
    } else {
      auto st = fd::point_stencil(tnodes_, 0.0, m, m + kJetStencilAccuracy);
      Profile c(ns_, period_);
      for (std::size_t i = 0; i < ns_; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < st.w.size(); ++k)
          acc += st.w[k] * Bgrid_.at(st.lo + k, i);
        c[i] = acc / fact;
      }
      coeffs.push_back(std::move(c));
    }
  }
  return TJet(std::move(coeffs));
}

TJet GeodesicChart::K_jet(int order) const {
  if (analytic() && src_.K) {
    std::vector<Profile> coeffs;
    coeffs.reserve(order + 1);
    double fact = 1.0;
    for (int m = 0; m <= order; ++m) {
      if (m > 1) fact *= m;
      coeffs.push_back(K_row(0.0, 0, m) * (1.0 / fact));
    }
    return TJet(std::move(coeffs));
  }
  TJet bj = B_jet(order + 2);
  TJet btt = bj.dt().dt();
  TJet num = TJet::zeros(order, ns_, period_) - btt;
  return num / bj;
}

Profile GeodesicChart::boundary_geodesic_curvature() const {
  return B_row(0.0, 0, 1) * -1.0;
}

namespace {

void check_grid(const Grid2D& g, bool is_analytic, const ChartTolerances& tol) {
  for (std::size_t j = 0; j < g.nt(); ++j)
    for (std::size_t i = 0; i < g.ns(); ++i)
      if (!(g.at(j, i) > 0.0))
        throw NonPositiveB("B(" + fmt(g.s_at(i)) + "," + fmt(g.t_at(j)) +
                           ") = " + fmt(g.at(j, i)));
  const double tol0 =
      is_analytic ? tol.normalization_analytic : tol.normalization_grid;
  for (std::size_t i = 0; i < g.ns(); ++i) {
    const double dev = std::abs(g.at(0, i) - 1.0);
    if (dev > tol0)
      throw NormalizationViolation("B(" + fmt(g.s_at(i)) + ",0) deviates by " +
                                   fmt(dev));
  }
}

} // namespace

GeodesicChart build_chart(const AnalyticMetric& src, double period,
                          double t_max, std::size_t ns, std::size_t nt,
                          const TGrading& grading, const ChartTolerances& tol) {
  if (!(period > 0.0) || !(t_max > 0.0))
    throw BadParameters("period and t_max must be positive");
  if (ns < 8 || nt < 4) throw BadParameters("grid must be at least 8 x 4");
  GeodesicChart c;
  c.period_ = period;
  c.t_max_ = t_max;
  c.ns_ = ns;
  c.nt_ = nt;
  c.tnodes_ = grading.nodes(nt, t_max);
  c.src_ = src;
  c.Bgrid_ = Grid2D(c.tnodes_, ns, period);
  for (std::size_t j = 0; j < nt; ++j)
    c.Bgrid_.set_row(j, c.B_row(c.tnodes_[j], 0, 0));
  check_grid(c.Bgrid_, true, tol);
  gauss_curvature(c);
  return c;
}

GeodesicChart build_chart(Grid2D B_values, const TGrading&,
                          const ChartTolerances& tol) {
  if (B_values.ns() < 8 || B_values.nt() < 4)
    throw BadParameters("grid must be at least 8 x 4");
  GeodesicChart c;
  c.period_ = B_values.period();
  c.t_max_ = B_values.tnodes().back();
  if (!(c.period_ > 0.0) || !(c.t_max_ > 0.0))
    throw BadParameters("period and t_max must be positive");
  c.ns_ = B_values.ns();
  c.nt_ = B_values.nt();
  c.tnodes_ = B_values.tnodes();
  c.Bgrid_ = std::move(B_values);
  check_grid(c.Bgrid_, false, tol);
  gauss_curvature(c);
  return c;
}

Grid2D gauss_curvature(GeodesicChart& chart) {
  Grid2D K(chart.tnodes(), chart.ns(), chart.period());
  if (chart.analytic()) {
    for (std::size_t j = 0; j < chart.nt(); ++j)
      K.set_row(j, chart.K_row(chart.tnodes()[j], 0, 0));
  } else {
    const auto& d2 = chart.t_deriv_op(2);
    parallel_for(chart.ns(), [&](std::size_t i) {
      const auto col = chart.B_grid().column(i);
      for (std::size_t j = 0; j < chart.nt(); ++j)
        K.at(j, i) = -d2.at(col, j) / col[j];
    });
  }
  chart.Kgrid_ = K;
  return K;
}

std::array<double, 6> christoffels(const GeodesicChart& chart, double s,
                                   double t) {
  const double B = chart.B_at(s, t, 0, 0);
  const double Bs = chart.B_at(s, t, 1, 0);
  const double Bt = chart.B_at(s, t, 0, 1);
  return {Bs / B, Bt / B, 0.0, -B * Bt, 0.0, 0.0};
}

bool ValidationReport::overall_pass() const {
  for (const auto& e : entries)
    if (e.status == ValidationEntry::Status::Fail) return false;
  return true;
}

const ValidationEntry* ValidationReport::find(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

ValidationReport validate_an(const GeodesicChart& chart,
                             const AnTolerances& tol) {
  ValidationReport rep;
  using St = ValidationEntry::Status;
  const auto& K = chart.K_grid();

  { // K(.,0) = 0
    Profile k0 = chart.K_jet(0).coeff(0);
    ValidationEntry e{"K_zero_on_boundary", St::Pass, k0.max_abs(), 0, ""};
    if (e.max_violation > tol.boundary_K) {
      e.status = St::Fail;
      e.violations = 1;
    }
    rep.entries.push_back(e);
  }
  { // dK/dt(.,0) > 0
    Profile kt0 = chart.K_jet(1).deriv(1);
    ValidationEntry e{"Kt_positive_boundary", St::Pass, 0.0, 0,
                      "min dK/dt(.,0) = " + fmt(kt0.min_value())};
    if (kt0.min_value() < tol.kt_lower) {
      e.status = St::Fail;
      e.max_violation = tol.kt_lower - kt0.min_value();
    }
    rep.entries.push_back(e);
  }
  { // K > 0 at interior nodes
    ValidationEntry e{"K_positive_interior", St::Pass, 0.0, 0, ""};
    for (std::size_t j = 1; j < K.nt(); ++j)
      for (std::size_t i = 0; i < K.ns(); ++i)
        if (!(K.at(j, i) > 0.0)) {
          ++e.violations;
          e.max_violation = std::max(e.max_violation, -K.at(j, i));
        }
    if (e.violations > 0) e.status = St::Fail;
    rep.entries.push_back(e);
  }
  { // k_g < 0
    Profile kg = chart.boundary_geodesic_curvature();
    ValidationEntry e{"kg_negative", St::Pass, 0.0, 0,
                      "max k_g = " + fmt(kg.max_value())};
    if (!(kg.max_value() < 0.0)) {
      e.status = St::Fail;
      e.max_violation = kg.max_value();
    }
    rep.entries.push_back(e);
  }
  { // B_t > 0 in the collar (excluding the deep edge); advisory
    ValidationEntry e{"Bt_positive", St::Pass, 0.0, 0, ""};
    for (std::size_t j = 0; j + 1 < chart.nt(); ++j) {
      Profile bt = chart.B_row(chart.tnodes()[j], 0, 1);
      if (!(bt.min_value() > 0.0)) {
        ++e.violations;
        e.max_violation = std::max(e.max_violation, -bt.min_value());
      }
    }
    if (e.violations > 0) {
      e.status = St::Warn;
      e.detail = "metric not monotone in t; deep-collar results unreliable";
    }
    rep.entries.push_back(e);
  }
  { // total curvature; only meaningful for full surfaces
    ValidationEntry e{"total_curvature_4pi", St::NotApplicable, 0.0, 0,
                      "collar chart"};
    if (chart.full_surface()) {
      // trapezoid in t, periodic rule in s of K * B ds dt
      double acc = 0.0;
      const auto& tn = chart.tnodes();
      for (std::size_t j = 0; j + 1 < chart.nt(); ++j) {
        const double ht = tn[j + 1] - tn[j];
        Profile f0 = chart.K_grid().row_profile(j) * chart.B_grid().row_profile(j);
        Profile f1 =
            chart.K_grid().row_profile(j + 1) * chart.B_grid().row_profile(j + 1);
        acc += 0.5 * ht * (f0.integral() + f1.integral());
      }
      const double dev = std::abs(acc - 4.0 * kPi);
      e.status = dev <= tol.total_curvature * 4.0 * kPi ? St::Pass : St::Fail;
      e.max_violation = dev;
      e.detail = "integral = " + fmt(acc);
    }
    rep.entries.push_back(e);
  }
  return rep;
}

} // namespace ansl

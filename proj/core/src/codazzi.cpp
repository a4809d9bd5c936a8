#include "ansl/codazzi.hpp"

#include "ansl/common.hpp"
#include "ansl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ansl {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

struct MetricRows {
  Profile B, Bt, Bs, K, Kt;
};

MetricRows metric_rows(const GeodesicChart& chart, double t) {
  return {chart.B_row(t, 0, 0), chart.B_row(t, 0, 1), chart.B_row(t, 1, 0),
          chart.K_row(t, 0, 0), chart.K_row(t, 0, 1)};
}

struct State {
  Profile M, N, Lg; // Lg marched through the first Codazzi equation
};

} // namespace

StartOff taylor_startoff(const BoundaryJet& jet, double t0) {
  StartOff s;
  s.t0 = t0;
  s.jet = jet;
  if (t0 == 0.0) {
    s.M = jet.M.coeff(0);
    s.N = jet.N.coeff(0);
    s.truncation_rel = 0.0;
    return s;
  }
  s.M = jet.M.eval(t0);
  s.N = jet.N.eval(t0);
  const int k = jet.order;
  double rel = 0.0;
  const double lastM = jet.M.coeff(k).max_abs() * std::pow(t0, k);
  const double lastN = jet.N.coeff(k).max_abs() * std::pow(t0, k);
  if (lastM > 0.0) rel = std::max(rel, lastM / std::max(s.M.max_abs(), lastM));
  if (lastN > 0.0) rel = std::max(rel, lastN / std::max(s.N.max_abs(), lastN));
  s.truncation_rel = rel;
  if (rel > 1e-3)
    throw StartoffTooDeep("last retained jet term is " + fmt(rel) +
                          " of the field at t0 = " + fmt(t0));
  return s;
}

namespace {

// M_t = N_s - (B_t/B) M
// N_t = (2 M N_s - N M_s + Q) / L,  L = (M^2 + K B^2)/N
// Q = -(2B_t/B) M^2 - (B_t/B)(M^2 + K B^2) + (B_s/B) M N - B B_t N^2
//     + (K_t B^2 + 2 B B_t K)
State rhs(const State& u, const MetricRows& g, double t, bool dealias,
          double blowup_limit) {
  const std::size_t n = u.M.size();
  if (!(u.N.min_value() > 0.0))
    throw BlowupDetected("N <= 0 at t = " + fmt(t));
  if (u.N.max_abs() > blowup_limit || u.M.max_abs() > blowup_limit)
    throw BlowupDetected("field exceeded " + fmt(blowup_limit) + " at t = " +
                         fmt(t));
  const Profile Ms = u.M.derivative(1, dealias);
  const Profile Ns = u.N.derivative(1, dealias);
  State d{Profile(n, u.M.period()), Profile(n, u.M.period()),
          Profile(n, u.M.period())};
  for (std::size_t i = 0; i < n; ++i) {
    const double B = g.B[i], Bt = g.Bt[i], Bs = g.Bs[i], K = g.K[i],
                 Kt = g.Kt[i];
    const double M = u.M[i], N = u.N[i];
    const double KB2 = K * B * B;
    const double L = (M * M + KB2) / N;
    const double Q = -(2.0 * Bt / B) * M * M - (Bt / B) * (M * M + KB2) +
                     (Bs / B) * M * N - B * Bt * N * N +
                     (Kt * B * B + 2.0 * B * Bt * K);
    d.M[i] = Ns[i] - (Bt / B) * M;
    d.N[i] = (2.0 * M * Ns[i] - N * Ms[i] + Q) / L;
    d.Lg[i] = Ms[i] + (Bt / B) * u.Lg[i] - (Bs / B) * M + B * Bt * N;
  }
  return d;
}

State axpy(const State& a, double c, const State& b) {
  State r = a;
  for (std::size_t i = 0; i < r.M.size(); ++i) {
    r.M[i] += c * b.M[i];
    r.N[i] += c * b.N[i];
    r.Lg[i] += c * b.Lg[i];
  }
  return r;
}

} // namespace

FundamentalForm integrate(const GeodesicChart& chart, const StartOff& start,
                          double t_end, int steps,
                          const IntegrateOptions& opts) {
  if (!(t_end > 0.0) || t_end > chart.t_max() + 1e-12)
    throw BadParameters("t_end must lie in (0, t_max]");
  if (steps < 2) throw BadParameters("need at least 2 steps");
  const double h = t_end / steps;
  const std::size_t ns = chart.ns();
  const double period = chart.period();

  std::vector<double> tnodes(steps + 1);
  for (int j = 0; j <= steps; ++j) tnodes[j] = h * j;
  tnodes.back() = t_end;

  const int j0 =
      std::clamp(static_cast<int>(std::floor(start.t0 / h + 1e-9)), 1,
                 steps - 1);
  const double t_start = tnodes[j0];

  Grid2D Mg(tnodes, ns, period), Ng(tnodes, ns, period);
  for (int j = 0; j <= j0; ++j) {
    Mg.set_row(j, start.jet.M.eval(tnodes[j]));
    Ng.set_row(j, start.jet.N.eval(tnodes[j]));
  }

  State u{Mg.row_profile(j0), Ng.row_profile(j0),
          start.jet.L.eval(t_start)};
  double gc3_max = 0.0;

  for (int j = j0; j < steps; ++j) {
    const double t = tnodes[j];
    const MetricRows g0 = metric_rows(chart, t);
    const MetricRows gh = metric_rows(chart, t + 0.5 * h);
    const MetricRows g1 = metric_rows(chart, t + h);

    const State k1 = rhs(u, g0, t, opts.dealias, opts.blowup_limit);
    const State k2 = rhs(axpy(u, 0.5 * h, k1), gh, t + 0.5 * h, opts.dealias,
                         opts.blowup_limit);
    const State k3 = rhs(axpy(u, 0.5 * h, k2), gh, t + 0.5 * h, opts.dealias,
                         opts.blowup_limit);
    const State k4 =
        rhs(axpy(u, h, k3), g1, t + h, opts.dealias, opts.blowup_limit);

    for (std::size_t i = 0; i < ns; ++i) {
      u.M[i] += h / 6.0 * (k1.M[i] + 2.0 * k2.M[i] + 2.0 * k3.M[i] + k4.M[i]);
      u.N[i] += h / 6.0 * (k1.N[i] + 2.0 * k2.N[i] + 2.0 * k3.N[i] + k4.N[i]);
      u.Lg[i] +=
          h / 6.0 * (k1.Lg[i] + 2.0 * k2.Lg[i] + 2.0 * k3.Lg[i] + k4.Lg[i]);
    }
    if (!(u.N.min_value() > 0.0))
      throw BlowupDetected("N <= 0 after step to t = " + fmt(t + h));

    // conservation: the independently marched L must keep satisfying the
    // Gauss relation
    double r = 0.0;
    for (std::size_t i = 0; i < ns; ++i) {
      const double KB2 = g1.K[i] * g1.B[i] * g1.B[i];
      r = std::max(r, std::abs(u.N[i] * u.Lg[i] - u.M[i] * u.M[i] - KB2) /
                          (1.0 + KB2));
    }
    gc3_max = std::max(gc3_max, r);
    if (r > opts.gc3_cap)
      throw StepRejected("Gauss residual " + fmt(r) + " at t = " +
                         fmt(t + h));
    Mg.set_row(j + 1, u.M);
    Ng.set_row(j + 1, u.N);
  }

  FundamentalForm form;
  form.M = std::move(Mg);
  form.N = std::move(Ng);
  form.L = close_L(chart, form.M, form.N);
  form.H = Grid2D(tnodes, ns, period);
  for (int j = 0; j <= steps; ++j) {
    const Profile B = chart.B_row(tnodes[j], 0, 0);
    for (std::size_t i = 0; i < ns; ++i)
      form.H.at(j, i) =
          0.5 * (form.L.at(j, i) / (B[i] * B[i]) + form.N.at(j, i));
  }
  form.gc3_conservation_max = gc3_max;
  form.t_start = t_start;
  form.start_index = j0;
  return form;
}

Grid2D close_L(const GeodesicChart& chart, const Grid2D& M, const Grid2D& N) {
  Grid2D L(M.tnodes(), M.ns(), M.period());
  for (std::size_t j = 0; j < M.nt(); ++j) {
    const Profile B = chart.B_row(M.t_at(j), 0, 0);
    const Profile K = chart.K_row(M.t_at(j), 0, 0);
    for (std::size_t i = 0; i < M.ns(); ++i) {
      const double n = N.at(j, i);
      if (!(n > 1e-12))
        throw NonpositiveN("N = " + fmt(n) + " at t = " + fmt(M.t_at(j)));
      L.at(j, i) = (sq(M.at(j, i)) + K[i] * sq(B[i])) / n;
    }
  }
  return L;
}

CodazziResiduals codazzi_residuals(const FundamentalForm& form,
                                   const GeodesicChart& chart) {
  const auto& tn = form.tnodes();
  const std::size_t ns = form.ns(), nt = form.nt();
  CodazziResiduals out;
  out.gc1 = Grid2D(tn, ns, form.period());
  out.gc2 = Grid2D(tn, ns, form.period());

  const fd::DerivOp dt(tn, 1, 4);

  // t-derivative grids, column by column
  Grid2D Lt(tn, ns, form.period()), Mt(tn, ns, form.period()),
      Nt(tn, ns, form.period());
  parallel_for(ns, [&](std::size_t i) {
    const auto Lc = form.L.column(i), Mc = form.M.column(i),
               Nc = form.N.column(i);
    for (std::size_t j = 0; j < nt; ++j) {
      Lt.at(j, i) = dt.at(Lc, j);
      Mt.at(j, i) = dt.at(Mc, j);
      Nt.at(j, i) = dt.at(Nc, j);
    }
  });

  for (std::size_t j = 0; j < nt; ++j) {
    const Profile B = chart.B_row(tn[j], 0, 0);
    const Profile Bt = chart.B_row(tn[j], 0, 1);
    const Profile Bs = chart.B_row(tn[j], 1, 0);
    const Profile Ms = form.M.row_profile(j).derivative(1);
    const Profile Ns = form.N.row_profile(j).derivative(1);
    for (std::size_t i = 0; i < ns; ++i) {
      const double L = form.L.at(j, i), M = form.M.at(j, i),
                   N = form.N.at(j, i);
      out.gc1.at(j, i) = Lt.at(j, i) - Ms[i] - (Bt[i] / B[i]) * L +
                         (Bs[i] / B[i]) * M - B[i] * Bt[i] * N;
      out.gc2.at(j, i) = Mt.at(j, i) - Ns[i] + (Bt[i] / B[i]) * M;
    }
  }
  out.max_gc1 = max_abs(out.gc1.flat());
  out.max_gc2 = max_abs(out.gc2.flat());
  return out;
}

} // namespace ansl

#include "ansl/fixtures.hpp"

#include "ansl/common.hpp"
#include "ansl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace ansl {

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace

GeodesicChart SurfaceFixture::chart(std::size_t ns, std::size_t nt,
                                    double t_max_override) const {
  const double tm = t_max_override > 0.0 ? t_max_override : t_max;
  GeodesicChart c = build_chart(metric, period, tm, ns, nt);
  c.set_name(name);
  return c;
}

// ---------------------------------------------------------------------------
// torus

SurfaceFixture torus_fixture(double a, double R) {
  if (!(a > 0.0) || !(a < R))
    throw BadParameters("torus needs 0 < a < R");
  SurfaceFixture fx;
  fx.name = "torus";
  fx.params = {{"a", a}, {"R", R}};
  fx.period = 2.0 * kPi * R;
  fx.t_max = 0.5 * kPi * a;
  fx.is_AN = true;

  // meridian angle from the boundary: theta = pi/2 - t/a, cos(theta) =
  // sin(t/a); everything is a jet in t of sin(t/a).
  auto sin_jet = [a](double t, int order) {
    return sin(ScalarJet::variable(t, order) * (1.0 / a));
  };
  auto cos_jet = [a](double t, int order) {
    return cos(ScalarJet::variable(t, order) * (1.0 / a));
  };

  fx.metric.B = [a, R, sin_jet](double, double t, int ds, int dt) {
    if (ds > 0) return 0.0;
    return ((sin_jet(t, dt) * a + R) * (1.0 / R)).deriv(dt);
  };
  fx.metric.K = [a, R, sin_jet](double, double t, int ds, int dt) {
    if (ds > 0) return 0.0;
    ScalarJet s = sin_jet(t, dt);
    return (s / ((s * a + R) * a)).deriv(dt);
  };
  fx.metric.max_t_order = 12;

  fx.N = [a](double, double, int dt) { return dt == 0 ? 1.0 / a : 0.0; };
  fx.M = [](double, double, int) { return 0.0; };
  fx.L = [a, R, sin_jet](double, double t, int dt) {
    ScalarJet s = sin_jet(t, dt);
    return ((s * a + R) * s * (1.0 / (R * R))).deriv(dt);
  };
  fx.H = [a, R, sin_jet](double, double t, int dt) {
    ScalarJet s = sin_jet(t, dt);
    return ((s / (s * a + R) + 1.0 / a) * 0.5).deriv(dt);
  };

  fx.position = [a, R, sin_jet, cos_jet](double s, double t, int ds, int dt) {
    const double phi = s / R;
    const double rho = (sin_jet(t, dt) * a + R).deriv(dt); // d^dt (R + a sin)
    const double zc = (cos_jet(t, dt) * a).deriv(dt);      // d^dt (a cos)
    const double cs = std::cos(phi + 0.5 * kPi * ds) / std::pow(R, ds);
    const double sn = std::sin(phi + 0.5 * kPi * ds) / std::pow(R, ds);
    return std::array<double, 3>{rho * cs, rho * sn, ds == 0 ? zc : 0.0};
  };
  fx.normal = [a, R](double s, double t) {
    const double phi = s / R, tau = t / a;
    return std::array<double, 3>{-std::sin(tau) * std::cos(phi),
                                 -std::sin(tau) * std::sin(phi),
                                 -std::cos(tau)};
  };
  return fx;
}

// ---------------------------------------------------------------------------
// surfaces of revolution from a curvature profile

namespace {

// Meridian data B'' = -K B, w = B_t(0) - B_t = int K B, z' =
// sqrt(f0 w (1 + f0 B_t)), integrated with fine fixed-step RK4 and stored
// for quintic (B, w) / cubic (z) Hermite evaluation.
struct MeridianData {
  CurvatureProfile prof;
  double b1 = 0.0; // B_t(0) = -kg
  double f0 = 0.0; // boundary radius 1/b1
  double t_max = 0.0;
  std::vector<double> tn, B, Bt, w, z;

  double h() const { return tn[1] - tn[0]; }

  double Kv(double t) const { return prof.K(t, 0).value(); }

  // quintic Hermite from (f, f', f'') at both ends
  static double hermite5(double x, double h, double f0, double d0, double s0,
                         double f1, double d1, double s1) {
    // monomial solve is fine at these magnitudes
    const double u = x / h;
    const double u2 = u * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u;
    const double H0 = 1 - 10 * u3 + 15 * u4 - 6 * u5;
    const double H1 = u - 6 * u3 + 8 * u4 - 3 * u5;
    const double H2 = 0.5 * u2 - 1.5 * u3 + 1.5 * u4 - 0.5 * u5;
    const double H3 = 10 * u3 - 15 * u4 + 6 * u5;
    const double H4 = -4 * u3 + 7 * u4 - 3 * u5;
    const double H5 = 0.5 * u3 - u4 + 0.5 * u5;
    return f0 * H0 + d0 * h * H1 + s0 * h * h * H2 + f1 * H3 + d1 * h * H4 +
           s1 * h * h * H5;
  }

  std::size_t cell(double t) const {
    const double x = std::clamp(t, 0.0, t_max);
    std::size_t j = static_cast<std::size_t>(x / h());
    return std::min(j, tn.size() - 2);
  }

  double B_at(double t) const {
    const std::size_t j = cell(t);
    return hermite5(t - tn[j], h(), B[j], Bt[j], -Kv(tn[j]) * B[j], B[j + 1],
                    Bt[j + 1], -Kv(tn[j + 1]) * B[j + 1]);
  }
  double Bt_at(double t) const {
    const std::size_t j = cell(t);
    auto dB = [&](std::size_t i) { return -Kv(tn[i]) * B[i]; };
    auto d2B = [&](std::size_t i) {
      return -(prof.K(tn[i], 1).deriv(1) * B[i] + Kv(tn[i]) * Bt[i]);
    };
    return hermite5(t - tn[j], h(), Bt[j], dB(j), d2B(j), Bt[j + 1], dB(j + 1),
                    d2B(j + 1));
  }
  double w_at(double t) const {
    const std::size_t j = cell(t);
    auto dw = [&](std::size_t i) { return Kv(tn[i]) * B[i]; };
    auto d2w = [&](std::size_t i) {
      return prof.K(tn[i], 1).deriv(1) * B[i] + Kv(tn[i]) * Bt[i];
    };
    return hermite5(t - tn[j], h(), w[j], dw(j), d2w(j), w[j + 1], dw(j + 1),
                    d2w(j + 1));
  }
  double zp_of(double wv, double btv) const {
    return std::sqrt(std::max(0.0, f0 * wv * (1.0 + f0 * btv)));
  }
  double z_at(double t) const {
    const std::size_t j = cell(t);
    const double u = (t - tn[j]) / h();
    const double d0 = zp_of(w[j], Bt[j]), d1 = zp_of(w[j + 1], Bt[j + 1]);
    const double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
    const double h10 = u * (1 - u) * (1 - u);
    const double h01 = u * u * (3 - 2 * u);
    const double h11 = u * u * (u - 1);
    return z[j] * h00 + h() * d0 * h10 + z[j + 1] * h01 + h() * d1 * h11;
  }

  // jets at arbitrary t: B-jet from the ODE recursion, w from w' = K B,
  // z' from its algebraic closure
  ScalarJet B_jet(double t, int order) const {
    ScalarJet kj = prof.K(t, std::max(0, order - 2));
    std::vector<double> c(order + 1);
    c[0] = B_at(t);
    if (order >= 1) c[1] = Bt_at(t);
    for (int m = 2; m <= order; ++m) {
      // c_m = -[t^{m-2}](K B) / (m (m-1))
      double conv = 0.0;
      for (int i = 0; i <= m - 2; ++i) conv += kj.coeff(i) * c[m - 2 - i];
      c[m] = -conv / (m * (m - 1));
    }
    ScalarJet out(order);
    for (int m = 0; m <= order; ++m) out.coeff(m) = c[m];
    return out;
  }
  ScalarJet w_jet(double t, int order) const {
    ScalarJet kb = prof.K(t, order) * B_jet(t, order);
    ScalarJet out(order, w_at(t));
    for (int m = 1; m <= order; ++m) out.coeff(m) = kb.coeff(m - 1) / m;
    return out;
  }
  // z'^2 = f0 w (1 + f0 B_t); w vanishes to second order at t = 0, so the
  // square root there is taken on the t^2-factored jet.
  ScalarJet zp_jet(double t, int order) const {
    const ScalarJet bt = B_jet(t, order + 1).derivative();
    if (t > 0.0) {
      ScalarJet zp2 = (w_jet(t, order) * f0) * (bt * f0 + 1.0);
      return sqrt(zp2);
    }
    ScalarJet w2 = w_jet(0.0, order + 2).shifted(-2).truncated(order); // w/t^2
    ScalarJet g = (w2 * f0) * (bt * f0 + 1.0); // (z'/t)^2
    return sqrt(g).shifted(1);
  }
  ScalarJet z_jet(double t, int order) const {
    ScalarJet zp = zp_jet(t, std::max(0, order - 1));
    ScalarJet out(order, z_at(t));
    for (int m = 1; m <= order; ++m) out.coeff(m) = zp.coeff(m - 1) / m;
    return out;
  }
};

} // namespace

SurfaceFixture revolution_fixture(const CurvatureProfile& profile) {
  if (!(profile.kg < 0.0)) throw ProfileInvalid("requires k_g < 0");
  if (!(profile.t_max > 0.0)) throw ProfileInvalid("requires t_max > 0");
  {
    ScalarJet k0 = profile.K(0.0, 1);
    if (std::abs(k0.value()) > 1e-12)
      throw ProfileInvalid("K(0) must vanish");
    if (!(k0.deriv(1) > 0.0)) throw ProfileInvalid("K'(0) must be positive");
  }

  auto md = std::make_shared<MeridianData>();
  md->prof = profile;
  md->b1 = -profile.kg;
  md->f0 = 1.0 / md->b1;
  md->t_max = profile.t_max;

  // fine RK4 on (B, B_t, w, z); sub-stepped between stored nodes
  const std::size_t n_store = 4096;
  const int substeps = 8;
  md->tn.resize(n_store + 1);
  md->B.resize(n_store + 1);
  md->Bt.resize(n_store + 1);
  md->w.resize(n_store + 1);
  md->z.resize(n_store + 1);
  const double H = md->t_max / n_store;
  double Bv = 1.0, Btv = md->b1, wv = 0.0, zv = 0.0;
  md->tn[0] = 0.0;
  md->B[0] = Bv;
  md->Bt[0] = Btv;
  md->w[0] = wv;
  md->z[0] = zv;
  auto deriv = [&](double t, double b, double bt, double w0, double* d) {
    const double K = md->Kv(t);
    d[0] = bt;
    d[1] = -K * b;
    d[2] = K * b;
    d[3] = md->zp_of(w0, bt);
  };
  for (std::size_t j = 0; j < n_store; ++j) {
    const double hh = H / substeps;
    for (int k = 0; k < substeps; ++k) {
      const double t = j * H + k * hh;
      double k1[4], k2[4], k3[4], k4[4];
      deriv(t, Bv, Btv, wv, k1);
      deriv(t + 0.5 * hh, Bv + 0.5 * hh * k1[0], Btv + 0.5 * hh * k1[1],
            wv + 0.5 * hh * k1[2], k2);
      deriv(t + 0.5 * hh, Bv + 0.5 * hh * k2[0], Btv + 0.5 * hh * k2[1],
            wv + 0.5 * hh * k2[2], k3);
      deriv(t + hh, Bv + hh * k3[0], Btv + hh * k3[1], wv + hh * k3[2], k4);
      Bv += hh / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
      Btv += hh / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
      wv += hh / 6 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2]);
      zv += hh / 6 * (k1[3] + 2 * k2[3] + 2 * k3[3] + k4[3]);
    }
    md->tn[j + 1] = (j + 1) * H;
    md->B[j + 1] = Bv;
    md->Bt[j + 1] = Btv;
    md->w[j + 1] = wv;
    md->z[j + 1] = zv;
    if (!(Bv > 0.0)) throw ProfileInvalid("meridian B became nonpositive");
    if (!(Btv > 0.0))
      throw ProfileInvalid("B_t became nonpositive inside the collar");
    if (j > 0 && !(md->Kv(md->tn[j]) > 0.0))
      throw ProfileInvalid("K must stay positive inside the collar");
  }

  SurfaceFixture fx;
  fx.name = "revolution";
  fx.params = {{"kg", profile.kg}, {"t_max", profile.t_max}};
  fx.period = 2.0 * kPi * md->f0;
  fx.t_max = profile.t_max;
  fx.is_AN = true;

  fx.metric.B = [md](double, double t, int ds, int dt) {
    if (ds > 0) return 0.0;
    return md->B_jet(t, dt).deriv(dt);
  };
  fx.metric.K = [md](double, double t, int ds, int dt) {
    if (ds > 0) return 0.0;
    return md->prof.K(t, dt).deriv(dt);
  };
  fx.metric.max_t_order = 12;

  // N = f0 K B / z', L = B z' / f0, both regular at t = 0 after factoring
  // one power of t out of z' and K.
  auto Njet = [md](double t, int order) {
    if (t > 0.0) {
      ScalarJet kb = md->prof.K(t, order) * md->B_jet(t, order);
      return (kb * md->f0) / md->zp_jet(t, order);
    }
    const int p = order;
    ScalarJet kot = md->prof.K(0.0, p + 1).shifted(-1);          // K/t
    ScalarJet zpot = md->zp_jet(0.0, p + 1).shifted(-1);         // z'/t
    return ((kot * md->B_jet(0.0, p)) * md->f0) / zpot;
  };
  auto Ljet = [md](double t, int order) {
    return (md->B_jet(t, order) * md->zp_jet(t, order)) * (1.0 / md->f0);
  };
  fx.N = [Njet](double, double t, int dt) { return Njet(t, dt).deriv(dt); };
  fx.M = [](double, double, int) { return 0.0; };
  fx.L = [Ljet](double, double t, int dt) { return Ljet(t, dt).deriv(dt); };
  fx.H = [md, Njet, Ljet](double, double t, int dt) {
    ScalarJet B = md->B_jet(t, dt);
    ScalarJet h = (Ljet(t, dt) / (B * B) + Njet(t, dt)) * 0.5;
    return h.deriv(dt);
  };

  fx.position = [md](double s, double t, int ds, int dt) {
    const double phi = s / md->f0;
    const double f = (md->B_jet(t, dt) * md->f0).deriv(dt);
    const double zneg = (md->z_jet(t, dt) * -1.0).deriv(dt);
    const double cs = std::cos(phi + 0.5 * kPi * ds) / std::pow(md->f0, ds);
    const double sn = std::sin(phi + 0.5 * kPi * ds) / std::pow(md->f0, ds);
    return std::array<double, 3>{f * cs, f * sn, ds == 0 ? zneg : 0.0};
  };
  fx.normal = [md](double s, double t) {
    const double phi = s / md->f0;
    const double zp = md->zp_of(md->w_at(t), md->Bt_at(t));
    const double fp = md->f0 * md->Bt_at(t);
    // n = -(z' cos, z' sin, f') with g = -z; unit since f'^2 + z'^2 = 1
    return std::array<double, 3>{-zp * std::cos(phi), -zp * std::sin(phi),
                                 -fp};
  };
  return fx;
}

CurvatureProfile curvature_profile(const std::string& id,
                                   const std::map<std::string, double>& params) {
  auto get = [&](const std::string& k, double dflt) {
    auto it = params.find(k);
    return it == params.end() ? dflt : it->second;
  };
  if (id == "torus") {
    const double a = get("a", 1.0), R = get("R", 2.0);
    if (!(a > 0.0) || !(a < R)) throw ProfileInvalid("torus needs 0 < a < R");
    CurvatureProfile p;
    p.kg = -1.0 / R;
    p.t_max = get("t_max", 0.5 * kPi * a);
    p.K = [a, R](double t, int order) {
      ScalarJet s = sin(ScalarJet::variable(t, order) * (1.0 / a));
      return s / ((s * a + R) * a);
    };
    return p;
  }
  if (id == "poly") {
    // K = c t (1 - t/2)
    const double c = get("c", 1.0);
    CurvatureProfile p;
    p.kg = get("kg", -0.5);
    p.t_max = get("t_max", 1.0);
    p.K = [c](double t, int order) {
      ScalarJet u = ScalarJet::variable(t, order);
      return (u * (u * (-0.5) + 1.0)) * c;
    };
    return p;
  }
  throw ProfileInvalid("unknown curvature profile: " + id);
}

// ---------------------------------------------------------------------------

FundamentalForm sample_form(const SurfaceFixture& fx, std::size_t ns,
                            std::size_t nt, double t_end) {
  if (!(t_end > 0.0) || t_end > fx.t_max + 1e-12)
    throw BadParameters("t_end outside the fixture collar");
  std::vector<double> tn(nt);
  for (std::size_t j = 0; j < nt; ++j)
    tn[j] = t_end * static_cast<double>(j) / static_cast<double>(nt - 1);
  FundamentalForm form;
  form.L = Grid2D(tn, ns, fx.period);
  form.M = Grid2D(tn, ns, fx.period);
  form.N = Grid2D(tn, ns, fx.period);
  form.H = Grid2D(tn, ns, fx.period);
  for (std::size_t j = 0; j < nt; ++j)
    for (std::size_t i = 0; i < ns; ++i) {
      const double s = form.L.s_at(i), t = tn[j];
      form.L.at(j, i) = fx.L(s, t, 0);
      form.M.at(j, i) = fx.M(s, t, 0);
      form.N.at(j, i) = fx.N(s, t, 0);
      form.H.at(j, i) = fx.H(s, t, 0);
    }
  return form;
}

PositionIdentityReport position_identities(const SurfaceFixture& fx,
                                           std::size_t ns, std::size_t nt) {
  if (!fx.has_embedding) throw BadParameters("fixture has no embedding");
  GeodesicChart chart = fx.chart(ns, nt);
  const auto& tn = chart.tnodes();
  const double period = fx.period;

  Grid2D rho(tn, ns, period), rdotn(tn, ns, period), rnorm2(tn, ns, period);
  Grid2D Hf(tn, ns, period), Kf(tn, ns, period);
  Grid2D h11(tn, ns, period), h12(tn, ns, period), h22(tn, ns, period);
  for (std::size_t j = 0; j < nt; ++j)
    for (std::size_t i = 0; i < ns; ++i) {
      const double s = rho.s_at(i), t = tn[j];
      const auto r = fx.position(s, t, 0, 0);
      const auto n = fx.normal(s, t);
      const double r2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
      rho.at(j, i) = -0.5 * r2;
      rnorm2.at(j, i) = r2;
      rdotn.at(j, i) = r[0] * n[0] + r[1] * n[1] + r[2] * n[2];
      const double B = chart.B_at(s, t, 0, 0);
      Hf.at(j, i) = fx.H(s, t, 0);
      Kf.at(j, i) = fx.metric.K(s, t, 0, 0);
      h11.at(j, i) = fx.L(s, t, 0) / (B * B);
      h12.at(j, i) = fx.M(s, t, 0) / B;
      h22.at(j, i) = fx.N(s, t, 0);
    }

  // numerical first and second derivatives of rho
  const fd::DerivOp d1(tn, 1, 4), d2(tn, 2, 4);
  Grid2D rs(tn, ns, period), rt(tn, ns, period), rss(tn, ns, period),
      rst(tn, ns, period), rtt(tn, ns, period);
  for (std::size_t j = 0; j < nt; ++j) {
    Profile row = rho.row_profile(j);
    rs.set_row(j, row.derivative(1));
    rss.set_row(j, row.derivative(2));
  }
  parallel_for(ns, [&](std::size_t i) {
    const auto col = rho.column(i);
    for (std::size_t j = 0; j < nt; ++j) {
      rt.at(j, i) = d1.at(col, j);
      rtt.at(j, i) = d2.at(col, j);
    }
  });
  for (std::size_t j = 0; j < nt; ++j)
    rst.set_row(j, rt.row_profile(j).derivative(1));

  PositionIdentityReport rep;
  for (std::size_t j = 0; j < nt; ++j)
    for (std::size_t i = 0; i < ns; ++i) {
      const double s = rho.s_at(i), t = tn[j];
      const auto G = christoffels(chart, s, t);
      const double B = chart.B_at(s, t, 0, 0);
      const double ps = rs.at(j, i), pt = rt.at(j, i);
      const double c_ss = rss.at(j, i) - G[0] * ps - G[3] * pt;
      const double c_st = rst.at(j, i) - G[1] * ps - G[4] * pt;
      const double c_tt = rtt.at(j, i) - G[2] * ps - G[5] * pt;
      const double p11 = c_ss / (B * B), p12 = c_st / B, p22 = c_tt;
      const double grad2 = ps * ps / (B * B) + pt * pt;
      const double K = Kf.at(j, i), Hv = Hf.at(j, i), rn = rdotn.at(j, i);
      const double det_h =
          h11.at(j, i) * h22.at(j, i) - sq(h12.at(j, i)); // = K
      const double hi11 = h22.at(j, i) / det_h, hi22 = h11.at(j, i) / det_h,
                   hi12 = -h12.at(j, i) / det_h;
      const double trace = K * (hi11 * p11 + 2.0 * hi12 * p12 + hi22 * p22);
      rep.max_trace =
          std::max(rep.max_trace, std::abs(trace + 2.0 * Hv + 2.0 * K * rn));
      rep.max_support = std::max(rep.max_support,
                                 std::abs(rn * rn + grad2 - rnorm2.at(j, i)));
      const double detr = (p11 + 1.0) * (p22 + 1.0) - p12 * p12;
      rep.max_det = std::max(
          rep.max_det,
          std::abs(detr - K * (-2.0 * rho.at(j, i) - grad2)));
    }
  return rep;
}

MeanCurvatureBoundReport mean_curvature_bound_check(const SurfaceFixture& fx,
                                                    std::size_t ns,
                                                    std::size_t nt) {
  MeanCurvatureBoundReport rep;
  if (!fx.is_AN) return rep; // not applicable
  rep.applicable = true;
  GeodesicChart chart = fx.chart(ns, nt);
  const auto& tn = chart.tnodes();
  const double period = fx.period;

  double supH = 0.0, supK = 0.0;
  Grid2D Kg(tn, ns, period);
  for (std::size_t j = 0; j < nt; ++j)
    for (std::size_t i = 0; i < ns; ++i) {
      const double s = Kg.s_at(i), t = tn[j];
      supH = std::max(supH, fx.H(s, t, 0));
      const double K = fx.metric.K(s, t, 0, 0);
      Kg.at(j, i) = K;
      supK = std::max(supK, K);
    }

  // boundary sup of sqrt(|grad K| / |k_g|)
  const Profile kg = chart.boundary_geodesic_curvature();
  const Profile Kt0 = chart.K_jet(1).deriv(1);
  Profile Ks0 = chart.K_jet(0).coeff(0).derivative(1);
  double bterm = 0.0;
  for (std::size_t i = 0; i < ns; ++i) {
    const double gradK = std::sqrt(sq(Ks0[i]) + sq(Kt0[i])); // B(s,0) = 1
    bterm = std::max(bterm, std::sqrt(gradK / std::abs(kg[i])));
  }

  // metric Laplacian: (1/B) [ d_s(K_s / B) + d_t(B K_t) ]
  const fd::DerivOp d1(tn, 1, 4);
  Grid2D Kt(tn, ns, period);
  parallel_for(ns, [&](std::size_t i) {
    const auto col = Kg.column(i);
    for (std::size_t j = 0; j < nt; ++j) Kt.at(j, i) = d1.at(col, j);
  });
  Grid2D BKt(tn, ns, period);
  for (std::size_t j = 0; j < nt; ++j) {
    const Profile B = chart.B_row(tn[j], 0, 0);
    for (std::size_t i = 0; i < ns; ++i)
      BKt.at(j, i) = B[i] * Kt.at(j, i);
  }
  double supLap = 0.0;
  Grid2D dBKt(tn, ns, period);
  parallel_for(ns, [&](std::size_t i) {
    const auto col = BKt.column(i);
    for (std::size_t j = 0; j < nt; ++j) dBKt.at(j, i) = d1.at(col, j);
  });
  for (std::size_t j = 0; j < nt; ++j) {
    const Profile B = chart.B_row(tn[j], 0, 0);
    Profile KsB = Kg.row_profile(j).derivative(1) / B;
    Profile dsKsB = KsB.derivative(1);
    for (std::size_t i = 0; i < ns; ++i) {
      const double lap = (dsKsB[i] + dBKt.at(j, i)) / B[i];
      supLap = std::max(supLap, std::abs(lap));
    }
  }

  rep.sup_H = supH;
  rep.boundary_term = bterm;
  rep.sup_K = supK;
  rep.sup_sqrt_lap_K = std::sqrt(supLap);
  rep.length_scale = period;
  rep.implied_C =
      supH / (bterm + period * (supK + rep.sup_sqrt_lap_K));
  return rep;
}

// ---------------------------------------------------------------------------
// registries

namespace {

double param(const std::map<std::string, double>& m, const std::string& k,
             double dflt) {
  auto it = m.find(k);
  return it == m.end() ? dflt : it->second;
}

AnalyticMetric flat_metric() {
  AnalyticMetric g;
  g.B = [](double, double, int ds, int dt) {
    return (ds == 0 && dt == 0) ? 1.0 : 0.0;
  };
  g.K = [](double, double, int, int) { return 0.0; };
  g.max_t_order = 12;
  return g;
}

AnalyticMetric sphere_like_metric() {
  AnalyticMetric g;
  g.B = [](double, double t, int ds, int dt) {
    if (ds > 0) return 0.0;
    return cos(ScalarJet::variable(t, dt)).deriv(dt);
  };
  g.K = [](double, double, int ds, int dt) {
    return (ds == 0 && dt == 0) ? 1.0 : 0.0;
  };
  g.max_t_order = 12;
  return g;
}

// B = B_torus(t) * (1 + eps t^3 cos s); keeps B(.,0) = 1, B_t(.,0) and
// K(.,0) = 0 intact while making every field genuinely s-dependent.
AnalyticMetric perturbed_torus_metric(double a, double R, double eps) {
  auto base = [a, R](double t, int order) {
    return (sin(ScalarJet::variable(t, order) * (1.0 / a)) * a + R) *
           (1.0 / R);
  };
  AnalyticMetric g;
  g.B = [base, eps](double s, double t, int ds, int dt) {
    ScalarJet b = base(t, dt);
    ScalarJet u = ScalarJet::variable(t, dt);
    ScalarJet t3 = u * u * u;
    const double cs = (ds == 0) ? std::cos(s) : std::cos(s + 0.5 * kPi * ds);
    if (ds == 0) return (b * (t3 * (eps * cs) + 1.0)).deriv(dt);
    return (b * t3 * (eps * cs)).deriv(dt);
  };
  g.max_t_order = 12; // K derived from B
  return g;
}

} // namespace

GeodesicChart fixture_chart(const std::string& id,
                            const std::map<std::string, double>& params,
                            std::size_t ns, std::size_t nt,
                            double t_max_override) {
  auto tmax = [&](double dflt) {
    return t_max_override > 0.0 ? t_max_override : param(params, "t_max", dflt);
  };
  if (id == "torus" || id == "revolution_torus" || id == "revolution_poly") {
    SurfaceFixture fx = fixture_by_id(id, params);
    return fx.chart(ns, nt, t_max_override);
  }
  if (id == "flat") {
    GeodesicChart c = build_chart(flat_metric(), param(params, "period", 2.0 * kPi),
                                  tmax(1.0), ns, nt);
    c.set_name("flat");
    return c;
  }
  if (id == "sphere_like") {
    GeodesicChart c = build_chart(sphere_like_metric(),
                                  param(params, "period", 2.0 * kPi),
                                  tmax(1.2), ns, nt);
    c.set_name("sphere_like");
    return c;
  }
  if (id == "perturbed_torus") {
    const double a = param(params, "a", 1.0), R = param(params, "R", 2.0);
    const double eps = param(params, "eps", 0.01);
    GeodesicChart c = build_chart(perturbed_torus_metric(a, R, eps),
                                  2.0 * kPi * R, tmax(0.5 * kPi * a), ns, nt);
    c.set_name("perturbed_torus");
    return c;
  }
  throw ConfigError("unknown chart fixture id: " + id);
}

SurfaceFixture fixture_by_id(const std::string& id,
                             const std::map<std::string, double>& params) {
  if (id == "torus")
    return torus_fixture(param(params, "a", 1.0), param(params, "R", 2.0));
  if (id == "revolution_torus") {
    SurfaceFixture fx = revolution_fixture(curvature_profile("torus", params));
    fx.name = "revolution_torus";
    return fx;
  }
  if (id == "revolution_poly") {
    SurfaceFixture fx = revolution_fixture(curvature_profile("poly", params));
    fx.name = "revolution_poly";
    return fx;
  }
  throw ConfigError("unknown fixture id: " + id);
}

} // namespace ansl

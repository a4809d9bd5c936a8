#include "ansl/jet_recursion.hpp"

#include "ansl/errors.hpp"

#include <cmath>
#include <string>

namespace ansl {

namespace {
constexpr int kMaxJetOrder = 6;
constexpr double kDetFloor = 1e-12;
} // namespace

BoundaryJet boundary_values(const GeodesicChart& chart) {
  const Profile Bt0 = chart.B_jet(1).deriv(1);
  const Profile Kt0 = chart.K_jet(1).deriv(1);
  for (std::size_t i = 0; i < Bt0.size(); ++i) {
    if (!(Kt0[i] > 0.0))
      throw DegenerateBoundaryData("K_t(s,0) <= 0 at s index " +
                                   std::to_string(i));
    if (!(Bt0[i] > 0.0))
      throw DegenerateBoundaryData("B_t(s,0) <= 0 at s index " +
                                   std::to_string(i));
  }
  const std::size_t ns = Bt0.size();
  const double period = Bt0.period();
  Profile N0(ns, period), L1(ns, period);
  for (std::size_t i = 0; i < ns; ++i) {
    N0[i] = std::sqrt(Kt0[i] / Bt0[i]);
    L1[i] = std::sqrt(Kt0[i] * Bt0[i]);
  }
  BoundaryJet jet;
  jet.order = 0;
  jet.M = TJet::zeros(0, ns, period);
  jet.N = TJet::constant(N0, 0);
  jet.L = TJet::zeros(1, ns, period);
  jet.L.coeff(1) = L1;
  return jet;
}

BoundaryJet jet_recursion(const GeodesicChart& chart, int order) {
  if (order > kMaxJetOrder)
    throw InsufficientSmoothness("maximum supported jet order is " +
                                 std::to_string(kMaxJetOrder));
  if (chart.max_t_derivative() < order + 2)
    throw InsufficientSmoothness("chart t-derivatives available to order " +
                                 std::to_string(chart.max_t_derivative()) +
                                 ", need " + std::to_string(order + 2));
  BoundaryJet base = boundary_values(chart);
  const std::size_t ns = base.ns();
  const double period = base.period();
  const int k = order;

  const TJet bj = chart.B_jet(k + 1);
  const TJet kj = chart.K_jet(k + 1);
  const TJet BtB = bj.dt() / bj;       // B_t / B
  const TJet BsB = bj.ds() / bj;       // B_s / B
  const TJet BBt = bj * bj.dt();       // B B_t
  const TJet KB2 = kj * (bj * bj);     // K B^2

  const Profile Bt0 = bj.deriv(1);
  const Profile N0 = base.N.coeff(0);
  const Profile L1 = base.L.coeff(1);

  // State jets padded with zeros above the currently known order; the
  // unknown top coefficients enter the extracted equations linearly and
  // are solved for below.
  TJet L = base.L.truncated(k + 2);
  TJet M = TJet::zeros(k + 2, ns, period);
  TJet N = base.N.truncated(k + 2);

  for (int m = 1; m <= k; ++m) {
    // t-compatibility of M: coefficient m-1 of M_t - N_s + (B_t/B) M.
    {
      TJet G = M.dt() - N.ds() + BtB * M;
      Profile Mm = G.coeff(m - 1) * (-1.0 / static_cast<double>(m));
      M.coeff(m) = Mm;
    }
    // Coefficient m of the first Codazzi equation and coefficient m+1 of
    // the Gauss equation, with the two unknown top coefficients zeroed.
    const TJet R = L.dt() - M.ds() - BtB * L + BsB * M - BBt * N;
    const Profile F1 = R.coeff(m);
    const TJet S = N * L - M * M - KB2;
    const Profile F2 = S.coeff(m + 1);

    Profile Lm1(ns, period), Nm(ns, period);
    const double mp1 = static_cast<double>(m + 1);
    for (std::size_t i = 0; i < ns; ++i) {
      const double det = mp1 * L1[i] + Bt0[i] * N0[i];
      if (!(std::abs(det) > kDetFloor))
        throw SingularJetSystem("determinant " + std::to_string(det) +
                                " at order " + std::to_string(m));
      // [ m+1   -Bt0 ] [L_{m+1}]   [-F1]
      // [ N0     L1  ] [N_m    ] = [-F2]
      Lm1[i] = (-F1[i] * L1[i] - Bt0[i] * F2[i]) / det;
      Nm[i] = (-mp1 * F2[i] + N0[i] * F1[i]) / det;
    }
    L.coeff(m + 1) = Lm1;
    N.coeff(m) = Nm;
  }

  BoundaryJet out;
  out.order = k;
  out.L = L.truncated(k + 1);
  out.M = M.truncated(k);
  out.N = N.truncated(k);
  return out;
}

TJet mean_curvature_jet(const BoundaryJet& jet, const GeodesicChart& chart) {
  const int k = jet.order;
  const TJet bj = chart.B_jet(k);
  const TJet B2 = bj * bj;
  TJet H = (jet.L.truncated(k) / B2 + jet.N) ;
  for (int m = 0; m <= H.order(); ++m) H.coeff(m) *= 0.5;
  return H;
}

} // namespace ansl

#pragma once

#include "ansl/profile.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ansl {

// Rectangular field over a periodic-in-s collar. Storage is t-major:
// value(jt, is) = v[jt * ns + is]; row jt is the s-profile at tnodes[jt].
class Grid2D {
public:
  Grid2D() = default;
  Grid2D(std::vector<double> tnodes, std::size_t ns, double period)
      : tnodes_(std::move(tnodes)), ns_(ns), period_(period),
        v_(tnodes_.size() * ns, 0.0) {}

  std::size_t ns() const { return ns_; }
  std::size_t nt() const { return tnodes_.size(); }
  double period() const { return period_; }
  const std::vector<double>& tnodes() const { return tnodes_; }
  double t_at(std::size_t jt) const { return tnodes_[jt]; }
  double s_at(std::size_t is) const {
    return period_ * static_cast<double>(is) / static_cast<double>(ns_);
  }

  double& at(std::size_t jt, std::size_t is) { return v_[jt * ns_ + is]; }
  double at(std::size_t jt, std::size_t is) const { return v_[jt * ns_ + is]; }
  std::span<double> row(std::size_t jt) { return {v_.data() + jt * ns_, ns_}; }
  std::span<const double> row(std::size_t jt) const {
    return {v_.data() + jt * ns_, ns_};
  }
  Profile row_profile(std::size_t jt) const {
    Profile p(ns_, period_);
    auto r = row(jt);
    for (std::size_t i = 0; i < ns_; ++i) p[i] = r[i];
    return p;
  }
  void set_row(std::size_t jt, const Profile& p) {
    auto r = row(jt);
    for (std::size_t i = 0; i < ns_; ++i) r[i] = p[i];
  }

  std::span<const double> flat() const { return v_; }
  std::span<double> flat() { return v_; }

  // Column copy (s fixed, t varying); used by t-direction stencils.
  std::vector<double> column(std::size_t is) const {
    std::vector<double> c(nt());
    for (std::size_t j = 0; j < nt(); ++j) c[j] = at(j, is);
    return c;
  }

private:
  std::vector<double> tnodes_;
  std::size_t ns_ = 0;
  double period_ = 0.0;
  std::vector<double> v_;
};

} // namespace ansl

#include "ansl/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace ansl::fft {

namespace {

// Plans are created once per size with FFTW_UNALIGNED so they can execute on
// any caller buffer; creation is serialized (FFTW planning is not
// thread-safe), execution on distinct arrays is.
struct PlanPair {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

std::mutex g_plan_mutex;
std::map<std::size_t, PlanPair>& plan_cache() {
  static std::map<std::size_t, PlanPair> cache;
  return cache;
}

PlanPair get_plans(std::size_t n) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto& cache = plan_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<double> re(n);
  std::vector<std::complex<double>> cx(n / 2 + 1);
  PlanPair p;
  p.r2c = fftw_plan_dft_r2c_1d(static_cast<int>(n), re.data(),
                               reinterpret_cast<fftw_complex*>(cx.data()),
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.c2r = fftw_plan_dft_c2r_1d(static_cast<int>(n),
                               reinterpret_cast<fftw_complex*>(cx.data()),
                               re.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache.emplace(n, p);
  return p;
}

} // namespace

void forward(std::span<const double> in, std::vector<std::complex<double>>& out) {
  const std::size_t n = in.size();
  out.assign(n / 2 + 1, {});
  PlanPair p = get_plans(n);
  // FFTW takes non-const input even for out-of-place r2c.
  std::vector<double> tmp(in.begin(), in.end());
  fftw_execute_dft_r2c(p.r2c, tmp.data(),
                       reinterpret_cast<fftw_complex*>(out.data()));
}

void inverse(std::span<const std::complex<double>> in, std::size_t n,
             std::vector<double>& out) {
  out.assign(n, 0.0);
  PlanPair p = get_plans(n);
  std::vector<std::complex<double>> tmp(in.begin(), in.end()); // c2r destroys input
  fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(tmp.data()),
                       out.data());
  const double scale = 1.0 / static_cast<double>(n);
  for (double& x : out) x *= scale;
}

} // namespace ansl::fft

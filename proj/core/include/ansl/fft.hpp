#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ansl::fft {

// Real-to-complex DFT of size n, unnormalized (out has n/2+1 entries).
void forward(std::span<const double> in, std::vector<std::complex<double>>& out);

// Complex-to-real inverse of size n; divides by n so inverse(forward(x)) == x.
void inverse(std::span<const std::complex<double>> in, std::size_t n,
             std::vector<double>& out);

} // namespace ansl::fft

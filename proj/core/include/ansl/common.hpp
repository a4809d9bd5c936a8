#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace ansl {

inline constexpr double kPi = 3.14159265358979323846;

// Worker count used by parallel_for. All numerical results are required to
// be bitwise independent of this setting: parallel regions only ever write
// disjoint elements, and reductions go through fixed-shape trees.
int thread_count();
void set_thread_count(int n);

// Runs fn(i) for i in [0, n). Partitioning may depend on the worker count;
// fn must not perform overlapping writes.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Deterministic summation: fixed binary tree over blocks of 8, independent
// of thread count and platform vector width.
double pairwise_sum(std::span<const double> xs);

inline double sq(double x) { return x * x; }

// Largest |x| in a vector, exact under any reduction order.
double max_abs(std::span<const double> xs);

} // namespace ansl

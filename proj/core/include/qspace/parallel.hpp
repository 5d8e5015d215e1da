#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace qspace {

/// Caps the number of worker threads used by sup searches and mesh sweeps.
/// 0 restores the default (hardware concurrency).
void set_thread_count(unsigned n);
unsigned thread_count();

/// Runs body(i) for i in [0, n). Each index writes only its own output slot,
/// so results do not depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Pairwise (tree) summation; deterministic for a fixed input order.
double pairwise_sum(std::span<const double> values);

}  // namespace qspace

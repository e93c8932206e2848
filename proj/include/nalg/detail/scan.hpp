#ifndef NALG_DETAIL_SCAN_HPP
#define NALG_DETAIL_SCAN_HPP

#include "nalg/element.hpp"

#include <cstddef>
#include <optional>

namespace nalg::detail {

// Smallest index in [0, count) whose probe value is nonzero, or nullopt.
// The index space is partitioned across OpenMP workers and combined with a
// min reduction, so the winner is the global lexicographic minimum no
// matter the thread count or schedule. Callers recompute the defect at the
// winning index.
template <class Probe>
std::optional<std::size_t> first_nonzero_index(std::size_t count, const Probe& probe) {
    const long long n = static_cast<long long>(count);
    long long best = n;
#pragma omp parallel for schedule(static) reduction(min : best)
    for (long long t = 0; t < n; ++t) {
        if (t < best && !probe(static_cast<std::size_t>(t)).is_zero()) best = t;
    }
    if (best == n) return std::nullopt;
    return static_cast<std::size_t>(best);
}

} // namespace nalg::detail

#endif

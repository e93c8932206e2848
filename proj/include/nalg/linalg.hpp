#ifndef NALG_LINALG_HPP
#define NALG_LINALG_HPP

#include "nalg/rational.hpp"

#include <cstddef>
#include <vector>

namespace nalg {

using Vec = std::vector<Rational>;

/// Reduced row echelon form. `rows` holds the nonzero rows with leading 1s,
/// `pivots` the ascending pivot columns. RREF is unique, so the output is
/// canonical for a given row space regardless of input ordering.
struct EchelonForm {
    std::size_t cols = 0;
    std::vector<Vec> rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return rows.size(); }
};

/// Fraction-free (Bareiss) elimination followed by pivot normalization.
/// Pivot selection: leftmost nonzero column, ties broken by lowest row
/// index. Throws if a row length differs from `cols`.
EchelonForm reduced_echelon(const std::vector<Vec>& rows, std::size_t cols);

/// Canonical (RREF) basis of {v : R v = 0}. Empty input yields the
/// standard basis of the full space.
std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t cols);

/// Canonical (RREF) basis of the span of the given vectors.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t cols);

std::size_t rank(const std::vector<Vec>& rows, std::size_t cols);

bool is_zero_vec(const Vec& v);
std::string to_string(const Vec& v); // "(1, -1/2, 0)"

} // namespace nalg

#endif

#include "nalg/linalg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace nalg {

namespace {

// Exact integer quotient; the Bareiss update only ever divides exactly, so
// a nonzero remainder means a broken invariant, not bad input.
mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("inexact division in fraction-free elimination");
    return q;
}

// Clears denominators row-wise: multiplies by the lcm of the denominators.
std::vector<mpz_class> to_integer_row(const Vec& row) {
    mpz_class l(1);
    for (const auto& c : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(row.size());
    for (const auto& c : row) out.push_back(c.get_num() * (l / c.get_den()));
    return out;
}

} // namespace

EchelonForm reduced_echelon(const std::vector<Vec>& rows, std::size_t cols) {
    for (const auto& r : rows)
        if (r.size() != cols)
            throw error(fmt::format("ragged row in elimination: expected {} columns, got {}",
                                    cols, r.size()));

    std::vector<std::vector<mpz_class>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.push_back(to_integer_row(r));

    // Fraction-free (Bareiss) forward elimination. Pivot: leftmost nonzero
    // column, lowest row index among candidates.
    std::vector<std::size_t> pivots;
    mpz_class prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t p = rank;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[rank], m[p]);
        const mpz_class pivot = m[rank][col];
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = exact_div(m[r][c] * pivot - m[r][col] * m[rank][c], prev);
            m[r][col] = 0;
        }
        prev = pivot;
        pivots.push_back(col);
        ++rank;
    }

    // Normalize pivots to 1 and eliminate upwards; RREF is unique, so this
    // output is canonical for the row space.
    EchelonForm out;
    out.cols = cols;
    out.pivots = pivots;
    out.rows.assign(rank, Vec(cols, Rational(0)));
    for (std::size_t r = 0; r < rank; ++r) {
        const Rational inv_pivot = Rational(1) / Rational(m[r][pivots[r]]);
        for (std::size_t c = pivots[r]; c < cols; ++c)
            out.rows[r][c] = Rational(m[r][c]) * inv_pivot;
    }
    for (std::size_t r = rank; r-- > 0;) {
        for (std::size_t r2 = 0; r2 < r; ++r2) {
            const Rational factor = out.rows[r2][pivots[r]];
            if (factor == 0) continue;
            for (std::size_t c = pivots[r]; c < cols; ++c)
                out.rows[r2][c] -= factor * out.rows[r][c];
        }
    }
    return out;
}

std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t cols) {
    const EchelonForm ech = reduced_echelon(rows, cols);

    std::vector<bool> is_pivot(cols, false);
    for (auto p : ech.pivots) is_pivot[p] = true;

    std::vector<Vec> kernel;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < ech.rank(); ++r) v[ech.pivots[r]] = -ech.rows[r][f];
        kernel.push_back(std::move(v));
    }
    // Canonicalize the kernel basis itself.
    return reduced_echelon(kernel, cols).rows;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t cols) {
    return reduced_echelon(vectors, cols).rows;
}

std::size_t rank(const std::vector<Vec>& rows, std::size_t cols) {
    return reduced_echelon(rows, cols).rank();
}

bool is_zero_vec(const Vec& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

std::string to_string(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    return out + ")";
}

} // namespace nalg

#ifndef NALG_STRUCTURE_HPP
#define NALG_STRUCTURE_HPP

#include "nalg/algebra.hpp"
#include "nalg/identities.hpp"
#include "nalg/linalg.hpp"

#include <optional>

namespace nalg {

/// Linear subspace given by a reduced-echelon basis; canonical for a given
/// generating set.
struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<Vec> basis;

    std::size_t dim() const { return basis.size(); }
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& rhs) const {
        return ambient_dim == rhs.ambient_dim && basis == rhs.basis;
    }
};

Subspace make_subspace(const std::vector<Vec>& generators, std::size_t ambient_dim);

/// Complementary grading A = part1 (+) part2 with part1.part1 inside part2
/// and all other products zero (verified at construction).
struct GradedDecomposition {
    Subspace part1;
    Subspace part2;
};

/// The four conditions whose conjunction characterizes symmetric Leibniz
/// algebras in polarized form. All flags are always computed; the witness
/// points at the first failing condition in declaration order.
struct StructureVerdict {
    bool bullet_two_step = true;         // x.(y.z) = 0
    bool bracket_jacobi = true;          // [,] is a Lie bracket
    bool bracket_kills_products = true;  // [x, y.z] = 0
    bool bullet_kills_brackets = true;   // x.[y,z] = 0
    bool is_symmetric_leibniz = true;    // conjunction of the four
    std::optional<Witness> witness;
};

/// Span of all products m(e_i, e_j).
Subspace product_span(const BilinearMap& m);

/// Two-sided annihilator {x : m(x, y) = m(y, x) = 0 for all y}. For
/// symmetric maps the two constraint blocks coincide and are deduplicated.
Subspace center_of(const BilinearMap& m);

/// Span of all bracket values. Requires a skew input.
Subspace derived_subalgebra(const BilinearMap& bracket);

/// Grading of a symmetric Leibniz algebra: part2 is the product span of the
/// commutative part, part1 the complement spanned by standard basis vectors
/// at the non-pivot coordinates. Throws, citing the failing condition, when
/// the commutative part is not 2-step nilpotent commutative associative.
GradedDecomposition graded_basis(const Algebra& a);

StructureVerdict structure_verdict(const Algebra& a);

/// Verdict for an explicitly given (bullet, bracket) pair.
StructureVerdict verdict_for_pair(const BilinearMap& bullet, const BilinearMap& bracket);

/// Checks derived([,]) inside center(.) and the product span of . inside
/// center([,]) and center(.). Informational for non symmetric Leibniz input.
IdentityReport check_center_containments(const Algebra& a);

} // namespace nalg

#endif

#ifndef NALG_IDENTITIES_HPP
#define NALG_IDENTITIES_HPP

#include "nalg/algebra.hpp"
#include "nalg/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nalg {

enum class IdentityKind {
    Associative,
    Commutative,
    Skew,
    Jacobi,
    Lie,
    WeaklyAssociative,
    LeftLeibniz,
    RightLeibniz,
    SymmetricLeibniz,
    LieAdmissible,
    TwoStepNilpotent,
};

const char* to_string(IdentityKind kind);
std::optional<IdentityKind> identity_kind_from_string(std::string_view name);
const std::vector<IdentityKind>& all_identity_kinds();

/// First failing basis triple in lexicographic (i, j, k) order, with the
/// nonzero defect there. Binary identities use k = 0. For compound checks
/// `component` names the sub-identity that failed.
struct Witness {
    std::size_t i = 0, j = 0, k = 0;
    std::string component;
    Element defect;
};

struct IdentityReport {
    std::string identity_name;
    bool holds = true;
    std::optional<Witness> witness;
};

/// x*(y*z) - (x*y)*z. Dimension mismatches name both dimensions.
Element associator(const Algebra& a, const Element& x, const Element& y, const Element& z);

/// Defect of weak associativity: A(x,y,z) + A(y,z,x) - A(y,x,z).
Element wa_defect(const Algebra& a, const Element& x, const Element& y, const Element& z);

/// x*(y*z) + (y*z)*x, the anticommutator of x with the product y*z.
Element product_anticommutator(const Algebra& a, const Element& x, const Element& y,
                               const Element& z);

/// Decides one identity by scanning all basis tuples; multilinearity makes
/// the basis scan complete. The witness is the lexicographically first
/// failure, so reports are stable across runs and worker counts.
IdentityReport check_identity(const BilinearMap& m, IdentityKind kind);
IdentityReport check_identity(const Algebra& a, IdentityKind kind);

/// Holds iff x -> ad_x = L_x - R_x is a derivation of the product for every
/// basis x. Agrees with the weakly_associative kind on every algebra.
IdentityReport check_commutator_derivation(const Algebra& a);

/// Compatibility identity b(p(x,y),z) - p(x,b(y,z)) - p(b(x,z),y) = 0.
IdentityReport leibniz_compat(const BilinearMap& product, const BilinearMap& bracket);

/// Universal identity relating the associator of the symmetrized product to
/// an alternating sum of product anticommutators. Holds for every algebra;
/// exists as a cross-check of the implementation, not of the input.
IdentityReport check_polarization_associator_identity(const Algebra& a);

/// One-operation characterization: holds iff the algebra is the
/// depolarization of a Poisson algebra.
/// 3(x*y)*z - 3x*(y*z) = (x*z)*y + (y*z)*x - (y*x)*z - (z*x)*y.
IdentityReport check_poisson_depolarization_identity(const Algebra& a);

} // namespace nalg

#endif

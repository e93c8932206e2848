#ifndef NALG_DEFORMATION_HPP
#define NALG_DEFORMATION_HPP

#include "nalg/algebra.hpp"
#include "nalg/identities.hpp"
#include "nalg/tensor.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace nalg {

/// Truncated formal deformation of a commutative base product:
/// x *_t y = x*y + sum_i t^i phi_i(x, y), computed mod t^{order+1}.
/// Fewer maps than the order means the missing ones are zero.
struct TruncatedDeformation {
    Algebra base;
    std::vector<BilinearMap> phis; // phi_1 .. phi_N
    std::size_t order = 0;
};

/// Validates dimensions, that the list is no longer than the order, and
/// that the base is commutative (non-commutative bases are rejected, not
/// silently accepted).
TruncatedDeformation make_truncated_deformation(Algebra base, std::vector<BilinearMap> phis,
                                                std::size_t order);

/// Truncated power-series vector: coefficient per power of t, 0..order.
struct SeriesElement {
    std::vector<Element> coeffs;

    std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool is_zero() const;

    SeriesElement& operator+=(const SeriesElement& rhs);
    SeriesElement& operator-=(const SeriesElement& rhs);
    friend SeriesElement operator+(SeriesElement lhs, const SeriesElement& rhs) { return lhs += rhs; }
    friend SeriesElement operator-(SeriesElement lhs, const SeriesElement& rhs) { return lhs -= rhs; }
    bool operator==(const SeriesElement& rhs) const { return coeffs == rhs.coeffs; }
};

/// Degree-0 series with the given constant coefficient.
SeriesElement constant_series(const Element& value, std::size_t order);

/// Cauchy product through the truncation order: the degree-k coefficient is
/// sum over a+b+c = k of phi_a(x_b, y_c) with phi_0 the base product.
SeriesElement deformed_product(const TruncatedDeformation& d, const SeriesElement& x,
                               const SeriesElement& y);

/// Per-degree defect tensors of the two deformed Leibniz identities
///   x(yz) - (xy)z - y(xz)   and   y(zx) - (yz)x + (yx)z
/// (all products *_t), expanded on basis triples.
struct DegreeDefects {
    TrilinearMap first;
    TrilinearMap second;
};
std::vector<DegreeDefects> identity_defects_by_degree(const TruncatedDeformation& d);

struct DeformationWitness {
    std::size_t degree = 0;
    int identity = 1; // 1 or 2
    std::size_t i = 0, j = 0, k = 0;
    Element defect;
};

struct DeformationReport {
    bool holds = true;
    std::vector<bool> degree_ok; // one entry per degree 0..order
    std::optional<DeformationWitness> witness; // lowest degree, then lex
};

DeformationReport truncated_identity_check(const TruncatedDeformation& d);

/// Order-1 condition for the left identity:
/// phi(x, yz) - phi(xy, z) - phi(y, xz) + x phi(y,z) - phi(x,y) z - y phi(x,z).
/// Requires a commutative base.
TrilinearMap order1_defect_left(const Algebra& base, const BilinearMap& phi);

/// Order-1 condition for the right identity:
/// phi(y, zx) - phi(yz, x) + phi(yx, z) + y phi(z,x) - phi(y,z) x + phi(y,x) z.
TrilinearMap order1_defect_right(const Algebra& base, const BilinearMap& phi);

/// Order-2 conditions: the two degree-2 coefficients of the deformed
/// identities for the truncation (phi1, phi2). Both zero iff the
/// deformation extends to order 2 with the given phi2.
std::pair<TrilinearMap, TrilinearMap> order2_obstruction(const Algebra& base,
                                                         const BilinearMap& phi1,
                                                         const BilinearMap& phi2);

/// Exact decomposition phi = rho + psi into symmetric and skew parts.
struct SplitMap {
    BilinearMap rho; // symmetric
    BilinearMap psi; // skew
};
SplitMap split(const BilinearMap& phi);

/// Verdict on a valid first-order deformation direction phi1 of a
/// commutative symmetric Leibniz base: (a) the skew part psi is a Lie
/// bracket, (b) (base, psi) is a nonassociative Poisson algebra, and
/// (c) psi(x,y)*z - psi(z,x)*y = 0 on all basis triples. Preconditions
/// (base commutative, base symmetric Leibniz, both order-1 defects zero)
/// are enforced with errors that say which one failed.
struct DeformationDirectionReport {
    IdentityReport psi_jacobi;
    IdentityReport poisson;
    IdentityReport bracket_product_relation;

    bool all_hold() const {
        return psi_jacobi.holds && poisson.holds && bracket_product_relation.holds;
    }
};
DeformationDirectionReport verify_deformation_direction(const Algebra& base,
                                                        const BilinearMap& phi1);

/// Internal consequence checks used by the direction verdict's test suite.
/// Mixed part: y*rho(x,z) + rho(y, z*x) + psi(y, x*z).
TrilinearMap mixed_part_defect(const Algebra& base, const BilinearMap& phi);
/// Weighted skew relation: psi(y,z)*x + psi(x,y)*z - 3 psi(z,x)*y.
TrilinearMap skew_weight_defect(const Algebra& base, const BilinearMap& phi);

} // namespace nalg

#endif

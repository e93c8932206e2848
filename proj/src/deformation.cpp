#include "nalg/deformation.hpp"

#include "nalg/polar.hpp"

#include <fmt/format.h>

namespace nalg {

namespace {

void require_commutative(const Algebra& base, const char* what) {
    const auto comm = check_identity(base, IdentityKind::Commutative);
    if (!comm.holds)
        throw error(fmt::format("{} requires a commutative base: e{}*e{} differs from e{}*e{}",
                                what, comm.witness->i, comm.witness->j, comm.witness->j,
                                comm.witness->i));
}

void require_same_dim(const Algebra& base, const BilinearMap& phi, const char* what) {
    if (base.dim != phi.dim)
        throw error(fmt::format("dimension mismatch in {}: base has dim {}, map has dim {}", what,
                                base.dim, phi.dim));
}

} // namespace

TruncatedDeformation make_truncated_deformation(Algebra base, std::vector<BilinearMap> phis,
                                                std::size_t order) {
    for (std::size_t i = 0; i < phis.size(); ++i)
        if (phis[i].dim != base.dim)
            throw error(fmt::format(
                "dimension mismatch in deformation: base has dim {}, phi_{} has dim {}", base.dim,
                i + 1, phis[i].dim));
    if (phis.size() > order)
        throw error(fmt::format("deformation with {} maps exceeds truncation order {}",
                                phis.size(), order));
    require_commutative(base, "a truncated deformation");
    TruncatedDeformation d;
    d.base = std::move(base);
    d.phis = std::move(phis);
    d.order = order;
    return d;
}

bool SeriesElement::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

SeriesElement& SeriesElement::operator+=(const SeriesElement& rhs) {
    if (coeffs.size() != rhs.coeffs.size())
        throw error(fmt::format("series order mismatch: {} vs {}", coeffs.size() - 1,
                                rhs.coeffs.size() - 1));
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += rhs.coeffs[i];
    return *this;
}

SeriesElement& SeriesElement::operator-=(const SeriesElement& rhs) {
    if (coeffs.size() != rhs.coeffs.size())
        throw error(fmt::format("series order mismatch: {} vs {}", coeffs.size() - 1,
                                rhs.coeffs.size() - 1));
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= rhs.coeffs[i];
    return *this;
}

SeriesElement constant_series(const Element& value, std::size_t order) {
    SeriesElement s;
    s.coeffs.assign(order + 1, zero_element(value.dim()));
    s.coeffs[0] = value;
    return s;
}

SeriesElement deformed_product(const TruncatedDeformation& d, const SeriesElement& x,
                               const SeriesElement& y) {
    if (x.coeffs.size() != d.order + 1 || y.coeffs.size() != d.order + 1)
        throw error(fmt::format("series order mismatch: deformation order {}, arguments {} and {}",
                                d.order, x.coeffs.size() - 1, y.coeffs.size() - 1));
    SeriesElement out;
    out.coeffs.assign(d.order + 1, zero_element(d.base.dim));
    for (std::size_t k = 0; k <= d.order; ++k) {
        for (std::size_t a = 0; a <= k && a <= d.phis.size(); ++a) {
            const BilinearMap& map = (a == 0) ? d.base.mult : d.phis[a - 1];
            for (std::size_t b = 0; b + a <= k; ++b)
                out.coeffs[k] += evaluate(map, x.coeffs[b], y.coeffs[k - a - b]);
        }
    }
    return out;
}

std::vector<DegreeDefects> identity_defects_by_degree(const TruncatedDeformation& d) {
    const std::size_t n = d.base.dim;
    const std::size_t order = d.order;
    std::vector<DegreeDefects> out(order + 1);
    for (auto& deg : out) {
        deg.first = TrilinearMap::zero(n);
        deg.second = TrilinearMap::zero(n);
    }

    const long long triples = static_cast<long long>(n) * n * n;
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < triples; ++t) {
        const std::size_t i = static_cast<std::size_t>(t) / (n * n);
        const std::size_t j = (static_cast<std::size_t>(t) / n) % n;
        const std::size_t k = static_cast<std::size_t>(t) % n;
        const SeriesElement X = constant_series(basis_element(n, i), order);
        const SeriesElement Y = constant_series(basis_element(n, j), order);
        const SeriesElement Z = constant_series(basis_element(n, k), order);
        auto prod = [&](const SeriesElement& a, const SeriesElement& b) {
            return deformed_product(d, a, b);
        };
        // x(yz) - (xy)z - y(xz) and y(zx) - (yz)x + (yx)z, all products *_t.
        SeriesElement first = prod(X, prod(Y, Z));
        first -= prod(prod(X, Y), Z);
        first -= prod(Y, prod(X, Z));
        SeriesElement second = prod(Y, prod(Z, X));
        second -= prod(prod(Y, Z), X);
        second += prod(prod(Y, X), Z);
        for (std::size_t deg = 0; deg <= order; ++deg) {
            out[deg].first.set(i, j, k, first.coeffs[deg]);
            out[deg].second.set(i, j, k, second.coeffs[deg]);
        }
    }
    return out;
}

DeformationReport truncated_identity_check(const TruncatedDeformation& d) {
    const auto defects = identity_defects_by_degree(d);
    const std::size_t n = d.base.dim;

    DeformationReport report;
    report.degree_ok.assign(d.order + 1, true);
    for (std::size_t deg = 0; deg <= d.order; ++deg) {
        const bool ok = defects[deg].first.is_zero() && defects[deg].second.is_zero();
        report.degree_ok[deg] = ok;
        if (ok || report.witness) continue;
        report.holds = false;
        // Witness: lowest degree, then lexicographic triple, first identity
        // checked before the second at each triple.
        for (std::size_t i = 0; i < n && !report.witness; ++i)
            for (std::size_t j = 0; j < n && !report.witness; ++j)
                for (std::size_t k = 0; k < n && !report.witness; ++k) {
                    Element v1 = defects[deg].first.value(i, j, k);
                    if (!v1.is_zero()) {
                        report.witness = DeformationWitness{deg, 1, i, j, k, std::move(v1)};
                        break;
                    }
                    Element v2 = defects[deg].second.value(i, j, k);
                    if (!v2.is_zero())
                        report.witness = DeformationWitness{deg, 2, i, j, k, std::move(v2)};
                }
    }
    report.holds = report.holds && !report.witness;
    return report;
}

TrilinearMap order1_defect_left(const Algebra& base, const BilinearMap& phi) {
    require_same_dim(base, phi, "order1_defect_left");
    require_commutative(base, "order1_defect_left");
    const BilinearMap& m = base.mult;
    const std::size_t n = m.dim;
    TrilinearMap out = TrilinearMap::zero(n);
    const long long triples = static_cast<long long>(n) * n * n;
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < triples; ++t) {
        const std::size_t i = static_cast<std::size_t>(t) / (n * n);
        const std::size_t j = (static_cast<std::size_t>(t) / n) % n;
        const std::size_t k = static_cast<std::size_t>(t) % n;
        // phi(x, yz) - phi(xy, z) - phi(y, xz) + x phi(y,z) - phi(x,y) z - y phi(x,z)
        Element v = left_mul(phi, i, m.row(j, k));
        v -= right_mul(phi, m.row(i, j), k);
        v -= left_mul(phi, j, m.row(i, k));
        v += left_mul(m, i, phi.row(j, k));
        v -= right_mul(m, phi.row(i, j), k);
        v -= left_mul(m, j, phi.row(i, k));
        out.set(i, j, k, v);
    }
    return out;
}

TrilinearMap order1_defect_right(const Algebra& base, const BilinearMap& phi) {
    require_same_dim(base, phi, "order1_defect_right");
    require_commutative(base, "order1_defect_right");
    const BilinearMap& m = base.mult;
    const std::size_t n = m.dim;
    TrilinearMap out = TrilinearMap::zero(n);
    const long long triples = static_cast<long long>(n) * n * n;
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < triples; ++t) {
        const std::size_t i = static_cast<std::size_t>(t) / (n * n);
        const std::size_t j = (static_cast<std::size_t>(t) / n) % n;
        const std::size_t k = static_cast<std::size_t>(t) % n;
        // phi(y, zx) - phi(yz, x) + phi(yx, z) + y phi(z,x) - phi(y,z) x + phi(y,x) z
        Element v = left_mul(phi, j, m.row(k, i));
        v -= right_mul(phi, m.row(j, k), i);
        v += right_mul(phi, m.row(j, i), k);
        v += left_mul(m, j, phi.row(k, i));
        v -= right_mul(m, phi.row(j, k), i);
        v += right_mul(m, phi.row(j, i), k);
        out.set(i, j, k, v);
    }
    return out;
}

std::pair<TrilinearMap, TrilinearMap> order2_obstruction(const Algebra& base,
                                                         const BilinearMap& phi1,
                                                         const BilinearMap& phi2) {
    require_same_dim(base, phi1, "order2_obstruction");
    require_same_dim(base, phi2, "order2_obstruction");
    require_commutative(base, "order2_obstruction");
    const std::size_t n = base.dim;
    TrilinearMap first = order1_defect_left(base, phi2);
    TrilinearMap second = order1_defect_right(base, phi2);
    const long long triples = static_cast<long long>(n) * n * n;
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < triples; ++t) {
        const std::size_t i = static_cast<std::size_t>(t) / (n * n);
        const std::size_t j = (static_cast<std::size_t>(t) / n) % n;
        const std::size_t k = static_cast<std::size_t>(t) % n;
        // A_phi1(x,y,z) - phi1(y, phi1(x,z)) + delta phi2 (left part)
        Element v1 = left_mul(phi1, i, phi1.row(j, k));
        v1 -= right_mul(phi1, phi1.row(i, j), k);
        v1 -= left_mul(phi1, j, phi1.row(i, k));
        v1 += first.value(i, j, k);
        first.set(i, j, k, v1);
        // A_phi1(y,z,x) + phi1(phi1(y,x), z) + delta phi2 (right part)
        Element v2 = left_mul(phi1, j, phi1.row(k, i));
        v2 -= right_mul(phi1, phi1.row(j, k), i);
        v2 += right_mul(phi1, phi1.row(j, i), k);
        v2 += second.value(i, j, k);
        second.set(i, j, k, v2);
    }
    return {std::move(first), std::move(second)};
}

SplitMap split(const BilinearMap& phi) {
    return {symmetric_part(phi), skew_part(phi)};
}

DeformationDirectionReport verify_deformation_direction(const Algebra& base,
                                                        const BilinearMap& phi1) {
    require_same_dim(base, phi1, "verify_deformation_direction");
    require_commutative(base, "verify_deformation_direction");
    {
        const auto sl = check_identity(base, IdentityKind::SymmetricLeibniz);
        if (!sl.holds)
            throw error(fmt::format(
                "base is not a symmetric Leibniz algebra: {} fails at (e{}, e{}, e{})",
                sl.witness->component, sl.witness->i, sl.witness->j, sl.witness->k));
    }
    {
        const TrilinearMap left = order1_defect_left(base, phi1);
        if (!left.is_zero())
            throw error("phi1 is not a valid order-1 direction: the left order-1 condition is nonzero");
        const TrilinearMap right = order1_defect_right(base, phi1);
        if (!right.is_zero())
            throw error("phi1 is not a valid order-1 direction: the right order-1 condition is nonzero");
    }

    const BilinearMap psi = skew_part(phi1);
    DeformationDirectionReport out;
    out.psi_jacobi = check_identity(psi, IdentityKind::Jacobi);
    out.psi_jacobi.identity_name = "psi_jacobi";
    out.poisson = is_nonassociative_poisson(make_polar_pair(base.mult, psi));

    const std::size_t n = base.dim;
    const std::size_t n2 = n * n;
    IdentityReport rel;
    rel.identity_name = "bracket_product_relation";
    for (std::size_t t = 0; t < n * n2; ++t) {
        const std::size_t i = t / n2, j = (t / n) % n, k = t % n;
        // psi(x,y)*z - psi(z,x)*y
        Element v = right_mul(base.mult, psi.row(i, j), k);
        v -= right_mul(base.mult, psi.row(k, i), j);
        if (!v.is_zero()) {
            rel.holds = false;
            rel.witness = Witness{i, j, k, "", std::move(v)};
            break;
        }
    }
    out.bracket_product_relation = std::move(rel);
    return out;
}

TrilinearMap mixed_part_defect(const Algebra& base, const BilinearMap& phi) {
    require_same_dim(base, phi, "mixed_part_defect");
    require_commutative(base, "mixed_part_defect");
    const auto [rho, psi] = split(phi);
    const BilinearMap& m = base.mult;
    const std::size_t n = m.dim;
    TrilinearMap out = TrilinearMap::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                // y*rho(x,z) + rho(y, z*x) + psi(y, x*z)
                Element v = left_mul(m, j, rho.row(i, k));
                v += left_mul(rho, j, m.row(k, i));
                v += left_mul(psi, j, m.row(i, k));
                out.set(i, j, k, v);
            }
    return out;
}

TrilinearMap skew_weight_defect(const Algebra& base, const BilinearMap& phi) {
    require_same_dim(base, phi, "skew_weight_defect");
    require_commutative(base, "skew_weight_defect");
    const BilinearMap psi = skew_part(phi);
    const BilinearMap& m = base.mult;
    const std::size_t n = m.dim;
    TrilinearMap out = TrilinearMap::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                // psi(y,z)*x + psi(x,y)*z - 3 psi(z,x)*y
                Element v = right_mul(m, psi.row(j, k), i);
                v += right_mul(m, psi.row(i, j), k);
                Element last = right_mul(m, psi.row(k, i), j);
                last *= Rational(3);
                v -= last;
                out.set(i, j, k, v);
            }
    return out;
}

} // namespace nalg

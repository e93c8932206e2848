#include "nalg/identities.hpp"

#include "nalg/detail/scan.hpp"

#include <fmt/format.h>

#include <array>

namespace nalg {

const char* to_string(IdentityKind kind) {
    switch (kind) {
    case IdentityKind::Associative: return "associative";
    case IdentityKind::Commutative: return "commutative";
    case IdentityKind::Skew: return "skew";
    case IdentityKind::Jacobi: return "jacobi";
    case IdentityKind::Lie: return "lie";
    case IdentityKind::WeaklyAssociative: return "weakly_associative";
    case IdentityKind::LeftLeibniz: return "left_leibniz";
    case IdentityKind::RightLeibniz: return "right_leibniz";
    case IdentityKind::SymmetricLeibniz: return "symmetric_leibniz";
    case IdentityKind::LieAdmissible: return "lie_admissible";
    case IdentityKind::TwoStepNilpotent: return "two_step_nilpotent";
    }
    return "?";
}

const std::vector<IdentityKind>& all_identity_kinds() {
    static const std::vector<IdentityKind> kinds = {
        IdentityKind::Associative,    IdentityKind::Commutative,
        IdentityKind::Skew,           IdentityKind::Jacobi,
        IdentityKind::Lie,            IdentityKind::WeaklyAssociative,
        IdentityKind::LeftLeibniz,    IdentityKind::RightLeibniz,
        IdentityKind::SymmetricLeibniz, IdentityKind::LieAdmissible,
        IdentityKind::TwoStepNilpotent,
    };
    return kinds;
}

std::optional<IdentityKind> identity_kind_from_string(std::string_view name) {
    for (auto kind : all_identity_kinds())
        if (name == to_string(kind)) return kind;
    return std::nullopt;
}

namespace {

void require_same_dim(const Algebra& a, const Element& x, const char* what) {
    if (x.dim() != a.dim)
        throw error(fmt::format("dimension mismatch in {}: algebra has dim {}, element has dim {}",
                                what, a.dim, x.dim()));
}

// Basis-level defect evaluators. Products of basis vectors are tensor rows,
// so each defect costs O(n^2) rational operations.

Element assoc_defect(const BilinearMap& m, std::size_t i, std::size_t j, std::size_t k) {
    Element out = left_mul(m, i, m.row(j, k));
    out -= right_mul(m, m.row(i, j), k);
    return out;
}

Element comm_defect(const BilinearMap& m, std::size_t i, std::size_t j) {
    Element out = basis_product(m, i, j);
    out -= basis_product(m, j, i);
    return out;
}

Element skew_defect(const BilinearMap& m, std::size_t i, std::size_t j) {
    Element out = basis_product(m, i, j);
    out += basis_product(m, j, i);
    return out;
}

Element jacobi_defect(const BilinearMap& m, std::size_t i, std::size_t j, std::size_t k) {
    Element out = left_mul(m, i, m.row(j, k));
    out += left_mul(m, j, m.row(k, i));
    out += left_mul(m, k, m.row(i, j));
    return out;
}

Element wa_defect_basis(const BilinearMap& m, std::size_t i, std::size_t j, std::size_t k) {
    Element out = assoc_defect(m, i, j, k);
    out += assoc_defect(m, j, k, i);
    out -= assoc_defect(m, j, i, k);
    return out;
}

Element left_leibniz_defect(const BilinearMap& m, std::size_t i, std::size_t j, std::size_t k) {
    Element out = left_mul(m, i, m.row(j, k));
    out -= right_mul(m, m.row(i, j), k);
    out -= left_mul(m, j, m.row(i, k));
    return out;
}

Element right_leibniz_defect(const BilinearMap& m, std::size_t i, std::size_t j, std::size_t k) {
    Element out = right_mul(m, m.row(j, k), i);
    out -= right_mul(m, m.row(j, i), k);
    out -= left_mul(m, j, m.row(k, i));
    return out;
}

Element anticommutator_defect(const BilinearMap& m, std::size_t i, std::size_t j, std::size_t k) {
    Element out = left_mul(m, i, m.row(j, k));
    out += right_mul(m, m.row(j, k), i);
    return out;
}

struct ScanResult {
    bool holds = true;
    std::optional<Witness> witness;
};

// Scans all basis triples; defect(i, j, k) decides. `component` labels the
// sub-identity in compound reports.
template <class Defect>
ScanResult scan_triples(std::size_t dim, const char* component, const Defect& defect) {
    const std::size_t n2 = dim * dim;
    auto probe = [&](std::size_t t) { return defect(t / n2, (t / dim) % dim, t % dim); };
    ScanResult out;
    if (auto hit = detail::first_nonzero_index(dim * n2, probe)) {
        out.holds = false;
        Witness w;
        w.i = *hit / n2;
        w.j = (*hit / dim) % dim;
        w.k = *hit % dim;
        w.component = component ? component : "";
        w.defect = probe(*hit);
        out.witness = std::move(w);
    }
    return out;
}

template <class Defect>
ScanResult scan_pairs(std::size_t dim, const char* component, const Defect& defect) {
    auto probe = [&](std::size_t t) { return defect(t / dim, t % dim); };
    ScanResult out;
    if (auto hit = detail::first_nonzero_index(dim * dim, probe)) {
        out.holds = false;
        Witness w;
        w.i = *hit / dim;
        w.j = *hit % dim;
        w.k = 0;
        w.component = component ? component : "";
        w.defect = probe(*hit);
        out.witness = std::move(w);
    }
    return out;
}

// Two defects per triple, checked in order at each triple; the flattened
// min keeps the lexicographically-first-triple convention.
template <class DefectA, class DefectB>
ScanResult scan_triples2(std::size_t dim, const char* comp_a, const char* comp_b,
                         const DefectA& da, const DefectB& db) {
    const std::size_t n2 = dim * dim;
    auto probe = [&](std::size_t t) {
        const std::size_t tri = t / 2;
        const std::size_t i = tri / n2, j = (tri / dim) % dim, k = tri % dim;
        return (t % 2 == 0) ? da(i, j, k) : db(i, j, k);
    };
    ScanResult out;
    if (auto hit = detail::first_nonzero_index(2 * dim * n2, probe)) {
        out.holds = false;
        const std::size_t tri = *hit / 2;
        Witness w;
        w.i = tri / n2;
        w.j = (tri / dim) % dim;
        w.k = tri % dim;
        w.component = (*hit % 2 == 0) ? comp_a : comp_b;
        w.defect = probe(*hit);
        out.witness = std::move(w);
    }
    return out;
}

IdentityReport report_from(const char* name, ScanResult&& scan) {
    IdentityReport r;
    r.identity_name = name;
    r.holds = scan.holds;
    r.witness = std::move(scan.witness);
    return r;
}

} // namespace

Element associator(const Algebra& a, const Element& x, const Element& y, const Element& z) {
    require_same_dim(a, x, "associator");
    require_same_dim(a, y, "associator");
    require_same_dim(a, z, "associator");
    const BilinearMap& m = a.mult;
    Element out = evaluate(m, x, evaluate(m, y, z));
    out -= evaluate(m, evaluate(m, x, y), z);
    return out;
}

Element wa_defect(const Algebra& a, const Element& x, const Element& y, const Element& z) {
    Element out = associator(a, x, y, z);
    out += associator(a, y, z, x);
    out -= associator(a, y, x, z);
    return out;
}

Element product_anticommutator(const Algebra& a, const Element& x, const Element& y,
                               const Element& z) {
    require_same_dim(a, x, "product_anticommutator");
    require_same_dim(a, y, "product_anticommutator");
    require_same_dim(a, z, "product_anticommutator");
    const BilinearMap& m = a.mult;
    const Element yz = evaluate(m, y, z);
    Element out = evaluate(m, x, yz);
    out += evaluate(m, yz, x);
    return out;
}

IdentityReport check_identity(const BilinearMap& m, IdentityKind kind) {
    const std::size_t n = m.dim;
    const char* name = to_string(kind);
    switch (kind) {
    case IdentityKind::Associative:
        return report_from(name, scan_triples(n, nullptr, [&](auto i, auto j, auto k) {
                               return assoc_defect(m, i, j, k);
                           }));
    case IdentityKind::Commutative:
        return report_from(name, scan_pairs(n, nullptr, [&](auto i, auto j) {
                               return comm_defect(m, i, j);
                           }));
    case IdentityKind::Skew:
        return report_from(name, scan_pairs(n, nullptr, [&](auto i, auto j) {
                               return skew_defect(m, i, j);
                           }));
    case IdentityKind::Jacobi:
        return report_from(name, scan_triples(n, nullptr, [&](auto i, auto j, auto k) {
                               return jacobi_defect(m, i, j, k);
                           }));
    case IdentityKind::Lie: {
        auto skew = scan_pairs(n, "skew", [&](auto i, auto j) { return skew_defect(m, i, j); });
        if (!skew.holds) return report_from(name, std::move(skew));
        return report_from(name, scan_triples(n, "jacobi", [&](auto i, auto j, auto k) {
                               return jacobi_defect(m, i, j, k);
                           }));
    }
    case IdentityKind::WeaklyAssociative:
        return report_from(name, scan_triples(n, nullptr, [&](auto i, auto j, auto k) {
                               return wa_defect_basis(m, i, j, k);
                           }));
    case IdentityKind::LeftLeibniz:
        return report_from(name, scan_triples(n, nullptr, [&](auto i, auto j, auto k) {
                               return left_leibniz_defect(m, i, j, k);
                           }));
    case IdentityKind::RightLeibniz:
        return report_from(name, scan_triples(n, nullptr, [&](auto i, auto j, auto k) {
                               return right_leibniz_defect(m, i, j, k);
                           }));
    case IdentityKind::SymmetricLeibniz:
        return report_from(
            name, scan_triples2(
                      n, "left_leibniz", "right_leibniz",
                      [&](auto i, auto j, auto k) { return left_leibniz_defect(m, i, j, k); },
                      [&](auto i, auto j, auto k) { return right_leibniz_defect(m, i, j, k); }));
    case IdentityKind::LieAdmissible: {
        const BilinearMap bracket = skew_part(m);
        return report_from(name, scan_triples(n, nullptr, [&](auto i, auto j, auto k) {
                               return jacobi_defect(bracket, i, j, k);
                           }));
    }
    case IdentityKind::TwoStepNilpotent:
        return report_from(
            name, scan_triples2(
                      n, "left_nested_product", "right_nested_product",
                      [&](auto i, auto j, auto k) { return right_mul(m, m.row(i, j), k); },
                      [&](auto i, auto j, auto k) { return left_mul(m, i, m.row(j, k)); }));
    }
    throw error("unknown identity kind");
}

IdentityReport check_identity(const Algebra& a, IdentityKind kind) {
    return check_identity(a.mult, kind);
}

IdentityReport check_commutator_derivation(const Algebra& a) {
    const BilinearMap& m = a.mult;
    // ad_x(y*z) - ad_x(y)*z - y*ad_x(z) with ad_x = L_x - R_x.
    auto defect = [&](std::size_t i, std::size_t j, std::size_t k) {
        const auto jk = m.row(j, k);
        Element out = left_mul(m, i, jk);
        out -= right_mul(m, jk, i);
        Element ad_j = basis_product(m, i, j);
        ad_j -= basis_product(m, j, i);
        out -= right_mul(m, as_span(ad_j), k);
        Element ad_k = basis_product(m, i, k);
        ad_k -= basis_product(m, k, i);
        out -= left_mul(m, j, as_span(ad_k));
        return out;
    };
    return report_from("commutator_derivation", scan_triples(m.dim, nullptr, defect));
}

IdentityReport leibniz_compat(const BilinearMap& product, const BilinearMap& bracket) {
    if (product.dim != bracket.dim)
        throw error(fmt::format(
            "dimension mismatch in leibniz_compat: product has dim {}, bracket has dim {}",
            product.dim, bracket.dim));
    auto defect = [&](std::size_t i, std::size_t j, std::size_t k) {
        Element out = right_mul(bracket, product.row(i, j), k);
        out -= left_mul(product, i, bracket.row(j, k));
        out -= right_mul(product, bracket.row(i, k), j);
        return out;
    };
    return report_from("leibniz_compat", scan_triples(product.dim, nullptr, defect));
}

IdentityReport check_polarization_associator_identity(const Algebra& a) {
    const BilinearMap& m = a.mult;
    const BilinearMap bullet = symmetric_part(m);
    auto defect = [&](std::size_t i, std::size_t j, std::size_t k) {
        Element out = assoc_defect(bullet, i, j, k);
        out *= Rational(4);
        out -= anticommutator_defect(m, i, j, k);
        out -= anticommutator_defect(m, i, k, j);
        out += anticommutator_defect(m, k, i, j);
        out += anticommutator_defect(m, k, j, i);
        return out;
    };
    return report_from("polarization_associator_expansion", scan_triples(m.dim, nullptr, defect));
}

IdentityReport check_poisson_depolarization_identity(const Algebra& a) {
    const BilinearMap& m = a.mult;
    // 3(xy)z - 3x(yz) - (xz)y - (yz)x + (yx)z + (zx)y
    auto defect = [&](std::size_t i, std::size_t j, std::size_t k) {
        Element out = right_mul(m, m.row(i, j), k);
        out *= Rational(3);
        Element tmp = left_mul(m, i, m.row(j, k));
        tmp *= Rational(3);
        out -= tmp;
        out -= right_mul(m, m.row(i, k), j);
        out -= right_mul(m, m.row(j, k), i);
        out += right_mul(m, m.row(j, i), k);
        out += right_mul(m, m.row(k, i), j);
        return out;
    };
    return report_from("poisson_depolarization", scan_triples(m.dim, nullptr, defect));
}

} // namespace nalg

#include "nalg/reference.hpp"

namespace nalg::ref {

namespace {

Element mul(const BilinearMap& m, const Element& x, const Element& y) {
    Element out(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j)
            for (std::size_t k = 0; k < m.dim; ++k) out[k] += x[i] * y[j] * m.at(i, j, k);
    return out;
}

using Defect3 = Element (*)(const BilinearMap&, const Element&, const Element&, const Element&);
using Defect2 = Element (*)(const BilinearMap&, const Element&, const Element&);

Element d_assoc(const BilinearMap& m, const Element& x, const Element& y, const Element& z) {
    return mul(m, x, mul(m, y, z)) - mul(m, mul(m, x, y), z);
}
Element d_comm(const BilinearMap& m, const Element& x, const Element& y) {
    return mul(m, x, y) - mul(m, y, x);
}
Element d_skew(const BilinearMap& m, const Element& x, const Element& y) {
    return mul(m, x, y) + mul(m, y, x);
}
Element d_jacobi(const BilinearMap& m, const Element& x, const Element& y, const Element& z) {
    return mul(m, x, mul(m, y, z)) + mul(m, y, mul(m, z, x)) + mul(m, z, mul(m, x, y));
}
Element d_wa(const BilinearMap& m, const Element& x, const Element& y, const Element& z) {
    return d_assoc(m, x, y, z) + d_assoc(m, y, z, x) - d_assoc(m, y, x, z);
}
Element d_left(const BilinearMap& m, const Element& x, const Element& y, const Element& z) {
    return mul(m, x, mul(m, y, z)) - mul(m, mul(m, x, y), z) - mul(m, y, mul(m, x, z));
}
Element d_right(const BilinearMap& m, const Element& x, const Element& y, const Element& z) {
    return mul(m, mul(m, y, z), x) - mul(m, mul(m, y, x), z) - mul(m, y, mul(m, z, x));
}
Element d_two_left(const BilinearMap& m, const Element& x, const Element& y, const Element& z) {
    return mul(m, mul(m, x, y), z);
}
Element d_two_right(const BilinearMap& m, const Element& x, const Element& y, const Element& z) {
    return mul(m, x, mul(m, y, z));
}

struct Scan {
    bool holds = true;
    std::optional<Witness> witness;
};

Scan run_pairs(const BilinearMap& m, Defect2 defect, const char* component) {
    Scan out;
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) {
            Element d = defect(m, basis_element(m.dim, i), basis_element(m.dim, j));
            if (!d.is_zero()) {
                out.holds = false;
                out.witness = Witness{i, j, 0, component ? component : "", std::move(d)};
                return out;
            }
        }
    return out;
}

Scan run_triples(const BilinearMap& m, std::initializer_list<std::pair<Defect3, const char*>> defects) {
    Scan out;
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j)
            for (std::size_t k = 0; k < m.dim; ++k)
                for (const auto& [defect, component] : defects) {
                    Element d = defect(m, basis_element(m.dim, i), basis_element(m.dim, j),
                                       basis_element(m.dim, k));
                    if (!d.is_zero()) {
                        out.holds = false;
                        out.witness =
                            Witness{i, j, k, component ? component : "", std::move(d)};
                        return out;
                    }
                }
    return out;
}

IdentityReport report_from(IdentityKind kind, Scan&& scan) {
    IdentityReport r;
    r.identity_name = to_string(kind);
    r.holds = scan.holds;
    r.witness = std::move(scan.witness);
    return r;
}

} // namespace

IdentityReport check_identity(const BilinearMap& m, IdentityKind kind) {
    switch (kind) {
    case IdentityKind::Associative:
        return report_from(kind, run_triples(m, {{d_assoc, nullptr}}));
    case IdentityKind::Commutative:
        return report_from(kind, run_pairs(m, d_comm, nullptr));
    case IdentityKind::Skew:
        return report_from(kind, run_pairs(m, d_skew, nullptr));
    case IdentityKind::Jacobi:
        return report_from(kind, run_triples(m, {{d_jacobi, nullptr}}));
    case IdentityKind::Lie: {
        Scan s = run_pairs(m, d_skew, "skew");
        if (!s.holds) return report_from(kind, std::move(s));
        return report_from(kind, run_triples(m, {{d_jacobi, "jacobi"}}));
    }
    case IdentityKind::WeaklyAssociative:
        return report_from(kind, run_triples(m, {{d_wa, nullptr}}));
    case IdentityKind::LeftLeibniz:
        return report_from(kind, run_triples(m, {{d_left, nullptr}}));
    case IdentityKind::RightLeibniz:
        return report_from(kind, run_triples(m, {{d_right, nullptr}}));
    case IdentityKind::SymmetricLeibniz:
        return report_from(
            kind, run_triples(m, {{d_left, "left_leibniz"}, {d_right, "right_leibniz"}}));
    case IdentityKind::LieAdmissible:
        return report_from(kind, run_triples(skew_part(m), {{d_jacobi, nullptr}}));
    case IdentityKind::TwoStepNilpotent:
        return report_from(kind, run_triples(m, {{d_two_left, "left_nested_product"},
                                                 {d_two_right, "right_nested_product"}}));
    }
    throw error("unknown identity kind");
}

IdentityReport check_identity(const Algebra& a, IdentityKind kind) {
    return ref::check_identity(a.mult, kind);
}

} // namespace nalg::ref

#include "nalg/structure.hpp"

#include "nalg/detail/scan.hpp"
#include "nalg/polar.hpp"

#include <fmt/format.h>

namespace nalg {

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_dim)
        throw error(fmt::format("vector of dim {} tested against subspace of ambient dim {}",
                                v.size(), ambient_dim));
    Vec rem = v;
    for (const auto& row : basis) {
        std::size_t pivot = 0;
        while (pivot < ambient_dim && row[pivot] == 0) ++pivot;
        if (pivot == ambient_dim) continue;
        const Rational factor = rem[pivot];
        if (factor == 0) continue;
        for (std::size_t c = pivot; c < ambient_dim; ++c) rem[c] -= factor * row[c];
    }
    return is_zero_vec(rem);
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& row : other.basis)
        if (!contains(row)) return false;
    return true;
}

Subspace make_subspace(const std::vector<Vec>& generators, std::size_t ambient_dim) {
    Subspace s;
    s.ambient_dim = ambient_dim;
    s.basis = span_basis(generators, ambient_dim);
    return s;
}

Subspace product_span(const BilinearMap& m) {
    std::vector<Vec> products;
    products.reserve(m.dim * m.dim);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) {
            const auto row = m.row(i, j);
            products.emplace_back(row.begin(), row.end());
        }
    return make_subspace(products, m.dim);
}

Subspace center_of(const BilinearMap& m) {
    const std::size_t n = m.dim;
    std::vector<Vec> constraints;
    constraints.reserve(2 * n * n);
    // x in the center iff m(x, e_j) = 0 and m(e_j, x) = 0 for every j.
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Vec row(n);
            for (std::size_t i = 0; i < n; ++i) row[i] = m.at(i, j, k);
            constraints.push_back(std::move(row));
        }
    if (!m.is_symmetric()) { // symmetric maps: the right block repeats the left
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec row(n);
                for (std::size_t i = 0; i < n; ++i) row[i] = m.at(j, i, k);
                constraints.push_back(std::move(row));
            }
    }
    Subspace s;
    s.ambient_dim = n;
    s.basis = nullspace(constraints, n);
    return s;
}

Subspace derived_subalgebra(const BilinearMap& bracket) {
    if (!bracket.is_skew())
        throw error("derived subalgebra requires a skew bracket");
    return product_span(bracket);
}

GradedDecomposition graded_basis(const Algebra& a) {
    const PolarPair p = polarize(a);
    {
        const auto two_step = check_identity(p.bullet, IdentityKind::TwoStepNilpotent);
        if (!two_step.holds)
            throw error(fmt::format(
                "grading requires a 2-step nilpotent commutative part; nonzero product at "
                "(e{}, e{}, e{})",
                two_step.witness->i, two_step.witness->j, two_step.witness->k));
        const auto assoc = check_identity(p.bullet, IdentityKind::Associative);
        if (!assoc.holds)
            throw error(fmt::format(
                "grading requires an associative commutative part; associator nonzero at "
                "(e{}, e{}, e{})",
                assoc.witness->i, assoc.witness->j, assoc.witness->k));
    }

    GradedDecomposition g;
    g.part2 = product_span(p.bullet);

    std::vector<bool> is_pivot(a.dim, false);
    for (const auto& row : g.part2.basis) {
        std::size_t pivot = 0;
        while (pivot < a.dim && row[pivot] == 0) ++pivot;
        is_pivot[pivot] = true;
    }
    std::vector<Vec> complement;
    for (std::size_t c = 0; c < a.dim; ++c) {
        if (is_pivot[c]) continue;
        Vec v(a.dim, Rational(0));
        v[c] = 1;
        complement.push_back(std::move(v));
    }
    g.part1 = make_subspace(complement, a.dim);

    // Verify the grading laws. Under the precondition these cannot fail.
    if (g.part1.dim() + g.part2.dim() != a.dim)
        throw std::logic_error("grading parts do not fill the space");
    std::vector<Vec> all = g.part1.basis;
    all.insert(all.end(), g.part2.basis.begin(), g.part2.basis.end());
    if (rank(all, a.dim) != a.dim)
        throw std::logic_error("grading parts intersect nontrivially");
    auto as_element = [&](const Vec& v) {
        Element e(a.dim);
        for (std::size_t c = 0; c < a.dim; ++c) e[c] = v[c];
        return e;
    };
    for (const auto& u : g.part1.basis)
        for (const auto& u2 : g.part1.basis) {
            const Element prod = evaluate(p.bullet, as_element(u), as_element(u2));
            if (!g.part2.contains(prod.coords))
                throw std::logic_error("part1 products leave part2");
        }
    for (const auto& u : g.part1.basis)
        for (const auto& w : g.part2.basis)
            if (!evaluate(p.bullet, as_element(u), as_element(w)).is_zero())
                throw std::logic_error("part1 . part2 is nonzero");
    for (const auto& w : g.part2.basis)
        for (const auto& w2 : g.part2.basis)
            if (!evaluate(p.bullet, as_element(w), as_element(w2)).is_zero())
                throw std::logic_error("part2 . part2 is nonzero");
    return g;
}

StructureVerdict verdict_for_pair(const BilinearMap& bullet, const BilinearMap& bracket) {
    if (bullet.dim != bracket.dim)
        throw error(fmt::format("dimension mismatch in structure verdict: bullet {}, bracket {}",
                                bullet.dim, bracket.dim));
    const std::size_t n = bullet.dim;
    const std::size_t n2 = n * n;
    auto decode = [&](std::size_t t) {
        return std::array<std::size_t, 3>{t / n2, (t / n) % n, t % n};
    };

    struct Condition {
        const char* name;
        std::function<Element(std::size_t, std::size_t, std::size_t)> defect;
        bool holds = true;
        std::optional<std::size_t> hit;
    };
    Condition conditions[4] = {
        {"bullet_two_step",
         [&](std::size_t i, std::size_t j, std::size_t k) {
             return left_mul(bullet, i, bullet.row(j, k));
         }},
        {"bracket_jacobi",
         [&](std::size_t i, std::size_t j, std::size_t k) {
             Element d = left_mul(bracket, i, bracket.row(j, k));
             d += left_mul(bracket, j, bracket.row(k, i));
             d += left_mul(bracket, k, bracket.row(i, j));
             return d;
         }},
        {"bracket_kills_products",
         [&](std::size_t i, std::size_t j, std::size_t k) {
             return left_mul(bracket, i, bullet.row(j, k));
         }},
        {"bullet_kills_brackets",
         [&](std::size_t i, std::size_t j, std::size_t k) {
             return left_mul(bullet, i, bracket.row(j, k));
         }},
    };

    // All four flags are always computed; reports that show which condition
    // failed are the point of the verdict.
    for (auto& cond : conditions) {
        cond.hit = detail::first_nonzero_index(n * n2, [&](std::size_t t) {
            auto [i, j, k] = decode(t);
            return cond.defect(i, j, k);
        });
        cond.holds = !cond.hit.has_value();
    }

    StructureVerdict v;
    v.bullet_two_step = conditions[0].holds;
    v.bracket_jacobi = conditions[1].holds;
    v.bracket_kills_products = conditions[2].holds;
    v.bullet_kills_brackets = conditions[3].holds;
    v.is_symmetric_leibniz = v.bullet_two_step && v.bracket_jacobi &&
                             v.bracket_kills_products && v.bullet_kills_brackets;
    for (const auto& cond : conditions) {
        if (cond.holds) continue;
        auto [i, j, k] = decode(*cond.hit);
        v.witness = Witness{i, j, k, cond.name, cond.defect(i, j, k)};
        break;
    }
    return v;
}

StructureVerdict structure_verdict(const Algebra& a) {
    const PolarPair p = polarize(a);
    return verdict_for_pair(p.bullet, p.bracket);
}

IdentityReport check_center_containments(const Algebra& a) {
    const PolarPair p = polarize(a);
    const Subspace derived = product_span(p.bracket);
    const Subspace products = product_span(p.bullet);
    const Subspace bullet_center = center_of(p.bullet);
    const Subspace bracket_center = center_of(p.bracket);

    IdentityReport out;
    out.identity_name = "center_containments";

    struct Containment {
        const char* name;
        const Subspace* inner;
        const Subspace* outer;
    };
    const Containment checks[3] = {
        {"derived_bracket_in_bullet_center", &derived, &bullet_center},
        {"product_span_in_bracket_center", &products, &bracket_center},
        {"product_span_in_bullet_center", &products, &bullet_center},
    };
    for (const auto& c : checks) {
        for (std::size_t r = 0; r < c.inner->basis.size(); ++r) {
            if (c.outer->contains(c.inner->basis[r])) continue;
            out.holds = false;
            Element violator(a.dim);
            for (std::size_t i = 0; i < a.dim; ++i) violator[i] = c.inner->basis[r][i];
            out.witness = Witness{r, 0, 0, c.name, std::move(violator)};
            return out;
        }
    }
    return out;
}

} // namespace nalg

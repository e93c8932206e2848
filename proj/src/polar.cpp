#include "nalg/polar.hpp"

#include "nalg/detail/scan.hpp"

#include <fmt/format.h>

namespace nalg {

namespace {

void validate_pair(const BilinearMap& bullet, const BilinearMap& bracket) {
    if (bullet.dim != bracket.dim)
        throw error(fmt::format("polar pair dimension mismatch: bullet {}, bracket {}",
                                bullet.dim, bracket.dim));
    const std::size_t n = bullet.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (bullet.at(i, j, k) != bullet.at(j, i, k))
                    throw error(fmt::format(
                        "commutative part is not symmetric at basis pair (e{}, e{})", i, j));
                if (bracket.at(i, j, k) != -bracket.at(j, i, k))
                    throw error(fmt::format(
                        "bracket part is not skew at basis pair (e{}, e{})", i, j));
            }
}

} // namespace

PolarPair make_polar_pair(BilinearMap bullet, BilinearMap bracket) {
    validate_pair(bullet, bracket);
    PolarPair p;
    p.dim = bullet.dim;
    p.bullet = std::move(bullet);
    p.bracket = std::move(bracket);
    return p;
}

PolarPair polarize(const Algebra& a) {
    return make_polar_pair(symmetric_part(a.mult), skew_part(a.mult));
}

Algebra depolarize(const PolarPair& p) {
    validate_pair(p.bullet, p.bracket);
    return make_algebra(p.bullet + p.bracket);
}

namespace {

IdentityReport poisson_conditions(const PolarPair& p, bool require_associative,
                                  const char* report_name) {
    const std::size_t n = p.dim;
    const BilinearMap& bul = p.bullet;
    const BilinearMap& brk = p.bracket;
    IdentityReport out;
    out.identity_name = report_name;

    auto fail = [&](std::size_t i, std::size_t j, std::size_t k, const char* component,
                    Element defect) {
        out.holds = false;
        out.witness = Witness{i, j, k, component, std::move(defect)};
    };

    // Condition order: commutativity, bracket skewness, Jacobi, Leibniz,
    // then (for the Poisson check) associativity of the commutative part.
    for (std::size_t i = 0; i < n && out.holds; ++i)
        for (std::size_t j = 0; j < n && out.holds; ++j) {
            Element d = basis_product(bul, i, j);
            d -= basis_product(bul, j, i);
            if (!d.is_zero()) fail(i, j, 0, "bullet_commutative", std::move(d));
        }
    if (out.holds)
        for (std::size_t i = 0; i < n && out.holds; ++i)
            for (std::size_t j = 0; j < n && out.holds; ++j) {
                Element d = basis_product(brk, i, j);
                d += basis_product(brk, j, i);
                if (!d.is_zero()) fail(i, j, 0, "bracket_skew", std::move(d));
            }

    const std::size_t n2 = n * n;
    auto decode = [&](std::size_t t) {
        return std::array<std::size_t, 3>{t / n2, (t / n) % n, t % n};
    };
    if (out.holds) {
        auto probe = [&](std::size_t t) {
            auto [i, j, k] = decode(t);
            Element d = left_mul(brk, i, brk.row(j, k));
            d += left_mul(brk, j, brk.row(k, i));
            d += left_mul(brk, k, brk.row(i, j));
            return d;
        };
        if (auto hit = detail::first_nonzero_index(n * n2, probe)) {
            auto [i, j, k] = decode(*hit);
            fail(i, j, k, "bracket_jacobi", probe(*hit));
        }
    }
    if (out.holds) {
        // [x.y, z] - x.[y,z] - [x,z].y
        auto probe = [&](std::size_t t) {
            auto [i, j, k] = decode(t);
            Element d = right_mul(brk, bul.row(i, j), k);
            d -= left_mul(bul, i, brk.row(j, k));
            d -= right_mul(bul, brk.row(i, k), j);
            return d;
        };
        if (auto hit = detail::first_nonzero_index(n * n2, probe)) {
            auto [i, j, k] = decode(*hit);
            fail(i, j, k, "leibniz", probe(*hit));
        }
    }
    if (out.holds && require_associative) {
        auto probe = [&](std::size_t t) {
            auto [i, j, k] = decode(t);
            Element d = left_mul(bul, i, bul.row(j, k));
            d -= right_mul(bul, bul.row(i, j), k);
            return d;
        };
        if (auto hit = detail::first_nonzero_index(n * n2, probe)) {
            auto [i, j, k] = decode(*hit);
            fail(i, j, k, "bullet_associative", probe(*hit));
        }
    }
    return out;
}

} // namespace

IdentityReport is_nonassociative_poisson(const PolarPair& p) {
    return poisson_conditions(p, false, "nonassociative_poisson");
}

IdentityReport is_poisson(const PolarPair& p) {
    return poisson_conditions(p, true, "poisson");
}

} // namespace nalg

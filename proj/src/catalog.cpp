#include "nalg/catalog.hpp"

#include "nalg/identities.hpp"
#include "nalg/polar.hpp"
#include "nalg/structure.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace nalg {

namespace {

ParamSpec req(const char* name) { return {name, std::nullopt}; }
ParamSpec opt(const char* name, long value) { return {name, Rational(value)}; }

std::vector<FamilyInfo> build_family_table() {
    return {
        {FamilyTag::D2_ABELIAN, "D2_ABELIAN", 2, {}, "", {"v1", "v2"}},
        {FamilyTag::D2_SOLV, "D2_SOLV", 2, {}, "", {"v1", "v2"}},
        {FamilyTag::D2_NIL, "D2_NIL", 2, {}, "", {"u1", "w1"}},
        {FamilyTag::D3_C1, "D3_C1", 3,
         {req("alpha"), opt("d1", 1), opt("d2", 1)}, "", {"u1", "u2", "w1"}},
        {FamilyTag::D3_C2, "D3_C2", 3, {req("alpha")}, "", {"u1", "u2", "w1"}},
        {FamilyTag::D3_DEC, "D3_DEC", 3, {req("a"), req("b")}, "", {"u1", "v1", "w1"}},
        {FamilyTag::D4_A, "D4_A", 4,
         {req("alpha12"), req("alpha13"), req("alpha23")}, "", {"u1", "u2", "u3", "w1"}},
        {FamilyTag::D4_B, "D4_B", 4, {req("alpha"), req("beta")}, "", {"u1", "u2", "w1", "w2"}},
        {FamilyTag::D4_C, "D4_C", 4, {req("alpha"), req("beta")}, "", {"u1", "u2", "w1", "w2"}},
        {FamilyTag::D4_LIE, "D4_LIE", 4, {req("lambda")}, "", {"u1", "v1", "v2", "w1"}},
        {FamilyTag::D4_DEC1, "D4_DEC1", 4,
         {req("a1"), req("b1"), req("c1"), req("a2"), req("b2"), req("c2")},
         "a1 + b2 = 0", {"u1", "v1", "v2", "w1"}},
        {FamilyTag::D4_DEC2, "D4_DEC2", 4,
         {req("C12"), req("D12"), req("E11"), req("F11"), req("E21"), req("F21")},
         "F11*E21 - F21*E11 = 0", {"u1", "u2", "v1", "w1"}},
    };
}

// Writes value at (i, j, k) and its negative at (j, i, k).
void set_skew(BilinearMap& m, std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    m.at(i, j, k) = v;
    m.at(j, i, k) = -v;
}

std::string format_label(const FamilyInfo& info, const std::map<std::string, Rational>& params) {
    std::string out = info.name;
    if (!info.params.empty()) {
        out += "(";
        bool first = true;
        for (const auto& spec : info.params) {
            if (!first) out += ",";
            first = false;
            out += fmt::format("{}={}", spec.name, params.at(spec.name).get_str());
        }
        out += ")";
    }
    return out;
}

void validate_lie(const BilinearMap& bracket, const char* what) {
    const auto lie = check_identity(bracket, IdentityKind::Lie);
    if (!lie.holds)
        throw error(fmt::format("{} is not a Lie bracket: {} fails at (e{}, e{}, e{})", what,
                                lie.witness->component, lie.witness->i, lie.witness->j,
                                lie.witness->k));
}

} // namespace

const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> table = build_family_table();
    return table;
}

const FamilyInfo& family_info(FamilyTag tag) {
    for (const auto& info : family_table())
        if (info.tag == tag) return info;
    throw std::logic_error("unknown family tag");
}

std::optional<FamilyTag> family_tag_from_string(std::string_view name) {
    for (const auto& info : family_table())
        if (info.name == name) return info.tag;
    return std::nullopt;
}

Algebra build(const FamilyId& id) {
    const FamilyInfo& info = family_info(id.tag);

    std::map<std::string, Rational> params;
    for (const auto& spec : info.params) {
        auto it = id.params.find(spec.name);
        if (it != id.params.end()) {
            params[spec.name] = it->second;
        } else if (spec.default_value) {
            params[spec.name] = *spec.default_value;
        } else {
            throw error(fmt::format("missing parameter '{}' for family {}", spec.name, info.name));
        }
    }
    for (const auto& [key, value] : id.params) {
        (void)value;
        bool known = false;
        for (const auto& spec : info.params) known |= (spec.name == key);
        if (!known) throw error(fmt::format("unknown parameter '{}' for family {}", key, info.name));
    }
    auto param = [&](const char* name) { return params.at(name); };

    BilinearMap m = BilinearMap::zero(info.dim);
    switch (id.tag) {
    case FamilyTag::D2_ABELIAN:
        break;
    case FamilyTag::D2_SOLV:
        set_skew(m, 0, 1, 1, Rational(1)); // v1*v2 = -v2*v1 = v2
        break;
    case FamilyTag::D2_NIL:
        m.at(0, 0, 1) = 1; // u1*u1 = w1
        break;
    case FamilyTag::D3_C1:
        // u1*u1 = d1 w1, u2*u2 = d2 w1, u1*u2 = -u2*u1 = alpha w1
        m.at(0, 0, 2) = param("d1");
        m.at(1, 1, 2) = param("d2");
        set_skew(m, 0, 1, 2, param("alpha"));
        break;
    case FamilyTag::D3_C2:
        // u1*u2 = (1+alpha) w1, u2*u1 = (1-alpha) w1
        m.at(0, 1, 2) = Rational(1) + param("alpha");
        m.at(1, 0, 2) = Rational(1) - param("alpha");
        break;
    case FamilyTag::D3_DEC:
        // u1*u1 = w1, u1*v1 = -v1*u1 = a v1 + b w1
        m.at(0, 0, 2) = 1;
        set_skew(m, 0, 1, 1, param("a"));
        set_skew(m, 0, 1, 2, param("b"));
        break;
    case FamilyTag::D4_A:
        for (std::size_t i = 0; i < 3; ++i) m.at(i, i, 3) = 1;
        set_skew(m, 0, 1, 3, param("alpha12"));
        set_skew(m, 0, 2, 3, param("alpha13"));
        set_skew(m, 1, 2, 3, param("alpha23"));
        break;
    case FamilyTag::D4_B:
    case FamilyTag::D4_C:
        // Bullet u1*u1 = w1 [, u2*u2 = w1], u1.u2 = w2; bracket [u1,u2] =
        // alpha w1 + beta w2. Depolarized products per the family display.
        m.at(0, 0, 2) = 1;
        if (id.tag == FamilyTag::D4_C) m.at(1, 1, 2) = 1;
        m.at(0, 1, 2) = param("alpha");
        m.at(0, 1, 3) = param("beta") + 1;
        m.at(1, 0, 2) = -param("alpha");
        m.at(1, 0, 3) = -(param("beta") - 1);
        break;
    case FamilyTag::D4_LIE:
        // Pure skew product: the lambda-scaled oscillator bracket.
        set_skew(m, 0, 1, 2, param("lambda"));
        set_skew(m, 0, 2, 1, -param("lambda"));
        set_skew(m, 1, 2, 3, Rational(1));
        break;
    case FamilyTag::D4_DEC1: {
        const Rational trace = param("a1") + param("b2");
        if (trace != 0)
            throw error(fmt::format("constraint violated for D4_DEC1: a1 + b2 = 0 (got {})",
                                    trace.get_str()));
        // Built through the extension pipeline: Heisenberg as a central
        // extension of the abelian plane, then the derivation adjoined.
        const BilinearMap abelian = BilinearMap::zero(2);
        std::vector<Vec> theta(2, Vec(2, Rational(0)));
        theta[0][1] = 1;
        theta[1][0] = -1;
        const BilinearMap heisenberg = central_extension(abelian, theta);
        std::vector<Vec> d(3, Vec(3, Rational(0)));
        d[0][0] = param("a1");
        d[0][1] = param("b1");
        d[0][2] = param("c1");
        d[1][0] = param("a2");
        d[1][1] = param("b2");
        d[1][2] = param("c2");
        const BilinearMap lie = derivation_extension(heisenberg, d);
        Algebra out = assemble_general(lie);
        out.label = format_label(info, params);
        return out;
    }
    case FamilyTag::D4_DEC2: {
        const Rational jac = param("F11") * param("E21") - param("F21") * param("E11");
        if (jac != 0)
            throw error(fmt::format("constraint violated for D4_DEC2: F11*E21 - F21*E11 = 0 (got {})",
                                    jac.get_str()));
        m.at(0, 0, 3) = 1;
        m.at(1, 1, 3) = 1;
        set_skew(m, 0, 1, 2, param("C12"));
        set_skew(m, 0, 1, 3, param("D12"));
        set_skew(m, 0, 2, 2, param("E11"));
        set_skew(m, 0, 2, 3, param("F11"));
        set_skew(m, 1, 2, 2, param("E21"));
        set_skew(m, 1, 2, 3, param("F21"));
        break;
    }
    }

    Algebra out = make_algebra(std::move(m), format_label(info, params));
    if (!check_identity(out, IdentityKind::SymmetricLeibniz).holds)
        throw std::logic_error(fmt::format("catalog member {} fails the symmetric Leibniz check",
                                           out.label));
    return out;
}

BilinearMap central_extension(const BilinearMap& g_bracket, const std::vector<Vec>& theta) {
    const std::size_t n = g_bracket.dim;
    if (theta.size() != n)
        throw error(fmt::format("cocycle matrix has {} rows, bracket has dim {}", theta.size(), n));
    for (const auto& row : theta)
        if (row.size() != n)
            throw error(fmt::format("cocycle matrix row has {} entries, expected {}", row.size(), n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (theta[i][j] != -theta[j][i])
                throw error(fmt::format("cocycle is not skew at (e{}, e{})", i, j));
    validate_lie(g_bracket, "central extension input");

    // theta([x,y], z) + theta([y,z], x) + theta([z,x], y) = 0
    auto pairing = [&](std::size_t x, std::size_t y, std::size_t z) {
        Rational acc(0);
        const auto row = g_bracket.row(x, y);
        for (std::size_t l = 0; l < n; ++l)
            if (row[l] != 0) acc += row[l] * theta[l][z];
        return acc;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (pairing(i, j, k) + pairing(j, k, i) + pairing(k, i, j) != 0)
                    throw error(fmt::format(
                        "cocycle identity fails at (e{}, e{}, e{})", i, j, k));

    BilinearMap out = BilinearMap::zero(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = g_bracket.at(i, j, k);
            out.at(i, j, n) = theta[i][j];
        }
    if (!check_identity(out, IdentityKind::Jacobi).holds)
        throw std::logic_error("central extension violates Jacobi");
    return out;
}

BilinearMap derivation_extension(const BilinearMap& g1_bracket, const std::vector<Vec>& d) {
    const std::size_t n = g1_bracket.dim;
    if (d.size() != n)
        throw error(fmt::format("derivation matrix has {} rows, bracket has dim {}", d.size(), n));
    for (const auto& row : d)
        if (row.size() != n)
            throw error(fmt::format("derivation matrix row has {} entries, expected {}",
                                    row.size(), n));
    validate_lie(g1_bracket, "derivation extension input");
    if (n == 0) throw error("derivation extension needs a nonempty bracket");
    if (!is_zero_vec(d[n - 1]))
        throw error(fmt::format(
            "derivation must annihilate the central vector e{}, got image {}", n - 1,
            to_string(d[n - 1])));

    // d[x, y] = [d x, y] + [x, d y] on basis pairs.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element lhs(n);
            const auto row = g1_bracket.row(i, j);
            for (std::size_t w = 0; w < n; ++w) {
                if (row[w] == 0) continue;
                for (std::size_t k = 0; k < n; ++k) lhs[k] += row[w] * d[w][k];
            }
            Element rhs = right_mul(g1_bracket, std::span<const Rational>(d[i].data(), n), j);
            rhs += left_mul(g1_bracket, i, std::span<const Rational>(d[j].data(), n));
            lhs -= rhs;
            if (!lhs.is_zero())
                throw error(fmt::format("derivation law fails at pair (e{}, e{})", i, j));
        }

    // New generator u1 at index 0; the old basis shifts up by one.
    BilinearMap out = BilinearMap::zero(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.at(i + 1, j + 1, k + 1) = g1_bracket.at(i, j, k);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            out.at(0, j + 1, k + 1) = d[j][k];
            out.at(j + 1, 0, k + 1) = -d[j][k];
        }
    if (!check_identity(out, IdentityKind::Jacobi).holds)
        throw std::logic_error("derivation extension violates Jacobi");
    return out;
}

Algebra assemble_general(const BilinearMap& lie_bracket) {
    const std::size_t n = lie_bracket.dim;
    if (n < 2) throw error(fmt::format("assembly needs dim >= 2, got {}", n));

    BilinearMap bullet = BilinearMap::zero(n);
    bullet.at(0, 0, n - 1) = 1; // u1 . u1 = w1

    const StructureVerdict v = verdict_for_pair(bullet, lie_bracket);
    if (!v.is_symmetric_leibniz)
        throw error(fmt::format(
            "assembled pair fails the structure conditions ({} at (e{}, e{}, e{})); flags: "
            "bullet_two_step={} bracket_jacobi={} bracket_kills_products={} bullet_kills_brackets={}",
            v.witness->component, v.witness->i, v.witness->j, v.witness->k, v.bullet_two_step,
            v.bracket_jacobi, v.bracket_kills_products, v.bullet_kills_brackets));

    Algebra out = depolarize(make_polar_pair(std::move(bullet), lie_bracket));
    if (!check_identity(out, IdentityKind::SymmetricLeibniz).holds)
        throw std::logic_error("assembled algebra fails the symmetric Leibniz check");
    return out;
}

Algebra oscillator_algebra() {
    FamilyId id;
    id.tag = FamilyTag::D4_DEC1;
    id.params = {{"a1", Rational(0)},  {"b1", Rational(-1)}, {"c1", Rational(0)},
                 {"a2", Rational(1)},  {"b2", Rational(0)},  {"c2", Rational(0)}};
    Algebra out = build(id);
    out.label = "oscillator";
    return out;
}

} // namespace nalg

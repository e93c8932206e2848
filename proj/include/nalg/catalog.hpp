#ifndef NALG_CATALOG_HPP
#define NALG_CATALOG_HPP

#include "nalg/algebra.hpp"
#include "nalg/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nalg {

/// The built-in families of symmetric Leibniz algebras in dimensions 2-4.
enum class FamilyTag {
    D2_ABELIAN,
    D2_SOLV,
    D2_NIL,
    D3_C1,
    D3_C2,
    D3_DEC,
    D4_A,
    D4_B,
    D4_C,
    D4_LIE,
    D4_DEC1,
    D4_DEC2,
};

struct FamilyId {
    FamilyTag tag;
    std::map<std::string, Rational> params;
};

struct ParamSpec {
    std::string name;
    std::optional<Rational> default_value;
};

struct FamilyInfo {
    FamilyTag tag;
    std::string name;
    std::size_t dim;
    std::vector<ParamSpec> params;
    std::string constraint; // printable polynomial, empty when unconstrained
    std::vector<std::string> basis_names;
};

const std::vector<FamilyInfo>& family_table();
const FamilyInfo& family_info(FamilyTag tag);
std::optional<FamilyTag> family_tag_from_string(std::string_view name);

/// Builds the family member. Throws on unknown/missing parameters and on
/// constraint violations (quoting the violated polynomial). Every returned
/// algebra passes the symmetric Leibniz check; this is asserted.
Algebra build(const FamilyId& id);

/// Central extension of a Lie bracket by a scalar 2-cocycle theta: the new
/// central direction w1 is appended as the last basis vector and
/// [x, y]_new = [x, y] + theta(x, y) w1. Validates that the input is a Lie
/// bracket, theta is skew, and the cocycle identity
/// theta([x,y],z) + theta([y,z],x) + theta([z,x],y) = 0 holds.
BilinearMap central_extension(const BilinearMap& g_bracket, const std::vector<Vec>& theta);

/// Extension by a derivation d: a new generator u1 is prepended as basis
/// vector 0 with [u1, x] = d(x). Requires d to be a derivation of the
/// bracket and to annihilate the distinguished central vector (the last
/// basis coordinate). d is given as a matrix whose row j is the image of e_j.
BilinearMap derivation_extension(const BilinearMap& g1_bracket, const std::vector<Vec>& d);

/// Pairs the commutative product u1.u1 = w1 (first basis vector squared to
/// the last) with the given Lie bracket and depolarizes. Throws with the
/// full verdict when the pair fails any of the four structure conditions.
Algebra assemble_general(const BilinearMap& lie_bracket);

/// The four-dimensional oscillator-based symmetric Leibniz algebra, built
/// through the central-extension / derivation-extension pipeline.
Algebra oscillator_algebra();

} // namespace nalg

#endif

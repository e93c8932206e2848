#ifndef NALG_POLAR_HPP
#define NALG_POLAR_HPP

#include "nalg/algebra.hpp"
#include "nalg/identities.hpp"

namespace nalg {

/// A commutative product and a skew bracket on the same space. Constructed
/// only through make_polar_pair, which validates both symmetries eagerly so
/// downstream code can assume well-formedness.
struct PolarPair {
    std::size_t dim = 0;
    BilinearMap bullet;  // commutative part
    BilinearMap bracket; // skew part
};

/// Throws (naming the offending basis index pair) unless bullet is
/// componentwise symmetric and bracket componentwise skew.
PolarPair make_polar_pair(BilinearMap bullet, BilinearMap bracket);

/// bullet = (m + m^T)/2, bracket = (m - m^T)/2.
PolarPair polarize(const Algebra& a);

/// mult = bullet + bracket. Revalidates the pair invariants.
Algebra depolarize(const PolarPair& p);

/// Checks: bullet commutative, bracket a Lie bracket, and the Leibniz
/// identity [x.y, z] = x.[y,z] + [x,z].y. The witness names the failing
/// condition and triple.
IdentityReport is_nonassociative_poisson(const PolarPair& p);

/// As is_nonassociative_poisson plus associativity of bullet.
IdentityReport is_poisson(const PolarPair& p);

} // namespace nalg

#endif

#ifndef NALG_REFERENCE_HPP
#define NALG_REFERENCE_HPP

#include "nalg/identities.hpp"

namespace nalg::ref {

// Serial reference implementation of the identity checker. Plain nested
// loops over materialized basis elements, early return at the first failing
// tuple. Kept deliberately independent of the OpenMP kernels so the two
// paths can be compared in tests and benchmarks.

IdentityReport check_identity(const BilinearMap& m, IdentityKind kind);
IdentityReport check_identity(const Algebra& a, IdentityKind kind);

} // namespace nalg::ref

#endif

#ifndef NALG_ALGEBRA_HPP
#define NALG_ALGEBRA_HPP

#include "nalg/tensor.hpp"

#include <string>
#include <utility>

namespace nalg {

/// A finite-dimensional nonassociative algebra: a product tensor plus an
/// optional display label. Immutable by convention once built.
struct Algebra {
    std::size_t dim = 0;
    BilinearMap mult;
    std::string label;
};

inline Algebra make_algebra(BilinearMap mult, std::string label = {}) {
    Algebra a;
    a.dim = mult.dim;
    a.mult = std::move(mult);
    a.label = std::move(label);
    return a;
}

} // namespace nalg

#endif

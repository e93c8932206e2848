#ifndef NALG_TENSOR_HPP
#define NALG_TENSOR_HPP

#include "nalg/element.hpp"
#include "nalg/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace nalg {

/// Dense structure-constant tensor of a bilinear map: coeff of e_k in
/// map(e_i, e_j) sits at [i][j][k]. Dimensions stay small (<= 16 or so),
/// so the flat n^3 layout wins over any sparse bookkeeping.
struct BilinearMap {
    std::size_t dim = 0;
    std::vector<Rational> coeff; // flat, index ((i*dim)+j)*dim+k

    static BilinearMap zero(std::size_t dim);

    Rational& at(std::size_t i, std::size_t j, std::size_t k) {
        return coeff[(i * dim + j) * dim + k];
    }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
        return coeff[(i * dim + j) * dim + k];
    }

    /// Coordinates of map(e_i, e_j), viewed in place.
    std::span<const Rational> row(std::size_t i, std::size_t j) const {
        return {coeff.data() + (i * dim + j) * dim, dim};
    }

    bool is_zero() const;
    bool is_symmetric() const;
    bool is_skew() const;

    BilinearMap& operator+=(const BilinearMap& rhs);
    friend BilinearMap operator+(BilinearMap lhs, const BilinearMap& rhs) { return lhs += rhs; }

    bool operator==(const BilinearMap& rhs) const {
        return dim == rhs.dim && coeff == rhs.coeff;
    }
};

BilinearMap transpose(const BilinearMap& m);
BilinearMap symmetric_part(const BilinearMap& m); // (m + m^T)/2
BilinearMap skew_part(const BilinearMap& m);      // (m - m^T)/2
BilinearMap scaled(const Rational& scale, const BilinearMap& m);

/// map(x, y) with full dimension checking; the error names both dimensions.
Element evaluate(const BilinearMap& m, const Element& x, const Element& y);

/// map(e_i, e_j) as an owned Element.
Element basis_product(const BilinearMap& m, std::size_t i, std::size_t j);

/// map(e_i, w) for a raw coordinate span; no dimension checks (internal
/// kernels call this on rows of matching maps).
Element left_mul(const BilinearMap& m, std::size_t i, std::span<const Rational> w);

/// map(w, e_j).
Element right_mul(const BilinearMap& m, std::span<const Rational> w, std::size_t j);

inline std::span<const Rational> as_span(const Element& x) {
    return {x.coords.data(), x.coords.size()};
}

/// Dense trilinear defect tensor: Element-valued on basis triples, coeff of
/// e_l in value(e_i, e_j, e_k) at [i][j][k][l].
struct TrilinearMap {
    std::size_t dim = 0;
    std::vector<Rational> coeff; // flat n^4

    static TrilinearMap zero(std::size_t dim);

    Element value(std::size_t i, std::size_t j, std::size_t k) const;
    void set(std::size_t i, std::size_t j, std::size_t k, const Element& v);

    bool is_zero() const;
    bool operator==(const TrilinearMap& rhs) const {
        return dim == rhs.dim && coeff == rhs.coeff;
    }
};

} // namespace nalg

#endif

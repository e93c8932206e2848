#ifndef NALG_ELEMENT_HPP
#define NALG_ELEMENT_HPP

#include "nalg/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace nalg {

/// Coordinate vector in the distinguished basis e0..e_{n-1}.
struct Element {
    std::vector<Rational> coords;

    Element() = default;
    explicit Element(std::size_t dim) : coords(dim) {}

    std::size_t dim() const { return coords.size(); }
    Rational& operator[](std::size_t i) { return coords[i]; }
    const Rational& operator[](std::size_t i) const { return coords[i]; }

    bool is_zero() const;

    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const Rational& scale);

    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
    friend Element operator*(const Rational& scale, Element rhs) { return rhs *= scale; }
    friend Element operator-(Element value);

    bool operator==(const Element& rhs) const { return coords == rhs.coords; }
};

Element zero_element(std::size_t dim);
Element basis_element(std::size_t dim, std::size_t index);

/// "2*e0 - 1/2*e3" style rendering; the zero vector prints as "0".
std::string to_string(const Element& value);

} // namespace nalg

#endif

#include "nalg/element.hpp"

#include <fmt/format.h>

#include <cassert>

namespace nalg {

bool Element::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

Element& Element::operator+=(const Element& rhs) {
    assert(coords.size() == rhs.coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += rhs.coords[i];
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    assert(coords.size() == rhs.coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= rhs.coords[i];
    return *this;
}

Element& Element::operator*=(const Rational& scale) {
    for (auto& c : coords) c *= scale;
    return *this;
}

Element operator-(Element value) {
    for (auto& c : value.coords) c = -c;
    return value;
}

Element zero_element(std::size_t dim) { return Element(dim); }

Element basis_element(std::size_t dim, std::size_t index) {
    assert(index < dim);
    Element e(dim);
    e[index] = 1;
    return e;
}

std::string to_string(const Element& value) {
    std::string out;
    for (std::size_t i = 0; i < value.dim(); ++i) {
        const Rational& c = value[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag == 1)
            out += fmt::format("e{}", i);
        else
            out += fmt::format("{}*e{}", mag.get_str(), i);
    }
    return out.empty() ? "0" : out;
}

} // namespace nalg

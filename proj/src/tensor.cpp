#include "nalg/tensor.hpp"

#include <fmt/format.h>

#include <cassert>

namespace nalg {

BilinearMap BilinearMap::zero(std::size_t dim) {
    BilinearMap m;
    m.dim = dim;
    m.coeff.assign(dim * dim * dim, Rational(0));
    return m;
}

bool BilinearMap::is_zero() const {
    for (const auto& c : coeff)
        if (c != 0) return false;
    return true;
}

bool BilinearMap::is_symmetric() const {
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (at(i, j, k) != at(j, i, k)) return false;
    return true;
}

bool BilinearMap::is_skew() const {
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (at(i, j, k) != -at(j, i, k)) return false;
    return true;
}

BilinearMap& BilinearMap::operator+=(const BilinearMap& rhs) {
    assert(dim == rhs.dim);
    for (std::size_t t = 0; t < coeff.size(); ++t) coeff[t] += rhs.coeff[t];
    return *this;
}

BilinearMap transpose(const BilinearMap& m) {
    BilinearMap out = BilinearMap::zero(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j)
            for (std::size_t k = 0; k < m.dim; ++k) out.at(i, j, k) = m.at(j, i, k);
    return out;
}

BilinearMap symmetric_part(const BilinearMap& m) {
    const Rational half(1, 2);
    BilinearMap out = BilinearMap::zero(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j)
            for (std::size_t k = 0; k < m.dim; ++k)
                out.at(i, j, k) = half * (m.at(i, j, k) + m.at(j, i, k));
    return out;
}

BilinearMap skew_part(const BilinearMap& m) {
    const Rational half(1, 2);
    BilinearMap out = BilinearMap::zero(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j)
            for (std::size_t k = 0; k < m.dim; ++k)
                out.at(i, j, k) = half * (m.at(i, j, k) - m.at(j, i, k));
    return out;
}

BilinearMap scaled(const Rational& scale, const BilinearMap& m) {
    BilinearMap out = m;
    for (auto& c : out.coeff) c *= scale;
    return out;
}

Element evaluate(const BilinearMap& m, const Element& x, const Element& y) {
    if (x.dim() != m.dim || y.dim() != m.dim)
        throw error(fmt::format(
            "dimension mismatch in bilinear evaluation: map has dim {}, arguments have dims {} and {}",
            m.dim, x.dim(), y.dim()));
    Element out(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.dim; ++j) {
            if (y[j] == 0) continue;
            const Rational c = x[i] * y[j];
            const auto r = m.row(i, j);
            for (std::size_t k = 0; k < m.dim; ++k)
                if (r[k] != 0) out[k] += c * r[k];
        }
    }
    return out;
}

Element basis_product(const BilinearMap& m, std::size_t i, std::size_t j) {
    Element out(m.dim);
    const auto r = m.row(i, j);
    for (std::size_t k = 0; k < m.dim; ++k) out[k] = r[k];
    return out;
}

Element left_mul(const BilinearMap& m, std::size_t i, std::span<const Rational> w) {
    assert(w.size() == m.dim);
    Element out(m.dim);
    for (std::size_t j = 0; j < m.dim; ++j) {
        if (w[j] == 0) continue;
        const auto r = m.row(i, j);
        for (std::size_t k = 0; k < m.dim; ++k)
            if (r[k] != 0) out[k] += w[j] * r[k];
    }
    return out;
}

Element right_mul(const BilinearMap& m, std::span<const Rational> w, std::size_t j) {
    assert(w.size() == m.dim);
    Element out(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
        if (w[i] == 0) continue;
        const auto r = m.row(i, j);
        for (std::size_t k = 0; k < m.dim; ++k)
            if (r[k] != 0) out[k] += w[i] * r[k];
    }
    return out;
}

TrilinearMap TrilinearMap::zero(std::size_t dim) {
    TrilinearMap t;
    t.dim = dim;
    t.coeff.assign(dim * dim * dim * dim, Rational(0));
    return t;
}

Element TrilinearMap::value(std::size_t i, std::size_t j, std::size_t k) const {
    Element out(dim);
    const std::size_t base = ((i * dim + j) * dim + k) * dim;
    for (std::size_t l = 0; l < dim; ++l) out[l] = coeff[base + l];
    return out;
}

void TrilinearMap::set(std::size_t i, std::size_t j, std::size_t k, const Element& v) {
    assert(v.dim() == dim);
    const std::size_t base = ((i * dim + j) * dim + k) * dim;
    for (std::size_t l = 0; l < dim; ++l) coeff[base + l] = v[l];
}

bool TrilinearMap::is_zero() const {
    for (const auto& c : coeff)
        if (c != 0) return false;
    return true;
}

} // namespace nalg

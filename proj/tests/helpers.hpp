#pragma once

// Small conveniences shared by the unit tests.

#include <initializer_list>
#include <vector>

#include "superlie/liesuper.hpp"
#include "superlie/sske.hpp"

namespace helpers {

using superlie::Field;
using superlie::Matrix;
using superlie::Scalar;
using superlie::Vec;

/// Vector from integer entries.
inline Vec vec(const Field& field, std::initializer_list<long long> entries) {
    Vec out;
    out.reserve(entries.size());
    for (long long e : entries) out.push_back(field.from_int(e));
    return out;
}

/// Matrix from integer rows.
inline Matrix mat(const Field& field, std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    Matrix m(field, cols);
    for (const auto& r : rows) m.push_row(vec(field, r));
    return m;
}

/// Standard basis vector.
inline Vec unit(const Field& field, std::size_t n, std::size_t i) {
    Vec e = superlie::zero_vec(field, n);
    e[i] = field.one();
    return e;
}

/// True iff `images` defines a degree-zero bijection src -> dst (per-parity
/// component matrices are square and invertible).
inline bool is_degree_zero_bijection(const superlie::SuperSpace& src,
                                     const superlie::SuperSpace& dst, const Field& field,
                                     const std::vector<Vec>& images) {
    if (src.dims() != dst.dims() || images.size() != src.dim()) return false;
    Matrix even(field, dst.even_dim()), odd(field, dst.odd_dim());
    for (std::size_t i = 0; i < images.size(); ++i) {
        Vec e = superlie::narrow_even(dst, images[i]);
        Vec o = superlie::narrow_odd(dst, images[i]);
        if (src.parity(i) == 0) {
            if (!superlie::is_zero_vec(o)) return false;
            even.push_row(std::move(e));
        } else {
            if (!superlie::is_zero_vec(e)) return false;
            odd.push_row(std::move(o));
        }
    }
    return superlie::rank(even) == dst.even_dim() && superlie::rank(odd) == dst.odd_dim();
}

}  // namespace helpers

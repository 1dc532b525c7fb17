#include "superlie/superspace.hpp"

#include <algorithm>
#include <unordered_set>

namespace superlie {

std::string DimPair::str() const {
    return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")";
}

SuperSpace::SuperSpace(std::vector<std::string> even, std::vector<std::string> odd)
    : even_(std::move(even)), odd_(std::move(odd)) {
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!index_.emplace(label(i), i).second) throw Error("duplicate basis label '" + label(i) + "'");
    }
}

const std::string& SuperSpace::label(std::size_t i) const {
    if (i < even_.size()) return even_[i];
    if (i - even_.size() < odd_.size()) return odd_[i - even_.size()];
    throw Error("basis index out of range");
}

std::optional<std::size_t> SuperSpace::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> homogeneous_parity(const SuperSpace& space, const Vec& v) {
    if (v.size() != space.dim()) throw Error("vector length mismatch");
    bool has_even = false, has_odd = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        (space.parity(i) == 0 ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) return std::nullopt;
    return has_odd ? 1 : 0;
}

Vec even_part(const SuperSpace& space, const Vec& v) {
    Vec r = v;
    for (std::size_t i = space.even_dim(); i < space.dim(); ++i) r[i] = r[i].field().zero();
    return r;
}

Vec odd_part(const SuperSpace& space, const Vec& v) {
    Vec r = v;
    for (std::size_t i = 0; i < space.even_dim(); ++i) r[i] = r[i].field().zero();
    return r;
}

Vec narrow_even(const SuperSpace& space, const Vec& v) {
    if (v.size() != space.dim()) throw Error("vector length mismatch");
    return Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(space.even_dim()));
}

Vec narrow_odd(const SuperSpace& space, const Vec& v) {
    if (v.size() != space.dim()) throw Error("vector length mismatch");
    return Vec(v.begin() + static_cast<std::ptrdiff_t>(space.even_dim()), v.end());
}

GradedSubspace GradedSubspace::zero(const SuperSpace& ambient, const Field& field) {
    GradedSubspace s;
    s.even_ = echelonize(Matrix(field, ambient.even_dim()));
    s.odd_ = echelonize(Matrix(field, ambient.odd_dim()));
    return s;
}

GradedSubspace GradedSubspace::whole(const SuperSpace& ambient, const Field& field) {
    Matrix even(field, ambient.even_dim());
    for (std::size_t i = 0; i < ambient.even_dim(); ++i) {
        Vec v = zero_vec(field, ambient.even_dim());
        v[i] = field.one();
        even.push_row(std::move(v));
    }
    Matrix odd(field, ambient.odd_dim());
    for (std::size_t i = 0; i < ambient.odd_dim(); ++i) {
        Vec v = zero_vec(field, ambient.odd_dim());
        v[i] = field.one();
        odd.push_row(std::move(v));
    }
    GradedSubspace s;
    s.even_ = echelonize(even);
    s.odd_ = echelonize(odd);
    return s;
}

GradedSubspace GradedSubspace::span(const SuperSpace& ambient, const Field& field, const std::vector<Vec>& gens) {
    Matrix even(field, ambient.even_dim());
    Matrix odd(field, ambient.odd_dim());
    for (const Vec& g : gens) {
        if (g.size() != ambient.dim()) throw Error("generator not in ambient space");
        Vec e = narrow_even(ambient, g);
        Vec o = narrow_odd(ambient, g);
        if (!is_zero_vec(e)) even.push_row(std::move(e));
        if (!is_zero_vec(o)) odd.push_row(std::move(o));
    }
    GradedSubspace s;
    s.even_ = echelonize(even);
    s.odd_ = echelonize(odd);
    return s;
}

bool GradedSubspace::contains(const SuperSpace& ambient, const Vec& v) const {
    if (v.size() != ambient.dim() || even_.mat.cols != ambient.even_dim() || odd_.mat.cols != ambient.odd_dim())
        throw Error("ambient mismatch");
    return in_row_space(even_, narrow_even(ambient, v)) && in_row_space(odd_, narrow_odd(ambient, v));
}

bool GradedSubspace::contains_subspace(const GradedSubspace& other) const {
    if (even_.mat.cols != other.even_.mat.cols || odd_.mat.cols != other.odd_.mat.cols)
        throw Error("ambient mismatch");
    for (const Vec& row : other.even_.mat.rows)
        if (!in_row_space(even_, row)) return false;
    for (const Vec& row : other.odd_.mat.rows)
        if (!in_row_space(odd_, row)) return false;
    return true;
}

Vec GradedSubspace::reduce_in(const SuperSpace& ambient, Vec v) const {
    Vec e = reduce(even_, narrow_even(ambient, v));
    Vec o = reduce(odd_, narrow_odd(ambient, v));
    std::copy(e.begin(), e.end(), v.begin());
    std::copy(o.begin(), o.end(), v.begin() + static_cast<std::ptrdiff_t>(ambient.even_dim()));
    return v;
}

std::vector<Vec> GradedSubspace::basis_vectors(const SuperSpace& ambient, const Field& field) const {
    std::vector<Vec> out;
    for (const Vec& row : even_.mat.rows) out.push_back(embed_even(ambient, field, row));
    for (const Vec& row : odd_.mat.rows) out.push_back(embed_odd(ambient, field, row));
    return out;
}

bool GradedSubspace::operator==(const GradedSubspace& o) const {
    return even_.mat == o.even_.mat && odd_.mat == o.odd_.mat;
}

GradedSubspace intersect(const GradedSubspace& s, const GradedSubspace& t) {
    GradedSubspace r;
    r.even_ = echelonize(intersect_rows(s.even_.mat, t.even_.mat));
    r.odd_ = echelonize(intersect_rows(s.odd_.mat, t.odd_.mat));
    return r;
}

GradedSubspace sum(const GradedSubspace& s, const GradedSubspace& t) {
    GradedSubspace r;
    r.even_ = echelonize(stack(s.even().mat, t.even().mat));
    r.odd_ = echelonize(stack(s.odd().mat, t.odd().mat));
    return r;
}

DimPair quotient_dims(const GradedSubspace& s, const GradedSubspace& t) {
    if (!t.contains_subspace(s)) throw Error("quotient: first subspace not contained in second");
    DimPair ds = s.dims(), dt = t.dims();
    return {dt.even - ds.even, dt.odd - ds.odd};
}

Vec embed_even(const SuperSpace& ambient, const Field& field, const Vec& narrow) {
    if (narrow.size() != ambient.even_dim()) throw Error("even block length mismatch");
    Vec v = zero_vec(field, ambient.dim());
    std::copy(narrow.begin(), narrow.end(), v.begin());
    return v;
}

Vec embed_odd(const SuperSpace& ambient, const Field& field, const Vec& narrow) {
    if (narrow.size() != ambient.odd_dim()) throw Error("odd block length mismatch");
    Vec v = zero_vec(field, ambient.dim());
    std::copy(narrow.begin(), narrow.end(), v.begin() + static_cast<std::ptrdiff_t>(ambient.even_dim()));
    return v;
}

Vec coords_in_graded(const GradedSubspace& s, const SuperSpace& ambient, const Vec& v) {
    if (v.size() != ambient.dim()) throw Error("vector length mismatch");
    auto ce = coordinates_in(s.even(), narrow_even(ambient, v));
    auto co = coordinates_in(s.odd(), narrow_odd(ambient, v));
    if (!ce || !co) throw Error("vector outside subspace");
    Vec out = std::move(*ce);
    out.insert(out.end(), co->begin(), co->end());
    return out;
}

namespace {

// Derived-space labels are generated from component labels; uniquify
// defensively in case user labels already contain the separator.
std::vector<std::string> uniquify(std::vector<std::string> labels, std::unordered_set<std::string>& seen) {
    for (auto& l : labels) {
        std::string candidate = l;
        int k = 2;
        while (!seen.insert(candidate).second) candidate = l + "~" + std::to_string(k++);
        l = candidate;
    }
    return labels;
}

}  // namespace

TensorSpace::TensorSpace(const SuperSpace& v, const SuperSpace& w) : vdim_(v.dim()), wdim_(w.dim()) {
    std::vector<std::string> even_labels, odd_labels;
    std::vector<std::size_t> even_flat, odd_flat;
    for (std::size_t i = 0; i < vdim_; ++i) {
        for (std::size_t k = 0; k < wdim_; ++k) {
            std::string name = v.label(i) + "*" + w.label(k);
            if ((v.parity(i) + w.parity(k)) % 2 == 0) {
                even_labels.push_back(std::move(name));
                even_flat.push_back(i * wdim_ + k);
            } else {
                odd_labels.push_back(std::move(name));
                odd_flat.push_back(i * wdim_ + k);
            }
        }
    }
    std::unordered_set<std::string> seen;
    even_labels = uniquify(std::move(even_labels), seen);
    odd_labels = uniquify(std::move(odd_labels), seen);
    space_ = SuperSpace(std::move(even_labels), std::move(odd_labels));
    pos_.assign(vdim_ * wdim_, 0);
    for (std::size_t g = 0; g < even_flat.size(); ++g) pos_[even_flat[g]] = g;
    for (std::size_t g = 0; g < odd_flat.size(); ++g) pos_[odd_flat[g]] = even_flat.size() + g;
}

Vec TensorSpace::pure_tensor(const Field& field, const Vec& v, const Vec& w) const {
    if (v.size() != vdim_ || w.size() != wdim_) throw Error("tensor factor length mismatch");
    Vec out = zero_vec(field, space_.dim());
    for (std::size_t i = 0; i < vdim_; ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t k = 0; k < wdim_; ++k) {
            if (w[k].is_zero()) continue;
            Scalar t = v[i];
            t *= w[k];
            out[position(i, k)] += t;
        }
    }
    return out;
}

Vec TensorSpace::basis_tensor(const Field& field, std::size_t i, const Vec& w) const {
    if (i >= vdim_ || w.size() != wdim_) throw Error("tensor factor length mismatch");
    Vec out = zero_vec(field, space_.dim());
    for (std::size_t k = 0; k < wdim_; ++k) out[position(i, k)] = w[k];
    return out;
}

WedgeSpace::WedgeSpace(const SuperSpace& v) {
    const std::size_t m = v.even_dim(), n = v.odd_dim();
    std::vector<std::string> even_labels, odd_labels;
    std::vector<std::pair<std::size_t, std::size_t>> even_pairs, odd_pairs;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            even_labels.push_back(v.label(i) + "^" + v.label(j));
            even_pairs.emplace_back(i, j);
        }
    }
    for (std::size_t i = m; i < m + n; ++i) {
        for (std::size_t j = i; j < m + n; ++j) {  // diagonal kept on the odd part
            even_labels.push_back(v.label(i) + "^" + v.label(j));
            even_pairs.emplace_back(i, j);
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = m; j < m + n; ++j) {
            odd_labels.push_back(v.label(i) + "^" + v.label(j));
            odd_pairs.emplace_back(i, j);
        }
    }
    std::unordered_set<std::string> seen;
    even_labels = uniquify(std::move(even_labels), seen);
    odd_labels = uniquify(std::move(odd_labels), seen);
    space_ = SuperSpace(std::move(even_labels), std::move(odd_labels));
    pairs_ = std::move(even_pairs);
    pairs_.insert(pairs_.end(), odd_pairs.begin(), odd_pairs.end());
}

}  // namespace superlie

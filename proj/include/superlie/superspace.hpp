#pragma once

#include "superlie/matrix.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace superlie {

/// Dimension of a Z2-graded space, written (even|odd).
struct DimPair {
    std::size_t even = 0;
    std::size_t odd = 0;

    std::size_t total() const { return even + odd; }
    bool operator==(const DimPair& o) const { return even == o.even && odd == o.odd; }
    bool operator!=(const DimPair& o) const { return !(*this == o); }
    DimPair operator+(const DimPair& o) const { return {even + o.even, odd + o.odd}; }
    std::string str() const;
};

/// Z2-graded vector space given by named homogeneous basis elements.
/// Global coordinate order is all even labels followed by all odd labels.
class SuperSpace {
public:
    SuperSpace() = default;
    SuperSpace(std::vector<std::string> even, std::vector<std::string> odd);

    std::size_t even_dim() const { return even_.size(); }
    std::size_t odd_dim() const { return odd_.size(); }
    std::size_t dim() const { return even_.size() + odd_.size(); }
    DimPair dims() const { return {even_.size(), odd_.size()}; }

    int parity(std::size_t i) const { return i < even_.size() ? 0 : 1; }
    const std::string& label(std::size_t i) const;
    const std::vector<std::string>& even_labels() const { return even_; }
    const std::vector<std::string>& odd_labels() const { return odd_; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    bool operator==(const SuperSpace& o) const { return even_ == o.even_ && odd_ == o.odd_; }
    bool operator!=(const SuperSpace& o) const { return !(*this == o); }

private:
    std::vector<std::string> even_, odd_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// 0 or 1 if the support of v is purely even / purely odd (zero counts as
/// even); nullopt for mixed vectors.
std::optional<int> homogeneous_parity(const SuperSpace& space, const Vec& v);

Vec even_part(const SuperSpace& space, const Vec& v);
Vec odd_part(const SuperSpace& space, const Vec& v);

/// The even (leading) / odd (trailing) coordinate block of v on its own.
Vec narrow_even(const SuperSpace& space, const Vec& v);
Vec narrow_odd(const SuperSpace& space, const Vec& v);

/// Graded subspace in canonical form: one reduced echelon basis per parity
/// block.  Even rows have even_dim(ambient) columns, odd rows odd_dim.
/// Equality of subspaces is equality of these matrices.
class GradedSubspace {
public:
    GradedSubspace() = default;

    static GradedSubspace zero(const SuperSpace& ambient, const Field& field);
    static GradedSubspace whole(const SuperSpace& ambient, const Field& field);
    /// Non-homogeneous generators are split into parity parts first.
    static GradedSubspace span(const SuperSpace& ambient, const Field& field, const std::vector<Vec>& gens);

    DimPair dims() const { return {even_.rank(), odd_.rank()}; }
    const Echelon& even() const { return even_; }
    const Echelon& odd() const { return odd_; }

    bool contains(const SuperSpace& ambient, const Vec& v) const;
    bool contains_subspace(const GradedSubspace& other) const;
    /// Canonical coset representative: v with the pivot coordinates of both
    /// blocks eliminated.
    Vec reduce_in(const SuperSpace& ambient, Vec v) const;

    /// Basis as full-coordinate vectors, even rows then odd rows.
    std::vector<Vec> basis_vectors(const SuperSpace& ambient, const Field& field) const;

    bool operator==(const GradedSubspace& o) const;
    bool operator!=(const GradedSubspace& o) const { return !(*this == o); }

private:
    Echelon even_, odd_;
    friend GradedSubspace intersect(const GradedSubspace&, const GradedSubspace&);
    friend GradedSubspace sum(const GradedSubspace&, const GradedSubspace&);
};

GradedSubspace intersect(const GradedSubspace& s, const GradedSubspace& t);
GradedSubspace sum(const GradedSubspace& s, const GradedSubspace& t);
/// Requires s to be contained in t.
DimPair quotient_dims(const GradedSubspace& s, const GradedSubspace& t);

Vec embed_even(const SuperSpace& ambient, const Field& field, const Vec& narrow);
Vec embed_odd(const SuperSpace& ambient, const Field& field, const Vec& narrow);

/// Coordinates of v on the canonical basis of s (even rows first, then odd
/// rows, matching basis_vectors).  Throws if v lies outside s.
Vec coords_in_graded(const GradedSubspace& s, const SuperSpace& ambient, const Vec& v);

/// V (x) W with basis e_i (x) w_k, parity |e_i|+|w_k|, relabelled into the
/// usual even-first global order.
class TensorSpace {
public:
    TensorSpace(const SuperSpace& v, const SuperSpace& w);

    const SuperSpace& space() const { return space_; }
    std::size_t position(std::size_t i, std::size_t k) const { return pos_[i * wdim_ + k]; }

    /// Coordinates of v (x) w.
    Vec pure_tensor(const Field& field, const Vec& v, const Vec& w) const;
    /// Fast path for e_i (x) w.
    Vec basis_tensor(const Field& field, std::size_t i, const Vec& w) const;

private:
    SuperSpace space_;
    std::size_t vdim_ = 0, wdim_ = 0;
    std::vector<std::size_t> pos_;
};

/// Super-exterior square of V: e_i ^ e_j with i < j on even pairs, i <= j on
/// odd pairs (the odd diagonal is kept), and all even-odd pairs.
class WedgeSpace {
public:
    explicit WedgeSpace(const SuperSpace& v);

    const SuperSpace& space() const { return space_; }
    /// pairs()[g] is the (i, j) of the g-th basis vector in global order.
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }

private:
    SuperSpace space_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

}  // namespace superlie

#pragma once

#include "superlie/superspace.hpp"

#include <utility>

namespace superlie {

/// Lie superalgebra given by structure constants on a homogeneous basis.
/// The bracket table is stored densely on all ordered pairs; graded
/// skew-symmetry is validated, never assumed.
struct LieSuper {
    Field field = Field::rationals();
    SuperSpace space;
    /// table[i][j] = [e_i, e_j] in full coordinates.
    std::vector<std::vector<Vec>> table;

    std::size_t dim() const { return space.dim(); }
    /// Bilinear extension of the table.
    Vec bracket(const Vec& x, const Vec& y) const;
};

/// All-zero bracket table for the given space.
std::vector<std::vector<Vec>> zero_table(const Field& field, const SuperSpace& space);

/// Every grading / skew-symmetry / Jacobi violation found on basis pairs
/// and triples; empty means L is a Lie superalgebra.
std::vector<std::string> validate(const LieSuper& L);
/// Throws Error listing the violations, if any.
void require_valid(const LieSuper& L);

/// L² = span of all basis brackets.
GradedSubspace derived_subalgebra(const LieSuper& L);
/// Z(L) = {v : [v, e_i] = 0 for all i}, computed as a kernel.
GradedSubspace center(const LieSuper& L);

enum class NilClass { abelian, class_two, higher };
std::string to_string(NilClass c);
/// abelian iff L² = 0; class_two iff 0 ≠ L² ⊆ Z(L); higher otherwise.
NilClass nilpotency_class_leq2(const LieSuper& L);

/// [H, L] ⊆ H, checked on basis generators.
bool is_graded_ideal(const LieSuper& L, const GradedSubspace& H);

/// L/H on the pivot-complement basis of H.
struct QuotientResult {
    LieSuper algebra;
    /// Quotient basis vector k is the class of L's basis vector lift[k].
    std::vector<std::size_t> lift;
    /// projection[i] = coordinates of e_i + H on the quotient basis.
    std::vector<Vec> projection;
    /// The (echelonized) ideal that was divided out.
    GradedSubspace ideal;

    /// Class of an arbitrary vector of L on the quotient basis.
    Vec project(const LieSuper& L, const Vec& v) const;
};

QuotientResult quotient(const LieSuper& L, const GradedSubspace& H);

/// Block sum with the labels of the right summand renamed on collision.
struct DirectSumResult {
    LieSuper algebra;
    std::vector<std::size_t> left_index;   // basis index of a -> index in sum
    std::vector<std::size_t> right_index;  // basis index of b -> index in sum
};

DirectSumResult direct_sum_parts(const LieSuper& a, const LieSuper& b);
LieSuper direct_sum(const LieSuper& a, const LieSuper& b);

/// (H ⊕ K) / ⟨h − k : (h, k) in glue⟩ for homogeneous central glue vectors
/// that are independent on each side and parity-matched pairwise.
struct CentralSumResult {
    LieSuper algebra;
    std::vector<Vec> left_images;   // image of each basis vector of H
    std::vector<Vec> right_images;  // image of each basis vector of K
};

CentralSumResult central_sum_parts(const LieSuper& H, const LieSuper& K,
                                   const std::vector<std::pair<Vec, Vec>>& glue);
LieSuper central_sum(const LieSuper& H, const LieSuper& K,
                     const std::vector<std::pair<Vec, Vec>>& glue);

/// Z(L) = L² test; rank is dim L².
struct HeisenbergCheck {
    bool is_heisenberg = false;
    DimPair rank;
};

HeisenbergCheck is_generalized_heisenberg(const LieSuper& L);

/// Splitting L = H ⊕ A(l|k) with A a homogeneous central complement of L²
/// inside Z(L) and H a complementary ideal containing L².
struct SplitResult {
    LieSuper heisenberg;
    DimPair abelian_dims;
    std::vector<Vec> h_basis;  // basis of the ideal H, as vectors of L
    std::vector<Vec> a_basis;  // basis of the abelian part, as vectors of L
};

SplitResult split_heisenberg_abelian(const LieSuper& L);

/// images[i] = image of e_i in dst.  True iff the linear extension is a
/// degree-zero homomorphism (parity preserved, brackets preserved).
bool is_homomorphism(const LieSuper& src, const LieSuper& dst, const std::vector<Vec>& images);

}  // namespace superlie

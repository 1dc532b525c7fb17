#pragma once

#include "superlie/liesuper.hpp"

namespace superlie {

/// Grading-preserving, graded-skew bilinear map f : V × V → W whose image
/// spans W.  The rank of f is dim W, its dimension is dim V.
struct SkewSuperMap {
    Field field = Field::rationals();
    SuperSpace v;
    SuperSpace w;
    /// tensor[i][j] = f(e_i, e_j), dense on all ordered pairs (the odd
    /// diagonal f(y, y) carries real data).
    std::vector<std::vector<Vec>> tensor;

    DimPair dimension() const { return v.dims(); }
    DimPair rank() const { return w.dims(); }
    /// Bilinear extension of the tensor.
    Vec apply(const Vec& x, const Vec& y) const;

    bool operator==(const SkewSuperMap& o) const {
        return field == o.field && v == o.v && w == o.w && tensor == o.tensor;
    }
};

std::vector<std::vector<Vec>> zero_tensor(const Field& field, const SuperSpace& v, const SuperSpace& w);

/// Violations of the object axioms: nontrivial V and W, grading
/// preservation, graded skew-symmetry, image spanning W.  Empty = ok.
std::vector<std::string> validate_sske(const SkewSuperMap& f);
void require_valid(const SkewSuperMap& f);

/// Object part of the functor from class-two algebras: V is the
/// pivot-complement transversal of L² (representing L/L²), W is L², and
/// f(x + L², y + L²) = [x, y].
struct FromLieResult {
    SkewSuperMap map;
    /// map.v basis vector k is the class of L basis vector v_lift[k].
    std::vector<std::size_t> v_lift;
    /// map.w is L² with its canonical basis rows as the W basis.
    GradedSubspace derived;
};

FromLieResult from_lie_parts(const LieSuper& L);
SkewSuperMap from_lie(const LieSuper& L);

/// Inverse construction: basis(V) ⊔ basis(W) with [(v,w),(v′,w′)] =
/// (0, f(v,v′)); the result is class two with L² = W ⊆ Z(L).
struct ToLieResult {
    LieSuper algebra;
    std::vector<std::size_t> v_index;  // V basis index -> algebra basis index
    std::vector<std::size_t> w_index;  // W basis index -> algebra basis index
};

ToLieResult to_lie_parts(const SkewSuperMap& f);
LieSuper to_lie(const SkewSuperMap& f);

/// Morphism (δ₁ : V₁ → V₂, δ₂ : W₁ → W₂), both degree zero, with
/// δ₂(f₁(u,v)) = f₂(δ₁u, δ₁v).
struct MorphismPair {
    std::vector<Vec> delta1;  // V1 basis vector -> V2 coordinates
    std::vector<Vec> delta2;  // W1 basis vector -> W2 coordinates
};

std::vector<std::string> validate_morphism(const SkewSuperMap& f1, const SkewSuperMap& f2,
                                           const MorphismPair& m);

/// Morphism part of the functor: from a homomorphism δ : L1 → L2 (given by
/// basis images) produce δ₁ on the transversals and δ₂ = δ restricted to
/// L1².  Throws if δ is not a degree-zero homomorphism.
MorphismPair morphism_from_lie_hom(const LieSuper& L1, const LieSuper& L2,
                                   const std::vector<Vec>& images);

/// True iff δ₁ and δ₂ are both bijective (exact rank checks per parity).
bool is_isomorphism(const SkewSuperMap& f1, const SkewSuperMap& f2, const MorphismPair& m);

/// Componentwise composition outer ∘ inner.
MorphismPair compose(const MorphismPair& outer, const MorphismPair& inner);

/// {u ∈ V : f(v, u) = 0 for all v}; f is nondegenerate iff this is zero.
GradedSubspace radical(const SkewSuperMap& f);
bool is_nondegenerate(const SkewSuperMap& f);

/// f(V_0̄, V_1̄) = 0.
bool is_even_map(const SkewSuperMap& f);
/// f(V_0̄, V_0̄) = f(V_1̄, V_1̄) = 0.
bool is_odd_map(const SkewSuperMap& f);

/// Restriction f̄₁ : V₁ × V₁ → W₁ with W₁ = span f(V₁, V₁); throws when
/// W₁ = 0 (a map with trivial target is not an object).
struct RestrictResult {
    SkewSuperMap map;
    std::vector<Vec> v_basis;  // map.v basis as vectors of the original V
    std::vector<Vec> w_basis;  // map.w basis as vectors of the original W
    GradedSubspace w_sub;      // span f(V₁, V₁) inside the original W
};

RestrictResult restrict(const SkewSuperMap& f, const GradedSubspace& v1);

/// True iff V = V₁ ⊕ V₂ non-trivially and f(V₁, V₂) = 0 on spanning pairs.
bool verify_decomposition(const SkewSuperMap& f, const GradedSubspace& v1,
                          const GradedSubspace& v2);

/// Split V along the connected components of the graph with an edge i ∼ j
/// whenever f(e_i, e_j) ≠ 0.  A result always passes verify_decomposition;
/// nullopt (connected graph) does NOT prove indecomposability, since a
/// basis change could still split f.
std::optional<std::pair<GradedSubspace, GradedSubspace>> find_basis_aligned_decomposition(
    const SkewSuperMap& f);

/// Disjoint block sum: V = V_a ⊕ V_b, W = W_a ⊕ W_b, f = f_a ⊕ f_b, with
/// the right-hand labels renamed on collision.  The returned subspaces
/// locate the blocks inside the sum.
struct BlockSumResult {
    SkewSuperMap map;
    GradedSubspace v1, v2;  // the two V blocks in the sum's V
    GradedSubspace w1, w2;  // the two W blocks in the sum's W
};

BlockSumResult block_sum(const SkewSuperMap& a, const SkewSuperMap& b);

}  // namespace superlie

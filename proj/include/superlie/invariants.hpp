#pragma once

#include "superlie/sske.hpp"

namespace superlie {

/// X_f ⊆ V⊗W: the span, over homogeneous basis triples (a,b,c), of
///   (−1)^{|a||c|} a⊗f(b,c) + (−1)^{|b||a|} b⊗f(c,a) + (−1)^{|c||b|} c⊗f(a,b).
struct JacobiSpan {
    TensorSpace ambient;      // V ⊗ W
    GradedSubspace subspace;  // X_f
};

/// When sorted_triples_only is set, only index-sorted triples a ≤ b ≤ c are
/// enumerated; the span is the same (each generator rescales under
/// transpositions), which the tests check as a rank equality.
JacobiSpan jacobi_span(const SkewSuperMap& f, bool sorted_triples_only = false);

/// Dimension pair of the multiplier M(f) = (V⊗W)/X_f ⊕ ker ρ, where
/// ρ : Λ_s²V → W sends e_i∧e_j to f(e_i, e_j).
struct MultiplierReport {
    DimPair quotient_dims;    // (V⊗W)/X_f
    DimPair kernel_rho_dims;  // ker ρ
    DimPair total_dims;       // componentwise sum
};

MultiplierReport multiplier(const SkewSuperMap& f);

/// Z*(f) = {w ∈ W : e_i ⊗ w ∈ X_f for every basis vector e_i of V}.
struct EpicenterReport {
    GradedSubspace subspace;  // Z*(f) as a graded subspace of W
    bool capable = false;     // iff the subspace is zero
    /// For small maps each basis vector of Z*(f) is additionally tested for
    /// membership in the value set {f(u,v)} by a grid search; nullopt when
    /// the search was skipped (large dimension or probe_values = false).
    std::optional<bool> basis_vectors_are_values;
};

EpicenterReport epicenter(const SkewSuperMap& f, bool probe_values = true);

/// Capability. Abelian algebras use the closed-form rule (A(m|n) capable
/// iff (m,n) = (0,1) or m+n ≥ 2); class-two algebras reduce to the
/// epicenter of the associated map.  Throws for class greater than two.
bool is_capable_lie(const LieSuper& L);

/// f̄ : V × V → W/I on the pivot-complement basis of a proper graded
/// subspace I of W.
struct QuotientMapResult {
    SkewSuperMap map;
    std::vector<std::size_t> w_lift;  // quotient basis index -> W coordinate
    GradedSubspace ideal;

    /// Image of a W vector on the quotient basis.
    Vec project(const SuperSpace& w, const Field& field, const Vec& value) const;
};

QuotientMapResult quotient_map(const SkewSuperMap& f, const GradedSubspace& I);

/// Verifies (Z*(f) + I)/I ⊆ Z*(f̄).
bool check_quotient_monotonicity(const SkewSuperMap& f, const GradedSubspace& I);

/// Rank-one classification: a Heisenberg-type nondegenerate part plus an
/// abelian radical, read off from dimension data.
struct RankOneClass {
    enum class Family { heisenberg_even, heisenberg_odd };
    Family family = Family::heisenberg_even;
    std::size_t m = 0;
    std::size_t n = 0;  // only meaningful for the even-center family
    DimPair abelian;    // dims of the radical

    std::string str() const;
};

RankOneClass classify_rank_one(const SkewSuperMap& f);

/// For a decomposition V = V₁ ⊕ V₂ with f(V₁,V₂) = 0, checks
///   X_f = X_{f̄₁} + X_{f̄₂} + V̄₁⊗W̄₂ + V̄₂⊗W̄₁
/// as subspaces of V⊗W (a block with trivial image contributes zero).
bool decomposable_xf_check(const SkewSuperMap& f, const GradedSubspace& v1,
                           const GradedSubspace& v2);

/// Epicenter case analysis for a nondegenerate decomposable map:
///   - disjoint targets (W̄₁ ∩ W̄₂ = 0): Z*(f) = Z*(f̄₁) ⊕ Z*(f̄₂)
///   - rank two, W̄₁ = W̄₂ = W:          Z*(f) = W
///   - rank two, W̄ᵢ = W, dim W̄ⱼ = 1:   Z*(f) ∈ {W, W̄ⱼ}
struct CentralSumEpicenterReport {
    std::string case_tag;   // disjoint-targets | rank-two-equal-targets |
                            // rank-two-nested-targets | not-covered
    bool verified = false;  // the predicted equality/containment held
    DimPair w1_dims, w2_dims, w_meet_dims;
    DimPair z_dims, z1_dims, z2_dims;
};

CentralSumEpicenterReport central_sum_epicenter_check(const SkewSuperMap& f,
                                                      const GradedSubspace& v1,
                                                      const GradedSubspace& v2);

}  // namespace superlie

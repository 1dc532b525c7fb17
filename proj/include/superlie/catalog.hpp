#pragma once

#include <cstdint>

#include "superlie/liesuper.hpp"
#include "superlie/sske.hpp"

namespace superlie {

/// H(m,n): basis x₁..x₂ₘ, z (even) and y₁..yₙ (odd) with
/// [xᵢ, x_{m+i}] = z and [yⱼ, yⱼ] = z; dims (2m+1 | n).  Throws if m = n = 0.
LieSuper heisenberg_even(std::size_t m, std::size_t n, const Field& field = Field::rationals());

/// Hₘ: basis x₁..xₘ (even) and y₁..yₘ, z (odd) with [xⱼ, yⱼ] = z;
/// dims (m | m+1).  Throws if m = 0.
LieSuper heisenberg_odd(std::size_t m, const Field& field = Field::rationals());

/// A(m|n): all brackets zero (m = n = 0 gives the zero algebra).
LieSuper abelian(std::size_t m, std::size_t n, const Field& field = Field::rationals());

/// The generic map on dims (m|n): one dedicated target generator per
/// independent pair — x_{ir} = f(uᵢ, u_r) for i < r, y_{js} = f(vⱼ, v_s)
/// for j ≤ s, z_{ij} = f(uᵢ, vⱼ) — so the rank is (C(m,2)+C(n+1,2) | mn).
SkewSuperMap generic_full(std::size_t m, std::size_t n, const Field& field = Field::rationals());

/// Even variant: the z_{ij} generators are dropped (f(V₀,V₁) = 0).
SkewSuperMap generic_even_full(std::size_t m, std::size_t n,
                               const Field& field = Field::rationals());

/// Odd variant: the x_{ir} and y_{js} generators are dropped
/// (f(V₀,V₀) = f(V₁,V₁) = 0).
SkewSuperMap generic_odd_full(std::size_t m, std::size_t n,
                              const Field& field = Field::rationals());

/// Seeded random object with dims (m|n) and rank exactly (r|s).  Entries are
/// drawn from a splitmix64 stream in a fixed order, so identical parameters
/// reproduce the identical tensor on every platform.  Throws if (r|s) is
/// infeasible or the retry budget is exhausted.
SkewSuperMap random_sske(std::size_t m, std::size_t n, std::size_t r, std::size_t s,
                         std::uint64_t seed, const Field& field);

}  // namespace superlie

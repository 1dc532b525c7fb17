#pragma once

#include "superlie/catalog.hpp"
#include "superlie/invariants.hpp"

namespace superlie {

/// One verified instance of a battery check.
struct BatteryRow {
    std::string criterion;  // slug shared by all rows of the same check
    std::string instance;
    std::string expected;
    std::string computed;
    bool pass = false;
};

/// Capability of H(m,n) over the grid 0 <= m <= max_m, 0 <= n <= max_n,
/// m+n >= 1: capable exactly at (m,n) = (1,0).
std::vector<BatteryRow> battery_even_heisenberg_capability(std::size_t max_m, std::size_t max_n,
                                                           const Field& field);

/// Capability of H_m for 1 <= m <= max_m: capable exactly at m = 1.
std::vector<BatteryRow> battery_odd_heisenberg_capability(std::size_t max_m, const Field& field);

/// Capability of core (+) A(k|l) for k <= max_k, l <= max_l: capable
/// exactly when the core is H(1,0) or H_1.
std::vector<BatteryRow> battery_heisenberg_abelian_capability(std::size_t max_k,
                                                              std::size_t max_l,
                                                              const Field& field);

/// Capability of A(m|n) against a literal truth table on 0..3 (the rule
/// (m,n) = (0,1) or m+n >= 2 beyond it).
std::vector<BatteryRow> battery_abelian_capability(std::size_t max_m, std::size_t max_n,
                                                   const Field& field);

/// Rank and rebuilt-algebra dimension formulas for the generic maps of
/// maximal rank on the grid 1 <= m <= max_m, 1 <= n <= max_n, with
/// Z(L) = L^2 for the full variant.
std::vector<BatteryRow> battery_generic_rank_dims(std::size_t max_m, std::size_t max_n,
                                                  const Field& field);

/// Round trips both ways: algebra -> map -> algebra up to isomorphism for
/// every class-two catalog algebra of total dim <= max_total_dim, and
/// map -> algebra -> map on the nose for random_count seeded maps over F_5
/// with dims <= (3|3).
std::vector<BatteryRow> battery_functor_round_trip(std::size_t max_total_dim,
                                                   std::size_t random_count, const Field& field);

/// Relation-space decomposition X_f = X_1 + X_2 + mixed tensors on seeded
/// random block sums over F_5, dims <= (3|3) per block.
std::vector<BatteryRow> battery_decomposable_relations(std::size_t count);

/// (Z*(f) + I)/I inside Z*(f mod I) on seeded random pairs over F_5.
std::vector<BatteryRow> battery_quotient_monotonicity(std::size_t count);

/// Disjoint-target block sums of Heisenberg cores with parameters <= max:
/// the epicenter decomposes blockwise and each block classifies back to
/// its source family.
std::vector<BatteryRow> battery_epicenter_block_sums(std::size_t max_m, std::size_t max_n,
                                                     const Field& field);

/// Frozen multiplier values for H(1,0), H(2,0), H_1, each compared against
/// an independent brute-force elimination oracle before being asserted.
std::vector<BatteryRow> battery_multiplier_spot_values(const Field& field);

/// Rank-one classification recovers the constructed (family, m, n, radical)
/// on seeded instances of core (+) A(k|l) with parameters <= 2.
std::vector<BatteryRow> battery_rank_one_classification(std::size_t count, const Field& field);

/// Grid bounds and instance counts; the defaults are the acceptance grids.
struct BatteryConfig {
    Field field = Field::rationals();
    std::size_t even_grid_m = 3, even_grid_n = 3;
    std::size_t odd_max_m = 4;
    std::size_t summand_max_k = 2, summand_max_l = 2;
    std::size_t abelian_grid_m = 3, abelian_grid_n = 3;
    std::size_t generic_max_m = 4, generic_max_n = 4;
    std::size_t functor_max_dim = 10;
    std::size_t functor_random_count = 100;
    std::size_t decomposable_count = 25;
    std::size_t monotonicity_count = 50;
    std::size_t block_sum_max_m = 2, block_sum_max_n = 2;
    std::size_t rank_one_count = 30;
};

/// All checks in a fixed order; every row carries its criterion slug.
std::vector<BatteryRow> run_battery(const BatteryConfig& cfg);

}  // namespace superlie

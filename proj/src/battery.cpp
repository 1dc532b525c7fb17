#include "superlie/battery.hpp"

#include <array>

namespace superlie {

namespace {

// ------------------------------------------------------------- naming ----

std::string heisenberg_even_name(std::size_t m, std::size_t n) {
    return "H(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::string heisenberg_odd_name(std::size_t m) { return "H_" + std::to_string(m); }

std::string abelian_name(std::size_t k, std::size_t l) {
    return "A(" + std::to_string(k) + "|" + std::to_string(l) + ")";
}

std::string capable_str(bool b) { return b ? "capable" : "not capable"; }

BatteryRow row(std::string criterion, std::string instance, std::string expected,
               std::string computed) {
    BatteryRow r;
    r.criterion = std::move(criterion);
    r.instance = std::move(instance);
    r.expected = std::move(expected);
    r.computed = std::move(computed);
    r.pass = r.expected == r.computed;
    return r;
}

void append(std::vector<BatteryRow>& out, std::vector<BatteryRow> part) {
    for (BatteryRow& r : part) out.push_back(std::move(r));
}

// ------------------------------------------- independent rank oracle -----
// Deliberate re-implementation from the definitions: flat tensor layout and
// plain Gaussian elimination, sharing no code with the echelon machinery.

std::size_t brute_rank(std::vector<std::vector<Scalar>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t sel = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][c].is_zero()) {
                sel = r;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            Scalar t = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= t * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

DimPair brute_relation_dims(const SkewSuperMap& f) {
    const std::size_t n = f.v.dim(), wd = f.w.dim();
    std::vector<std::size_t> even_slots, odd_slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < wd; ++k)
            ((f.v.parity(i) + f.w.parity(k)) % 2 == 0 ? even_slots : odd_slots)
                .push_back(i * wd + k);
    auto sign = [&](std::size_t a, std::size_t b) {
        return (f.v.parity(a) * f.v.parity(b)) % 2 != 0 ? f.field.from_int(-1) : f.field.one();
    };
    std::vector<std::vector<Scalar>> even_rows, odd_rows;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::vector<Scalar> g(n * wd, f.field.zero());
                for (std::size_t k = 0; k < wd; ++k) {
                    g[a * wd + k] += sign(a, c) * f.tensor[b][c][k];
                    g[b * wd + k] += sign(b, a) * f.tensor[c][a][k];
                    g[c * wd + k] += sign(c, b) * f.tensor[a][b][k];
                }
                bool any = false;
                for (const Scalar& s : g) any = any || !s.is_zero();
                if (!any) continue;
                std::vector<Scalar> ev, od;
                for (std::size_t slot : even_slots) ev.push_back(g[slot]);
                for (std::size_t slot : odd_slots) od.push_back(g[slot]);
                even_rows.push_back(std::move(ev));
                odd_rows.push_back(std::move(od));
            }
    return {brute_rank(even_rows), brute_rank(odd_rows)};
}

DimPair brute_multiplier_dims(const SkewSuperMap& f) {
    const std::size_t n = f.v.dim(), wd = f.w.dim();
    const DimPair x = brute_relation_dims(f);
    std::size_t tensor_even = 0, tensor_odd = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < wd; ++k)
            ((f.v.parity(i) + f.w.parity(k)) % 2 == 0 ? tensor_even : tensor_odd) += 1;

    std::vector<std::size_t> w_even_slots, w_odd_slots;
    for (std::size_t k = 0; k < wd; ++k)
        (f.w.parity(k) == 0 ? w_even_slots : w_odd_slots).push_back(k);
    auto narrow = [](const Vec& full, const std::vector<std::size_t>& slots) {
        std::vector<Scalar> out;
        for (std::size_t s : slots) out.push_back(full[s]);
        return out;
    };
    std::vector<std::vector<Scalar>> rho_even, rho_odd;
    std::size_t wedge_even = 0, wedge_odd = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const int pi = f.v.parity(i), pj = f.v.parity(j);
            if (i == j && pi == 0) continue;  // e^e = 0 on the even part
            if ((pi + pj) % 2 == 0) {
                ++wedge_even;
                rho_even.push_back(narrow(f.tensor[i][j], w_even_slots));
            } else {
                ++wedge_odd;
                rho_odd.push_back(narrow(f.tensor[i][j], w_odd_slots));
            }
        }
    return {tensor_even - x.even + wedge_even - brute_rank(rho_even),
            tensor_odd - x.odd + wedge_odd - brute_rank(rho_odd)};
}

// ------------------------------------------------------ seeded streams ---

struct BatteryRng {
    std::uint64_t state;
    explicit BatteryRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(next() % bound); }
};

struct RandomDims {
    std::size_t m, n, r, s;
};

/// Feasible (m|n) -> (r|s) combinations within dims <= (3|3).
const std::array<RandomDims, 10>& random_dim_table() {
    static const std::array<RandomDims, 10> table = {{{2, 0, 1, 0},
                                                      {3, 0, 2, 0},
                                                      {0, 2, 1, 0},
                                                      {0, 3, 2, 0},
                                                      {1, 1, 1, 1},
                                                      {2, 1, 1, 1},
                                                      {2, 2, 2, 2},
                                                      {3, 1, 2, 2},
                                                      {1, 2, 2, 1},
                                                      {3, 3, 3, 3}}};
    return table;
}

SkewSuperMap seeded_map(std::size_t index, std::uint64_t seed, const Field& field) {
    const RandomDims& d = random_dim_table()[index % random_dim_table().size()];
    return random_sske(d.m, d.n, d.r, d.s, seed, field);
}

std::string dims_tag(const SkewSuperMap& f) {
    return f.dimension().str() + "->" + f.rank().str();
}

// --------------------------------------- canonical round-trip morphism ---

/// Basis images of the canonical map L -> to_lie(from_lie(L)): the class
/// part lands on the transversal copy, the central part on the W copy.
std::vector<Vec> round_trip_images(const LieSuper& L, const FromLieResult& fr,
                                   const ToLieResult& tr) {
    std::vector<Vec> images;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        Vec e = zero_vec(L.field, L.dim());
        e[i] = L.field.one();
        Vec cls = fr.derived.reduce_in(L.space, e);  // supported on the transversal
        Vec central = e;
        for (std::size_t k = 0; k < central.size(); ++k) central[k] -= cls[k];
        Vec img = zero_vec(L.field, tr.algebra.dim());
        for (std::size_t k = 0; k < fr.v_lift.size(); ++k)
            img[tr.v_index[k]] = cls[fr.v_lift[k]];
        Vec wc = coords_in_graded(fr.derived, L.space, central);
        for (std::size_t k = 0; k < tr.w_index.size(); ++k) img[tr.w_index[k]] = wc[k];
        images.push_back(std::move(img));
    }
    return images;
}

BatteryRow algebra_round_trip_row(const std::string& criterion, const std::string& name,
                                  const LieSuper& L) {
    std::string computed;
    try {
        FromLieResult fr = from_lie_parts(L);
        ToLieResult tr = to_lie_parts(fr.map);
        MorphismPair pair = morphism_from_lie_hom(L, tr.algebra, round_trip_images(L, fr, tr));
        bool iso = is_isomorphism(fr.map, from_lie(tr.algebra), pair) &&
                   tr.algebra.space.dims() == L.space.dims();
        computed = iso ? "isomorphic" : "not isomorphic";
    } catch (const Error& e) {
        computed = std::string("error: ") + e.what();
    }
    return row(criterion, name + " -> map -> algebra", "isomorphic", computed);
}

}  // namespace

// ----------------------------------------------------------- criteria ----

std::vector<BatteryRow> battery_even_heisenberg_capability(std::size_t max_m, std::size_t max_n,
                                                           const Field& field) {
    const std::string slug = "even-heisenberg-capability";
    std::vector<BatteryRow> out;
    for (std::size_t m = 0; m <= max_m; ++m)
        for (std::size_t n = 0; n <= max_n; ++n) {
            if (m + n == 0) continue;
            EpicenterReport e = epicenter(from_lie(heisenberg_even(m, n, field)), false);
            out.push_back(row(slug, heisenberg_even_name(m, n),
                              capable_str(m == 1 && n == 0), capable_str(e.capable)));
        }
    return out;
}

std::vector<BatteryRow> battery_odd_heisenberg_capability(std::size_t max_m,
                                                          const Field& field) {
    const std::string slug = "odd-heisenberg-capability";
    std::vector<BatteryRow> out;
    for (std::size_t m = 1; m <= max_m; ++m) {
        EpicenterReport e = epicenter(from_lie(heisenberg_odd(m, field)), false);
        out.push_back(row(slug, heisenberg_odd_name(m), capable_str(m == 1),
                          capable_str(e.capable)));
    }
    return out;
}

std::vector<BatteryRow> battery_heisenberg_abelian_capability(std::size_t max_k,
                                                              std::size_t max_l,
                                                              const Field& field) {
    const std::string slug = "heisenberg-abelian-capability";
    struct Core {
        LieSuper algebra;
        std::string name;
        bool capable;
    };
    const std::vector<Core> cores = {
        {heisenberg_even(1, 0, field), heisenberg_even_name(1, 0), true},
        {heisenberg_odd(1, field), heisenberg_odd_name(1), true},
        {heisenberg_even(2, 0, field), heisenberg_even_name(2, 0), false},
        {heisenberg_even(0, 1, field), heisenberg_even_name(0, 1), false},
        {heisenberg_odd(2, field), heisenberg_odd_name(2), false},
    };
    std::vector<BatteryRow> out;
    for (const Core& core : cores)
        for (std::size_t k = 0; k <= max_k; ++k)
            for (std::size_t l = 0; l <= max_l; ++l) {
                LieSuper L = direct_sum(core.algebra, abelian(k, l, field));
                out.push_back(row(slug, core.name + " (+) " + abelian_name(k, l),
                                  capable_str(core.capable), capable_str(is_capable_lie(L))));
            }
    return out;
}

std::vector<BatteryRow> battery_abelian_capability(std::size_t max_m, std::size_t max_n,
                                                   const Field& field) {
    const std::string slug = "abelian-capability";
    // stated truth table for 0 <= m,n <= 3 (rows m, columns n)
    const bool stated[4][4] = {
        {false, true, true, true},
        {false, true, true, true},
        {true, true, true, true},
        {true, true, true, true},
    };
    std::vector<BatteryRow> out;
    for (std::size_t m = 0; m <= max_m; ++m)
        for (std::size_t n = 0; n <= max_n; ++n) {
            bool expected =
                (m < 4 && n < 4) ? stated[m][n] : ((m == 0 && n == 1) || m + n >= 2);
            out.push_back(row(slug, abelian_name(m, n), capable_str(expected),
                              capable_str(is_capable_lie(abelian(m, n, field)))));
        }
    return out;
}

std::vector<BatteryRow> battery_generic_rank_dims(std::size_t max_m, std::size_t max_n,
                                                  const Field& field) {
    const std::string slug = "generic-rank-dims";
    auto choose2 = [](std::size_t a) { return a * (a > 0 ? a - 1 : 0) / 2; };
    std::vector<BatteryRow> out;
    for (std::size_t m = 1; m <= max_m; ++m)
        for (std::size_t n = 1; n <= max_n; ++n) {
            const std::size_t re = choose2(m) + choose2(n + 1);
            const std::size_t ro = m * n;

            SkewSuperMap f = generic_full(m, n, field);
            LieSuper L = to_lie(f);
            bool central = center(L) == derived_subalgebra(L);
            std::string expected = "rank " + DimPair{re, ro}.str() + ", dims " +
                                   DimPair{m + re, n + ro}.str() + ", Z(L) = L^2";
            std::string computed = "rank " + f.rank().str() + ", dims " + L.space.dims().str() +
                                   (central ? ", Z(L) = L^2" : ", Z(L) != L^2");
            out.push_back(row(slug, "generic-full(" + std::to_string(m) + "," +
                                        std::to_string(n) + ")",
                              expected, computed));

            SkewSuperMap fe = generic_even_full(m, n, field);
            out.push_back(row(slug, "generic-even(" + std::to_string(m) + "," +
                                        std::to_string(n) + ")",
                              "rank " + DimPair{re, 0}.str() + ", dims " +
                                  DimPair{m + re, n}.str(),
                              "rank " + fe.rank().str() + ", dims " +
                                  to_lie(fe).space.dims().str()));

            SkewSuperMap fo = generic_odd_full(m, n, field);
            out.push_back(row(slug, "generic-odd(" + std::to_string(m) + "," +
                                        std::to_string(n) + ")",
                              "rank " + DimPair{0, ro}.str() + ", dims " +
                                  DimPair{m, n + ro}.str(),
                              "rank " + fo.rank().str() + ", dims " +
                                  to_lie(fo).space.dims().str()));
        }
    return out;
}

std::vector<BatteryRow> battery_functor_round_trip(std::size_t max_total_dim,
                                                   std::size_t random_count,
                                                   const Field& field) {
    const std::string slug = "functor-round-trip";
    std::vector<BatteryRow> out;
    for (std::size_t m = 0; 2 * m + 1 <= max_total_dim; ++m)
        for (std::size_t n = 0; 2 * m + 1 + n <= max_total_dim; ++n) {
            if (m + n == 0) continue;
            out.push_back(algebra_round_trip_row(slug, heisenberg_even_name(m, n),
                                                 heisenberg_even(m, n, field)));
        }
    for (std::size_t m = 1; 2 * m + 1 <= max_total_dim; ++m)
        out.push_back(
            algebra_round_trip_row(slug, heisenberg_odd_name(m), heisenberg_odd(m, field)));

    const Field f5 = Field::prime(5);
    for (std::size_t t = 0; t < random_count; ++t) {
        SkewSuperMap f = seeded_map(t, 500 + t, f5);
        SkewSuperMap g = from_lie(to_lie(f));
        out.push_back(row(slug, "random map #" + std::to_string(t) + " " + dims_tag(f),
                          "recovered exactly", g == f ? "recovered exactly" : "changed"));
    }
    return out;
}

std::vector<BatteryRow> battery_decomposable_relations(std::size_t count) {
    const std::string slug = "decomposable-relations";
    const Field f5 = Field::prime(5);
    std::vector<BatteryRow> out;
    for (std::size_t t = 0; t < count; ++t) {
        SkewSuperMap fa = seeded_map(t, 1000 + 2 * t, f5);
        SkewSuperMap fb = seeded_map(t + 3, 1001 + 2 * t, f5);
        BlockSumResult b = block_sum(fa, fb);
        bool ok = decomposable_xf_check(b.map, b.v1, b.v2);
        out.push_back(row(slug,
                          "block sum #" + std::to_string(t) + " " + dims_tag(fa) + " + " +
                              dims_tag(fb),
                          "relation space decomposes", ok ? "relation space decomposes" : "gap"));
    }
    return out;
}

std::vector<BatteryRow> battery_quotient_monotonicity(std::size_t count) {
    const std::string slug = "quotient-monotonicity";
    const Field f5 = Field::prime(5);
    std::vector<BatteryRow> out;
    for (std::size_t t = 0; t < count; ++t) {
        // combos with rank total >= 2 so that a line is always proper
        static const std::size_t combos[] = {1, 3, 6, 7, 8, 9};
        SkewSuperMap f = seeded_map(combos[t % 6], 2000 + t, f5);
        BatteryRng rng(9000 + t);
        Vec g = zero_vec(f5, f.w.dim());
        std::size_t parity = rng.below(2);
        if ((parity == 0 ? f.w.even_dim() : f.w.odd_dim()) == 0) parity = 1 - parity;
        std::size_t lo = parity == 0 ? 0 : f.w.even_dim();
        std::size_t hi = parity == 0 ? f.w.even_dim() : f.w.dim();
        for (std::size_t k = lo; k < hi; ++k) g[k] = f5.from_int(int(rng.below(5)));
        GradedSubspace line = GradedSubspace::span(f.w, f5, {g});
        bool ok = line.dims() != f.w.dims() && check_quotient_monotonicity(f, line);
        out.push_back(row(slug,
                          "map #" + std::to_string(t) + " " + dims_tag(f) + " mod " +
                              line.dims().str(),
                          "epicenter descends", ok ? "epicenter descends" : "violated"));
    }
    return out;
}

std::vector<BatteryRow> battery_epicenter_block_sums(std::size_t max_m, std::size_t max_n,
                                                     const Field& field) {
    const std::string slug = "block-sum-epicenter";
    struct Core {
        LieSuper algebra;
        std::string name;
        RankOneClass::Family family;
        std::size_t m, n;
    };
    std::vector<Core> cores;
    for (std::size_t m = 0; m <= max_m; ++m)
        for (std::size_t n = 0; n <= max_n; ++n) {
            if (m + n == 0) continue;
            cores.push_back({heisenberg_even(m, n, field), heisenberg_even_name(m, n),
                             RankOneClass::Family::heisenberg_even, m, n});
        }
    for (std::size_t m = 1; m <= max_m; ++m)
        cores.push_back({heisenberg_odd(m, field), heisenberg_odd_name(m),
                         RankOneClass::Family::heisenberg_odd, m, 0});

    std::vector<BatteryRow> out;
    for (const Core& a : cores)
        for (const Core& b : cores) {
            BlockSumResult sum = block_sum(from_lie(a.algebra), from_lie(b.algebra));
            CentralSumEpicenterReport rep = central_sum_epicenter_check(sum.map, sum.v1, sum.v2);

            auto matches = [&](const GradedSubspace& block, const Core& core) {
                RankOneClass cls = classify_rank_one(restrict(sum.map, block).map);
                return cls.family == core.family && cls.m == core.m &&
                       (core.family == RankOneClass::Family::heisenberg_odd ||
                        cls.n == core.n) &&
                       cls.abelian == DimPair{0, 0};
            };
            bool blocks_match = matches(sum.v1, a) && matches(sum.v2, b);
            bool dims_match = to_lie(sum.map).space.dims() ==
                              a.algebra.space.dims() + b.algebra.space.dims();

            std::string expected = "disjoint targets, epicenter splits, blocks classify";
            std::string computed =
                rep.case_tag != "disjoint-targets" ? "case " + rep.case_tag
                : !rep.verified                    ? "epicenter does not split"
                : !blocks_match                    ? "block classification mismatch"
                : !dims_match                      ? "dimension mismatch"
                                                   : expected;
            out.push_back(row(slug, a.name + " | " + b.name, expected, computed));
        }
    return out;
}

std::vector<BatteryRow> battery_multiplier_spot_values(const Field& field) {
    const std::string slug = "multiplier-spot-values";
    struct Spot {
        LieSuper algebra;
        std::string name;
        DimPair frozen;
    };
    const std::vector<Spot> spots = {
        {heisenberg_even(1, 0, field), heisenberg_even_name(1, 0), {2, 0}},
        {heisenberg_even(2, 0, field), heisenberg_even_name(2, 0), {5, 0}},
        {heisenberg_odd(1, field), heisenberg_odd_name(1), {1, 1}},
    };
    std::vector<BatteryRow> out;
    for (const Spot& s : spots) {
        SkewSuperMap f = from_lie(s.algebra);
        DimPair oracle = brute_multiplier_dims(f);
        DimPair library = multiplier(f).total_dims;
        std::string expected = "library " + s.frozen.str() + ", oracle " + s.frozen.str();
        std::string computed = "library " + library.str() + ", oracle " + oracle.str();
        out.push_back(row(slug, "M(" + s.name + ")", expected, computed));
    }
    return out;
}

std::vector<BatteryRow> battery_rank_one_classification(std::size_t count, const Field& field) {
    const std::string slug = "rank-one-classification";
    BatteryRng rng(4000);
    std::vector<BatteryRow> out;
    for (std::size_t t = 0; t < count; ++t) {
        const std::size_t k = rng.below(3), l = rng.below(3);
        LieSuper core;
        std::string expected;
        if (rng.below(2) == 0) {
            std::size_t m = rng.below(3), n = rng.below(3);
            if (m + n == 0) m = 1;
            core = heisenberg_even(m, n, field);
            expected = heisenberg_even_name(m, n) + " (+) " + abelian_name(k, l);
        } else {
            std::size_t m = 1 + rng.below(2);
            core = heisenberg_odd(m, field);
            expected = heisenberg_odd_name(m) + " (+) " + abelian_name(k, l);
        }
        RankOneClass cls = classify_rank_one(from_lie(direct_sum(core, abelian(k, l, field))));
        out.push_back(row(slug, "instance #" + std::to_string(t), expected, cls.str()));
    }
    return out;
}

std::vector<BatteryRow> run_battery(const BatteryConfig& cfg) {
    std::vector<BatteryRow> out;
    append(out, battery_even_heisenberg_capability(cfg.even_grid_m, cfg.even_grid_n, cfg.field));
    append(out, battery_odd_heisenberg_capability(cfg.odd_max_m, cfg.field));
    append(out,
           battery_heisenberg_abelian_capability(cfg.summand_max_k, cfg.summand_max_l, cfg.field));
    append(out, battery_abelian_capability(cfg.abelian_grid_m, cfg.abelian_grid_n, cfg.field));
    append(out, battery_generic_rank_dims(cfg.generic_max_m, cfg.generic_max_n, cfg.field));
    append(out, battery_functor_round_trip(cfg.functor_max_dim, cfg.functor_random_count,
                                           cfg.field));
    append(out, battery_decomposable_relations(cfg.decomposable_count));
    append(out, battery_quotient_monotonicity(cfg.monotonicity_count));
    append(out, battery_epicenter_block_sums(cfg.block_sum_max_m, cfg.block_sum_max_n, cfg.field));
    append(out, battery_multiplier_spot_values(cfg.field));
    append(out, battery_rank_one_classification(cfg.rank_one_count, cfg.field));
    return out;
}

}  // namespace superlie

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "oracles.hpp"
#include "superlie/superspace.hpp"

using namespace superlie;
using helpers::unit;
using helpers::vec;

TEST_CASE("labels, parity, and lookup") {
    SuperSpace s({"x1", "x2"}, {"y"});
    CHECK(s.dims() == DimPair{2, 1});
    CHECK(s.dim() == 3);
    CHECK(s.parity(0) == 0);
    CHECK(s.parity(2) == 1);
    CHECK(s.label(2) == "y");
    CHECK(s.index_of("x2") == std::size_t{1});
    CHECK_FALSE(s.index_of("nope").has_value());
    CHECK_THROWS_AS(SuperSpace({"a", "a"}, {}), Error);
    CHECK_THROWS_AS(SuperSpace({"a"}, {"a"}), Error);
    CHECK(DimPair{2, 1}.str() == "(2|1)");
}

TEST_CASE("homogeneous parity detection") {
    Field q = Field::rationals();
    SuperSpace s({"x1", "x2"}, {"y"});
    CHECK(homogeneous_parity(s, vec(q, {1, 2, 0})) == 0);
    CHECK(homogeneous_parity(s, vec(q, {0, 0, 3})) == 1);
    CHECK_FALSE(homogeneous_parity(s, vec(q, {1, 0, 3})).has_value());
    CHECK(homogeneous_parity(s, vec(q, {0, 0, 0})) == 0);  // zero counts as even
}

TEST_CASE("graded subspace construction and membership") {
    Field q = Field::rationals();
    SuperSpace s({"x1", "x2"}, {"y1", "y2"});
    SUBCASE("empty generators give the zero subspace") {
        GradedSubspace z = GradedSubspace::span(s, q, {});
        CHECK(z.dims() == DimPair{0, 0});
        CHECK(z.contains(s, zero_vec(q, 4)));
        CHECK_FALSE(z.contains(s, unit(q, 4, 0)));
    }
    SUBCASE("scalar multiples collapse") {
        GradedSubspace g = GradedSubspace::span(s, q, {vec(q, {1, 0, 0, 0}), vec(q, {2, 0, 0, 0})});
        CHECK(g.dims() == DimPair{1, 0});
    }
    SUBCASE("all basis vectors give the whole space") {
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < 4; ++i) gens.push_back(unit(q, 4, i));
        CHECK(GradedSubspace::span(s, q, gens) == GradedSubspace::whole(s, q));
    }
    SUBCASE("independent labels are not members") {
        GradedSubspace g = GradedSubspace::span(s, q, {unit(q, 4, 1)});
        CHECK_FALSE(g.contains(s, unit(q, 4, 0)));
        CHECK(g.contains(s, vec(q, {0, 5, 0, 0})));
    }
    SUBCASE("mixed-parity generators split into homogeneous parts") {
        GradedSubspace g = GradedSubspace::span(s, q, {vec(q, {1, 0, 2, 0})});
        CHECK(g.dims() == DimPair{1, 1});
        CHECK(g.contains(s, unit(q, 4, 0)));
        CHECK(g.contains(s, unit(q, 4, 2)));
    }
}

TEST_CASE("sum, intersection, and quotient dims of graded subspaces") {
    Field f5 = Field::prime(5);
    SuperSpace s({"a", "b", "c"}, {"d", "e"});
    GradedSubspace g1 = GradedSubspace::span(s, f5, {vec(f5, {1, 1, 0, 0, 0})});
    GradedSubspace g2 =
        GradedSubspace::span(s, f5, {unit(f5, 5, 0), unit(f5, 5, 1), unit(f5, 5, 3)});
    CHECK(intersect(g1, g1) == g1);
    CHECK(sum(g1, GradedSubspace::zero(s, f5)) == g1);
    GradedSubspace meet = intersect(g1, g2);
    CHECK(meet.dims() == DimPair{1, 0});
    CHECK(meet.contains(s, vec(f5, {1, 1, 0, 0, 0})));
    CHECK(sum(g1, g2).dims() == DimPair{2, 1});
    CHECK(quotient_dims(meet, g2) == DimPair{1, 1});  // dims of g2 / meet
    CHECK(g2.contains_subspace(g1));
    CHECK_FALSE(g1.contains_subspace(g2));
}

TEST_CASE("graded modular dimension law over F_5") {
    oracles::TestRng rng(5150);
    Field f5 = Field::prime(5);
    SuperSpace s({"a", "b", "c", "d"}, {"e", "f", "g", "h"});
    auto random_subspace = [&]() {
        std::vector<Vec> gens;
        const std::size_t count = rng.below(5);
        for (std::size_t i = 0; i < count; ++i) {
            Vec v = zero_vec(f5, 8);
            for (std::size_t c = 0; c < 8; ++c)
                v[c] = f5.from_int(static_cast<long long>(rng.below(5)));
            gens.push_back(std::move(v));
        }
        return GradedSubspace::span(s, f5, gens);
    };
    for (int trial = 0; trial < 30; ++trial) {
        GradedSubspace a = random_subspace();
        GradedSubspace b = random_subspace();
        DimPair lhs = a.dims() + b.dims();
        DimPair rhs = sum(a, b).dims() + intersect(a, b).dims();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("reduce_in and basis_vectors") {
    Field q = Field::rationals();
    SuperSpace s({"a", "b"}, {"c"});
    GradedSubspace g = GradedSubspace::span(s, q, {vec(q, {1, 2, 0})});
    Vec r = g.reduce_in(s, vec(q, {3, 1, 4}));
    CHECK(r == vec(q, {0, -5, 4}));
    auto basis = g.basis_vectors(s, q);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == vec(q, {1, 2, 0}));
    CHECK(coords_in_graded(g, s, vec(q, {2, 4, 0})) == vec(q, {2}));
    CHECK_THROWS_AS(coords_in_graded(g, s, vec(q, {1, 0, 0})), Error);
}

TEST_CASE("tensor space dims on the closed-form grid") {
    Field q = Field::rationals();
    auto labels = [](const char* stem, std::size_t k) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < k; ++i) out.push_back(stem + std::to_string(i));
        return out;
    };
    SUBCASE("frozen examples") {
        TensorSpace a(SuperSpace(labels("v", 2), {}), SuperSpace(labels("w", 1), {}));
        CHECK(a.space().dims() == DimPair{2, 0});
        TensorSpace b(SuperSpace(labels("v", 1), labels("y", 1)),
                      SuperSpace({}, labels("z", 1)));
        CHECK(b.space().dims() == DimPair{1, 1});
        TensorSpace c(SuperSpace(labels("v", 2), labels("y", 2)),
                      SuperSpace(labels("w", 4), labels("z", 4)));
        CHECK(c.space().dims() == DimPair{16, 16});
    }
    SUBCASE("grid 0 <= m,n <= 5") {
        for (std::size_t m = 0; m <= 5; ++m)
            for (std::size_t n = 0; n <= 5; ++n) {
                SuperSpace v(labels("v", m), labels("y", n));
                SuperSpace w(labels("w", 2), labels("z", 3));
                TensorSpace t(v, w);
                CHECK(t.space().dims() == DimPair{2 * m + 3 * n, 3 * m + 2 * n});
                // position covers every (i,k) slot exactly once
                std::vector<bool> seen(t.space().dim(), false);
                for (std::size_t i = 0; i < v.dim(); ++i)
                    for (std::size_t k = 0; k < w.dim(); ++k) {
                        CHECK_FALSE(seen[t.position(i, k)]);
                        seen[t.position(i, k)] = true;
                    }
            }
    }
    SUBCASE("pure tensors are bilinear") {
        SuperSpace v(labels("v", 2), {});
        SuperSpace w(labels("w", 2), {});
        TensorSpace t(v, w);
        Vec x = vec(q, {1, 2});
        Vec y = vec(q, {3, -1});
        Vec lhs = t.pure_tensor(q, x, y);
        Vec rhs = zero_vec(q, 4);
        axpy(rhs, q.from_int(3), t.basis_tensor(q, 0, unit(q, 2, 0)));
        axpy(rhs, q.from_int(-1), t.basis_tensor(q, 0, unit(q, 2, 1)));
        axpy(rhs, q.from_int(6), t.basis_tensor(q, 1, unit(q, 2, 0)));
        axpy(rhs, q.from_int(-2), t.basis_tensor(q, 1, unit(q, 2, 1)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("super-wedge space dims") {
    auto labels = [](const char* stem, std::size_t k) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < k; ++i) out.push_back(stem + std::to_string(i));
        return out;
    };
    SUBCASE("frozen examples") {
        CHECK(WedgeSpace(SuperSpace(labels("v", 2), {})).space().dims() == DimPair{1, 0});
        CHECK(WedgeSpace(SuperSpace(labels("v", 1), labels("y", 1))).space().dims() ==
              DimPair{1, 1});
        CHECK(WedgeSpace(SuperSpace({}, labels("y", 2))).space().dims() == DimPair{3, 0});
    }
    SUBCASE("grid 0 <= m,n <= 5 follows C(m,2)+C(n+1,2) | mn") {
        for (std::size_t m = 0; m <= 5; ++m)
            for (std::size_t n = 0; n <= 5; ++n) {
                WedgeSpace ws(SuperSpace(labels("v", m), labels("y", n)));
                CHECK(ws.space().dims() ==
                      DimPair{m * (m - (m > 0 ? 1 : 0)) / 2 + n * (n + 1) / 2, m * n});
                CHECK(ws.pairs().size() == ws.space().dim());
            }
    }
}

TEST_CASE("embed and narrow round trips") {
    Field q = Field::rationals();
    SuperSpace s({"a", "b"}, {"c"});
    Vec v = vec(q, {1, 2, 3});
    CHECK(narrow_even(s, v) == vec(q, {1, 2}));
    CHECK(narrow_odd(s, v) == vec(q, {3}));
    CHECK(embed_even(s, q, vec(q, {1, 2})) == vec(q, {1, 2, 0}));
    CHECK(embed_odd(s, q, vec(q, {3})) == vec(q, {0, 0, 3}));
    CHECK(even_part(s, v) == vec(q, {1, 2, 0}));
    CHECK(odd_part(s, v) == vec(q, {0, 0, 3}));
}

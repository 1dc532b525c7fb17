#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "superlie/catalog.hpp"
#include "superlie/sske.hpp"

using namespace superlie;
using helpers::is_degree_zero_bijection;
using helpers::unit;
using helpers::vec;

namespace {

const Field Q = Field::rationals();

/// f(y1,y1) = z, f(y2,y2) = z on V = (0|2), W = (1|0).
SkewSuperMap odd_diagonal_pair() {
    SkewSuperMap f;
    f.field = Q;
    f.v = SuperSpace({}, {"y1", "y2"});
    f.w = SuperSpace({"z"}, {});
    f.tensor = zero_tensor(Q, f.v, f.w);
    f.tensor[0][0][0] = Q.one();
    f.tensor[1][1][0] = Q.one();
    return f;
}

}  // namespace

TEST_CASE("validation of structure maps") {
    SUBCASE("the map of H(1,0) is valid") {
        CHECK(validate_sske(from_lie(heisenberg_even(1, 0))).empty());
    }
    SUBCASE("unused target direction breaks the span condition") {
        SkewSuperMap f = from_lie(heisenberg_even(1, 0));
        f.w = SuperSpace({"z", "extra"}, {});
        for (auto& row : f.tensor)
            for (Vec& val : row) val.push_back(Q.zero());
        auto bad = validate_sske(f);
        REQUIRE(bad.size() == 1);
        CHECK(bad.front() == "image of f does not span the target space");
    }
    SUBCASE("odd-odd values must be even") {
        SkewSuperMap f;
        f.field = Q;
        f.v = SuperSpace({}, {"y"});
        f.w = SuperSpace({}, {"z"});
        f.tensor = zero_tensor(Q, f.v, f.w);
        f.tensor[0][0][0] = Q.one();
        bool found = false;
        for (const auto& msg : validate_sske(f))
            found = found || msg.find("grading") != std::string::npos;
        CHECK(found);
    }
    SUBCASE("trivial spaces are rejected") {
        SkewSuperMap f;
        f.field = Q;
        f.v = SuperSpace({"x"}, {});
        f.w = SuperSpace({}, {});
        f.tensor = zero_tensor(Q, f.v, f.w);
        auto bad = validate_sske(f);
        bool found = false;
        for (const auto& msg : bad) found = found || msg == "target space is trivial";
        CHECK(found);
        CHECK_THROWS_AS(require_valid(f), Error);
    }
}

TEST_CASE("from_lie on the named families") {
    SUBCASE("H(1,0)") {
        FromLieResult r = from_lie_parts(heisenberg_even(1, 0));
        CHECK(r.map.dimension() == DimPair{2, 0});
        CHECK(r.map.rank() == DimPair{1, 0});
        CHECK(r.map.v.even_labels() == std::vector<std::string>{"x1", "x2"});
        CHECK(r.map.w.even_labels() == std::vector<std::string>{"z"});
        CHECK(r.map.tensor[0][1] == vec(Q, {1}));
        CHECK(r.map.tensor[1][0] == vec(Q, {-1}));
    }
    SUBCASE("H_1") {
        SkewSuperMap f = from_lie(heisenberg_odd(1));
        CHECK(f.dimension() == DimPair{1, 1});
        CHECK(f.rank() == DimPair{0, 1});
        CHECK(f.tensor[0][1] == vec(Q, {1}));  // f(x1, y1) = z
    }
    SUBCASE("grid of dims") {
        for (std::size_t m = 0; m <= 2; ++m)
            for (std::size_t n = 0; n <= 2; ++n) {
                if (m + n == 0) continue;
                SkewSuperMap f = from_lie(heisenberg_even(m, n));
                CHECK(f.dimension() == DimPair{2 * m, n});
                CHECK(f.rank() == DimPair{1, 0});
                CHECK(validate_sske(f).empty());
            }
        for (std::size_t m = 1; m <= 3; ++m) {
            SkewSuperMap f = from_lie(heisenberg_odd(m));
            CHECK(f.dimension() == DimPair{m, m});
            CHECK(f.rank() == DimPair{0, 1});
        }
    }
    SUBCASE("abelian directions land in the domain") {
        SkewSuperMap f = from_lie(direct_sum(heisenberg_even(1, 0), abelian(1, 0)));
        CHECK(f.dimension() == DimPair{3, 0});
        CHECK(f.rank() == DimPair{1, 0});
        CHECK(radical(f).dims() == DimPair{1, 0});
    }
    SUBCASE("abelian algebras are rejected") {
        CHECK_THROWS_WITH_AS(from_lie(abelian(2, 1)),
                             "associated map: algebra is abelian (target would be trivial)",
                             Error);
    }
    SUBCASE("higher class is rejected") {
        LieSuper fil{Q, SuperSpace({"e1", "e2", "e3", "e4"}, {}), {}};
        fil.table = zero_table(Q, fil.space);
        fil.table[0][1] = unit(Q, 4, 2);
        fil.table[1][0] = scale(-Q.one(), unit(Q, 4, 2));
        fil.table[0][2] = unit(Q, 4, 3);
        fil.table[2][0] = scale(-Q.one(), unit(Q, 4, 3));
        CHECK_THROWS_WITH_AS(from_lie(fil), "associated map: nilpotency class exceeds two",
                             Error);
    }
}

TEST_CASE("to_lie on the named families") {
    SUBCASE("the map of H(1,0) rebuilds a 3-dim Heisenberg algebra") {
        LieSuper L = to_lie(from_lie(heisenberg_even(1, 0)));
        CHECK(validate(L).empty());
        CHECK(L.space.dims() == DimPair{3, 0});
        CHECK(is_generalized_heisenberg(L).is_heisenberg);
        // labels survive the round trip, so the rebuild is literally equal
        CHECK(L.space == heisenberg_even(1, 0).space);
        CHECK(L.table == heisenberg_even(1, 0).table);
    }
    SUBCASE("generic full map on (2|2) gives dims (6|6)") {
        LieSuper L = to_lie(generic_full(2, 2));
        CHECK(L.space.dims() == DimPair{6, 6});
        CHECK(validate(L).empty());
        CHECK(nilpotency_class_leq2(L) == NilClass::class_two);
    }
    SUBCASE("rank (0|1) map on (1|1) rebuilds H_1") {
        SkewSuperMap f;
        f.field = Q;
        f.v = SuperSpace({"x1"}, {"y1"});
        f.w = SuperSpace({}, {"z"});
        f.tensor = zero_tensor(Q, f.v, f.w);
        f.tensor[0][1][0] = Q.one();
        f.tensor[1][0][0] = -Q.one();
        LieSuper L = to_lie(f);
        CHECK(L.space == heisenberg_odd(1).space);
        CHECK(L.table == heisenberg_odd(1).table);
    }
    SUBCASE("label collisions between V and W are renamed") {
        SkewSuperMap f = from_lie(heisenberg_even(1, 0));
        f.w = SuperSpace({"x1"}, {});  // collides with the domain label
        ToLieResult r = to_lie_parts(f);
        CHECK(validate(r.algebra).empty());
        CHECK(r.algebra.space.label(r.w_index[0]) == "x1'");
    }
}

TEST_CASE("round trips") {
    SUBCASE("map -> algebra -> map is the identity on the nose") {
        for (const SkewSuperMap& f :
             {from_lie(heisenberg_even(2, 1)), from_lie(heisenberg_odd(2)), generic_full(2, 2),
              generic_even_full(2, 2), generic_odd_full(2, 2), odd_diagonal_pair()}) {
            SkewSuperMap g = from_lie(to_lie(f));
            CHECK(g == f);
        }
    }
    SUBCASE("algebra -> map -> algebra is the identity for generalized Heisenbergs") {
        for (const LieSuper& L : {heisenberg_even(2, 1), heisenberg_odd(3)}) {
            LieSuper M = to_lie(from_lie(L));
            CHECK(M.space == L.space);
            CHECK(M.table == L.table);
        }
    }
}

TEST_CASE("morphisms") {
    LieSuper h = heisenberg_even(1, 0);
    SkewSuperMap f = from_lie(h);
    SUBCASE("identity lifts to the identity pair") {
        MorphismPair p =
            morphism_from_lie_hom(h, h, {unit(Q, 3, 0), unit(Q, 3, 1), unit(Q, 3, 2)});
        CHECK(p.delta1[0] == vec(Q, {1, 0}));
        CHECK(p.delta1[1] == vec(Q, {0, 1}));
        CHECK(p.delta2[0] == vec(Q, {1}));
        CHECK(validate_morphism(f, f, p).empty());
        CHECK(is_isomorphism(f, f, p));
    }
    SUBCASE("zero map lifts to the zero pair and is no isomorphism") {
        std::vector<Vec> zero(3, zero_vec(Q, 3));
        MorphismPair p = morphism_from_lie_hom(h, h, zero);
        CHECK(is_zero_vec(p.delta1[0]));
        CHECK(is_zero_vec(p.delta2[0]));
        CHECK(validate_morphism(f, f, p).empty());
        CHECK_FALSE(is_isomorphism(f, f, p));
    }
    SUBCASE("compensated scaling is an isomorphism with identity target part") {
        std::vector<Vec> images = {scale(Q.from_int(2), unit(Q, 3, 0)),
                                   scale(Q.parse("1/2"), unit(Q, 3, 1)), unit(Q, 3, 2)};
        MorphismPair p = morphism_from_lie_hom(h, h, images);
        CHECK(p.delta2[0] == vec(Q, {1}));
        CHECK(validate_morphism(f, f, p).empty());
        CHECK(is_isomorphism(f, f, p));
    }
    SUBCASE("non-homomorphisms are rejected") {
        std::vector<Vec> bad = {scale(Q.from_int(2), unit(Q, 3, 0)), unit(Q, 3, 1),
                                unit(Q, 3, 2)};
        CHECK_THROWS_WITH_AS(morphism_from_lie_hom(h, h, bad),
                             "morphism: the given map is not a degree-zero homomorphism", Error);
    }
    SUBCASE("composition of valid pairs is valid") {
        std::vector<Vec> images = {scale(Q.from_int(2), unit(Q, 3, 0)),
                                   scale(Q.parse("1/2"), unit(Q, 3, 1)), unit(Q, 3, 2)};
        MorphismPair p = morphism_from_lie_hom(h, h, images);
        MorphismPair pp = compose(p, p);
        CHECK(validate_morphism(f, f, pp).empty());
        CHECK(pp.delta1[0] == vec(Q, {4, 0}));
        CHECK(is_isomorphism(f, f, pp));
    }
    SUBCASE("commuting-square violations are reported") {
        MorphismPair broken;
        broken.delta1 = {vec(Q, {0, 1}), vec(Q, {1, 0})};  // swap x1, x2
        broken.delta2 = {vec(Q, {1})};                     // but keep z
        auto bad = validate_morphism(f, f, broken);
        bool found = false;
        for (const auto& msg : bad) found = found || msg.find("square") != std::string::npos;
        CHECK(found);
    }
}

TEST_CASE("radical and nondegeneracy") {
    CHECK(radical(from_lie(heisenberg_even(1, 0))).dims() == DimPair{0, 0});
    CHECK(is_nondegenerate(from_lie(heisenberg_even(2, 2))));
    SkewSuperMap with_radical = from_lie(direct_sum(heisenberg_even(1, 0), abelian(1, 0)));
    CHECK(radical(with_radical).dims() == DimPair{1, 0});
    CHECK_FALSE(is_nondegenerate(with_radical));
    CHECK(radical(odd_diagonal_pair()).dims() == DimPair{0, 0});
}

TEST_CASE("parity type of maps") {
    CHECK(is_even_map(from_lie(heisenberg_even(2, 2))));
    CHECK_FALSE(is_odd_map(from_lie(heisenberg_even(2, 2))));
    CHECK(is_odd_map(from_lie(heisenberg_odd(2))));
    CHECK_FALSE(is_even_map(from_lie(heisenberg_odd(2))));
    SkewSuperMap g = generic_full(2, 2);
    CHECK_FALSE(is_even_map(g));
    CHECK_FALSE(is_odd_map(g));
    // a purely even map with odd domain directions is also an even map
    CHECK(is_even_map(generic_even_full(2, 2)));
    CHECK(is_odd_map(generic_odd_full(2, 2)));
}

TEST_CASE("restriction") {
    SkewSuperMap f = from_lie(heisenberg_even(2, 0));
    SUBCASE("restricting H(2,0) to a paired plane gives the H(1,0) map") {
        // pairing is x1<->x3, x2<->x4; take the span of x1, x3
        GradedSubspace v1 =
            GradedSubspace::span(f.v, Q, {unit(Q, 4, 0), unit(Q, 4, 2)});
        RestrictResult r = restrict(f, v1);
        CHECK(r.map.dimension() == DimPair{2, 0});
        CHECK(r.map.rank() == DimPair{1, 0});
        CHECK(r.map.tensor[0][1] == vec(Q, {1}));
        CHECK(validate_sske(r.map).empty());
        CHECK(r.w_sub == GradedSubspace::whole(f.w, Q));
    }
    SUBCASE("restricting the generic (2|2) map to the even part") {
        SkewSuperMap g = generic_full(2, 2);
        GradedSubspace v0 =
            GradedSubspace::span(g.v, Q, {unit(Q, 4, 0), unit(Q, 4, 1)});
        RestrictResult r = restrict(g, v0);
        CHECK(r.map.rank() == DimPair{1, 0});
        CHECK(is_even_map(r.map));
    }
    SUBCASE("restriction to an annihilated line is rejected") {
        SkewSuperMap g = from_lie(direct_sum(heisenberg_even(1, 0), abelian(1, 0)));
        CHECK_THROWS_WITH_AS(restrict(g, radical(g)),
                             "restriction: the restricted image is trivial (not a valid object)",
                             Error);
    }
}

TEST_CASE("decompositions") {
    SUBCASE("two natural blocks of a direct sum decompose the map") {
        SkewSuperMap f = from_lie(direct_sum(heisenberg_even(1, 0), heisenberg_even(1, 0)));
        GradedSubspace v1 = GradedSubspace::span(f.v, Q, {unit(Q, 4, 0), unit(Q, 4, 1)});
        GradedSubspace v2 = GradedSubspace::span(f.v, Q, {unit(Q, 4, 2), unit(Q, 4, 3)});
        CHECK(verify_decomposition(f, v1, v2));
        // image spans of the blocks fill W jointly
        RestrictResult r1 = restrict(f, v1);
        RestrictResult r2 = restrict(f, v2);
        CHECK(sum(r1.w_sub, r2.w_sub) == GradedSubspace::whole(f.w, Q));
    }
    SUBCASE("interacting blocks are rejected") {
        SkewSuperMap f = from_lie(heisenberg_even(2, 0));
        GradedSubspace v1 = GradedSubspace::span(f.v, Q, {unit(Q, 4, 0), unit(Q, 4, 1)});
        GradedSubspace v2 = GradedSubspace::span(f.v, Q, {unit(Q, 4, 2), unit(Q, 4, 3)});
        CHECK_FALSE(verify_decomposition(f, v1, v2));  // f(x1, x3) = z
    }
    SUBCASE("trivial splits are rejected") {
        SkewSuperMap f = from_lie(heisenberg_even(2, 0));
        CHECK_FALSE(verify_decomposition(f, GradedSubspace::whole(f.v, Q),
                                         GradedSubspace::zero(f.v, Q)));
    }
    SUBCASE("basis-aligned search finds the H(2,0) split") {
        SkewSuperMap f = from_lie(heisenberg_even(2, 0));
        auto split = find_basis_aligned_decomposition(f);
        REQUIRE(split.has_value());
        CHECK(verify_decomposition(f, split->first, split->second));
        // components are {x1,x3} and {x2,x4}
        CHECK(split->first.dims() == DimPair{2, 0});
        CHECK(split->second.dims() == DimPair{2, 0});
        CHECK(split->first.contains(f.v, unit(Q, 4, 0)));
        CHECK(split->first.contains(f.v, unit(Q, 4, 2)));
    }
    SUBCASE("connected maps admit no basis-aligned split") {
        CHECK_FALSE(find_basis_aligned_decomposition(from_lie(heisenberg_even(1, 0))).has_value());
        CHECK_FALSE(find_basis_aligned_decomposition(generic_full(2, 2)).has_value());
        CHECK_FALSE(find_basis_aligned_decomposition(from_lie(heisenberg_even(0, 1))).has_value());
    }
    SUBCASE("block sums decompose by construction") {
        BlockSumResult b = block_sum(from_lie(heisenberg_even(1, 1)), from_lie(heisenberg_odd(1)));
        CHECK(validate_sske(b.map).empty());
        CHECK(b.map.dimension() == DimPair{3, 2});
        CHECK(b.map.rank() == DimPair{1, 1});
        CHECK(verify_decomposition(b.map, b.v1, b.v2));
        CHECK(intersect(b.w1, b.w2).dims() == DimPair{0, 0});
        RestrictResult r1 = restrict(b.map, b.v1);
        CHECK(r1.map.rank() == DimPair{1, 0});
        RestrictResult r2 = restrict(b.map, b.v2);
        CHECK(r2.map.rank() == DimPair{0, 1});
    }
}

TEST_CASE("center of the rebuilt algebra is W plus the radical") {
    for (const SkewSuperMap& f :
         {from_lie(direct_sum(heisenberg_even(1, 0), abelian(1, 2))), generic_full(2, 1),
          from_lie(heisenberg_odd(2))}) {
        ToLieResult r = to_lie_parts(f);
        GradedSubspace zc = center(r.algebra);
        std::vector<Vec> gens;
        for (std::size_t k = 0; k < f.w.dim(); ++k)
            gens.push_back(unit(Q, r.algebra.dim(), r.w_index[k]));
        for (const Vec& rad : radical(f).basis_vectors(f.v, Q)) {
            Vec lifted = zero_vec(Q, r.algebra.dim());
            for (std::size_t i = 0; i < f.v.dim(); ++i) lifted[r.v_index[i]] = rad[i];
            gens.push_back(std::move(lifted));
        }
        CHECK(zc == GradedSubspace::span(r.algebra.space, Q, gens));
    }
}

#include "superlie/sske.hpp"

#include <unordered_set>

namespace superlie {

namespace {

Scalar parity_sign(const Field& field, int pa, int pb) {
    return (pa * pb) % 2 != 0 ? -field.one() : field.one();
}

Vec basis_vec(const Field& field, std::size_t n, std::size_t i) {
    Vec e = zero_vec(field, n);
    e[i] = field.one();
    return e;
}

/// Labels of the canonical basis of a subspace, named after its pivot
/// coordinates in the ambient space; (even list, odd list).
std::pair<std::vector<std::string>, std::vector<std::string>> pivot_labels(
    const SuperSpace& ambient, const GradedSubspace& s) {
    std::vector<std::string> even, odd;
    for (std::size_t p : s.even().pivots) even.push_back(ambient.label(p));
    for (std::size_t p : s.odd().pivots) odd.push_back(ambient.label(ambient.even_dim() + p));
    return {std::move(even), std::move(odd)};
}

/// Rename labels until they avoid everything already in `used`.
std::string claim(std::unordered_set<std::string>& used, const std::string& l) {
    std::string c = l;
    while (!used.insert(c).second) c += "'";
    return c;
}

/// images[i] = image of basis vector i.  True iff the map is bijective and
/// degree zero (checked blockwise with exact ranks).
bool bijective_degree_zero(const Field& field, const SuperSpace& src, const SuperSpace& dst,
                           const std::vector<Vec>& images) {
    if (images.size() != src.dim()) throw Error("one image per basis vector required");
    if (src.even_dim() != dst.even_dim() || src.odd_dim() != dst.odd_dim()) return false;
    Matrix even(field, dst.even_dim()), odd(field, dst.odd_dim());
    for (std::size_t i = 0; i < images.size(); ++i) {
        const Vec& im = images[i];
        if (im.size() != dst.dim()) throw Error("image length mismatch");
        if (!is_zero_vec(im)) {
            auto p = homogeneous_parity(dst, im);
            if (!p || *p != src.parity(i)) return false;
        }
        if (src.parity(i) == 0)
            even.push_row(Vec(im.begin(), im.begin() + static_cast<std::ptrdiff_t>(dst.even_dim())));
        else
            odd.push_row(Vec(im.begin() + static_cast<std::ptrdiff_t>(dst.even_dim()), im.end()));
    }
    return rank(even) == dst.even_dim() && rank(odd) == dst.odd_dim();
}

/// Linear extension: sum of v[i] * images[i].
Vec push_through(const Field& field, const std::vector<Vec>& images, std::size_t out_dim, const Vec& v) {
    Vec out = zero_vec(field, out_dim);
    if (v.size() != images.size()) throw Error("vector length mismatch");
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) axpy(out, v[i], images[i]);
    return out;
}

}  // namespace

Vec SkewSuperMap::apply(const Vec& x, const Vec& y) const {
    if (x.size() != v.dim() || y.size() != v.dim()) throw Error("apply argument length mismatch");
    Vec out = zero_vec(field, w.dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i];
            c *= y[j];
            axpy(out, c, tensor[i][j]);
        }
    }
    return out;
}

std::vector<std::vector<Vec>> zero_tensor(const Field& field, const SuperSpace& v, const SuperSpace& w) {
    return {v.dim(), std::vector<Vec>(v.dim(), zero_vec(field, w.dim()))};
}

std::vector<std::string> validate_sske(const SkewSuperMap& f) {
    std::vector<std::string> bad;
    const std::size_t n = f.v.dim();
    if (f.tensor.size() != n) {
        bad.push_back("structure tensor must have one row per domain basis vector");
        return bad;
    }
    for (const auto& row : f.tensor) {
        if (row.size() != n) {
            bad.push_back("structure tensor row has wrong length");
            return bad;
        }
        for (const Vec& val : row) {
            if (val.size() != f.w.dim()) {
                bad.push_back("structure tensor value has wrong coordinate count");
                return bad;
            }
        }
    }
    if (f.v.dim() == 0) bad.push_back("domain space is trivial");
    if (f.w.dim() == 0) bad.push_back("target space is trivial");

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& val = f.tensor[i][j];
            if (is_zero_vec(val)) continue;
            const int want = (f.v.parity(i) + f.v.parity(j)) % 2;
            auto got = homogeneous_parity(f.w, val);
            if (!got || *got != want)
                bad.push_back("grading: f(" + f.v.label(i) + ", " + f.v.label(j) +
                              ") is not homogeneous of parity " + std::to_string(want));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Vec t = f.tensor[i][j];
            axpy(t, parity_sign(f.field, f.v.parity(i), f.v.parity(j)), f.tensor[j][i]);
            if (!is_zero_vec(t))
                bad.push_back("skew-symmetry: f(" + f.v.label(i) + ", " + f.v.label(j) +
                              ") + (-1)^{|" + f.v.label(i) + "||" + f.v.label(j) + "|}f(" +
                              f.v.label(j) + ", " + f.v.label(i) + ") != 0");
        }
    }
    std::vector<Vec> image;
    for (const auto& row : f.tensor)
        for (const Vec& val : row)
            if (!is_zero_vec(val)) image.push_back(val);
    if (GradedSubspace::span(f.w, f.field, image) != GradedSubspace::whole(f.w, f.field))
        bad.push_back("image of f does not span the target space");
    return bad;
}

void require_valid(const SkewSuperMap& f) {
    std::vector<std::string> bad = validate_sske(f);
    if (bad.empty()) return;
    std::string msg = "invalid skew map:";
    for (const auto& b : bad) msg += "\n  " + b;
    throw Error(msg);
}

FromLieResult from_lie_parts(const LieSuper& L) {
    switch (nilpotency_class_leq2(L)) {
        case NilClass::abelian:
            throw Error("associated map: algebra is abelian (target would be trivial)");
        case NilClass::higher:
            throw Error("associated map: nilpotency class exceeds two");
        case NilClass::class_two: break;
    }
    FromLieResult out;
    out.derived = derived_subalgebra(L);

    const std::size_t m = L.space.even_dim(), n = L.dim();
    std::vector<bool> pivot(n, false);
    for (std::size_t p : out.derived.even().pivots) pivot[p] = true;
    for (std::size_t p : out.derived.odd().pivots) pivot[m + p] = true;
    std::vector<std::string> v_even, v_odd;
    for (std::size_t i = 0; i < n; ++i) {
        if (pivot[i]) continue;
        out.v_lift.push_back(i);
        (L.space.parity(i) == 0 ? v_even : v_odd).push_back(L.space.label(i));
    }
    auto [w_even, w_odd] = pivot_labels(L.space, out.derived);

    out.map.field = L.field;
    out.map.v = SuperSpace(std::move(v_even), std::move(v_odd));
    out.map.w = SuperSpace(std::move(w_even), std::move(w_odd));
    const std::size_t q = out.v_lift.size();
    out.map.tensor.assign(q, std::vector<Vec>(q, zero_vec(L.field, out.map.w.dim())));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            out.map.tensor[i][j] =
                coords_in_graded(out.derived, L.space, L.table[out.v_lift[i]][out.v_lift[j]]);
    return out;
}

SkewSuperMap from_lie(const LieSuper& L) { return from_lie_parts(L).map; }

ToLieResult to_lie_parts(const SkewSuperMap& f) {
    require_valid(f);
    std::unordered_set<std::string> used;
    for (std::size_t i = 0; i < f.v.dim(); ++i) used.insert(f.v.label(i));
    std::vector<std::string> even = f.v.even_labels();
    for (const auto& l : f.w.even_labels()) even.push_back(claim(used, l));
    std::vector<std::string> odd = f.v.odd_labels();
    for (const auto& l : f.w.odd_labels()) odd.push_back(claim(used, l));

    const std::size_t mv = f.v.even_dim(), mw = f.w.even_dim(), nv = f.v.odd_dim();
    auto vmap = [mv, mw](std::size_t i) { return i < mv ? i : mw + i; };
    auto wmap = [mv, mw, nv](std::size_t k) { return k < mw ? mv + k : mv + nv + k; };

    ToLieResult out;
    out.algebra.field = f.field;
    out.algebra.space = SuperSpace(std::move(even), std::move(odd));
    out.algebra.table = zero_table(f.field, out.algebra.space);
    for (std::size_t i = 0; i < f.v.dim(); ++i)
        for (std::size_t j = 0; j < f.v.dim(); ++j) {
            Vec& t = out.algebra.table[vmap(i)][vmap(j)];
            for (std::size_t k = 0; k < f.w.dim(); ++k) t[wmap(k)] = f.tensor[i][j][k];
        }
    for (std::size_t i = 0; i < f.v.dim(); ++i) out.v_index.push_back(vmap(i));
    for (std::size_t k = 0; k < f.w.dim(); ++k) out.w_index.push_back(wmap(k));
    return out;
}

LieSuper to_lie(const SkewSuperMap& f) { return to_lie_parts(f).algebra; }

std::vector<std::string> validate_morphism(const SkewSuperMap& f1, const SkewSuperMap& f2,
                                           const MorphismPair& m) {
    std::vector<std::string> bad;
    if (m.delta1.size() != f1.v.dim() || m.delta2.size() != f1.w.dim()) {
        bad.push_back("morphism components have wrong sizes");
        return bad;
    }
    for (const Vec& im : m.delta1)
        if (im.size() != f2.v.dim()) {
            bad.push_back("domain component image has wrong length");
            return bad;
        }
    for (const Vec& im : m.delta2)
        if (im.size() != f2.w.dim()) {
            bad.push_back("target component image has wrong length");
            return bad;
        }
    for (std::size_t i = 0; i < m.delta1.size(); ++i) {
        if (is_zero_vec(m.delta1[i])) continue;
        auto p = homogeneous_parity(f2.v, m.delta1[i]);
        if (!p || *p != f1.v.parity(i))
            bad.push_back("domain component is not degree zero at " + f1.v.label(i));
    }
    for (std::size_t k = 0; k < m.delta2.size(); ++k) {
        if (is_zero_vec(m.delta2[k])) continue;
        auto p = homogeneous_parity(f2.w, m.delta2[k]);
        if (!p || *p != f1.w.parity(k))
            bad.push_back("target component is not degree zero at " + f1.w.label(k));
    }
    for (std::size_t i = 0; i < f1.v.dim(); ++i)
        for (std::size_t j = 0; j < f1.v.dim(); ++j) {
            Vec lhs = push_through(f2.field, m.delta2, f2.w.dim(), f1.tensor[i][j]);
            Vec rhs = f2.apply(m.delta1[i], m.delta1[j]);
            if (lhs != rhs)
                bad.push_back("square does not commute at (" + f1.v.label(i) + ", " +
                              f1.v.label(j) + ")");
        }
    return bad;
}

MorphismPair morphism_from_lie_hom(const LieSuper& L1, const LieSuper& L2,
                                   const std::vector<Vec>& images) {
    if (!is_homomorphism(L1, L2, images))
        throw Error("morphism: the given map is not a degree-zero homomorphism");
    FromLieResult a = from_lie_parts(L1);
    FromLieResult b = from_lie_parts(L2);

    // delta(L1²) ⊆ L2² holds for every homomorphism; check defensively.
    for (const Vec& d : a.derived.basis_vectors(L1.space, L1.field)) {
        Vec im = push_through(L2.field, images, L2.dim(), d);
        if (!b.derived.contains(L2.space, im))
            throw Error("morphism: image of the derived subalgebra escapes the derived subalgebra");
    }

    MorphismPair out;
    for (std::size_t k = 0; k < a.v_lift.size(); ++k) {
        Vec im = b.derived.reduce_in(L2.space, images[a.v_lift[k]]);
        Vec coords = zero_vec(L2.field, b.v_lift.size());
        for (std::size_t t = 0; t < b.v_lift.size(); ++t) coords[t] = im[b.v_lift[t]];
        out.delta1.push_back(std::move(coords));
    }
    for (const Vec& d : a.derived.basis_vectors(L1.space, L1.field)) {
        Vec im = push_through(L2.field, images, L2.dim(), d);
        out.delta2.push_back(coords_in_graded(b.derived, L2.space, im));
    }
    return out;
}

bool is_isomorphism(const SkewSuperMap& f1, const SkewSuperMap& f2, const MorphismPair& m) {
    return bijective_degree_zero(f1.field, f1.v, f2.v, m.delta1) &&
           bijective_degree_zero(f1.field, f1.w, f2.w, m.delta2);
}

namespace {

std::vector<Vec> compose_component(const std::vector<Vec>& outer, const std::vector<Vec>& inner) {
    std::vector<Vec> out;
    for (const Vec& v : inner) {
        if (v.size() != outer.size()) throw Error("compose: middle dimensions do not match");
        if (outer.empty()) throw Error("compose: trivial middle space");
        Vec im(outer.front().size(), Scalar());
        if (!outer.front().empty()) {
            im = Vec(outer.front().size(), outer.front().front().field().zero());
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!v[k].is_zero()) axpy(im, v[k], outer[k]);
        }
        out.push_back(std::move(im));
    }
    return out;
}

}  // namespace

MorphismPair compose(const MorphismPair& outer, const MorphismPair& inner) {
    return {compose_component(outer.delta1, inner.delta1),
            compose_component(outer.delta2, inner.delta2)};
}

GradedSubspace radical(const SkewSuperMap& f) {
    const std::size_t n = f.v.dim(), r = f.w.dim();
    // u in the radical iff sum_j u_j f(e_i, e_j) = 0 for all i: one
    // condition per (i, target coordinate k).
    Matrix sys(f.field, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < r; ++k) {
            Vec row = zero_vec(f.field, n);
            bool any = false;
            for (std::size_t j = 0; j < n; ++j) {
                row[j] = f.tensor[i][j][k];
                any = any || !row[j].is_zero();
            }
            if (any) sys.push_row(std::move(row));
        }
    }
    return GradedSubspace::span(f.v, f.field, right_kernel(sys).rows);
}

bool is_nondegenerate(const SkewSuperMap& f) { return radical(f).dims().total() == 0; }

bool is_even_map(const SkewSuperMap& f) {
    for (std::size_t i = 0; i < f.v.dim(); ++i)
        for (std::size_t j = 0; j < f.v.dim(); ++j)
            if (f.v.parity(i) != f.v.parity(j) && !is_zero_vec(f.tensor[i][j])) return false;
    return true;
}

bool is_odd_map(const SkewSuperMap& f) {
    for (std::size_t i = 0; i < f.v.dim(); ++i)
        for (std::size_t j = 0; j < f.v.dim(); ++j)
            if (f.v.parity(i) == f.v.parity(j) && !is_zero_vec(f.tensor[i][j])) return false;
    return true;
}

RestrictResult restrict(const SkewSuperMap& f, const GradedSubspace& v1) {
    RestrictResult out;
    out.v_basis = v1.basis_vectors(f.v, f.field);
    const std::size_t q = out.v_basis.size();

    std::vector<Vec> image;
    for (std::size_t r = 0; r < q; ++r)
        for (std::size_t s = 0; s < q; ++s) {
            Vec val = f.apply(out.v_basis[r], out.v_basis[s]);
            if (!is_zero_vec(val)) image.push_back(std::move(val));
        }
    out.w_sub = GradedSubspace::span(f.w, f.field, image);
    if (out.w_sub.dims().total() == 0)
        throw Error("restriction: the restricted image is trivial (not a valid object)");

    auto [v_even, v_odd] = pivot_labels(f.v, v1);
    auto [w_even, w_odd] = pivot_labels(f.w, out.w_sub);
    out.map.field = f.field;
    out.map.v = SuperSpace(std::move(v_even), std::move(v_odd));
    out.map.w = SuperSpace(std::move(w_even), std::move(w_odd));
    out.map.tensor.assign(q, std::vector<Vec>(q, zero_vec(f.field, out.map.w.dim())));
    for (std::size_t r = 0; r < q; ++r)
        for (std::size_t s = 0; s < q; ++s)
            out.map.tensor[r][s] =
                coords_in_graded(out.w_sub, f.w, f.apply(out.v_basis[r], out.v_basis[s]));
    out.w_basis = out.w_sub.basis_vectors(f.w, f.field);
    return out;
}

bool verify_decomposition(const SkewSuperMap& f, const GradedSubspace& v1,
                          const GradedSubspace& v2) {
    if (v1.dims().total() == 0 || v2.dims().total() == 0) return false;  // must be non-trivial
    if (intersect(v1, v2).dims().total() != 0) return false;
    if ((v1.dims() + v2.dims()) != f.v.dims()) return false;
    for (const Vec& b1 : v1.basis_vectors(f.v, f.field))
        for (const Vec& b2 : v2.basis_vectors(f.v, f.field))
            if (!is_zero_vec(f.apply(b1, b2))) return false;
    return true;
}

std::optional<std::pair<GradedSubspace, GradedSubspace>> find_basis_aligned_decomposition(
    const SkewSuperMap& f) {
    const std::size_t n = f.v.dim();
    if (n < 2) return std::nullopt;
    std::vector<std::size_t> comp(n, n);
    std::size_t next = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (comp[start] != n) continue;
        std::vector<std::size_t> stack{start};
        comp[start] = next;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j) {
                if (comp[j] != n || is_zero_vec(f.tensor[i][j])) continue;
                comp[j] = next;
                stack.push_back(j);
            }
        }
        ++next;
    }
    if (next < 2) return std::nullopt;
    std::vector<Vec> g1, g2;
    for (std::size_t i = 0; i < n; ++i)
        (comp[i] == 0 ? g1 : g2).push_back(basis_vec(f.field, n, i));
    return std::make_pair(GradedSubspace::span(f.v, f.field, g1),
                          GradedSubspace::span(f.v, f.field, g2));
}

BlockSumResult block_sum(const SkewSuperMap& a, const SkewSuperMap& b) {
    if (!(a.field == b.field)) throw Error("block sum: field mismatch");
    std::unordered_set<std::string> used_v, used_w;
    for (std::size_t i = 0; i < a.v.dim(); ++i) used_v.insert(a.v.label(i));
    for (std::size_t k = 0; k < a.w.dim(); ++k) used_w.insert(a.w.label(k));
    std::vector<std::string> v_even = a.v.even_labels(), v_odd = a.v.odd_labels();
    std::vector<std::string> w_even = a.w.even_labels(), w_odd = a.w.odd_labels();
    for (const auto& l : b.v.even_labels()) v_even.push_back(claim(used_v, l));
    for (const auto& l : b.v.odd_labels()) v_odd.push_back(claim(used_v, l));
    for (const auto& l : b.w.even_labels()) w_even.push_back(claim(used_w, l));
    for (const auto& l : b.w.odd_labels()) w_odd.push_back(claim(used_w, l));

    const std::size_t mva = a.v.even_dim(), mvb = b.v.even_dim(), nva = a.v.odd_dim();
    const std::size_t mwa = a.w.even_dim(), mwb = b.w.even_dim(), nwa = a.w.odd_dim();
    auto vmap_a = [mva, mvb](std::size_t i) { return i < mva ? i : mvb + i; };
    auto vmap_b = [mva, mvb, nva](std::size_t i) { return i < mvb ? mva + i : mva + nva + i; };
    auto wmap_a = [mwa, mwb](std::size_t k) { return k < mwa ? k : mwb + k; };
    auto wmap_b = [mwa, mwb, nwa](std::size_t k) { return k < mwb ? mwa + k : mwa + nwa + k; };

    BlockSumResult out;
    out.map.field = a.field;
    out.map.v = SuperSpace(std::move(v_even), std::move(v_odd));
    out.map.w = SuperSpace(std::move(w_even), std::move(w_odd));
    out.map.tensor = zero_tensor(a.field, out.map.v, out.map.w);
    for (std::size_t i = 0; i < a.v.dim(); ++i)
        for (std::size_t j = 0; j < a.v.dim(); ++j) {
            Vec& t = out.map.tensor[vmap_a(i)][vmap_a(j)];
            for (std::size_t k = 0; k < a.w.dim(); ++k) t[wmap_a(k)] = a.tensor[i][j][k];
        }
    for (std::size_t i = 0; i < b.v.dim(); ++i)
        for (std::size_t j = 0; j < b.v.dim(); ++j) {
            Vec& t = out.map.tensor[vmap_b(i)][vmap_b(j)];
            for (std::size_t k = 0; k < b.w.dim(); ++k) t[wmap_b(k)] = b.tensor[i][j][k];
        }

    auto block_span = [&](const SuperSpace& ambient, auto&& index_map, std::size_t count) {
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < count; ++i)
            gens.push_back(basis_vec(a.field, ambient.dim(), index_map(i)));
        return GradedSubspace::span(ambient, a.field, gens);
    };
    out.v1 = block_span(out.map.v, vmap_a, a.v.dim());
    out.v2 = block_span(out.map.v, vmap_b, b.v.dim());
    out.w1 = block_span(out.map.w, wmap_a, a.w.dim());
    out.w2 = block_span(out.map.w, wmap_b, b.w.dim());
    return out;
}

}  // namespace superlie

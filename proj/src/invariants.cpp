#include "superlie/invariants.hpp"

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

const Echelon& parity_block(const GradedSubspace& s, int parity) {
    return parity == 0 ? s.even() : s.odd();
}

Vec narrow(const SuperSpace& space, const Vec& v, int parity) {
    return parity == 0 ? narrow_even(space, v) : narrow_odd(space, v);
}

/// Grid probe: is each basis vector of z an actual value f(u, v)?  For a
/// fixed u the values f(u, ·) form a subspace, so only u is enumerated.
std::optional<bool> value_set_probe(const SkewSuperMap& f, const GradedSubspace& z) {
    if (z.dims().total() == 0) return true;  // vacuous
    if (f.v.even_dim() > 3 || f.v.odd_dim() > 3) return std::nullopt;
    const std::size_t n = f.v.dim();

    std::vector<Scalar> coeffs;
    bool exhaustive = false;
    if (!f.field.is_rational()) {
        double combos = 1;
        for (std::size_t i = 0; i < n; ++i) combos *= static_cast<double>(f.field.modulus());
        exhaustive = combos <= 100000.0;
    }
    if (exhaustive) {
        for (std::uint64_t c = 0; c < f.field.modulus(); ++c)
            coeffs.push_back(f.field.from_int(static_cast<long long>(c)));
    } else {
        for (long long c : {0, 1, -1, 2, -2}) coeffs.push_back(f.field.from_int(c));
    }

    std::vector<Vec> targets = z.basis_vectors(f.w, f.field);
    std::vector<bool> found(targets.size(), false);
    std::size_t remaining = targets.size();

    std::vector<std::size_t> odo(n, 0);
    while (true) {
        Vec u(n, f.field.zero());
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i) {
            u[i] = coeffs[odo[i]];
            zero = zero && u[i].is_zero();
        }
        if (!zero) {
            Matrix values(f.field, f.w.dim());
            for (std::size_t j = 0; j < n; ++j) {
                Vec val = zero_vec(f.field, f.w.dim());
                for (std::size_t i = 0; i < n; ++i)
                    if (!u[i].is_zero()) axpy(val, u[i], f.tensor[i][j]);
                if (!is_zero_vec(val)) values.push_row(std::move(val));
            }
            Echelon e = echelonize(values);
            for (std::size_t t = 0; t < targets.size(); ++t) {
                if (found[t] || !in_row_space(e, targets[t])) continue;
                found[t] = true;
                --remaining;
            }
            if (remaining == 0) return true;
        }
        std::size_t pos = 0;
        while (pos < n && ++odo[pos] == coeffs.size()) odo[pos++] = 0;
        if (pos == n) break;
    }
    // Not located on the grid; for an exhaustive field sweep this is a real
    // negative, otherwise merely "not found".
    return false;
}

}  // namespace

JacobiSpan jacobi_span(const SkewSuperMap& f, bool sorted_triples_only) {
    TensorSpace t(f.v, f.w);
    const std::size_t n = f.v.dim();
    std::vector<std::vector<char>> nz(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) nz[i][j] = is_zero_vec(f.tensor[i][j]) ? 0 : 1;

    std::vector<Vec> gens;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = sorted_triples_only ? a : 0; b < n; ++b) {
            for (std::size_t c = sorted_triples_only ? b : 0; c < n; ++c) {
                if (!nz[b][c] && !nz[c][a] && !nz[a][b]) continue;
                const int pa = f.v.parity(a), pb = f.v.parity(b), pc = f.v.parity(c);
                Vec g = zero_vec(f.field, t.space().dim());
                if (nz[b][c])
                    axpy(g, parity_sign(f.field, pa, pc), t.basis_tensor(f.field, a, f.tensor[b][c]));
                if (nz[c][a])
                    axpy(g, parity_sign(f.field, pb, pa), t.basis_tensor(f.field, b, f.tensor[c][a]));
                if (nz[a][b])
                    axpy(g, parity_sign(f.field, pc, pb), t.basis_tensor(f.field, c, f.tensor[a][b]));
                if (!is_zero_vec(g)) gens.push_back(std::move(g));
            }
        }
    }
    GradedSubspace span = GradedSubspace::span(t.space(), f.field, gens);
    return {std::move(t), std::move(span)};
}

MultiplierReport multiplier(const SkewSuperMap& f) {
    JacobiSpan x = jacobi_span(f);
    const DimPair ambient = x.ambient.space().dims();
    const DimPair xd = x.subspace.dims();

    MultiplierReport out;
    out.quotient_dims = {ambient.even - xd.even, ambient.odd - xd.odd};

    // ker ρ per parity block; the rank of ρ is computed, not assumed equal
    // to dim W.
    WedgeSpace wedge(f.v);
    Matrix rho_even(f.field, f.w.even_dim()), rho_odd(f.field, f.w.odd_dim());
    for (std::size_t g = 0; g < wedge.space().dim(); ++g) {
        auto [i, j] = wedge.pairs()[g];
        if (wedge.space().parity(g) == 0)
            rho_even.push_row(narrow_even(f.w, f.tensor[i][j]));
        else
            rho_odd.push_row(narrow_odd(f.w, f.tensor[i][j]));
    }
    out.kernel_rho_dims = {wedge.space().even_dim() - rank(rho_even),
                           wedge.space().odd_dim() - rank(rho_odd)};
    out.total_dims = out.quotient_dims + out.kernel_rho_dims;
    return out;
}

EpicenterReport epicenter(const SkewSuperMap& f, bool probe_values) {
    JacobiSpan x = jacobi_span(f);
    const SuperSpace& ts = x.ambient.space();

    std::vector<Vec> zgens;
    for (int pw = 0; pw <= 1; ++pw) {
        std::vector<std::size_t> unknowns;
        for (std::size_t k = 0; k < f.w.dim(); ++k)
            if (f.w.parity(k) == pw) unknowns.push_back(k);
        if (unknowns.empty()) continue;

        // w = sum_t w_t e^W_t (parity pw) belongs to Z*(f) iff for every i
        // the residual of e_i ⊗ w against X_f vanishes; the residual is
        // linear in the w_t.
        Matrix sys(f.field, unknowns.size());
        for (std::size_t i = 0; i < f.v.dim(); ++i) {
            const int pb = (f.v.parity(i) + pw) % 2;
            const Echelon& ech = parity_block(x.subspace, pb);
            std::vector<Vec> resid;
            for (std::size_t k : unknowns) {
                Vec full = x.ambient.basis_tensor(f.field, i, basis_vec(f.field, f.w.dim(), k));
                resid.push_back(reduce(ech, narrow(ts, full, pb)));
            }
            const std::size_t block_dim = resid.front().size();
            for (std::size_t c = 0; c < block_dim; ++c) {
                Vec row = zero_vec(f.field, unknowns.size());
                bool any = false;
                for (std::size_t u = 0; u < unknowns.size(); ++u) {
                    row[u] = resid[u][c];
                    any = any || !row[u].is_zero();
                }
                if (any) sys.push_row(std::move(row));
            }
        }
        for (const Vec& krow : right_kernel(sys).rows) {
            Vec wv = zero_vec(f.field, f.w.dim());
            for (std::size_t u = 0; u < unknowns.size(); ++u) wv[unknowns[u]] = krow[u];
            zgens.push_back(std::move(wv));
        }
    }

    EpicenterReport out;
    out.subspace = GradedSubspace::span(f.w, f.field, zgens);
    out.capable = out.subspace.dims().total() == 0;
    if (probe_values) out.basis_vectors_are_values = value_set_probe(f, out.subspace);
    return out;
}

bool is_capable_lie(const LieSuper& L) {
    switch (nilpotency_class_leq2(L)) {
        case NilClass::abelian: {
            const DimPair d = L.space.dims();
            return (d.even == 0 && d.odd == 1) || d.total() >= 2;
        }
        case NilClass::class_two:
            return epicenter(from_lie(L)).capable;
        default:
            throw Error("capability: nilpotency class exceeds two");
    }
}

Vec QuotientMapResult::project(const SuperSpace& w, const Field& field, const Vec& value) const {
    Vec r = ideal.reduce_in(w, value);
    Vec out = zero_vec(field, w_lift.size());
    for (std::size_t t = 0; t < w_lift.size(); ++t) out[t] = r[w_lift[t]];
    return out;
}

QuotientMapResult quotient_map(const SkewSuperMap& f, const GradedSubspace& I) {
    if (I.even().mat.cols != f.w.even_dim() || I.odd().mat.cols != f.w.odd_dim())
        throw Error("quotient map: ambient mismatch");
    if (I.dims() == f.w.dims()) throw Error("quotient map: the subspace is the whole target");

    QuotientMapResult out;
    out.ideal = I;
    const std::size_t mw = f.w.even_dim();
    std::vector<bool> pivot(f.w.dim(), false);
    for (std::size_t p : I.even().pivots) pivot[p] = true;
    for (std::size_t p : I.odd().pivots) pivot[mw + p] = true;
    std::vector<std::string> even, odd;
    for (std::size_t k = 0; k < f.w.dim(); ++k) {
        if (pivot[k]) continue;
        out.w_lift.push_back(k);
        (f.w.parity(k) == 0 ? even : odd).push_back(f.w.label(k));
    }
    out.map.field = f.field;
    out.map.v = f.v;
    out.map.w = SuperSpace(std::move(even), std::move(odd));
    const std::size_t n = f.v.dim();
    out.map.tensor.assign(n, std::vector<Vec>(n, zero_vec(f.field, out.map.w.dim())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.map.tensor[i][j] = out.project(f.w, f.field, f.tensor[i][j]);
    return out;
}

bool check_quotient_monotonicity(const SkewSuperMap& f, const GradedSubspace& I) {
    QuotientMapResult q = quotient_map(f, I);
    GradedSubspace zbar = epicenter(q.map, false).subspace;
    GradedSubspace z = epicenter(f, false).subspace;
    std::vector<Vec> images;
    for (const Vec& zv : z.basis_vectors(f.w, f.field))
        images.push_back(q.project(f.w, f.field, zv));
    GradedSubspace pushed = GradedSubspace::span(q.map.w, f.field, images);
    return zbar.contains_subspace(pushed);
}

std::string RankOneClass::str() const {
    std::string a = "A(" + std::to_string(abelian.even) + "|" + std::to_string(abelian.odd) + ")";
    if (family == Family::heisenberg_even)
        return "H(" + std::to_string(m) + "," + std::to_string(n) + ") (+) " + a;
    return "H_" + std::to_string(m) + " (+) " + a;
}

RankOneClass classify_rank_one(const SkewSuperMap& f) {
    const DimPair r = f.rank();
    if (r.total() != 1) throw Error("rank-one classification requires rank (1|0) or (0|1)");

    RankOneClass out;
    out.abelian = radical(f).dims();
    const std::size_t e = f.v.even_dim() - out.abelian.even;
    const std::size_t o = f.v.odd_dim() - out.abelian.odd;
    if (r.even == 1) {
        // even center: the nondegenerate part pairs V_0 symplectically and
        // V_1 symmetrically, so it has dims (2m|n)
        if (e % 2 != 0)
            throw Error("rank-one classification: odd symplectic dimension in the nondegenerate part");
        out.family = RankOneClass::Family::heisenberg_even;
        out.m = e / 2;
        out.n = o;
    } else {
        // odd center: the nondegenerate part pairs V_0 against V_1, so it
        // has dims (m|m)
        if (e != o)
            throw Error("rank-one classification: unbalanced pairing in the nondegenerate part");
        out.family = RankOneClass::Family::heisenberg_odd;
        out.m = e;
    }
    return out;
}

namespace {

/// Restriction data of f to one block of a decomposition, with X_{f̄}
/// embedded back into V⊗W.  A block with trivial image contributes nothing.
struct BlockData {
    std::vector<Vec> v_basis;
    std::vector<Vec> w_basis;     // basis of W̄ inside W; empty if W̄ = 0
    GradedSubspace w_sub;         // W̄
    std::vector<Vec> x_embedded;  // X_{f̄} embedded into V⊗W
};

BlockData analyze_block(const SkewSuperMap& f, const TensorSpace& t, const GradedSubspace& vi) {
    BlockData out;
    out.v_basis = vi.basis_vectors(f.v, f.field);
    std::vector<Vec> image;
    for (const Vec& br : out.v_basis)
        for (const Vec& bs : out.v_basis) {
            Vec val = f.apply(br, bs);
            if (!is_zero_vec(val)) image.push_back(std::move(val));
        }
    out.w_sub = GradedSubspace::span(f.w, f.field, image);
    if (out.w_sub.dims().total() == 0) return out;

    RestrictResult rr = restrict(f, vi);
    out.w_basis = rr.w_basis;
    JacobiSpan x = jacobi_span(rr.map);
    for (const Vec& xv : x.subspace.basis_vectors(x.ambient.space(), f.field)) {
        Vec emb = zero_vec(f.field, t.space().dim());
        for (std::size_t r = 0; r < rr.v_basis.size(); ++r)
            for (std::size_t s = 0; s < out.w_basis.size(); ++s) {
                const Scalar& c = xv[x.ambient.position(r, s)];
                if (!c.is_zero()) axpy(emb, c, t.pure_tensor(f.field, rr.v_basis[r], out.w_basis[s]));
            }
        out.x_embedded.push_back(std::move(emb));
    }
    return out;
}

}  // namespace

bool decomposable_xf_check(const SkewSuperMap& f, const GradedSubspace& v1,
                           const GradedSubspace& v2) {
    if (!verify_decomposition(f, v1, v2))
        throw Error("the given pair is not a decomposition of the domain");
    JacobiSpan x = jacobi_span(f);
    BlockData b1 = analyze_block(f, x.ambient, v1);
    BlockData b2 = analyze_block(f, x.ambient, v2);

    std::vector<Vec> gens = b1.x_embedded;
    gens.insert(gens.end(), b2.x_embedded.begin(), b2.x_embedded.end());
    for (const Vec& bv : b1.v_basis)
        for (const Vec& wv : b2.w_basis) gens.push_back(x.ambient.pure_tensor(f.field, bv, wv));
    for (const Vec& bv : b2.v_basis)
        for (const Vec& wv : b1.w_basis) gens.push_back(x.ambient.pure_tensor(f.field, bv, wv));

    return x.subspace == GradedSubspace::span(x.ambient.space(), f.field, gens);
}

CentralSumEpicenterReport central_sum_epicenter_check(const SkewSuperMap& f,
                                                      const GradedSubspace& v1,
                                                      const GradedSubspace& v2) {
    if (!verify_decomposition(f, v1, v2))
        throw Error("the given pair is not a decomposition of the domain");
    if (!is_nondegenerate(f))
        throw Error("epicenter case analysis requires a nondegenerate map");
    // Nondegeneracy forces each block to have nonzero image, so both
    // restrictions exist.
    RestrictResult r1 = restrict(f, v1);
    RestrictResult r2 = restrict(f, v2);

    CentralSumEpicenterReport out;
    out.w1_dims = r1.w_sub.dims();
    out.w2_dims = r2.w_sub.dims();
    out.w_meet_dims = intersect(r1.w_sub, r2.w_sub).dims();

    GradedSubspace z = epicenter(f, false).subspace;
    GradedSubspace z1 = epicenter(r1.map, false).subspace;
    GradedSubspace z2 = epicenter(r2.map, false).subspace;
    out.z_dims = z.dims();
    out.z1_dims = z1.dims();
    out.z2_dims = z2.dims();

    auto embed = [&f](const RestrictResult& rr, const GradedSubspace& zi) {
        std::vector<Vec> gens;
        for (const Vec& nv : zi.basis_vectors(rr.map.w, f.field)) {
            Vec wv = zero_vec(f.field, f.w.dim());
            for (std::size_t t = 0; t < nv.size(); ++t)
                if (!nv[t].is_zero()) axpy(wv, nv[t], rr.w_basis[t]);
            gens.push_back(std::move(wv));
        }
        return GradedSubspace::span(f.w, f.field, gens);
    };
    GradedSubspace z1e = embed(r1, z1);
    GradedSubspace z2e = embed(r2, z2);

    const GradedSubspace whole = GradedSubspace::whole(f.w, f.field);
    if (out.w_meet_dims.total() == 0) {
        out.case_tag = "disjoint-targets";
        out.verified = (z == sum(z1e, z2e)) && intersect(z1e, z2e).dims().total() == 0;
    } else if (f.w.dim() == 2 && r1.w_sub == whole && r2.w_sub == whole) {
        out.case_tag = "rank-two-equal-targets";
        out.verified = (z == whole);
    } else if (f.w.dim() == 2 && ((r1.w_sub == whole && out.w2_dims.total() == 1) ||
                                  (r2.w_sub == whole && out.w1_dims.total() == 1))) {
        out.case_tag = "rank-two-nested-targets";
        const GradedSubspace& nested = r1.w_sub == whole ? r2.w_sub : r1.w_sub;
        out.verified = (z == whole) || (z == nested);
    } else {
        out.case_tag = "not-covered";
        out.verified = true;  // no prediction to violate
    }
    return out;
}

}  // namespace superlie

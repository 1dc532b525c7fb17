#include "superlie/liesuper.hpp"

#include <unordered_set>

namespace superlie {

namespace {

Scalar parity_sign(const Field& field, int pa, int pb) {
    return (pa * pb) % 2 != 0 ? -field.one() : field.one();
}

/// [e_i, v] by linear extension in the second slot.
Vec basis_bracket_vec(const LieSuper& L, std::size_t i, const Vec& v) {
    Vec out = zero_vec(L.field, L.dim());
    for (std::size_t l = 0; l < v.size(); ++l)
        if (!v[l].is_zero()) axpy(out, v[l], L.table[i][l]);
    return out;
}

Vec basis_vec(const Field& field, std::size_t n, std::size_t i) {
    Vec e = zero_vec(field, n);
    e[i] = field.one();
    return e;
}

}  // namespace

Vec LieSuper::bracket(const Vec& x, const Vec& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw Error("bracket argument length mismatch");
    Vec out = zero_vec(field, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i];
            c *= y[j];
            axpy(out, c, table[i][j]);
        }
    }
    return out;
}

std::vector<std::vector<Vec>> zero_table(const Field& field, const SuperSpace& space) {
    const std::size_t n = space.dim();
    return {n, std::vector<Vec>(n, zero_vec(field, n))};
}

std::vector<std::string> validate(const LieSuper& L) {
    std::vector<std::string> bad;
    const std::size_t n = L.dim();
    if (L.table.size() != n) {
        bad.push_back("structure table must have one row per basis vector");
        return bad;
    }
    for (const auto& row : L.table) {
        if (row.size() != n) {
            bad.push_back("structure table row has wrong length");
            return bad;
        }
        for (const Vec& v : row) {
            if (v.size() != n) {
                bad.push_back("structure table entry has wrong coordinate count");
                return bad;
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& v = L.table[i][j];
            if (is_zero_vec(v)) continue;
            const int want = (L.space.parity(i) + L.space.parity(j)) % 2;
            auto got = homogeneous_parity(L.space, v);
            if (!got || *got != want)
                bad.push_back("grading: [" + L.space.label(i) + ", " + L.space.label(j) +
                              "] is not homogeneous of parity " + std::to_string(want));
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Vec t = L.table[i][j];
            axpy(t, parity_sign(L.field, L.space.parity(i), L.space.parity(j)), L.table[j][i]);
            if (!is_zero_vec(t))
                bad.push_back("skew-symmetry: [" + L.space.label(i) + ", " + L.space.label(j) +
                              "] + (-1)^{|" + L.space.label(i) + "||" + L.space.label(j) + "|}[" +
                              L.space.label(j) + ", " + L.space.label(i) + "] != 0");
        }
    }

    std::vector<std::vector<char>> nz(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) nz[i][j] = is_zero_vec(L.table[i][j]) ? 0 : 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (!nz[j][k] && !nz[k][i] && !nz[i][j]) continue;
                Vec acc = zero_vec(L.field, n);
                if (nz[j][k])
                    axpy(acc, parity_sign(L.field, L.space.parity(i), L.space.parity(k)),
                         basis_bracket_vec(L, i, L.table[j][k]));
                if (nz[k][i])
                    axpy(acc, parity_sign(L.field, L.space.parity(j), L.space.parity(i)),
                         basis_bracket_vec(L, j, L.table[k][i]));
                if (nz[i][j])
                    axpy(acc, parity_sign(L.field, L.space.parity(k), L.space.parity(j)),
                         basis_bracket_vec(L, k, L.table[i][j]));
                if (!is_zero_vec(acc))
                    bad.push_back("jacobi: triple (" + L.space.label(i) + ", " + L.space.label(j) +
                                  ", " + L.space.label(k) + ") fails");
            }
        }
    }
    return bad;
}

void require_valid(const LieSuper& L) {
    std::vector<std::string> bad = validate(L);
    if (bad.empty()) return;
    std::string msg = "invalid Lie superalgebra:";
    for (const auto& b : bad) msg += "\n  " + b;
    throw Error(msg);
}

GradedSubspace derived_subalgebra(const LieSuper& L) {
    std::vector<Vec> gens;
    for (const auto& row : L.table)
        for (const Vec& v : row)
            if (!is_zero_vec(v)) gens.push_back(v);
    return GradedSubspace::span(L.space, L.field, gens);
}

GradedSubspace center(const LieSuper& L) {
    const std::size_t n = L.dim();
    // v central iff sum_i v_i [e_i, e_j] = 0 for all j: one linear condition
    // per pair (j, coordinate k).
    Matrix sys(L.field, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            Vec row = zero_vec(L.field, n);
            bool any = false;
            for (std::size_t i = 0; i < n; ++i) {
                row[i] = L.table[i][j][k];
                any = any || !row[i].is_zero();
            }
            if (any) sys.push_row(std::move(row));
        }
    }
    return GradedSubspace::span(L.space, L.field, right_kernel(sys).rows);
}

std::string to_string(NilClass c) {
    switch (c) {
        case NilClass::abelian: return "abelian";
        case NilClass::class_two: return "class_two";
        default: return "higher";
    }
}

NilClass nilpotency_class_leq2(const LieSuper& L) {
    GradedSubspace d = derived_subalgebra(L);
    if (d.dims().total() == 0) return NilClass::abelian;
    return center(L).contains_subspace(d) ? NilClass::class_two : NilClass::higher;
}

bool is_graded_ideal(const LieSuper& L, const GradedSubspace& H) {
    for (const Vec& h : H.basis_vectors(L.space, L.field)) {
        for (std::size_t j = 0; j < L.dim(); ++j) {
            Vec br = zero_vec(L.field, L.dim());
            for (std::size_t i = 0; i < L.dim(); ++i)
                if (!h[i].is_zero()) axpy(br, h[i], L.table[i][j]);
            if (!H.contains(L.space, br)) return false;
        }
    }
    return true;
}

Vec QuotientResult::project(const LieSuper& L, const Vec& v) const {
    Vec r = ideal.reduce_in(L.space, v);
    Vec out = zero_vec(L.field, lift.size());
    for (std::size_t k = 0; k < lift.size(); ++k) out[k] = r[lift[k]];
    return out;
}

QuotientResult quotient(const LieSuper& L, const GradedSubspace& H) {
    if (!is_graded_ideal(L, H)) throw Error("quotient: subspace is not a graded ideal");
    const std::size_t m = L.space.even_dim(), n = L.dim();
    std::vector<bool> pivot(n, false);
    for (std::size_t p : H.even().pivots) pivot[p] = true;
    for (std::size_t p : H.odd().pivots) pivot[m + p] = true;

    QuotientResult out;
    out.ideal = H;
    std::vector<std::string> even_labels, odd_labels;
    for (std::size_t i = 0; i < n; ++i) {
        if (pivot[i]) continue;
        out.lift.push_back(i);
        (L.space.parity(i) == 0 ? even_labels : odd_labels).push_back(L.space.label(i));
    }
    out.algebra.field = L.field;
    out.algebra.space = SuperSpace(std::move(even_labels), std::move(odd_labels));

    for (std::size_t i = 0; i < n; ++i)
        out.projection.push_back(out.project(L, basis_vec(L.field, n, i)));

    const std::size_t q = out.lift.size();
    out.algebra.table.assign(q, std::vector<Vec>(q, zero_vec(L.field, q)));
    for (std::size_t c = 0; c < q; ++c)
        for (std::size_t d = 0; d < q; ++d)
            out.algebra.table[c][d] = out.project(L, L.table[out.lift[c]][out.lift[d]]);
    return out;
}

DirectSumResult direct_sum_parts(const LieSuper& a, const LieSuper& b) {
    if (!(a.field == b.field)) throw Error("direct sum: field mismatch");
    std::unordered_set<std::string> used;
    for (std::size_t i = 0; i < a.dim(); ++i) used.insert(a.space.label(i));
    auto claim = [&used](const std::string& l) {
        std::string c = l;
        while (!used.insert(c).second) c += "'";
        return c;
    };
    std::vector<std::string> even = a.space.even_labels();
    for (const auto& l : b.space.even_labels()) even.push_back(claim(l));
    std::vector<std::string> odd = a.space.odd_labels();
    for (const auto& l : b.space.odd_labels()) odd.push_back(claim(l));

    const std::size_t ma = a.space.even_dim(), mb = b.space.even_dim();
    const std::size_t na = a.space.odd_dim();
    auto amap = [ma, mb](std::size_t i) { return i < ma ? i : mb + i; };
    auto bmap = [ma, mb, na](std::size_t j) { return j < mb ? ma + j : ma + na + j; };

    DirectSumResult out;
    out.algebra.field = a.field;
    out.algebra.space = SuperSpace(std::move(even), std::move(odd));
    out.algebra.table = zero_table(a.field, out.algebra.space);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec& t = out.algebra.table[amap(i)][amap(j)];
            for (std::size_t l = 0; l < a.dim(); ++l) t[amap(l)] = a.table[i][j][l];
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) {
            Vec& t = out.algebra.table[bmap(i)][bmap(j)];
            for (std::size_t l = 0; l < b.dim(); ++l) t[bmap(l)] = b.table[i][j][l];
        }
    for (std::size_t i = 0; i < a.dim(); ++i) out.left_index.push_back(amap(i));
    for (std::size_t j = 0; j < b.dim(); ++j) out.right_index.push_back(bmap(j));
    return out;
}

LieSuper direct_sum(const LieSuper& a, const LieSuper& b) {
    return direct_sum_parts(a, b).algebra;
}

CentralSumResult central_sum_parts(const LieSuper& H, const LieSuper& K,
                                   const std::vector<std::pair<Vec, Vec>>& glue) {
    if (!(H.field == K.field)) throw Error("central sum: field mismatch");
    GradedSubspace zh = center(H), zk = center(K);
    Matrix left(H.field, H.dim()), right(K.field, K.dim());
    for (const auto& [h, k] : glue) {
        auto ph = homogeneous_parity(H.space, h);
        auto pk = homogeneous_parity(K.space, k);
        if (!ph || !pk) throw Error("central sum: glue vector is not homogeneous");
        if (is_zero_vec(h) || is_zero_vec(k)) throw Error("central sum: dependent glue list");
        if (!zh.contains(H.space, h) || !zk.contains(K.space, k))
            throw Error("central sum: glue vector is not central");
        if (*ph != *pk) throw Error("central sum: glue parity mismatch");
        left.push_row(h);
        right.push_row(k);
    }
    if (rank(left) != glue.size() || rank(right) != glue.size())
        throw Error("central sum: dependent glue list");

    DirectSumResult d = direct_sum_parts(H, K);
    const std::size_t N = d.algebra.dim();
    std::vector<Vec> gens;
    for (const auto& [h, k] : glue) {
        Vec g = zero_vec(H.field, N);
        for (std::size_t i = 0; i < h.size(); ++i) g[d.left_index[i]] = h[i];
        for (std::size_t j = 0; j < k.size(); ++j) g[d.right_index[j]] -= k[j];
        gens.push_back(std::move(g));
    }
    QuotientResult q = quotient(d.algebra, GradedSubspace::span(d.algebra.space, H.field, gens));

    CentralSumResult out;
    for (std::size_t i = 0; i < H.dim(); ++i) out.left_images.push_back(q.projection[d.left_index[i]]);
    for (std::size_t j = 0; j < K.dim(); ++j) out.right_images.push_back(q.projection[d.right_index[j]]);
    out.algebra = std::move(q.algebra);
    return out;
}

LieSuper central_sum(const LieSuper& H, const LieSuper& K,
                     const std::vector<std::pair<Vec, Vec>>& glue) {
    return central_sum_parts(H, K, glue).algebra;
}

HeisenbergCheck is_generalized_heisenberg(const LieSuper& L) {
    GradedSubspace d = derived_subalgebra(L);
    HeisenbergCheck out;
    out.rank = d.dims();
    out.is_heisenberg = (center(L) == d);
    return out;
}

SplitResult split_heisenberg_abelian(const LieSuper& L) {
    if (nilpotency_class_leq2(L) != NilClass::class_two)
        throw Error("split: algebra is not of class two");
    GradedSubspace d = derived_subalgebra(L);
    GradedSubspace z = center(L);

    // Homogeneous central complement of L² inside Z(L): reduce the center's
    // basis against L² and span what survives.
    std::vector<Vec> agens;
    for (const Vec& zv : z.basis_vectors(L.space, L.field)) {
        Vec r = d.reduce_in(L.space, zv);
        if (!is_zero_vec(r)) agens.push_back(std::move(r));
    }
    GradedSubspace a = GradedSubspace::span(L.space, L.field, agens);

    // Complementary ideal: L² together with every coordinate direction that
    // is pivot-free for both L² and the abelian part.
    const std::size_t m = L.space.even_dim(), n = L.dim();
    std::vector<bool> pivot(n, false);
    for (std::size_t p : d.even().pivots) pivot[p] = true;
    for (std::size_t p : d.odd().pivots) pivot[m + p] = true;
    for (std::size_t p : a.even().pivots) pivot[p] = true;
    for (std::size_t p : a.odd().pivots) pivot[m + p] = true;
    std::vector<Vec> hgens = d.basis_vectors(L.space, L.field);
    for (std::size_t i = 0; i < n; ++i)
        if (!pivot[i]) hgens.push_back(basis_vec(L.field, n, i));
    GradedSubspace hs = GradedSubspace::span(L.space, L.field, hgens);
    if ((hs.dims() + a.dims()) != L.space.dims()) throw Error("split: complement construction failed");

    std::vector<Vec> hb = hs.basis_vectors(L.space, L.field);
    std::vector<std::string> even_labels, odd_labels;
    for (std::size_t p : hs.even().pivots) even_labels.push_back(L.space.label(p));
    for (std::size_t p : hs.odd().pivots) odd_labels.push_back(L.space.label(m + p));

    SplitResult out;
    out.heisenberg.field = L.field;
    out.heisenberg.space = SuperSpace(std::move(even_labels), std::move(odd_labels));
    const std::size_t hd = hb.size();
    out.heisenberg.table.assign(hd, std::vector<Vec>(hd, zero_vec(L.field, hd)));
    for (std::size_t r = 0; r < hd; ++r)
        for (std::size_t s = 0; s < hd; ++s)
            out.heisenberg.table[r][s] = coords_in_graded(hs, L.space, L.bracket(hb[r], hb[s]));
    out.abelian_dims = a.dims();
    out.h_basis = std::move(hb);
    out.a_basis = a.basis_vectors(L.space, L.field);
    return out;
}

bool is_homomorphism(const LieSuper& src, const LieSuper& dst, const std::vector<Vec>& images) {
    if (!(src.field == dst.field)) throw Error("homomorphism: field mismatch");
    if (images.size() != src.dim()) throw Error("homomorphism: one image per basis vector required");
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i].size() != dst.dim()) throw Error("homomorphism: image length mismatch");
        if (is_zero_vec(images[i])) continue;
        auto p = homogeneous_parity(dst.space, images[i]);
        if (!p || *p != src.space.parity(i)) return false;
    }
    auto push = [&](const Vec& v) {
        Vec out = zero_vec(dst.field, dst.dim());
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) axpy(out, v[i], images[i]);
        return out;
    };
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j)
            if (dst.bracket(images[i], images[j]) != push(src.table[i][j])) return false;
    return true;
}

}  // namespace superlie

#include "superlie/catalog.hpp"

namespace superlie {

namespace {

std::string numbered(const char* stem, std::size_t i) {
    return std::string(stem) + std::to_string(i);
}

std::vector<std::string> numbered_range(const char* stem, std::size_t count,
                                        std::size_t start = 1) {
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(numbered(stem, start + i));
    return out;
}

/// splitmix64: the fixed 64-bit mixing function behind seeded generation.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

Scalar sample(SplitMix64& rng, const Field& field) {
    if (field.is_rational())
        return field.from_int(static_cast<long long>(rng.next() % 9) - 4);
    return field.from_int(static_cast<long long>(rng.next() % field.modulus()));
}

}  // namespace

LieSuper heisenberg_even(std::size_t m, std::size_t n, const Field& field) {
    if (m == 0 && n == 0) throw Error("heisenberg: m = n = 0 leaves no bracket");
    std::vector<std::string> even = numbered_range("x", 2 * m);
    even.push_back("z");
    SuperSpace space(std::move(even), numbered_range("y", n));

    LieSuper L{field, space, zero_table(field, space)};
    const std::size_t z = 2 * m;  // z is the last even coordinate
    for (std::size_t i = 0; i < m; ++i) {
        L.table[i][m + i][z] = field.one();
        L.table[m + i][i][z] = -field.one();
    }
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t y = 2 * m + 1 + j;
        L.table[y][y][z] = field.one();
    }
    return L;
}

LieSuper heisenberg_odd(std::size_t m, const Field& field) {
    if (m == 0) throw Error("heisenberg: m = 0 leaves no bracket");
    std::vector<std::string> odd = numbered_range("y", m);
    odd.push_back("z");
    SuperSpace space(numbered_range("x", m), std::move(odd));

    LieSuper L{field, space, zero_table(field, space)};
    const std::size_t z = 2 * m;  // z is the last odd coordinate
    for (std::size_t j = 0; j < m; ++j) {
        L.table[j][m + j][z] = field.one();
        L.table[m + j][j][z] = -field.one();
    }
    return L;
}

LieSuper abelian(std::size_t m, std::size_t n, const Field& field) {
    SuperSpace space(numbered_range("a", m), numbered_range("b", n));
    return LieSuper{field, space, zero_table(field, space)};
}

namespace {

SkewSuperMap generic_map(std::size_t m, std::size_t n, const Field& field, bool with_even_part,
                         bool with_odd_part) {
    std::vector<std::string> weven, wodd;
    if (with_even_part) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t r = i + 1; r < m; ++r)
                weven.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(r + 1));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t s = j; s < n; ++s)
                weven.push_back("y" + std::to_string(j + 1) + "_" + std::to_string(s + 1));
    }
    if (with_odd_part) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                wodd.push_back("z" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
    if (weven.empty() && wodd.empty())
        throw Error("generic map: the target space is trivial for these dimensions");

    SkewSuperMap f;
    f.field = field;
    f.v = SuperSpace(numbered_range("u", m), numbered_range("v", n));
    const std::size_t odd_offset = weven.size();
    f.w = SuperSpace(std::move(weven), std::move(wodd));
    f.tensor = zero_tensor(field, f.v, f.w);

    std::size_t k = 0;
    if (with_even_part) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t r = i + 1; r < m; ++r) {
                f.tensor[i][r][k] = field.one();
                f.tensor[r][i][k] = -field.one();
                ++k;
            }
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t s = j; s < n; ++s) {
                f.tensor[m + j][m + s][k] = field.one();
                if (s != j) f.tensor[m + s][m + j][k] = field.one();
                ++k;
            }
    }
    if (with_odd_part) {
        k = odd_offset;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                f.tensor[i][m + j][k] = field.one();
                f.tensor[m + j][i][k] = -field.one();
                ++k;
            }
    }
    return f;
}

}  // namespace

SkewSuperMap generic_full(std::size_t m, std::size_t n, const Field& field) {
    return generic_map(m, n, field, true, true);
}

SkewSuperMap generic_even_full(std::size_t m, std::size_t n, const Field& field) {
    return generic_map(m, n, field, true, false);
}

SkewSuperMap generic_odd_full(std::size_t m, std::size_t n, const Field& field) {
    return generic_map(m, n, field, false, true);
}

SkewSuperMap random_sske(std::size_t m, std::size_t n, std::size_t r, std::size_t s,
                         std::uint64_t seed, const Field& field) {
    const std::size_t even_cap = m * (m - (m > 0 ? 1 : 0)) / 2 + n * (n + 1) / 2;
    const std::size_t odd_cap = m * n;
    if (r > even_cap || s > odd_cap || r + s == 0)
        throw Error("random map: rank (" + std::to_string(r) + "|" + std::to_string(s) +
                    ") is not feasible for dims (" + std::to_string(m) + "|" +
                    std::to_string(n) + ")");

    SkewSuperMap f;
    f.field = field;
    f.v = SuperSpace(numbered_range("u", m), numbered_range("v", n));
    f.w = SuperSpace(numbered_range("w", r), numbered_range("w", s, r + 1));

    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        f.tensor = zero_tensor(field, f.v, f.w);
        // Free entries in a fixed order: even-even pairs i < j, odd-odd
        // pairs j <= s (diagonal included), then even-odd pairs; skew images
        // are filled from them.
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                for (std::size_t k = 0; k < r; ++k) {
                    Scalar c = sample(rng, field);
                    f.tensor[i][j][k] = c;
                    f.tensor[j][i][k] = -c;
                }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                for (std::size_t k = 0; k < r; ++k) {
                    Scalar c = sample(rng, field);
                    f.tensor[m + i][m + j][k] = c;
                    if (j != i) f.tensor[m + j][m + i][k] = c;
                }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < s; ++k) {
                    Scalar c = sample(rng, field);
                    f.tensor[i][m + j][r + k] = c;
                    f.tensor[m + j][i][r + k] = -c;
                }

        std::vector<Vec> image;
        for (std::size_t i = 0; i < f.v.dim(); ++i)
            for (std::size_t j = i; j < f.v.dim(); ++j)
                if (!is_zero_vec(f.tensor[i][j])) image.push_back(f.tensor[i][j]);
        if (GradedSubspace::span(f.w, field, image).dims() == DimPair{r, s}) {
            require_valid(f);
            return f;
        }
    }
    throw Error("random map: retry budget exhausted without reaching rank (" +
                std::to_string(r) + "|" + std::to_string(s) + ")");
}

}  // namespace superlie

#include "superlie/matrix.hpp"

#include <algorithm>

namespace superlie {

Vec zero_vec(const Field& field, std::size_t n) { return Vec(n, field.zero()); }

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

void axpy(Vec& y, const Scalar& c, const Vec& x) {
    if (y.size() != x.size()) throw Error("vector length mismatch");
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < y.size(); ++i) {
        Scalar t = x[i];
        t *= c;
        y[i] += t;
    }
}

void Matrix::push_row(Vec v) {
    if (v.size() != cols) throw Error("row length mismatch");
    rows.push_back(std::move(v));
}

Echelon echelonize(const Matrix& m) {
    Matrix work = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < work.cols && lead < work.row_count(); ++col) {
        std::size_t sel = lead;
        while (sel < work.row_count() && work.rows[sel][col].is_zero()) ++sel;
        if (sel == work.row_count()) continue;
        std::swap(work.rows[sel], work.rows[lead]);
        Scalar inv = work.rows[lead][col].inverse();
        for (auto& x : work.rows[lead]) x *= inv;
        for (std::size_t r = 0; r < work.row_count(); ++r) {
            if (r == lead || work.rows[r][col].is_zero()) continue;
            Scalar factor = -work.rows[r][col];
            axpy(work.rows[r], factor, work.rows[lead]);
        }
        pivots.push_back(col);
        ++lead;
    }
    work.rows.resize(pivots.size());
    return Echelon{std::move(work), std::move(pivots)};
}

Vec reduce(const Echelon& e, Vec v) {
    if (v.size() != e.mat.cols) throw Error("vector length mismatch");
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const Scalar& c = v[e.pivots[r]];
        if (!c.is_zero()) axpy(v, -c, e.mat.rows[r]);
    }
    return v;
}

bool in_row_space(const Echelon& e, const Vec& v) { return is_zero_vec(reduce(e, v)); }

std::optional<Vec> coordinates_in(const Echelon& e, const Vec& v) {
    if (!in_row_space(e, v)) return std::nullopt;
    Vec coords;
    coords.reserve(e.rank());
    // Reduced form: each basis row is 1 at its own pivot and 0 at the others,
    // so the coefficient of row r is just v[pivot_r].
    for (std::size_t p : e.pivots) coords.push_back(v[p]);
    return coords;
}

std::size_t rank(const Matrix& m) { return echelonize(m).rank(); }

Matrix transpose(const Matrix& m) {
    Matrix t(m.field, m.row_count());
    t.rows.assign(m.cols, zero_vec(m.field, m.row_count()));
    for (std::size_t r = 0; r < m.row_count(); ++r)
        for (std::size_t c = 0; c < m.cols; ++c) t.rows[c][r] = m.rows[r][c];
    return t;
}

Matrix right_kernel(const Matrix& m) {
    Echelon e = echelonize(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    Matrix kernel(m.field, m.cols);
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(m.field, m.cols);
        v[free] = m.field.one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.mat.rows[r][free];
        kernel.push_row(std::move(v));
    }
    return kernel;
}

Matrix intersect_rows(const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols || a.field != b.field) throw Error("ambient mismatch");
    const std::size_t n = a.cols;
    Matrix block(a.field, 2 * n);
    for (const Vec& row : a.rows) {
        Vec v = zero_vec(a.field, 2 * n);
        std::copy(row.begin(), row.end(), v.begin());
        std::copy(row.begin(), row.end(), v.begin() + static_cast<std::ptrdiff_t>(n));
        block.push_row(std::move(v));
    }
    for (const Vec& row : b.rows) {
        Vec v = zero_vec(a.field, 2 * n);
        std::copy(row.begin(), row.end(), v.begin());
        block.push_row(std::move(v));
    }
    Echelon e = echelonize(block);
    Matrix out(a.field, n);
    for (std::size_t r = 0; r < e.rank(); ++r) {
        if (e.pivots[r] < n) continue;  // left half nonzero
        Vec tail(e.mat.rows[r].begin() + static_cast<std::ptrdiff_t>(n), e.mat.rows[r].end());
        out.push_row(std::move(tail));
    }
    return echelonize(out).mat;
}

Matrix stack(const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols || a.field != b.field) throw Error("ambient mismatch");
    Matrix out = a;
    for (const Vec& row : b.rows) out.push_row(row);
    return out;
}

}  // namespace superlie

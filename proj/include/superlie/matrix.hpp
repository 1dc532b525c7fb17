#pragma once

#include "superlie/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace superlie {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& field, std::size_t n);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
/// y += c * x
void axpy(Vec& y, const Scalar& c, const Vec& x);

/// Dense row-major matrix over an exact field.  Rows double as vectors;
/// all subspaces in this library are row spaces of such matrices.
struct Matrix {
    Field field = Field::rationals();
    std::size_t cols = 0;
    std::vector<Vec> rows;

    Matrix() = default;
    Matrix(Field f, std::size_t c) : field(f), cols(c) {}

    std::size_t row_count() const { return rows.size(); }
    void push_row(Vec v);

    bool operator==(const Matrix& o) const { return cols == o.cols && rows == o.rows; }
};

/// Reduced row echelon form with zero rows dropped: the canonical basis of
/// the row space.  `pivots` holds the pivot column of each remaining row,
/// strictly increasing.
struct Echelon {
    Matrix mat;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return mat.row_count(); }
};

Echelon echelonize(const Matrix& m);

/// Residual of v after elimination against an echelon basis; zero iff v
/// lies in the row space.  Linear in v.
Vec reduce(const Echelon& e, Vec v);

bool in_row_space(const Echelon& e, const Vec& v);

/// Coefficients of v in the echelon basis (read off the pivot coordinates),
/// or nullopt when v is outside the row space.
std::optional<Vec> coordinates_in(const Echelon& e, const Vec& v);

std::size_t rank(const Matrix& m);

Matrix transpose(const Matrix& m);

/// Basis (as rows) of {x : m x = 0}, x indexed by the columns of m.
Matrix right_kernel(const Matrix& m);

/// Basis of the intersection of two row spaces (Zassenhaus).
Matrix intersect_rows(const Matrix& a, const Matrix& b);

/// Rows of a followed by rows of b.
Matrix stack(const Matrix& a, const Matrix& b);

}  // namespace superlie

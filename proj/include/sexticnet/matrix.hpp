#pragma once

#include <vector>

#include "sexticnet/multipoly.hpp"
#include "sexticnet/scalar.hpp"

namespace sexticnet {

// Dense rectangular matrix over an exact entry type (Scalar or MultiPoly).
template <typename T>
class Matrix {
public:
    Matrix(int rows, int cols, const T& fill) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw ShapeError("Matrix: negative dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<MultiPoly>;

inline ScalarMatrix scalar_matrix(int rows, int cols) { return ScalarMatrix(rows, cols, Scalar()); }

// Common coefficient domain of all entries (0 = rational); DomainMismatch on a mix.
uint64_t matrix_modulus(const ScalarMatrix& m);

// Rank by fraction-free (Bareiss) elimination over the integers after
// clearing row denominators; plain Gaussian elimination over F_p.
int rank(const ScalarMatrix& m);

// Reduced row echelon form over the entry field; pivot column indices are
// appended to *pivots when given.
ScalarMatrix rref(const ScalarMatrix& m, std::vector<int>* pivots = nullptr);

// Canonical basis of the right null space read off the RREF: one vector per
// free column, unit there, pivot coordinates filled in.  Deterministic.
std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m);

Scalar det(const ScalarMatrix& m);

ScalarMatrix transpose(const ScalarMatrix& m);
ScalarMatrix matmul(const ScalarMatrix& a, const ScalarMatrix& b);
std::vector<Scalar> mat_apply(const ScalarMatrix& m, const std::vector<Scalar>& v);

bool is_symmetric(const PolyMatrix& m);

// Determinant of a square matrix of polynomials by dynamic programming over
// column subsets (memoized top-block minors); avoids the expression swell of
// cofactor recursion.  Intended for small n (the library uses n <= 6).
MultiPoly det_poly_matrix(const PolyMatrix& m);

// Congruence transform Pᵀ M P of a polynomial matrix by a scalar matrix.
PolyMatrix congruence(const PolyMatrix& m, const ScalarMatrix& p);

PolyMatrix poly_matrix_mod(const PolyMatrix& m, uint64_t p);

// Entry-wise specialization of polynomial entries to scalars.
ScalarMatrix evaluate_matrix(const PolyMatrix& m, const std::vector<Scalar>& point);

}  // namespace sexticnet

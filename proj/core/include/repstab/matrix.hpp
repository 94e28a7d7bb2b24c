#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "repstab/field.hpp"

namespace repstab {

using Vector = std::vector<Rational>;

// Dense matrix over a FieldSpec, row-major, entries kept canonical for the
// field.  All arithmetic is exact; mixing fields raises field_mismatch.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(FieldSpec field, std::size_t n);
  // Shape-checked; entries are embedded into the field.
  static Matrix from_rows(FieldSpec field,
                          const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, const Rational& value) {
    data_[i * cols_ + j] = field_.embed(value);
  }

  bool is_zero() const;
  Matrix transpose() const;
  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  // Columns selected by index, in the given order.
  Matrix select_cols(const std::vector<std::size_t>& idx) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

Matrix mul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Rational& c, const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Vector apply(const Matrix& a, const Vector& x);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;  // strictly increasing
  std::size_t rank() const { return pivot_cols.size(); }
};

// Unique reduced row echelon form (Gauss-Jordan, exact).
RrefResult rref(const Matrix& a);
std::size_t rank(const Matrix& a);

// Basis of the right kernel {x : a x = 0}; size cols - rank, each vector
// canonical (free coordinate set to 1, ascending free-column order).
std::vector<Vector> nullspace_basis(const Matrix& a);
// Same basis as columns of a matrix (cols() == nullity).
Matrix nullspace_matrix(const Matrix& a);

// One solution of a x = rhs (free coordinates zero), or nullopt.
std::optional<Vector> solve(const Matrix& a, const Vector& rhs);
// Columnwise: x with a x = rhs, or nullopt if any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& rhs);

// Unique reduced column-echelon basis of the column space; the canonical
// representative used for subspace comparisons throughout.
Matrix column_space_basis(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);

}  // namespace repstab

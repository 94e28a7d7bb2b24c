#include "repstab/matrix.hpp"

#include <string>

#include "repstab/error.hpp"

namespace repstab {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorCode::field_mismatch,
                "matrices over " + a.field().name() + " and " + b.field().name());
}

std::string shape(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<Vector>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw Error(ErrorCode::shape_mismatch, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const Rational& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

Vector Matrix::row(std::size_t i) const {
  Vector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix m(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw Error(ErrorCode::shape_mismatch, "column index");
    for (std::size_t i = 0; i < rows_; ++i) m.set(i, j, at(i, idx[j]));
  }
  return m;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows())
    throw Error(ErrorCode::shape_mismatch, shape(a) + " * " + shape(b));
  const FieldSpec& f = a.field();
  Matrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.at(k, j);
        if (sgn(bkj) == 0) continue;
        c.set(i, j, f.add(c.at(i, j), f.mul(aik, bkj)));
      }
    }
  }
  return c;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::shape_mismatch, shape(a) + " + " + shape(b));
  Matrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.set(i, j, a.field().add(a.at(i, j), b.at(i, j)));
  return c;
}

Matrix sub(const Matrix& a, const Matrix& b) {
  return add(a, scale(Rational(-1), b));
}

Matrix scale(const Rational& c, const Matrix& a) {
  Matrix m(a.field(), a.rows(), a.cols());
  Rational cc = a.field().embed(c);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m.set(i, j, a.field().mul(cc, a.at(i, j)));
  return m;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows())
    throw Error(ErrorCode::shape_mismatch, shape(a) + " | " + shape(b));
  Matrix c(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) c.set(i, a.cols() + j, b.at(i, j));
  }
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols())
    throw Error(ErrorCode::shape_mismatch, shape(a) + " / " + shape(b));
  Matrix c(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) c.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i) c.set(a.rows() + i, j, b.at(i, j));
  }
  return c;
}

Vector apply(const Matrix& a, const Vector& x) {
  if (x.size() != a.cols())
    throw Error(ErrorCode::shape_mismatch, shape(a) + " applied to vector");
  const FieldSpec& f = a.field();
  Vector y(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      y[i] = f.add(y[i], f.mul(a.at(i, j), f.embed(x[j])));
  return y;
}

RrefResult rref(const Matrix& a) {
  const FieldSpec& f = a.field();
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t lead = r;
    while (lead < m.rows() && sgn(m.at(lead, c)) == 0) ++lead;
    if (lead == m.rows()) continue;
    if (lead != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Rational t = m.at(r, j);
        m.set(r, j, m.at(lead, j));
        m.set(lead, j, t);
      }
    }
    Rational piv_inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j)
      m.set(r, j, f.mul(piv_inv, m.at(r, j)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Rational factor = m.at(i, c);
      if (sgn(factor) == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).rank(); }

std::vector<Vector> nullspace_basis(const Matrix& a) {
  RrefResult rr = rref(a);
  const FieldSpec& f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols(), Rational(0));
    v[free] = Rational(1);
    for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
      v[rr.pivot_cols[k]] = f.neg(rr.reduced.at(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix nullspace_matrix(const Matrix& a) {
  std::vector<Vector> basis = nullspace_basis(a);
  Matrix m(a.field(), a.cols(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i) m.set(i, j, basis[j][i]);
  return m;
}

std::optional<Vector> solve(const Matrix& a, const Vector& rhs) {
  if (rhs.size() != a.rows())
    throw Error(ErrorCode::shape_mismatch, "rhs length");
  Matrix rhs_col(a.field(), a.rows(), 1);
  for (std::size_t i = 0; i < a.rows(); ++i) rhs_col.set(i, 0, rhs[i]);
  std::optional<Matrix> x = solve_matrix(a, rhs_col);
  if (!x) return std::nullopt;
  return x->col(0);
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& rhs) {
  require_same_field(a, rhs);
  if (rhs.rows() != a.rows())
    throw Error(ErrorCode::shape_mismatch, shape(a) + " \\ " + shape(rhs));
  RrefResult rr = rref(hstack(a, rhs));
  // A pivot landing in the rhs block means some column is inconsistent.
  for (std::size_t c : rr.pivot_cols)
    if (c >= a.cols()) return std::nullopt;
  Matrix x(a.field(), a.cols(), rhs.cols());
  for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      x.set(rr.pivot_cols[k], j, rr.reduced.at(k, a.cols() + j));
  return x;
}

Matrix column_space_basis(const Matrix& a) {
  RrefResult rr = rref(a.transpose());
  Matrix b(a.field(), a.rows(), rr.rank());
  for (std::size_t k = 0; k < rr.rank(); ++k)
    for (std::size_t i = 0; i < a.rows(); ++i) b.set(i, k, rr.reduced.at(k, i));
  return b;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::shape_mismatch, "not square");
  // Singular a leaves some identity column outside the column space, so
  // solve_matrix already reports failure.
  return solve_matrix(a, Matrix::identity(a.field(), a.rows()));
}

}  // namespace repstab

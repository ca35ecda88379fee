#include "rootpoly/matrix.hpp"

#include "rootpoly/errors.hpp"

namespace rootpoly {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& entries) {
  if (entries.empty()) throw ArgumentError("from_rows: empty matrix");
  IntMatrix m(entries.size(), entries[0].size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].size() != m.cols) {
      throw DimensionError("from_rows: ragged rows");
    }
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = entries[i][j];
  }
  return m;
}

LatticeVector IntMatrix::apply(const LatticeVector& x) const {
  if (x.size() != cols) throw DimensionError("IntMatrix::apply: size mismatch");
  LatticeVector y(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) y[i] += at(i, j) * x[j];
  }
  return y;
}

RationalVector IntMatrix::apply(const RationalVector& x) const {
  if (x.size() != cols) throw DimensionError("IntMatrix::apply: size mismatch");
  RationalVector y(rows, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (x[j] != 0 && at(i, j) != 0) y[i] += Rational(at(i, j)) * x[j];
    }
  }
  return y;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols != other.rows) {
    throw DimensionError("IntMatrix::operator*: size mismatch");
  }
  IntMatrix m(rows, other.cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      Int v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < other.cols; ++j) {
        m.at(i, j) += v * other.at(k, j);
      }
    }
  }
  return m;
}

bool IntMatrix::operator<(const IntMatrix& other) const {
  if (rows != other.rows) return rows < other.rows;
  if (cols != other.cols) return cols < other.cols;
  return data < other.data;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(cols, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
  }
  return m;
}

Rational IntMatrix::determinant() const {
  if (rows != cols) throw DimensionError("determinant: matrix not square");
  std::size_t n = rows;
  std::vector<RationalVector> a(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = at(i, j);
  }
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = col; i < n; ++i) {
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rational inv = 1 / a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

bool IntMatrix::is_unimodular() const {
  if (rows != cols) return false;
  Rational d = determinant();
  return d == 1 || d == -1;
}

IntMatrix IntMatrix::inverse() const {
  if (rows != cols) throw DimensionError("inverse: matrix not square");
  std::size_t n = rows;
  std::vector<RationalVector> a(n, RationalVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = at(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = col; i < n; ++i) {
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == n) throw ArgumentError("inverse: matrix is singular");
    std::swap(a[piv], a[col]);
    Rational d = a[col][col];
    for (Rational& v : a[col]) v /= d;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = a[i][n + j];
      if (denominator(v) != 1) {
        throw ArgumentError("inverse: inverse is not integral");
      }
      m.at(i, j) = static_cast<Int>(numerator(v));
    }
  }
  return m;
}

IntMatrix IntMatrix::contragredient() const { return inverse().transpose(); }

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out(rows, std::vector<Int>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[i][j] = at(i, j);
  }
  return out;
}

}  // namespace rootpoly

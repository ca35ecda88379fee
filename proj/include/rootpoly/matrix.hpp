#pragma once

#include <cstddef>
#include <vector>

#include "rootpoly/lattice.hpp"
#include "rootpoly/rational.hpp"

namespace rootpoly {

/** Dense integer matrix acting on column vectors: x maps to M x.  This
 *  column convention is fixed project-wide; composition of actions is matrix
 *  multiplication in the same order. */
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> data;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& entries);

  Int& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  Int at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  LatticeVector apply(const LatticeVector& x) const;
  RationalVector apply(const RationalVector& x) const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;
  bool operator<(const IntMatrix& other) const;

  IntMatrix transpose() const;
  Rational determinant() const;
  bool is_unimodular() const;

  /** Exact inverse; throws ArgumentError unless the inverse is integral. */
  IntMatrix inverse() const;

  /** Action induced on the dual lattice: (M^{-1})^T.  Pairings are preserved:
   *  <M x, contragredient(M) y> = <x, y>. */
  IntMatrix contragredient() const;

  std::vector<std::vector<Int>> to_rows() const;
};

}  // namespace rootpoly

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cox/rational.hpp"

namespace cox {

// Dense integer matrix, row-major. Entries stay small for everything in
// scope (Weyl group elements of rank <= 12), so 64-bit storage suffices.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(int rows, int cols, std::vector<std::int64_t> entries);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int r, int c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(int r, int c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix&) const = default;

  IntMatrix transpose() const;
  IntMatrix pow(long k) const;
  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const;
  std::vector<std::int64_t> column(int c) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

using RationalVector = std::vector<Rational>;

int rank_over_rationals(const IntMatrix& m);
Rational determinant(const IntMatrix& m);

// Basis of the rational nullspace of m, one vector per free column.
std::vector<RationalVector> nullspace(const IntMatrix& m);

// Unique solution of m x = rhs for square nonsingular m.
RationalVector solve(const IntMatrix& m, const RationalVector& rhs);

// Coefficients c_0..c_n of det(t I - m), c_n = 1, by Faddeev-LeVerrier.
std::vector<BigInt> characteristic_polynomial(const IntMatrix& m);

// Scale a rational vector to the primitive integer vector on the same ray.
std::vector<std::int64_t> primitive_integer_vector(const RationalVector& v);

}  // namespace cox

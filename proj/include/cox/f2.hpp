#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cox {

inline constexpr int kMaxF2Dim = 12;

// Vector over the two-element field, bit i = coordinate i.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(int dim, std::uint32_t bits = 0);
  static F2Vector unit(int dim, int i) { return F2Vector(dim, std::uint32_t{1} << i); }

  int dim() const { return dim_; }
  std::uint32_t bits() const { return bits_; }
  bool get(int i) const { return (bits_ >> i) & 1U; }
  bool is_zero() const { return bits_ == 0; }
  // Index of the first nonzero coordinate, -1 for the zero vector.
  int leading() const;

  F2Vector operator+(F2Vector o) const { return F2Vector(dim_, bits_ ^ o.bits_); }
  F2Vector& operator+=(F2Vector o) {
    bits_ ^= o.bits_;
    return *this;
  }
  bool operator==(const F2Vector&) const = default;

  // Coordinates as a 0/1 string, coordinate 1 first.
  std::string to_string() const;

 private:
  int dim_ = 0;
  std::uint32_t bits_ = 0;
};

// Square matrix over F2 stored by columns (column j = image of e_j).
class F2Matrix {
 public:
  F2Matrix() = default;
  explicit F2Matrix(int dim);
  static F2Matrix identity(int dim);
  static F2Matrix from_columns(std::span<const F2Vector> cols);

  int dim() const { return dim_; }
  bool get(int r, int c) const { return (cols_[c] >> r) & 1U; }
  void set(int r, int c, bool value);
  F2Vector column(int c) const { return F2Vector(dim_, cols_[c]); }

  F2Vector operator*(F2Vector v) const;
  F2Matrix operator*(const F2Matrix& o) const;
  F2Matrix operator+(const F2Matrix& o) const;
  bool operator==(const F2Matrix&) const = default;
  F2Matrix pow(long k) const;
  bool is_identity() const { return *this == identity(dim_); }

 private:
  int dim_ = 0;
  std::array<std::uint32_t, kMaxF2Dim> cols_{};
};

// Subspace kept as a reduced echelon basis: each basis vector owns a distinct
// leading coordinate that is zero in every other basis vector, sorted by it.
class F2Subspace {
 public:
  F2Subspace() = default;
  explicit F2Subspace(int ambient_dim) : ambient_(ambient_dim) {}
  static F2Subspace span(int ambient_dim, std::span<const F2Vector> vectors);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<F2Vector>& basis() const { return basis_; }

  // Returns true when v was not already in the subspace.
  bool insert(F2Vector v);
  bool contains(F2Vector v) const { return reduce(v).is_zero(); }
  F2Vector reduce(F2Vector v) const;
  bool subset_of(const F2Subspace& o) const;
  bool operator==(const F2Subspace&) const = default;

 private:
  int ambient_ = 0;
  std::vector<F2Vector> basis_;
};

F2Subspace kernel(const F2Matrix& m);
F2Subspace image(const F2Matrix& m);

}  // namespace cox

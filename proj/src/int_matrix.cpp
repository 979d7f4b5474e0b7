#include "cox/int_matrix.hpp"

#include <numeric>
#include <utility>

#include "cox/errors.hpp"

namespace cox {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

IntMatrix::IntMatrix(int rows, int cols, std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != static_cast<std::size_t>(rows) * cols)
    throw InputError("matrix entry count does not match its shape");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  IntMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  IntMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

IntMatrix IntMatrix::pow(long k) const {
  if (k < 0) throw InputError("negative matrix power");
  IntMatrix result = identity(rows_), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::vector<std::int64_t> IntMatrix::apply(std::span<const std::int64_t> v) const {
  std::vector<std::int64_t> out(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

std::vector<std::int64_t> IntMatrix::column(int c) const {
  std::vector<std::int64_t> out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

namespace {

using RationalMatrix = std::vector<RationalVector>;

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix a(m.rows(), RationalVector(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return a;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RationalMatrix& a, int cols) {
  std::vector<int> pivots;
  int row = 0;
  const int rows = static_cast<int>(a.size());
  for (int c = 0; c < cols && row < rows; ++c) {
    int sel = -1;
    for (int r = row; r < rows; ++r)
      if (a[r][c] != 0) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(a[row], a[sel]);
    Rational inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int j = 0; j < static_cast<int>(a[r].size()); ++j) a[r][j] -= f * a[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_over_rationals(const IntMatrix& m) {
  RationalMatrix a = to_rational(m);
  return static_cast<int>(rref(a, m.cols()).size());
}

Rational determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  RationalMatrix a = to_rational(m);
  const int n = m.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) { sel = r; break; }
    if (sel < 0) return 0;
    if (sel != c) { std::swap(a[c], a[sel]); det = -det; }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

std::vector<RationalVector> nullspace(const IntMatrix& m) {
  RationalMatrix a = to_rational(m);
  const int cols = m.cols();
  std::vector<int> pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector solve(const IntMatrix& m, const RationalVector& rhs) {
  const int n = m.rows();
  if (m.cols() != n || static_cast<int>(rhs.size()) != n)
    throw InputError("solve expects a square system");
  RationalMatrix a = to_rational(m);
  for (int i = 0; i < n; ++i) a[i].push_back(rhs[i]);
  std::vector<int> pivots = rref(a, n);
  if (static_cast<int>(pivots.size()) != n) throw InputError("singular system");
  RationalVector x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::vector<BigInt> characteristic_polynomial(const IntMatrix& m) {
  const int n = m.rows();
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  std::vector<std::vector<BigInt>> mk(n, std::vector<BigInt>(n, 0));
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BigInt s = 0;
        for (int l = 0; l < n; ++l) s += BigInt(m(i, l)) * mk[l][j];
        next[i][j] = s;
      }
    for (int i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    BigInt tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += BigInt(m(i, l)) * next[l][i];
    c[n - k] = -tr / k;
    mk = std::move(next);
  }
  return c;
}

std::vector<std::int64_t> primitive_integer_vector(const RationalVector& v) {
  BigInt lcm = 1;
  for (const auto& x : v) {
    BigInt d = denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& x : v) {
    BigInt z = numerator(x) * (lcm / denominator(x));
    ints.push_back(z);
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(z));
  }
  if (g == 0) throw InputError("zero vector has no primitive representative");
  std::vector<std::int64_t> out;
  for (auto& z : ints) out.push_back(static_cast<std::int64_t>(z / g));
  return out;
}

}  // namespace cox

#include "cox/f2.hpp"

#include <algorithm>
#include <bit>

#include "cox/errors.hpp"

namespace cox {

F2Vector::F2Vector(int dim, std::uint32_t bits) : dim_(dim), bits_(bits) {
  if (dim < 0 || dim > kMaxF2Dim) throw InputError("F2 dimension must be between 0 and 12");
  if (dim < 32 && (bits >> dim) != 0) throw InputError("F2 vector bits exceed its dimension");
}

int F2Vector::leading() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

std::string F2Vector::to_string() const {
  std::string s;
  for (int i = 0; i < dim_; ++i) s += get(i) ? '1' : '0';
  return s;
}

F2Matrix::F2Matrix(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxF2Dim) throw InputError("F2 dimension must be between 0 and 12");
}

F2Matrix F2Matrix::identity(int dim) {
  F2Matrix m(dim);
  for (int i = 0; i < dim; ++i) m.cols_[i] = std::uint32_t{1} << i;
  return m;
}

F2Matrix F2Matrix::from_columns(std::span<const F2Vector> cols) {
  F2Matrix m(static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].dim() != m.dim_) throw InputError("F2 matrix columns must match its size");
    m.cols_[j] = cols[j].bits();
  }
  return m;
}

void F2Matrix::set(int r, int c, bool value) {
  if (value) cols_[c] |= std::uint32_t{1} << r;
  else cols_[c] &= ~(std::uint32_t{1} << r);
}

F2Vector F2Matrix::operator*(F2Vector v) const {
  std::uint32_t out = 0;
  for (std::uint32_t b = v.bits(); b != 0; b &= b - 1) out ^= cols_[std::countr_zero(b)];
  return F2Vector(dim_, out);
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
  F2Matrix r(dim_);
  for (int j = 0; j < dim_; ++j) r.cols_[j] = (*this * o.column(j)).bits();
  return r;
}

F2Matrix F2Matrix::operator+(const F2Matrix& o) const {
  F2Matrix r(dim_);
  for (int j = 0; j < dim_; ++j) r.cols_[j] = cols_[j] ^ o.cols_[j];
  return r;
}

F2Matrix F2Matrix::pow(long k) const {
  F2Matrix result = identity(dim_), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

F2Subspace F2Subspace::span(int ambient_dim, std::span<const F2Vector> vectors) {
  F2Subspace s(ambient_dim);
  for (F2Vector v : vectors) s.insert(v);
  return s;
}

F2Vector F2Subspace::reduce(F2Vector v) const {
  for (F2Vector b : basis_)
    if (v.get(b.leading())) v += b;
  return v;
}

bool F2Subspace::insert(F2Vector v) {
  if (v.dim() != ambient_) throw InputError("F2 vector dimension does not match the subspace");
  v = reduce(v);
  if (v.is_zero()) return false;
  const int lead = v.leading();
  for (F2Vector& b : basis_)
    if (b.get(lead)) b += v;
  basis_.push_back(v);
  std::sort(basis_.begin(), basis_.end(),
            [](F2Vector a, F2Vector b) { return a.leading() < b.leading(); });
  return true;
}

bool F2Subspace::subset_of(const F2Subspace& o) const {
  return std::all_of(basis_.begin(), basis_.end(), [&](F2Vector b) { return o.contains(b); });
}

F2Subspace image(const F2Matrix& m) {
  F2Subspace s(m.dim());
  for (int j = 0; j < m.dim(); ++j) s.insert(m.column(j));
  return s;
}

F2Subspace kernel(const F2Matrix& m) {
  // Eliminate the columns, tracking which combination of unit vectors each
  // reduced column came from; a column that reduces to zero gives a kernel vector.
  const int n = m.dim();
  std::vector<std::pair<F2Vector, F2Vector>> pivots;  // (reduced column, combination)
  F2Subspace ker(n);
  for (int j = 0; j < n; ++j) {
    F2Vector col = m.column(j), comb = F2Vector::unit(n, j);
    for (const auto& [p, c] : pivots)
      if (col.get(p.leading())) {
        col += p;
        comb += c;
      }
    if (col.is_zero()) {
      ker.insert(comb);
      continue;
    }
    // Keep the pivots fully reduced so elimination order does not matter.
    for (auto& [p, c] : pivots)
      if (p.get(col.leading())) {
        p += col;
        c += comb;
      }
    pivots.emplace_back(col, comb);
  }
  return ker;
}

}  // namespace cox

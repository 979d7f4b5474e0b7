#include "cox/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>

#include "cox/errors.hpp"

namespace cox {

namespace {

void join(IntMatrix& g, int i, int j, int value) {
  g(i, j) = value;
  g(j, i) = value;
}

IntMatrix build_gram2(WeylFamily f, int n) {
  IntMatrix g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = 2;
  switch (f) {
    case WeylFamily::A:
      for (int i = 0; i + 1 < n; ++i) join(g, i, i + 1, -1);
      break;
    case WeylFamily::B:
      for (int i = 0; i + 2 < n; ++i) join(g, i, i + 1, -1);
      join(g, n - 2, n - 1, -2);
      g(n - 1, n - 1) = 4;
      break;
    case WeylFamily::D:
      for (int i = 0; i + 3 < n; ++i) join(g, i, i + 1, -1);
      join(g, n - 3, n - 2, -1);
      join(g, n - 3, n - 1, -1);
      break;
    case WeylFamily::E:
      for (int i = 0; i + 2 < n; ++i) join(g, i, i + 1, -1);
      join(g, 2, n - 1, -1);
      break;
    case WeylFamily::F:
      join(g, 0, 1, -1);
      join(g, 1, 2, -2);
      join(g, 2, 3, -2);
      g(2, 2) = 4;
      g(3, 3) = 4;
      break;
    case WeylFamily::G:
      join(g, 0, 1, -3);
      g(1, 1) = 6;
      break;
  }
  return g;
}

std::vector<int> build_exponents(WeylFamily f, int n) {
  std::vector<int> e;
  switch (f) {
    case WeylFamily::A:
      for (int i = 1; i <= n; ++i) e.push_back(i);
      break;
    case WeylFamily::B:
      for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
      break;
    case WeylFamily::D:
      for (int i = 1; i < n; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      std::sort(e.begin(), e.end());
      break;
    case WeylFamily::E:
      if (n == 6) e = {1, 4, 5, 7, 8, 11};
      else if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
      else e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case WeylFamily::F: e = {1, 5, 7, 11}; break;
    case WeylFamily::G: e = {1, 5}; break;
  }
  return e;
}

char family_letter(WeylFamily f) { return "ABDEFG"[static_cast<int>(f)]; }

}  // namespace

std::string WeylData::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

int WeylData::label(int i, int j) const {
  if (i == j) return 1;
  switch (cartan(i, j) * cartan(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: return 6;
  }
}

CoxeterSymbol WeylData::symbol() const {
  CoxeterSymbol g;
  for (int i = 1; i <= rank; ++i) g.add_node(std::to_string(i));
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j)
      if (label(i, j) != 2) g.set_edge(i, j, label(i, j));
  return g;
}

WeylData weyl_data(WeylFamily f, int n) {
  bool ok = false;
  switch (f) {
    case WeylFamily::A: ok = n >= 1; break;
    case WeylFamily::B: ok = n >= 2; break;
    case WeylFamily::D: ok = n >= 4; break;
    case WeylFamily::E: ok = n >= 6 && n <= 8; break;
    case WeylFamily::F: ok = n == 4; break;
    case WeylFamily::G: ok = n == 2; break;
  }
  if (!ok || n > kMaxWeylRank)
    throw InputError(std::string("no Weyl group of type ") + family_letter(f) + std::to_string(n));

  WeylData w{f, n, IntMatrix(n, n), build_gram2(f, n), build_exponents(f, n), 0, 1, false, {}, 1};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w.cartan(i, j) = 2 * w.gram2(i, j) / w.gram2(i, i);
  w.coxeter_number = w.exponents.back() + 1;
  for (int e : w.exponents) w.order *= e + 1;
  for (int i = 0; i < n; ++i)
    if (w.gram2(i, i) != 2) w.scaled_nodes = w.scaled_nodes.with(i);
  switch (f) {
    case WeylFamily::A: w.index_of_connection = n + 1; w.minus_one_type = n == 1; break;
    case WeylFamily::B: w.index_of_connection = 2; w.minus_one_type = true; break;
    case WeylFamily::D: w.index_of_connection = 4; w.minus_one_type = n % 2 == 0; break;
    case WeylFamily::E:
      w.index_of_connection = 9 - n;
      w.minus_one_type = n != 6;
      break;
    case WeylFamily::F:
    case WeylFamily::G: w.index_of_connection = 1; w.minus_one_type = true; break;
  }
  return w;
}

WeylData weyl_data(std::string_view family, int rank) {
  if (family.size() != 1) throw InputError("unknown Weyl family '" + std::string(family) + "'");
  switch (std::toupper(static_cast<unsigned char>(family[0]))) {
    case 'A': return weyl_data(WeylFamily::A, rank);
    case 'B': return weyl_data(WeylFamily::B, rank);
    case 'D': return weyl_data(WeylFamily::D, rank);
    case 'E': return weyl_data(WeylFamily::E, rank);
    case 'F': return weyl_data(WeylFamily::F, rank);
    case 'G': return weyl_data(WeylFamily::G, rank);
    default: throw InputError("unknown Weyl family '" + std::string(family) + "'");
  }
}

WeylData weyl_data(std::string_view type_name) {
  std::string letters, digits;
  for (char c : type_name) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
    else if (digits.empty()) letters += c;
    else throw InputError("malformed Weyl type '" + std::string(type_name) + "'");
  }
  if (letters.size() != 1 || digits.empty() || digits.size() > 3)
    throw InputError("malformed Weyl type '" + std::string(type_name) + "'");
  return weyl_data(letters, std::stoi(digits));
}

IntMatrix cartan_matrix(const WeylData& w) { return w.cartan; }

WeylElement reflection_matrix(const WeylData& w, int node) {
  if (node < 0 || node >= w.rank) throw InputError("node out of range for " + w.name());
  IntMatrix m = IntMatrix::identity(w.rank);
  for (int j = 0; j < w.rank; ++j) m(node, j) -= w.cartan(node, j);
  return WeylElement(std::move(m));
}

WeylElement word_to_matrix(const WeylData& w, std::span<const int> word) {
  WeylElement out = WeylElement::identity(w.rank);
  for (int s : word) out = out * reflection_matrix(w, s);
  return out;
}

WeylElement coxeter_element(const WeylData& w, std::optional<NodeSet> nodes) {
  NodeSet set = nodes.value_or(NodeSet::all(w.rank));
  if (set.empty() || !set.subset_of(NodeSet::all(w.rank))) throw InputError("invalid node subset");
  if (connected_components(w.symbol(), set).size() != 1)
    throw InputError("Coxeter element needs a connected node set");
  std::vector<int> word = set.members();
  return word_to_matrix(w, word);
}

int element_order(const WeylElement& m, int bound) {
  if (bound < 1) throw InputError("order bound must be positive");
  WeylElement p = m;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  throw CheckFailure("element order exceeds bound " + std::to_string(bound));
}

LongestElement longest_element(const WeylData& w, NodeSet delta) {
  if (!delta.subset_of(NodeSet::all(w.rank))) throw InputError("invalid node subset");
  std::vector<WeylElement> gens;
  for (int s = 0; s < w.rank; ++s) gens.push_back(reflection_matrix(w, s));
  LongestElement out{WeylElement::identity(w.rank), 0, {}};
  while (true) {
    int pick = -1;
    for (int s : delta.members()) {
      bool nonnegative = true;
      for (int i = 0; i < w.rank; ++i)
        if (out.element.matrix()(i, s) < 0) { nonnegative = false; break; }
      if (nonnegative) { pick = s; break; }
    }
    if (pick < 0) break;
    out.element = out.element * gens[pick];
    out.word.push_back(pick);
    ++out.length;
  }
  return out;
}

bool verify_exponents(const WeylData& w) {
  std::vector<BigInt> cp = characteristic_polynomial(coxeter_element(w).matrix());
  std::vector<std::complex<double>> poly{1.0};
  for (int m : w.exponents) {
    std::complex<double> root = std::polar(1.0, 2.0 * std::numbers::pi * m / w.coxeter_number);
    std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = std::move(next);
  }
  if (poly.size() != cp.size()) return false;
  for (std::size_t i = 0; i < cp.size(); ++i)
    if (std::abs(poly[i] - std::complex<double>(cp[i].convert_to<double>(), 0.0)) > 1e-6) return false;
  return true;
}

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation p;
  for (int i = 1; i <= n; ++i) p.image.push_back(i);
  return p;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
  SignedPermutation r;
  for (int q : o.image) {
    int v = image[std::abs(q) - 1];
    r.image.push_back(q > 0 ? v : -v);
  }
  return r;
}

bool SignedPermutation::is_identity() const { return *this == identity(static_cast<int>(image.size())); }

SignedPermutation perm_generator(const WeylData& w, int node) {
  const int n = w.rank;
  if (node < 0 || node >= n) throw InputError("node out of range for " + w.name());
  switch (w.family) {
    case WeylFamily::A: {
      auto p = SignedPermutation::identity(n + 1);
      std::swap(p.image[node], p.image[node + 1]);
      return p;
    }
    case WeylFamily::B: {
      auto p = SignedPermutation::identity(n);
      if (node == n - 1) p.image[n - 1] = -n;
      else std::swap(p.image[node], p.image[node + 1]);
      return p;
    }
    case WeylFamily::D: {
      auto p = SignedPermutation::identity(n);
      if (node == n - 1) {
        p.image[n - 2] = -n;
        p.image[n - 1] = -(n - 1);
      } else {
        std::swap(p.image[node], p.image[node + 1]);
      }
      return p;
    }
    default:
      throw InputError("permutation model exists only for types A, B, D");
  }
}

SignedPermutation perm_model(const WeylData& w, std::span<const int> word) {
  if (w.family != WeylFamily::A && w.family != WeylFamily::B && w.family != WeylFamily::D)
    throw InputError("permutation model exists only for types A, B, D");
  auto p = SignedPermutation::identity(w.family == WeylFamily::A ? w.rank + 1 : w.rank);
  for (int s : word) p = p * perm_generator(w, s);
  return p;
}

}  // namespace cox

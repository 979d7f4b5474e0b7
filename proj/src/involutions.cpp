#include "cox/involutions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include "cox/errors.hpp"

namespace cox {

namespace {

bool component_minus_one(const FiniteType& t) {
  switch (t.family) {
    case Family::A: return t.rank == 1;
    case Family::D: return t.rank % 2 == 0;
    case Family::E6: return false;
    case Family::I2: return t.dihedral_m % 2 == 0;
    default: return true;
  }
}

}  // namespace

bool is_minus_one_type(const CoxeterSymbol& g, NodeSet t) {
  if (t.empty()) return false;
  auto types = classify_finite_type(g, t);
  if (!types) return false;
  return std::all_of(types->begin(), types->end(), component_minus_one);
}

std::vector<int> pi_permutation(const CoxeterSymbol& g, NodeSet component) {
  auto rc = recognize_component(g, component);
  if (!rc) throw InputError("pi is defined only on connected finite symbols");
  std::vector<int> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  if (component_minus_one(rc->type)) return perm;
  const auto& st = rc->standard;
  const int k = static_cast<int>(st.size());
  switch (rc->type.family) {
    case Family::A:
    case Family::I2:
      for (int i = 0; i < k; ++i) perm[st[i]] = st[k - 1 - i];
      break;
    case Family::D:
      perm[st[k - 2]] = st[k - 1];
      perm[st[k - 1]] = st[k - 2];
      break;
    case Family::E6:
      for (auto [a, b] : {std::pair{0, 4}, std::pair{1, 3}}) {
        perm[st[a]] = st[b];
        perm[st[b]] = st[a];
      }
      break;
    default:
      break;
  }
  return perm;
}

std::vector<int> pi_permutation(const CoxeterSymbol& g) { return pi_permutation(g, g.all_nodes()); }

std::vector<NodeSet> elementary_moves(const CoxeterSymbol& g, NodeSet delta) {
  if (!is_minus_one_type(g, delta)) throw InputError("elementary moves need a (-1)-type subsymbol");
  std::vector<NodeSet> out;
  for (int s : (g.all_nodes() - delta).members()) {
    NodeSet grown = delta.with(s);
    NodeSet comp;
    for (NodeSet c : connected_components(g, grown))
      if (c.contains(s)) comp = c;
    if (!is_finite(g, comp) || is_minus_one_type(g, comp)) continue;
    int image = pi_permutation(g, comp)[s];
    NodeSet moved = grown.without(image);
    if (!is_minus_one_type(g, moved) || moved.size() != delta.size())
      throw CheckFailure("elementary move left the (-1)-type subsymbols");
    out.push_back(moved);
  }
  return out;
}

std::vector<EquivalenceClass> equivalence_classes(const CoxeterSymbol& g) {
  if (g.size() > kMaxEnumerationNodes) throw InputError("class enumeration limited to 12 nodes");
  std::vector<NodeSet> subsets;
  std::unordered_map<std::uint32_t, int> index;
  const std::uint32_t total = std::uint32_t{1} << g.size();
  for (std::uint32_t bits = 1; bits < total; ++bits)
    if (is_minus_one_type(g, NodeSet(bits))) {
      index[bits] = static_cast<int>(subsets.size());
      subsets.emplace_back(bits);
    }

  std::vector<int> parent(subsets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (NodeSet m : elementary_moves(g, subsets[i])) {
      int a = find(static_cast<int>(i)), b = find(index.at(m.bits()));
      if (a != b) parent[a] = b;
    }

  std::unordered_map<int, std::size_t> slot;
  std::vector<EquivalenceClass> classes;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    int root = find(static_cast<int>(i));
    auto [it, fresh] = slot.try_emplace(root, classes.size());
    if (fresh) classes.push_back({{}, subsets[i].size()});
    classes[it->second].members.push_back(subsets[i]);
  }
  for (auto& c : classes) std::sort(c.members.begin(), c.members.end(), lex_less);
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return a.rank != b.rank ? a.rank < b.rank : lex_less(a.canonical(), b.canonical());
  });
  return classes;
}

EquivalenceClass maximal_rank_class(const WeylData& w) {
  auto classes = equivalence_classes(w.symbol());
  const int top = classes.back().rank;
  auto count = std::count_if(classes.begin(), classes.end(), [&](const auto& c) { return c.rank == top; });
  if (count != 1) throw CheckFailure("maximal rank class of " + w.name() + " is not unique");
  return classes.back();
}

bool half_coxeter_check(const WeylData& w) {
  if (w.coxeter_number % 2 != 0) throw InputError("half-turn check needs an even Coxeter number");
  WeylElement g = coxeter_element(w).pow(w.coxeter_number / 2);
  if (!(g * g).is_identity()) return false;
  int minus_dim = rank_over_rationals(g.matrix() - IntMatrix::identity(w.rank));
  return minus_dim == maximal_rank_class(w).rank;
}

std::vector<int> longest_word(const CoxeterSymbol& g, NodeSet delta) {
  if (!is_finite(g, delta)) throw InputError("longest element needs a finite subsymbol");
  const std::vector<int> nodes = delta.members();
  const int k = static_cast<int>(nodes.size());
  // Rows of the current element's matrix in the basis of simple roots; the
  // element acts by w -> w * s, so column j tracks w(alpha_j).
  std::vector<std::vector<double>> b(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int m = g.label(nodes[i], nodes[j]);
      b[i][j] = i == j ? 1.0 : (m == 2 ? 0.0 : -std::cos(std::numbers::pi / m));
    }
  std::vector<std::vector<double>> w(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i) w[i][i] = 1.0;
  std::vector<int> word;
  while (true) {
    int pick = -1;
    for (int j = 0; j < k && pick < 0; ++j) {
      double sum = 0.0;
      for (int i = 0; i < k; ++i) sum += w[i][j];
      if (sum > 0) pick = j;
    }
    if (pick < 0) break;
    // s_pick(alpha_j) = alpha_j - 2 B(alpha_j, alpha_pick) alpha_pick, so
    // column j of w * s gains -2 b[pick][j] times column pick.
    std::vector<double> col(k);
    for (int i = 0; i < k; ++i) col[i] = w[i][pick];
    for (int j = 0; j < k; ++j) {
      double f = -2.0 * b[pick][j];
      if (f == 0.0) continue;
      for (int i = 0; i < k; ++i) w[i][j] += f * col[i];
    }
    word.push_back(nodes[pick]);
    if (word.size() > 100000) throw CheckFailure("longest word search did not terminate");
  }
  return word;
}

}  // namespace cox

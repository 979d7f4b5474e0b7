#include "cox/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include <Eigen/Dense>
#include <json.hpp>

#include "cox/errors.hpp"

namespace cox {

CoxeterSymbol::CoxeterSymbol(std::vector<std::string> nodes) {
  for (auto& n : nodes) add_node(std::move(n));
}

int CoxeterSymbol::add_node(std::string name) {
  if (std::find(names_.begin(), names_.end(), name) != names_.end())
    throw InputError("duplicate node '" + name + "'");
  if (size() >= NodeSet::kCapacity) throw InputError("symbol exceeds 32 nodes");
  const int old = size();
  std::vector<int> grown(static_cast<std::size_t>(old + 1) * (old + 1), 2);
  for (int i = 0; i < old; ++i)
    for (int j = 0; j < old; ++j) grown[i * (old + 1) + j] = labels_[i * old + j];
  grown[old * (old + 1) + old] = 1;
  labels_ = std::move(grown);
  names_.push_back(std::move(name));
  return old;
}

void CoxeterSymbol::set_edge(int a, int b, int m) {
  if (a < 0 || b < 0 || a >= size() || b >= size()) throw InputError("edge endpoint out of range");
  if (a == b) throw InputError("an edge needs two distinct nodes");
  if (m != kInfinity && m < 2) throw InputError("edge label must be >= 2 or infinity");
  labels_[a * size() + b] = m;
  labels_[b * size() + a] = m;
}

int CoxeterSymbol::label(int a, int b) const { return labels_[a * size() + b]; }

int CoxeterSymbol::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  throw InputError("unknown node '" + std::string(name) + "'");
}

std::vector<int> CoxeterSymbol::neighbours(int v) const {
  std::vector<int> out;
  for (int u = 0; u < size(); ++u)
    if (adjacent(u, v)) out.push_back(u);
  return out;
}

std::vector<CoxeterSymbol::Edge> CoxeterSymbol::edges() const {
  std::vector<Edge> out;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (label(a, b) != 2) out.push_back({a, b, label(a, b)});
  return out;
}

// ---------------------------------------------------------------------------
// JSON

CoxeterSymbol parse_symbol(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("symbol JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array())
    throw InputError("symbol JSON needs a \"nodes\" array");
  CoxeterSymbol g;
  for (const auto& n : doc["nodes"]) {
    if (!n.is_string()) throw InputError("node identifiers must be strings");
    g.add_node(n.get<std::string>());
  }
  if (!doc.contains("edges")) return g;
  if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string())
      throw InputError("each edge is [node, node, label]");
    int a = g.index_of(e[0].get<std::string>());
    int b = g.index_of(e[1].get<std::string>());
    int m;
    if (e[2].is_string() && e[2].get<std::string>() == "inf") {
      m = kInfinity;
    } else if (e[2].is_number_integer()) {
      auto v = e[2].get<long long>();
      if (v < 2) throw InputError("edge label must be >= 2 or \"inf\"");
      if (v > 1'000'000) throw InputError("edge label too large");
      m = static_cast<int>(v);
    } else {
      throw InputError("edge label must be an integer or \"inf\"");
    }
    if (a == b) throw InputError("self-loop on node '" + g.name(a) + "'");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      throw InputError("edge listed twice");
    g.set_edge(a, b, m);
  }
  return g;
}

std::string serialize_symbol(const CoxeterSymbol& g) {
  nlohmann::ordered_json doc;
  doc["nodes"] = g.names();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    nlohmann::ordered_json label = e.m == kInfinity ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(e.m);
    doc["edges"].push_back({g.name(e.a), g.name(e.b), label});
  }
  return doc.dump();
}

// ---------------------------------------------------------------------------
// Structure

CoxeterSymbol induced_subsymbol(const CoxeterSymbol& g, NodeSet nodes) {
  if (!nodes.subset_of(g.all_nodes())) throw InputError("node set not contained in the symbol");
  CoxeterSymbol sub;
  std::vector<int> idx = nodes.members();
  for (int i : idx) sub.add_node(g.name(i));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      int m = g.label(idx[a], idx[b]);
      if (m != 2) sub.set_edge(static_cast<int>(a), static_cast<int>(b), m);
    }
  return sub;
}

std::vector<NodeSet> connected_components(const CoxeterSymbol& g, NodeSet within) {
  std::vector<NodeSet> out;
  NodeSet left = within;
  while (!left.empty()) {
    NodeSet comp = NodeSet::single(left.first());
    NodeSet frontier = comp;
    while (!frontier.empty()) {
      NodeSet next;
      for (int v : frontier.members())
        for (int u : left.members())
          if (!comp.contains(u) && g.adjacent(u, v)) next = next.with(u);
      comp = comp | next;
      frontier = next;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

std::vector<NodeSet> connected_components(const CoxeterSymbol& g) {
  return connected_components(g, g.all_nodes());
}

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt family_order(Family f, int rank, int m) {
  switch (f) {
    case Family::A: return factorial(rank + 1);
    case Family::B: return (BigInt(1) << rank) * factorial(rank);
    case Family::D: return (BigInt(1) << (rank - 1)) * factorial(rank);
    case Family::E6: return 51840;
    case Family::E7: return 2903040;
    case Family::E8: return 696729600;
    case Family::F4: return 1152;
    case Family::G2: return 12;
    case Family::H3: return 120;
    case Family::H4: return 14400;
    case Family::I2: return 2 * m;
  }
  return 0;
}

FiniteType make_type(Family f, int rank, int m = 0) {
  return FiniteType{f, rank, f == Family::I2 ? m : 0, family_order(f, rank, m)};
}

// Walk from `from` away from `prev` inside `comp`, listing the nodes of a
// chain until it ends.
std::vector<int> walk_arm(const CoxeterSymbol& g, NodeSet comp, int prev, int from) {
  std::vector<int> arm{from};
  int cur = from;
  while (true) {
    int next = -1;
    for (int u : comp.members())
      if (u != prev && u != cur && g.adjacent(u, cur)) { next = u; break; }
    if (next < 0) break;
    prev = cur;
    cur = next;
    arm.push_back(cur);
  }
  return arm;
}

}  // namespace

std::string FiniteType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::I2: return "I2(" + std::to_string(dihedral_m) + ")";
  }
  return "?";
}

std::optional<RecognizedComponent> recognize_component(const CoxeterSymbol& g, NodeSet comp) {
  const std::vector<int> nodes = comp.members();
  const int k = static_cast<int>(nodes.size());
  if (k == 0) return std::nullopt;
  if (connected_components(g, comp).size() != 1) return std::nullopt;

  int edge_count = 0;
  std::vector<int> degree(g.size(), 0);
  for (int a : nodes)
    for (int b : nodes) {
      if (b <= a || g.label(a, b) == 2) continue;
      if (g.label(a, b) == kInfinity) return std::nullopt;
      ++edge_count;
      ++degree[a];
      ++degree[b];
    }
  if (edge_count != k - 1) return std::nullopt;  // contains a cycle

  if (k == 1) return RecognizedComponent{make_type(Family::A, 1), nodes};
  if (k == 2) {
    int m = g.label(nodes[0], nodes[1]);
    if (m == 3) return RecognizedComponent{make_type(Family::A, 2), nodes};
    if (m == 4) return RecognizedComponent{make_type(Family::B, 2), nodes};
    if (m == 6) return RecognizedComponent{make_type(Family::G2, 2), nodes};
    return RecognizedComponent{make_type(Family::I2, 2, m), nodes};
  }

  std::vector<int> branch;
  for (int v : nodes) {
    if (degree[v] > 3) return std::nullopt;
    if (degree[v] == 3) branch.push_back(v);
  }
  if (branch.size() > 1) return std::nullopt;

  if (branch.size() == 1) {
    const int c = branch[0];
    for (int a : nodes)
      for (int b : nodes)
        if (b > a && g.label(a, b) != 2 && g.label(a, b) != 3) return std::nullopt;
    std::vector<std::vector<int>> arms;
    for (int nb : g.neighbours(c))
      if (comp.contains(nb)) arms.push_back(walk_arm(g, comp, c, nb));
    std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
      return x.size() != y.size() ? x.size() < y.size() : x.front() < y.front();
    });
    const std::size_t a = arms[0].size(), b = arms[1].size(), l = arms[2].size();
    std::vector<int> standard;
    auto append_far_first = [&](const std::vector<int>& arm) {
      standard.insert(standard.end(), arm.rbegin(), arm.rend());
    };
    if (a == 1 && b == 1) {
      append_far_first(arms[2]);
      standard.push_back(c);
      standard.push_back(arms[0][0]);
      standard.push_back(arms[1][0]);
      return RecognizedComponent{make_type(Family::D, k), standard};
    }
    if (a == 1 && b == 2 && (l == 2 || l == 3 || l == 4)) {
      append_far_first(arms[1]);
      standard.push_back(c);
      standard.insert(standard.end(), arms[2].begin(), arms[2].end());
      standard.push_back(arms[0][0]);
      Family f = l == 2 ? Family::E6 : l == 3 ? Family::E7 : Family::E8;
      return RecognizedComponent{make_type(f, k), standard};
    }
    return std::nullopt;
  }

  // A path: start from the end with the smaller index.
  int start = -1;
  for (int v : nodes)
    if (degree[v] == 1) { start = v; break; }
  std::vector<int> seq = walk_arm(g, comp, -1, start);
  std::vector<int> labels;
  for (int j = 0; j + 1 < k; ++j) labels.push_back(g.label(seq[j], seq[j + 1]));
  std::vector<int> odd;
  for (int j = 0; j + 1 < k; ++j)
    if (labels[j] != 3) odd.push_back(j);
  if (odd.empty()) return RecognizedComponent{make_type(Family::A, k), seq};
  if (odd.size() > 1) return std::nullopt;
  const int j = odd[0], m = labels[j];
  std::vector<int> rev(seq.rbegin(), seq.rend());
  if (m == 4) {
    if (j == k - 2) return RecognizedComponent{make_type(Family::B, k), seq};
    if (j == 0) return RecognizedComponent{make_type(Family::B, k), rev};
    if (k == 4 && j == 1) return RecognizedComponent{make_type(Family::F4, 4), seq};
    return std::nullopt;
  }
  if (m == 5 && (k == 3 || k == 4)) {
    Family f = k == 3 ? Family::H3 : Family::H4;
    if (j == 0) return RecognizedComponent{make_type(f, k), seq};
    if (j == k - 2) return RecognizedComponent{make_type(f, k), rev};
  }
  return std::nullopt;
}

std::optional<std::vector<FiniteType>> classify_finite_type(const CoxeterSymbol& g, NodeSet within) {
  std::vector<FiniteType> out;
  for (NodeSet comp : connected_components(g, within)) {
    auto rc = recognize_component(g, comp);
    if (!rc) return std::nullopt;
    out.push_back(rc->type);
  }
  return out;
}

std::optional<std::vector<FiniteType>> classify_finite_type(const CoxeterSymbol& g) {
  return classify_finite_type(g, g.all_nodes());
}

bool is_finite(const CoxeterSymbol& g, NodeSet within) {
  return classify_finite_type(g, within).has_value();
}

BigInt finite_order(const CoxeterSymbol& g, NodeSet within) {
  auto types = classify_finite_type(g, within);
  if (!types) throw InputError("symbol is not of finite type");
  BigInt order = 1;
  for (const auto& t : *types) order *= t.order;
  return order;
}

BigInt finite_order(const CoxeterSymbol& g) { return finite_order(g, g.all_nodes()); }

Rational euler_characteristic(const CoxeterSymbol& g) {
  if (g.size() > kMaxEnumerationNodes)
    throw InputError("euler characteristic limited to 12 nodes");
  Rational chi = 0;
  const std::uint32_t total = std::uint32_t{1} << g.size();
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    NodeSet t(bits);
    auto types = classify_finite_type(g, t);
    if (!types) continue;
    BigInt order = 1;
    for (const auto& ft : *types) order *= ft.order;
    Rational term(BigInt(1), order);
    chi += t.size() % 2 == 0 ? term : -term;
  }
  return chi;
}

// ---------------------------------------------------------------------------
// Bilinear form

RealMatrix bilinear_gram(const CoxeterSymbol& g, double inf_value) {
  if (inf_value > -1.0) throw InputError("inf_value must be <= -1");
  const int n = g.size();
  RealMatrix b(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) { b[i][j] = 1.0; continue; }
      int m = g.label(i, j);
      if (m == kInfinity) b[i][j] = inf_value;
      else if (m != 2) b[i][j] = -std::cos(std::numbers::pi / m);
    }
  return b;
}

Signature signature(const CoxeterSymbol& g, NodeSet within, double inf_value) {
  RealMatrix full = bilinear_gram(g, inf_value);
  std::vector<int> idx = within.members();
  const int n = static_cast<int>(idx.size());
  Signature s;
  if (n == 0) return s;
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = full[idx[i]][idx[j]];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  for (int i = 0; i < n; ++i) {
    double lambda = solver.eigenvalues()(i);
    if (std::abs(lambda) < kEigenvalueTolerance) ++s.zero;
    else if (lambda > 0) ++s.positive;
    else ++s.negative;
  }
  return s;
}

Signature signature(const CoxeterSymbol& g, double inf_value) {
  return signature(g, g.all_nodes(), inf_value);
}

int parity_character(const CoxeterSymbol& g, int t, std::span<const int> word) {
  if (t < 0 || t >= g.size()) throw InputError("parity character node out of range");
  for (int u : g.neighbours(t)) {
    int m = g.label(t, u);
    if (m != kInfinity && m % 2 != 0)
      throw InputError("parity character undefined: odd label at node '" + g.name(t) + "'");
  }
  int count = 0;
  for (int s : word) {
    if (s < 0 || s >= g.size()) throw InputError("word letter out of range");
    if (s == t) ++count;
  }
  return count % 2;
}

}  // namespace cox

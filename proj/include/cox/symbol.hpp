#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cox/node_set.hpp"
#include "cox/rational.hpp"

namespace cox {

// Edge label standing for m = infinity.
inline constexpr int kInfinity = 0;

// Finite labeled graph of a Coxeter presentation. Absent pairs have m = 2;
// labels are stored densely but only m >= 3 (or infinity) counts as an edge.
class CoxeterSymbol {
 public:
  CoxeterSymbol() = default;
  explicit CoxeterSymbol(std::vector<std::string> nodes);

  int add_node(std::string name);
  // m = 2 removes the edge; m = kInfinity marks an infinite order.
  void set_edge(int a, int b, int m);

  int size() const { return static_cast<int>(names_.size()); }
  int label(int a, int b) const;
  bool adjacent(int a, int b) const { return a != b && label(a, b) != 2; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(std::string_view name) const;
  std::vector<int> neighbours(int v) const;
  NodeSet all_nodes() const { return NodeSet::all(size()); }

  struct Edge {
    int a, b, m;
  };
  // Edges with a < b in row-major order.
  std::vector<Edge> edges() const;

  bool operator==(const CoxeterSymbol&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> labels_;  // size() * size(), 2 off the edges, 1 on the diagonal
};

enum class Family { A, B, D, E6, E7, E8, F4, G2, H3, H4, I2 };

struct FiniteType {
  Family family;
  int rank;
  int dihedral_m = 0;  // only for I2(m)
  BigInt order;

  std::string name() const;
  bool operator==(const FiniteType&) const = default;
};

// A recognised connected finite component together with the node order that
// matches the standard numbering of its family (index k holds the node that
// plays standard node k + 1).
struct RecognizedComponent {
  FiniteType type;
  std::vector<int> standard;
};

CoxeterSymbol parse_symbol(std::string_view json_text);
std::string serialize_symbol(const CoxeterSymbol& g);

CoxeterSymbol induced_subsymbol(const CoxeterSymbol& g, NodeSet nodes);

// Components ordered by smallest member.
std::vector<NodeSet> connected_components(const CoxeterSymbol& g, NodeSet within);
std::vector<NodeSet> connected_components(const CoxeterSymbol& g);

std::optional<RecognizedComponent> recognize_component(const CoxeterSymbol& g, NodeSet component);

std::optional<std::vector<FiniteType>> classify_finite_type(const CoxeterSymbol& g, NodeSet within);
std::optional<std::vector<FiniteType>> classify_finite_type(const CoxeterSymbol& g);

bool is_finite(const CoxeterSymbol& g, NodeSet within);

BigInt finite_order(const CoxeterSymbol& g, NodeSet within);
BigInt finite_order(const CoxeterSymbol& g);

inline constexpr int kMaxEnumerationNodes = 12;

Rational euler_characteristic(const CoxeterSymbol& g);

using RealMatrix = std::vector<std::vector<double>>;

RealMatrix bilinear_gram(const CoxeterSymbol& g, double inf_value = -1.0);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

inline constexpr double kEigenvalueTolerance = 1e-8;

Signature signature(const CoxeterSymbol& g, double inf_value = -1.0);
Signature signature(const CoxeterSymbol& g, NodeSet within, double inf_value = -1.0);

// Number of occurrences of t in word, mod 2. Requires every edge at t to
// have even (or infinite) label.
int parity_character(const CoxeterSymbol& g, int t, std::span<const int> word);

}  // namespace cox

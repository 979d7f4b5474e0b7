#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cox/int_matrix.hpp"
#include "cox/node_set.hpp"
#include "cox/symbol.hpp"

namespace cox {

enum class WeylFamily { A, B, D, E, F, G };

inline constexpr int kMaxWeylRank = 12;

// Integer matrix acting on root-basis coordinates; column j is the image of x_j.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(IntMatrix m) : m_(std::move(m)) {}
  static WeylElement identity(int n) { return WeylElement(IntMatrix::identity(n)); }

  const IntMatrix& matrix() const { return m_; }
  int dim() const { return m_.rows(); }
  bool is_identity() const { return m_ == IntMatrix::identity(m_.rows()); }

  WeylElement operator*(const WeylElement& o) const { return WeylElement(m_ * o.m_); }
  WeylElement pow(long k) const { return WeylElement(m_.pow(k)); }
  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const { return m_.apply(v); }
  bool operator==(const WeylElement&) const = default;

 private:
  IntMatrix m_;
};

// Root-lattice data of an irreducible Weyl group. Node i (0-based) is the
// standard node i + 1: A/B/D paths 1..n with the B double edge at n-1 - n and
// the D fork at n-1, n; E_n path 1..n-1 with n attached to 3; F4 path with
// the double edge between 2 and 3; G2 nodes 1, 2.
struct WeylData {
  WeylFamily family;
  int rank;
  IntMatrix cartan;  // cartan(i, j) = <x_j, x_i^vee>
  IntMatrix gram2;   // 2 (x_i, x_j) with (v_s, v_s) = 1
  std::vector<int> exponents;
  int coxeter_number;
  int index_of_connection;
  bool minus_one_type;
  NodeSet scaled_nodes;
  std::int64_t order;

  std::string name() const;
  CoxeterSymbol symbol() const;
  // Coxeter label between two nodes (1 on the diagonal, 2 if not joined).
  int label(int i, int j) const;
};

WeylData weyl_data(WeylFamily family, int rank);
// Accepts "A".."G" (case-insensitive) for the family.
WeylData weyl_data(std::string_view family, int rank);
// Accepts "E6" or "E 6".
WeylData weyl_data(std::string_view type_name);

IntMatrix cartan_matrix(const WeylData& w);
WeylElement reflection_matrix(const WeylData& w, int node);
WeylElement word_to_matrix(const WeylData& w, std::span<const int> word);

// Product over the given nodes in ascending order (all nodes by default).
WeylElement coxeter_element(const WeylData& w, std::optional<NodeSet> nodes = std::nullopt);

int element_order(const WeylElement& m, int bound);

struct LongestElement {
  WeylElement element;
  int length;
  std::vector<int> word;
};

LongestElement longest_element(const WeylData& w, NodeSet delta);

bool verify_exponents(const WeylData& w);

// Signed permutation of u_1..u_N: image[i] = +-(j + 1) means u_{i+1} -> +-u_{j+1}.
struct SignedPermutation {
  std::vector<int> image;

  static SignedPermutation identity(int n);
  SignedPermutation operator*(const SignedPermutation& o) const;  // (p*q)(u) = p(q(u))
  bool operator==(const SignedPermutation&) const = default;
  bool is_identity() const;
};

SignedPermutation perm_generator(const WeylData& w, int node);
SignedPermutation perm_model(const WeylData& w, std::span<const int> word);

}  // namespace cox

#pragma once

#include <vector>

#include "cox/node_set.hpp"
#include "cox/symbol.hpp"
#include "cox/weyl.hpp"

namespace cox {

// Every component of the induced subsymbol has longest element -1. The empty
// set is not of (-1)-type.
bool is_minus_one_type(const CoxeterSymbol& g, NodeSet t);

// Permutation of all nodes of g induced by -w_0 on a connected finite
// component (identity off the component and for (-1)-type components).
std::vector<int> pi_permutation(const CoxeterSymbol& g, NodeSet component);
std::vector<int> pi_permutation(const CoxeterSymbol& g);

std::vector<NodeSet> elementary_moves(const CoxeterSymbol& g, NodeSet delta);

struct EquivalenceClass {
  std::vector<NodeSet> members;  // sorted by lex_less
  int rank;

  NodeSet canonical() const { return members.front(); }
};

// All classes of (-1)-type subsets, ordered by rank, then canonical member.
std::vector<EquivalenceClass> equivalence_classes(const CoxeterSymbol& g);

EquivalenceClass maximal_rank_class(const WeylData& w);

bool half_coxeter_check(const WeylData& w);

// Reduced word for the longest element of a finite visible subgroup, found
// greedily in the geometric representation (smallest node first).
std::vector<int> longest_word(const CoxeterSymbol& g, NodeSet delta);

}  // namespace cox

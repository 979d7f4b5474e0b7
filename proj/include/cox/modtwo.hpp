#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cox/f2.hpp"
#include "cox/weyl.hpp"

namespace cox {

// Primitive lattice vector orthogonal to every x_t with t != node, positive
// at node. Coordinates are in the root basis.
struct WeightVector {
  int node;
  std::vector<std::int64_t> coords;

  F2Vector reduced() const;
};

WeightVector weight_vector(const WeylData& w, int s);

F2Vector reduce_mod2(std::span<const std::int64_t> v);
F2Matrix reduce_mod2(const IntMatrix& m);
F2Matrix reduce_mod2(const WeylElement& g);

// Reflections of w reduced mod 2, indexed by node.
std::vector<F2Matrix> generators_mod2(const WeylData& w);

struct OrbitSpan {
  std::vector<F2Vector> orbit;  // BFS order: FIFO, generators tried by index
  F2Subspace span;
};

OrbitSpan orbit_span(std::span<const F2Matrix> gens, F2Vector start);

// Nodes of the unique path s = p_1, ..., p_k = t in the tree of w.
std::vector<int> minimal_path(const WeylData& w, int s, int t);

std::vector<F2Vector> x_set(const WeylData& w, int s, int t);
bool is_independent_for(const WeylData& w, int s, NodeSet targets);

bool is_admissible(const WeylData& w, int s);
bool is_specially_admissible(const WeylData& w, int s);

int lambda_dim(const WeylData& w, int s);

struct KerIm {
  F2Subspace ker;
  F2Subspace im;
  int d;
};

// Kernel and image of g + 1 for an involution g.
KerIm involution_ker_im(const F2Matrix& g);

// 1 + xi^q + xi^{2q} + ... + xi^{(2^{p-1} - 1) q}, mod 2.
F2Matrix alpha_map(const WeylElement& xi, int q, int p);

// First u in increasing bitmask order (x_1 lowest) with alpha(u) in
// ker(g + 1) minus im(g + 1), where g = xi^{2^{p-1} q}.
F2Vector find_target(const WeylElement& xi, int q, int p);

struct DPsi {
  int h;
  int ker_dim;
  int im_dim;
  int d;
};

// Dimension of ker/im of xi^{h/2} + 1 for the standard Coxeter element.
DPsi d_psi(const WeylData& w);

}  // namespace cox

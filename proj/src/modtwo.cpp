#include "cox/modtwo.hpp"

#include <deque>

#include "cox/errors.hpp"

namespace cox {

F2Vector WeightVector::reduced() const { return reduce_mod2(coords); }

WeightVector weight_vector(const WeylData& w, int s) {
  const int n = w.rank;
  if (s < 0 || s >= n) throw InputError("node out of range for " + w.name());
  IntMatrix rows(n - 1, n);
  for (int t = 0, r = 0; t < n; ++t) {
    if (t == s) continue;
    for (int j = 0; j < n; ++j) rows(r, j) = w.gram2(t, j);
    ++r;
  }
  auto basis = nullspace(rows);
  if (basis.size() != 1) throw CheckFailure("weight vector nullspace is not one-dimensional");
  auto coords = primitive_integer_vector(basis[0]);
  if (coords[s] < 0)
    for (auto& c : coords) c = -c;
  return WeightVector{s, coords};
}

F2Vector reduce_mod2(std::span<const std::int64_t> v) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] % 2 != 0) bits |= std::uint32_t{1} << i;
  return F2Vector(static_cast<int>(v.size()), bits);
}

F2Matrix reduce_mod2(const IntMatrix& m) {
  F2Matrix r(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) % 2 != 0) r.set(i, j, true);
  return r;
}

F2Matrix reduce_mod2(const WeylElement& g) { return reduce_mod2(g.matrix()); }

std::vector<F2Matrix> generators_mod2(const WeylData& w) {
  std::vector<F2Matrix> gens;
  for (int s = 0; s < w.rank; ++s) gens.push_back(reduce_mod2(reflection_matrix(w, s)));
  return gens;
}

OrbitSpan orbit_span(std::span<const F2Matrix> gens, F2Vector start) {
  for (const auto& g : gens)
    if (g.dim() != start.dim()) throw InputError("generator and vector dimensions differ");
  OrbitSpan out{{start}, F2Subspace(start.dim())};
  std::vector<bool> seen(std::size_t{1} << start.dim(), false);
  seen[start.bits()] = true;
  for (std::size_t head = 0; head < out.orbit.size(); ++head) {
    F2Vector v = out.orbit[head];
    for (const auto& g : gens) {
      F2Vector u = g * v;
      if (!seen[u.bits()]) {
        seen[u.bits()] = true;
        out.orbit.push_back(u);
      }
    }
  }
  for (F2Vector v : out.orbit) out.span.insert(v);
  return out;
}

std::vector<int> minimal_path(const WeylData& w, int s, int t) {
  const int n = w.rank;
  if (s < 0 || s >= n || t < 0 || t >= n) throw InputError("node out of range for " + w.name());
  std::vector<int> parent(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<int> queue{s};
  seen[s] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u = 0; u < n; ++u)
      if (!seen[u] && w.label(u, v) != 2 && u != v) {
        seen[u] = true;
        parent[u] = v;
        queue.push_back(u);
      }
  }
  std::vector<int> path;
  for (int v = t; v != -1; v = parent[v]) path.insert(path.begin(), v);
  return path;
}

std::vector<F2Vector> x_set(const WeylData& w, int s, int t) {
  auto gens = generators_mod2(w);
  std::vector<F2Vector> out{weight_vector(w, s).reduced()};
  for (int p : minimal_path(w, s, t)) out.push_back(gens[p] * out.back());
  return out;
}

bool is_independent_for(const WeylData& w, int s, NodeSet targets) {
  if (targets.empty()) throw InputError("independence needs a nonempty target set");
  NodeSet path_nodes;
  F2Subspace span(w.rank);
  for (int t : targets.members()) {
    path_nodes = path_nodes | NodeSet::of(minimal_path(w, s, t));
    for (F2Vector v : x_set(w, s, t)) span.insert(v);
  }
  return span.dim() == path_nodes.size() + 1;
}

namespace {

struct TypeAPath {
  int target;
  int rank;
};

std::vector<TypeAPath> type_a_paths(const WeylData& w, int s) {
  std::vector<TypeAPath> out;
  const CoxeterSymbol g = w.symbol();
  for (int t = 0; t < w.rank; ++t) {
    NodeSet nodes = NodeSet::of(minimal_path(w, s, t));
    auto rc = recognize_component(g, nodes);
    if (rc && rc->type.family == Family::A) out.push_back({t, nodes.size()});
  }
  return out;
}

bool admissible_impl(const WeylData& w, int s, bool special) {
  if (s < 0 || s >= w.rank) throw InputError("node out of range for " + w.name());
  if (w.scaled_nodes.contains(s)) return false;
  for (const auto& p : type_a_paths(w, s)) {
    if (!special && p.rank % 2 == 0) continue;
    if (!is_independent_for(w, s, NodeSet::single(p.target))) return false;
  }
  return true;
}

}  // namespace

bool is_admissible(const WeylData& w, int s) { return admissible_impl(w, s, false); }
bool is_specially_admissible(const WeylData& w, int s) { return admissible_impl(w, s, true); }

int lambda_dim(const WeylData& w, int s) {
  auto gens = generators_mod2(w);
  return orbit_span(gens, weight_vector(w, s).reduced()).span.dim();
}

KerIm involution_ker_im(const F2Matrix& g) {
  if (!(g * g).is_identity()) throw InputError("matrix is not an involution over F2");
  F2Matrix a = g + F2Matrix::identity(g.dim());
  KerIm out{kernel(a), image(a), 0};
  out.d = out.ker.dim() - out.im.dim();
  return out;
}

F2Matrix alpha_map(const WeylElement& xi, int q, int p) {
  if (p < 1 || q < 1) throw InputError("alpha needs p >= 1 and q >= 1");
  F2Matrix step = reduce_mod2(xi).pow(q);
  F2Matrix term = F2Matrix::identity(xi.dim());
  F2Matrix sum(xi.dim());
  for (long j = 0; j < (1L << (p - 1)); ++j) {
    sum = sum + term;
    term = term * step;
  }
  return sum;
}

F2Vector find_target(const WeylElement& xi, int q, int p) {
  if (p < 1) throw InputError("no target: the Coxeter number is odd");
  const int n = xi.dim();
  F2Matrix g = reduce_mod2(xi).pow(static_cast<long>(q) << (p - 1));
  KerIm ki = involution_ker_im(g);
  F2Matrix alpha = alpha_map(xi, q, p);
  for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << n); ++bits) {
    F2Vector u(n, bits);
    F2Vector a = alpha * u;
    if (ki.ker.contains(a) && !ki.im.contains(a)) return u;
  }
  throw InputError("no target vector: alpha misses ker minus im");
}

DPsi d_psi(const WeylData& w) {
  if (w.coxeter_number % 2 != 0) throw InputError("d_Psi needs an even Coxeter number");
  F2Matrix g = reduce_mod2(coxeter_element(w)).pow(w.coxeter_number / 2);
  KerIm ki = involution_ker_im(g);
  return DPsi{w.coxeter_number, ki.ker.dim(), ki.im.dim(), ki.d};
}

}  // namespace cox

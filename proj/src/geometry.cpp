#include "cox/geometry.hpp"

#include <algorithm>

#include "cox/errors.hpp"
#include "cox/involutions.hpp"
#include "cox/weyl.hpp"

namespace cox {

namespace {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

void require_even_dimension(int n) {
  if (n < 2 || n % 2 != 0) throw InputError("dimension must be a positive even integer");
}

}  // namespace

Rational bernoulli(int k) {
  if (k < 2 || k > 32 || k % 2 != 0) throw InputError("bernoulli needs an even index in [2, 32]");
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
  std::vector<Rational> b(k + 1);
  b[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rational sum = 0;
    for (int j = 0; j < m; ++j) sum += Rational(binomial(m + 1, j)) * b[j];
    b[m] = -sum / Rational(m + 1);
  }
  return b[k];
}

std::string PiMonomial::to_string() const {
  std::string pi = power == 0 ? "" : power == 1 ? " pi" : " pi^" + std::to_string(power);
  return cox::to_string(coeff) + pi;
}

PiMonomial kappa(int n) {
  require_even_dimension(n);
  Rational c(BigInt(1) << n);
  c *= Rational(factorial(n / 2), factorial(n));
  if ((n / 2) % 2 == 1) c = -c;
  return {c, n / 2};
}

PiMonomial covolume_gauss_bonnet(const CoxeterSymbol& g, int n) {
  require_even_dimension(n);
  return kappa(n) * euler_characteristic(g);
}

PiMonomial covolume_siegel(int n) {
  if (n != 4 && n != 6 && n != 8) throw InputError("closed-form covolume only for n = 4, 6, 8");
  const int sign = n == 8 ? 1 : -1;
  Rational c(BigInt((1 << (n / 2)) + sign), factorial(n));
  for (int k = 1; k <= n / 2; ++k) c *= abs(bernoulli(2 * k));
  return {c, n / 2};
}

namespace {

CoxeterSymbol vinberg_psi(int n) {
  switch (n) {
    case 4: return weyl_data(WeylFamily::A, 4).symbol();
    case 5: return weyl_data(WeylFamily::D, 5).symbol();
    case 6: case 7: case 8: return weyl_data(WeylFamily::E, n).symbol();
    case 9: {
      CoxeterSymbol g = weyl_data(WeylFamily::E, 8).symbol();
      int extra = g.add_node("9");
      g.set_edge(6, extra, 3);  // end of the long arm
      return g;
    }
    default: throw InputError("Vinberg symbols exist here for 4 <= n <= 9");
  }
}

CoxeterSymbol with_pendant(const CoxeterSymbol& psi, int s) {
  CoxeterSymbol g = psi;
  int t = g.add_node("t");
  g.set_edge(s, t, 4);
  return g;
}

// Finite covolume: every vertex link is spherical (finite) or Euclidean
// (every component affine).
bool has_finite_volume(const CoxeterSymbol& g) {
  for (int v = 0; v < g.size(); ++v) {
    NodeSet rest = g.all_nodes().without(v);
    if (is_finite(g, rest)) continue;
    for (NodeSet c : connected_components(g, rest)) {
      Signature s = signature(g, c);
      if (s.negative != 0 || s.zero != 1) return false;
    }
  }
  return true;
}

}  // namespace

VinbergSymbol vinberg_symbol(int n) {
  CoxeterSymbol psi = vinberg_psi(n);
  std::vector<int> candidates;
  for (int s = 0; s < psi.size(); ++s) {
    CoxeterSymbol g = with_pendant(psi, s);
    if (signature(g) != Signature{n, 1, 0}) continue;
    if (!has_finite_volume(g)) continue;
    candidates.push_back(s);
  }
  if (candidates.empty()) throw CheckFailure("no pendant position gives a hyperbolic simplex");
  if (candidates.size() > 1) {
    // Accept only ties related by a diagram symmetry of Psi.
    if (!is_finite(psi, psi.all_nodes())) throw CheckFailure("pendant position is ambiguous");
    auto perm = pi_permutation(psi);
    for (int s : candidates)
      if (s != candidates[0] && perm[candidates[0]] != s) throw CheckFailure("pendant position is ambiguous");
  }
  const int s = candidates[0];
  VinbergSymbol out{n, psi, with_pendant(psi, s), s, std::nullopt};
  if (n == 4 || n == 6 || n == 8) {
    WeylData w = n == 4 ? weyl_data(WeylFamily::A, 4) : weyl_data(WeylFamily::E, n);
    out.dagger = build_dagger(w, {s});
  }
  return out;
}

ManifoldVolume manifold_volume(int n) {
  if (n != 4 && n != 6 && n != 8) throw InputError("manifold volumes only for n = 4, 6, 8");
  VinbergSymbol vs = vinberg_symbol(n);
  PiMonomial covol = covolume_siegel(n);
  if (covolume_gauss_bonnet(vs.gamma, n) != covol) throw CheckFailure("covolume routes disagree");
  const DaggerSymbol& d = *vs.dagger;
  ManifoldVolume out;
  if (n == 4) {
    out.index = kernel_index_formula(d, PhiMode::Hat);
    out.p = 0;
  } else {
    CyclicExtension ext = cyclic_extension(d, false);
    out.index = ext.index;
    out.p = ext.p;
  }
  out.vol = covol * Rational(out.index);
  out.chi = out.vol.coeff / kappa(n).coeff;
  out.deck = BigInt(1) << out.p;
  return out;
}

}  // namespace cox

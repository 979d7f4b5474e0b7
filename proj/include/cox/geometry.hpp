#pragma once

#include <optional>
#include <string>

#include "cox/rational.hpp"
#include "cox/symbol.hpp"
#include "cox/torsionfree.hpp"

namespace cox {

// Exact Bernoulli number B_k for even 2 <= k <= 32.
Rational bernoulli(int k);

// coeff * pi^power.
struct PiMonomial {
  Rational coeff;
  int power = 0;

  bool operator==(const PiMonomial&) const = default;
  PiMonomial operator*(const Rational& r) const { return {coeff * r, power}; }
  std::string to_string() const;
};

// Gauss-Bonnet constant: covolume = kappa(n) * Euler characteristic.
PiMonomial kappa(int n);

PiMonomial covolume_gauss_bonnet(const CoxeterSymbol& g, int n);
// Closed form through Bernoulli numbers for the simplex groups of dimension 4, 6, 8.
PiMonomial covolume_siegel(int n);

struct VinbergSymbol {
  int n;
  CoxeterSymbol psi;    // Psi with nodes "1".."n" (or "1".."9" for the affine E8 at n = 9)
  CoxeterSymbol gamma;  // psi plus the pendant "t"
  int attachment;       // node of psi carrying the pendant
  std::optional<DaggerSymbol> dagger;  // n = 4, 6, 8
};

VinbergSymbol vinberg_symbol(int n);

struct ManifoldVolume {
  PiMonomial vol;
  Rational chi;
  BigInt index;
  BigInt deck;
  int p;
};

ManifoldVolume manifold_volume(int n);

}  // namespace cox

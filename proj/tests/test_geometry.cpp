#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cox/errors.hpp"
#include "cox/geometry.hpp"
#include "oracles.hpp"

using namespace cox;

namespace {

double to_double(const Rational& r) { return r.convert_to<double>(); }

// Covolume of the simplex group from the zeta-based Bernoulli numbers.
double siegel_numeric(int n) {
  double c = (std::pow(2.0, n / 2) + (n == 8 ? 1 : -1)) / std::tgamma(n + 1.0);
  for (int k = 1; k <= n / 2; ++k) c *= oracle::bernoulli_abs_from_zeta(2 * k);
  return c;
}

// Pendant positions giving a Lorentzian signature and finite volume, decided
// here without any covolume comparison.
std::vector<int> hyperbolic_pendants(const CoxeterSymbol& psi, int n) {
  std::vector<int> out;
  for (int s = 0; s < psi.size(); ++s) {
    CoxeterSymbol g = psi;
    int t = g.add_node("t");
    g.set_edge(s, t, 4);
    if (signature(g) != Signature{n, 1, 0}) continue;
    bool finite_volume = true;
    for (int v = 0; v < g.size(); ++v) {
      NodeSet rest = g.all_nodes().without(v);
      if (is_finite(g, rest)) continue;
      for (NodeSet c : connected_components(g, rest)) {
        Signature sc = signature(g, c);
        if (sc.negative != 0 || sc.zero != 1) finite_volume = false;
      }
    }
    if (finite_volume) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(6) == Rational(1, 42));
  CHECK(bernoulli(8) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (int k = 1; k <= 4; ++k)
    CHECK(std::abs(to_double(abs(bernoulli(2 * k))) - oracle::bernoulli_abs_from_zeta(2 * k)) < 1e-9);
  for (int k = 2; k <= 32; k += 2) CHECK((bernoulli(k) > 0) == (k % 4 == 2));
  CHECK_THROWS_AS(bernoulli(3), InputError);
  CHECK_THROWS_AS(bernoulli(34), InputError);
}

TEST_CASE("Gauss-Bonnet constants") {
  CHECK(kappa(2) == PiMonomial{Rational(-2), 1});
  CHECK(kappa(4) == PiMonomial{Rational(4, 3), 2});
  CHECK(kappa(6) == PiMonomial{Rational(-8, 15), 3});
  // Half the volume of the unit n-sphere, with sign (-1)^{n/2}.
  for (int n = 2; n <= 10; n += 2) {
    double sphere = 2 * std::pow(std::numbers::pi, (n + 1) / 2.0) / std::tgamma((n + 1) / 2.0);
    auto k = kappa(n);
    double value = to_double(k.coeff) * std::pow(std::numbers::pi, k.power);
    CHECK(value == doctest::Approx(((n / 2) % 2 ? -1 : 1) * sphere / 2));
  }
  CHECK_THROWS_AS(kappa(5), InputError);
}

TEST_CASE("closed-form covolumes") {
  CHECK(covolume_siegel(4) == PiMonomial{Rational(1, 1440), 2});
  CHECK(covolume_siegel(6) == PiMonomial{Rational(1, 777600), 3});
  CHECK(covolume_siegel(8) == PiMonomial{Rational(17, 9144576000LL), 4});
  for (int n : {4, 6, 8}) CHECK(to_double(covolume_siegel(n).coeff) == doctest::Approx(siegel_numeric(n)).epsilon(1e-9));
  CHECK_THROWS_AS(covolume_siegel(5), InputError);
}

TEST_CASE("Vinberg pendant positions") {
  const int expect[] = {1, 3, 0, 5, 6, 8};
  for (int n = 4; n <= 9; ++n) {
    auto v = vinberg_symbol(n);
    CAPTURE(n);
    CHECK(v.attachment == expect[n - 4]);
    CHECK(v.gamma.size() == n + 1);
    CHECK(signature(v.gamma) == Signature{n, 1, 0});
    CHECK(v.dagger.has_value() == (n % 2 == 0 && n <= 8));
    auto found = hyperbolic_pendants(v.psi, n);
    REQUIRE_FALSE(found.empty());
    CHECK(found[0] == v.attachment);
  }
  CHECK_THROWS_AS(vinberg_symbol(3), InputError);
  CHECK_THROWS_AS(vinberg_symbol(10), InputError);
}

TEST_CASE("two covolume routes agree") {
  for (int n : {4, 6, 8}) {
    auto v = vinberg_symbol(n);
    CHECK(covolume_gauss_bonnet(v.gamma, n) == covolume_siegel(n));
  }
}

TEST_CASE("manifold volumes") {
  auto m4 = manifold_volume(4);
  CHECK(m4.vol == PiMonomial{Rational(8, 3), 2});
  CHECK(m4.chi == 2);
  CHECK(m4.index == 3840);
  CHECK(m4.p == 0);
  CHECK(m4.deck == 1);

  auto m6 = manifold_volume(6);
  CHECK(m6.vol == PiMonomial{Rational(16, 15), 3});
  CHECK(m6.chi == -2);
  CHECK(m6.p == 3);
  CHECK(m6.deck == 8);

  auto m8 = manifold_volume(8);
  CHECK(m8.p == 1);
  CHECK(m8.chi == 2176);
  CHECK(m8.vol == PiMonomial{Rational(34816, 105), 4});

  for (int n : {4, 6, 8}) {
    auto m = manifold_volume(n);
    auto v = vinberg_symbol(n);
    CHECK(m.vol.coeff == covolume_siegel(n).coeff * Rational(m.index));
    CHECK(m.chi == Rational(m.index) * euler_characteristic(v.gamma));
    CHECK(denominator(m.chi) == 1);
    CHECK(m.index * m.deck == kernel_index_formula(*v.dagger, PhiMode::Hat));
  }
  CHECK_THROWS_AS(manifold_volume(5), InputError);
}

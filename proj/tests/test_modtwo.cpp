#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "cox/errors.hpp"
#include "cox/modtwo.hpp"
#include "oracles.hpp"

using namespace cox;

namespace {

F2Vector bits_of(int dim, std::initializer_list<int> one_based) {
  std::uint32_t b = 0;
  for (int i : one_based) b |= std::uint32_t{1} << (i - 1);
  return F2Vector(dim, b);
}

int two_adic(int x) { return std::countr_zero(static_cast<unsigned>(x)); }

}  // namespace

TEST_CASE("weight vector golden values") {
  for (int n = 2; n <= 12; ++n) {
    std::vector<std::int64_t> expect(n);
    std::iota(expect.begin(), expect.end(), 1);
    CHECK(weight_vector(weyl_data("A", n), n - 1).coords == expect);
  }
  for (int n = 4; n <= 12; ++n) {
    std::vector<std::int64_t> expect(n, 2);
    expect[n - 2] = expect[n - 1] = 1;
    CHECK(weight_vector(weyl_data("D", n), 0).coords == expect);
  }
  CHECK_THROWS_AS(weight_vector(weyl_data("A", 3), 3), InputError);
}

TEST_CASE("weight vectors are orthogonal, primitive and dominant") {
  for (auto [f, n] : oracle::weyl_types(8, 12)) {
    auto w = oracle::weyl(f, n);
    // cartan(i, j) = <x_j, x_i^vee>, so the simple weights are the columns of its inverse.
    auto inv = oracle::inverse(w.cartan);
    for (int s = 0; s < n; ++s) {
      auto u = weight_vector(w, s);
      std::int64_t g = 0;
      for (int i = 0; i < n; ++i) {
        std::int64_t dot = 0;
        for (int j = 0; j < n; ++j) dot += w.gram2(i, j) * u.coords[j];
        CHECK((dot != 0) == (i == s));
        g = std::gcd(g, u.coords[i]);
      }
      CHECK(g == 1);
      Rational ratio = Rational(u.coords[s]) / inv[s][s];
      CHECK(ratio > 0);
      for (int i = 0; i < n; ++i) CHECK(Rational(u.coords[i]) == ratio * inv[i][s]);
    }
  }
}

TEST_CASE("reduction mod 2") {
  CHECK(reduce_mod2(std::vector<std::int64_t>{2, 2, 1, 1}) == bits_of(4, {3, 4}));
  CHECK(reduce_mod2(std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7, 8}) == bits_of(8, {1, 3, 5, 7}));
  CHECK(reduce_mod2(IntMatrix::identity(5)).is_identity());
}

TEST_CASE("orbits and spans") {
  auto id = F2Matrix::identity(4);
  std::vector<F2Matrix> gens{id};
  auto o = orbit_span(gens, bits_of(4, {2}));
  CHECK(o.orbit.size() == 1);
  CHECK(o.span.dim() == 1);
  CHECK(orbit_span(gens, F2Vector(4)).span.dim() == 0);
  auto e6 = weyl_data("E6");
  auto e6gens = generators_mod2(e6);
  for (int s = 0; s < 6; ++s)
    if (is_admissible(e6, s)) CHECK(orbit_span(e6gens, weight_vector(e6, s).reduced()).span.dim() == 6);
}

TEST_CASE("path images") {
  auto e6 = weyl_data("E6");
  auto gens = generators_mod2(e6);
  auto xs = x_set(e6, 2, 2);
  REQUIRE(xs.size() == 2);
  CHECK(xs[1] == gens[2] * xs[0]);

  auto b2 = x_set(weyl_data("B", 2), 0, 0);
  CHECK(b2[0] == bits_of(2, {2}));
  CHECK(b2[1] == bits_of(2, {2}));

  // From s3 to s1 in A3: u = (1, 2, 3) pairs to 4 with the coroot of x3 and
  // is fixed by s2, s1, so all four images agree mod 2.
  auto a3w = weyl_data("A", 3);
  auto a3 = x_set(a3w, 2, 0);
  REQUIRE(a3.size() == 4);
  std::vector<std::int64_t> u{1, 2, 3};
  std::vector<F2Vector> expect{reduce_mod2(u)};
  for (int s : {2, 1, 0}) {
    u = reflection_matrix(a3w, s).apply(u);
    expect.push_back(reduce_mod2(u));
  }
  CHECK(a3 == expect);
  CHECK(a3[0] == bits_of(3, {1, 3}));
  CHECK(a3[3] == a3[0]);

  // A4 from s4 to s1 does move: the pairing is 5.
  auto a4 = x_set(weyl_data("A", 4), 3, 0);
  CHECK(std::set<std::uint32_t>{a4[0].bits(), a4[1].bits(), a4[2].bits(), a4[3].bits(), a4[4].bits()}.size() == 5);
}

TEST_CASE("independence examples") {
  CHECK(is_independent_for(weyl_data("B", 6), 1, NodeSet::of({1, 4})));
  CHECK_FALSE(is_independent_for(weyl_data("B", 5), 0, NodeSet::single(0)));
  // A5 at node 3: l = 3, k = 3, both odd after dividing by the gcd.
  auto a5 = weyl_data("A", 5);
  for (int t = 0; t < 5; ++t) CHECK_FALSE(is_independent_for(a5, 2, NodeSet::single(t)));
  CHECK_THROWS_AS(is_independent_for(a5, 2, NodeSet()), InputError);
}

TEST_CASE("admissibility congruences for classical types") {
  for (int n = 2; n <= 12; ++n) {
    auto a = weyl_data("A", n);
    for (int i = 1; i <= n; ++i)
      CHECK(is_admissible(a, i - 1) == (two_adic(i) != two_adic(n + 1 - i)));
  }
  for (int n = 2; n <= 12; ++n) {
    auto b = weyl_data("B", n);
    for (int i = 1; i <= n; ++i) {
      bool even_trunk = i < n && i % 2 == 0;
      CHECK(is_admissible(b, i - 1) == even_trunk);
      CHECK(is_specially_admissible(b, i - 1) == (even_trunk && i % 4 == 2));
    }
  }
  for (int n = 4; n <= 12; ++n) {
    auto d = weyl_data("D", n);
    for (int i = 1; i <= n; ++i) {
      bool even_trunk = i <= n - 2 && i % 2 == 0;
      CHECK(is_admissible(d, i - 1) == even_trunk);
      CHECK(is_specially_admissible(d, i - 1) == (even_trunk && i % 4 == 2));
    }
  }
  auto f4 = weyl_data("F", 4);
  CHECK_FALSE(is_admissible(f4, 2));
  CHECK_FALSE(is_admissible(f4, 3));
  CHECK_FALSE(is_admissible(weyl_data("G", 2), 1));
  CHECK_FALSE(is_specially_admissible(weyl_data("B", 6), 5));
}

TEST_CASE("lambda dimension") {
  for (auto [f, n] : oracle::weyl_types(8, 8)) {
    auto w = oracle::weyl(f, n);
    for (int s = 0; s < n; ++s)
      if (is_admissible(w, s)) CHECK(lambda_dim(w, s) == n);
  }
  bool found_line = false;
  for (int n = 2; n <= 8 && !found_line; ++n) {
    auto b = weyl_data("B", n);
    for (int s = 0; s < n; ++s)
      if (!is_admissible(b, s) && lambda_dim(b, s) == 1) found_line = true;
  }
  CHECK(found_line);
  CHECK(lambda_dim(weyl_data("B", 2), 0) == 1);
}

TEST_CASE("kernel and image of g + 1") {
  auto ki = involution_ker_im(F2Matrix::identity(5));
  CHECK(ki.ker.dim() == 5);
  CHECK(ki.im.dim() == 0);
  CHECK(ki.d == 5);

  auto e6 = weyl_data("E6");
  auto g = reduce_mod2(coxeter_element(e6)).pow(6);
  auto e = involution_ker_im(g);
  std::vector<F2Vector> expected{bits_of(6, {1, 4}), bits_of(6, {2, 5})};
  CHECK(e.im == F2Subspace::span(6, expected));
  CHECK(e.d == 2);

  // A5: xi^3 swaps x_i and x_{3+i} for i < 3 and sends x_3 to -(x_1 + ... + x_5).
  auto a5 = weyl_data("A", 5);
  auto a = involution_ker_im(reduce_mod2(coxeter_element(a5)).pow(3));
  CHECK(a.d == 1);
  std::vector<F2Vector> a5_im{bits_of(5, {1, 4}), bits_of(5, {2, 5})};
  CHECK(a.im == F2Subspace::span(5, a5_im));
  CHECK_FALSE(a.ker.contains(bits_of(5, {3})));
  CHECK(a.ker.contains(bits_of(5, {1, 2, 3})));
  CHECK_FALSE(a.im.contains(bits_of(5, {1, 2, 3})));

  // E6 with the Coxeter element of the D5 on nodes 2..6.
  auto d5 = involution_ker_im(reduce_mod2(coxeter_element(e6, NodeSet::all(6).without(0))).pow(4));
  std::vector<F2Vector> d5_im{bits_of(6, {2, 3, 5}), bits_of(6, {2, 6})};
  CHECK(d5.im == F2Subspace::span(6, d5_im));
  auto d5_ker = d5.im;
  d5_ker.insert(bits_of(6, {4}));
  d5_ker.insert(bits_of(6, {5}));
  CHECK(d5.ker == d5_ker);

  CHECK_THROWS_AS(involution_ker_im(reduce_mod2(coxeter_element(a5))), InputError);

  std::mt19937 rng(2);
  for (auto [f, n] : oracle::weyl_types(8, 8)) {
    auto w = oracle::weyl(f, n);
    if (w.coxeter_number % 2 != 0) continue;
    auto xi_half = coxeter_element(w).pow(w.coxeter_number / 2);
    auto base = involution_ker_im(reduce_mod2(xi_half));
    CHECK(base.im.subset_of(base.ker));
    for (int trial = 0; trial < 10; ++trial) {
      auto word = oracle::random_word(rng, n, 20);
      std::vector<int> rev(word.rbegin(), word.rend());
      auto conj = word_to_matrix(w, word) * xi_half * word_to_matrix(w, rev);
      CHECK(involution_ker_im(reduce_mod2(conj)).d == base.d);
    }
  }
}

TEST_CASE("alpha and targets") {
  auto b6 = weyl_data("B", 6);
  CHECK(alpha_map(coxeter_element(b6), 3, 1).is_identity());
  // B_n: alpha(x1) = x1 + x_{q+1} + ... + x_{kq+1} with k = 2^{p-1} - 1.
  CHECK(alpha_map(coxeter_element(b6), 3, 2) * bits_of(6, {1}) == bits_of(6, {1, 4}));
  auto b12 = weyl_data("B", 12);
  CHECK(alpha_map(coxeter_element(b12), 3, 3) * bits_of(12, {1}) == bits_of(12, {1, 4, 7, 10}));

  auto e6 = weyl_data("E6");
  auto d5 = coxeter_element(e6, NodeSet::all(6).without(0));
  CHECK(alpha_map(d5, 1, 3) * bits_of(6, {1}) == bits_of(6, {3, 4, 6}));
  auto xi = coxeter_element(e6);
  CHECK(alpha_map(xi, 3, 2) * bits_of(6, {1}) == bits_of(6, {2, 3, 4, 6}));
  CHECK(find_target(xi, 3, 2) == bits_of(6, {1}));

  for (int n = 5; n <= 11; n += 2) {
    auto d = weyl_data("D", n);
    const int h = d.coxeter_number, p = two_adic(h), q = h >> p;
    auto dxi = coxeter_element(d);
    auto ki = involution_ker_im(reduce_mod2(dxi).pow(static_cast<long>(q) << (p - 1)));
    auto image = alpha_map(dxi, q, p) * bits_of(n, {n - 1});
    CHECK(ki.ker.contains(image));
    CHECK_FALSE(ki.im.contains(image));
  }
  CHECK_THROWS_AS(find_target(coxeter_element(weyl_data("A", 4)), 5, 0), InputError);
}

TEST_CASE("d_Psi table") {
  auto expect = [](char f, int n) {
    switch (f) {
      case 'A': return 1;
      case 'B': return n;
      case 'D': return n % 2 == 0 ? n : n - 2;
      case 'G': return 2;
      case 'F': return 4;
      default: return n == 6 ? 2 : n;
    }
  };
  for (auto [f, n] : oracle::weyl_types(8, 10)) {
    auto w = oracle::weyl(f, n);
    if (f == 'A' && n % 2 == 0) {
      CHECK_THROWS_AS(d_psi(w), InputError);
      continue;
    }
    if (f == 'A' && n == 1) continue;
    CHECK(d_psi(w).d == expect(f, n));
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cox/errors.hpp"
#include "cox/symbol.hpp"
#include "oracles.hpp"

using namespace cox;

namespace {

CoxeterSymbol path(const std::vector<int>& labels) {
  CoxeterSymbol g;
  for (std::size_t i = 0; i <= labels.size(); ++i) g.add_node(std::to_string(i + 1));
  for (std::size_t i = 0; i < labels.size(); ++i) g.set_edge(static_cast<int>(i), static_cast<int>(i + 1), labels[i]);
  return g;
}

CoxeterSymbol relabel(const CoxeterSymbol& g, const std::vector<int>& perm) {
  std::vector<std::string> names(g.size());
  for (int i = 0; i < g.size(); ++i) names[perm[i]] = g.name(i);
  CoxeterSymbol h(names);
  for (auto e : g.edges()) h.set_edge(perm[e.a], perm[e.b], e.m);
  return h;
}

std::vector<std::string> type_names(const std::optional<std::vector<FiniteType>>& t) {
  std::vector<std::string> out;
  for (const auto& x : *t) out.push_back(x.name());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("symbol JSON round trip and validation") {
  const std::string text = R"({"nodes":["a","b","c"],"edges":[["a","b",4],["b","c","inf"]]})";
  CoxeterSymbol g = parse_symbol(text);
  CHECK(g.size() == 3);
  CHECK(g.label(0, 1) == 4);
  CHECK(g.label(1, 2) == kInfinity);
  CHECK(g.label(0, 2) == 2);
  CHECK(parse_symbol(serialize_symbol(g)) == g);

  CHECK_THROWS_AS(parse_symbol(R"({"nodes":["a","a"],"edges":[]})"), InputError);
  CHECK_THROWS_AS(parse_symbol(R"({"nodes":["a","b"],"edges":[["a","b",1]]})"), InputError);
  CHECK_THROWS_AS(parse_symbol(R"({"nodes":["a","b"],"edges":[["a","b","infinite"]]})"), InputError);
  CHECK_THROWS_AS(parse_symbol(R"({"nodes":["a","b"],"edges":[["a","c",3]]})"), InputError);
  CHECK_THROWS_AS(parse_symbol("not json"), InputError);
}

TEST_CASE("connected components") {
  CoxeterSymbol two(std::vector<std::string>{"x", "y"});
  CHECK(connected_components(two).size() == 2);
  CHECK(connected_components(path({3, 3})).size() == 1);
  CoxeterSymbol b2a2(std::vector<std::string>{"1", "2", "3", "4"});
  b2a2.set_edge(0, 1, 4);
  b2a2.set_edge(2, 3, 3);
  auto comps = connected_components(b2a2);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 2);
  CHECK(comps[1].size() == 2);
}

TEST_CASE("finite type recognition") {
  // B5 order against the signed-permutation group built by hand.
  std::vector<oracle::Perm> gens;
  for (int i = 0; i < 4; ++i) {
    oracle::Perm p{1, 2, 3, 4, 5};
    std::swap(p[i], p[i + 1]);
    gens.push_back(p);
  }
  gens.push_back({1, 2, 3, 4, -5});
  const auto b5_size = oracle::perm_group(gens).size();

  auto t = classify_finite_type(path({3, 3, 3, 4}));
  REQUIRE(t);
  REQUIRE(t->size() == 1);
  CHECK((*t)[0].family == Family::B);
  CHECK((*t)[0].order == BigInt(b5_size));
  CHECK(b5_size == 3840);

  CHECK_FALSE(classify_finite_type(path({4, 3, 3, 4})));
  CHECK(finite_order(path({})) == 2);

  CoxeterSymbol a2a1(std::vector<std::string>{"1", "2", "3"});
  a2a1.set_edge(0, 1, 3);
  CHECK(finite_order(a2a1) == 12);

  // E6 against closure of its reflection matrices.
  auto e6 = weyl_data("E6");
  std::vector<IntMatrix> refl;
  for (int s = 0; s < 6; ++s) refl.push_back(reflection_matrix(e6, s).matrix());
  CHECK(oracle::matrix_group(refl, 100000).size() == 51840);
  CHECK(finite_order(e6.symbol()) == 51840);
  // Product of (m_i + 1) over the exponents 1, 7, 11, 13, 17, 19, 23, 29.
  CHECK(finite_order(weyl_data("E8").symbol()) == BigInt(2 * 8 * 12 * 14 * 18 * 20 * 24 * 30));

  CHECK(classify_finite_type(path({5, 3}))->front().family == Family::H3);
  CHECK(classify_finite_type(path({5, 3, 3}))->front().family == Family::H4);
  CHECK(classify_finite_type(path({7}))->front().dihedral_m == 7);
  CHECK(classify_finite_type(path({3, 4, 3}))->front().family == Family::F4);
  CHECK(classify_finite_type(path({6}))->front().family == Family::G2);
}

TEST_CASE("recognition is invariant under relabelling") {
  std::mt19937 rng(7);
  std::vector<CoxeterSymbol> samples;
  for (auto [f, n] : oracle::weyl_types(7, 7)) samples.push_back(oracle::weyl(f, n).symbol());
  samples.push_back(path({5, 3, 3}));
  for (const auto& g : samples) {
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      auto h = relabel(g, perm);
      CHECK(type_names(classify_finite_type(h)) == type_names(classify_finite_type(g)));
      CHECK(finite_order(h) == finite_order(g));
    }
  }
}

TEST_CASE("Euler characteristic") {
  CHECK(euler_characteristic(path({})) == Rational(1, 2));
  CHECK(euler_characteristic(path({kInfinity})) == 0);
  // For a finite group the alternating sum collapses to 1/|W|.
  for (auto [f, n] : oracle::weyl_types(6, 6)) {
    auto g = oracle::weyl(f, n).symbol();
    CHECK(euler_characteristic(g) * Rational(finite_order(g)) == 1);
  }
  CHECK(euler_characteristic(path({5, 3, 3})) * 14400 == 1);
  // Affine groups have vanishing Euler characteristic.
  CHECK(euler_characteristic(path({4, 3, 3, 4})) == 0);
  // The 4-dimensional simplex group: chi = covolume / kappa, from the closed
  // forms (2^2 - 1)/4! * |B2 B4| pi^2 and 2^4 * 2!/4! * pi^2.
  CoxeterSymbol v4 = weyl_data("A4").symbol();
  int t = v4.add_node("t");
  v4.set_edge(1, t, 4);
  Rational covol = Rational(3, 24) * Rational(1, 6) * Rational(1, 30);
  Rational kappa4 = Rational(16 * 2, 24);
  CHECK(euler_characteristic(v4) == covol / kappa4);
  CHECK(euler_characteristic(v4) == Rational(1, 1920));
}

TEST_CASE("cosine matrix and signature") {
  auto a2 = bilinear_gram(path({3}));
  CHECK(a2[0][0] == doctest::Approx(1.0));
  CHECK(a2[0][1] == doctest::Approx(-0.5));
  auto b2 = bilinear_gram(path({4}));
  CHECK(b2[0][1] == doctest::Approx(-std::sqrt(2.0) / 2));
  auto at1 = bilinear_gram(path({kInfinity}), -1.0);
  CHECK(at1[0][1] == doctest::Approx(-1.0));
  CHECK_THROWS_AS(bilinear_gram(path({kInfinity}), -0.5), InputError);

  CHECK(signature(path({3})) == Signature{2, 0, 0});
  CHECK(signature(path({kInfinity}), -1.0) == Signature{1, 0, 1});
  CoxeterSymbol v4 = weyl_data("A4").symbol();
  int t = v4.add_node("t");
  v4.set_edge(1, t, 4);
  CHECK(signature(v4) == Signature{4, 1, 0});
}

TEST_CASE("positive definite exactly when finite") {
  std::mt19937 rng(11);
  const int labels[] = {2, 2, 2, 3, 3, 4, 5, 6, kInfinity};
  std::uniform_int_distribution<int> pick(0, 8), size(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = size(rng);
    CoxeterSymbol g;
    for (int i = 0; i < n; ++i) g.add_node("n" + std::to_string(i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.set_edge(i, j, labels[pick(rng)]);
    Signature s = signature(g);
    CHECK(s.positive + s.negative + s.zero == n);
    CHECK((s.positive == n) == classify_finite_type(g).has_value());
  }
}

TEST_CASE("parity character") {
  CoxeterSymbol b3 = path({3, 4});
  std::vector<int> w_b3{0, 1, 2, 1, 0, 1, 2, 1, 2};
  CHECK(parity_character(b3, 2, w_b3) == 1);
  CHECK_THROWS_AS(parity_character(b3, 1, w_b3), InputError);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto u = oracle::random_word(rng, 3, 20), v = oracle::random_word(rng, 3, 20);
    auto uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(parity_character(b3, 2, uv) == (parity_character(b3, 2, u) + parity_character(b3, 2, v)) % 2);
  }
}

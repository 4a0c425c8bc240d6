#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "symdis/cube.hpp"

using namespace symdis;

TEST_CASE("binomial basics") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(52, 5) == 2598960);
  CHECK(binomial(40, 20) == Integer("137846528820"));
}

TEST_CASE("BitVec round trips and weight") {
  BitVec v = BitVec::from_string("01101");
  CHECK(v.n() == 5);
  CHECK(v.weight() == 3);
  CHECK(v.get(2));
  CHECK_FALSE(v.get(1));
  CHECK(v.str() == "01101");
  v.set(1, true);
  CHECK(v.weight() == 4);
  CHECK_THROWS(v.get(6));
  CHECK_THROWS(BitVec::from_string("01x"));
}

TEST_CASE("Disjunction evaluation against truth table") {
  Disjunction c(4, {1}, {3});  // x1 or (not x3)
  for (uint64_t bits = 0; bits < 16; ++bits) {
    BitVec x(4, bits);
    bool expect = x.get(1) || !x.get(3);
    CHECK(c.eval(x) == expect);
  }
  Disjunction empty(3, {}, {});
  CHECK_FALSE(empty.eval(BitVec(3, 5)));
}

TEST_CASE("Disjunction validation") {
  CHECK_THROWS(Disjunction(4, {1, 2}, {2}));   // overlap
  CHECK_THROWS(Disjunction(4, {0}, {}));       // out of range
  CHECK_THROWS(Disjunction(4, {5}, {}));
  CHECK_THROWS(Disjunction(4, {1, 1}, {}));    // duplicate
  CHECK(Disjunction::monotone(5, 3).pos == std::vector<int>{1, 2, 3});
  CHECK_THROWS(Disjunction::monotone(5, 6));
}

TEST_CASE("WeightProfile validation and density") {
  CHECK_THROWS(WeightProfile(2, {Rational(1), Rational(1), Rational(1)}));
  CHECK_THROWS(WeightProfile(2, {Rational(1)}));
  CHECK_THROWS(
      WeightProfile(1, {Rational(3, 2), Rational(-1, 2)}));  // negative

  WeightProfile u = WeightProfile::uniform(4);
  Rational total = 0;
  for (uint64_t bits = 0; bits < 16; ++bits)
    total += u.density(BitVec(4, bits));
  CHECK(total == 1);
  CHECK(u.density(BitVec(4, 0b0011)) == Rational(1, 16));

  WeightProfile layer = WeightProfile::layer(4, 2);
  CHECK(layer.density(BitVec(4, 0b0011)) == Rational(1, 6));
  CHECK(layer.density(BitVec(4, 0b0111)) == 0);
}

TEST_CASE("ProductDistribution density and pr_all_zero") {
  ProductDistribution d(3, {Rational(1, 3), Rational(1, 2), Rational(1)});
  Rational total = 0;
  for (uint64_t bits = 0; bits < 8; ++bits) total += d.density(BitVec(3, bits));
  CHECK(total == 1);
  CHECK(d.pr_all_zero() == 0);
  ProductDistribution d2(2, {Rational(1, 3), Rational(1, 4)});
  CHECK(d2.pr_all_zero() == Rational(1, 2));
  CHECK_THROWS(ProductDistribution(2, {Rational(2), Rational(0)}));
}

// Independent enumeration oracle for the joint block weight distribution.
static std::vector<std::vector<Rational>> block_pmf_oracle(int n, int r,
                                                           int k1, int k2) {
  std::vector<std::vector<Rational>> pmf(k1 + 1,
                                         std::vector<Rational>(k2 + 1, 0));
  long count = 0;
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    BitVec x(n, bits);
    if (x.weight() != r) continue;
    ++count;
    int a = 0, b = 0;
    for (int i = 1; i <= k1; ++i) a += x.get(i);
    for (int i = k1 + 1; i <= k1 + k2; ++i) b += x.get(i);
    pmf[a][b] += 1;
  }
  for (auto& row : pmf)
    for (auto& p : row) p /= count;
  return pmf;
}

TEST_CASE("layer_block_pmf matches hand values and enumeration") {
  // n=4, r=2, first block of size 2: hypergeometric (1/6, 4/6, 1/6).
  auto pmf = layer_block_pmf(4, 2, 2, 0);
  CHECK(pmf[0][0] == Rational(1, 6));
  CHECK(pmf[1][0] == Rational(2, 3));
  CHECK(pmf[2][0] == Rational(1, 6));

  for (int n = 1; n <= 8; ++n)
    for (int r = 0; r <= n; ++r)
      for (int k1 = 0; k1 <= n; ++k1)
        for (int k2 = 0; k1 + k2 <= n; k2 += 2) {
          auto got = layer_block_pmf(n, r, k1, k2);
          auto want = block_pmf_oracle(n, r, k1, k2);
          CHECK(got == want);
        }

  CHECK_THROWS(layer_block_pmf(4, 5, 1, 1));
  CHECK_THROWS(layer_block_pmf(4, 2, 3, 2));
}

TEST_CASE("product_weight_pmf examples and enumeration") {
  auto pmf = product_weight_pmf({Rational(1, 3), Rational(1, 2)});
  CHECK(pmf == std::vector<Rational>{Rational(1, 3), Rational(1, 2),
                                     Rational(1, 6)});

  std::vector<Rational> mu{Rational(1, 7), Rational(2, 3), Rational(0),
                           Rational(9, 10), Rational(1, 2)};
  auto got = product_weight_pmf(mu);
  ProductDistribution d(5, mu);
  std::vector<Rational> want(6, Rational(0));
  for (uint64_t bits = 0; bits < 32; ++bits) {
    BitVec x(5, bits);
    want[x.weight()] += d.density(x);
  }
  CHECK(got == want);
}

TEST_CASE("exact error functionals") {
  WeightProfile u = WeightProfile::uniform(2);
  Disjunction c = Disjunction::monotone(2, 2);
  CubeFn f = [&](const BitVec& x) { return Rational(c.eval(x) ? 1 : 0); };
  CubeFn one = [](const BitVec&) { return Rational(1); };
  CHECK(exact_l1_error(f, one, u) == Rational(1, 4));
  CHECK(exact_l2sq_error(f, one, u) == Rational(1, 4));
  CubeFn half = [](const BitVec&) { return Rational(1, 2); };
  CHECK(exact_l1_error(f, half, u) == Rational(1, 2));
  CHECK(exact_l2sq_error(f, half, u) == Rational(1, 4));

  // The enumeration cap guards 2^n blowup and is overridable.
  WeightProfile big = WeightProfile::layer(22, 3);
  CHECK_THROWS_AS(exact_l1_error(f, one, CubeDistribution(big)),
                  std::length_error);
  WeightProfile small = WeightProfile::layer(4, 1);
  CHECK(exact_l1_error(one, one, CubeDistribution(small), 4) == 0);
}

TEST_CASE("sampling a weight profile") {
  WeightProfile layer = WeightProfile::layer(6, 3);
  auto xs = sample(CubeDistribution(layer), 42, 500);
  REQUIRE(xs.size() == 500);
  for (const auto& x : xs) CHECK(x.weight() == 3);
  // Every weight-3 point of n=6 should appear in 500 draws.
  std::set<uint64_t> seen;
  for (const auto& x : xs) seen.insert(x.raw());
  CHECK(seen.size() == 20);

  auto again = sample(CubeDistribution(layer), 42, 500);
  CHECK(xs == again);
  auto other = sample(CubeDistribution(layer), 43, 500);
  CHECK(xs != other);

  // Mixed-layer profile: empirical layer counts match the profile roughly.
  WeightProfile mix(3, {Rational(1, 2), Rational(0), Rational(0),
                        Rational(1, 2)});
  auto ys = sample(CubeDistribution(mix), 7, 400);
  long w0 = 0, w3 = 0;
  for (const auto& y : ys) {
    if (y.weight() == 0) ++w0;
    if (y.weight() == 3) ++w3;
  }
  CHECK(w0 + w3 == 400);
  CHECK(w0 > 120);
  CHECK(w3 > 120);
}

TEST_CASE("sampling a product distribution") {
  ProductDistribution d(3, {Rational(1), Rational(0), Rational(1, 2)});
  auto xs = sample(CubeDistribution(d), 9, 200);
  int ones3 = 0;
  for (const auto& x : xs) {
    CHECK(x.get(1));
    CHECK_FALSE(x.get(2));
    ones3 += x.get(3);
  }
  CHECK(ones3 > 50);
  CHECK(ones3 < 150);
}

TEST_CASE("distribution JSON round trip") {
  WeightProfile u = WeightProfile::uniform(3);
  auto j = distribution_to_json(CubeDistribution(u));
  CHECK(j["kind"] == "symmetric");
  CHECK(j["n"] == 3);
  CHECK(j["values"].size() == 4);
  auto back = distribution_from_json(j);
  CHECK(std::get<WeightProfile>(back).rho == u.rho);

  ProductDistribution p(2, {Rational(1, 3), Rational(2, 5)});
  auto jp = distribution_to_json(CubeDistribution(p));
  auto backp = distribution_from_json(jp);
  CHECK(std::get<ProductDistribution>(backp).mu == p.mu);

  nlohmann::json bad = {{"kind", "gaussian"}, {"n", 2}, {"values", {"1/2"}}};
  CHECK_THROWS(distribution_from_json(bad));
  nlohmann::json short_vals = {{"kind", "symmetric"},
                               {"n", 2},
                               {"values", {"1/2", "1/2"}}};
  CHECK_THROWS(distribution_from_json(short_vals));
}

TEST_CASE("rational string helpers") {
  CHECK(rational_from_string("3/4") == Rational(3, 4));
  CHECK(rational_from_string("-6/8") == Rational(-3, 4));
  CHECK(rational_from_string("7") == 7);
  CHECK(rational_from_string("0.25") == Rational(1, 4));
  CHECK(rational_from_string("-1.5") == Rational(-3, 2));
  CHECK_THROWS(rational_from_string(""));
  CHECK_THROWS(rational_from_string("1/0"));
  CHECK_THROWS(rational_from_string("a/b"));
  CHECK_THROWS(rational_from_string("1.2.3"));
  CHECK(to_fraction_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_fraction_string(Rational(5)) == "5/1");
  CHECK(to_decimal_string(Rational(1, 4)) == "0.25");
  CHECK(to_decimal_string(Rational(0)) == "0");
  CHECK(to_decimal_string(Rational(1, 3)) == "0.333333333333");
  CHECK(pow_rational(Rational(2, 3), 3) == Rational(8, 27));
}

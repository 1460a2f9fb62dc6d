#include "doctest.h"

#include "oracles.hpp"
#include "wciforge/series.hpp"

#include <random>

using namespace wciforge;

namespace {

SeriesPrefix ints(std::initializer_list<long> values) {
  SeriesPrefix out;
  for (auto v : values) {
    out.emplace_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("monomial_count examples") {
  const std::vector<std::int64_t> p1{1, 1};
  const std::vector<std::int64_t> w{1, 1, 2, 3};
  CHECK(monomial_count(p1, 5) == 6);
  CHECK(monomial_count(w, 3) == 7);
  CHECK(monomial_count(w, 0) == 1);
  CHECK(monomial_count(w, -1) == 0);
}

TEST_CASE("monomial_count agrees with explicit enumeration") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> entry(1, 6);
  std::uniform_int_distribution<int> length(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(length(rng)));
    for (auto& a : w) {
      a = entry(rng);
    }
    for (std::int64_t m = 0; m <= 15; ++m) {
      CHECK(monomial_count(w, m) == oracle::brute_monomial_count(w, m));
    }
  }
}

TEST_CASE("expand examples") {
  CHECK(expand({{}, {1, 1}}, 3) == ints({1, 2, 3, 4}));
  CHECK(expand({{4}, {1, 1, 1, 1}}, 5) == ints({1, 4, 10, 20, 34, 52}));
  CHECK(expand({{6}, {1, 1, 2, 3}}, 6) == ints({1, 2, 4, 7, 11, 16, 22}));
  // exponents past the truncation order leave the prefix alone
  CHECK(expand({{50}, {1}}, 3) == ints({1, 1, 1, 1}));
  CHECK(expand({{}, {}}, 2) == ints({1, 0, 0}));
}

TEST_CASE("signature examples") {
  CHECK(signature({{2}, {1}}) == CyclotomicSignature{{2, 1}});
  CHECK(signature({{4}, {1, 1, 1, 1}}) == CyclotomicSignature{{1, -3}, {2, 1}, {4, 1}});
  CHECK(signature({{}, {}}).empty());
}

TEST_CASE("ratios_equal examples") {
  // (1-t^2)/((1-t)^2(1-t^2)) reduces to 1/(1-t)^2; the expansions agree.
  const ProductRatio a{{2}, {1, 1, 2}};
  const ProductRatio b{{}, {1, 1}};
  CHECK(expand(a, cross_degree_bound(a, b)) == expand(b, cross_degree_bound(a, b)));
  CHECK(ratios_equal(a, b));

  CHECK(ratios_equal({{2, 4}, {1, 1, 1, 1, 2}}, {{4}, {1, 1, 1, 1}}));
  CHECK_FALSE(ratios_equal({{4}, {1, 1, 1, 1}}, {{6}, {1, 1, 1, 3}}));
  const ProductRatio r{{6, 6}, {1, 2, 3, 3, 5}};
  CHECK(ratios_equal(r, r));
}

TEST_CASE("FactorList rejects non-positive exponents") {
  CHECK_THROWS_AS(FactorList({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(FactorList({-2}), std::invalid_argument);
}

TEST_CASE("property: expansion matches the alternating monomial-count sum") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const auto p = oracle::random_presentation(rng, 6, 9);
    const ProductRatio r{FactorList(p.degrees()), FactorList(p.weights())};
    const auto direct = expand(r, 30);
    REQUIRE(direct[0] == 1);
    CHECK(direct == oracle::inclusion_exclusion(r, 30));
  }
}

TEST_CASE("property: monomial_count is the coefficient of 1/prod(1-t^a)") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = oracle::random_presentation(rng, 5, 7);
    const auto series = expand({{}, FactorList(p.weights())}, 25);
    for (std::int64_t m = 0; m <= 25; ++m) {
      CHECK(monomial_count(p.weights(), m) == series[static_cast<std::size_t>(m)]);
    }
  }
}

TEST_CASE("property: signature equality iff expansions agree up to the bound") {
  std::mt19937_64 rng(99);
  int equal_pairs = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto p = oracle::random_presentation(rng, 4, 8);
    const ProductRatio lhs{FactorList(p.degrees()), FactorList(p.weights())};
    ProductRatio rhs;
    switch (trial % 3) {
      case 0: {  // shared binomial factor on both sides
        const auto q = oracle::inflate(p, rng, 1 + trial % 2, 8);
        rhs = {FactorList(q.degrees()), FactorList(q.weights())};
        break;
      }
      case 1: {  // same ratio shifted by Phi_e via (1-t^{2m})/(1-t^m) pairs
        auto num = std::vector<std::int64_t>(p.degrees().begin(), p.degrees().end());
        auto den = std::vector<std::int64_t>(p.weights().begin(), p.weights().end());
        num.push_back(4);
        den.push_back(2);
        rhs = {FactorList(num), FactorList(den)};
        break;
      }
      default: {
        const auto q = oracle::random_presentation(rng, 4, 8);
        rhs = {FactorList(q.degrees()), FactorList(q.weights())};
        break;
      }
    }
    const auto bound = cross_degree_bound(lhs, rhs);
    const bool by_prefix = expand(lhs, bound) == expand(rhs, bound);
    const bool by_signature = ratios_equal(lhs, rhs);
    CHECK(by_prefix == by_signature);
    equal_pairs += by_signature ? 1 : 0;
  }
  CHECK(equal_pairs >= 40);
}

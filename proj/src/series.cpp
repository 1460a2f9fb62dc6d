#include "wciforge/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wciforge {

FactorList::FactorList(std::vector<std::int64_t> exponents) : exponents_(std::move(exponents)) {
  for (auto m : exponents_) {
    if (m < 1) {
      throw std::invalid_argument("binomial exponent must be positive, got " + std::to_string(m));
    }
  }
  std::sort(exponents_.begin(), exponents_.end());
}

FactorList::FactorList(std::initializer_list<std::int64_t> exponents)
    : FactorList(std::vector<std::int64_t>(exponents)) {}

std::int64_t FactorList::total() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::int64_t{0});
}

BigInt monomial_count(std::span<const std::int64_t> weights, std::int64_t m) {
  if (m < 0) {
    return 0;
  }
  const auto size = static_cast<std::size_t>(m) + 1;
  std::vector<BigInt> ways(size);
  ways[0] = 1;
  // Coin-change counting: after processing a weight, ways[s] counts vectors
  // over the weights seen so far.
  for (auto a : weights) {
    const auto step = static_cast<std::size_t>(a);
    for (std::size_t s = step; s < size; ++s) {
      ways[s] += ways[s - step];
    }
  }
  return ways.back();
}

SeriesPrefix expand(const ProductRatio& r, std::int64_t max_order) {
  if (max_order < 0) {
    return {};
  }
  const auto size = static_cast<std::size_t>(max_order) + 1;
  SeriesPrefix c(size);
  c[0] = 1;
  // Each factor touches O(M) coefficients; exponents beyond M are no-ops.
  for (auto a : r.denominator.exponents()) {
    const auto step = static_cast<std::size_t>(a);
    for (std::size_t s = step; s < size; ++s) {
      c[s] += c[s - step];
    }
  }
  for (auto d : r.numerator.exponents()) {
    const auto step = static_cast<std::size_t>(d);
    if (step >= size) {
      continue;
    }
    for (std::size_t s = size - 1; s >= step; --s) {
      c[s] -= c[s - step];
    }
  }
  return c;
}

namespace {

void add_divisors(CyclotomicSignature& sig, std::int64_t m, std::int64_t sign) {
  for (std::int64_t e = 1; e * e <= m; ++e) {
    if (m % e != 0) {
      continue;
    }
    sig[e] += sign;
    if (e * e != m) {
      sig[m / e] += sign;
    }
  }
}

}  // namespace

CyclotomicSignature signature(const ProductRatio& r) {
  CyclotomicSignature sig;
  for (auto m : r.numerator.exponents()) {
    add_divisors(sig, m, +1);
  }
  for (auto m : r.denominator.exponents()) {
    add_divisors(sig, m, -1);
  }
  std::erase_if(sig, [](const auto& entry) { return entry.second == 0; });
  return sig;
}

bool ratios_equal(const ProductRatio& lhs, const ProductRatio& rhs) {
  return signature(lhs) == signature(rhs);
}

std::int64_t cross_degree_bound(const ProductRatio& lhs, const ProductRatio& rhs) {
  return lhs.numerator.total() + lhs.denominator.total() + rhs.numerator.total() +
         rhs.denominator.total();
}

}  // namespace wciforge

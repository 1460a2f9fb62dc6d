#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

namespace wciforge {

using BigInt = boost::multiprecision::cpp_int;

/// Multiset of binomial exponents; each entry m stands for one factor (1 - t^m).
/// Kept sorted ascending. An empty list is the constant 1.
class FactorList {
 public:
  FactorList() = default;
  explicit FactorList(std::vector<std::int64_t> exponents);
  FactorList(std::initializer_list<std::int64_t> exponents);

  std::span<const std::int64_t> exponents() const { return exponents_; }
  std::size_t size() const { return exponents_.size(); }
  bool empty() const { return exponents_.empty(); }
  std::int64_t total() const;

  friend bool operator==(const FactorList&, const FactorList&) = default;

 private:
  std::vector<std::int64_t> exponents_;
};

/// prod(1 - t^numerator) / prod(1 - t^denominator).
struct ProductRatio {
  FactorList numerator;
  FactorList denominator;

  friend bool operator==(const ProductRatio&, const ProductRatio&) = default;
};

/// Signed multiplicity of each cyclotomic factor Phi_e in a ProductRatio.
/// Zero entries are never stored, so map equality is rational-function equality.
using CyclotomicSignature = std::map<std::int64_t, std::int64_t>;

/// Coefficients 0..M of a power series.
using SeriesPrefix = std::vector<BigInt>;

/// Number of exponent vectors (m_0..m_N) with sum m_i * weights[i] == m.
BigInt monomial_count(std::span<const std::int64_t> weights, std::int64_t m);

/// Exact expansion of r up to and including t^max_order.
SeriesPrefix expand(const ProductRatio& r, std::int64_t max_order);

CyclotomicSignature signature(const ProductRatio& r);

/// Equality as rational functions in t, decided on signatures.
bool ratios_equal(const ProductRatio& lhs, const ProductRatio& rhs);

/// Degree bound B after cross-multiplying lhs and rhs: agreement of the two
/// expansions up to t^B forces equality.
std::int64_t cross_degree_bound(const ProductRatio& lhs, const ProductRatio& rhs);

}  // namespace wciforge

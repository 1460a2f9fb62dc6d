#pragma once

// Independent reference computations used only by tests.

#include "wciforge/enumerate.hpp"
#include "wciforge/geometry.hpp"
#include "wciforge/presentation.hpp"
#include "wciforge/series.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace wciforge::oracle {

/// Counts exponent vectors with weighted sum m by explicit enumeration.
inline std::int64_t brute_monomial_count(const std::vector<std::int64_t>& weights,
                                         std::int64_t m) {
  std::function<std::int64_t(std::size_t, std::int64_t)> count = [&](std::size_t i,
                                                                     std::int64_t rest) {
    if (i == weights.size()) {
      return std::int64_t{rest == 0 ? 1 : 0};
    }
    std::int64_t total = 0;
    for (std::int64_t e = 0; e * weights[i] <= rest; ++e) {
      total += count(i + 1, rest - e * weights[i]);
    }
    return total;
  };
  return count(0, m);
}

/// Koszul alternating sum: coefficient m of prod(1-t^d)/prod(1-t^a) is the
/// signed sum over subsets T of the degrees of monomial_count(m - sum T).
inline SeriesPrefix inclusion_exclusion(const ProductRatio& r, std::int64_t max_order) {
  const auto degrees = r.numerator.exponents();
  const auto weights = r.denominator.exponents();
  SeriesPrefix out(static_cast<std::size_t>(max_order) + 1);
  const std::size_t subsets = std::size_t{1} << degrees.size();
  for (std::int64_t m = 0; m <= max_order; ++m) {
    BigInt total = 0;
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      std::int64_t shift = 0;
      int parity = 0;
      for (std::size_t j = 0; j < degrees.size(); ++j) {
        if ((mask >> j) & 1U) {
          shift += degrees[j];
          parity ^= 1;
        }
      }
      const BigInt term = monomial_count(weights, m - shift);
      total += parity ? BigInt(-term) : term;
    }
    out[static_cast<std::size_t>(m)] = total;
  }
  return out;
}

/// Direct search over every sorted weight and degree vector inside caps,
/// judged with the public predicates and no pruning.
inline EnumerationResult naive_enumerate(int n, std::int64_t i_target, const SearchCaps& caps) {
  EnumerationResult result{{}, {}, caps, {}};
  for (int k = 0; k <= caps.max_codim; ++k) {
    const int length = n + k + 1;
    std::vector<std::int64_t> w(static_cast<std::size_t>(length));
    std::vector<std::int64_t> d(static_cast<std::size_t>(k));
    std::function<void(int, std::int64_t, std::int64_t)> degrees =
        [&](int pos, std::int64_t lo, std::int64_t rest) {
          if (pos == k) {
            if (rest != 0) {
              return;
            }
            const auto p = Presentation::normalize(w, d);
            if (!linear_cone_pairs(p).empty() || !well_formed_general(p)) {
              return;
            }
            const auto s = smooth_general(p);
            if (s == TriState::True) {
              result.found.push_back(p);
            } else if (s == TriState::Unknown) {
              result.undecided.push_back(p);
            }
            return;
          }
          for (std::int64_t v = lo; v <= caps.max_degree && v <= rest; ++v) {
            d[static_cast<std::size_t>(pos)] = v;
            degrees(pos + 1, v, rest - v);
          }
        };
    std::function<void(int, std::int64_t, std::int64_t)> weights = [&](int pos, std::int64_t lo,
                                                                        std::int64_t sum) {
      if (pos == length) {
        degrees(0, 1, sum - i_target);
        return;
      }
      for (std::int64_t v = lo; v <= caps.max_weight; ++v) {
        w[static_cast<std::size_t>(pos)] = v;
        weights(pos + 1, v, sum + v);
      }
    };
    weights(0, 1, 0);
  }
  std::sort(result.found.begin(), result.found.end(), search_order);
  std::sort(result.undecided.begin(), result.undecided.end(), search_order);
  return result;
}

/// Quasi-smoothness of a general hypersurface of degree d, checked over every
/// nonempty subset I of variables with no pruning: either a monomial in I has
/// degree d, or |I| distinct variables e outside I have d - a_e reachable in I.
inline bool hypersurface_subset_criterion(const std::vector<std::int64_t>& weights,
                                          std::int64_t d) {
  const std::size_t count = weights.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
    std::vector<std::int64_t> inside;
    for (std::size_t j = 0; j < count; ++j) {
      if ((mask >> j) & 1U) {
        inside.push_back(weights[j]);
      }
    }
    if (monomial_count(inside, d) > 0) {
      continue;
    }
    std::size_t witnesses = 0;
    for (std::size_t e = 0; e < count; ++e) {
      if (!((mask >> e) & 1U) && monomial_count(inside, d - weights[e]) > 0) {
        ++witnesses;
      }
    }
    if (witnesses < inside.size()) {
      return false;
    }
  }
  return true;
}

/// Rank-drop obstruction to quasi-smoothness over every nonempty coordinate
/// subset I and every nonempty set S of unattained equations, unpruned:
/// |I| - |J| - max(0, c_S - |S| + 1) >= 1.
inline bool jacobian_obstruction(const std::vector<std::int64_t>& weights,
                                 const std::vector<std::int64_t>& degrees) {
  const std::size_t count = weights.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
    std::vector<std::int64_t> inside;
    for (std::size_t j = 0; j < count; ++j) {
      if ((mask >> j) & 1U) {
        inside.push_back(weights[j]);
      }
    }
    std::vector<std::int64_t> rest;
    for (auto d : degrees) {
      if (monomial_count(inside, d) == 0) {
        rest.push_back(d);
      }
    }
    const int attained = static_cast<int>(degrees.size() - rest.size());
    for (std::size_t rows = 1; rows < (std::size_t{1} << rest.size()); ++rows) {
      int columns = 0;
      for (std::size_t e = 0; e < count; ++e) {
        if ((mask >> e) & 1U) {
          continue;
        }
        for (std::size_t j = 0; j < rest.size(); ++j) {
          if (((rows >> j) & 1U) && rest[j] > weights[e] &&
              monomial_count(inside, rest[j] - weights[e]) > 0) {
            ++columns;
            break;
          }
        }
      }
      const int chosen = std::popcount(rows);
      if (static_cast<int>(inside.size()) - attained - std::max(0, columns - chosen + 1) >= 1) {
        return true;
      }
    }
  }
  return false;
}

/// Random presentation with N <= max_ambient and entries <= max_entry.
inline Presentation random_presentation(std::mt19937_64& rng, int max_ambient,
                                        std::int64_t max_entry) {
  std::uniform_int_distribution<int> ambient(1, max_ambient);
  std::uniform_int_distribution<std::int64_t> entry(1, max_entry);
  const int big_n = ambient(rng);
  std::uniform_int_distribution<int> codim(0, big_n - 1);
  const int k = codim(rng);
  std::vector<std::int64_t> w, d;
  for (int i = 0; i <= big_n; ++i) {
    w.push_back(entry(rng));
  }
  for (int j = 0; j < k; ++j) {
    d.push_back(entry(rng));
  }
  return Presentation::normalize(w, d);
}

/// Adds `count` random linear-cone pairs (value v as both weight and degree).
inline Presentation inflate(const Presentation& p, std::mt19937_64& rng, int count,
                            std::int64_t max_entry) {
  std::uniform_int_distribution<std::int64_t> entry(1, max_entry);
  auto w = p.weights();
  auto d = p.degrees();
  for (int c = 0; c < count; ++c) {
    const auto v = entry(rng);
    w.push_back(v);
    d.push_back(v);
  }
  return Presentation::normalize(w, d);
}

}  // namespace wciforge::oracle

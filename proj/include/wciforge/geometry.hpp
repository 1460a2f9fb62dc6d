#pragma once

#include "wciforge/presentation.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace wciforge {

enum class TriState { True, False, Unknown };

/// False absorbs, then Unknown, then True.
TriState combine(TriState lhs, TriState rhs);
TriState lift(bool value);
const char* to_string(TriState value);

/// Intersection of a general member with the locus of P where only the
/// coordinates whose weight is divisible by `prime` are non-zero.
struct StratumReport {
  std::int64_t prime;
  int divisible_weights;   // m_p
  int attainable_degrees;  // degrees in the semigroup of the p-divisible weights
  int general_dimension;   // m_p - 1 - attainable; negative means empty

  friend bool operator==(const StratumReport&, const StratumReport&) = default;
};

/// Which rule settled quasi_smooth_general.
enum class QuasiSmoothTier { Ambient, UnitWeights, Hypersurface, Multidegree };

struct QuasiSmoothness {
  QuasiSmoothTier tier;
  TriState value;
};

const char* to_string(QuasiSmoothTier tier);

/// Whether d is a non-negative integer combination of the generators.
bool semigroup_member(std::int64_t d, std::span<const std::int64_t> generators);

/// Every N of the N+1 weights have gcd 1.
bool ambient_well_formed(std::span<const std::int64_t> weights);

/// One report per prime dividing at least one weight, ascending by prime.
std::vector<StratumReport> stratum_reports(const Presentation& p);

bool well_formed_general(const Presentation& p);
bool avoids_singular_locus(const Presentation& p);

/// Tiered test on the canonical form of p: codimension 0 and unit weights are
/// decided outright, hypersurfaces by the subset criterion. In codimension
/// >= 2 only a necessary condition is checked: False when it fails, else
/// Unknown.
QuasiSmoothness quasi_smooth_details(const Presentation& p);
TriState quasi_smooth_general(const Presentation& p);

/// Combines quasi-smoothness, well-formedness and avoidance of Sing P, all
/// evaluated on the canonical form of p.
TriState smooth_general(const Presentation& p);

}  // namespace wciforge

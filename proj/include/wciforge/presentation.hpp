#pragma once

#include "wciforge/series.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wciforge {

/// Rejected user input: bad entries, wrong lengths, malformed documents.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A derived fact contradicts a guaranteed one (e.g. a classification that
/// should be forced by the index is not met). Indicates a bug or bad input
/// that slipped past validation.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Weighted complete intersection family in P(weights) cut out by equations
/// of the given degrees. Both lists are sorted ascending; there are N+1
/// weights and k < N+1 degrees, so the dimension N - k is at least 1.
class Presentation {
 public:
  /// Sorts both lists. Throws InputError on non-positive entries, on fewer
  /// than two weights, or when the degrees leave no positive dimension.
  static Presentation normalize(std::vector<std::int64_t> weights,
                                std::vector<std::int64_t> degrees = {});

  const std::vector<std::int64_t>& weights() const { return weights_; }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }

  int ambient_dim() const { return static_cast<int>(weights_.size()) - 1; }
  int codim() const { return static_cast<int>(degrees_.size()); }
  int dim() const { return ambient_dim() - codim(); }

  friend bool operator==(const Presentation&, const Presentation&) = default;
  friend auto operator<=>(const Presentation&, const Presentation&) = default;

 private:
  Presentation(std::vector<std::int64_t> weights, std::vector<std::int64_t> degrees)
      : weights_(std::move(weights)), degrees_(std::move(degrees)) {}

  std::vector<std::int64_t> weights_;
  std::vector<std::int64_t> degrees_;
};

enum class VarietyKind { Fano, CalabiYau, GeneralType };

struct InvariantsRecord {
  int ambient_dim;  // N
  int codim;        // k
  int dim;          // n = N - k
  std::int64_t index;             // sum of weights minus sum of degrees
  std::int64_t canonical_degree;  // omega_X = O_X(canonical_degree)
  VarietyKind kind;
};

InvariantsRecord invariants(const Presentation& p);

/// Values occurring among both weights and degrees, with multiplicity
/// min(count in weights, count in degrees), ascending.
std::vector<std::int64_t> linear_cone_pairs(const Presentation& p);

/// Cancels matched weight/degree pairs (smallest value first) until none remain.
Presentation canonical_form(const Presentation& p);

ProductRatio poincare(const Presentation& p);

/// Coefficient of t^m in the Poincare series; 0 for m < 0. Not clamped, so a
/// presentation that no actual intersection realizes can give a negative value.
BigInt h0(const Presentation& p, std::int64_t m);

/// Presentation equivalence: equal canonical forms. Implies isomorphic general
/// members only for quasi-smooth well formed families of dimension >= 3; in
/// dimension 1 (elliptic curves, conic vs P^1) and for non-Fano surfaces it
/// does not, and for quasi-smooth del Pezzo surfaces no claim is made.
bool equivalent(const Presentation& lhs, const Presentation& rhs);

/// Adds a variable of weight 1; raises both the dimension and the index by one.
Presentation extend(const Presentation& p);

std::string to_inline(const Presentation& p);
const char* to_string(VarietyKind kind);

}  // namespace wciforge

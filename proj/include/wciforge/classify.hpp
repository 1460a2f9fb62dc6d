#pragma once

#include "wciforge/geometry.hpp"
#include "wciforge/presentation.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wciforge {

enum class IndexClassValue { ExceedsBound, ProjectiveSpace, Quadric, Coindex2Family, Generic };

/// Families of smooth cone-free WCIs of index n - 1 in dimension n >= 3.
enum class Coindex2Tag { Deg6In1n23, Deg4In1n12, Cubic, TwoQuadrics };

struct IndexClass {
  IndexClassValue value;
  std::optional<Coindex2Tag> family;

  friend bool operator==(const IndexClass&, const IndexClass&) = default;
};

enum class Outcome { Finite, InfiniteAut, NotCovered, Indeterminate };

enum class Branch {
  FlennerVanishing,
  LowCoindex,
  GeneralTypeCurve,
  ProjectiveSpace,
  Quadric,
  RationalCurve,
  CalabiYauSurface,
  EllipticCurve,
  SmoothnessUnknown,
  NotSmooth,
  IndexOutOfRange,
};

struct Verdict {
  Outcome outcome;
  Branch branch;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Raised when an operation's precondition on the presentation fails.
class ClassifyError : public std::domain_error {
 public:
  enum class Reason { NotFano, SmoothnessUnknown, NotSmooth, DimensionTooSmall };

  ClassifyError(Reason reason, const std::string& what)
      : std::domain_error(what), reason_(reason) {}

  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// The four coindex-2 families in dimension n, in tag order.
std::vector<std::pair<Coindex2Tag, Presentation>> coindex2_families(int n);

/// Fano index of the smooth general member; 2 for any smooth Fano curve.
std::int64_t fano_index(const Presentation& p);

IndexClass index_class(const Presentation& p);

/// Case table of the finiteness theorem for a family of dimension n and index
/// i whose general member has the given smoothness.
Verdict decide_verdict(int n, std::int64_t i, TriState smooth);

/// decide_verdict applied to the canonical form of p.
Verdict aut_verdict(const Presentation& p);

const char* to_string(IndexClassValue value);
const char* to_string(Coindex2Tag tag);
const char* to_string(Outcome outcome);
const char* to_string(Branch branch);
std::string to_string(const Verdict& verdict);

}  // namespace wciforge

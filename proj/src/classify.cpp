#include "wciforge/classify.hpp"

#include <utility>

namespace wciforge {

namespace {

std::vector<std::int64_t> ones(int count) {
  return std::vector<std::int64_t>(static_cast<std::size_t>(count), 1);
}

std::vector<std::int64_t> ones_then(int count, std::initializer_list<std::int64_t> tail) {
  auto w = ones(count);
  w.insert(w.end(), tail);
  return w;
}

void require_smooth(const Presentation& canonical, const char* operation) {
  switch (smooth_general(canonical)) {
    case TriState::True:
      return;
    case TriState::False:
      throw ClassifyError(ClassifyError::Reason::NotSmooth,
                          std::string(operation) + ": general member of " +
                              to_inline(canonical) + " is not smooth");
    case TriState::Unknown:
      throw ClassifyError(ClassifyError::Reason::SmoothnessUnknown,
                          std::string(operation) + ": smoothness of " + to_inline(canonical) +
                              " is undecided");
  }
}

}  // namespace

std::vector<std::pair<Coindex2Tag, Presentation>> coindex2_families(int n) {
  return {
      {Coindex2Tag::Deg6In1n23, Presentation::normalize(ones_then(n, {2, 3}), {6})},
      {Coindex2Tag::Deg4In1n12, Presentation::normalize(ones_then(n + 1, {2}), {4})},
      {Coindex2Tag::Cubic, Presentation::normalize(ones(n + 2), {3})},
      {Coindex2Tag::TwoQuadrics, Presentation::normalize(ones(n + 3), {2, 2})},
  };
}

std::int64_t fano_index(const Presentation& p) {
  const auto inv = invariants(p);
  if (inv.index <= 0) {
    throw ClassifyError(ClassifyError::Reason::NotFano,
                        "fano_index: " + to_inline(p) + " has index " +
                            std::to_string(inv.index) + " and is not Fano");
  }
  require_smooth(canonical_form(p), "fano_index");
  // A smooth Fano curve is P^1 whatever its embedding (e.g. the conic).
  return inv.dim == 1 ? 2 : inv.index;
}

IndexClass index_class(const Presentation& p) {
  const auto inv = invariants(p);
  const int n = inv.dim;
  const auto i = inv.index;
  if (n < 2) {
    throw ClassifyError(ClassifyError::Reason::DimensionTooSmall,
                        "index_class: needs dimension >= 2, got " + std::to_string(n));
  }
  if (i <= 0) {
    throw ClassifyError(ClassifyError::Reason::NotFano,
                        "index_class: " + to_inline(p) + " is not Fano");
  }
  const Presentation c = canonical_form(p);
  require_smooth(c, "index_class");

  if (i > n + 1) {
    return {IndexClassValue::ExceedsBound, std::nullopt};
  }
  if (i == n + 1) {
    if (c != Presentation::normalize(ones(n + 1), {})) {
      throw ConsistencyError("index n+1 but canonical form " + to_inline(c) + " is not P^" +
                             std::to_string(n));
    }
    return {IndexClassValue::ProjectiveSpace, std::nullopt};
  }
  if (i == n) {
    if (c != Presentation::normalize(ones(n + 2), {2})) {
      throw ConsistencyError("index n but canonical form " + to_inline(c) +
                             " is not a quadric in P^" + std::to_string(n + 1));
    }
    return {IndexClassValue::Quadric, std::nullopt};
  }
  if (i == n - 1) {
    if (n == 2) {
      return {IndexClassValue::Coindex2Family, std::nullopt};
    }
    for (const auto& [tag, family] : coindex2_families(n)) {
      if (c == family) {
        return {IndexClassValue::Coindex2Family, tag};
      }
    }
    throw ConsistencyError("index n-1 but canonical form " + to_inline(c) +
                           " is none of the four coindex-2 families");
  }
  return {IndexClassValue::Generic, std::nullopt};
}

Verdict decide_verdict(int n, std::int64_t i, TriState smooth) {
  if (smooth == TriState::False) {
    return {Outcome::Indeterminate, Branch::NotSmooth};
  }
  if (smooth == TriState::Unknown) {
    return {Outcome::Indeterminate, Branch::SmoothnessUnknown};
  }
  if (n == 1) {
    if (i > 0) {
      return {Outcome::InfiniteAut, Branch::RationalCurve};
    }
    if (i == 0) {
      return {Outcome::NotCovered, Branch::EllipticCurve};
    }
    return {Outcome::Finite, Branch::GeneralTypeCurve};
  }
  if (i > n + 1) {
    return {Outcome::Indeterminate, Branch::IndexOutOfRange};
  }
  if (i == n + 1) {
    return {Outcome::InfiniteAut, Branch::ProjectiveSpace};
  }
  if (i == n) {
    return {Outcome::InfiniteAut, Branch::Quadric};
  }
  if (i == n - 1) {
    return {Outcome::Finite, Branch::LowCoindex};
  }
  // i <= n - 2: cohomological vanishing applies unless n = 2 and K_X = 0.
  if (n == 2 && i == 0) {
    return {Outcome::NotCovered, Branch::CalabiYauSurface};
  }
  return {Outcome::Finite, Branch::FlennerVanishing};
}

Verdict aut_verdict(const Presentation& p) {
  const Presentation c = canonical_form(p);
  const auto inv = invariants(c);
  return decide_verdict(inv.dim, inv.index, smooth_general(c));
}

const char* to_string(IndexClassValue value) {
  switch (value) {
    case IndexClassValue::ExceedsBound:
      return "ExceedsBound";
    case IndexClassValue::ProjectiveSpace:
      return "ProjectiveSpace";
    case IndexClassValue::Quadric:
      return "Quadric";
    case IndexClassValue::Coindex2Family:
      return "Coindex2Family";
    case IndexClassValue::Generic:
      return "Generic";
  }
  return "?";
}

const char* to_string(Coindex2Tag tag) {
  switch (tag) {
    case Coindex2Tag::Deg6In1n23:
      return "Deg6_In_1n23";
    case Coindex2Tag::Deg4In1n12:
      return "Deg4_In_1n1_2";
    case Coindex2Tag::Cubic:
      return "Cubic";
    case Coindex2Tag::TwoQuadrics:
      return "TwoQuadrics";
  }
  return "?";
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Finite:
      return "Finite";
    case Outcome::InfiniteAut:
      return "InfiniteAut";
    case Outcome::NotCovered:
      return "NotCovered";
    case Outcome::Indeterminate:
      return "Indeterminate";
  }
  return "?";
}

const char* to_string(Branch branch) {
  switch (branch) {
    case Branch::FlennerVanishing:
      return "FlennerVanishing";
    case Branch::LowCoindex:
      return "LowCoindex";
    case Branch::GeneralTypeCurve:
      return "GeneralTypeCurve";
    case Branch::ProjectiveSpace:
      return "ProjectiveSpace";
    case Branch::Quadric:
      return "Quadric";
    case Branch::RationalCurve:
      return "RationalCurve";
    case Branch::CalabiYauSurface:
      return "CalabiYauSurface";
    case Branch::EllipticCurve:
      return "EllipticCurve";
    case Branch::SmoothnessUnknown:
      return "SmoothnessUnknown";
    case Branch::NotSmooth:
      return "NotSmooth";
    case Branch::IndexOutOfRange:
      return "IndexOutOfRange";
  }
  return "?";
}

std::string to_string(const Verdict& verdict) {
  return std::string(to_string(verdict.outcome)) + "/" + to_string(verdict.branch);
}

}  // namespace wciforge

#include "doctest.h"

#include "oracles.hpp"
#include "wciforge/classify.hpp"

#include <random>

using namespace wciforge;

namespace {

Presentation P(std::vector<std::int64_t> w, std::vector<std::int64_t> d = {}) {
  return Presentation::normalize(std::move(w), std::move(d));
}

ClassifyError::Reason reason_of(auto&& fn) {
  try {
    fn();
  } catch (const ClassifyError& e) {
    return e.reason();
  }
  FAIL("expected ClassifyError");
  return ClassifyError::Reason::NotFano;
}

}  // namespace

TEST_CASE("fano_index") {
  CHECK(fano_index(P({1, 1, 1}, {2})) == 2);
  CHECK(fano_index(P({1, 1})) == 2);
  CHECK(fano_index(P({1, 1, 1, 1, 1}, {2})) == 3);
  CHECK(fano_index(P({1, 1, 2, 3}, {6})) == 1);
  CHECK(fano_index(P({1, 1, 1, 1}, {3})) == 1);
  CHECK(fano_index(P({1, 1, 1, 1, 2}, {2, 3})) == 1);  // cone-inflated cubic surface
}

TEST_CASE("fano_index errors") {
  CHECK(reason_of([] { fano_index(P({1, 1, 1, 1}, {4})); }) == ClassifyError::Reason::NotFano);
  CHECK(reason_of([] { fano_index(P({1, 1, 1, 2, 2}, {3, 3})); }) ==
        ClassifyError::Reason::NotSmooth);
  CHECK(reason_of([] { fano_index(P({1, 1, 1, 1, 2, 2, 3}, {4, 6})); }) ==
        ClassifyError::Reason::SmoothnessUnknown);
}

TEST_CASE("index_class") {
  CHECK(index_class(P({1, 1, 1})) == IndexClass{IndexClassValue::ProjectiveSpace, std::nullopt});
  CHECK(index_class(P({1, 1, 1, 1, 1}, {2})) == IndexClass{IndexClassValue::Quadric, std::nullopt});
  CHECK(index_class(P({1, 1, 1, 2, 3}, {6})) ==
        IndexClass{IndexClassValue::Coindex2Family, Coindex2Tag::Deg6In1n23});
  CHECK(index_class(P({1, 1, 1, 1, 2}, {4})) ==
        IndexClass{IndexClassValue::Coindex2Family, Coindex2Tag::Deg4In1n12});
  CHECK(index_class(P({1, 1, 1, 1, 1}, {3})) ==
        IndexClass{IndexClassValue::Coindex2Family, Coindex2Tag::Cubic});
  CHECK(index_class(P({1, 1, 1, 1, 1, 1}, {2, 2})) ==
        IndexClass{IndexClassValue::Coindex2Family, Coindex2Tag::TwoQuadrics});
  CHECK(index_class(P({1, 1, 2, 3}, {6})) ==
        IndexClass{IndexClassValue::Coindex2Family, std::nullopt});
  CHECK(index_class(P({1, 1, 1, 1, 1}, {4})) == IndexClass{IndexClassValue::Generic, std::nullopt});
}

TEST_CASE("index_class errors") {
  CHECK(reason_of([] { index_class(P({1, 1, 1}, {2})); }) ==
        ClassifyError::Reason::DimensionTooSmall);
  CHECK(reason_of([] { index_class(P({1, 1, 1, 1}, {4})); }) == ClassifyError::Reason::NotFano);
}

TEST_CASE("coindex2_families have index n - 1 and are smooth") {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& [tag, p] : coindex2_families(n)) {
      INFO(to_string(tag), " ", to_inline(p));
      CHECK(invariants(p).dim == n);
      CHECK(invariants(p).index == n - 1);
      CHECK(smooth_general(p) == TriState::True);
    }
  }
}

TEST_CASE("aut_verdict fixtures") {
  CHECK(to_string(aut_verdict(P({1, 1, 1, 1}, {3}))) == "Finite/LowCoindex");
  CHECK(to_string(aut_verdict(P({1, 1, 1, 1, 1}, {2}))) == "InfiniteAut/Quadric");
  CHECK(to_string(aut_verdict(P({1, 1, 1, 1}, {4}))) == "NotCovered/CalabiYauSurface");
  CHECK(to_string(aut_verdict(P({1, 1, 1, 2, 3}, {6}))) == "Finite/LowCoindex");
  CHECK(to_string(aut_verdict(P({1, 1, 1}))) == "InfiniteAut/ProjectiveSpace");
  CHECK(to_string(aut_verdict(P({1, 1}))) == "InfiniteAut/RationalCurve");
  CHECK(to_string(aut_verdict(P({1, 1, 1}, {3}))) == "NotCovered/EllipticCurve");
  CHECK(to_string(aut_verdict(P({1, 1, 1}, {4}))) == "Finite/GeneralTypeCurve");
  CHECK(to_string(aut_verdict(P({1, 1, 1, 1, 1}, {5}))) == "Finite/FlennerVanishing");
  CHECK(to_string(aut_verdict(P({1, 1, 1, 1, 1}, {4}))) == "Finite/FlennerVanishing");
  CHECK(to_string(aut_verdict(P({1, 1, 1, 2, 2}, {3, 4}))) == "Indeterminate/NotSmooth");
  CHECK(to_string(aut_verdict(P({1, 1, 2, 2, 3}, {4, 6}))) == "Indeterminate/SmoothnessUnknown");
  // a cone-inflated quadric is still a quadric
  CHECK(to_string(aut_verdict(P({1, 1, 1, 1, 1, 3}, {2, 3}))) == "InfiniteAut/Quadric");
}

TEST_CASE("decide_verdict covers the index bound") {
  CHECK(decide_verdict(2, 4, TriState::True) == Verdict{Outcome::Indeterminate, Branch::IndexOutOfRange});
  CHECK(decide_verdict(3, 1, TriState::True) == Verdict{Outcome::Finite, Branch::FlennerVanishing});
  CHECK(decide_verdict(3, 0, TriState::True) == Verdict{Outcome::Finite, Branch::FlennerVanishing});
  CHECK(decide_verdict(2, -3, TriState::True) == Verdict{Outcome::Finite, Branch::FlennerVanishing});
}

TEST_CASE("property: verdict is invariant under adding linear cones") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = oracle::random_presentation(rng, 5, 6);
    const auto q = oracle::inflate(p, rng, 1 + trial % 2, 6);
    CHECK(aut_verdict(p) == aut_verdict(q));
    CHECK(aut_verdict(q) == aut_verdict(canonical_form(q)));
  }
}

TEST_CASE("property: smooth Fano presentations have index at most n + 1") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto p = oracle::random_presentation(rng, 5, 5);
    const auto inv = invariants(canonical_form(p));
    if (inv.dim >= 2 && inv.index > 0 && smooth_general(p) == TriState::True) {
      INFO(to_inline(p));
      CHECK(inv.index <= inv.dim + 1);
      CHECK(aut_verdict(p).branch != Branch::IndexOutOfRange);
      CHECK_NOTHROW(index_class(p));
    }
  }
}

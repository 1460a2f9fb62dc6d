#include "wciforge/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wciforge {

Presentation Presentation::normalize(std::vector<std::int64_t> weights,
                                     std::vector<std::int64_t> degrees) {
  for (auto a : weights) {
    if (a < 1) {
      throw InputError("weights must be positive integers, got " + std::to_string(a));
    }
  }
  for (auto d : degrees) {
    if (d < 1) {
      throw InputError("degrees must be positive integers, got " + std::to_string(d));
    }
  }
  if (weights.size() < 2) {
    throw InputError("need at least two weights (ambient dimension N >= 1), got " +
                     std::to_string(weights.size()));
  }
  if (degrees.size() + 1 >= weights.size()) {
    throw InputError("too many degrees: " + std::to_string(degrees.size()) + " equations in P^" +
                     std::to_string(weights.size() - 1) + " leave no positive dimension");
  }
  std::sort(weights.begin(), weights.end());
  std::sort(degrees.begin(), degrees.end());
  return Presentation(std::move(weights), std::move(degrees));
}

InvariantsRecord invariants(const Presentation& p) {
  const auto& w = p.weights();
  const auto& d = p.degrees();
  const std::int64_t index = std::accumulate(w.begin(), w.end(), std::int64_t{0}) -
                             std::accumulate(d.begin(), d.end(), std::int64_t{0});
  VarietyKind kind = VarietyKind::CalabiYau;
  if (index > 0) {
    kind = VarietyKind::Fano;
  } else if (index < 0) {
    kind = VarietyKind::GeneralType;
  }
  return {p.ambient_dim(), p.codim(), p.dim(), index, -index, kind};
}

std::vector<std::int64_t> linear_cone_pairs(const Presentation& p) {
  std::vector<std::int64_t> shared;
  std::set_intersection(p.weights().begin(), p.weights().end(), p.degrees().begin(),
                        p.degrees().end(), std::back_inserter(shared));
  return shared;
}

Presentation canonical_form(const Presentation& p) {
  std::vector<std::int64_t> weights = p.weights();
  std::vector<std::int64_t> degrees = p.degrees();
  for (auto v : linear_cone_pairs(p)) {
    weights.erase(std::find(weights.begin(), weights.end(), v));
    degrees.erase(std::find(degrees.begin(), degrees.end(), v));
  }
  if (weights.size() < 2) {
    throw ConsistencyError("degenerate presentation: cancelling linear cones leaves " +
                           std::to_string(weights.size()) + " weight(s)");
  }
  return Presentation::normalize(std::move(weights), std::move(degrees));
}

ProductRatio poincare(const Presentation& p) {
  return {FactorList(p.degrees()), FactorList(p.weights())};
}

BigInt h0(const Presentation& p, std::int64_t m) {
  if (m < 0) {
    return 0;
  }
  return expand(poincare(p), m).back();
}

bool equivalent(const Presentation& lhs, const Presentation& rhs) {
  return canonical_form(lhs) == canonical_form(rhs);
}

Presentation extend(const Presentation& p) {
  auto weights = p.weights();
  weights.push_back(1);
  return Presentation::normalize(std::move(weights), p.degrees());
}

namespace {

void join(std::ostringstream& out, const std::vector<std::int64_t>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out << ',';
    }
    out << values[i];
  }
}

}  // namespace

std::string to_inline(const Presentation& p) {
  std::ostringstream out;
  out << "w=";
  join(out, p.weights());
  out << " d=";
  join(out, p.degrees());
  return out.str();
}

const char* to_string(VarietyKind kind) {
  switch (kind) {
    case VarietyKind::Fano:
      return "Fano";
    case VarietyKind::CalabiYau:
      return "CalabiYau";
    case VarietyKind::GeneralType:
      return "GeneralType";
  }
  return "?";
}

}  // namespace wciforge

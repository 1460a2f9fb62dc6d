#include "wciforge/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wciforge {

TriState combine(TriState lhs, TriState rhs) {
  if (lhs == TriState::False || rhs == TriState::False) {
    return TriState::False;
  }
  if (lhs == TriState::Unknown || rhs == TriState::Unknown) {
    return TriState::Unknown;
  }
  return TriState::True;
}

TriState lift(bool value) { return value ? TriState::True : TriState::False; }

const char* to_string(TriState value) {
  switch (value) {
    case TriState::True:
      return "True";
    case TriState::False:
      return "False";
    case TriState::Unknown:
      return "Unknown";
  }
  return "?";
}

const char* to_string(QuasiSmoothTier tier) {
  switch (tier) {
    case QuasiSmoothTier::Ambient:
      return "T0";
    case QuasiSmoothTier::UnitWeights:
      return "T1";
    case QuasiSmoothTier::Hypersurface:
      return "T2";
    case QuasiSmoothTier::Multidegree:
      return "T3";
  }
  return "?";
}

bool semigroup_member(std::int64_t d, std::span<const std::int64_t> generators) {
  if (d < 0) {
    return false;
  }
  std::set<std::int64_t> distinct(generators.begin(), generators.end());
  const auto size = static_cast<std::size_t>(d) + 1;
  std::vector<bool> reachable(size, false);
  reachable[0] = true;
  for (auto g : distinct) {
    const auto step = static_cast<std::size_t>(g);
    for (std::size_t s = step; s < size; ++s) {
      if (reachable[s - step]) {
        reachable[s] = true;
      }
    }
  }
  return reachable.back();
}

bool ambient_well_formed(std::span<const std::int64_t> weights) {
  const auto count = weights.size();
  // prefix[i] = gcd(w[0..i)), suffix[i] = gcd(w[i..)).
  std::vector<std::int64_t> prefix(count + 1, 0);
  std::vector<std::int64_t> suffix(count + 1, 0);
  for (std::size_t i = 0; i < count; ++i) {
    prefix[i + 1] = std::gcd(prefix[i], weights[i]);
    suffix[count - 1 - i] = std::gcd(suffix[count - i], weights[count - 1 - i]);
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (std::gcd(prefix[i], suffix[i + 1]) != 1) {
      return false;
    }
  }
  return true;
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t value) {
  std::vector<std::int64_t> primes;
  for (std::int64_t q = 2; q * q <= value; ++q) {
    if (value % q == 0) {
      primes.push_back(q);
      while (value % q == 0) {
        value /= q;
      }
    }
  }
  if (value > 1) {
    primes.push_back(value);
  }
  return primes;
}

}  // namespace

std::vector<StratumReport> stratum_reports(const Presentation& p) {
  std::set<std::int64_t> primes;
  for (auto a : p.weights()) {
    for (auto q : prime_factors(a)) {
      primes.insert(q);
    }
  }
  std::vector<StratumReport> reports;
  for (auto q : primes) {
    std::vector<std::int64_t> divisible;
    std::copy_if(p.weights().begin(), p.weights().end(), std::back_inserter(divisible),
                 [q](std::int64_t a) { return a % q == 0; });
    const auto m = static_cast<int>(divisible.size());
    const auto attainable = static_cast<int>(
        std::count_if(p.degrees().begin(), p.degrees().end(),
                      [&](std::int64_t d) { return semigroup_member(d, divisible); }));
    reports.push_back({q, m, attainable, m - 1 - attainable});
  }
  return reports;
}

bool well_formed_general(const Presentation& p) {
  if (!ambient_well_formed(p.weights())) {
    return false;
  }
  const auto reports = stratum_reports(p);
  return std::all_of(reports.begin(), reports.end(), [&](const StratumReport& r) {
    return r.general_dimension <= p.dim() - 2;
  });
}

bool avoids_singular_locus(const Presentation& p) {
  const auto reports = stratum_reports(p);
  return std::all_of(reports.begin(), reports.end(),
                     [](const StratumReport& r) { return r.general_dimension < 0; });
}

namespace {

// Subset criterion for a general hypersurface of degree d in P(weights): for
// every nonempty index set I, either some monomial in the variables of I has
// degree d, or |I| distinct variables x_e outside I admit monomials x_I^M x_e
// of degree d. A set containing a variable whose weight divides d passes via
// a pure power, so only subsets of the non-dividing variables are visited.
class HypersurfaceCriterion {
 public:
  HypersurfaceCriterion(const std::vector<std::int64_t>& weights, std::int64_t d)
      : weights_(weights), degree_(d) {
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (d % weights_[i] != 0) {
        candidates_.push_back(i);
      }
    }
  }

  bool holds() {
    std::vector<bool> reach(static_cast<std::size_t>(degree_) + 1, false);
    reach[0] = true;
    std::vector<bool> members(weights_.size(), false);
    return visit(0, reach, members, 0);
  }

 private:
  // Extends the current subset by each later candidate in turn.
  bool visit(std::size_t from, const std::vector<bool>& reach, std::vector<bool>& members,
             std::size_t size) {
    for (std::size_t c = from; c < candidates_.size(); ++c) {
      const auto index = candidates_[c];
      auto next = reach;
      const auto step = static_cast<std::size_t>(weights_[index]);
      for (std::size_t s = step; s < next.size(); ++s) {
        if (next[s - step]) {
          next[s] = true;
        }
      }
      if (next.back()) {
        continue;  // a pure monomial exists for this set and all its supersets
      }
      members[index] = true;
      const bool ok = satisfied(next, members, size + 1) && visit(c + 1, next, members, size + 1);
      members[index] = false;
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  bool satisfied(const std::vector<bool>& reach, const std::vector<bool>& members,
                 std::size_t size) const {
    std::size_t witnesses = 0;
    for (std::size_t e = 0; e < weights_.size(); ++e) {
      if (!members[e] && weights_[e] <= degree_ &&
          reach[static_cast<std::size_t>(degree_ - weights_[e])]) {
        ++witnesses;
      }
    }
    return witnesses >= size;
  }

  const std::vector<std::int64_t>& weights_;
  std::int64_t degree_;
  std::vector<std::size_t> candidates_;
};

// Maximum matching of left vertices (listed with repetition) into columns.
class Matching {
 public:
  Matching(const std::vector<const std::vector<int>*>& left, int columns)
      : left_(left), owner_(static_cast<std::size_t>(columns), -1) {}

  int size() {
    int matched = 0;
    for (std::size_t v = 0; v < left_.size(); ++v) {
      seen_.assign(owner_.size(), false);
      matched += augment(static_cast<int>(v)) ? 1 : 0;
    }
    return matched;
  }

 private:
  bool augment(int v) {
    for (int col : *left_[static_cast<std::size_t>(v)]) {
      const auto c = static_cast<std::size_t>(col);
      if (seen_[c]) {
        continue;
      }
      seen_[c] = true;
      if (owner_[c] < 0 || augment(owner_[c])) {
        owner_[c] = v;
        return true;
      }
    }
    return false;
  }

  const std::vector<const std::vector<int>*>& left_;
  std::vector<int> owner_;
  std::vector<bool> seen_;
};

// Necessary condition for codimension >= 2. Fix a coordinate set I and let
// J be the equations whose degree is attainable by monomials in I. On the
// punctured cone C over {x_e = 0, e not in I} the remaining equations vanish
// identically, and row j of their gradient block has a non-zero entry in
// column x_e exactly when d_j - a_e is attainable in I. If a set S of those
// rows meets only c_S columns, the block loses rank on a subcone of C of
// codimension at most max(0, c_S - |S| + 1). Should
// |I| - |J| - max(0, c_S - |S| + 1) >= 1 hold for some S, that subcone meets
// the general member away from the vertex, which is then not quasi-smooth.
// The minimum over S is read off a bipartite matching (Hall surplus). For
// k = 1 this is exactly the hypersurface criterion above.
class JacobianObstruction {
 public:
  JacobianObstruction(const std::vector<std::int64_t>& weights,
                      const std::vector<std::int64_t>& degrees)
      : weights_(weights), degrees_(degrees) {}

  bool found() {
    std::vector<bool> reach(static_cast<std::size_t>(degrees_.back()) + 1, false);
    reach[0] = true;
    std::vector<bool> members(weights_.size(), false);
    return visit(0, reach, members, 0);
  }

 private:
  bool visit(std::size_t from, const std::vector<bool>& reach, std::vector<bool>& members,
             int size) {
    for (std::size_t index = from; index < weights_.size(); ++index) {
      auto next = reach;
      const auto step = static_cast<std::size_t>(weights_[index]);
      for (std::size_t s = step; s < next.size(); ++s) {
        if (next[s - step]) {
          next[s] = true;
        }
      }
      members[index] = true;
      int attained = 0;
      for (auto d : degrees_) {
        attained += next[static_cast<std::size_t>(d)] ? 1 : 0;
      }
      // once every equation is attained the same holds for all supersets
      const bool all_attained = attained == static_cast<int>(degrees_.size());
      const bool obstructed =
          !all_attained && (blocked(next, members, size + 1, attained) ||
                            visit(index + 1, next, members, size + 1));
      members[index] = false;
      if (obstructed) {
        return true;
      }
    }
    return false;
  }

  bool blocked(const std::vector<bool>& reach, const std::vector<bool>& members, int size,
               int attained) const {
    // fires when some S has max(0, c_S - |S| + 1) <= slack
    const int slack = size - attained - 1;
    if (slack < 0) {
      return false;
    }
    std::vector<std::vector<int>> rows;
    for (auto d : degrees_) {
      if (reach[static_cast<std::size_t>(d)]) {
        continue;
      }
      std::vector<int> columns;
      for (std::size_t e = 0; e < weights_.size(); ++e) {
        if (!members[e] && d > weights_[e] && reach[static_cast<std::size_t>(d - weights_[e])]) {
          columns.push_back(static_cast<int>(e));
        }
      }
      rows.push_back(std::move(columns));
    }
    const auto columns = static_cast<int>(weights_.size());
    std::vector<const std::vector<int>*> left;
    for (const auto& r : rows) {
      left.push_back(&r);
    }
    if (Matching(left, columns).size() < static_cast<int>(rows.size())) {
      return true;  // some S has c_S < |S|
    }
    if (slack == 0) {
      return false;
    }
    // Surplus >= slack iff every row, taken slack + 1 times, still matches.
    for (const auto& r : rows) {
      auto extended = left;
      for (int copy = 0; copy < slack; ++copy) {
        extended.push_back(&r);
      }
      if (Matching(extended, columns).size() < static_cast<int>(extended.size())) {
        return true;
      }
    }
    return false;
  }

  const std::vector<std::int64_t>& weights_;
  const std::vector<std::int64_t>& degrees_;
};

}  // namespace

QuasiSmoothness quasi_smooth_details(const Presentation& p) {
  const Presentation c = canonical_form(p);
  if (c.codim() == 0) {
    return {QuasiSmoothTier::Ambient, TriState::True};
  }
  const auto& w = c.weights();
  if (std::all_of(w.begin(), w.end(), [](std::int64_t a) { return a == 1; })) {
    return {QuasiSmoothTier::UnitWeights, TriState::True};
  }
  if (c.codim() == 1) {
    return {QuasiSmoothTier::Hypersurface,
            lift(HypersurfaceCriterion(w, c.degrees()[0]).holds())};
  }
  return {QuasiSmoothTier::Multidegree,
          JacobianObstruction(w, c.degrees()).found() ? TriState::False : TriState::Unknown};
}

TriState quasi_smooth_general(const Presentation& p) { return quasi_smooth_details(p).value; }

TriState smooth_general(const Presentation& p) {
  const Presentation c = canonical_form(p);
  return combine(quasi_smooth_general(c),
                 combine(lift(well_formed_general(c)), lift(avoids_singular_locus(c))));
}

}  // namespace wciforge

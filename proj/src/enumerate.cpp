#include "wciforge/enumerate.hpp"

#include "wciforge/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <thread>

namespace wciforge {

void validate(const SearchCaps& caps) {
  if (caps.max_codim < 1 || caps.max_degree < 1 || caps.max_weight < 1) {
    throw InputError("search caps must be positive (codim " + std::to_string(caps.max_codim) +
                     ", degree " + std::to_string(caps.max_degree) + ", weight " +
                     std::to_string(caps.max_weight) + ")");
  }
}

bool search_order(const Presentation& lhs, const Presentation& rhs) {
  if (lhs.codim() != rhs.codim()) {
    return lhs.codim() < rhs.codim();
  }
  if (lhs.weights() != rhs.weights()) {
    return lhs.weights() < rhs.weights();
  }
  return lhs.degrees() < rhs.degrees();
}

namespace {

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max() / 4;

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> primes;
  for (std::int64_t q = 2; q <= limit; ++q) {
    bool prime = true;
    for (auto p : primes) {
      if (p * p > q) {
        break;
      }
      if (q % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) {
      primes.push_back(q);
    }
  }
  return primes;
}

struct Bucket {
  std::vector<Presentation> found;
  std::vector<Presentation> undecided;
};

// Exhaustive search for one codimension k and a fixed number of unit
// weights. Every cut below only discards candidates that would fail the
// avoidance of Sing P (each prime stratum needs as many degrees in its
// semigroup as it has weights), the degree cap, or the cone-free condition;
// survivors are judged by the public predicates.
class Searcher {
 public:
  Searcher(int n, std::int64_t i_target, const SearchCaps& caps, int k, int unit_weights)
      : i_target_(i_target),
        max_degree_(caps.max_degree),
        max_weight_(caps.max_weight),
        k_(k),
        length_(n + k + 1),
        unit_weights_(unit_weights),
        primes_(primes_up_to(caps.max_weight)),
        prime_counts_(primes_.size(), 0),
        value_primes_(static_cast<std::size_t>(caps.max_weight) + 1) {
    for (std::int64_t v = 2; v <= max_weight_; ++v) {
      for (std::size_t q = 0; q < primes_.size(); ++q) {
        if (v % primes_[q] == 0) {
          value_primes_[static_cast<std::size_t>(v)].push_back(q);
        }
      }
    }
    weights_.assign(static_cast<std::size_t>(length_), 1);
  }

  Bucket run() {
    if (unit_weights_ > length_ || (unit_weights_ < length_ && max_weight_ < 2)) {
      return {};
    }
    weight_sum_ = unit_weights_;
    place_weight(unit_weights_, 2);
    return std::move(bucket_);
  }

 private:
  // Weights beyond the unit block are >= 2 and non-decreasing.
  void place_weight(int pos, std::int64_t lo) {
    if (pos == length_) {
      weights_complete();
      return;
    }
    const std::int64_t remaining = length_ - pos;
    const std::int64_t sum_cap = static_cast<std::int64_t>(k_) * max_degree_ + i_target_;
    for (std::int64_t v = lo; v <= max_weight_; ++v) {
      if (weight_sum_ + remaining * v > sum_cap) {
        break;
      }
      const auto& divisors = value_primes_[static_cast<std::size_t>(v)];
      bool over = false;
      for (auto q : divisors) {
        if (++prime_counts_[q] > k_) {
          over = true;
        }
      }
      if (!over) {
        weights_[static_cast<std::size_t>(pos)] = v;
        weight_sum_ += v;
        place_weight(pos + 1, v);
        weight_sum_ -= v;
      }
      for (auto q : divisors) {
        --prime_counts_[q];
      }
    }
  }

  void weights_complete() {
    degree_sum_ = weight_sum_ - i_target_;
    if (k_ == 0) {
      if (degree_sum_ == 0) {
        judge({});
      }
      return;
    }
    // A cone-free member that is quasi-smooth has sorted degrees dominating
    // the top weights, d_t > a_{N-k+t}: otherwise the top weights from
    // position N-k+t on carry a rank-deficient Jacobian block (see the
    // codimension >= 2 obstruction in geometry.cpp).
    floors_.resize(static_cast<std::size_t>(k_));
    std::int64_t floor_sum = 0;
    for (int t = 0; t < k_; ++t) {
      floors_[static_cast<std::size_t>(t)] = weights_[static_cast<std::size_t>(length_ - k_ + t)] + 1;
      floor_sum += floors_[static_cast<std::size_t>(t)];
    }
    if (degree_sum_ < floor_sum || degree_sum_ > static_cast<std::int64_t>(k_) * max_degree_) {
      return;
    }
    // each degree exceeds its floor by at most the total excess
    top_degree_ = std::min(max_degree_, floors_.back() + degree_sum_ - floor_sum);
    // Smallest value a degree can take without producing a linear cone.
    std::int64_t smallest_free = 1;
    for (auto a : weights_) {
      if (a == smallest_free) {
        ++smallest_free;
      } else if (a > smallest_free) {
        break;
      }
    }
    // A degree covering prime q is a non-weight element of the semigroup of
    // the q-divisible weights, hence at least 2q.
    std::int64_t lower = static_cast<std::int64_t>(k_) * smallest_free;
    for (std::size_t q = 0; q < primes_.size(); ++q) {
      const std::int64_t m = prime_counts_[q];
      if (m > 0) {
        if (2 * primes_[q] > top_degree_) {
          return;
        }
        lower = std::max(lower, m * 2 * primes_[q] + (k_ - m) * smallest_free);
      }
    }
    if (degree_sum_ < lower) {
      return;
    }
    if (!ambient_well_formed(weights_)) {
      return;
    }
    prepare_degree_tables();
    degrees_.assign(static_cast<std::size_t>(k_), 0);
    cover_.assign(active_.size(), 0);
    place_degree(0, 1, 0);
  }

  void prepare_degree_tables() {
    const auto size = static_cast<std::size_t>(top_degree_) + 2;
    std::vector<bool> is_weight(size, false);
    for (auto a : weights_) {
      if (a < static_cast<std::int64_t>(size)) {
        is_weight[static_cast<std::size_t>(a)] = true;
      }
    }
    admissible_.assign(size, false);
    for (std::size_t v = 1; v + 1 < size; ++v) {
      admissible_[v] = !is_weight[v];
    }
    next_admissible_ = next_table(admissible_);

    active_.clear();
    need_.clear();
    member_.clear();
    next_member_.clear();
    for (std::size_t q = 0; q < primes_.size(); ++q) {
      if (prime_counts_[q] == 0) {
        continue;
      }
      std::vector<bool> reach(size, false);
      reach[0] = true;
      for (auto a : weights_) {
        if (a % primes_[q] != 0) {
          continue;
        }
        const auto step = static_cast<std::size_t>(a);
        for (std::size_t s = step; s < size; ++s) {
          if (reach[s - step]) {
            reach[s] = true;
          }
        }
      }
      std::vector<bool> usable(size, false);
      for (std::size_t v = 1; v + 1 < size; ++v) {
        usable[v] = reach[v] && admissible_[v];
      }
      active_.push_back(q);
      need_.push_back(prime_counts_[q]);
      next_member_.push_back(next_table(usable));
      member_.push_back(std::move(usable));
    }
  }

  // next[x] = smallest v >= x with flags[v], or kUnreachable.
  static std::vector<std::int64_t> next_table(const std::vector<bool>& flags) {
    std::vector<std::int64_t> next(flags.size() + 1, kUnreachable);
    for (std::size_t x = flags.size(); x-- > 0;) {
      next[x] = flags[x] ? static_cast<std::int64_t>(x) : next[x + 1];
    }
    return next;
  }

  // Lowest possible total of the degrees at positions pos.. (all >= lo) that
  // closes the current coverage deficits; kUnreachable when impossible.
  std::int64_t completion_lower_bound(int pos, std::int64_t lo) const {
    const int slots = k_ - pos;
    if (slots == 0) {
      for (std::size_t a = 0; a < active_.size(); ++a) {
        if (cover_[a] < need_[a]) {
          return kUnreachable;
        }
      }
      return 0;
    }
    const auto start = static_cast<std::size_t>(std::min<std::int64_t>(lo, top_degree_ + 1));
    const std::int64_t base = next_admissible_[start];
    if (base >= kUnreachable) {
      return kUnreachable;
    }
    std::int64_t floored = 0;
    for (int t = pos; t < k_; ++t) {
      floored += std::max(base, floors_[static_cast<std::size_t>(t)]);
    }
    std::int64_t bound = floored;
    for (std::size_t a = 0; a < active_.size(); ++a) {
      const int deficit = need_[a] - cover_[a];
      if (deficit <= 0) {
        continue;
      }
      const std::int64_t cheapest = next_member_[a][start];
      if (deficit > slots || cheapest >= kUnreachable) {
        return kUnreachable;
      }
      bound = std::max(bound, deficit * cheapest + (slots - deficit) * base);
    }
    return bound;
  }

  void place_degree(int pos, std::int64_t lo, std::int64_t sum) {
    const int slots = k_ - pos;
    const std::int64_t rest = degree_sum_ - sum;
    if (slots == 0) {
      if (rest == 0 && completion_lower_bound(pos, lo) == 0) {
        judge(degrees_);
      }
      return;
    }
    if (completion_lower_bound(pos, lo) > rest) {
      return;
    }
    const std::int64_t start =
        std::max({lo, floors_[static_cast<std::size_t>(pos)], rest - (slots - 1) * top_degree_});
    for (std::int64_t v = start; v <= top_degree_; ++v) {
      if (v * slots > rest) {
        break;
      }
      if (!admissible_[static_cast<std::size_t>(v)]) {
        continue;
      }
      for (std::size_t a = 0; a < active_.size(); ++a) {
        if (member_[a][static_cast<std::size_t>(v)]) {
          ++cover_[a];
        }
      }
      degrees_[static_cast<std::size_t>(pos)] = v;
      place_degree(pos + 1, v, sum + v);
      for (std::size_t a = 0; a < active_.size(); ++a) {
        if (member_[a][static_cast<std::size_t>(v)]) {
          --cover_[a];
        }
      }
    }
  }

  void judge(std::vector<std::int64_t> degrees) {
    const Presentation p = Presentation::normalize(weights_, std::move(degrees));
    if (!linear_cone_pairs(p).empty() || !well_formed_general(p)) {
      return;
    }
    switch (smooth_general(p)) {
      case TriState::True:
        bucket_.found.push_back(p);
        break;
      case TriState::Unknown:
        bucket_.undecided.push_back(p);
        break;
      case TriState::False:
        break;
    }
  }

  std::int64_t i_target_;
  std::int64_t max_degree_;
  std::int64_t max_weight_;
  int k_;
  int length_;
  int unit_weights_;

  std::vector<std::int64_t> primes_;
  std::vector<int> prime_counts_;
  std::vector<std::vector<std::size_t>> value_primes_;

  std::vector<std::int64_t> weights_;
  std::int64_t weight_sum_ = 0;
  std::int64_t degree_sum_ = 0;
  std::int64_t top_degree_ = 0;
  std::vector<std::int64_t> floors_;

  std::vector<bool> admissible_;
  std::vector<std::int64_t> next_admissible_;
  std::vector<std::size_t> active_;
  std::vector<int> need_;
  std::vector<std::vector<bool>> member_;
  std::vector<std::vector<std::int64_t>> next_member_;
  std::vector<int> cover_;
  std::vector<std::int64_t> degrees_;

  Bucket bucket_;
};

void sort_unique(std::vector<Presentation>& list) {
  std::sort(list.begin(), list.end(), search_order);
  list.erase(std::unique(list.begin(), list.end()), list.end());
}

void add_cap_warnings(EnumerationResult& result, const std::vector<Presentation>& list) {
  const auto& caps = result.caps;
  for (const auto& p : list) {
    const bool weight_cap = p.weights().back() >= caps.max_weight;
    const bool degree_cap = !p.degrees().empty() && p.degrees().back() >= caps.max_degree;
    const bool codim_cap = p.codim() >= caps.max_codim;
    if (weight_cap || degree_cap || codim_cap) {
      std::string which;
      auto append = [&which](const char* name) {
        which += which.empty() ? name : std::string(",") + name;
      };
      if (codim_cap) {
        append("max_codim");
      }
      if (degree_cap) {
        append("max_degree");
      }
      if (weight_cap) {
        append("max_weight");
      }
      result.warnings.push_back("completeness: " + to_inline(p) + " lies on cap boundary (" +
                                which + ")");
    }
  }
}

}  // namespace

EnumerationResult enumerate_wcis(int n, std::int64_t i_target, const SearchCaps& caps,
                                 unsigned threads) {
  if (n < 1) {
    throw InputError("dimension must be at least 1, got " + std::to_string(n));
  }
  validate(caps);

  struct Task {
    int k;
    int unit_weights;
  };
  std::vector<Task> tasks;
  for (int k = 0; k <= caps.max_codim; ++k) {
    for (int u = 0; u <= n + k + 1; ++u) {
      tasks.push_back({k, u});
    }
  }
  std::vector<Bucket> buckets(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      buckets[t] = Searcher(n, i_target, caps, tasks[t].k, tasks[t].unit_weights).run();
    }
  };
  if (threads == 0) {
    threads = std::max(1U, std::thread::hardware_concurrency());
  }
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }

  EnumerationResult result{{}, {}, caps, {}};
  for (auto& bucket : buckets) {
    result.found.insert(result.found.end(), bucket.found.begin(), bucket.found.end());
    result.undecided.insert(result.undecided.end(), bucket.undecided.begin(),
                            bucket.undecided.end());
  }
  sort_unique(result.found);
  sort_unique(result.undecided);
  add_cap_warnings(result, result.found);
  add_cap_warnings(result, result.undecided);
  return result;
}

EnumerationResult enumerate_coindex2(int n, const SearchCaps& caps) {
  if (n < 3) {
    throw InputError("coindex-2 enumeration needs dimension >= 3, got " + std::to_string(n));
  }
  return enumerate_wcis(n, n - 1, caps);
}

namespace {

TableRow row(const char* label, int dim, std::vector<std::int64_t> weights,
             std::vector<std::int64_t> degrees) {
  return {label, dim, Presentation::normalize(std::move(weights), std::move(degrees))};
}

TableComparison compare(std::string name, const std::vector<TableRow>& table,
                        std::vector<Presentation> found, std::vector<Presentation> undecided) {
  TableComparison cmp{std::move(name), {}, {}, {}, std::move(undecided)};
  sort_unique(found);
  for (const auto& r : table) {
    if (std::find(found.begin(), found.end(), r.presentation) == found.end()) {
      cmp.missing.push_back("dim " + std::to_string(r.dim) + " row " + r.label + ": " +
                            to_inline(r.presentation));
    }
  }
  for (const auto& p : found) {
    const bool listed = std::any_of(table.begin(), table.end(),
                                    [&](const TableRow& r) { return r.presentation == p; });
    if (!listed) {
      cmp.unexpected.push_back(p);
    }
  }
  cmp.found = std::move(found);
  return cmp;
}

}  // namespace

const std::vector<TableRow>& fano_table() {
  static const std::vector<TableRow> table{
      row("1.1", 1, {1, 1, 1}, {2}),
      row("1.2", 1, {1, 1}, {}),
      row("2.1", 2, {1, 1, 2, 3}, {6}),
      row("2.2", 2, {1, 1, 1, 2}, {4}),
      row("2.3", 2, {1, 1, 1, 1}, {3}),
      row("2.4", 2, {1, 1, 1, 1, 1}, {2, 2}),
      row("2.5", 2, {1, 1, 1, 1}, {2}),
      row("2.6", 2, {1, 1, 1}, {}),
  };
  return table;
}

const std::vector<TableRow>& calabi_yau_table() {
  static const std::vector<TableRow> table{
      row("1.1", 1, {1, 2, 3}, {6}),
      row("1.2", 1, {1, 1, 2}, {4}),
      row("1.3", 1, {1, 1, 1}, {3}),
      row("1.4", 1, {1, 1, 1, 1}, {2, 2}),
      row("2.1", 2, {1, 1, 1, 3}, {6}),
      row("2.2", 2, {1, 1, 1, 1}, {4}),
      row("2.3", 2, {1, 1, 1, 1, 1}, {2, 3}),
      row("2.4", 2, {1, 1, 1, 1, 1, 1}, {2, 2, 2}),
  };
  return table;
}

TablesReport reproduce_tables(const SearchCaps& caps) {
  struct Run {
    int n;
    std::int64_t i;
    bool fano;
  };
  // In dimension n >= 1 the index of a smooth Fano WCI is at most n + 1.
  const std::vector<Run> runs{{1, 1, true},  {1, 2, true},  {2, 1, true}, {2, 2, true},
                              {2, 3, true},  {1, 0, false}, {2, 0, false}};
  std::vector<Presentation> fano_found, fano_undecided, cy_found, cy_undecided;
  std::vector<std::string> warnings;
  for (const auto& run : runs) {
    auto result = enumerate_wcis(run.n, run.i, caps);
    auto& found = run.fano ? fano_found : cy_found;
    auto& undecided = run.fano ? fano_undecided : cy_undecided;
    found.insert(found.end(), result.found.begin(), result.found.end());
    undecided.insert(undecided.end(), result.undecided.begin(), result.undecided.end());
    warnings.insert(warnings.end(), result.warnings.begin(), result.warnings.end());
  }
  return {caps,
          compare("fano", fano_table(), std::move(fano_found), std::move(fano_undecided)),
          compare("calabi-yau", calabi_yau_table(), std::move(cy_found),
                  std::move(cy_undecided)),
          std::move(warnings)};
}

}  // namespace wciforge

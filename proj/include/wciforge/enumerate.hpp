#pragma once

#include "wciforge/presentation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wciforge {

/// Search bounds. Completeness is only claimed inside them.
struct SearchCaps {
  int max_codim = 3;
  int max_degree = 30;
  int max_weight = 10;

  SearchCaps doubled() const { return {2 * max_codim, 2 * max_degree, 2 * max_weight}; }
  friend bool operator==(const SearchCaps&, const SearchCaps&) = default;
};

/// Throws InputError unless every cap is positive.
void validate(const SearchCaps& caps);

struct EnumerationResult {
  std::vector<Presentation> found;      // smooth general member, sorted
  std::vector<Presentation> undecided;  // smoothness could not be decided, sorted
  SearchCaps caps;
  std::vector<std::string> warnings;  // survivors touching a cap
};

/// Orders by codimension, then weights, then degrees.
bool search_order(const Presentation& lhs, const Presentation& rhs);

/// All cone-free presentations of dimension n and index i_target inside caps
/// whose general member is well formed and smooth. Candidates whose
/// smoothness is undecided go to `undecided`. threads == 0 picks the hardware
/// concurrency; the result does not depend on it.
EnumerationResult enumerate_wcis(int n, std::int64_t i_target, const SearchCaps& caps = {},
                                 unsigned threads = 0);

/// enumerate_wcis(n, n - 1, caps) for n >= 3.
EnumerationResult enumerate_coindex2(int n, const SearchCaps& caps = {});

struct TableRow {
  std::string label;  // row number as printed in the classification table
  int dim;
  Presentation presentation;
};

/// Smooth cone-free Fano WCIs of dimension 1 and 2.
const std::vector<TableRow>& fano_table();
/// Smooth cone-free WCIs of dimension 1 and 2 with trivial canonical class.
const std::vector<TableRow>& calabi_yau_table();

struct TableComparison {
  std::string name;
  std::vector<Presentation> found;
  std::vector<std::string> missing;     // expected rows not produced
  std::vector<Presentation> unexpected; // produced but not in the table
  std::vector<Presentation> undecided;
  bool pass() const { return missing.empty() && unexpected.empty() && undecided.empty(); }
};

struct TablesReport {
  SearchCaps caps;
  TableComparison fano;
  TableComparison calabi_yau;
  std::vector<std::string> warnings;
  bool pass() const { return fano.pass() && calabi_yau.pass(); }
};

/// Re-derives both tables by enumeration and diffs them against the listings.
TablesReport reproduce_tables(const SearchCaps& caps = {});

}  // namespace wciforge

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pealab/law.hpp"
#include "pealab/pea.hpp"

namespace pealab {

struct SearchOptions {
  int order = 2;
  bool require_lattice = false;
  bool up_to_iso = true;
  std::vector<Law> filter;  // keep models on which every law holds
  int worker_count = 1;
  int max_order = 7;  // raise explicitly for larger runs
};

class OrderTooLarge : public std::invalid_argument {
 public:
  explicit OrderTooLarge(int order, int max_order)
      : std::invalid_argument("order " + std::to_string(order) +
                              " outside 2.." + std::to_string(max_order)) {}
};

/// Lexicographically minimal + table over all relabelings fixing zero
/// and unit. Two PEAs are isomorphic iff their canonical forms coincide.
std::vector<int> canonical_table(int n, const std::vector<int>& oplus);
std::vector<int> canonical_form(const Pea& p);

/// All PEAs of the given order, emitted in canonical-table lexicographic
/// order; with up_to_iso exactly one (canonical) representative per
/// isomorphism class. Deterministic for any worker count.
std::vector<Pea> enumerate_peas(const SearchOptions& opts);
void enumerate_peas(const SearchOptions& opts,
                    const std::function<void(const Pea&)>& emit);

struct Counterexample {
  Pea model;
  Assignment assignment;
};

/// Smallest-order countermodel with the lexicographically first violating
/// assignment, scanning enumerated (lattice) PEAs of orders 2..max_order.
std::optional<Counterexample> search_counterexample(
    const Law& law, int max_order, bool lattice_only,
    Semantics semantics = Semantics::Strong, int worker_count = 1,
    int hard_max_order = 7);

}  // namespace pealab

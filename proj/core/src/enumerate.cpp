#include "pealab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace pealab {

std::vector<int> canonical_table(int n, const std::vector<int>& oplus) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = oplus;
  std::vector<int> image(n * n);
  // Permute the interior 1..n-2, zero and unit stay put.
  do {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int v = oplus[a * n + b];
        image[perm[a] * n + perm[b]] = v == kUndef ? kUndef : perm[v];
      }
    if (image < best) best = image;
  } while (std::next_permutation(perm.begin() + 1, perm.end() - 1));
  return best;
}

std::vector<int> canonical_form(const Pea& p) {
  return canonical_table(p.size(), p.table());
}

namespace {

/// Backtracking filler for the interior block of the + table. Forced
/// cells: zero row/column (neutrality), unit row/column (PE4). Prunings
/// are theorems of PEAs (cancellativity, a+b strictly above a and b,
/// uniqueness of the PE2 complements); the full checker reruns at leaves.
class Search {
 public:
  Search(int n, std::vector<std::pair<int, int>> cells,
         std::function<void(const std::vector<int>&)> leaf)
      : n_(n), cells_(std::move(cells)), leaf_(std::move(leaf)),
        table_(n * n, kUndef), known_(n * n, false) {
    const int u = n_ - 1;
    for (int x = 0; x < n_; ++x) {
      set_forced(0, x, x);
      set_forced(x, 0, x);
    }
    for (int x = 1; x < n_; ++x) {
      set_forced(x, u, kUndef);
      set_forced(u, x, kUndef);
    }
  }

  /// Runs the subtree below a fixed prefix of interior cell values
  /// (kUndef entries allowed); the prefix is assumed pruning-consistent.
  void run(const std::vector<int>& prefix) {
    for (size_t k = 0; k < prefix.size(); ++k) {
      auto [i, j] = cells_[k];
      table_[i * n_ + j] = prefix[k];
      known_[i * n_ + j] = true;
    }
    descend(prefix.size());
    for (size_t k = 0; k < prefix.size(); ++k) {
      auto [i, j] = cells_[k];
      table_[i * n_ + j] = kUndef;
      known_[i * n_ + j] = false;
    }
  }

  /// Enumerates consistent prefixes of the given depth (for distributing
  /// branches to workers).
  std::vector<std::vector<int>> prefixes(size_t depth) {
    std::vector<std::vector<int>> out;
    collect_prefixes(0, depth, out);
    return out;
  }

 private:
  void set_forced(int a, int b, int v) {
    table_[a * n_ + b] = v;
    known_[a * n_ + b] = true;
  }

  bool admissible(int i, int j, int v) const {
    if (v != kUndef) {
      if (v == 0 || v == i || v == j) return false;  // a+b > a, b for a,b != 0
      for (int x = 0; x < n_; ++x) {
        if (known_[i * n_ + x] && x != j && table_[i * n_ + x] == v)
          return false;  // right cancellativity
        if (known_[x * n_ + j] && x != i && table_[x * n_ + j] == v)
          return false;  // left cancellativity
      }
    }
    return true;
  }

  // Exactly one unit per completed interior row/column (PE2: the only
  // candidate complements of an interior element are interior).
  bool row_complete_ok(int i) const {
    int units = 0;
    for (int x = 1; x < n_ - 1; ++x)
      if (table_[i * n_ + x] == n_ - 1) ++units;
    return units == 1;
  }
  bool col_complete_ok(int j) const {
    int units = 0;
    for (int x = 1; x < n_ - 1; ++x)
      if (table_[x * n_ + j] == n_ - 1) ++units;
    return units == 1;
  }

  // Three-valued PE1 scan: flag a violation only when both sides are
  // fully determined by the cells known so far.
  bool pe1_consistent() const {
    enum { kNo = 0, kYes = 1, kMaybe = 2 };
    auto status = [&](int a, int b, int& v) {
      if (!known_[a * n_ + b]) return kMaybe;
      v = table_[a * n_ + b];
      return v == kUndef ? kNo : kYes;
    };
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        int ab;
        int sab = status(a, b, ab);
        if (sab == kMaybe) continue;
        for (int c = 0; c < n_; ++c) {
          int bc;
          int sbc = status(b, c, bc);
          if (sbc == kMaybe) continue;
          int l = kMaybe, lv = kUndef;
          if (sab == kNo)
            l = kNo;
          else {
            int s = status(ab, c, lv);
            if (s != kMaybe) l = s;
          }
          int r = kMaybe, rv = kUndef;
          if (sbc == kNo)
            r = kNo;
          else {
            int s = status(a, bc, rv);
            if (s != kMaybe) r = s;
          }
          if (l == kMaybe || r == kMaybe) continue;
          if (l != r) return false;
          if (l == kYes && lv != rv) return false;
        }
      }
    return true;
  }

  bool consistent_after(int idx) {
    auto [i, j] = cells_[idx];
    if (j == n_ - 2 && !row_complete_ok(i)) return false;
    if (i == n_ - 2 && !col_complete_ok(j)) return false;
    return pe1_consistent();
  }

  void descend(size_t idx) {
    if (idx == cells_.size()) {
      leaf_(table_);
      return;
    }
    auto [i, j] = cells_[idx];
    for (int v = kUndef; v < n_; ++v) {
      if (!admissible(i, j, v)) continue;
      table_[i * n_ + j] = v;
      known_[i * n_ + j] = true;
      if (consistent_after(idx)) descend(idx + 1);
      table_[i * n_ + j] = kUndef;
      known_[i * n_ + j] = false;
    }
  }

  void collect_prefixes(size_t idx, size_t depth,
                        std::vector<std::vector<int>>& out) {
    if (idx == depth || idx == cells_.size()) {
      std::vector<int> p(idx);
      for (size_t k = 0; k < idx; ++k)
        p[k] = table_[cells_[k].first * n_ + cells_[k].second];
      out.push_back(std::move(p));
      return;
    }
    auto [i, j] = cells_[idx];
    for (int v = kUndef; v < n_; ++v) {
      if (!admissible(i, j, v)) continue;
      table_[i * n_ + j] = v;
      known_[i * n_ + j] = true;
      if (consistent_after(idx)) collect_prefixes(idx + 1, depth, out);
      table_[i * n_ + j] = kUndef;
      known_[i * n_ + j] = false;
    }
  }

  int n_;
  std::vector<std::pair<int, int>> cells_;
  std::function<void(const std::vector<int>&)> leaf_;
  std::vector<int> table_;
  std::vector<char> known_;
};

std::vector<std::pair<int, int>> interior_cells(int n) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n - 1; ++i)
    for (int j = 1; j < n - 1; ++j) cells.emplace_back(i, j);
  return cells;
}

bool keep_model(const Pea& p, const SearchOptions& opts) {
  if (opts.require_lattice && !p.is_lattice()) return false;
  if (!opts.filter.empty()) {
    auto m = make_law_model(p);
    for (const Law& law : opts.filter)
      if (!check_law(*m, law).holds) return false;
  }
  return true;
}

/// Tables of all valid models (canonical representatives only when
/// up_to_iso), sorted lexicographically.
std::vector<std::vector<int>> search_tables(const SearchOptions& opts) {
  const int n = opts.order;
  if (n < 2 || n > opts.max_order) throw OrderTooLarge(n, opts.max_order);
  auto cells = interior_cells(n);

  auto subtree = [&](const std::vector<int>& prefix,
                     std::vector<std::vector<int>>& sink) {
    Search s(n, cells, [&](const std::vector<int>& table) {
      auto res = Pea::from_table(n, table, 0, n - 1);
      if (!res.ok()) return;
      if (opts.up_to_iso && canonical_table(n, table) != table) return;
      if (!keep_model(*res.value, opts)) return;
      sink.push_back(table);
    });
    s.run(prefix);
  };

  std::vector<std::vector<int>> tables;
  int workers = std::max(1, opts.worker_count);
  if (workers == 1 || cells.size() < 2) {
    subtree({}, tables);
  } else {
    size_t depth = std::min(cells.size(), static_cast<size_t>(n - 2));
    Search seed(n, cells, [](const std::vector<int>&) {});
    auto prefixes = seed.prefixes(depth);
    std::vector<std::vector<std::vector<int>>> results(prefixes.size());
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (size_t k = next.fetch_add(1); k < prefixes.size();
             k = next.fetch_add(1))
          subtree(prefixes[k], results[k]);
      });
    for (auto& t : pool) t.join();
    for (auto& r : results)
      tables.insert(tables.end(), r.begin(), r.end());
  }
  std::sort(tables.begin(), tables.end());
  return tables;
}

}  // namespace

void enumerate_peas(const SearchOptions& opts,
                    const std::function<void(const Pea&)>& emit) {
  for (const auto& table : search_tables(opts)) {
    auto res = Pea::from_table(opts.order, table, 0, opts.order - 1);
    emit(*res.value);  // soundness: every emitted table re-validates
  }
}

std::vector<Pea> enumerate_peas(const SearchOptions& opts) {
  std::vector<Pea> out;
  enumerate_peas(opts, [&](const Pea& p) { out.push_back(p); });
  return out;
}

std::optional<Counterexample> search_counterexample(
    const Law& law, int max_order, bool lattice_only, Semantics semantics,
    int worker_count, int hard_max_order) {
  for (int order = 2; order <= max_order; ++order) {
    SearchOptions opts;
    opts.order = order;
    opts.require_lattice = lattice_only;
    opts.worker_count = worker_count;
    opts.max_order = hard_max_order;
    for (const Pea& p : enumerate_peas(opts)) {
      auto m = make_law_model(p);
      LawOutcome out = check_law(*m, law, semantics);
      if (!out.holds) return Counterexample{p, out.counterexample};
    }
  }
  return std::nullopt;
}

}  // namespace pealab

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pealab/poset.hpp"
#include "pealab/report.hpp"
#include "pealab/util.hpp"

namespace pealab {

/// Pseudo-effect algebra: partial + table on 0..n-1 with neutral zero and
/// a unit that cannot be summed with anything but zero. The induced order,
/// both subtractions and both complements are precomputed at construction.
class Pea {
 public:
  /// Checks PE1-PE4 literally, asserts the derived consequences (zero
  /// neutrality, agreement of the two order definitions) and validates
  /// the induced bounded poset. Failure reports carry the first witness
  /// in lexicographic tuple order.
  static Result<Pea, CheckReport> from_table(int n, std::vector<int> oplus,
                                             int zero, int unit);

  int size() const { return n_; }
  int zero() const { return zero_; }
  int unit() const { return unit_; }

  bool defined(int a, int b) const { return oplus_[a * n_ + b] != kUndef; }
  int oplus(int a, int b) const { return oplus_[a * n_ + b]; }

  const Poset& order() const { return order_; }
  bool leq(int a, int b) const { return order_.leq(a, b); }
  bool is_lattice() const { return order_.is_lattice(); }

  /// b \ a: the unique x with b = x (+) a. Requires a <= b.
  int left_diff(int b, int a) const;
  /// a / b: the unique y with b = a (+) y. Requires a <= b.
  int right_diff(int a, int b) const;

  /// a^- = 1 \ a (unique e with e (+) a = 1).
  int compl_left(int a) const { return compl_left_[a]; }
  /// a^~ = a / 1 (unique d with a (+) d = 1).
  int compl_right(int a) const { return compl_right_[a]; }

  const std::vector<int>& table() const { return oplus_; }

  bool operator==(const Pea& o) const {
    return n_ == o.n_ && oplus_ == o.oplus_;
  }

 private:
  Pea(int n, std::vector<int> oplus, int zero, int unit, Poset order,
      std::vector<int> cl, std::vector<int> cr)
      : n_(n),
        oplus_(std::move(oplus)),
        zero_(zero),
        unit_(unit),
        order_(std::move(order)),
        compl_left_(std::move(cl)),
        compl_right_(std::move(cr)) {}

  int n_;
  std::vector<int> oplus_;
  int zero_;
  int unit_;
  Poset order_;
  std::vector<int> compl_left_;
  std::vector<int> compl_right_;
};

}  // namespace pealab

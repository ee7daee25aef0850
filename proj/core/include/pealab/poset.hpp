#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pealab/util.hpp"

namespace pealab {

enum class PosetErrorKind {
  NotReflexive,
  NotAntisymmetric,
  NotTransitive,
  BoundsViolated,
};

struct PosetError {
  PosetErrorKind kind;
  int x = -1;
  int y = -1;
  std::string message() const;
};

/// Finite bounded poset on elements 0..n-1. Immutable after validation;
/// all queries are pure.
class Poset {
 public:
  static Result<Poset, PosetError> validate(int n, std::vector<uint8_t> leq,
                                            int bottom, int top);

  int size() const { return n_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool leq(int x, int y) const { return leq_[x * n_ + y] != 0; }
  bool lt(int x, int y) const { return x != y && leq(x, y); }

  /// Greatest lower bound, or nullopt if no unique greatest lower bound.
  std::optional<int> meet(int x, int y) const;
  /// Least upper bound, or nullopt.
  std::optional<int> join(int x, int y) const;

  /// nullopt iff every pair has both meet and join; otherwise the first
  /// failing pair in lexicographic order.
  std::optional<std::pair<int, int>> lattice_failure() const;
  bool is_lattice() const { return !lattice_failure().has_value(); }

  const std::vector<uint8_t>& relation() const { return leq_; }

  bool operator==(const Poset& o) const {
    return n_ == o.n_ && leq_ == o.leq_;
  }

 private:
  Poset(int n, std::vector<uint8_t> leq, int bottom, int top)
      : n_(n), leq_(std::move(leq)), bottom_(bottom), top_(top) {}

  int n_;
  std::vector<uint8_t> leq_;
  int bottom_;
  int top_;
};

}  // namespace pealab

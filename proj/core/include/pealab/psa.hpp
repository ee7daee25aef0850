#pragma once

#include <utility>
#include <vector>

#include "pealab/poset.hpp"
#include "pealab/report.hpp"
#include "pealab/util.hpp"

namespace pealab {

/// Pseudo Sasaki algebra: a bounded poset with a pseudo-involution pair
/// ^- / ^~ and two total products. Axioms checked at construction:
///   (1) pseudo-involution  (2) unity  (3) self-adjointness
///   (4) divisibility       (5) partial associativity
///   (6) (a^~ . b^~)^- = (b^- * a^-)^~ for a <= b^-
/// plus the derived zero/absorption identities.
class Psa {
 public:
  static Result<Psa, CheckReport> check(Poset poset, std::vector<int> circ,
                                        std::vector<int> star,
                                        std::vector<int> neg,
                                        std::vector<int> til);

  int size() const { return poset_.size(); }
  const Poset& poset() const { return poset_; }
  bool leq(int a, int b) const { return poset_.leq(a, b); }

  int circ(int a, int b) const { return circ_[a * size() + b]; }
  int star(int a, int b) const { return star_[a * size() + b]; }
  int compl_left(int a) const { return neg_[a]; }   // a^-
  int compl_right(int a) const { return til_[a]; }  // a^~

  const std::vector<int>& circ_table() const { return circ_; }
  const std::vector<int>& star_table() const { return star_; }
  const std::vector<int>& neg_table() const { return neg_; }
  const std::vector<int>& til_table() const { return til_; }

  bool operator==(const Psa& o) const {
    return poset_ == o.poset_ && circ_ == o.circ_ && star_ == o.star_ &&
           neg_ == o.neg_ && til_ == o.til_;
  }

 private:
  Psa(Poset poset, std::vector<int> circ, std::vector<int> star,
      std::vector<int> neg, std::vector<int> til)
      : poset_(std::move(poset)),
        circ_(std::move(circ)),
        star_(std::move(star)),
        neg_(std::move(neg)),
        til_(std::move(til)) {}

  Poset poset_;
  std::vector<int> circ_;
  std::vector<int> star_;
  std::vector<int> neg_;
  std::vector<int> til_;
};

/// a -> b := (a . b^~)^-  and  a ~> b := (a * b^-)^~ . The resulting
/// tables satisfy residuation over s's order; broken residuation would
/// mean the PSA checker let an invalid structure through.
std::pair<std::vector<int>, std::vector<int>> derived_implications(
    const Psa& s);

}  // namespace pealab

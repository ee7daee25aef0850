#pragma once

#include <set>
#include <utility>
#include <vector>

#include "pealab/poset.hpp"
#include "pealab/report.hpp"
#include "pealab/util.hpp"

namespace pealab {

/// Optional laws (d)-(g) of a conditional double CI-poset.
enum class CdciLaw {
  PseudoInvolution,  // (d)
  Divisibility,      // (e)
  Associativity,     // (f), Kleene-equality: one side defined iff the other
  PeaCondition,      // (g) (y^- * x^-)^~ = (x^~ . y^~)^-
};

/// Conditional double CI-poset: four partial tables whose domains are
/// dictated by the order and the complement columns:
///   x->y, x~>y defined iff y <= x
///   x.y defined iff (y->0) <= x        x*y defined iff (y~>0) <= x
class Cdcip {
 public:
  static Result<Cdcip, CheckReport> check(
      Poset poset, std::vector<int> circ, std::vector<int> star,
      std::vector<int> arrow, std::vector<int> squiggle,
      const std::set<CdciLaw>& optional_laws = {});

  int size() const { return poset_.size(); }
  const Poset& poset() const { return poset_; }
  bool leq(int a, int b) const { return poset_.leq(a, b); }

  int circ(int a, int b) const { return circ_[a * size() + b]; }
  int star(int a, int b) const { return star_[a * size() + b]; }
  int arrow(int a, int b) const { return arrow_[a * size() + b]; }
  int squiggle(int a, int b) const { return squiggle_[a * size() + b]; }
  int compl_left(int a) const { return arrow(a, poset_.bottom()); }
  int compl_right(int a) const { return squiggle(a, poset_.bottom()); }

  const std::vector<int>& circ_table() const { return circ_; }
  const std::vector<int>& star_table() const { return star_; }
  const std::vector<int>& arrow_table() const { return arrow_; }
  const std::vector<int>& squiggle_table() const { return squiggle_; }

  AxiomVerdict optional_law(CdciLaw law) const;
  const CheckReport& report() const { return report_; }

 private:
  Cdcip(Poset poset, std::vector<int> circ, std::vector<int> star,
        std::vector<int> arrow, std::vector<int> squiggle)
      : poset_(std::move(poset)),
        circ_(std::move(circ)),
        star_(std::move(star)),
        arrow_(std::move(arrow)),
        squiggle_(std::move(squiggle)) {}

  Poset poset_;
  std::vector<int> circ_;
  std::vector<int> star_;
  std::vector<int> arrow_;
  std::vector<int> squiggle_;
  CheckReport report_;
};

}  // namespace pealab

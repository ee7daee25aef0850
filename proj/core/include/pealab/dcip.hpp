#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pealab/poset.hpp"
#include "pealab/report.hpp"
#include "pealab/util.hpp"

namespace pealab {

/// Optional laws a double CI-poset may satisfy on top of unity and
/// residuation. SelfAdjointness uses the product orientation
///   a.b <= c  iff  a*c^- <= b^-      a*b <= c  iff  a.c^~ <= b^~
/// while SelfAdjointnessPrinted keeps "." on both right-hand sides of the
/// first equivalence; both are exposed, no reading is baked in.
enum class OptionalLaw {
  PseudoInvolution,
  Divisibility,
  OrthoExchange,
  SelfAdjointness,
  SelfAdjointnessPrinted,
};

/// Double CI-poset: bounded poset with total conjunctions . and * and
/// implications -> and ~> tied pairwise by residuation. Complements are
/// a^- = a->0 and a^~ = a~>0.
class Dcip {
 public:
  /// Mandatory axioms (unity, residuation) plus the deduction law are
  /// checked; each requested optional law gets a verdict in the report
  /// attached to the returned structure (optional failures do not reject).
  static Result<Dcip, CheckReport> check(
      Poset poset, std::vector<int> circ, std::vector<int> star,
      std::vector<int> arrow, std::vector<int> squiggle,
      const std::set<OptionalLaw>& optional_laws = {});

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

  /// Verdict of one optional law on an already validated structure.
  AxiomVerdict optional_law(OptionalLaw law) const;

  const CheckReport& report() const { return report_; }

 private:
  Dcip(Poset poset, std::vector<int> circ, std::vector<int> star,
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

/// Theorem-level distribution checks on a DCI-lattice: conjunction
/// preserves finite suprema and implication preserves finite infima,
/// over all families of at most max_family elements. Returns the first
/// violating tuple (a, family...) or nullopt.
std::optional<std::vector<int>> sup_inf_preservation_failure(
    const Dcip& d, int max_family);

}  // namespace pealab

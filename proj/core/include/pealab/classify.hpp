#pragma once

#include <optional>
#include <string>

#include "pealab/pea.hpp"
#include "pealab/psa.hpp"

namespace pealab {

/// (a \/ b) \ a = b \ (a /\ b) and (a \/ b) \ b = a \ (a /\ b), with the
/// equivalent / -form verified to agree. Lattice-ordered input only.
bool compatible(const Pea& p, int a, int b);

/// b * a^- = a^- . b and a * b^- = b^- . a, with the equivalent
/// tilde form verified to agree.
bool pseudocommute(const Psa& s, int a, int b);

struct ClassifyFlags {
  bool is_lattice = false;
  bool is_effect_algebra = false;   // (+) commutes as a partial operation
  bool same_complements = false;    // a^- = a^~ for every a
  bool is_good = false;             // (x^-(+)y^-)^~ = (x^~(+)y^~)^-
  // Lattice-only flags:
  std::optional<bool> is_pseudo_mv;              // a*b = b.a for all pairs
  std::optional<bool> all_pairs_compatible;
  std::optional<bool> arrow_eq_squiggle_on_leq;  // x->y = x~>y when y<=x
  std::optional<int> compatible_pair_count;      // unordered pairs

  /// The pseudo-MV identity and all-pairs compatibility are computed
  /// independently; a model separating them is reported, not assumed away.
  bool pseudo_mv_vs_compatibility_agree() const {
    if (!is_pseudo_mv || !all_pairs_compatible) return true;
    return *is_pseudo_mv == *all_pairs_compatible;
  }

  std::string to_string() const;
};

ClassifyFlags classify(const Pea& p);

}  // namespace pealab

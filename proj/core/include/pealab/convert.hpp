#pragma once

#include "pealab/cdcip.hpp"
#include "pealab/dcip.hpp"
#include "pealab/pea.hpp"
#include "pealab/psa.hpp"
#include "pealab/util.hpp"

namespace pealab {

/// Sasaki products on a lattice-ordered PEA:
///   a . b := (a /\ b^-) / a      a * b := a \ (a /\ b^~)
/// Throws ConversionError("NotLattice") on a non-lattice order. The
/// output is re-validated through Psa::check; conversion is not trusted.
Psa lpea_to_psa(const Pea& p);

/// a (+) b := (a^~ . b^~)^- = (b^- * a^-)^~ on a <= b^-. Throws
/// ConversionError("ExpressionMismatch") if the two defining forms
/// disagree. Output re-validated; its induced order must equal s's.
Pea psa_to_pea(const Psa& s);

/// Wraps derived_implications; the result passes Dcip::check, is a
/// lattice, and the divisibility formulas reproduce meet and join.
Dcip psa_to_dcilattice(const Psa& s);

/// x . y := y^- / x on y^- <= x, x * y := x \ y^~ on y^~ <= x,
/// x -> y := (x . y^~)^- and x ~> y := (x * y^-)^~ on y <= x. The output
/// passes Cdcip::check with all of (d)-(g); equivalently x->y = x^-(+)y
/// and x~>y = y(+)x^~, both forms asserted to agree.
Cdcip pea_to_cdcip(const Pea& p);

/// x (+) y := (y^- * x^-)^~ = (x^~ . y^~)^- on x <= y^-. Requires a
/// conditional double CI-poset satisfying (d)-(g); throws
/// ConversionError("ExpressionMismatch") when the forms disagree and
/// ConversionError("OrderMismatch") when the induced order drifts.
Pea cdcip_to_pea(const Cdcip& r);

}  // namespace pealab

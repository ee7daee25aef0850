#pragma once

#include "pealab/pea.hpp"

namespace pealab {

/// n-element Lukasiewicz chain: i (+) j = i+j when i+j <= n-1.
Pea make_chain_pea(int n);

inline Pea make_e2() { return make_chain_pea(2); }
inline Pea make_mv3() { return make_chain_pea(3); }
inline Pea make_mv4() { return make_chain_pea(4); }

/// Boolean 2x2 diamond 0 < p,q < 1 with p (+) q = q (+) p = 1.
Pea make_b4();

}  // namespace pealab

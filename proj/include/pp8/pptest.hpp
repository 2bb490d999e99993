#pragma once

#include "pp8/octic.hpp"

namespace pp8 {

/// Early-exit permutation test: evaluates f at e^j for
/// j = 0..floor(q - (q-1)/8) and fails on the first repeated value.
/// Exact for degree 8 by Wan's value-set bound, which makes that many
/// distinct values already certify a permutation. Requires q >= 16 so the
/// probed inputs e^j are pairwise distinct.
bool is_pp_wan(const Octic& f);

/// Ground truth: evaluates f on all q inputs and checks bijectivity.
bool is_pp_brute(const Octic& f);

}  // namespace pp8

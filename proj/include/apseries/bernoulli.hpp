#pragma once

#include "apseries/rational.hpp"

namespace apseries {

// Exact Bernoulli number B_m (B_1 = -1/2 convention), computed by the
// defining recurrence sum_{j<=m} C(m+1,j) B_j = 0 and cached process-wide.
// Thread-safe; cached values are immutable once published.
const Rat& bernoulli(unsigned m);

}  // namespace apseries

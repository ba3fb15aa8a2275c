#pragma once

#include <vector>

#include "mcb/rational.hpp"

namespace mcb {

// Rank over the rationals by fraction-free (Bareiss) elimination.  Rows
// are scaled to integers first (rank is invariant under row scaling);
// every division in the elimination is exact, which is asserted.
int rank_exact(std::vector<std::vector<Rat>> rows);

// Integer-matrix variant used directly by callers that already cleared
// denominators.
int rank_exact_int(std::vector<std::vector<Int>> rows);

}  // namespace mcb

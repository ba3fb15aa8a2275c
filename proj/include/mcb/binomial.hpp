#pragma once

#include <vector>

#include "mcb/rational.hpp"

namespace mcb {

// Exact binomial coefficient; returns 0 when k > n or either argument
// is negative.
Int binom(const Int& n, const Int& k);

// dim of the degree-d component of a polynomial ring in r variables:
// N(r,d) = C(r-1+d, d).  Rejects r < 1.
Int dim_n(int r, int d);

// One summand C(k, index) of a Macaulay binomial representation.
struct MacaulayTerm {
    int index;  // lower index, runs d, d-1, ... down to where the remainder hits 0
    Int k;      // upper index, k >= index
};

// The d-th Macaulay representation of a >= 1:
//   a = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_j, j)
// with k_d > k_{d-1} > ... > k_j >= j >= 1, computed greedily from the
// top.  The representation is unique.
std::vector<MacaulayTerm> macaulay_rep(const Int& a, int d);

// Macaulay growth bound a^<d>: the maximal value an O-sequence may take
// in degree d+1 given value a in degree d.  a = 0 returns 0.
Int macaulay_growth(const Int& a, int d);

}  // namespace mcb

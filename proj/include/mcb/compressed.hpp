#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcb/hvector.hpp"
#include "mcb/rational.hpp"

namespace mcb {

// The Froberg-Laksov data attached to a codimension r and socle-vector s:
//   r_d = N(r,d) - sum_{i=0}^{c-d} N(r,i) s_{d+i},
// the pivot b (unique index with r_{b-1} < 0 <= r_b), the initial degree
// t of the associated ideal (t = b when r_b > 0, t = b+1 when r_b = 0),
// and the entrywise-maximal h-vector H with H_i = min(N(r,i) - r_i, N(r,i)).
struct CompressedProfile {
    int r;
    SocleVector s;
    std::vector<Int> r_values;  // r_0 .. r_c
    int b;
    int t;
    bool extremely_compressed;  // r_b == 0
    HVector H;
};

// Computes the profile.  Throws std::invalid_argument when r < 1, when
// no pivot index exists (r_0 >= 0 or r_c < 0; only possible for r = 1 or
// a socle-vector no algebra realizes), or -- with
// require_compressed_support -- when s has a positive entry below b
// (compressed algebras require s_1 = ... = s_{b-1} = 0).
CompressedProfile fl_numbers(int r, const SocleVector& s,
                             bool require_compressed_support = true);

// Socle-vector recovery by descending induction:
//   s_c = h_c,   s_d = max(0, h_d - sum_{i=1}^{c-d} N(3,i) s_{d+i}),
// followed by regenerating H from the recovered s and comparing to h.
// Returns the socle-vector when h really is a compressed h-vector,
// std::nullopt otherwise (a normal outcome, not an error).  Requires an
// O-sequence with h_1 = 3.
std::optional<SocleVector> recover_socle(const HVector& h);

// The two resolution quantities forced at the edge of a compressed
// profile (codimension 3 only):
//   beta_2_t_plus_2 = -r_{t-1}  (zero exactly when extremely compressed)
//   D = t(t+2) - sum_{j=q}^{c} s_j (j-t+1)(j-t+3)
// D is the excess of the second module over the first in degree t+1.
struct BettiEdge {
    Int beta_2_t_plus_2;
    Int D;
};

BettiEdge betti_edge(const CompressedProfile& p);

enum class McCase { extreme, d_neg, d_pos, d_zero };

std::string mc_case_name(McCase c);

// Case-selected multiplicity bounds for a compressed profile:
//   extreme (r_b = 0):       t(t+1)(q+3)/6 <= e <= t(t+1)(c+3)/6
//   d_neg   (r_b > 0, D < 0): t(t+2)(q+3)/6 <= e <= (t+1)(t+2)(c+3)/6
//   d_pos   (r_b > 0, D > 0): t(t+1)(q+3)/6 <= e <= t(t+2)(c+3)/6
//   d_zero  (r_b > 0, D = 0): t(t+2)(q+3)/6 <= e <= t(t+2)(c+3)/6
struct McBoundPair {
    Rat lower;
    Rat upper;
    McCase case_tag;
};

// Codimension 3 only.  The bounds always bracket the multiplicity of H;
// a violation throws std::logic_error (an implementation bug, never bad
// input).
McBoundPair compressed_mc_bounds(const CompressedProfile& p);

// e = N(4,t-1) + sum_{j} N(4,j-t) s_j (terms with j < t contribute
// nothing).  Codimension 3 only; cross-checked against the entry sum of
// H, mismatch throws std::logic_error.
Int multiplicity_formula(const CompressedProfile& p);

}  // namespace mcb

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcb/rational.hpp"

namespace mcb {

// h-vector of an artinian graded algebra: (h_0 = 1, h_1, ..., h_c) with
// h_c > 0 and no internal zero followed by a positive entry (such a
// sequence is never the Hilbert function of a standard graded algebra).
// Trailing zeros are trimmed on construction; the socle degree c is the
// last index and the multiplicity e (entry sum) is cached.
class HVector {
public:
    explicit HVector(std::vector<Int> entries);

    // Parses "1,3,4,4,3,1" or "(1,3,4,4,3,1)"; whitespace around tokens
    // is ignored.  Throws std::invalid_argument on malformed input.
    static HVector parse(std::string_view text);

    const std::vector<Int>& entries() const { return entries_; }
    int c() const { return static_cast<int>(entries_.size()) - 1; }
    const Int& e() const { return e_; }

    // Entry at any degree, zero outside 0..c.
    const Int& at(int degree) const;

    std::string str() const;  // "1,3,4,4,3,1"

    bool operator==(const HVector&) const = default;

private:
    std::vector<Int> entries_;
    Int e_;
};

// Socle-vector (s_0 = 0, ..., s_c) with s_c > 0.  q is the first index
// with a positive entry, type the entry sum.  Internal zeros are fine.
class SocleVector {
public:
    explicit SocleVector(std::vector<Int> entries);
    static SocleVector parse(std::string_view text);

    const std::vector<Int>& entries() const { return entries_; }
    int c() const { return static_cast<int>(entries_.size()) - 1; }
    int q() const { return q_; }
    const Int& type() const { return type_; }
    const Int& at(int degree) const;

    std::string str() const;

    bool operator==(const SocleVector&) const = default;

private:
    std::vector<Int> entries_;
    int q_;
    Int type_;
};

// The coefficients of h(z)(1-z)^3 beyond the constant term:
//   f(n) = h_n - 3 h_{n-1} + 3 h_{n-2} - h_{n-3},   n = 1 .. c+3,
// with h extended by zero outside 0..c.  Negative values below c+3
// force shifts in the first module of a minimal free resolution (level
// case), positive values force shifts in the second.
class FProfile {
public:
    FProfile(int c, std::vector<Int> values);

    int c() const { return c_; }
    int n_min() const { return 1; }
    int n_max() const { return c_ + 3; }
    const Int& f(int n) const;  // n in 1..c+3
    const std::vector<Int>& values() const { return values_; }

private:
    int c_;
    std::vector<Int> values_;  // values_[n-1] = f(n)
};

// Extremal indices of the f-profile.  t always exists (the profile sums
// to -1); i, j, m are encoded as absent when no qualifying index exists,
// although for a valid h-vector all four are in fact always present.
struct InvariantSet {
    int t;                  // smallest n with f(n) < 0
    std::optional<int> i;   // smallest n with f(n) > 0
    std::optional<int> j;   // largest  n with f(n) > 0
    std::optional<int> m;   // largest  n < c+3 with f(n) < 0
};

// True iff h_0 = 1 and h_{d+1} <= h_d^<d> for all 1 <= d < c.
bool is_o_sequence(const HVector& h);

FProfile f_profile(const HVector& h);
InvariantSet invariants(const HVector& h);

// Entry sum of h.
Int multiplicity(const HVector& h);

// Recovers e from the profile alone via -(1/6) * sum n(n-1)(n-2) f(n).
// Throws std::domain_error when the result is non-integral or
// nonpositive (a corrupted profile).
Int multiplicity_from_profile(const FProfile& p);

}  // namespace mcb

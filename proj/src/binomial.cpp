#include "mcb/binomial.hpp"

#include <stdexcept>

namespace mcb {

Int binom(const Int& n, const Int& k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Int kk = k;
    if (n - kk < kk) kk = n - kk;
    if (kk > 1000000) {
        throw std::overflow_error("binom: reduced lower index too large to evaluate");
    }
    const auto steps = kk.convert_to<unsigned long long>();
    Int result = 1;
    for (unsigned long long i = 1; i <= steps; ++i) {
        result *= n - Int(i) + 1;
        result /= Int(i);  // exact at every step
    }
    return result;
}

Int dim_n(int r, int d) {
    if (r < 1) throw std::invalid_argument("dim_n: codimension must be >= 1");
    if (d < 0) throw std::invalid_argument("dim_n: degree must be >= 0");
    return binom(Int(r - 1 + d), Int(d));
}

namespace {

// Largest k >= index with C(k, index) <= rem.  rem >= 1.
Int greedy_upper_index(const Int& rem, int index) {
    Int lo = index;        // C(index, index) = 1 <= rem
    Int hi = lo + 1;
    while (binom(hi, Int(index)) <= rem) {
        lo = hi;
        hi *= 2;
    }
    while (lo + 1 < hi) {
        Int mid = (lo + hi) / 2;
        if (binom(mid, Int(index)) <= rem) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace

std::vector<MacaulayTerm> macaulay_rep(const Int& a, int d) {
    if (a < 1) throw std::invalid_argument("macaulay_rep: a must be >= 1");
    if (d < 1) throw std::invalid_argument("macaulay_rep: degree must be >= 1");
    std::vector<MacaulayTerm> rep;
    Int rem = a;
    for (int index = d; index >= 1 && rem > 0; --index) {
        Int k = greedy_upper_index(rem, index);
        rem -= binom(k, Int(index));
        rep.push_back({index, std::move(k)});
    }
    return rep;
}

Int macaulay_growth(const Int& a, int d) {
    if (a < 0) throw std::invalid_argument("macaulay_growth: a must be >= 0");
    if (d < 1) throw std::invalid_argument("macaulay_growth: degree must be >= 1");
    if (a == 0) return 0;
    Int total = 0;
    for (const auto& term : macaulay_rep(a, d)) {
        total += binom(term.k + 1, Int(term.index + 1));
    }
    return total;
}

}  // namespace mcb

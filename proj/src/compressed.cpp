#include "mcb/compressed.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcb/binomial.hpp"

namespace mcb {

CompressedProfile fl_numbers(int r, const SocleVector& s, bool require_compressed_support) {
    if (r < 1) throw std::invalid_argument("fl_numbers: codimension must be >= 1");
    const int c = s.c();

    std::vector<Int> r_values;
    r_values.reserve(static_cast<size_t>(c + 1));
    for (int d = 0; d <= c; ++d) {
        Int rd = dim_n(r, d);
        for (int i = 0; i <= c - d; ++i) {
            rd -= dim_n(r, i) * s.at(d + i);
        }
        r_values.push_back(std::move(rd));
    }

    if (r_values[0] >= 0 || r_values[static_cast<size_t>(c)] < 0) {
        throw std::invalid_argument(
            "fl_numbers: no pivot index (needs r_0 < 0 <= r_c; socle-vector "
            "admits no compressed algebra)");
    }
    int b = 1;
    while (r_values[static_cast<size_t>(b)] < 0) ++b;

    if (require_compressed_support) {
        for (int d = 1; d < b; ++d) {
            if (s.at(d) > 0) {
                throw std::invalid_argument(
                    "fl_numbers: socle entry s_" + std::to_string(d) +
                    " > 0 below the pivot b = " + std::to_string(b) +
                    " (compressed algebras need s_1 = ... = s_{b-1} = 0)");
            }
        }
    }

    const bool extreme = r_values[static_cast<size_t>(b)] == 0;
    const int t = extreme ? b + 1 : b;

    std::vector<Int> entries;
    entries.reserve(static_cast<size_t>(c + 1));
    for (int d = 0; d <= c; ++d) {
        const Int nd = dim_n(r, d);
        entries.push_back(std::min(nd - r_values[static_cast<size_t>(d)], nd));
    }

    return CompressedProfile{r,
                             s,
                             std::move(r_values),
                             b,
                             t,
                             extreme,
                             HVector(std::move(entries))};
}

std::optional<SocleVector> recover_socle(const HVector& h) {
    if (h.at(1) != 3) {
        throw std::invalid_argument("recover_socle: requires h_1 = 3");
    }
    if (!is_o_sequence(h)) {
        throw std::invalid_argument("recover_socle: input is not an O-sequence");
    }
    const int c = h.c();
    std::vector<Int> s(static_cast<size_t>(c + 1), 0);
    for (int d = c; d >= 1; --d) {
        Int v = h.at(d);
        for (int i = 1; i <= c - d; ++i) {
            v -= dim_n(3, i) * s[static_cast<size_t>(d + i)];
        }
        if (v > 0) s[static_cast<size_t>(d)] = std::move(v);
    }

    SocleVector recovered{std::move(s)};
    try {
        if (fl_numbers(3, recovered).H == h) return recovered;
    } catch (const std::invalid_argument&) {
        // recovered vector has support below its pivot: not compressed
    }
    return std::nullopt;
}

namespace {

void require_codim3(const CompressedProfile& p, const char* who) {
    if (p.r != 3) {
        throw std::invalid_argument(std::string(who) +
                                    ": only defined in codimension 3");
    }
}

}  // namespace

BettiEdge betti_edge(const CompressedProfile& p) {
    require_codim3(p, "betti_edge");
    BettiEdge edge;
    edge.beta_2_t_plus_2 = -p.r_values[static_cast<size_t>(p.t - 1)];
    Int d = Int(p.t) * (p.t + 2);
    for (int j = p.s.q(); j <= p.s.c(); ++j) {
        d -= p.s.at(j) * (j - p.t + 1) * (j - p.t + 3);
    }
    edge.D = std::move(d);
    return edge;
}

McBoundPair compressed_mc_bounds(const CompressedProfile& p) {
    require_codim3(p, "compressed_mc_bounds");
    const int t = p.t;
    const int q = p.s.q();
    const int c = p.s.c();

    McBoundPair out;
    if (p.extremely_compressed) {
        out.case_tag = McCase::extreme;
        out.lower = Rat(Int(t) * (t + 1) * (q + 3), 6);
        out.upper = Rat(Int(t) * (t + 1) * (c + 3), 6);
    } else {
        const Int D = betti_edge(p).D;
        if (D < 0) {
            out.case_tag = McCase::d_neg;
            out.lower = Rat(Int(t) * (t + 2) * (q + 3), 6);
            out.upper = Rat(Int(t + 1) * (t + 2) * (c + 3), 6);
        } else if (D > 0) {
            out.case_tag = McCase::d_pos;
            out.lower = Rat(Int(t) * (t + 1) * (q + 3), 6);
            out.upper = Rat(Int(t) * (t + 2) * (c + 3), 6);
        } else {
            out.case_tag = McCase::d_zero;
            out.lower = Rat(Int(t) * (t + 2) * (q + 3), 6);
            out.upper = Rat(Int(t) * (t + 2) * (c + 3), 6);
        }
    }

    const Rat e(p.H.e());
    if (!(out.lower <= e && e <= out.upper)) {
        throw std::logic_error("compressed_mc_bounds: bounds fail to bracket e (bug)");
    }
    return out;
}

std::string mc_case_name(McCase c) {
    switch (c) {
        case McCase::extreme: return "EXTREME";
        case McCase::d_neg: return "D_NEG";
        case McCase::d_pos: return "D_POS";
        case McCase::d_zero: return "D_ZERO";
    }
    return "?";
}

Int multiplicity_formula(const CompressedProfile& p) {
    require_codim3(p, "multiplicity_formula");
    Int e = dim_n(4, p.t - 1);
    for (int j = std::max(p.s.q(), p.t); j <= p.s.c(); ++j) {
        e += dim_n(4, j - p.t) * p.s.at(j);
    }
    if (e != p.H.e()) {
        throw std::logic_error("multiplicity_formula: disagrees with entry sum (bug)");
    }
    return e;
}

}  // namespace mcb

#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mcb/hvector.hpp"
#include "mcb/rational.hpp"

namespace mcb {

enum class Tri { holds, fails, inapplicable };

std::string tri_name(Tri t);

// Classification predicates for a codimension 3 h-vector.  The first
// five are cheap reads of h (plus socle recovery for compressed);
// extreme_nonlevel marks h-vectors of extremely compressed algebras
// whose recovered socle is not concentrated in the top degree.
enum class CaseTag {
    compressed,       // recover_socle succeeds with q = c (level socle)
    ends_3_2,         // h_{c-1} = 3, h_c = 2
    h2_le_4,          // h_2 <= 4
    tail_iv,          // h_{c-1} <= h_c + 1
    begins_1345,      // h starts (1,3,4,5)
    extreme_nonlevel  // recovered socle exists, extreme, q < c
};

std::string case_tag_name(CaseTag t);

// Exact evaluation of the h-vector multiplicity bounds
//   t*i*(c+3)/6 <= e <= m*j*(c+3)/6
// for a codimension 3 level algebra, together with the implication and
// classification flags that make batch reports self-describing.
struct BoundReport {
    HVector h;
    InvariantSet inv;
    Int e;
    std::optional<Rat> lower, upper;
    Tri lower_holds = Tri::inapplicable;
    Tri upper_holds = Tri::inapplicable;
    bool lower_sharp = false;
    bool upper_sharp = false;
    bool mc_lower_implied = false;  // lower bound implies the shift-product lower bound
    bool assume_level = false;
    std::set<CaseTag> case_tags;
    std::vector<std::string> notes;
};

// (lower, upper); each absent when the needed invariant does not exist.
// Requires h_1 = 3.
std::pair<std::optional<Rat>, std::optional<Rat>> conjecture_bounds(const HVector& h);

// Full report.  assume_level is a caller assertion: levelness cannot be
// decided from h alone, and without it the upper bound only carries
// conjectural meaning (noted in the report).
BoundReport check_bounds(const HVector& h, bool assume_level);

// The five structural case tags (everything except extreme_nonlevel,
// which check_bounds adds on its own).  Requires h_1 = 3.
std::set<CaseTag> classify_37(const HVector& h);

// Shift-product bounds from explicit minimal/maximal resolution shifts
// (m_1 m_2 m_3 / 6, M_1 M_2 M_3 / 6); used when true shift data is
// supplied from outside rather than forced by h.
std::pair<Rat, Rat> mc_bounds_from_shifts(const std::array<Int, 3>& min_shifts,
                                          const std::array<Int, 3>& max_shifts);

nlohmann::json report_to_json(const BoundReport& report);
BoundReport report_from_json(const nlohmann::json& j);

std::string report_csv_header();
std::string report_csv_row(const BoundReport& report);

}  // namespace mcb

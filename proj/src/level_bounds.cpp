#include "mcb/level_bounds.hpp"

#include <stdexcept>

#include "mcb/compressed.hpp"

namespace mcb {

namespace {

void require_h1_is_3(const HVector& h, const char* who) {
    if (h.at(1) != 3) {
        throw std::invalid_argument(std::string(who) + ": requires h_1 = 3");
    }
}

// The finite list covering the boundary h_{c-1} = h_c + 1, h_{c-2} <= 3:
// (1,3,3,...,3,2) for any c >= 2, plus (1,3,4,3), (1,3,5,4), (1,3,6,5).
bool in_tail_boundary_list(const HVector& h) {
    const int c = h.c();
    if (c >= 2 && h.at(c) == 2) {
        bool all_threes = true;
        for (int d = 1; d < c; ++d) {
            if (h.at(d) != 3) { all_threes = false; break; }
        }
        if (all_threes) return true;
    }
    for (const char* s : {"1,3,4,3", "1,3,5,4", "1,3,6,5"}) {
        if (h == HVector::parse(s)) return true;
    }
    return false;
}

}  // namespace

std::string tri_name(Tri t) {
    switch (t) {
        case Tri::holds: return "holds";
        case Tri::fails: return "fails";
        case Tri::inapplicable: return "inapplicable";
    }
    return "?";
}

std::string case_tag_name(CaseTag t) {
    switch (t) {
        case CaseTag::compressed: return "COMPRESSED";
        case CaseTag::ends_3_2: return "ENDS_3_2";
        case CaseTag::h2_le_4: return "H2_LE_4";
        case CaseTag::tail_iv: return "TAIL_IV";
        case CaseTag::begins_1345: return "BEGINS_1345";
        case CaseTag::extreme_nonlevel: return "EXTREME_NONLEVEL";
    }
    return "?";
}

std::pair<std::optional<Rat>, std::optional<Rat>> conjecture_bounds(const HVector& h) {
    require_h1_is_3(h, "conjecture_bounds");
    const InvariantSet inv = invariants(h);
    const Int c3 = h.c() + 3;
    std::optional<Rat> lower, upper;
    if (inv.i) lower = Rat(Int(inv.t) * *inv.i * c3, 6);
    if (inv.m && inv.j) upper = Rat(Int(*inv.m) * *inv.j * c3, 6);
    return {lower, upper};
}

std::set<CaseTag> classify_37(const HVector& h) {
    require_h1_is_3(h, "classify_37");
    std::set<CaseTag> tags;
    const int c = h.c();

    std::optional<SocleVector> socle;
    try {
        socle = recover_socle(h);
    } catch (const std::invalid_argument&) {
        // not an O-sequence: cannot be compressed
    }
    if (socle && socle->q() == c) tags.insert(CaseTag::compressed);
    if (h.at(c - 1) == 3 && h.at(c) == 2) tags.insert(CaseTag::ends_3_2);
    if (h.at(2) <= 4) tags.insert(CaseTag::h2_le_4);
    if (h.at(c - 1) <= h.at(c) + 1) tags.insert(CaseTag::tail_iv);
    if (c >= 3 && h.at(1) == 3 && h.at(2) == 4 && h.at(3) == 5) {
        tags.insert(CaseTag::begins_1345);
    }
    return tags;
}

BoundReport check_bounds(const HVector& h, bool assume_level) {
    require_h1_is_3(h, "check_bounds");

    BoundReport report{h, invariants(h), h.e()};
    report.assume_level = assume_level;
    std::tie(report.lower, report.upper) = conjecture_bounds(h);

    const Rat e(report.e);
    if (report.lower) {
        report.lower_holds = (*report.lower <= e) ? Tri::holds : Tri::fails;
        report.lower_sharp = (*report.lower == e);
    }
    if (report.upper) {
        report.upper_holds = (e <= *report.upper) ? Tri::holds : Tri::fails;
        report.upper_sharp = (*report.upper == e);
    }
    report.mc_lower_implied = (report.lower_holds == Tri::holds);

    report.case_tags = classify_37(h);
    std::optional<SocleVector> socle;
    try {
        socle = recover_socle(h);
    } catch (const std::invalid_argument&) {
    }
    if (socle && socle->q() < h.c()) {
        const auto profile = fl_numbers(3, *socle);
        if (profile.extremely_compressed) {
            report.case_tags.insert(CaseTag::extreme_nonlevel);
        }
    }

    if (!assume_level && report.upper) {
        report.notes.push_back(
            "upper bound is conjectural/level-only: m carries resolution "
            "meaning only for level algebras");
    }
    if (report.case_tags.count(CaseTag::tail_iv) && h.c() >= 2 &&
        h.at(h.c() - 1) == h.at(h.c()) + 1 && h.at(h.c() - 2) <= 3 &&
        !in_tail_boundary_list(h)) {
        report.notes.push_back(
            "conjectural: tail boundary case h_{c-1} = h_c + 1 with "
            "h_{c-2} <= 3 outside the proven list");
    }
    return report;
}

std::pair<Rat, Rat> mc_bounds_from_shifts(const std::array<Int, 3>& min_shifts,
                                          const std::array<Int, 3>& max_shifts) {
    Rat lower(min_shifts[0] * min_shifts[1] * min_shifts[2], 6);
    Rat upper(max_shifts[0] * max_shifts[1] * max_shifts[2], 6);
    return {lower, upper};
}

namespace {

nlohmann::json int_json(const Int& v) {
    // lossless: numbers while they fit, decimal strings beyond
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max()) {
        return v.convert_to<long long>();
    }
    return v.str();
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<long long>());
}

nlohmann::json opt_index_json(const std::optional<int>& v) {
    if (v) return *v;
    return nullptr;
}

nlohmann::json opt_rat_json(const std::optional<Rat>& v) {
    if (v) return rat_string(*v);
    return nullptr;
}

Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

Tri tri_from_name(const std::string& s) {
    if (s == "holds") return Tri::holds;
    if (s == "fails") return Tri::fails;
    if (s == "inapplicable") return Tri::inapplicable;
    throw std::invalid_argument("unknown tri-state: " + s);
}

CaseTag case_tag_from_name(const std::string& s) {
    for (CaseTag t : {CaseTag::compressed, CaseTag::ends_3_2, CaseTag::h2_le_4,
                      CaseTag::tail_iv, CaseTag::begins_1345,
                      CaseTag::extreme_nonlevel}) {
        if (case_tag_name(t) == s) return t;
    }
    throw std::invalid_argument("unknown case tag: " + s);
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

nlohmann::json report_to_json(const BoundReport& report) {
    nlohmann::json j;
    auto& h = j["h"] = nlohmann::json::array();
    for (const Int& x : report.h.entries()) h.push_back(int_json(x));
    j["e"] = int_json(report.e);
    j["t"] = report.inv.t;
    j["i"] = opt_index_json(report.inv.i);
    j["j"] = opt_index_json(report.inv.j);
    j["m"] = opt_index_json(report.inv.m);
    j["lower"] = opt_rat_json(report.lower);
    j["upper"] = opt_rat_json(report.upper);
    j["lower_holds"] = tri_name(report.lower_holds);
    j["upper_holds"] = tri_name(report.upper_holds);
    j["lower_sharp"] = report.lower_sharp;
    j["upper_sharp"] = report.upper_sharp;
    j["mc_lower_implied"] = report.mc_lower_implied;
    j["assume_level"] = report.assume_level;
    auto& tags = j["tags"] = nlohmann::json::array();
    for (CaseTag t : report.case_tags) tags.push_back(case_tag_name(t));
    j["notes"] = report.notes;
    return j;
}

BoundReport report_from_json(const nlohmann::json& j) {
    std::vector<Int> entries;
    for (const auto& x : j.at("h")) entries.push_back(int_from_json(x));
    BoundReport report{HVector(std::move(entries)), InvariantSet{}, int_from_json(j.at("e"))};
    report.inv.t = j.at("t").get<int>();
    if (!j.at("i").is_null()) report.inv.i = j.at("i").get<int>();
    if (!j.at("j").is_null()) report.inv.j = j.at("j").get<int>();
    if (!j.at("m").is_null()) report.inv.m = j.at("m").get<int>();
    if (!j.at("lower").is_null()) report.lower = rat_from_string(j.at("lower").get<std::string>());
    if (!j.at("upper").is_null()) report.upper = rat_from_string(j.at("upper").get<std::string>());
    report.lower_holds = tri_from_name(j.at("lower_holds").get<std::string>());
    report.upper_holds = tri_from_name(j.at("upper_holds").get<std::string>());
    report.lower_sharp = j.at("lower_sharp").get<bool>();
    report.upper_sharp = j.at("upper_sharp").get<bool>();
    report.mc_lower_implied = j.at("mc_lower_implied").get<bool>();
    report.assume_level = j.at("assume_level").get<bool>();
    for (const auto& t : j.at("tags")) {
        report.case_tags.insert(case_tag_from_name(t.get<std::string>()));
    }
    for (const auto& n : j.at("notes")) report.notes.push_back(n.get<std::string>());
    return report;
}

std::string report_csv_header() {
    return "h,e,t,i,j,m,lower,upper,lower_holds,upper_holds,lower_sharp,"
           "upper_sharp,mc_lower_implied,tags";
}

std::string report_csv_row(const BoundReport& report) {
    auto opt_index = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    auto opt_rat = [](const std::optional<Rat>& v) {
        return v ? rat_string(*v) : std::string();
    };
    std::string tags;
    for (CaseTag t : report.case_tags) {
        if (!tags.empty()) tags += '|';
        tags += case_tag_name(t);
    }
    std::string row = csv_quote(report.h.str());
    row += ',' + report.e.str();
    row += ',' + std::to_string(report.inv.t);
    row += ',' + opt_index(report.inv.i);
    row += ',' + opt_index(report.inv.j);
    row += ',' + opt_index(report.inv.m);
    row += ',' + opt_rat(report.lower);
    row += ',' + opt_rat(report.upper);
    row += ',' + tri_name(report.lower_holds);
    row += ',' + tri_name(report.upper_holds);
    row += ',' + std::string(report.lower_sharp ? "true" : "false");
    row += ',' + std::string(report.upper_sharp ? "true" : "false");
    row += ',' + std::string(report.mc_lower_implied ? "true" : "false");
    row += ',' + tags;
    return row;
}

}  // namespace mcb

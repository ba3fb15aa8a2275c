#include "mcb/hvector.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "mcb/binomial.hpp"

namespace mcb {

namespace {

const Int kZero = 0;

std::vector<Int> parse_vector(std::string_view text, const char* what) {
    std::string s(text);
    // strip whitespace and one pair of surrounding parentheses
    size_t begin = 0, end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    if (begin < end && s[begin] == '(' && s[end - 1] == ')') {
        ++begin;
        --end;
    }
    s = s.substr(begin, end - begin);
    if (s.empty()) {
        throw std::invalid_argument(std::string(what) + ": empty input");
    }
    std::vector<Int> entries;
    std::stringstream ss(s);
    std::string token;
    while (std::getline(ss, token, ',')) {
        size_t a = 0, b = token.size();
        while (a < b && std::isspace(static_cast<unsigned char>(token[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(token[b - 1]))) --b;
        token = token.substr(a, b - a);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument(std::string(what) + ": bad entry '" + token +
                                        "' (expected a nonnegative decimal integer)");
        }
        entries.emplace_back(token);
    }
    return entries;
}

std::string join(const std::vector<Int>& v) {
    std::string out;
    for (size_t idx = 0; idx < v.size(); ++idx) {
        if (idx) out += ',';
        out += v[idx].str();
    }
    return out;
}

void trim_trailing_zeros(std::vector<Int>& v) {
    while (v.size() > 1 && v.back() == 0) v.pop_back();
}

}  // namespace

HVector::HVector(std::vector<Int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("h-vector: empty");
    for (const Int& x : entries_) {
        if (x < 0) throw std::invalid_argument("h-vector: negative entry");
    }
    if (entries_[0] != 1) throw std::invalid_argument("h-vector: h_0 must be 1");
    trim_trailing_zeros(entries_);
    for (size_t d = 1; d + 1 < entries_.size(); ++d) {
        if (entries_[d] == 0) {
            throw std::invalid_argument(
                "h-vector: internal zero followed by a positive entry");
        }
    }
    e_ = 0;
    for (const Int& x : entries_) e_ += x;
}

HVector HVector::parse(std::string_view text) {
    return HVector(parse_vector(text, "h-vector"));
}

const Int& HVector::at(int degree) const {
    if (degree < 0 || degree > c()) return kZero;
    return entries_[static_cast<size_t>(degree)];
}

std::string HVector::str() const { return join(entries_); }

SocleVector::SocleVector(std::vector<Int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("socle-vector: empty");
    for (const Int& x : entries_) {
        if (x < 0) throw std::invalid_argument("socle-vector: negative entry");
    }
    if (entries_[0] != 0) throw std::invalid_argument("socle-vector: s_0 must be 0");
    trim_trailing_zeros(entries_);
    if (entries_.size() < 2 || entries_.back() == 0) {
        throw std::invalid_argument("socle-vector: needs a positive entry in degree >= 1");
    }
    q_ = 0;
    type_ = 0;
    for (size_t d = 0; d < entries_.size(); ++d) {
        if (q_ == 0 && entries_[d] > 0) q_ = static_cast<int>(d);
        type_ += entries_[d];
    }
}

SocleVector SocleVector::parse(std::string_view text) {
    return SocleVector(parse_vector(text, "socle-vector"));
}

const Int& SocleVector::at(int degree) const {
    if (degree < 0 || degree > c()) return kZero;
    return entries_[static_cast<size_t>(degree)];
}

std::string SocleVector::str() const { return join(entries_); }

FProfile::FProfile(int c, std::vector<Int> values) : c_(c), values_(std::move(values)) {
    if (values_.size() != static_cast<size_t>(c_ + 3)) {
        throw std::invalid_argument("f-profile: wrong length");
    }
}

const Int& FProfile::f(int n) const {
    if (n < 1 || n > c_ + 3) throw std::out_of_range("f-profile: n outside 1..c+3");
    return values_[static_cast<size_t>(n - 1)];
}

FProfile f_profile(const HVector& h) {
    const int c = h.c();
    std::vector<Int> values;
    values.reserve(static_cast<size_t>(c + 3));
    for (int n = 1; n <= c + 3; ++n) {
        values.push_back(h.at(n) - 3 * h.at(n - 1) + 3 * h.at(n - 2) - h.at(n - 3));
    }
    return FProfile(c, std::move(values));
}

InvariantSet invariants(const HVector& h) {
    const FProfile p = f_profile(h);
    InvariantSet inv{};
    inv.t = -1;
    for (int n = 1; n <= p.n_max(); ++n) {
        const Int& v = p.f(n);
        if (v < 0 && inv.t < 0) inv.t = n;
        if (v > 0) {
            if (!inv.i) inv.i = n;
            inv.j = n;
        }
        if (v < 0 && n < p.n_max()) inv.m = n;
    }
    if (inv.t < 0) {
        // sum f(n) = -1 guarantees a negative value exists
        throw std::logic_error("invariants: no negative f value; corrupted profile");
    }
    return inv;
}

bool is_o_sequence(const HVector& h) {
    for (int d = 1; d < h.c(); ++d) {
        if (h.at(d + 1) > macaulay_growth(h.at(d), d)) return false;
    }
    return true;
}

Int multiplicity(const HVector& h) { return h.e(); }

Int multiplicity_from_profile(const FProfile& p) {
    Int weighted = 0;
    for (int n = 3; n <= p.n_max(); ++n) {
        weighted += Int(n) * (n - 1) * (n - 2) * p.f(n);
    }
    if (weighted % 6 != 0) {
        throw std::domain_error("multiplicity_from_profile: weighted sum not divisible by 6");
    }
    Int e = -weighted / 6;
    if (e <= 0) {
        throw std::domain_error("multiplicity_from_profile: nonpositive multiplicity");
    }
    return e;
}

}  // namespace mcb

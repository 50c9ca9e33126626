#include "taurank/database.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace taurank {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

bool valid_number(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool digits = false, slash = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits = true;
        } else if (s[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            return false;
        }
    }
    return digits;
}

// Parses "a1,a2,a3,a4,a6"; sets `scaled` when a fraction was present.
WeierstrassCurve parse_coeffs(std::string_view body, bool& scaled) {
    const auto parts = split(body, ',');
    if (parts.size() != 5) throw ParseError("expected 5 coefficients, got " + std::to_string(parts.size()));
    std::array<Rational, 5> a;
    for (std::size_t i = 0; i < 5; ++i) {
        std::string t = trim(parts[i]);
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        if (!valid_number(t)) throw ParseError("bad coefficient '" + trim(parts[i]) + "'");
        try {
            a[i] = parse_rational(t);
        } catch (const DomainError& e) {
            throw ParseError(std::string("bad coefficient: ") + e.what());
        }
    }
    scaled = std::any_of(a.begin(), a.end(), [](const Rational& x) { return !is_integral(x); });
    WeierstrassCurve E = scaled ? integral_model(a)
                                : WeierstrassCurve{a[0].get_num(), a[1].get_num(), a[2].get_num(), a[3].get_num(),
                                                   a[4].get_num()};
    compute_invariants(E);  // throws SingularCurveError
    return E;
}

std::optional<Integer> optional_int(const std::string& field) {
    const std::string t = trim(field);
    if (t.empty() || t == "-") return std::nullopt;
    if (!valid_number(t) || t.find('/') != std::string::npos) throw ParseError("bad integer '" + t + "'");
    return parse_integer(t);
}

}  // namespace

std::vector<CurveRecord> ingest_database_text(std::string_view text) {
    std::vector<CurveRecord> out;
    std::set<std::string> seen;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const auto cols = split(line, '\t');
        if (cols.size() < 2 || cols.size() > 4) {
            throw DatabaseError("expected 2 to 4 tab-separated columns", lineno);
        }
        CurveRecord rec;
        rec.label = trim(cols[0]);
        if (rec.label.empty()) throw DatabaseError("empty label", lineno);
        if (!seen.insert(rec.label).second) throw DatabaseError("duplicate label " + rec.label, lineno);
        try {
            rec.curve = parse_coeffs(cols[1], rec.rational_input);
            if (cols.size() > 2) rec.rank = optional_int(cols[2]);
            if (cols.size() > 3) rec.lambda = optional_int(cols[3]);
        } catch (const DomainError& e) {
            throw DatabaseError(rec.label + ": " + e.what(), lineno);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CurveRecord> ingest_database(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DatabaseError("cannot open database " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw DatabaseError("cannot read database " + path);
    return ingest_database_text(ss.str());
}

const std::vector<CurveRecord>& bundled_database() {
    static const std::vector<CurveRecord> db = [] {
        std::string text(bundled_exceptional_tsv());
        text += "\n";
        text += bundled_sample_tsv();
        return ingest_database_text(text);
    }();
    return db;
}

CurveRecord parse_curve(const std::string& text, const std::vector<CurveRecord>& db) {
    const std::string t = trim(text);
    if (t.empty()) throw ParseError("empty curve description");
    if (t.front() == '[') {
        if (t.back() != ']') throw ParseError("missing ']' in '" + t + "'");
        CurveRecord rec;
        rec.curve = parse_coeffs(std::string_view(t).substr(1, t.size() - 2), rec.rational_input);
        return rec;
    }
    for (char c : t) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '_' && c != '-') {
            throw ParseError("malformed curve description '" + t + "'");
        }
    }
    if (const CurveRecord* r = find_label(db, t)) return *r;
    throw UnknownLabelError("unknown curve label '" + t + "'");
}

CurveRecord parse_curve(const std::string& text) { return parse_curve(text, bundled_database()); }

const CurveRecord* find_label(const std::vector<CurveRecord>& db, const std::string& label) {
    for (const auto& r : db) {
        if (r.label == label) return &r;
    }
    return nullptr;
}

const CurveRecord* find_isomorphic(const std::vector<CurveRecord>& db, const WeierstrassCurve& E) {
    const CurveInvariants target = compute_invariants(minimal_model(E).curve);
    for (const auto& r : db) {
        const CurveInvariants inv = compute_invariants(minimal_model(r.curve).curve);
        if (inv.c4 == target.c4 && inv.c6 == target.c6) return &r;
    }
    return nullptr;
}

}  // namespace taurank

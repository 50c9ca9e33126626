#pragma once

// Curve records, the TSV curve database and the curve-text parser.

#include "taurank/arith.hpp"
#include "taurank/curve.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace taurank {

class ParseError : public DomainError {
public:
    using DomainError::DomainError;
};

class UnknownLabelError : public DomainError {
public:
    using DomainError::DomainError;
};

class DatabaseError : public std::runtime_error {
public:
    DatabaseError(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(line ? msg + " (line " + std::to_string(line) + ")" : msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct CurveRecord {
    std::string label;
    WeierstrassCurve curve;
    std::optional<Integer> rank;
    std::optional<Integer> lambda;
    std::optional<Integer> selmer_rank;
    bool rational_input = false;  // coefficients were scaled to an integral model
};

/// TSV: label <tab> a1,a2,a3,a4,a6 [<tab> rank [<tab> lambda]]; '#' comments.
/// `-` or an empty field marks a missing optional value.
std::vector<CurveRecord> ingest_database_text(std::string_view text);
std::vector<CurveRecord> ingest_database(const std::string& path);

std::string_view bundled_exceptional_tsv();
std::string_view bundled_sample_tsv();
/// Exceptional table followed by the sample curves.
const std::vector<CurveRecord>& bundled_database();

/// Coefficient list "[a1,a2,a3,a4,a6]" (integers or fractions) or a label in
/// `db`.  Throws ParseError, UnknownLabelError or SingularCurveError.
CurveRecord parse_curve(const std::string& text, const std::vector<CurveRecord>& db);
CurveRecord parse_curve(const std::string& text);

const CurveRecord* find_label(const std::vector<CurveRecord>& db, const std::string& label);
/// First record isomorphic over Q to E.
const CurveRecord* find_isomorphic(const std::vector<CurveRecord>& db, const WeierstrassCurve& E);

}  // namespace taurank

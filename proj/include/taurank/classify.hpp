#pragma once

// Parity of [K:Q]/2 (equivalently of tau), lower bounds for tau, the
// exceptional-curve classification and a few closed-form evaluators.

#include "taurank/arith.hpp"
#include "taurank/curve.hpp"
#include "taurank/localdata.hpp"
#include "taurank/rootnum.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace taurank {

class CmCurveError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The thirteen rational CM j-invariants.
const std::vector<Rational>& cm_j_invariants();
bool is_cm_j(const Rational& j);

enum class Status { Verified, Hypothesis, Failed };
std::string to_string(Status s);

struct AssumptionItem {
    Status status = Status::Hypothesis;
    std::string reason;
};

struct AssumptionChecklist {
    AssumptionItem I, II, III, IV;
    bool any_failed() const;
};

/// Throws CmCurveError for CM curves.
AssumptionChecklist check_assumptions(const LocalProfile& prof, const Integer& p);
AssumptionChecklist check_assumptions(const WeierstrassCurve& E, const Integer& p);

struct Reason {
    std::string rule;
    std::optional<Integer> prime;
    std::optional<unsigned long> valuation;
    std::string detail;

    std::string to_string() const;
};

struct ParityVerdict {
    Parity parity = Parity::Unknown;
    std::vector<Reason> reasons;
    bool has_7_isogeny = false;
};

/// Result of identifying the quadratic character cubed from the 7-isogeny
/// kernel with Frobenius traces.
struct KernelCharacter {
    bool resolved = false;
    std::vector<Integer> survivors;  // fundamental-discriminant candidates left
    std::map<std::string, Parity> inertia_parity;  // keyed by prime
    unsigned long primes_used = 0;
    unsigned long last_prime = 0;
};

/// For a curve with a rational 7-isogeny: decides the parity of |I_q| for each
/// requested q != 7.  Gives up (resolved = false) past `limit`.
KernelCharacter kernel_character_parity(const LocalProfile& prof, const std::vector<Integer>& primes,
                                        unsigned long limit = 2000);

/// Throws DomainError if p is not a prime >= 5.
ParityVerdict degree_parity(const LocalProfile& prof, const Integer& p);
ParityVerdict degree_parity(const WeierstrassCurve& E, const Integer& p);

ParityVerdict tau_parity(const ParityVerdict& degree);

struct TauBound {
    Integer bound = 0;
    std::vector<std::string> trace;
};

struct TauInputs {
    std::optional<Integer> selmer_rank;
    std::optional<Integer> lambda;
};

TauBound tau_lower_bound(const LocalProfile& prof, const Integer& p, const ParityVerdict& parity,
                         const AssumptionChecklist& assumptions, const TauInputs& inputs = {});
TauBound tau_lower_bound(const WeierstrassCurve& E, const Integer& p, std::optional<Integer> selmer_rank = {});

struct ExceptionClass {
    std::string id;  // "37-class" or "63-class"
    std::vector<Rational> j_values;
    std::vector<Integer> discriminants;
};

const std::vector<ExceptionClass>& exception_classes();

struct ExceptionMatch {
    bool candidate = false;
    std::optional<ExceptionClass> cls;
    bool table_match = false;  // (j, Delta_min) is one of the eight listed pairs
};

ExceptionMatch is_exception_candidate(const LocalProfile& prof, const Integer& p, const ParityVerdict& parity);
ExceptionMatch is_exception_candidate(const WeierstrassCurve& E, const Integer& p);

struct TauReport {
    AssumptionChecklist assumptions;
    ParityVerdict tau_parity;
    TauBound lower_bound;
    ExceptionMatch exception;
    std::string isogeny_class_note;
    bool cm_rejected = false;
    std::string cm_reason;
};

TauReport tau_report(const LocalProfile& prof, const Integer& p, const TauInputs& inputs = {});

/// Twist of E with the smallest |Delta_min| over signed squarefree d | 2 Delta_min.
struct MinimalTwist {
    Integer d;
    WeierstrassCurve curve;
};
MinimalTwist minimal_twist(const WeierstrassCurve& E);

struct TwistEntry {
    Integer d;
    WeierstrassCurve curve;
    Integer disc_min;
    ParityVerdict verdict;
    bool twist_lemma = false;  // excluded: the twist ramifies at a good prime of E
};

/// Every signed squarefree d | 7 Delta_min, sorted by d.
std::vector<TwistEntry> twist_scan(const WeierstrassCurve& E, const Integer& p = Integer(7));

Integer tau_scale(const Integer& tau, const Integer& cyc_degree);
Integer lambda_growth_main_term(const Integer& tau_m, const Integer& p, unsigned long m, unsigned long n);
Integer tau_from_lambda_s(const Integer& lambda, const Integer& s_cyc);

}  // namespace taurank

#include "taurank/classify.hpp"

#include "taurank/x07.hpp"

#include <algorithm>
#include <sstream>

namespace taurank {

namespace {

Integer ipow(long b, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b < 0 ? -b : b), e);
    if (b < 0 && e % 2 == 1) r = -r;
    return r;
}

Reason make_reason(std::string rule, std::string detail, std::optional<Integer> q = {},
                   std::optional<unsigned long> v = {}) {
    Reason r;
    r.rule = std::move(rule);
    r.detail = std::move(detail);
    r.prime = std::move(q);
    r.valuation = v;
    return r;
}

}  // namespace

const std::vector<Rational>& cm_j_invariants() {
    static const std::vector<Rational> js = [] {
        std::vector<Rational> v;
        for (const char* s : {"0", "1728", "-3375", "8000", "-32768", "54000", "287496", "-884736", "-12288000",
                              "16581375", "-884736000", "-147197952000", "-262537412640768000"}) {
            v.push_back(parse_rational(s));
        }
        return v;
    }();
    return js;
}

bool is_cm_j(const Rational& j) {
    const auto& js = cm_j_invariants();
    return std::find(js.begin(), js.end(), j) != js.end();
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Verified: return "Verified";
        case Status::Failed: return "Failed";
        default: return "Hypothesis";
    }
}

bool AssumptionChecklist::any_failed() const {
    return I.status == Status::Failed || II.status == Status::Failed || III.status == Status::Failed ||
           IV.status == Status::Failed;
}

std::string Reason::to_string() const {
    std::string s = rule;
    if (!detail.empty()) s += ": " + detail;
    return s;
}

AssumptionChecklist check_assumptions(const LocalProfile& prof, const Integer& p) {
    AssumptionChecklist c;
    const bool prime = is_prime(p);
    if (prime && p >= 5) {
        c.I = {Status::Verified, "p = " + p.get_str() + " >= 5"};
    } else {
        c.I = {Status::Failed, "p = " + p.get_str() + (prime ? " < 5" : " is not prime")};
    }
    if (is_cm_j(prof.inv.j)) {
        throw CmCurveError("j = " + to_string(prof.inv.j) + " is a CM j-invariant");
    }
    if (!prime) {
        c.II = {Status::Failed, "p is not prime"};
    } else if (const LocalData* ld = prof.at(p)) {
        switch (ld->reduction) {
            case ReductionType::AdditivePotentiallyGood:
                c.II = {Status::Hypothesis, "additive, potentially good reduction at p; good ordinary reduction "
                                            "over K is not decided here"};
                break;
            case ReductionType::AdditivePotentiallyMultiplicative:
                c.II = {Status::Failed, "potentially multiplicative reduction at p"};
                break;
            default:
                c.II = {Status::Failed, "multiplicative reduction at p"};
                break;
        }
    } else {
        const Integer a = trace_of_frobenius(prof.model, p);
        if (a % p == 0) {
            c.II = {Status::Failed, "supersingular at p: a_p = " + a.get_str()};
        } else {
            c.II = {Status::Verified, "good ordinary at p: a_p = " + a.get_str()};
        }
    }
    c.III = {Status::Verified, "structural: K is taken minimal with Gal(K_inf/K) pro-p"};
    c.IV = {Status::Hypothesis, "standing hypothesis, not checked"};
    return c;
}

AssumptionChecklist check_assumptions(const WeierstrassCurve& E, const Integer& p) {
    return check_assumptions(local_profile(E), p);
}

ParityVerdict degree_parity(const LocalProfile& prof, const Integer& p) {
    if (p < 5 || !is_prime(p)) throw DomainError("degree_parity: p must be a prime >= 5");
    ParityVerdict v;
    if (p % 4 == 1) {
        v.parity = Parity::Even;
        v.reasons.push_back(make_reason("p_1_mod_4", "4 | p-1 = [Q(mu_p):Q]"));
        return v;
    }
    if (is_cm_j(prof.inv.j)) {
        v.parity = Parity::Unknown;
        v.reasons.push_back(make_reason("cm_excluded", "CM curve; image is not governed by the Borel analysis"));
        return v;
    }
    if (p == 11) {
        v.parity = Parity::Even;
        v.reasons.push_back(make_reason("p11_excluded", "odd inertia would force |I_q| = 3, but 3 does not divide 100"));
        return v;
    }
    if (p != 7) {
        v.parity = Parity::Even;
        v.reasons.push_back(make_reason("mazur_no_isogeny", "no rational " + p.get_str() + "-isogeny on a non-CM curve"));
        return v;
    }
    v.has_7_isogeny = has_rational_7_isogeny(prof.inv.j);
    if (!v.has_7_isogeny) {
        v.parity = Parity::Even;
        v.reasons.push_back(make_reason("no_7_isogeny", "j is not a t-value image on X_0(7)"));
        return v;
    }

    bool even = false;
    std::vector<Integer> undecided;
    for (const auto& ld : prof.bad) {
        if (ld.q == p) continue;
        const InertiaOrder o = inertia_order(ld, p);
        if (o.parity == Parity::Even) {
            even = true;
            const std::string qs = ld.q.get_str();
            const std::string vs = std::to_string(ld.v_disc);
            if (ld.reduction == ReductionType::AdditivePotentiallyMultiplicative) {
                v.reasons.push_back(make_reason("potentially_multiplicative",
                                                "additive, potentially multiplicative at " + qs + ", |I_" + qs + "| = 2",
                                                ld.q, ld.v_disc));
            } else {
                v.reasons.push_back(make_reason("v_not_divisible_by_4",
                                                "v_" + qs + "(Delta)=" + vs + ", 4 does not divide " + vs +
                                                    ", |I_" + qs + "| = " + o.to_string(),
                                                ld.q, ld.v_disc));
            }
        } else if (o.parity == Parity::Unknown) {
            undecided.push_back(ld.q);
        }
    }
    if (even) {
        v.parity = Parity::Even;
        return v;
    }
    if (!undecided.empty()) {
        const KernelCharacter kc = kernel_character_parity(prof, undecided);
        if (!kc.resolved) {
            v.parity = Parity::Unknown;
            for (const auto& q : undecided) {
                v.reasons.push_back(make_reason("inertia_undetermined",
                                                "additive at " + q.get_str() + " with |I_q| not determined", q));
            }
            return v;
        }
        for (const auto& q : undecided) {
            const Parity qp = kc.inertia_parity.at(q.get_str());
            const LocalData* ld = prof.at(q);
            const std::string qs = q.get_str();
            if (qp == Parity::Even) {
                even = true;
                v.reasons.push_back(make_reason("kernel_character_even",
                                                "isogeny character cubed ramifies at " + qs + ", |I_" + qs + "| even",
                                                q, ld ? std::optional<unsigned long>(ld->v_disc) : std::nullopt));
            } else {
                v.reasons.push_back(make_reason("kernel_character_odd",
                                                "isogeny character cubed unramified at " + qs + ", |I_" + qs + "| odd",
                                                q, ld ? std::optional<unsigned long>(ld->v_disc) : std::nullopt));
            }
        }
        if (even) {
            v.parity = Parity::Even;
            return v;
        }
    }
    v.parity = Parity::Odd;
    v.reasons.push_back(make_reason("all_inertia_odd", "7-isogeny and |I_q| odd for every q != 7"));
    return v;
}

ParityVerdict degree_parity(const WeierstrassCurve& E, const Integer& p) { return degree_parity(local_profile(E), p); }

ParityVerdict tau_parity(const ParityVerdict& degree) {
    ParityVerdict v = degree;
    v.reasons.insert(v.reasons.begin(), make_reason("tau_parity", "tau = [K:Q]/2 (mod 2)"));
    return v;
}

TauBound tau_lower_bound(const LocalProfile& prof, const Integer& p, const ParityVerdict& parity,
                         const AssumptionChecklist& assumptions, const TauInputs& inputs) {
    TauBound b;
    if (assumptions.any_failed()) {
        b.bound = 0;
        b.trace.push_back("assumptions failed; no bound");
        return b;
    }
    b.bound = 1;
    b.trace.push_back("tau >= 1 under (I)-(IV)");

    std::vector<SContribution> terms;
    const Integer s = s_over_Qmu_p(prof, p, &terms);
    if (!prof.j_integral()) {
        std::ostringstream os;
        os << "j not integral: s over Q(mu_" << p << ") = " << s;
        for (const auto& t : terms) os << " [" << t.q << ": " << t.split.count_in_Qmu_p << "]";
        b.trace.push_back(os.str());
        if (s > b.bound) b.bound = s;
        if (b.bound < 2) {
            b.bound = 2;
            b.trace.push_back("j not integral: tau >= 2");
        }
    }
    if (inputs.selmer_rank) {
        const Integer v = *inputs.selmer_rank + s;
        b.trace.push_back("selmer rank " + inputs.selmer_rank->get_str() + " + s = " + v.get_str());
        if (v > b.bound) b.bound = v;
    }
    if (inputs.lambda) {
        Integer s_cyc = 0;
        for (const auto& t : terms) s_cyc += t.split.stable_count_in_cyc;
        const Integer v = *inputs.lambda + s_cyc;
        b.trace.push_back("lambda " + inputs.lambda->get_str() + " + s over Q(mu_p^inf) = " + v.get_str());
        if (v > b.bound) b.bound = v;
    }
    if (parity.parity == Parity::Odd && !prof.j_integral()) {
        bool all_trivial = true;
        for (const auto& ld : prof.bad) {
            if (ld.q != p && ld.reduction != ReductionType::Good && !is_multiplicative(ld.reduction)) all_trivial = false;
        }
        if (all_trivial) {
            const LocalData* at2 = prof.at(Integer(2));
            const bool mult2 = at2 && is_multiplicative(at2->reduction);
            b.trace.push_back(std::string("7-torsion case: all |I_q| = 1, so E or its 7-isogenous partner has "
                                          "rational 7-torsion; reduction at 2 is ") +
                              (mult2 ? "multiplicative" : "NOT multiplicative (inconsistent)"));
        } else {
            b.trace.push_back("additive case: a potentially multiplicative prime has at least 3 primes of K above it");
        }
        if (b.bound < 3) b.bound = 3;
    }
    const Parity par = parity.parity;
    if (par != Parity::Unknown) {
        const bool bound_even = b.bound % 2 == 0;
        if (bound_even != (par == Parity::Even)) {
            b.bound += 1;
            b.trace.push_back("rounded to parity " + to_string(par) + ": " + b.bound.get_str());
        }
    }
    return b;
}

TauBound tau_lower_bound(const WeierstrassCurve& E, const Integer& p, std::optional<Integer> selmer_rank) {
    const LocalProfile prof = local_profile(E);
    TauInputs in;
    in.selmer_rank = std::move(selmer_rank);
    return tau_lower_bound(prof, p, tau_parity(degree_parity(prof, p)), check_assumptions(prof, p), in);
}

const std::vector<ExceptionClass>& exception_classes() {
    static const std::vector<ExceptionClass> classes = [] {
        ExceptionClass a;
        a.id = "37-class";
        a.j_values = {Rational(ipow(3, 3) * 37), Rational(-ipow(3, 3) * 37 * ipow(719, 3))};
        a.discriminants = {-ipow(37, 8), -ipow(7, 6) * ipow(37, 8)};
        ExceptionClass b;
        b.id = "63-class";
        b.j_values = {Rational(ipow(3, 2) * ipow(7, 4)), Rational(ipow(3, 2) * 7 * ipow(2647, 3))};
        b.discriminants = {ipow(3, 4) * ipow(7, 8), ipow(3, 4) * ipow(7, 2)};
        return std::vector<ExceptionClass>{a, b};
    }();
    return classes;
}

ExceptionMatch is_exception_candidate(const LocalProfile& prof, const Integer& p, const ParityVerdict& parity) {
    ExceptionMatch m;
    for (const auto& cls : exception_classes()) {
        if (std::find(cls.j_values.begin(), cls.j_values.end(), prof.inv.j) == cls.j_values.end()) continue;
        if (p != 7 || parity.parity != Parity::Odd) return m;
        m.candidate = true;
        m.cls = cls;
        m.table_match = std::find(cls.discriminants.begin(), cls.discriminants.end(), prof.inv.disc) !=
                        cls.discriminants.end();
    }
    return m;
}

ExceptionMatch is_exception_candidate(const WeierstrassCurve& E, const Integer& p) {
    const LocalProfile prof = local_profile(E);
    return is_exception_candidate(prof, p, degree_parity(prof, p));
}

TauReport tau_report(const LocalProfile& prof, const Integer& p, const TauInputs& inputs) {
    TauReport r;
    try {
        r.assumptions = check_assumptions(prof, p);
    } catch (const CmCurveError& e) {
        r.cm_rejected = true;
        r.cm_reason = e.what();
        r.tau_parity.parity = Parity::Unknown;
        r.tau_parity.reasons.push_back(make_reason("cm_rejected", e.what()));
        r.lower_bound.trace.push_back("CM curve rejected; no bound");
        return r;
    }
    if (r.assumptions.I.status == Status::Failed) {
        r.tau_parity.parity = Parity::Unknown;
        r.tau_parity.reasons.push_back(make_reason("assumption_I_failed", r.assumptions.I.reason));
        r.lower_bound.trace.push_back("assumptions failed; no bound");
        return r;
    }
    r.tau_parity = tau_parity(degree_parity(prof, p));
    r.lower_bound = tau_lower_bound(prof, p, r.tau_parity, r.assumptions, inputs);
    r.exception = is_exception_candidate(prof, p, r.tau_parity);
    if (r.tau_parity.has_7_isogeny) {
        r.isogeny_class_note = "rational 7-isogeny: the curve lies in the two-parameter family up to 7-isogeny";
    }
    return r;
}

MinimalTwist minimal_twist(const WeierstrassCurve& E) {
    const MinimalModel mm = minimal_model(E);
    MinimalTwist best{Integer(1), mm.curve};
    Integer best_disc = abs(mm.disc_min);
    for (const auto& d : squarefree_divisors(2 * mm.disc_min, true)) {
        if (d == 1) continue;
        const WeierstrassCurve T = quadratic_twist(mm.curve, d);
        const Integer disc = abs(compute_invariants(T).disc);
        const bool better = disc < best_disc ||
                            (disc == best_disc && (abs(d) < abs(best.d) || (abs(d) == abs(best.d) && d > 0)));
        if (better) {
            best = {d, T};
            best_disc = disc;
        }
    }
    return best;
}

std::vector<TwistEntry> twist_scan(const WeierstrassCurve& E, const Integer& p) {
    const MinimalModel mm = minimal_model(E);
    const bool good_at_2 = mm.disc_min % 2 != 0;
    std::vector<TwistEntry> out;
    for (const auto& d : squarefree_divisors(p * mm.disc_min, true)) {
        TwistEntry e;
        e.d = d;
        e.curve = d == 1 ? mm.curve : quadratic_twist(mm.curve, d);
        const LocalProfile prof = local_profile(e.curve);
        e.disc_min = prof.inv.disc;
        Integer r = d % 4;
        if (r < 0) r += 4;
        if (good_at_2 && r != 1) {
            e.twist_lemma = true;
            e.verdict.parity = Parity::Even;
            e.verdict.has_7_isogeny = p == 7 && has_rational_7_isogeny(prof.inv.j);
            e.verdict.reasons.push_back(make_reason("twist_lemma",
                                                    "twist ramifies at 2 where E is good, |I_2| = 2", Integer(2)));
        } else {
            e.verdict = degree_parity(prof, p);
        }
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const TwistEntry& a, const TwistEntry& b) { return a.d < b.d; });
    return out;
}

Integer tau_scale(const Integer& tau, const Integer& cyc_degree) {
    if (cyc_degree < 1) throw DomainError("tau_scale: degree must be >= 1");
    if (tau < 0) throw DomainError("tau_scale: tau must be non-negative");
    return tau * cyc_degree;
}

Integer lambda_growth_main_term(const Integer& tau_m, const Integer& p, unsigned long m, unsigned long n) {
    if (m < 1 || n < m) throw DomainError("lambda_growth_main_term: need n >= m >= 1");
    if (!is_prime(p)) throw DomainError("lambda_growth_main_term: p must be prime");
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), 3 * (n - m));
    return tau_m * pk;
}

Integer tau_from_lambda_s(const Integer& lambda, const Integer& s_cyc) {
    if (lambda < 0 || s_cyc < 0) throw DomainError("tau_from_lambda_s: inputs must be non-negative");
    return lambda + s_cyc;
}

}  // namespace taurank

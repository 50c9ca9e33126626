#include "taurank/report.hpp"

#include "taurank/torsion.hpp"
#include "taurank/x07.hpp"

#include <iomanip>
#include <sstream>

namespace taurank {

namespace {

std::string fact(const Integer& n) { return n == 0 ? "0" : factor(n).to_string(); }

std::string fact(const Rational& x) {
    if (x == 0) return "0";
    std::string s = factor(x.get_num()).to_string();
    if (x.get_den() != 1) s = "(" + s + ")/(" + factor(x.get_den()).to_string() + ")";
    return s;
}

Json opt_int(const std::optional<Integer>& v) { return v ? Json(v->get_str()) : Json(nullptr); }

Json opt_ul(const std::optional<unsigned long>& v) { return v ? Json(std::to_string(*v)) : Json(nullptr); }

Json local_json(const LocalData& ld) {
    Json j;
    j["q"] = ld.q.get_str();
    j["v_disc"] = std::to_string(ld.v_disc);
    j["v_c4"] = opt_ul(ld.v_c4);
    j["v_c6"] = opt_ul(ld.v_c6);
    j["v_j_den"] = std::to_string(ld.v_j_den);
    j["reduction"] = to_string(ld.reduction);
    Json in;
    in["value"] = ld.inertia.value ? Json(std::to_string(*ld.inertia.value)) : Json(nullptr);
    in["min_order"] = std::to_string(ld.inertia.min_order);
    in["parity"] = to_string(ld.inertia.parity);
    j["inertia"] = in;
    return j;
}

Json verdict_json(const ParityVerdict& v) {
    Json j;
    j["value"] = to_string(v.parity);
    Json rs = Json::array();
    for (const auto& r : v.reasons) rs.push_back(reason_json(r));
    j["reasons"] = rs;
    return j;
}

Json assumption_json(const AssumptionItem& a) {
    Json j;
    j["status"] = to_string(a.status);
    j["reason"] = a.reason;
    return j;
}

std::string str(const Json& j) { return j.is_null() ? "-" : j.get<std::string>(); }

std::string first_reason(const Json& verdict) {
    for (const auto& r : verdict["reasons"]) {
        const std::string rule = r["rule"].get<std::string>();
        if (rule == "tau_parity") continue;
        return r["detail"].get<std::string>();
    }
    return "";
}

}  // namespace

Json reason_json(const Reason& r) {
    Json j;
    j["rule"] = r.rule;
    j["prime"] = opt_int(r.prime);
    j["valuation"] = opt_ul(r.valuation);
    j["detail"] = r.detail;
    return j;
}

Json analysis_report(const CurveRecord& rec, const AnalysisOptions& opts) {
    Json out;
    out["schema"] = 1;
    const Integer& p = opts.p;

    Json input;
    input["text"] = opts.input_text;
    input["label"] = rec.label.empty() ? Json(nullptr) : Json(rec.label);
    input["curve"] = rec.curve.to_string();
    input["rational_input"] = rec.rational_input;
    input["p"] = p.get_str();
    input["selmer_rank"] = opt_int(opts.selmer_rank);
    input["lambda"] = opt_int(opts.lambda);
    out["input"] = input;

    const MinimalModel mm = minimal_model(rec.curve);
    const LocalProfile prof = local_profile(rec.curve);
    Json diagnostics = Json::array();

    Json inv;
    inv["minimal_model"] = prof.model.to_string();
    inv["c4"] = prof.inv.c4.get_str();
    inv["c6"] = prof.inv.c6.get_str();
    inv["disc_min"] = prof.inv.disc.get_str();
    inv["disc_min_factored"] = prof.disc.to_string();
    inv["j"] = to_string(prof.inv.j);
    inv["j_factored"] = fact(prof.inv.j);
    inv["j_integral"] = prof.j_integral();
    Json scaling = Json::array();
    for (const auto& pp : mm.scaling) scaling.push_back({{"prime", pp.prime.get_str()}, {"exponent", std::to_string(pp.exponent)}});
    inv["scaling"] = scaling;
    out["invariants"] = inv;

    Json local = Json::array();
    for (const auto& ld : prof.bad) local.push_back(local_json(ld));
    out["local"] = local;

    Json iso;
    const auto ts = t_values_for_j(prof.inv.j);
    iso["has_7_isogeny"] = !ts.empty();
    Json tj = Json::array(), pj = Json::array();
    for (const auto& t : ts) {
        tj.push_back(to_string(t));
        pj.push_back(to_string(j_pair_from_t(t).j2));
    }
    iso["t_values"] = tj;
    iso["partner_j"] = pj;
    out["isogeny"] = iso;

    Json tor;
    const TorsionCertificate cert = rational_7_torsion(prof.model);
    tor["has_7_torsion"] = cert.has_7_torsion;
    tor["witness"] = cert.witness ? Json{{"x", to_string(cert.witness->x)}, {"y", to_string(cert.witness->y)}}
                                  : Json(nullptr);
    Json ev = Json::array();
    for (const auto& [q, n] : cert.filter_evidence) ev.push_back({q.get_str(), n.get_str()});
    tor["filter_evidence"] = ev;
    if (cert.has_7_torsion) {
        try {
            tor["multiplicative_at_2"] = hasse_forces_bad_at_2(prof.model, cert);
        } catch (const DomainError& e) {
            tor["multiplicative_at_2"] = false;
            diagnostics.push_back(e.what());
        }
    } else {
        tor["multiplicative_at_2"] = nullptr;
    }
    out["torsion"] = tor;

    Json split = Json::array();
    if (is_prime(p)) {
        std::vector<SContribution> terms;
        const Integer s = s_over_Qmu_p(prof, p, &terms);
        for (const auto& t : terms) {
            split.push_back({{"q", t.q.get_str()},
                             {"count_in_Qmu_p", t.split.count_in_Qmu_p.get_str()},
                             {"stable_count_in_cyc", t.split.stable_count_in_cyc.get_str()}});
        }
        out["s_over_Qmu_p"] = s.get_str();
    } else {
        out["s_over_Qmu_p"] = nullptr;
        diagnostics.push_back("p = " + p.get_str() + " is not prime; splitting counts skipped");
    }
    out["splitting"] = split;

    TauInputs tin;
    tin.selmer_rank = opts.selmer_rank;
    tin.lambda = opts.lambda;
    const TauReport tr = tau_report(prof, p, tin);
    out["parity"] = verdict_json(tr.tau_parity);

    Json tau;
    if (tr.cm_rejected) {
        tau["assumptions"] = nullptr;
    } else {
        tau["assumptions"] = {{"I", assumption_json(tr.assumptions.I)},
                              {"II", assumption_json(tr.assumptions.II)},
                              {"III", assumption_json(tr.assumptions.III)},
                              {"IV", assumption_json(tr.assumptions.IV)}};
    }
    tau["cm_rejected"] = tr.cm_rejected;
    tau["parity"] = to_string(tr.tau_parity.parity);
    tau["lower_bound"] = tr.lower_bound.bound.get_str();
    tau["trace"] = tr.lower_bound.trace;
    tau["exception_candidate"] = tr.exception.candidate;
    tau["exception_class"] = tr.exception.cls ? Json(tr.exception.cls->id) : Json(nullptr);
    tau["table_match"] = tr.exception.table_match;
    tau["note"] = tr.isogeny_class_note;
    if (rec.rank) tau["rank_over_Q"] = rec.rank->get_str();
    out["tau"] = tau;
    if (tr.cm_rejected) diagnostics.push_back(tr.cm_reason);
    out["diagnostics"] = diagnostics;
    return out;
}

std::string render_analysis_text(const Json& r) {
    std::ostringstream os;
    const auto& in = r["input"];
    const auto& inv = r["invariants"];
    os << "curve        " << str(in["curve"]);
    if (!in["label"].is_null()) os << "  (" << str(in["label"]) << ")";
    os << "\np            " << str(in["p"]) << "\n";
    os << "minimal      " << str(inv["minimal_model"]) << "\n";
    os << "c4, c6       " << str(inv["c4"]) << ", " << str(inv["c6"]) << "\n";
    os << "disc_min     " << str(inv["disc_min"]) << " = " << str(inv["disc_min_factored"]) << "\n";
    os << "j            " << str(inv["j"]) << " = " << str(inv["j_factored"]) << "\n";
    os << "\n  q  v(D)  v(c4)  v(c6)  reduction                           |I_q|\n";
    for (const auto& ld : r["local"]) {
        os << std::setw(3) << str(ld["q"]) << std::setw(6) << str(ld["v_disc"]) << std::setw(7) << str(ld["v_c4"])
           << std::setw(7) << str(ld["v_c6"]) << "  " << std::left << std::setw(36) << str(ld["reduction"])
           << std::right << (ld["inertia"]["value"].is_null() ? "? (" + str(ld["inertia"]["parity"]) + ")"
                                                               : str(ld["inertia"]["value"]))
           << "\n";
    }
    os << "\n7-isogeny    " << (r["isogeny"]["has_7_isogeny"].get<bool>() ? "yes" : "no");
    if (!r["isogeny"]["t_values"].empty()) {
        os << "  t =";
        for (const auto& t : r["isogeny"]["t_values"]) os << " " << str(t);
    }
    os << "\n7-torsion    " << (r["torsion"]["has_7_torsion"].get<bool>() ? "yes" : "no") << "\n";
    os << "parity       " << str(r["parity"]["value"]) << "\n";
    for (const auto& rs : r["parity"]["reasons"]) os << "  - " << str(rs["rule"]) << ": " << str(rs["detail"]) << "\n";
    const auto& tau = r["tau"];
    if (!tau["assumptions"].is_null()) {
        os << "assumptions ";
        for (const char* k : {"I", "II", "III", "IV"}) os << " " << k << "=" << str(tau["assumptions"][k]["status"]);
        os << "\n";
    }
    os << "tau >=       " << str(tau["lower_bound"]) << "\n";
    for (const auto& t : tau["trace"]) os << "  - " << t.get<std::string>() << "\n";
    os << "exception    " << (tau["exception_candidate"].get<bool>() ? "candidate (" + str(tau["exception_class"]) + ")" : "no")
       << "\n";
    for (const auto& d : r["diagnostics"]) os << "note: " << d.get<std::string>() << "\n";
    return os.str();
}

Json x07_points_report() {
    Json out;
    out["schema"] = 1;
    Json rows = Json::array();
    for (const auto& e : integral_points_x07().entries) {
        rows.push_back({{"t", e.t.get_str()},
                        {"j1", e.j1.get_str()},
                        {"j1_factored", fact(e.j1)},
                        {"j2", e.j2.get_str()},
                        {"j2_factored", fact(e.j2)},
                        {"cm", e.cm}});
    }
    out["points"] = rows;
    return out;
}

std::string render_x07_text(const Json& r) {
    std::ostringstream os;
    os << "   t  j1                        j2                        CM\n";
    for (const auto& e : r["points"]) {
        os << std::setw(4) << str(e["t"]) << "  " << std::left << std::setw(26) << str(e["j1_factored"])
           << std::setw(26) << str(e["j2_factored"]) << std::right << (e["cm"].get<bool>() ? "yes" : "no") << "\n";
    }
    return os.str();
}

namespace {

Json twist_row(const TwistEntry& e, const std::vector<CurveRecord>& db) {
    Json row;
    const CurveRecord* match = find_isomorphic(db, e.curve);
    const Rational j = compute_invariants(e.curve).j;
    row["label"] = match ? Json(match->label) : Json(nullptr);
    row["d"] = e.d.get_str();
    row["curve"] = e.curve.to_string();
    row["j"] = to_string(j);
    row["j_factored"] = fact(j);
    row["disc_min"] = e.disc_min.get_str();
    row["disc_min_factored"] = fact(e.disc_min);
    row["parity"] = to_string(e.verdict.parity);
    row["twist_lemma"] = e.twist_lemma;
    row["reasons"] = verdict_json(e.verdict)["reasons"];
    row["rank_over_Q"] = match ? opt_int(match->rank) : Json(nullptr);
    return row;
}

}  // namespace

Json classify_exceptions_report(const std::vector<CurveRecord>& db) {
    Json out;
    out["schema"] = 1;
    Json survivors = Json::array(), pruned = Json::array(), excluded = Json::array();
    std::size_t candidates = 0;
    for (const auto& cls : exception_classes()) {
        for (const auto& j : cls.j_values) {
            const MinimalTwist rep = minimal_twist(curve_from_j(j));
            for (const auto& e : twist_scan(rep.curve, Integer(7))) {
                Json row = twist_row(e, db);
                row["class"] = cls.id;
                if (e.twist_lemma) {
                    excluded.push_back(row);
                    continue;
                }
                ++candidates;
                const LocalProfile prof = local_profile(e.curve);
                const ExceptionMatch m = is_exception_candidate(prof, Integer(7), e.verdict);
                row["table_match"] = m.table_match;
                (e.verdict.parity == Parity::Odd ? survivors : pruned).push_back(row);
            }
        }
    }
    out["candidates"] = std::to_string(candidates);
    out["surviving"] = survivors;
    out["pruned"] = pruned;
    out["excluded_by_twist_lemma"] = std::to_string(excluded.size());
    Json unmatched = Json::array();
    for (const auto* group : {&survivors, &pruned}) {
        for (const auto& row : *group) {
            if (row["label"].is_null()) unmatched.push_back(row["curve"]);
        }
    }
    out["unlabelled"] = unmatched;
    return out;
}

std::string render_classify_text(const Json& r) {
    std::ostringstream os;
    auto table = [&](const Json& rows, bool with_reason) {
        os << "  label     class     d     j                         disc_min        rank\n";
        for (const auto& row : rows) {
            os << "  " << std::left << std::setw(10) << str(row["label"]) << std::setw(10) << str(row["class"])
               << std::setw(6) << str(row["d"]) << std::setw(26) << str(row["j_factored"]) << std::setw(16)
               << str(row["disc_min_factored"]) << str(row["rank_over_Q"]) << std::right << "\n";
            if (with_reason) os << "      " << first_reason(row) << "\n";
        }
    };
    os << "candidates: " << str(r["candidates"]) << "  surviving: " << r["surviving"].size()
       << "  pruned: " << r["pruned"].size() << "  excluded by twist lemma: " << str(r["excluded_by_twist_lemma"])
       << "\n\nsurviving (odd parity, p = 7)\n";
    table(r["surviving"], false);
    os << "\npruned\n";
    table(r["pruned"], true);
    return os.str();
}

Json twist_scan_report(const CurveRecord& rec, const Integer& p, const std::vector<CurveRecord>& db) {
    Json out;
    out["schema"] = 1;
    out["curve"] = rec.curve.to_string();
    out["p"] = p.get_str();
    Json rows = Json::array();
    for (const auto& e : twist_scan(rec.curve, p)) rows.push_back(twist_row(e, db));
    out["twists"] = rows;
    return out;
}

std::string render_twist_scan_text(const Json& r) {
    std::ostringstream os;
    os << "twists of " << str(r["curve"]) << " at p = " << str(r["p"]) << "\n";
    os << "       d  parity   disc_min                  label     reason\n";
    for (const auto& row : r["twists"]) {
        os << std::setw(8) << str(row["d"]) << "  " << std::left << std::setw(9) << str(row["parity"])
           << std::setw(26) << str(row["disc_min_factored"]) << std::setw(10) << str(row["label"]) << first_reason(row)
           << std::right << "\n";
    }
    return os.str();
}

}  // namespace taurank

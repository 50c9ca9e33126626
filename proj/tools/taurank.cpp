// taurank command-line front end.
//
// Exit codes: 0 ok, 2 malformed input, 3 unknown label, 4 singular curve,
// 5 database or IO error.

#include "taurank/report.hpp"
#include "taurank/rootnum.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace taurank;

enum Exit { kOk = 0, kMalformed = 2, kUnknownLabel = 3, kSingular = 4, kDatabase = 5 };

std::optional<Integer> opt_integer(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return parse_integer(s);
}

void emit(const Json& j, bool text, const std::string& rendered) {
    if (text) {
        std::cout << rendered;
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parity and lower bounds for the Lambda(H)-rank tau of elliptic curves over Q"};
    app.require_subcommand(1);

    std::string db_path;
    auto load_db = [&]() -> std::vector<CurveRecord> {
        if (db_path.empty()) return bundled_database();
        return ingest_database(db_path);
    };

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Full report for one curve");
    std::string curve_text, p_text = "7", selmer_text, lambda_text;
    bool pretty = false, json_flag = false;
    analyze->add_option("curve", curve_text, "[a1,a2,a3,a4,a6] or a database label")->required();
    analyze->add_option("--p", p_text, "prime p")->capture_default_str();
    analyze->add_option("--selmer-rank", selmer_text, "p-Selmer rank over K, if known");
    analyze->add_option("--lambda", lambda_text, "lambda-invariant, if known");
    analyze->add_flag("--pretty", pretty, "human-readable table");
    analyze->add_flag("--json", json_flag, "JSON output (default)");
    analyze->add_option("--db", db_path, "curve database (TSV)");

    // x07-points
    auto* x07 = app.add_subcommand("x07-points", "Integral points of X_0(7)");
    bool x07_json = false;
    x07->add_flag("--json", x07_json, "JSON output");

    // classify-exceptions
    auto* classify = app.add_subcommand("classify-exceptions", "Scan the four exceptional j-invariants");
    bool classify_json = false;
    classify->add_option("--db", db_path, "curve database (TSV) used for labels");
    classify->add_flag("--json", classify_json, "JSON output");

    // twist-scan
    auto* twist = app.add_subcommand("twist-scan", "Parity of every twist by d | p*Delta_min");
    std::string twist_curve, twist_p = "7";
    bool twist_json = false;
    twist->add_option("curve", twist_curve, "[a1,a2,a3,a4,a6] or a database label")->required();
    twist->add_option("--p", twist_p, "prime p")->capture_default_str();
    twist->add_option("--db", db_path, "curve database (TSV)");
    twist->add_flag("--json", twist_json, "JSON output");

    // growth
    auto* growth = app.add_subcommand("growth", "Closed-form tau / lambda evaluators");
    growth->require_subcommand(1);
    std::string g_tau, g_degree, g_p, g_m, g_n, g_lambda, g_s, g_q;
    auto* g_scale = growth->add_subcommand("tau-scale", "tau(K') = [K'^cyc : K^cyc] tau(K)");
    g_scale->add_option("--tau", g_tau)->required();
    g_scale->add_option("--degree", g_degree)->required();
    auto* g_lam = growth->add_subcommand("lambda", "main term tau_m p^(3(n-m))");
    g_lam->add_option("--tau", g_tau)->required();
    g_lam->add_option("--p", g_p)->required();
    g_lam->add_option("--m", g_m)->required();
    g_lam->add_option("--n", g_n)->required();
    auto* g_tfl = growth->add_subcommand("tau-from-lambda", "tau = lambda + s");
    g_tfl->add_option("--lambda", g_lambda)->required();
    g_tfl->add_option("--s", g_s, "s over K^cyc");
    g_tfl->add_option("--q", g_q, "derive s as the stable prime count above q");
    g_tfl->add_option("--p", g_p, "prime p for --q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kMalformed;
    }

    try {
        if (*analyze) {
            const auto db = load_db();
            const CurveRecord rec = parse_curve(curve_text, db);
            AnalysisOptions opts;
            opts.p = parse_integer(p_text);
            opts.selmer_rank = opt_integer(selmer_text);
            opts.lambda = opt_integer(lambda_text);
            opts.input_text = curve_text;
            if (opts.p < 2) throw ParseError("p must be at least 2");
            const Json r = analysis_report(rec, opts);
            emit(r, pretty && !json_flag, pretty ? render_analysis_text(r) : "");
        } else if (*x07) {
            const Json r = x07_points_report();
            emit(r, !x07_json, render_x07_text(r));
        } else if (*classify) {
            const Json r = classify_exceptions_report(load_db());
            emit(r, !classify_json, render_classify_text(r));
        } else if (*twist) {
            const auto db = load_db();
            const CurveRecord rec = parse_curve(twist_curve, db);
            const Integer p = parse_integer(twist_p);
            if (p < 5 || !is_prime(p)) throw ParseError("p must be a prime >= 5");
            const Json r = twist_scan_report(rec, p, db);
            emit(r, !twist_json, render_twist_scan_text(r));
        } else if (*growth) {
            Json r;
            r["schema"] = 1;
            if (*g_scale) {
                r["formula"] = "tau_scale";
                r["value"] = tau_scale(parse_integer(g_tau), parse_integer(g_degree)).get_str();
            } else if (*g_lam) {
                r["formula"] = "lambda_growth_main_term";
                const Integer m = parse_integer(g_m), n = parse_integer(g_n);
                if (m < 0 || n < 0 || !m.fits_ulong_p() || !n.fits_ulong_p()) throw ParseError("m, n out of range");
                r["value"] = lambda_growth_main_term(parse_integer(g_tau), parse_integer(g_p), m.get_ui(), n.get_ui())
                                 .get_str();
                r["remainder"] = "O(p^(2n))";
            } else {
                r["formula"] = "tau_from_lambda_s";
                Integer s;
                if (!g_s.empty()) {
                    s = parse_integer(g_s);
                } else if (!g_q.empty() && !g_p.empty()) {
                    s = primes_above_in_cyclotomic(parse_integer(g_q), parse_integer(g_p)).stable_count_in_cyc;
                    r["s_source"] = "primes above " + g_q + " in Q(mu_" + g_p + "^inf)";
                } else {
                    throw ParseError("tau-from-lambda needs --s or both --q and --p");
                }
                const Integer tau = tau_from_lambda_s(parse_integer(g_lambda), s);
                r["s"] = s.get_str();
                r["value"] = tau.get_str();
                if (tau == 0) r["note"] = "tau = 0 contradicts tau > 0 under (I)-(IV)";
            }
            std::cout << r.dump(2) << "\n";
        }
    } catch (const SingularCurveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSingular;
    } catch (const UnknownLabelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnknownLabel;
    } catch (const DatabaseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDatabase;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    }
    return kOk;
}

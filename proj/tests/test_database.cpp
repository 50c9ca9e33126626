#include "taurank/report.hpp"

#include <doctest.h>

#include <set>

using namespace taurank;

TEST_CASE("parse curve") {
    const auto r = parse_curve("[0,0,1,-1,0]");
    CHECK(minimal_model(r.curve).disc_min == 37);
    CHECK(r.label.empty());
    CHECK_FALSE(r.rational_input);

    const auto b = parse_curve("1369b1");
    CHECK(b.label == "1369b1");
    CHECK(b.curve == make_curve(1, -1, 0, 3166, -59359));
    REQUIRE(b.rank.has_value());
    CHECK(*b.rank == 1);

    CHECK_THROWS_AS(parse_curve("[0,0,0,0,0]"), SingularCurveError);
    CHECK_THROWS_AS(parse_curve("[0,0,1,-1]"), ParseError);
    CHECK_THROWS_AS(parse_curve("[0,0,1,-1,x]"), ParseError);
    CHECK_THROWS_AS(parse_curve("no such label"), ParseError);
    CHECK_THROWS_AS(parse_curve("9999z9"), UnknownLabelError);

    const auto q = parse_curve("[0, 0, 0, -1/16, 1/64]");
    CHECK(q.rational_input);
    CHECK(compute_invariants(q.curve).j == compute_invariants(make_curve(0, 0, 0, -16, 64)).j);
}

TEST_CASE("bundled database") {
    CHECK(ingest_database_text(bundled_exceptional_tsv()).size() == 16);
    const auto& db = bundled_database();
    CHECK(db.size() == 16 + ingest_database_text(bundled_sample_tsv()).size());
    std::set<std::string> labels;
    for (const auto& r : db) labels.insert(r.label);
    CHECK(labels.size() == db.size());
    CHECK(find_label(db, "3969f2") != nullptr);
    CHECK(find_label(db, "3969g1") == nullptr);
    const auto* iso = find_isomorphic(db, quadratic_twist(make_curve(1, -1, 1, 2, -2), 1));
    REQUIRE(iso != nullptr);
    CHECK(iso->label == "1369c1");
}

TEST_CASE("database ingestion") {
    CHECK(ingest_database_text("").empty());
    CHECK(ingest_database_text("# only a comment\n\n").empty());

    const auto recs = ingest_database_text("a1\t0,0,1,-1,0\t1\t3\nb1\t0,-1,1,0,0\t-\n");
    REQUIRE(recs.size() == 2);
    CHECK(*recs[0].rank == 1);
    CHECK(*recs[0].lambda == 3);
    CHECK_FALSE(recs[1].rank.has_value());

    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            ingest_database_text(text);
        } catch (const DatabaseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("a\t0,0,1,-1,0\n# c\nb\t0,0,1\n") == 3);
    CHECK(line_of("a\t0,0,1,-1,0\na\t0,-1,1,0,0\n") == 2);
    CHECK(line_of("a\t0,0,0,0,0\n") == 1);
    CHECK(line_of("\n\nlonely\n") == 3);
    CHECK(line_of("a\t0,0,1,-1,0\tone\n") == 1);
    CHECK_THROWS_AS(ingest_database("/nonexistent/curves.tsv"), DatabaseError);

    try {
        ingest_database_text("a\t0,0,1,-1,0\nb\tbad\n");
        FAIL("expected an error");
    } catch (const DatabaseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("analysis reports") {
    AnalysisOptions opts;
    const auto b = analysis_report(parse_curve("1369b1"), opts);
    CHECK(b["schema"] == 1);
    CHECK(b["parity"]["value"] == "Odd");
    CHECK(b["tau"]["exception_candidate"] == true);
    CHECK(b["invariants"]["disc_min_factored"] == "-37^8");

    const auto a = analysis_report(parse_curve("[0,0,1,-1,0]"), opts);
    CHECK(a["isogeny"]["has_7_isogeny"] == false);
    CHECK(a["parity"]["value"] == "Even");

    const auto e = analysis_report(parse_curve("3969e1"), opts);
    CHECK(e["parity"]["value"] == "Even");
    bool cites = false;
    for (const auto& r : e["parity"]["reasons"])
        cites = cites || (r["prime"] == "3" && r["valuation"] == "10" && r["rule"] == "v_not_divisible_by_4");
    CHECK(cites);

    const auto t = analysis_report(parse_curve("26b1"), opts);
    CHECK(t["torsion"]["has_7_torsion"] == true);
    CHECK(t["torsion"]["multiplicative_at_2"] == true);

    // determinism
    CHECK(analysis_report(parse_curve("1369b1"), opts).dump() == b.dump());
    CHECK_FALSE(render_analysis_text(b).empty());
}

TEST_CASE("classification report") {
    const auto r = classify_exceptions_report(bundled_database());
    CHECK(r["candidates"] == "16");
    REQUIRE(r["surviving"].size() == 8);
    REQUIRE(r["pruned"].size() == 8);
    std::set<std::string> surv;
    for (const auto& row : r["surviving"]) surv.insert(row["label"].is_null() ? "?" : row["label"].get<std::string>());
    CHECK(surv == std::set<std::string>{"1369b1", "1369b2", "67081b1", "67081b2", "3969a1", "3969a2", "3969c1",
                                        "3969c2"});
    for (const auto& row : r["pruned"]) {
        bool cites = false;
        for (const auto& rs : row["reasons"])
            cites = cites || (rs["prime"] == "37" && rs["valuation"] == "2") ||
                    (rs["prime"] == "3" && rs["valuation"] == "10");
        CHECK(cites);
    }
    CHECK(r["unlabelled"].empty());
    CHECK(classify_exceptions_report(bundled_database()).dump() == r.dump());
}

TEST_CASE("x07 report") {
    const auto r = x07_points_report();
    REQUIRE(r["points"].size() == 6);
    bool row1 = false, cm7 = false;
    for (const auto& e : r["points"]) {
        row1 = row1 || (e["t"] == "1" && e["j1_factored"] == "3^2*7*2647^3" && e["j2_factored"] == "3^2*7^4");
        cm7 = cm7 || (e["t"] == "-7" && e["j1_factored"] == "-3^3*5^3" && e["cm"] == true);
    }
    CHECK(row1);
    CHECK(cm7);
}

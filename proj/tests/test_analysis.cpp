#include <catch2/catch.hpp>

#include "tcone/analysis.hpp"
#include "tcone/search.hpp"

using namespace tcone;

TEST_CASE("analyze the worked example") {
    AnalysisReport rep = analyze({5, 6, 13});
    CHECK(rep.frobenius == 14);
    CHECK_FALSE(rep.symmetric);
    CHECK(rep.tangent.mu_i == 3);
    CHECK(rep.tangent.mu_istar == 4);
    CHECK_FALSE(rep.tangent.cohen_macaulay);
    CHECK(rep.tangent.h0_length == 2);
    CHECK(rep.tangent.buchsbaum_level == 2);
    REQUIRE(rep.tangent.gorenstein.has_value());
    CHECK_FALSE(*rep.tangent.gorenstein);
    CHECK(rep.classification.at("kind") == "herzog-nonsymmetric");
    CHECK(rep.tangent.hilbert.front() == 1);
    CHECK(rep.tangent.hilbert.back() == 5);
}

TEST_CASE("analyze validates input") {
    CHECK_THROWS_AS(analyze({4, 6}), error);
    try {
        analyze({4, 6});
    } catch (const error& e) {
        CHECK(e.code() == errc::gcd_not_one);
        CHECK(e.is_validation());
    }
    AnalysisReport one = analyze({1});
    CHECK(one.frobenius == -1);
    CHECK(one.tangent.gorenstein.value_or(false));
}

TEST_CASE("json round trip") {
    for (auto gens : std::vector<std::vector<long long>>{{5, 6, 13}, {8, 10, 12, 15}, {2, 3},
                                                         {9, 10, 11, 23}}) {
        AnalysisReport rep = analyze(gens);
        json j = to_json(rep);
        AnalysisReport back = report_from_json(json::parse(j.dump(2)));
        CHECK(back == rep);
    }
}

TEST_CASE("deterministic rendering") {
    AnalysisReport a = analyze({8, 10, 12, 15});
    AnalysisReport b = analyze({8, 10, 12, 15});
    json ja = to_json(a), jb = to_json(b);
    ja.erase("timing_ms");
    jb.erase("timing_ms");
    CHECK(ja.dump() == jb.dump());
    CHECK(to_text(a) == to_text(b));
}

TEST_CASE("gorenstein verdict for d=5 complete-intersection cones") {
    // <6,8,10,11,13>? pick a CI-friendly 5-generated instance instead:
    // the report leaves gorenstein unset unless mu(I*) = d - 1.
    AnalysisReport rep = analyze({7, 8, 9, 11, 13});
    if (rep.tangent.mu_istar == 4) CHECK(rep.tangent.gorenstein.value_or(false));
    else CHECK_FALSE(rep.tangent.gorenstein.has_value());
}

TEST_CASE("search summaries") {
    SearchOptions opt;
    opt.dim = 3;
    opt.max_gen = 15;
    opt.check = SearchCheck::Buchsbaum;
    SearchSummary sum = run_search(opt, true);
    CHECK(sum.instances > 20);
    CHECK(sum.violations.empty());
    CHECK(sum.max_mu_istar >= sum.max_mu_i);
    CHECK(static_cast<long long>(sum.rows.size()) == sum.instances);
    // CSV and JSON render without blowing up and stay deterministic.
    CHECK(to_csv(sum) == to_csv(sum));
    json j = to_json(sum);
    CHECK(j.at("violations").size() == 0);

    SearchOptions d3chain;
    d3chain.dim = 3;
    d3chain.max_gen = 13;
    d3chain.check = SearchCheck::GorensteinChain;
    CHECK(run_search(d3chain).violations.empty());

    SearchOptions cap;
    cap.dim = 5;
    cap.max_gen = 100000;
    CHECK_THROWS_AS(run_search(cap), error);
}

TEST_CASE("search worker pool matches single-threaded results") {
    SearchOptions opt;
    opt.dim = 3;
    opt.max_gen = 14;
    opt.check = SearchCheck::Dagger;
    opt.workers = 1;
    SearchSummary a = run_search(opt, true);
    opt.workers = 4;
    SearchSummary b = run_search(opt, true);
    CHECK(to_json(a).dump() == to_json(b).dump());
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].gens == b.rows[i].gens);
}

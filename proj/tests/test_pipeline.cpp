#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "gfguess/pipeline.hpp"

using namespace gfguess;

namespace {

nlohmann::json parsed_report(const Report& rep) {
    auto j = nlohmann::json::parse(emit_report(rep, ReportFormat::json));
    j.erase("timings");  // excluded from the comparison surface
    return j;
}

PipelineConfig quick_config() {
    PipelineConfig cfg;
    cfg.points = 6;
    cfg.precision = 80;
    return cfg;
}

}  // namespace

TEST_CASE("parse_sequence: list format") {
    Sequence s = parse_sequence("1, 2, 6, 16, 45", SequenceFormat::list);
    CHECK(s.terms == std::vector<Rat>{Rat(1), Rat(2), Rat(6), Rat(16), Rat(45)});

    Sequence r = parse_sequence("1, 1/2, 1/6", SequenceFormat::list);
    CHECK(r.terms == std::vector<Rat>{Rat(1), Rat(1, 2), Rat(1, 6)});

    Sequence ws = parse_sequence("1 2 3\n4, 5 # trailing comment", SequenceFormat::list);
    CHECK(ws.terms.size() == 5);
}

TEST_CASE("parse_sequence: bfile format") {
    Sequence s = parse_sequence("0 1\n1 1\n2 2\n", SequenceFormat::bfile);
    CHECK(s.terms == std::vector<Rat>{Rat(1), Rat(1), Rat(2)});

    // nonzero offset is normalized away
    Sequence o = parse_sequence("# header comment\n5 10\n6 20\n", SequenceFormat::bfile);
    CHECK(o.terms == std::vector<Rat>{Rat(10), Rat(20)});
}

TEST_CASE("parse_sequence: malformed input carries a line number") {
    try {
        parse_sequence("1, 2\n3, x4", SequenceFormat::list);
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(e.code == "malformed-line");
    }

    try {
        parse_sequence("0 1\n2 5\n", SequenceFormat::bfile);
        FAIL("expected non-contiguous error");
    } catch (const error& e) {
        CHECK(e.code == "non-contiguous-index");
    }

    CHECK_THROWS_AS(parse_sequence("1/0", SequenceFormat::list), parse_error);
}

TEST_CASE("run_pipeline: catalan, direct-only") {
    PipelineConfig cfg = quick_config();
    cfg.mode = PipelineMode::direct_only;
    Report rep = run_pipeline(cfg, fx::catalan());
    CHECK(rep.status == "conjecture-found");
    CHECK(rep.route == "direct");
    REQUIRE(rep.equation);
    auto j = parsed_report(rep);
    CHECK(j["equation"]["yCoeffs"].dump() == R"([["1"],["-1"],["0","1"]])");
    REQUIRE(rep.closed_form);
    REQUIRE(rep.closed_form->form);
    CHECK(rep.closed_form->form->branch == -1);
    CHECK(rep.closed_form->form->discriminant == IntPoly({Int(1), Int(-4)}));
    REQUIRE(rep.verification);
    CHECK(rep.verification->pass);
}

TEST_CASE("run_pipeline: all-ones through the lattice route") {
    Sequence ones;
    ones.terms.assign(10, Rat(1));
    Report rep = run_pipeline(quick_config(), ones);
    CHECK(rep.status == "conjecture-found");
    CHECK(rep.route == "lattice");
    REQUIRE(rep.recurrence);
    REQUIRE(rep.equation);
    CHECK(rep.equation->y_coeffs.size() == 2);
    CHECK(rep.equation->y_coeffs[0] == PolyQ(std::vector<Rat>{Rat(1)}));
    CHECK(rep.equation->y_coeffs[1] == PolyQ(std::vector<Rat>{Rat(-1), Rat(1)}));
    REQUIRE(rep.closed_form);
    REQUIRE(rep.closed_form->form);
    CHECK(rep.closed_form->form->y_deg == 1);
}

TEST_CASE("run_pipeline: recurrence-only stops after the fit") {
    PipelineConfig cfg = quick_config();
    cfg.mode = PipelineMode::recurrence_only;
    Report rep = run_pipeline(cfg, fx::catalan());
    CHECK(rep.status == "conjecture-found");
    CHECK(rep.route == "recurrence");
    CHECK(rep.recurrence);
    CHECK_FALSE(rep.equation);
    CHECK(rep.points.empty());
}

TEST_CASE("run_pipeline: config validation") {
    PipelineConfig cfg;
    cfg.m0 = 1;
    CHECK_THROWS_AS(run_pipeline(cfg, fx::catalan()), std::invalid_argument);
    PipelineConfig cfg2;
    cfg2.precision = 10;
    CHECK_THROWS_AS(run_pipeline(cfg2, fx::catalan()), std::invalid_argument);
    CHECK_THROWS_AS(run_pipeline(PipelineConfig{}, Sequence{}), std::invalid_argument);
}

TEST_CASE("run_pipeline: json report is deterministic") {
    PipelineConfig cfg = quick_config();
    cfg.mode = PipelineMode::direct_only;
    auto a = parsed_report(run_pipeline(cfg, fx::catalan()));
    auto b = parsed_report(run_pipeline(cfg, fx::catalan()));
    CHECK(a.dump() == b.dump());
}

TEST_CASE("report emission: text failure report names the stage") {
    Report rep;
    rep.status = "no-relation";
    rep.detail = "algdep found no minimal polynomial up to degree 6";
    std::string text = emit_report(rep, ReportFormat::text);
    CHECK(text.find("status: no-relation") != std::string::npos);
    CHECK(text.find("algdep") != std::string::npos);
}

TEST_CASE("parse of the emitted input echo is the identity") {
    PipelineConfig cfg = quick_config();
    cfg.mode = PipelineMode::direct_only;
    Report rep = run_pipeline(cfg, fx::catalan());
    auto j = nlohmann::json::parse(emit_report(rep, ReportFormat::json));
    std::string joined;
    for (const auto& t : j["input"]["terms"]) {
        if (!joined.empty()) joined += ", ";
        joined += t.get<std::string>();
    }
    Sequence back = parse_sequence(joined, SequenceFormat::list);
    CHECK(back.terms == fx::catalan().terms);
}

TEST_CASE("run_batch: isolation and ordering") {
    PipelineConfig cfg = quick_config();
    std::string text =
        "1,1,1,1,1,1,1,1,1,1\n"
        "1, x, 3\n"
        "1,2,4,8,16,32,64,128,256,512\n";
    auto reports = run_batch(cfg, text);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].status == "conjecture-found");
    CHECK(reports[1].status == "input-error");
    CHECK(reports[2].status == "conjecture-found");

    // corrupting one record must not affect the others
    std::string text2 =
        "1,1,1,1,1,1,1,1,1,1\n"
        "2, 7\n"
        "1,2,4,8,16,32,64,128,256,512\n";
    auto reports2 = run_batch(cfg, text2);
    REQUIRE(reports2.size() == 3);
    CHECK(parsed_report(reports[0]).dump() == parsed_report(reports2[0]).dump());
    CHECK(parsed_report(reports[2]).dump() == parsed_report(reports2[2]).dump());

    CHECK(run_batch(cfg, "").empty());
    CHECK(run_batch(cfg, "# only a comment\n\n").empty());
}

TEST_CASE("negative control: pi digits fail cleanly") {
    PipelineConfig cfg = quick_config();
    Report rep = run_pipeline(cfg, fx::pi_digits());
    CHECK(rep.status != "conjecture-found");
    CHECK(rep.status != "input-error");
    // structural invariant: only a passing verification can accompany success
    if (rep.verification) CHECK_FALSE(rep.verification->pass);
}

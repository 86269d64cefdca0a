#include <doctest.h>

#include "fixtures.hpp"

using namespace casimir;
using fx::q;

namespace {
Json kc2_json() {
    return Json::parse(R"({
        "dim": 2,
        "field": {"type": "rational"},
        "structure_constants": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[1,1,0,"1"]],
        "unit": ["1","0"],
        "lambda": ["1","0"]
    })");
}

template <class F>
ErrorKind error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Internal;
}
}  // namespace

TEST_CASE("algebra input round trip") {
    auto in = parse_input(kc2_json());
    CHECK(in.kind == "algebra");
    CHECK(in.algebra->dim() == 2);
    REQUIRE(in.lambda.has_value());
    auto out = input_json(in);
    CHECK(out == kc2_json());
    CHECK(input_json(parse_input(out)) == out);
}

TEST_CASE("hopf input round trip") {
    for (auto H : {fx::kG("S3"), dual_hopf(fx::kG("C6")), drinfeld_double(named_group("C2"))}) {
        auto j = hopf_json(H);
        auto in = parse_input(j);
        REQUIRE(in.hopf.has_value());
        CHECK(hopf_json(*in.hopf) == j);
    }
}

TEST_CASE("group descriptions") {
    auto in = parse_input(Json{{"group", "S3"}, {"as", "double"}});
    CHECK(in.kind == "double");
    CHECK(in.algebra->dim() == 36);
    auto s = group_shorthand("dual(Q8)");
    REQUIRE(s.has_value());
    CHECK((*s)["as"] == "dual");
    CHECK_FALSE(group_shorthand("nonsense").has_value());
    auto t = parse_input(Json::parse(R"({"group": {"table": [[0,1],[1,0]]}})"));
    CHECK(t.algebra->dim() == 2);
    auto wide = parse_input(Json{{"group", "S3"}}, 6);
    CHECK(wide.algebra->zero().conductor() == 6);
}

TEST_CASE("input errors") {
    auto j = kc2_json();
    j["structure_constants"][0][0] = 5;
    CHECK(error_of([&] { parse_input(j); }) == ErrorKind::InvalidInput);
    auto u = kc2_json();
    u["unit"] = Json::array({"1"});
    CHECK(error_of([&] { parse_input(u); }) == ErrorKind::InvalidInput);
    auto f = kc2_json();
    f["field"] = Json{{"type", "padic"}};
    CHECK(error_of([&] { parse_input(f); }) == ErrorKind::InvalidInput);
    CHECK(error_of([&] { parse_input(Json{{"group", "S3"}}, 4); }) == ErrorKind::InvalidInput);
    CHECK(error_of([&] { parse_scalar(Json("1/0"), fx::Q()); }) != ErrorKind::Internal);
}

TEST_CASE("conductor extension of structure-constant input") {
    auto in = parse_input(kc2_json(), 4);
    CHECK(in.algebra->zero().conductor() == 4);
    CHECK((*in.lambda)[0] == Cyclotomic(CyclotomicField::get(4), Rational(1)));
}

TEST_CASE("digests") {
    auto a = digest(kc2_json());
    CHECK(a.size() == 16);
    CHECK(a == digest(kc2_json()));
    auto j = kc2_json();
    j["lambda"] = Json::array({"2", "0"});
    CHECK(digest(j) != a);
}

TEST_CASE("analysis is deterministic across execution modes") {
    AnalyzeOptions serial;
    serial.parallel = false;
    AnalyzeOptions threaded;
    for (const char* g : {"S3", "Q8"}) {
        Json in = *group_shorthand(g);
        auto a = analyze(in, serial);
        auto b = analyze(in, threaded);
        CHECK(a.exit_code == 0);
        CHECK(without_provenance(a.report) == without_provenance(b.report));
        CHECK_FALSE(without_provenance(a.report).contains("provenance"));
    }
}

TEST_CASE("timing is opt-in") {
    AnalyzeOptions o;
    auto plain = analyze(*group_shorthand("C2"), o);
    CHECK_FALSE(plain.report["provenance"].contains("timing_ms"));
    o.timing = true;
    auto timed = analyze(*group_shorthand("C2"), o);
    CHECK(timed.report["provenance"].contains("timing_ms"));
}

TEST_CASE("reports replay") {
    auto r = analyze(*group_shorthand("S3"), {});
    REQUIRE(r.exit_code == 0);
    auto v = replay_report(r.report);
    CHECK_MESSAGE(v.passed(), v.summary());
    auto custom = analyze(kc2_json(), {});
    CHECK(custom.exit_code == 0);
    CHECK(replay_report(custom.report).passed());

    auto tampered = r.report;
    tampered["wedderburn"]["blocks"][0]["idempotent"][0] = "1/5";
    CHECK_FALSE(replay_report(tampered).passed());
}

TEST_CASE("exit codes") {
    CHECK(exit_code_for(ErrorKind::InvalidInput) == 2);
    CHECK(exit_code_for(ErrorKind::AxiomFailure) == 2);
    CHECK(exit_code_for(ErrorKind::NotSemisimple) == 1);
    CHECK(exit_code_for(ErrorKind::InapplicableHypothesis) == 1);
    CHECK(exit_code_for(ErrorKind::EquivalenceViolation) == 3);

    auto bad = kc2_json();
    bad["structure_constants"][3][3] = "2";
    bad["structure_constants"].push_back(Json::array({0, 1, 0, "1"}));
    auto r = analyze(bad, {});
    CHECK(r.exit_code == 2);
    CHECK(r.report["status"] != "pass");

    auto rescaled = kc2_json();
    rescaled["lambda"] = Json::array({"3", "0"});
    auto rr = analyze(rescaled, {});
    CHECK(rr.exit_code == 1);
}

TEST_CASE("text rendering") {
    auto r = analyze(*group_shorthand("S3"), {});
    auto text = render_text(r.report);
    CHECK(text.find("1, 1, 2") != std::string::npos);
}

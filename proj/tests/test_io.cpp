#include "doctest.h"

#include <fstream>
#include <sstream>

#include "core/io.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace saacbr;
using namespace saacbr::testing;

TEST_SUITE_BEGIN("io");

namespace {

std::string data_path(const std::string& name) {
    return std::string(SAACBR_TEST_DATA_DIR) + "/" + name;
}

Casebase<FeatureSet> load_validated(const std::string& name) {
    LoadResult loaded = load_casebase_file(data_path(name));
    Case<FeatureSet> def = loaded.default_argument.value_or(
        Case<FeatureSet>{"default", FeatureSet{}, "-"});
    return validate_casebase(loaded.cases, def);
}

} // namespace

TEST_CASE("load the worked example from json") {
    Casebase<FeatureSet> cb = load_validated("figure1.json");
    REQUIRE(cb.cases.size() == 4);
    CHECK(cb.default_argument.id == "C0");
    CHECK(cb.default_argument.outcome == "-");
    CHECK(cb.default_argument.characterisation == FeatureSet{});
    CHECK(cb.cases[1].id == "C2");
    CHECK(cb.cases[1].characterisation == FeatureSet::parse("A,B,C"));
    CHECK(cb.outcomes.complement == "+");
}

TEST_CASE("load the worked example from csv") {
    LoadResult loaded = load_casebase_file(data_path("figure1.csv"));
    CHECK_FALSE(loaded.default_argument.has_value());
    REQUIRE(loaded.cases.size() == 4);
    CHECK(loaded.cases[0].id == "R1");
    CHECK(loaded.cases[0].characterisation == FeatureSet::parse("A"));
    CHECK(loaded.cases[0].outcome == "+");
    CHECK(loaded.cases[3].characterisation == FeatureSet::parse("A,B,D"));

    // the csv casebase mines the same framework as the json one
    Casebase<FeatureSet> csv_cb =
        validate_casebase(loaded.cases, Case<FeatureSet>{"C0", FeatureSet{}, "-"});
    Casebase<FeatureSet> json_cb = load_validated("figure1.json");
    FeatureSet x_new = figure1_new_case();
    auto renamed = oracle_mine(json_cb, x_new, Mode::Saacbr);
    auto mined = oracle_mine(csv_cb, x_new, Mode::Saacbr);
    CHECK(mined.attacks.size() == renamed.attacks.size());
    CHECK(mined.supports.size() == renamed.supports.size());
}

TEST_CASE("csv parse errors carry context") {
    CHECK_THROWS_WITH_AS(parse_casebase("A,B\n1,0\n", FileFormat::Csv),
                         doctest::Contains("no \"label\" column"), ParseError);
    CHECK_THROWS_WITH_AS(parse_casebase("A,label\n2,+\n", FileFormat::Csv),
                         doctest::Contains("expected 0 or 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_casebase("A,label\n1\n", FileFormat::Csv),
                         doctest::Contains("row 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_casebase("A,A,label\n1,1,+\n", FileFormat::Csv),
                         doctest::Contains("duplicate feature column"), ParseError);
    CHECK_THROWS_WITH_AS(parse_casebase("A,label\n1,\n", FileFormat::Csv),
                         doctest::Contains("empty label"), ParseError);
    CHECK_THROWS_AS(parse_casebase("", FileFormat::Csv), ParseError);
}

TEST_CASE("json parse errors carry context") {
    CHECK_THROWS_AS(parse_casebase("{not json", FileFormat::Json), ParseError);
    CHECK_THROWS_WITH_AS(parse_casebase("[]", FileFormat::Json),
                         doctest::Contains("top level"), ParseError);
    CHECK_THROWS_WITH_AS(parse_casebase("{}", FileFormat::Json),
                         doctest::Contains("\"cases\""), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_casebase(R"({"cases": [{"features": ["A"], "outcome": "+"}]})", FileFormat::Json),
        doctest::Contains("id"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_casebase(R"({"cases": [{"id": "C1", "features": "A", "outcome": "+"}]})",
                       FileFormat::Json),
        doctest::Contains("features"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_casebase(R"({"cases": [{"id": "C1", "features": ["A"], "outcome": ""}]})",
                       FileFormat::Json),
        doctest::Contains("outcome"), ParseError);
}

TEST_CASE("data errors surface distinctly from parse errors") {
    // three labels across cases
    LoadResult three = parse_casebase(
        R"({"cases": [
            {"id": "C1", "features": ["A"], "outcome": "+"},
            {"id": "C2", "features": ["B"], "outcome": "0"}]})",
        FileFormat::Json);
    CHECK_THROWS_WITH_AS(
        validate_casebase(three.cases, Case<FeatureSet>{"default", FeatureSet{}, "-"}),
        doctest::Contains("more than two outcome labels"), DataError);

    // duplicate ids
    LoadResult dup = parse_casebase(
        R"({"cases": [
            {"id": "C1", "features": ["A"], "outcome": "+"},
            {"id": "C1", "features": ["B"], "outcome": "-"}]})",
        FileFormat::Json);
    CHECK_THROWS_WITH_AS(
        validate_casebase(dup.cases, Case<FeatureSet>{"default", FeatureSet{}, "-"}),
        doctest::Contains("duplicate case id"), DataError);

    // missing file is an io error
    CHECK_THROWS_AS(load_casebase_file("/no/such/file.json"), IoError);
}

TEST_CASE("duplicate csv rows are dropped with a note") {
    LoadResult loaded =
        parse_casebase("A,label\n1,+\n1,+\n0,-\n", FileFormat::Csv);
    REQUIRE(loaded.cases.size() == 3);
    Casebase<FeatureSet> cb =
        validate_casebase(loaded.cases, Case<FeatureSet>{"default", FeatureSet{}, "-"});
    CHECK(cb.cases.size() == 1); // R2 repeats R1, R3 duplicates the default
    CHECK(cb.notes.size() == 2);
}

TEST_CASE("serialize then reload reproduces the casebase") {
    Casebase<FeatureSet> cb = load_validated("figure1.json");
    std::string text = serialize_casebase(cb);

    LoadResult reloaded = parse_casebase(text, FileFormat::Json);
    REQUIRE(reloaded.default_argument.has_value());
    Casebase<FeatureSet> cb2 = validate_casebase(reloaded.cases, *reloaded.default_argument);

    CHECK(cb2.default_argument.id == cb.default_argument.id);
    CHECK(cb2.default_argument.outcome == cb.default_argument.outcome);
    CHECK(cb2.default_argument.characterisation == cb.default_argument.characterisation);
    REQUIRE(cb2.cases.size() == cb.cases.size());
    for (std::size_t i = 0; i < cb.cases.size(); ++i) {
        CHECK(cb2.cases[i].id == cb.cases[i].id);
        CHECK(cb2.cases[i].characterisation == cb.cases[i].characterisation);
        CHECK(cb2.cases[i].outcome == cb.cases[i].outcome);
    }

    // serialization is canonical: a second pass is byte-identical
    CHECK(serialize_casebase(cb2) == text);
}

TEST_CASE("dot export of the worked example") {
    Casebase<FeatureSet> cb = figure1_casebase(Mode::Saacbr);
    BipolarFramework baf = mine_framework(cb, figure1_new_case(), Mode::Saacbr);

    std::string bipolar = export_dot(baf);
    CHECK(bipolar == R"(digraph saacbr {
  node [shape=box];
  "C0" [label="C0: {} / -"];
  "C1" [label="C1: {A} / +"];
  "C2" [label="C2: {A,B,C} / +"];
  "C3" [label="C3: {A,B} / -"];
  "C4" [label="C4: {A,B,D} / -"];
  "N" [label="N: {A,B,C,D} / ?"];
  "C1" -> "C0" [style=solid];
  "C2" -> "C3" [style=solid];
  "C3" -> "C1" [style=solid];
  "C4" -> "C3" [style=bold];
}
)");

    std::string translated = export_dot(translate(baf));
    CHECK(translated.find("\"C4\" -> \"C1\" [style=dashed];") != std::string::npos);
    CHECK(translated.find("style=bold") == std::string::npos);

    // byte-stable across repeated pipelines
    BipolarFramework again = mine_framework(cb, figure1_new_case(), Mode::Saacbr);
    CHECK(export_dot(again) == bipolar);
    CHECK(export_dot(translate(again)) == translated);
}

TEST_CASE("dot export marks irrelevance attacks and empty casebases") {
    Casebase<FeatureSet> cb = build_casebase({}, default_config(Mode::Saacbr));
    BipolarFramework baf = mine_framework(cb, FeatureSet::parse("A"), Mode::Saacbr);
    std::string dot = export_dot(baf);
    CHECK(dot.find("\"N\"") != std::string::npos);
    CHECK(dot.find("->") == std::string::npos); // two nodes, no edges

    std::vector<Case<FeatureSet>> cases = {{"C5", FeatureSet::parse("E"), "+"}};
    Casebase<FeatureSet> cb2 = build_casebase(cases, default_config(Mode::Saacbr));
    std::string dot2 = export_dot(mine_framework(cb2, FeatureSet::parse("A"), Mode::Saacbr));
    CHECK(dot2.find("\"N\" -> \"C5\" [style=solid, color=grey50];") != std::string::npos);
}

TEST_CASE("prediction renderings are deterministic and complete") {
    Casebase<FeatureSet> cb = figure1_casebase(Mode::Saacbr);
    Prediction p = predict(cb, figure1_config(Mode::Saacbr), figure1_new_case());

    std::string json = prediction_to_json(p);
    CHECK(json.find("\"outcome\": \"-\"") != std::string::npos);
    CHECK(json.find("\"kind\": \"supported\"") != std::string::npos);
    CHECK(json == prediction_to_json(p));

    std::string text = prediction_to_text(p);
    CHECK(text.find("outcome: -") == 0);
    CHECK(text.find("default: accepted") != std::string::npos);

    EvalReport report = evaluate_loo(cb, figure1_config(Mode::Saacbr));
    CHECK(eval_to_json(report) == eval_to_json(report));
    CHECK(eval_to_text(report).find("accuracy 0.2500") != std::string::npos);
}

TEST_SUITE_END();

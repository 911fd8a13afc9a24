#include <doctest.h>

#include "pdisk/dynnikov.hpp"
#include "pdisk/family.hpp"

using namespace pdisk;

namespace {

std::string data(const std::string& name) { return std::string(PDISK_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("three-curve D_5 file") {
  const CurveFamily f = resolve(load_family(data("mixed_d5.json")));
  CHECK(f.size() == 3);
  CHECK(f.curve(0) == make_relaxed(f.disk(), 1, 3));
  const Analysis a = analyze(f);
  CHECK(a.complete());
  CHECK(summary_line(f, a) == "P1={c1,c3} P2={c2} G = Z^2 * Z");
  CHECK(a.iota == std::vector<Count>{0, 2, 0, 2, 0, 2, 0, 2, 0});
}

TEST_CASE("relaxed entries, default labels and words") {
  const FamilyDocument doc = parse_family(
      R"({"n": 5, "curves": [{"relaxed": [1, 3]}, {"label": "b", "relaxed": [2, 4]},
                             {"word": ["t1^2", "t2^-1"], "seed": "b"}]})");
  CHECK(doc.entries[0].label == "c1");
  CHECK(doc.entries[1].label == "b");
  CHECK(doc.entries[2].kind == CurveSpec::Kind::word);
  const CurveFamily f = resolve(doc);
  CHECK(f.label(2) == "c3");
  CHECK(f.curve(2) == dehn_twist(f.curve(1), f.curve(0), 2));
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_WITH_AS(parse_family("{\"n\": 5,\n \"curves\": [}"), doctest::Contains("line 2, column 13"), FamilyError);
  CHECK_THROWS_AS(parse_family("[1, 2]"), FamilyError);
  CHECK_THROWS_AS(parse_family(R"({"curves": []})"), FamilyError);
  CHECK_THROWS_WITH_AS(parse_family(R"({"n": 5, "curves": []})"), "empty family", FamilyError);
  CHECK_THROWS_AS(parse_family(R"({"n": 2, "curves": [{"relaxed": [1, 2]}]})"), FamilyError);
  CHECK_THROWS_AS(parse_family(R"({"n": 5, "curves": [{"relaxed": [1, 2], "coords": [1]}]})"), FamilyError);
  CHECK_THROWS_AS(parse_family(R"({"n": 5, "curves": [{"relaxed": [1, 2, 3]}]})"), FamilyError);
  CHECK_THROWS_AS(parse_family(R"({"n": 5, "curves": [{"word": "t1"}]})"), FamilyError);
  CHECK_THROWS_AS(parse_family(R"({"n": 5, "curves": [{"word": "x1", "seed": "c1"}]})"), FamilyError);
  CHECK_THROWS_AS(load_family(data("nonexistent.json")), FamilyError);
}

TEST_CASE("documents that parse but do not describe a family") {
  auto bad = [](const std::string& text) { return resolve(parse_family(text)); };
  CHECK_THROWS_AS(bad(R"({"n": 5, "curves": [{"relaxed": [1, 5]}]})"), FamilyError);
  CHECK_THROWS_AS(bad(R"({"n": 5, "curves": [{"coords": [0, 0, 0, 0, 0, 0]}]})"), FamilyError);
  CHECK_THROWS_AS(bad(R"({"n": 5, "curves": [{"coords": [0, 0]}]})"), FamilyError);
  CHECK_THROWS_AS(bad(R"({"n": 5, "curves": [{"relaxed": [1, 2]}, {"label": "c1", "relaxed": [2, 3]}]})"),
                  FamilyError);
  CHECK_THROWS_WITH_AS(bad(R"({"n": 5, "curves": [{"relaxed": [1, 2]}, {"word": "t2", "seed": "c1"}]})"),
                       doctest::Contains("unbound generator t2"), FamilyError);
  CHECK_THROWS_WITH_AS(bad(R"({"n": 5, "curves": [{"relaxed": [1, 2]}, {"word": "t1", "seed": "c9"}]})"),
                       doctest::Contains("unknown seed c9"), FamilyError);
  // two components
  CHECK_THROWS_AS(bad(R"({"n": 5, "curves": [{"coords": [0, 0, 0, 1, 0, 1]}]})"), FamilyError);
}

TEST_CASE("json report") {
  const CurveFamily f = resolve(load_family(data("mixed_d5.json")));
  const nlohmann::json j = json_report(f, analyze(f));
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["n"] == 5);
  CHECK(j["complete"] == true);
  CHECK(j["group"]["summary"] == "Z^2 * Z");
  CHECK(j["partition"] == nlohmann::json::parse(R"([["c1", "c3"], ["c2"]])"));
  CHECK(j["decisive"]["c1"] == nlohmann::json::parse(R"(["R_{1,2}"])"));
  CHECK(j["curves"][1]["coords"] == nlohmann::json::parse("[0, 0, 0, -1, 0, 1]"));
}

TEST_CASE("reports for families that fail") {
  const CurveFamily f = resolve(load_family(data("incomplete.json")));
  const Analysis a = analyze(f);
  CHECK_FALSE(a.complete());
  CHECK(summary_line(f, a) ==
        "P1={c1,c2,c3} doesn't give a complete partition: intersecting curves in one part (c2, c3)");
  CHECK(json_report(f, a)["failure"]["kind"] == "intersecting curves in one part");

  const CurveFamily g = resolve(load_family(data("not_opposite.json")));
  const Analysis b = analyze(g);
  CHECK_FALSE(b.partition.has_value());
  CHECK(summary_line(g, b) == "not a family of opposite curves: c1 and c2 intersect without opposite loops");
}

TEST_CASE("reports are deterministic") {
  const CurveFamily f = resolve(load_family(data("maximal_d6.json")));
  CHECK(text_report(f, analyze(f)) == text_report(f, analyze(f)));
  CHECK(json_report(f, analyze(f)).dump() == json_report(f, analyze(f)).dump());
}

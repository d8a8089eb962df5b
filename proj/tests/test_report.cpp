#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "liedeform/report.hpp"

using namespace liedeform;

TEST(Report, JsonRoundTrip) {
  Report r = build_report("isim");
  std::string text = emit_json(r);
  EXPECT_EQ(parse_json(text), r);
  EXPECT_EQ(emit_json(parse_json(text)), text);
}

TEST(Report, Deterministic) { EXPECT_EQ(emit_json(build_report("iso3")), emit_json(build_report("iso3"))); }

TEST(Report, DeSitterMatricesInJson) {
  auto j = nlohmann::json::parse(emit_json(build_report("poincare")));
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  auto& reps = j["representations"];
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_EQ(reps[0]["count"], 1);
  EXPECT_FALSE(reps[0]["affine_only"].get<bool>());
  auto& pt = reps[0]["representatives"][0]["p_t"];
  EXPECT_EQ(pt[4][0], "-1");
  EXPECT_EQ(pt[0][4], "1");
  EXPECT_EQ(reps[0]["representatives"][0]["p_x"][4][1], "1");
}

TEST(Report, RationalsAreExactStrings) {
  auto j = nlohmann::json::parse(emit_json(build_report("isim")));
  for (auto& r : j["representations"])
    for (auto& [k, v] : r["assignment"].items()) EXPECT_TRUE(v.is_string()) << k;
  for (auto& f : j["families"])
    for (auto& [k, v] : f["substitutions"].items()) EXPECT_TRUE(v.is_string()) << k;
}

TEST(Report, MarkdownHasOneRowPerTableEntry) {
  std::string md = emit_markdown(build_report("te2"));
  std::size_t rows = 0;
  std::istringstream is(md);
  for (std::string line; std::getline(is, line);)
    if (line.rfind("| d", 0) == 0) ++rows;
  EXPECT_EQ(rows, 5u);
  EXPECT_NE(md.find("unresolved"), std::string::npos);
}

TEST(Report, LatexUsesFractions) {
  std::string tex = emit_latex(build_report("isim"));
  EXPECT_NE(tex.find("\\begin{pmatrix}"), std::string::npos);
  EXPECT_NE(tex.find("\\frac{"), std::string::npos);
}

TEST(Report, MalformedJsonIsParseError) {
  EXPECT_THROW(parse_json("{"), ParseError);
  EXPECT_THROW(parse_json("{\"algebra\": 3}"), ParseError);
}

TEST(Report, GroupElementsCarryTolerance) {
  Report r = build_report("isim");
  ASSERT_FALSE(r.group_elements.empty());
  for (auto& g : r.group_elements) {
    EXPECT_DOUBLE_EQ(g.tolerance, 1e-12);
    EXPECT_TRUE(g.verified) << g.family << "/" << g.generator;
  }
}

// Keeps the shipped schema and the emitter in step: same keys on every object.
TEST(Report, KeysMatchShippedSchema) {
  std::ifstream in(LIEDEFORM_SCHEMA_PATH);
  ASSERT_TRUE(in) << LIEDEFORM_SCHEMA_PATH;
  auto schema = nlohmann::json::parse(in);
  auto keys = [](const nlohmann::json& obj) {
    std::set<std::string> k;
    for (auto& [key, v] : obj.items()) k.insert(key);
    return k;
  };
  auto required = [](const nlohmann::json& def) { return def["required"].get<std::set<std::string>>(); };
  auto j = nlohmann::json::parse(emit_json(build_report("isim")));
  EXPECT_EQ(keys(j), required(schema));
  EXPECT_EQ(keys(j["families"][0]), required(schema["$defs"]["family"]));
  EXPECT_EQ(keys(j["representations"][0]), required(schema["$defs"]["representation"]));
  EXPECT_EQ(keys(j["group_elements"][0]), required(schema["$defs"]["group_element"]));
  EXPECT_EQ(keys(j["group_elements"][0]["blocks"][0]), required(schema["$defs"]["block"]));
  EXPECT_EQ(j["schema_version"], schema["properties"]["schema_version"]["const"]);
}

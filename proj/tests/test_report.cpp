#include <doctest.h>

#include "prodquot/errors.hpp"
#include "prodquot/report.hpp"

using namespace prodquot;

TEST_CASE("structure JSON round-trip") {
  const auto gc = classify_group(std::make_shared<const FiniteGroup>(make_abelian({{5, 5}})));
  for (const auto& cls : gc.classes) {
    const auto j = to_json(cls.representative);
    CHECK(j["schema"] == kReportSchema);
    const auto back = structure_from_json(Json::parse(j.dump()));
    CHECK(back.first == cls.representative.first);
    CHECK(back.second == cls.representative.second);
    CHECK(back.group->spec() == cls.representative.group->spec());
    CHECK(to_json(back) == j);
  }
}

TEST_CASE("structure JSON for a permutation group") {
  const auto fx = example_fixture(1);
  const auto g = std::make_shared<const FiniteGroup>(parse_group_spec(fx.group_spec));
  std::vector<Elem> a, b;
  for (const auto& e : fx.tuple_first) a.push_back(resolve_entry(*g, fx.named_generators, e));
  for (const auto& e : fx.tuple_second) b.push_back(resolve_entry(*g, fx.named_generators, e));
  const auto st = build_structure(SphericalSystem(g, a), SphericalSystem(g, b));
  const auto back = structure_from_json(to_json(st));
  CHECK(back.first == st.first);
  CHECK(back.second == st.second);
}

TEST_CASE("malformed structures") {
  CHECK_THROWS_AS(structure_from_json(Json::array()), MalformedInput);
  CHECK_THROWS_AS(structure_from_json(Json{{"group", "ab:5,5"}}), MalformedInput);
  CHECK_THROWS_AS(structure_from_json(Json{{"schema", 2}, {"group", "ab:5,5"}, {"systems", Json::array()}}),
                  MalformedInput);
  Json bad_label = {{"group", "ab:5,5"},
                    {"systems", {{{"tuple", {"(1,0)", "(0,1)", "(9,9)"}}}, {{"tuple", {"(1,2)", "(3,4)", "(1,4)"}}}}}};
  CHECK_THROWS_AS(structure_from_json(bad_label), MalformedInput);
  Json not_free = {{"group", "ab:5,5"},
                   {"systems", {{{"tuple", {"(1,0)", "(0,1)", "(4,4)"}}}, {{"tuple", {"(1,0)", "(0,1)", "(4,4)"}}}}}};
  CHECK_THROWS_AS(structure_from_json(not_free), ActionNotFree);
  Json not_sgs = {{"group", "ab:5,5"},
                  {"systems", {{{"tuple", {"(1,0)", "(0,1)", "(4,3)"}}}, {{"tuple", {"(1,2)", "(3,4)", "(1,4)"}}}}}};
  CHECK_THROWS_AS(structure_from_json(not_sgs), MalformedInput);
  Json mismatch = {{"group", "ab:5,5"},
                   {"systems",
                    {{{"group", "ab:25"}, {"tuple", {"(1)", "(2)", "(22)"}}}, {{"tuple", {"(1,2)", "(3,4)", "(1,4)"}}}}}};
  CHECK_THROWS_AS(structure_from_json(mismatch), GroupMismatch);
}

TEST_CASE("reports are byte-stable") {
  ClassifyRequest one;
  one.max_order = 30;
  ClassifyRequest four = one;
  four.jobs = 4;
  auto a = cmd_classify(one);
  auto b = cmd_classify(four);
  a.seconds.reset();
  b.seconds.reset();
  CHECK(a.to_json().dump(2) == b.to_json().dump(2));
  CHECK(a.markdown == b.markdown);
  CHECK_FALSE(a.to_json().contains("timing_seconds"));
}

TEST_CASE("classify report content") {
  ClassifyRequest req;
  req.max_order = 25;
  const auto rep = cmd_classify(req);
  const auto& groups = rep.result["groups"];
  REQUIRE(groups.size() == 4);
  CHECK(groups[3]["name"] == "(Z/5)^2");
  CHECK(groups[3]["class_count"] == 2);
  CHECK(groups[3]["classes"][0]["h1"] == Json::array({5, 5}));
  CHECK(groups[3]["signature_pairs"][0]["raw_free"] == 11520);
  CHECK(rep.markdown.find("| (Z/5)^2 | 2 | 0, 0 | (Z/5)^2 |") != std::string::npos);
  // The canonical structure feeds straight into homology.
  const auto h = cmd_homology(groups[3]["classes"][0]["canonical"]);
  CHECK(h.result["h1"] == Json::array({5, 5}));
  CHECK(h.result["invariants"]["K2"] == 8);

  ClassifyRequest single;
  single.group_spec = "ab:2,2";
  const auto v4 = cmd_classify(single);
  REQUIRE(v4.result["groups"].size() == 1);
  CHECK(v4.result["groups"][0]["class_count"] == 0);
  single.group_spec = "ab:101";
  CHECK_THROWS_AS(cmd_classify(single), SizeCapExceeded);
}

TEST_CASE("verify and signatures commands") {
  const auto v = cmd_verify_examples(std::nullopt);
  CHECK(v.exit_code == ExitCode::ok);
  CHECK(v.result["examples"].size() == 5);
  CHECK(cmd_verify_examples(2).result["examples"][0]["second_reversed"] == true);
  CHECK_THROWS_AS(cmd_verify_examples(6), MalformedInput);

  const auto s = cmd_signatures("ab:2,2,2");
  CHECK(s.result["pairs"].size() == 1);
  CHECK(s.result["pairs"][0]["genera"] == Json::array({3, 5}));
}

TEST_CASE("non-abelian homology is refused") {
  const auto fx = example_fixture(4);
  const auto g = std::make_shared<const FiniteGroup>(parse_group_spec(fx.group_spec));
  std::vector<Elem> a, b;
  for (const auto& e : fx.tuple_first) a.push_back(resolve_entry(*g, fx.named_generators, e));
  for (const auto& e : fx.tuple_second) b.push_back(resolve_entry(*g, fx.named_generators, e));
  const auto j = to_json(build_structure(SphericalSystem(g, a), SphericalSystem(g, b)));
  CHECK_THROWS_AS(cmd_homology(j), UnsupportedHypothesis);
}

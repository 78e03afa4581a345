#include <string>

#include "cubeplan/io.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cubeplan;

namespace {

Pip make_pip(std::vector<std::string> elements, std::vector<NamePair> covers,
             std::vector<NamePair> inconsistent) {
  return Pip(close(PipData{std::move(elements), std::move(covers),
                           std::move(inconsistent)}));
}

Bitset ideal_of(const Pip& pip, const std::vector<std::string>& names) {
  Bitset out(pip.size());
  for (const auto& name : names) out.set(pip.index_of(name));
  return out;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("pip descriptions round-trip through JSON") {
  Pip pip = make_pip({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}},
                     {{"b", "c"}, {"c", "d"}});
  std::string text = pip_to_json(pip);
  Pip back = pip_from_json(text);
  CHECK(back.elements() == pip.elements());
  CHECK(back.hasse_covers() == pip.hasse_covers());
  CHECK(back.minimal_inconsistent() == pip.minimal_inconsistent());
  CHECK(back.count_consistent_ideals() == pip.count_consistent_ideals());
  CHECK(pip_to_json(back) == text);  // serialization is a fixed point
}

TEST_CASE("pip JSON accepts minimal conflicts and closes them upward") {
  std::string text = R"({
    "elements": ["low", "mid", "top", "other"],
    "covers": [["low", "mid"], ["mid", "top"]],
    "inconsistent": [["low", "other"]]
  })";
  Pip pip = pip_from_json(text);
  CHECK(pip.inconsistent(pip.index_of("top"), pip.index_of("other")));
  CHECK(pip.minimal_inconsistent() ==
        std::vector<NamePair>{{"low", "other"}});
}

TEST_CASE("pip JSON rejects malformed documents") {
  CHECK_THROWS_AS(pip_from_json("not json at all"), ParseError);
  CHECK_THROWS_AS(pip_from_json("[1, 2]"), ParseError);
  CHECK_THROWS_AS(pip_from_json("{}"), ParseError);  // no "elements"
  CHECK_THROWS_AS(pip_from_json(R"({"elements": "a"})"), ParseError);
  CHECK_THROWS_AS(pip_from_json(R"({"elements": [1]})"), ParseError);
  CHECK_THROWS_AS(pip_from_json(R"({"elements": ["a"], "covers": [["a"]]})"),
                  ParseError);
  CHECK_THROWS_AS(
      pip_from_json(R"({"elements": ["a"], "covers": [["a", "zz"]]})"),
      InvalidPip);  // well-formed JSON, bad content
  CHECK_THROWS_AS(
      pip_from_json(R"({"elements": ["a", "b"],
                        "covers": [["a", "b"], ["b", "a"]]})"),
      InvalidPip);
}

TEST_CASE("complex descriptions round-trip through JSON") {
  Pip pip = make_pip({"p", "q", "r"}, {{"p", "q"}}, {{"q", "r"}});
  BuiltComplex built = from_pip(pip);
  std::string text = complex_to_json(built.complex);
  CubeComplex back = complex_from_json(text);
  CHECK(back.vertex_names() == built.complex.vertex_names());
  CHECK(back.edges().size() == built.complex.edges().size());
  for (std::size_t e = 0; e < back.edges().size(); ++e) {
    CHECK(back.edges()[e].u == built.complex.edges()[e].u);
    CHECK(back.edges()[e].v == built.complex.edges()[e].v);
    CHECK(back.edges()[e].label == built.complex.edges()[e].label);
  }
  CHECK(back.cubes().size() == built.complex.cubes().size());
  CHECK(back.root() == built.complex.root());
  CHECK(complex_to_json(back) == text);
  CHECK(is_cat0(back).certified());
}

TEST_CASE("complex JSON parses an explicit square") {
  std::string text = R"({
    "vertices": ["o", "a", "b", "ab"],
    "edges": [["o", "a", "A"], ["o", "b", "B"],
              ["a", "ab", "B"], ["b", "ab", "A"]],
    "cubes": [["o", ["A", "B"]]],
    "root": "o"
  })";
  CubeComplex x = complex_from_json(text);
  CHECK(x.vertex_count() == 4);
  CHECK(x.edges().size() == 4);
  CHECK(x.cubes().size() == 1);
  CHECK(x.root() == std::size_t{0});
  CHECK(is_cat0(x).certified());

  // cubes and root are optional
  CubeComplex bare = complex_from_json(
      R"({"vertices": ["u", "v"], "edges": [["u", "v", "e"]]})");
  CHECK(bare.vertex_count() == 2);
  CHECK_FALSE(bare.root().has_value());
}

TEST_CASE("complex JSON rejects malformed documents") {
  CHECK_THROWS_AS(complex_from_json("{"), ParseError);
  CHECK_THROWS_AS(complex_from_json("{}"), ParseError);  // no vertices
  CHECK_THROWS_AS(complex_from_json(R"({"vertices": ["a"], "edges": 3})"),
                  ParseError);
  CHECK_THROWS_AS(
      complex_from_json(R"({"vertices": ["a"], "edges": [["a", "zz", "e"]]})"),
      ParseError);  // unknown vertex name
  CHECK_THROWS_AS(
      complex_from_json(R"({"vertices": ["a", "b"], "edges": [["a", "b"]]})"),
      ParseError);  // missing label
  CHECK_THROWS_AS(
      complex_from_json(
          R"({"vertices": ["a", "b"],
              "edges": [["a", "b", "e"], ["b", "a", "f"]]})"),
      InvalidComplex);  // parallel edge: well-formed JSON, bad content
}

TEST_CASE("plans serialize to the compact one-line form") {
  Pip pip = make_pip({"a", "b"}, {}, {});
  Bitset none(2), both = ideal_of(pip, {"a", "b"});

  GeodesicPlan l1 = l1_geodesic(pip, none, both);
  CHECK(plan_to_json(l1, pip) ==
        "{\"metric\":\"l1\",\"distance\":2,"
        "\"batches\":[[\"a\"],[\"b\"]],"
        "\"vertices\":[\"{}\",\"{a}\",\"{a, b}\"]}\n");

  GeodesicPlan linf = linf_geodesic(pip, none, both);
  CHECK(plan_to_json(linf, pip) ==
        "{\"metric\":\"linf\",\"distance\":1,"
        "\"batches\":[[\"a\",\"b\"]],"
        "\"vertices\":[\"{}\",\"{a, b}\"]}\n");

  // custom vertex rendering
  std::string renamed = plan_to_json(linf, pip, [](const Bitset& ideal) {
    return std::to_string(ideal.count());
  });
  CHECK(renamed ==
        "{\"metric\":\"linf\",\"distance\":1,"
        "\"batches\":[[\"a\",\"b\"]],\"vertices\":[\"0\",\"2\"]}\n");
}

TEST_CASE("dot exports are deterministic and structurally sound") {
  Pip pip = make_pip({"a", "b", "c"}, {{"a", "b"}}, {{"b", "c"}});
  std::string dot = pip_to_dot(pip);
  CHECK(dot == pip_to_dot(pip));
  CHECK(dot.find("digraph pip {") == 0);
  CHECK(dot.find("\"a\" -> \"b\";") != std::string::npos);
  CHECK(dot.find("\"b\" -> \"c\" [style=dotted") != std::string::npos);

  BuiltComplex built = from_pip(pip);
  std::string skel = complex_to_dot(built.complex);
  CHECK(skel == complex_to_dot(built.complex));
  CHECK(skel.find("graph complex {") == 0);
  CHECK(skel.find("\"{}\" [peripheries=2];") != std::string::npos);
  CHECK(skel.find("\"{}\" -- \"{a}\"") != std::string::npos);
  CHECK(skel.find("color=\"#") != std::string::npos);
}

TEST_CASE("dot output quotes awkward names") {
  Pip pip = make_pip({"say \"hi\"", "back\\slash"}, {}, {});
  std::string dot = pip_to_dot(pip);
  CHECK(dot.find("\"say \\\"hi\\\"\"") != std::string::npos);
  CHECK(dot.find("\"back\\\\slash\"") != std::string::npos);
}

}  // TEST_SUITE

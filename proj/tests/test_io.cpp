#include "doctest.h"

#include <random>
#include <string>

#include "amalgam/core.hpp"
#include "amalgam/generic.hpp"
#include "amalgam/io.hpp"

using namespace amalgam;

namespace {

const char* kSampleConstraints =
    "# four colors, two solutions\n"
    "colors: R G X Y\n"
    "solutions: R G\n"
    "order: R > G\n"
    "\n"
    "RXX\n"
    "G G X\n"
    "Y X X\n"
    "XXX\n";

std::string line_of(const InputError& e) { return e.what(); }

}  // namespace

TEST_CASE("constraint files parse headers, comments and triangle lines") {
  auto parsed = parse_constraints(kSampleConstraints);
  CHECK(parsed.has_solutions);
  CHECK(parsed.language.names() == std::vector<std::string>{"R", "G", "X", "Y"});
  CHECK(parsed.language.solution_set() == std::vector<Color>{0, 1});
  CHECK(parsed.language.priority() == std::vector<Color>{0, 1});
  CHECK(parsed.set.triangles().size() == 4);
  CHECK(parsed.set.contains(Triangle::make(1, 1, 2)));
  CHECK(parsed.set.contains(Triangle::make(3, 2, 2)));
}

TEST_CASE("constraint files round-trip through the writer") {
  auto parsed = parse_constraints(kSampleConstraints);
  auto text = write_constraints(parsed.language, parsed.set);
  auto again = parse_constraints(text);
  CHECK(again.language == parsed.language);
  CHECK(again.set.triangles() == parsed.set.triangles());
  CHECK(again.has_solutions);

  auto bare = parse_constraints(write_constraints(parsed.language, parsed.set, false));
  CHECK_FALSE(bare.has_solutions);
  CHECK(bare.language.names() == parsed.language.names());
}

TEST_CASE("order defaults to the solutions listing when absent") {
  auto parsed = parse_constraints(
      "colors: R G X\n"
      "solutions: G R\n"
      "XXX\n");
  CHECK(parsed.language.priority() == std::vector<Color>{1, 0});
}

TEST_CASE("constraint parse errors name the offending line") {
  CHECK_THROWS_WITH_AS(parse_constraints("RXX\n"), "missing colors line", InputError);
  try {
    parse_constraints("colors: R G X\ncolors: R G\nXXX\n");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(line_of(e) == "line 2: duplicate colors line");
  }
  try {
    parse_constraints("colors: R G X\n\nRXQ\n");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(line_of(e).rfind("line 3:", 0) == 0);
  }
  CHECK_THROWS_AS(parse_constraints("colors: R\nRRR\n"), InputError);
  CHECK_THROWS_AS(parse_constraints("colors: R G X\norder: R > G\nXXX\n"), InputError);
  CHECK_THROWS_AS(parse_constraints("colors: R G X\nsolutions:\nXXX\n"), InputError);
  CHECK_THROWS_AS(
      parse_constraints("colors: R G X\nsolutions: R\norder: R >\nXXX\n"), InputError);
  CHECK_THROWS_AS(parse_constraints("colors: R G X\nR X\n"), InputError);
}

TEST_CASE("structure files round-trip for random complete structures") {
  auto lang = ColorLanguage::make({"R", "G", "X", "Y"}, {"R", "G"}, {"R", "G"});
  std::mt19937_64 eng(99);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 8;
    CompleteStructure m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) m.set_color(i, j, static_cast<Color>(pick(eng)));
    auto text = write_structure(m, lang);
    auto back = parse_structure(text, lang);
    REQUIRE(back.vertex_count() == n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) CHECK(back.color(i, j) == m.color(i, j));
  }
}

TEST_CASE("structure parse errors name the offending line") {
  auto lang = ColorLanguage::make({"R", "G", "X"}, {"R"}, {"R"});
  try {
    parse_structure("2 2\n0 1 R\n", lang);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(line_of(e) == "line 1: the first line must hold the vertex count alone");
  }
  try {
    parse_structure("3\n0 1 R\n1 0 G\n1 2 R\n", lang);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(line_of(e) == "line 3: edges must be written with i < j");
  }
  try {
    parse_structure("3\n0 1 R\n0 1 G\n0 2 R\n", lang);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(line_of(e).rfind("line 3: duplicate edge", 0) == 0);
  }
  // A surplus edge line after the block is trailing content, not a dup.
  try {
    parse_structure("2\n0 1 R\n0 1 G\n", lang);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(line_of(e) == "line 3: trailing content after the last edge");
  }
  try {
    parse_structure("2\n0 5 R\n", lang);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(line_of(e).rfind("line 2: vertex index out of range", 0) == 0);
  }
  CHECK_THROWS_AS(parse_structure("", lang), InputError);
  CHECK_THROWS_AS(parse_structure("0\n", lang), InputError);
  CHECK_THROWS_AS(parse_structure("3\n0 1 R\n", lang), InputError);
  CHECK_THROWS_AS(parse_structure("2\n0 1 Q\n", lang), InputError);
}

TEST_CASE("writing an incomplete structure is an error") {
  auto lang = ColorLanguage::make({"R", "G", "X"}, {"R"}, {"R"});
  CompleteStructure m(3);
  m.set_color(0, 1, 0);
  CHECK_THROWS_AS(write_structure(m, lang), InputError);
}

TEST_CASE("instance files round-trip and enforce base agreement") {
  auto lang = ColorLanguage::make({"R", "G", "X", "Y"}, {"R", "G"}, {"R", "G"});
  const char* text =
      "base: 2\n"
      "left: 3\n"
      "0 1 R\n"
      "0 2 X\n"
      "1 2 R\n"
      "right: 3\n"
      "0 1 R\n"
      "0 2 X\n"
      "1 2 G\n";
  auto inst = parse_instance(text, lang);
  CHECK(inst.base_size == 2);
  CHECK(inst.left.vertex_count() == 3);
  CHECK(inst.right.color(1, 2) == Color{1});
  auto again = parse_instance(write_instance(inst, lang), lang);
  CHECK(again.base_size == inst.base_size);
  CHECK(again.left.color(1, 2) == inst.left.color(1, 2));
  CHECK(again.right.color(1, 2) == inst.right.color(1, 2));

  const char* disagree =
      "base: 2\n"
      "left: 3\n"
      "0 1 R\n"
      "0 2 X\n"
      "1 2 R\n"
      "right: 3\n"
      "0 1 G\n"
      "0 2 X\n"
      "1 2 G\n";
  try {
    parse_instance(disagree, lang);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(line_of(e) == "line 7: left and right blocks disagree on base edge (0, 1)");
  }

  CHECK_THROWS_AS(parse_instance("base: 1\nleft: 1\nright: 2\n0 1 R\n", lang), InputError);
  CHECK_THROWS_AS(parse_instance("left: 2\n0 1 R\n", lang), InputError);
  const char* trailing =
      "base: 1\nleft: 2\n0 1 R\nright: 2\n0 1 R\nextra\n";
  CHECK_THROWS_AS(parse_instance(trailing, lang), InputError);
}

TEST_CASE("saturation files carry their metadata comment") {
  auto lang = ColorLanguage::make({"R", "G", "X"}, {"R", "G"}, {"R", "G"});
  GenericApproximation g;
  g.structure = CompleteStructure(3, 0);
  g.t = 1;
  g.seed = 42;
  auto text = write_generic_file(g, lang, "demo");
  CHECK(text.rfind("# entry=demo t=1 seed=42\n", 0) == 0);
  auto [meta, m] = parse_generic_file(text, lang);
  CHECK(meta.entry == "demo");
  CHECK(meta.t == 1);
  CHECK(meta.seed == 42);
  CHECK(m.vertex_count() == 3);
  CHECK(m.color(0, 2) == Color{0});

  CHECK_THROWS_AS(parse_generic_file("# entry=demo t=1\n1\n", lang), InputError);
  CHECK_THROWS_AS(parse_generic_file("# entry=demo t=x seed=1\n1\n", lang), InputError);
  CHECK_THROWS_AS(parse_generic_file("# entry=demo t=1 seed=pepper\n1\n", lang), InputError);
}

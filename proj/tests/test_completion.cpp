#include "doctest.h"

#include <optional>
#include <random>
#include <vector>

#include "amalgam/catalogue.hpp"
#include "amalgam/completion.hpp"

using namespace amalgam;

namespace {

// Reference implementation: walk the priority list and take the first
// color that closes no forbidden triangle through any profile pair.
std::optional<Color> naive_prioritized(const std::vector<ProfilePair>& profile,
                                       const ColorLanguage& lang, const TriangleSet& ts) {
  for (Color r : lang.priority()) {
    bool ok = true;
    for (const auto& p : profile)
      if (ts.contains(Triangle::make(p.a_side, p.c_side, r))) ok = false;
    if (ok) return r;
  }
  return std::nullopt;
}

std::vector<ProfilePair> random_profile(int len, int colors, std::mt19937_64& eng) {
  std::uniform_int_distribution<int> pick(0, colors - 1);
  std::vector<ProfilePair> profile;
  for (int i = 0; i < len; ++i)
    profile.push_back(ProfilePair::make(static_cast<Color>(pick(eng)),
                                        static_cast<Color>(pick(eng))));
  return profile;
}

}  // namespace

TEST_CASE("profile pairs are unordered") {
  CHECK(ProfilePair::make(3, 1) == ProfilePair::make(1, 3));
  CHECK(ProfilePair::make(3, 1).a_side == Color{1});
  CHECK(ProfilePair::make(3, 1).c_side == Color{3});
}

TEST_CASE("profile_blocked_mask is the union over the pairs") {
  auto e = catalogue_entry("#11");
  const auto& ts = e.triangles;
  std::mt19937_64 eng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto profile = random_profile(trial % 5, 4, eng);
    std::uint32_t want = 0;
    for (const auto& p : profile)
      for (Color c = 0; c < 4; ++c)
        if (ts.contains(Triangle::make(p.a_side, p.c_side, c))) want |= 1u << c;
    CHECK(profile_blocked_mask(profile, ts) == want);
  }
}

TEST_CASE("prioritized_color matches the naive priority scan") {
  std::mt19937_64 eng(17);
  for (const char* id : {"3col#1", "#11", "#26", "#19", "#27"}) {
    auto e = catalogue_entry(id);
    for (int trial = 0; trial < 2000; ++trial) {
      auto profile = random_profile(trial % 6, e.language.size(), eng);
      CHECK(prioritized_color(profile, e.language, e.triangles) ==
            naive_prioritized(profile, e.language, e.triangles));
    }
  }
}

TEST_CASE("an empty profile yields the top-priority color") {
  auto e = catalogue_entry("#26");
  CHECK(prioritized_color({}, e.language, e.triangles) == e.language.priority().front());
}

TEST_CASE("instances validate their base on construction") {
  CompleteStructure left(3, 0), right(3, 0);
  CHECK_THROWS_AS(AmalgamationInstance::make(-1, left, right), InputError);
  CHECK_THROWS_AS(AmalgamationInstance::make(3, left, right), InputError);
  auto ok = AmalgamationInstance::make(2, left, right);
  CHECK(ok.left_new() == 1);
  CHECK(ok.right_new() == 1);
  CHECK(ok.combined_size() == 4);
  CHECK(ok.right_vertex(2) == 3);
  CHECK(ok.base().vertex_count() == 2);

  CompleteStructure other(3, 0);
  other.set_color(0, 1, 1);
  CHECK_THROWS_AS(AmalgamationInstance::make(2, left, other), InputError);
}

// Two points over a two-vertex base: one side sees (X, X), the other
// (R, G). The top priority R closes an RXX triangle, so the completion
// falls through to G.
TEST_CASE("the published two-base completion picks the second priority") {
  auto e = catalogue_entry("#11");
  CompleteStructure left(3), right(3);
  left.set_color(0, 1, e.language.require("R"));
  left.set_color(0, 2, e.language.require("X"));
  left.set_color(1, 2, e.language.require("R"));
  right.set_color(0, 1, e.language.require("R"));
  right.set_color(0, 2, e.language.require("X"));
  right.set_color(1, 2, e.language.require("G"));
  auto inst = AmalgamationInstance::make(2, std::move(left), std::move(right));

  auto res = amalgamate(inst, e.language, e.triangles);
  CHECK(res.clean());
  REQUIRE(res.cross_colors.size() == 1);
  CHECK(res.cross_colors[0] == CrossEdge{2, 3, e.language.require("G")});
  CHECK(res.completed.color(2, 3) == e.language.require("G"));
  CHECK(is_valid(res.completed, e.triangles));
}

// With the priority reversed to G > R, both cross pairs complete to G and
// the X edge between the left points closes a GGX triangle.
TEST_CASE("reversing the priority closes a forbidden triangle") {
  auto e = catalogue_entry("#11");
  auto lang = e.language.with_solutions({"R", "G"}, {"G", "R"});
  auto ts = TriangleSet::make(lang, e.triangles.triangles());

  CompleteStructure left(3), right(2);
  left.set_color(0, 1, lang.require("R"));
  left.set_color(0, 2, lang.require("G"));
  left.set_color(1, 2, lang.require("X"));
  right.set_color(0, 1, lang.require("R"));
  auto inst = AmalgamationInstance::make(1, std::move(left), std::move(right));

  auto res = amalgamate(inst, lang, ts);
  CHECK_FALSE(res.clean());
  CHECK(res.failed_edges.empty());
  REQUIRE(res.cross_colors.size() == 2);
  CHECK(res.cross_colors[0] == CrossEdge{1, 3, lang.require("G")});
  CHECK(res.cross_colors[1] == CrossEdge{2, 3, lang.require("G")});
  REQUIRE(res.violations.size() == 1);
  CHECK(res.violations[0].vertices == std::array<int, 3>{1, 2, 3});
  CHECK(triangle_name(res.violations[0].triangle, lang) == "GGX");
}

// Restricting the #26 solutions to {R, G} leaves the (X, X) profile with
// no admissible color at all.
TEST_CASE("a starved solution set reports failed edges") {
  auto e = catalogue_entry("#26");
  auto lang = e.language.with_solutions({"R", "G"}, {"G", "R"});
  auto ts = TriangleSet::make(lang, e.triangles.triangles());

  CompleteStructure left(2), right(2);
  left.set_color(0, 1, lang.require("X"));
  right.set_color(0, 1, lang.require("X"));
  auto inst = AmalgamationInstance::make(1, std::move(left), std::move(right));

  auto res = amalgamate(inst, lang, ts);
  CHECK_FALSE(res.clean());
  CHECK(res.violations.empty());
  REQUIRE(res.failed_edges.size() == 1);
  CHECK(res.failed_edges[0].a == 1);
  CHECK(res.failed_edges[0].c == 2);
  CHECK(res.failed_edges[0].profile ==
        std::vector<ProfilePair>{ProfilePair::make(lang.require("X"), lang.require("X"))});
  REQUIRE(res.cross_colors.size() == 1);
  CHECK(res.cross_colors[0].color == kNoColor);
  // The completed structure still carries a placeholder color.
  CHECK(res.completed.color(1, 2) == lang.priority().front());
}

// The same wedge under the full published solution set completes with Y.
TEST_CASE("the full #26 solution set completes the starved wedge") {
  auto e = catalogue_entry("#26");
  CompleteStructure left(2), right(2);
  left.set_color(0, 1, e.language.require("X"));
  right.set_color(0, 1, e.language.require("X"));
  auto inst = AmalgamationInstance::make(1, std::move(left), std::move(right));
  auto res = amalgamate(inst, e.language, e.triangles);
  CHECK(res.clean());
  CHECK(res.completed.color(1, 2) == e.language.require("Y"));
}

TEST_CASE("violations are only reported among the new vertices") {
  // Base triangles stay whatever they were; the completion never flags
  // triples meeting the base even if the inputs were already invalid.
  auto e = catalogue_entry("#11");
  CompleteStructure left(4), right(2);
  auto X = e.language.require("X");
  auto R = e.language.require("R");
  left.set_color(0, 1, X);
  left.set_color(0, 2, X);
  left.set_color(0, 3, X);
  left.set_color(1, 2, X);
  left.set_color(1, 3, X);
  left.set_color(2, 3, X);
  right.set_color(0, 1, R);
  auto inst = AmalgamationInstance::make(1, std::move(left), std::move(right));
  auto res = amalgamate(inst, e.language, e.triangles);
  for (const auto& v : res.violations)
    for (int vert : v.vertices) CHECK(vert >= inst.base_size);
}

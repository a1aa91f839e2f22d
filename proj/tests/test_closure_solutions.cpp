#include "doctest.h"

#include <string>
#include <vector>

#include "amalgam/catalogue.hpp"
#include "amalgam/closure.hpp"
#include "amalgam/solutions.hpp"

using namespace amalgam;

namespace {

std::vector<Color> colors_of(const ColorLanguage& lang, std::vector<std::string> names) {
  std::vector<Color> out;
  for (const auto& n : names) out.push_back(lang.require(n));
  return out;
}

}  // namespace

TEST_CASE("certified entries skip the search") {
  auto e = catalogue_entry("#11");
  auto v = check_closure(e.triangles, e.language, 3);
  CHECK(v.status == ClosureStatus::certified_condition2);
  CHECK_FALSE(v.search_ran);
  CHECK(v.bound_used == 0);
  CHECK_FALSE(v.witness.has_value());
  REQUIRE(v.certificate.has_value());
  CHECK(v.certificate->condition == 2);
  CHECK(v.certificate->params.l_star == colors_of(e.language, {"X"}));
  CHECK(v.certificate->params.l_hat.empty());
  CHECK(std::string(to_string(v.status)) == "certified_condition2");

  auto e1 = catalogue_entry("#1");
  auto v1 = check_closure(e1.triangles, e1.language, 3);
  CHECK(v1.status == ClosureStatus::certified_condition1);
  REQUIRE(v1.certificate.has_value());
  CHECK(v1.certificate->condition == 1);
  CHECK(v1.certificate->params.l_star.empty());
  CHECK(v1.certificate->params.l_hat.empty());
}

TEST_CASE("forcing the search on a certified entry keeps the certificate") {
  auto e = catalogue_entry("#11");
  auto v = check_closure(e.triangles, e.language, 2, true);
  CHECK(v.status == ClosureStatus::certified_condition2);
  CHECK(v.search_ran);
  CHECK(v.bound_used == 2);
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("an uncertified closed class is confirmed by search only") {
  auto e = catalogue_entry("#26");
  auto v = check_closure(e.triangles, e.language, 3);
  CHECK(v.status == ClosureStatus::no_counterexample_up_to_bound);
  CHECK(v.search_ran);
  CHECK(v.bound_used == 3);
  CHECK_FALSE(v.certificate.has_value());
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("a reversed priority on #11 is refuted with a concrete instance") {
  auto e = catalogue_entry("#11");
  auto lang = e.language.with_solutions({"R", "G"}, {"G", "R"});
  auto ts = TriangleSet::make(lang, e.triangles.triangles());

  auto v = check_closure(ts, lang, 3);
  CHECK(v.status == ClosureStatus::counterexample_found);
  CHECK(v.search_ran);
  REQUIRE(v.witness.has_value());
  const auto& w = *v.witness;
  CHECK(w.instance.base_size == 0);
  CHECK(w.instance.left.vertex_count() == 2);
  CHECK(w.instance.right.vertex_count() == 1);
  CHECK(w.instance.left.color(0, 1) == lang.require("X"));
  REQUIRE(w.completion.violations.size() == 1);
  CHECK(triangle_name(w.completion.violations[0].triangle, lang) == "GGX");

  auto direct = search_closure_counterexample(ts, lang, 3);
  REQUIRE(direct.has_value());
  CHECK(direct->instance == w.instance);
}

TEST_CASE("a starved solution set is refuted with an uncompletable instance") {
  auto e = catalogue_entry("#26");
  auto lang = e.language.with_solutions({"R", "G"}, {"G", "R"});
  auto ts = TriangleSet::make(lang, e.triangles.triangles());

  auto v = check_closure(ts, lang, 3);
  CHECK(v.status == ClosureStatus::counterexample_found);
  REQUIRE(v.witness.has_value());
  const auto& w = *v.witness;
  CHECK(w.instance.base_size == 1);
  CHECK(w.instance.left.vertex_count() == 2);
  CHECK(w.instance.right.vertex_count() == 2);
  CHECK(w.instance.left.color(0, 1) == lang.require("X"));
  CHECK(w.instance.right.color(0, 1) == lang.require("X"));
  CHECK(w.completion.violations.empty());
  REQUIRE(w.completion.failed_edges.size() == 1);
}

TEST_CASE("an empty forbidden set certifies trivially") {
  auto lang = ColorLanguage::make({"R", "G", "X"}, {"R", "G"}, {"R", "G"});
  auto empty = TriangleSet::make(lang, {});
  auto v = check_closure(empty, lang, 3);
  CHECK(v.status == ClosureStatus::certified_condition1);
  CHECK_FALSE(v.search_ran);
  CHECK_FALSE(search_closure_counterexample(empty, lang, 2).has_value());
}

TEST_CASE("closure bounds are enforced") {
  auto e = catalogue_entry("#11");
  CHECK_THROWS_AS(check_closure(e.triangles, e.language, 5), InputError);
  CHECK_THROWS_AS(check_closure(e.triangles, e.language, -1), InputError);
  CHECK_THROWS_AS(search_closure_counterexample(e.triangles, e.language, 9), InputError);
}

TEST_CASE("#11 forces G through the (X, X) profile") {
  auto e = catalogue_entry("#11");
  auto forced = compute_forced_colors(e.triangles, 3);
  REQUIRE(forced.size() == 1);
  const auto& w = forced[0];
  CHECK(w.color == e.language.require("G"));
  CHECK(w.instance.base_size == 1);
  CHECK(w.admissible_mask == 1u << e.language.require("G"));
  CHECK(w.profile == std::vector<ProfilePair>{
                         ProfilePair::make(e.language.require("X"), e.language.require("X"))});
  // The witness is a genuine forcing instance: replaying it admits G only.
  CHECK(profile_blocked_mask(w.profile, e.triangles) ==
        (e.triangles.all_colors_mask() & ~w.admissible_mask));
}

TEST_CASE("#26 forces all three of its published solutions") {
  auto e = catalogue_entry("#26");
  auto forced = compute_forced_colors(e.triangles, 3);
  REQUIRE(forced.size() == 3);
  auto find = [&](const char* name) -> const ForcedColorWitness& {
    for (const auto& w : forced)
      if (w.color == e.language.require(name)) return w;
    REQUIRE(false);
    return forced[0];
  };
  const auto& r = find("R");
  CHECK(r.instance.base_size == 2);
  CHECK(r.admissible_mask == 1u << e.language.require("R"));
  const auto& g = find("G");
  CHECK(g.instance.base_size == 2);
  CHECK(g.admissible_mask == 1u << e.language.require("G"));
  const auto& y = find("Y");
  CHECK(y.instance.base_size == 1);
  CHECK(y.admissible_mask == 1u << e.language.require("Y"));
  CHECK(y.profile == std::vector<ProfilePair>{
                         ProfilePair::make(e.language.require("X"), e.language.require("X"))});
}

TEST_CASE("#11 admits exactly two minimal solution sets") {
  auto e = catalogue_entry("#11");
  auto an = find_solution_sets(e.triangles, 3);
  REQUIRE(an.forced.size() == 1);
  CHECK(an.forced[0].color == e.language.require("G"));
  REQUIRE(an.minimal_sets.size() == 2);

  const auto& rg = an.minimal_sets[0];
  CHECK(rg.colors == colors_of(e.language, {"R", "G"}));
  REQUIRE(rg.passing_orders.size() == 1);
  CHECK(rg.passing_orders[0].order == colors_of(e.language, {"R", "G"}));
  CHECK(rg.passing_orders[0].status == ClosureStatus::certified_condition2);

  const auto& gy = an.minimal_sets[1];
  CHECK(gy.colors == colors_of(e.language, {"G", "Y"}));
  REQUIRE(gy.passing_orders.size() == 1);
  CHECK(gy.passing_orders[0].order == colors_of(e.language, {"Y", "G"}));
  CHECK(gy.passing_orders[0].status == ClosureStatus::certified_condition2);

  // Every forced color appears in every minimal set.
  for (const auto& ms : an.minimal_sets)
    for (const auto& f : an.forced)
      CHECK(std::find(ms.colors.begin(), ms.colors.end(), f.color) != ms.colors.end());
}

TEST_CASE("#26 has a unique minimal solution set with two workable orders") {
  auto e = catalogue_entry("#26");
  auto an = find_solution_sets(e.triangles, 3);
  CHECK(an.forced.size() == 3);
  REQUIRE(an.minimal_sets.size() == 1);
  const auto& ms = an.minimal_sets[0];
  CHECK(ms.colors == colors_of(e.language, {"R", "G", "Y"}));
  REQUIRE(ms.passing_orders.size() == 2);
  CHECK(ms.passing_orders[0].order == colors_of(e.language, {"G", "R", "Y"}));
  CHECK(ms.passing_orders[0].status == ClosureStatus::no_counterexample_up_to_bound);
  CHECK(ms.passing_orders[1].order == colors_of(e.language, {"G", "Y", "R"}));
  CHECK(ms.passing_orders[1].status == ClosureStatus::no_counterexample_up_to_bound);
}

TEST_CASE("a syntactic certificate is declined when a cross pair can starve") {
  // RAA and GBB alone satisfy the first condition syntactically, yet a base
  // holding an (A, A) point and a (B, B) point blocks both solutions.
  auto lang = ColorLanguage::make({"R", "G", "A", "B"}, {"R", "G"}, {"R", "G"});
  auto ts = TriangleSet::make(lang, {Triangle::make(0, 2, 2), Triangle::make(1, 3, 3)});
  CHECK(check_condition1(ts, lang));

  auto starved = search_assignment_failure(ts, lang);
  REQUIRE(starved.has_value());
  CHECK(starved->instance.base_size == 2);
  CHECK(starved->completion.violations.empty());
  REQUIRE(starved->completion.failed_edges.size() == 1);

  // Even a bound-0 request reports the failure: assignability is decided
  // exactly and its witness outlives the bounded sweep.
  auto v = check_closure(ts, lang, 0);
  CHECK(v.status == ClosureStatus::counterexample_found);
  CHECK_FALSE(v.certificate.has_value());
  CHECK(v.search_ran);
  CHECK(v.bound_used == 0);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->instance == starved->instance);
}

TEST_CASE("#19 rejects a bare {R} even though no triangle carries R twice") {
  auto e = catalogue_entry("#19");
  auto lang = e.language.with_solutions({"R"}, {"R"});
  auto ts = TriangleSet::make(lang, e.triangles.triangles());
  CHECK(check_condition1(ts, lang));

  auto v = check_closure(ts, lang, 2);
  CHECK(v.status == ClosureStatus::counterexample_found);
  CHECK_FALSE(v.certificate.has_value());
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->instance.base_size == 1);
  CHECK(v.witness->instance.left.color(0, 1) == lang.require("X"));
  CHECK(v.witness->instance.right.color(0, 1) == lang.require("X"));
  CHECK(v.witness->completion.violations.empty());
  REQUIRE(v.witness->completion.failed_edges.size() == 1);

  // The published solution set never starves.
  CHECK_FALSE(search_assignment_failure(e.triangles, e.language).has_value());
}

TEST_CASE("#19 keeps its published set minimal alongside a second one") {
  auto e = catalogue_entry("#19");
  auto an = find_solution_sets(e.triangles, 3);
  REQUIRE(an.forced.size() == 1);
  CHECK(an.forced[0].color == e.language.require("R"));
  REQUIRE(an.minimal_sets.size() == 2);

  const auto& rg = an.minimal_sets[0];
  CHECK(rg.colors == colors_of(e.language, {"R", "G"}));
  REQUIRE(rg.passing_orders.size() == 1);
  CHECK(rg.passing_orders[0].order == colors_of(e.language, {"R", "G"}));
  CHECK(rg.passing_orders[0].status == ClosureStatus::certified_condition2);

  const auto& ry = an.minimal_sets[1];
  CHECK(ry.colors == colors_of(e.language, {"R", "Y"}));
  REQUIRE(ry.passing_orders.size() == 1);
  CHECK(ry.passing_orders[0].order == colors_of(e.language, {"R", "Y"}));
  CHECK(ry.passing_orders[0].status == ClosureStatus::certified_condition2);
  REQUIRE(ry.passing_orders[0].certificate.has_value());
  CHECK(ry.passing_orders[0].certificate->params.l_star == colors_of(e.language, {"X"}));
  CHECK(ry.passing_orders[0].certificate->params.l_hat == colors_of(e.language, {"G"}));
}

TEST_CASE("with nothing forbidden every single color is a minimal solution set") {
  auto lang = ColorLanguage::make({"R", "G", "X"}, {"R", "G"}, {"R", "G"});
  auto empty = TriangleSet::make(lang, {});
  auto an = find_solution_sets(empty, 2);
  CHECK(an.forced.empty());
  REQUIRE(an.minimal_sets.size() == 3);
  for (const auto& ms : an.minimal_sets) {
    CHECK(ms.colors.size() == 1);
    REQUIRE(ms.passing_orders.size() == 1);
    CHECK(ms.passing_orders[0].status == ClosureStatus::certified_condition1);
  }
}

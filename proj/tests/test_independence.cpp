#include "doctest.h"

#include <string>
#include <vector>

#include "amalgam/catalogue.hpp"
#include "amalgam/independence.hpp"
#include "amalgam/io.hpp"

using namespace amalgam;

namespace {

CompleteStructure from_text(const char* text, const ColorLanguage& lang) {
  return parse_structure(text, lang);
}

}  // namespace

TEST_CASE("independence holds exactly when the cross edge is the completion color") {
  auto e = catalogue_entry("#11");
  const auto& lang = e.language;
  // a - b - c path with an (X, X) profile forces G on (a, c).
  auto forced = from_text("3\n0 1 X\n0 2 G\n1 2 X\n", lang);
  CHECK(independent(forced, {{2}, {1}, {0}}, lang, e.triangles));
  // Over an (R, R) profile the completion is the top priority R; a valid
  // G cross edge is therefore dependent.
  auto on_path = from_text("3\n0 1 R\n0 2 R\n1 2 R\n", lang);
  CHECK(independent(on_path, {{2}, {1}, {0}}, lang, e.triangles));
  auto off = from_text("3\n0 1 R\n0 2 G\n1 2 R\n", lang);
  CHECK_FALSE(independent(off, {{2}, {1}, {0}}, lang, e.triangles));

  // Over an empty base the completion color is the top priority R.
  auto pair_r = from_text("2\n0 1 R\n", lang);
  CHECK(independent(pair_r, {{0}, {}, {1}}, lang, e.triangles));
  auto pair_g = from_text("2\n0 1 G\n", lang);
  CHECK_FALSE(independent(pair_g, {{0}, {}, {1}}, lang, e.triangles));
}

TEST_CASE("side vertices inside the base are absorbed") {
  auto e = catalogue_entry("#11");
  auto m = from_text("3\n0 1 R\n0 2 G\n1 2 X\n", e.language);
  // With every vertex in the base there is nothing to check.
  CHECK(independent(m, {{0, 1}, {0, 1, 2}, {2}}, e.language, e.triangles));
}

TEST_CASE("independence queries are validated") {
  auto e = catalogue_entry("#11");
  auto m = from_text("3\n0 1 R\n0 2 R\n1 2 R\n", e.language);
  CHECK_THROWS_AS(independent(m, {{5}, {}, {0}}, e.language, e.triangles), InputError);
  CHECK_THROWS_AS(independent(m, {{0, 1}, {}, {1, 2}}, e.language, e.triangles), InputError);
  auto bad = from_text("3\n0 1 X\n0 2 X\n1 2 X\n", e.language);
  CHECK_THROWS_AS(independent(bad, {{0}, {1}, {2}}, e.language, e.triangles), InputError);
  // Skipping ambient validation answers the raw question: the (X, X)
  // profile completes to G, not to the X actually present.
  CHECK_FALSE(independent(bad, {{0}, {1}, {2}}, e.language, e.triangles, false));
}

TEST_CASE("axiom names round-trip") {
  for (Axiom a : {Axiom::monotonicity, Axiom::transitivity, Axiom::symmetry,
                  Axiom::stationarity, Axiom::existence})
    CHECK(axiom_from_string(to_string(a)) == a);
  CHECK_FALSE(axiom_from_string("associativity").has_value());
}

TEST_CASE("all five axioms sweep clean on #11 at five vertices") {
  auto e = catalogue_entry("#11");
  CanonicalStructures pool{e.triangles};
  AxiomOptions opts;
  opts.max_size = 5;
  auto expect = [&](Axiom a, std::uint64_t instances) {
    auto r = check_axiom(a, e.triangles, e.language, opts, {}, &pool);
    CHECK(r.axiom == a);
    CHECK_MESSAGE(r.violation_count == 0, to_string(a));
    CHECK_MESSAGE(r.instances_checked == instances, to_string(a));
    CHECK(r.violations.empty());
  };
  expect(Axiom::monotonicity, 169969);
  expect(Axiom::transitivity, 169969);
  expect(Axiom::symmetry, 410185);
  expect(Axiom::stationarity, 3603);
  expect(Axiom::existence, 1588170);
}

TEST_CASE("a corrupted predicate is caught by the sweeps") {
  auto e = catalogue_entry("#11");
  AxiomOptions opts;
  opts.max_size = 3;
  IndepFn always = [](const CompleteStructure&, const std::vector<int>&,
                      const std::vector<int>&, const std::vector<int>&) { return true; };
  auto r = check_axiom(Axiom::stationarity, e.triangles, e.language, opts, always);
  CHECK(r.violation_count > 0);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.size() <= opts.max_witnesses);
  CHECK_FALSE(r.violations[0].detail.empty());

  IndepFn never = [](const CompleteStructure&, const std::vector<int>&,
                     const std::vector<int>&, const std::vector<int>&) { return false; };
  auto rn = check_axiom(Axiom::existence, e.triangles, e.language, opts, never);
  CHECK(rn.violation_count > 0);
}

TEST_CASE("axiom sweep bounds are enforced") {
  auto e = catalogue_entry("#11");
  AxiomOptions opts;
  opts.max_size = 8;
  CHECK_THROWS_AS(check_axiom(Axiom::symmetry, e.triangles, e.language, opts), InputError);
  opts.max_size = 0;
  CHECK_THROWS_AS(check_axiom(Axiom::symmetry, e.triangles, e.language, opts), InputError);
}

TEST_CASE("deletion sweeps are clean for a certified entry") {
  auto e = catalogue_entry("#11");
  CanonicalStructures pool{e.triangles};
  auto one = check_deletion(e.triangles, e.language, DeletionVariant::one_sided, 5, &pool);
  CHECK(one.variant == DeletionVariant::one_sided);
  CHECK(one.instances_checked == 38594);
  CHECK(one.violation_count == 0);
  CHECK_FALSE(one.minimal_witness_size.has_value());
  CHECK(one.minimal_witnesses.empty());
  auto two = check_deletion(e.triangles, e.language, DeletionVariant::two_sided, 5, &pool);
  CHECK(two.instances_checked == 22402);
  CHECK(two.violation_count == 0);
}

TEST_CASE("one-sided deletion fails on #26 with a four-vertex witness") {
  auto e = catalogue_entry("#26");
  CanonicalStructures pool{e.triangles};
  auto r = check_deletion(e.triangles, e.language, DeletionVariant::one_sided, 5, &pool);
  CHECK(r.instances_checked == 20078);
  CHECK(r.violation_count == 396);
  REQUIRE(r.minimal_witness_size.has_value());
  CHECK(*r.minimal_witness_size == 4);
  REQUIRE(r.minimal_witnesses.size() == 8);
  for (const auto& w : r.minimal_witnesses) CHECK(w.ambient.vertex_count() == 4);

  // The first witness is the published four-point configuration: deleting
  // the base point b (joined to a by a solution color) flips the cross
  // edge computed over the retained base.
  const auto& w = r.minimal_witnesses[0];
  auto want = from_text("4\n0 1 R\n0 2 R\n0 3 G\n1 2 R\n1 3 X\n2 3 Y\n", e.language);
  CHECK(structure_code(w.ambient) == structure_code(want));
  CHECK(w.a == 2);
  CHECK(w.b == 3);
  CHECK(w.c == 1);
  CHECK(w.retained == std::vector<int>{0});

  // Structure-level sanity: the premise really holds and really breaks.
  auto fn = make_independence_predicate(e.language, e.triangles);
  std::vector<int> base_with_b{w.b, w.retained[0]};
  std::sort(base_with_b.begin(), base_with_b.end());
  CHECK(fn(w.ambient, {w.a}, base_with_b, {w.c}));
  CHECK_FALSE(fn(w.ambient, {w.a}, w.retained, {w.c}));
  CHECK(e.language.is_solution(w.ambient.color(w.a, w.b)));
}

TEST_CASE("two-sided deletion passes on #26") {
  auto e = catalogue_entry("#26");
  auto r = check_deletion(e.triangles, e.language, DeletionVariant::two_sided, 5);
  CHECK(r.instances_checked == 17926);
  CHECK(r.violation_count == 0);
  CHECK_FALSE(r.minimal_witness_size.has_value());
}

TEST_CASE("deletion witnesses compare up to isomorphism") {
  auto e = catalogue_entry("#26");
  auto r = check_deletion(e.triangles, e.language, DeletionVariant::one_sided, 4);
  REQUIRE_FALSE(r.minimal_witnesses.empty());
  const auto& w = r.minimal_witnesses[0];
  CHECK(deletion_witness_equivalent(w, w));

  // Relabeling the ambient structure preserves equivalence.
  DeletionWitness relabeled;
  std::vector<int> perm{3, 2, 1, 0};
  relabeled.ambient = CompleteStructure(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      relabeled.ambient.set_color(perm[i], perm[j], w.ambient.color(i, j));
  relabeled.a = perm[w.a];
  relabeled.b = perm[w.b];
  relabeled.c = perm[w.c];
  for (int v : w.retained) relabeled.retained.push_back(perm[v]);
  CHECK(deletion_witness_equivalent(w, relabeled));

  // Swapping roles breaks it unless the structure happens to be symmetric.
  DeletionWitness swapped = w;
  std::swap(swapped.a, swapped.b);
  CHECK_FALSE(deletion_witness_equivalent(w, swapped));
}

TEST_CASE("deletion sweep bounds are enforced") {
  auto e = catalogue_entry("#11");
  CHECK_THROWS_AS(
      check_deletion(e.triangles, e.language, DeletionVariant::one_sided, 3), InputError);
  CHECK_THROWS_AS(
      check_deletion(e.triangles, e.language, DeletionVariant::one_sided, 8), InputError);
}

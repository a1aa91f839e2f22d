#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amalgam/completion.hpp"
#include "amalgam/core.hpp"
#include "amalgam/enumerate.hpp"

namespace amalgam {

// A and C are independent over B when every cross pair (a, c) outside B
// carries exactly the color the prioritised completion assigns over its
// B-profile. Sides are implicitly closed under B (A ~ AB, C ~ CB); A and C
// may intersect only inside B.
struct IndependenceQuery {
  std::vector<int> a;
  std::vector<int> b;
  std::vector<int> c;
};

namespace detail {

inline std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

// Core test; a_side and c_side must be disjoint from each other and from b.
inline bool independent_unchecked(const CompleteStructure& m, const std::vector<int>& a_side,
                                  const std::vector<int>& b, const std::vector<int>& c_side,
                                  const ColorLanguage& lang, const TriangleSet& ts) {
  std::vector<ProfilePair> profile(b.size());
  for (int a : a_side)
    for (int c : c_side) {
      for (std::size_t i = 0; i < b.size(); ++i)
        profile[i] = ProfilePair::make(m.color(a, b[i]), m.color(b[i], c));
      auto r = prioritized_color(profile, lang, ts);
      if (!r || *r != m.color(a, c)) return false;
    }
  return true;
}

inline bool independent(const CompleteStructure& m, const IndependenceQuery& q,
                        const ColorLanguage& lang, const TriangleSet& ts,
                        bool validate_ambient = true) {
  for (const auto* list : {&q.a, &q.b, &q.c})
    for (int v : *list)
      if (v < 0 || v >= m.vertex_count())
        throw InputError("independence query: vertex out of range");
  auto b = detail::sorted_unique(q.b);
  auto a_side = detail::set_difference(detail::sorted_unique(q.a), b);
  auto c_side = detail::set_difference(detail::sorted_unique(q.c), b);
  for (int v : a_side)
    if (std::binary_search(c_side.begin(), c_side.end(), v))
      throw InputError("independence query: the sides may intersect only inside the base");
  if (validate_ambient && !is_valid(m, ts))
    throw InputError("independence query: ambient structure realizes a forbidden triangle");
  return independent_unchecked(m, a_side, b, c_side, lang, ts);
}

// Pluggable predicate with the contract of independent_unchecked; sweeps
// accept a replacement to exercise deliberately corrupted variants.
using IndepFn = std::function<bool(const CompleteStructure&, const std::vector<int>&,
                                   const std::vector<int>&, const std::vector<int>&)>;

inline IndepFn make_independence_predicate(const ColorLanguage& lang, const TriangleSet& ts) {
  return [lang, ts](const CompleteStructure& m, const std::vector<int>& a,
                    const std::vector<int>& b, const std::vector<int>& c) {
    return independent_unchecked(m, a, b, c, lang, ts);
  };
}

enum class Axiom { monotonicity, transitivity, symmetry, stationarity, existence };

inline const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::monotonicity: return "monotonicity";
    case Axiom::transitivity: return "transitivity";
    case Axiom::symmetry: return "symmetry";
    case Axiom::stationarity: return "stationarity";
    default: return "existence";
  }
}

inline std::optional<Axiom> axiom_from_string(std::string_view s) {
  for (Axiom a : {Axiom::monotonicity, Axiom::transitivity, Axiom::symmetry,
                  Axiom::stationarity, Axiom::existence})
    if (s == to_string(a)) return a;
  return std::nullopt;
}

struct AxiomViolation {
  CompleteStructure ambient;
  std::vector<int> a, b, c, d;
  std::string detail;
};

struct AxiomReport {
  Axiom axiom = Axiom::monotonicity;
  std::uint64_t instances_checked = 0;  // configurations whose premises held
  std::uint64_t violation_count = 0;
  std::vector<AxiomViolation> violations;  // first few, deterministic order
};

struct AxiomOptions {
  int max_size = 6;   // ambient vertex ceiling (hard cap 7)
  int max_base = 3;   // |B| cap
  int max_side = 2;   // cap on each of |A\B|, |C\B|, |D\(B*C)|
  std::size_t max_witnesses = 8;
};

// Sweep one axiom over every isomorphism class of valid structures up to
// opts.max_size vertices. Role assignments are disjoint and cover the
// ambient vertex set: a violating configuration with spectator vertices
// restricts to a violating full-cover configuration on its own union,
// which is enumerated as a smaller ambient structure, so covering
// assignments lose nothing. Overlapping side sets reduce likewise by the
// base-absorption normalization.
inline AxiomReport check_axiom(Axiom axiom, const TriangleSet& ts, const ColorLanguage& lang,
                               const AxiomOptions& opts = {}, IndepFn fn = {},
                               CanonicalStructures* pool = nullptr) {
  if (opts.max_size < 1 || opts.max_size > 7)
    throw InputError("axiom sweep size must lie between 1 and 7");
  if (!fn) fn = make_independence_predicate(lang, ts);

  CanonicalStructures local{ts};
  CanonicalStructures& structures = pool ? *pool : local;

  AxiomReport report;
  report.axiom = axiom;

  auto record = [&](AxiomViolation v) {
    ++report.violation_count;
    if (report.violations.size() < opts.max_witnesses)
      report.violations.push_back(std::move(v));
  };

  auto four_role_sweep = [&](auto&& handle) {
    for (int n = 1; n <= opts.max_size; ++n)
      for (std::uint64_t code : structures.level(n)) {
        CompleteStructure m = structures.structure(n, code);
        std::vector<int> roles(n, 0);
        while (true) {
          std::vector<int> a, b, c, d;
          for (int v = 0; v < n; ++v)
            (roles[v] == 0 ? a : roles[v] == 1 ? b : roles[v] == 2 ? c : d).push_back(v);
          if (static_cast<int>(a.size()) >= 1 && static_cast<int>(a.size()) <= opts.max_side &&
              static_cast<int>(b.size()) <= opts.max_base &&
              static_cast<int>(c.size()) <= opts.max_side &&
              static_cast<int>(d.size()) <= opts.max_side)
            handle(m, a, b, c, d);
          int i = 0;
          while (i < n && roles[i] == 3) roles[i++] = 0;
          if (i == n) break;
          ++roles[i];
        }
      }
  };

  switch (axiom) {
    case Axiom::monotonicity:
      four_role_sweep([&](const CompleteStructure& m, const std::vector<int>& a,
                          const std::vector<int>& b, const std::vector<int>& c,
                          const std::vector<int>& d) {
        std::vector<int> cd = detail::sorted_unique([&] {
          std::vector<int> u = c;
          u.insert(u.end(), d.begin(), d.end());
          return u;
        }());
        if (!fn(m, a, b, cd)) return;
        ++report.instances_checked;
        if (!fn(m, a, b, c))
          record({m, a, b, c, d, "joint independence holds but the first side fails"});
        std::vector<int> bc = detail::sorted_unique([&] {
          std::vector<int> u = b;
          u.insert(u.end(), c.begin(), c.end());
          return u;
        }());
        if (!fn(m, a, bc, d))
          record({m, a, b, c, d, "joint independence holds but the enlarged-base side fails"});
      });
      break;

    case Axiom::transitivity:
      four_role_sweep([&](const CompleteStructure& m, const std::vector<int>& a,
                          const std::vector<int>& b, const std::vector<int>& c,
                          const std::vector<int>& d) {
        if (!fn(m, a, b, c)) return;
        std::vector<int> bc = detail::sorted_unique([&] {
          std::vector<int> u = b;
          u.insert(u.end(), c.begin(), c.end());
          return u;
        }());
        if (!fn(m, a, bc, d)) return;
        ++report.instances_checked;
        if (!fn(m, a, b, d))
          record({m, a, b, c, d, "independence fails to transfer down to the original base"});
      });
      break;

    case Axiom::symmetry:
      for (int n = 1; n <= opts.max_size; ++n)
        for (std::uint64_t code : structures.level(n)) {
          CompleteStructure m = structures.structure(n, code);
          std::vector<int> roles(n, 0);
          while (true) {
            std::vector<int> a, b, c;
            for (int v = 0; v < n; ++v)
              (roles[v] == 0 ? a : roles[v] == 1 ? b : c).push_back(v);
            if (static_cast<int>(a.size()) >= 1 &&
                static_cast<int>(a.size()) <= opts.max_side &&
                static_cast<int>(b.size()) <= opts.max_base &&
                static_cast<int>(c.size()) <= opts.max_side) {
              ++report.instances_checked;
              if (fn(m, a, b, c) != fn(m, c, b, a))
                record({m, a, b, c, {}, "independence is not symmetric in the two sides"});
            }
            int i = 0;
            while (i < n && roles[i] == 2) roles[i++] = 0;
            if (i == n) break;
            ++roles[i];
          }
        }
      break;

    case Axiom::stationarity:
      for (int n = 2; n <= opts.max_size; ++n)
        for (std::uint64_t code : structures.level(n)) {
          CompleteStructure m = structures.structure(n, code);
          for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
              std::vector<int> others;
              for (int v = 0; v < n; ++v)
                if (v != x && v != y) others.push_back(v);
              const int rest = static_cast<int>(others.size());
              for (std::uint32_t pick = 0; pick < (1u << rest); ++pick) {
                std::vector<int> b, c;
                for (int i = 0; i < rest; ++i)
                  ((pick >> i) & 1u ? b : c).push_back(others[i]);
                if (static_cast<int>(b.size()) > opts.max_base ||
                    static_cast<int>(c.size()) > opts.max_side)
                  continue;
                if (type_vector(m, x, b) != type_vector(m, y, b)) continue;
                if (!fn(m, {x}, b, c) || !fn(m, {y}, b, c)) continue;
                ++report.instances_checked;
                std::vector<int> bc = b;
                bc.insert(bc.end(), c.begin(), c.end());
                std::sort(bc.begin(), bc.end());
                std::vector<int> lx{x}, ly{y};
                lx.insert(lx.end(), bc.begin(), bc.end());
                ly.insert(ly.end(), bc.begin(), bc.end());
                std::vector<std::pair<int, int>> pins;
                for (std::size_t i = 1; i < lx.size(); ++i)
                  pins.emplace_back(static_cast<int>(i), static_cast<int>(i));
                if (!structure_isomorphic(m.induced(lx), m.induced(ly), pins))
                  record({m, {x, y}, b, c, {},
                          "equal types, both independent from the side, but the one-point "
                          "structures over the joint base differ"});
              }
            }
        }
      break;

    case Axiom::existence: {
      const int nc = lang.size();
      const int umax = std::min(opts.max_size, opts.max_base + opts.max_side);
      for (int n = 1; n <= umax; ++n)
        for (std::uint64_t code : structures.level(n)) {
          CompleteStructure m = structures.structure(n, code);
          for (std::uint32_t pick = 0; pick < (1u << n); ++pick) {
            std::vector<int> b, c;
            for (int v = 0; v < n; ++v) ((pick >> v) & 1u ? b : c).push_back(v);
            if (static_cast<int>(b.size()) > opts.max_base ||
                static_cast<int>(c.size()) > opts.max_side)
              continue;
            const int nb = static_cast<int>(b.size());
            std::vector<Color> tau(nb, 0);
            while (true) {
              bool admissible = true;
              for (int i = 0; i < nb && admissible; ++i)
                for (int j = i + 1; j < nb && admissible; ++j)
                  if ((ts.blocked_mask(tau[i], tau[j]) >> m.color(b[i], b[j])) & 1u)
                    admissible = false;
              if (admissible) {
                ++report.instances_checked;
                const int v = n;
                CompleteStructure w(n + 1);
                for (int j = 1; j < n; ++j)
                  for (int i = 0; i < j; ++i) w.set_color(i, j, m.color(i, j));
                for (int i = 0; i < nb; ++i) w.set_color(b[i], v, tau[i]);
                std::string why;
                std::vector<ProfilePair> profile(nb);
                for (int x : c) {
                  for (int i = 0; i < nb; ++i)
                    profile[i] = ProfilePair::make(tau[i], m.color(b[i], x));
                  if (auto r = prioritized_color(profile, lang, ts)) {
                    w.set_color(x, v, *r);
                  } else {
                    why = "no solution color is admissible for a required pair";
                    break;
                  }
                }
                if (why.empty() && !is_valid(w, ts))
                  why = "the canonical realization closes a forbidden triangle";
                if (why.empty() && !fn(w, {v}, b, c))
                  why = "the realized point is not independent from the side";
                if (!why.empty()) record({m, {}, b, c, {}, why});
              }
              if (nb == 0) break;
              int i = 0;
              while (i < nb && tau[i] == nc - 1) tau[i++] = 0;
              if (i == nb) break;
              ++tau[i];
            }
          }
        }
      break;
    }
  }
  return report;
}

enum class DeletionVariant { one_sided, two_sided };

inline const char* to_string(DeletionVariant v) {
  return v == DeletionVariant::one_sided ? "one_sided" : "two_sided";
}

struct DeletionWitness {
  CompleteStructure ambient;
  int a = 0, b = 0, c = 0;
  std::vector<int> retained;
};

struct DeletionReport {
  DeletionVariant variant = DeletionVariant::one_sided;
  std::uint64_t instances_checked = 0;
  std::uint64_t violation_count = 0;
  std::optional<int> minimal_witness_size;
  std::vector<DeletionWitness> minimal_witnesses;  // capped
};

// Can a base point whose edge to one side (or to both sides) carries a
// solution color be deleted from the base without breaking independence?
// Enumerates every isomorphism class with 4..max_size vertices, every
// ordered point pair (a, c) and base point b, with the rest of the
// structure as the retained base (nonempty by construction; spectator
// vertices are covered by smaller ambients as in the axiom sweeps).
inline DeletionReport check_deletion(const TriangleSet& ts, const ColorLanguage& lang,
                                     DeletionVariant variant, int max_size,
                                     CanonicalStructures* pool = nullptr,
                                     std::size_t max_witnesses = 8) {
  if (max_size < 4 || max_size > 7)
    throw InputError("deletion sweep size must lie between 4 and 7");
  CanonicalStructures local{ts};
  CanonicalStructures& structures = pool ? *pool : local;

  DeletionReport report;
  report.variant = variant;
  for (int n = 4; n <= max_size; ++n)
    for (std::uint64_t code : structures.level(n)) {
      CompleteStructure m = structures.structure(n, code);
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
          if (c == a) continue;
          for (int b = 0; b < n; ++b) {
            if (b == a || b == c) continue;
            if (!lang.is_solution(m.color(a, b))) continue;
            if (variant == DeletionVariant::two_sided && !lang.is_solution(m.color(b, c)))
              continue;
            std::vector<int> retained;
            for (int v = 0; v < n; ++v)
              if (v != a && v != b && v != c) retained.push_back(v);
            std::vector<int> with_b = retained;
            with_b.insert(std::lower_bound(with_b.begin(), with_b.end(), b), b);
            if (!independent_unchecked(m, {a}, with_b, {c}, lang, ts)) continue;
            ++report.instances_checked;
            if (independent_unchecked(m, {a}, retained, {c}, lang, ts)) continue;
            ++report.violation_count;
            if (!report.minimal_witness_size) report.minimal_witness_size = n;
            if (n == *report.minimal_witness_size &&
                report.minimal_witnesses.size() < max_witnesses)
              report.minimal_witnesses.push_back(DeletionWitness{m, a, b, c, retained});
          }
        }
    }
  return report;
}

// Role-preserving isomorphism between two deletion configurations: a to a,
// b to b, c to c, retained base to retained base setwise.
inline bool deletion_witness_equivalent(const DeletionWitness& x, const DeletionWitness& y) {
  if (x.ambient.vertex_count() != y.ambient.vertex_count()) return false;
  if (x.retained.size() != y.retained.size()) return false;
  std::vector<int> perm = y.retained;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<std::pair<int, int>> pins{{x.a, y.a}, {x.b, y.b}, {x.c, y.c}};
    for (std::size_t i = 0; i < perm.size(); ++i) pins.emplace_back(x.retained[i], perm[i]);
    if (structure_isomorphic(x.ambient, y.ambient, pins)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace amalgam

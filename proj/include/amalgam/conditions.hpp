#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "amalgam/core.hpp"

namespace amalgam {

// First certificate: no forbidden triangle carries two solution colors
// (with multiplicity) together with any third color. Guarantees that the
// colors prioritised completion picks never close a forbidden triangle,
// for every priority order on the solution set. It says nothing about a
// cross pair whose every solution color is blocked; closure checks must
// rule that out separately before trusting the certificate.
inline bool check_condition1(const TriangleSet& ts, const ColorLanguage& lang) {
  for (const auto& t : ts.triangles()) {
    int solution_count = 0;
    for (Color c : t.colors) solution_count += lang.is_solution(c) ? 1 : 0;
    if (solution_count >= 2) return false;
  }
  return true;
}

// Parameters for the second certificate: two disjoint subsets of the
// non-solution colors (the "star" and "hat" families).
struct Condition2Params {
  std::vector<Color> l_star;
  std::vector<Color> l_hat;

  bool operator==(const Condition2Params&) const = default;
};

// The triangles the second certificate requires S to contain, given a
// two-color solution set {R1 > R2}:
//   {R', S1, S2} for R' ranging over all colors except R2 and the hat
//                family, S1, S2 over the star family,
//   {R2, R2, S1} for S1 over the star family,
//   {R2, H, S1}  for H over the hat family, S1 over the star family.
inline std::vector<Triangle> condition2_required_triangles(const ColorLanguage& lang,
                                                           const Condition2Params& params) {
  const auto& pri = lang.priority();
  if (pri.size() != 2)
    throw InputError("the second certificate needs exactly two solution colors");
  const Color r2 = pri[1];
  std::uint32_t hat_mask = 0;
  for (Color h : params.l_hat) hat_mask |= 1u << h;

  std::vector<Triangle> out;
  for (const auto& s1 : params.l_star)
    for (const auto& s2 : params.l_star) {
      if (s2 < s1) continue;
      for (int rp = 0; rp < lang.size(); ++rp) {
        Color r = static_cast<Color>(rp);
        if (r == r2 || ((hat_mask >> r) & 1u)) continue;
        out.push_back(Triangle::make(r, s1, s2));
      }
    }
  for (const auto& s1 : params.l_star) {
    out.push_back(Triangle::make(r2, r2, s1));
    for (Color h : params.l_hat) out.push_back(Triangle::make(r2, h, s1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Second certificate: with solution set {R1 > R2}, S contains exactly the
// required triangles as far as R1 and the pair R2R2 are concerned: every
// required triangle is present, no triangle outside them contains R1, and
// no triangle outside them contains R2 twice.
inline bool check_condition2(const TriangleSet& ts, const ColorLanguage& lang,
                             const Condition2Params& params) {
  const auto& pri = lang.priority();
  if (pri.size() != 2)
    throw InputError("the second certificate needs exactly two solution colors");
  const Color r1 = pri[0], r2 = pri[1];
  std::uint32_t star_mask = 0, hat_mask = 0;
  for (Color s : params.l_star) {
    if (lang.is_solution(s)) throw InputError("star colors must lie outside the solution set");
    star_mask |= 1u << s;
  }
  for (Color h : params.l_hat) {
    if (lang.is_solution(h) || ((star_mask >> h) & 1u))
      throw InputError("hat colors must lie outside the solution set and the star family");
    hat_mask |= 1u << h;
  }

  auto required = condition2_required_triangles(lang, params);
  for (const auto& t : required)
    if (!ts.contains(t)) return false;
  for (const auto& t : ts.triangles()) {
    if (std::binary_search(required.begin(), required.end(), t)) continue;
    if (t.contains(r1) || t.contains_pair(r2, r2)) return false;
  }
  return true;
}

// Search all disjoint (star, hat) pairs over the non-solution colors for
// parameters making the second certificate hold; deterministic first hit
// (ascending star bitmask, then ascending hat bitmask).
inline std::optional<Condition2Params> find_condition2_params(const TriangleSet& ts,
                                                              const ColorLanguage& lang) {
  if (lang.priority().size() != 2) return std::nullopt;
  std::vector<Color> rest;
  for (int c = 0; c < lang.size(); ++c)
    if (!lang.is_solution(static_cast<Color>(c))) rest.push_back(static_cast<Color>(c));
  const std::uint32_t limit = 1u << rest.size();
  for (std::uint32_t star = 0; star < limit; ++star)
    for (std::uint32_t hat = 0; hat < limit; ++hat) {
      if (star & hat) continue;
      Condition2Params params;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if ((star >> i) & 1u) params.l_star.push_back(rest[i]);
        if ((hat >> i) & 1u) params.l_hat.push_back(rest[i]);
      }
      if (check_condition2(ts, lang, params)) return params;
    }
  return std::nullopt;
}

// Syntactic half of the deletion property: no forbidden triangle contains
// the top-priority color twice or together with the second priority.
inline bool check_maincond_i(const TriangleSet& ts, const ColorLanguage& lang) {
  const auto& pri = lang.priority();
  if (pri.size() < 2)
    throw InputError("this check needs at least two solution colors");
  const Color r1 = pri[0], r2 = pri[1];
  for (const auto& t : ts.triangles())
    if (t.contains_pair(r1, r1) || t.contains_pair(r1, r2)) return false;
  return true;
}

}  // namespace amalgam

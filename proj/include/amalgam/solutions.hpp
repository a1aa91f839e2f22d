#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "amalgam/closure.hpp"
#include "amalgam/completion.hpp"
#include "amalgam/core.hpp"

namespace amalgam {

// A valid instance whose cross pair admits exactly one color of the whole
// alphabet: that color must belong to every workable solution set.
struct ForcedColorWitness {
  Color color;
  AmalgamationInstance instance;
  std::vector<ProfilePair> profile;
  std::uint32_t admissible_mask = 0;
};

// Scan one-point-by-one-point instances with at most `bound` base points,
// in ascending base-size order, and report each color that some instance
// forces, with the first instance that forces it.
inline std::vector<ForcedColorWitness> compute_forced_colors(const TriangleSet& ts,
                                                             int bound) {
  if (bound < 0 || bound > 4) throw InputError("forced-color bound must lie between 0 and 4");
  const std::uint32_t all = ts.all_colors_mask();
  std::vector<std::optional<ForcedColorWitness>> per_color(ts.language().size());

  for (int k = 1; k <= bound; ++k) {
    for (const auto& base : detail::valid_bases(ts, k)) {
      auto attach = detail::valid_attachments(ts, base);
      for (std::size_t x = 0; x < attach.size(); ++x)
        for (std::size_t y = x; y < attach.size(); ++y) {
          std::uint32_t blocked = 0;
          for (int b = 0; b < k; ++b)
            blocked |= ts.blocked_mask(attach[x][b], attach[y][b]);
          std::uint32_t admissible = all & ~blocked;
          if (std::popcount(admissible) != 1) continue;
          Color c = static_cast<Color>(std::countr_zero(admissible));
          if (per_color[c]) continue;
          std::vector<ProfilePair> profile;
          for (int b = 0; b < k; ++b)
            profile.push_back(ProfilePair::make(attach[x][b], attach[y][b]));
          per_color[c] = ForcedColorWitness{
              c,
              AmalgamationInstance::make(k, detail::base_plus_one(base, attach[x]),
                                         detail::base_plus_one(base, attach[y])),
              std::move(profile), admissible};
        }
    }
  }
  std::vector<ForcedColorWitness> out;
  for (auto& w : per_color)
    if (w) out.push_back(std::move(*w));
  return out;
}

struct OrderVerdict {
  std::vector<Color> order;  // highest priority first
  ClosureStatus status = ClosureStatus::no_counterexample_up_to_bound;
  std::optional<CertificateInfo> certificate;
};

struct SolutionSetCandidate {
  std::vector<Color> colors;  // ascending
  std::vector<OrderVerdict> passing_orders;
};

struct SolutionAnalysis {
  std::vector<ForcedColorWitness> forced;
  std::vector<SolutionSetCandidate> minimal_sets;
};

// Every inclusion-minimal strict subset of the alphabet that contains all
// forced colors and closes the class under some priority order, with every
// passing order listed. Candidate sets ascend by size then by color mask;
// supersets of an already-passing set are skipped.
inline SolutionAnalysis find_solution_sets(const TriangleSet& ts, int bound) {
  const ColorLanguage& alphabet = ts.language();
  const int nc = alphabet.size();
  SolutionAnalysis out;
  out.forced = compute_forced_colors(ts, bound);
  std::uint32_t forced_mask = 0;
  for (const auto& w : out.forced) forced_mask |= 1u << w.color;

  std::vector<std::uint32_t> candidates;
  const std::uint32_t all = ts.all_colors_mask();
  for (std::uint32_t m = 1; m < all; ++m)  // strict subsets only
    if ((m & forced_mask) == forced_mask) candidates.push_back(m);
  std::sort(candidates.begin(), candidates.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  std::vector<std::uint32_t> accepted;
  for (std::uint32_t mask : candidates) {
    bool redundant = false;
    for (std::uint32_t small : accepted)
      if ((small & mask) == small) {
        redundant = true;
        break;
      }
    if (redundant) continue;

    std::vector<Color> colors;
    for (int c = 0; c < nc; ++c)
      if ((mask >> c) & 1u) colors.push_back(static_cast<Color>(c));

    SolutionSetCandidate cand;
    cand.colors = colors;
    std::vector<Color> perm = colors;
    do {
      std::vector<std::string> perm_names;
      for (Color c : perm) perm_names.push_back(alphabet.name(c));
      ColorLanguage lang = alphabet.with_solutions(perm_names, perm_names);
      ClosureVerdict v = check_closure(ts, lang, bound);
      if (v.status != ClosureStatus::counterexample_found)
        cand.passing_orders.push_back(OrderVerdict{perm, v.status, v.certificate});
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (!cand.passing_orders.empty()) {
      accepted.push_back(mask);
      out.minimal_sets.push_back(std::move(cand));
    }
  }
  return out;
}

}  // namespace amalgam

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "amalgam/core.hpp"

namespace amalgam {

// The pair of colors a cross pair (a, c) sees at one base vertex b:
// (r(a, b), r(b, c)). Order within the pair is immaterial.
struct ProfilePair {
  Color a_side;
  Color c_side;

  static ProfilePair make(Color a, Color c) {
    return a <= c ? ProfilePair{a, c} : ProfilePair{c, a};
  }
  auto operator<=>(const ProfilePair&) const = default;
};

// Bitmask of colors r such that assigning r to the cross pair closes a
// forbidden triangle through some base vertex of the profile.
inline std::uint32_t profile_blocked_mask(const std::vector<ProfilePair>& profile,
                                          const TriangleSet& ts) {
  std::uint32_t blocked = 0;
  for (const auto& p : profile) blocked |= ts.blocked_mask(p.a_side, p.c_side);
  return blocked;
}

// The highest-priority solution color admissible over the profile, or
// nullopt when every solution color is obstructed. An empty profile yields
// the top-priority color.
inline std::optional<Color> prioritized_color(const std::vector<ProfilePair>& profile,
                                              const ColorLanguage& lang,
                                              const TriangleSet& ts) {
  const std::uint32_t blocked = profile_blocked_mask(profile, ts);
  for (Color r : lang.priority())
    if (!((blocked >> r) & 1u)) return r;
  return std::nullopt;
}

// Two structures overlapping in a common base: the first base_size vertices
// of each are identified (and must agree edge-for-edge). Both sides must
// properly extend the base.
struct AmalgamationInstance {
  int base_size = 0;
  CompleteStructure left;
  CompleteStructure right;

  static AmalgamationInstance make(int base_size, CompleteStructure left,
                                   CompleteStructure right) {
    if (base_size < 0) throw InputError("negative base size");
    if (left.vertex_count() <= base_size || right.vertex_count() <= base_size)
      throw InputError("each side must properly extend the base");
    for (int j = 1; j < base_size; ++j)
      for (int i = 0; i < j; ++i)
        if (left.color(i, j) != right.color(i, j))
          throw InputError("the two sides disagree on base edge (" + std::to_string(i) +
                           ", " + std::to_string(j) + ")");
    return AmalgamationInstance{base_size, std::move(left), std::move(right)};
  }

  int left_new() const { return left.vertex_count() - base_size; }
  int right_new() const { return right.vertex_count() - base_size; }
  // Combined structure indexing: base, then left-only, then right-only.
  int combined_size() const { return left.vertex_count() + right_new(); }
  // Combined index of right-side vertex j.
  int right_vertex(int j) const { return j < base_size ? j : j + left_new(); }

  CompleteStructure base() const {
    std::vector<int> b(base_size);
    for (int i = 0; i < base_size; ++i) b[i] = i;
    return left.induced(b);
  }

  bool operator==(const AmalgamationInstance&) const = default;
};

struct CrossEdge {
  int a;  // combined index, left side
  int c;  // combined index, right side
  Color color;

  bool operator==(const CrossEdge&) const = default;
};

// A cross pair every solution color is obstructed for, with its profile.
struct FailedEdge {
  int a;
  int c;
  std::vector<ProfilePair> profile;

  bool operator==(const FailedEdge&) const = default;
};

// Result of completing an instance. `completed` always carries a color on
// every edge: cross pairs that failed receive the top-priority color as a
// placeholder so downstream consumers see a complete structure, and
// `failed_edges` is authoritative about which pairs those are.
// `violations` lists forbidden triangles lying entirely among the new
// vertices whose edges all completed (triangles inside either side, and
// placeholder artifacts, are excluded by construction).
struct CompletionResult {
  CompleteStructure completed;
  std::vector<CrossEdge> cross_colors;
  std::vector<Violation> violations;
  std::vector<FailedEdge> failed_edges;

  bool clean() const { return violations.empty() && failed_edges.empty(); }
};

// Prioritised semi-free completion: every cross pair receives the
// highest-priority solution color admissible over its base profile,
// independently of all other cross pairs.
inline CompletionResult amalgamate(const AmalgamationInstance& inst,
                                   const ColorLanguage& lang, const TriangleSet& ts) {
  const int k = inst.base_size;
  const int nl = inst.left.vertex_count();
  const int n = inst.combined_size();

  CompletionResult res;
  res.completed = CompleteStructure(n);
  for (int j = 1; j < nl; ++j)
    for (int i = 0; i < j; ++i) res.completed.set_color(i, j, inst.left.color(i, j));
  for (int j = 1; j < inst.right.vertex_count(); ++j)
    for (int i = 0; i < j; ++i)
      res.completed.set_color(inst.right_vertex(i), inst.right_vertex(j),
                              inst.right.color(i, j));

  std::vector<ProfilePair> profile(k);
  for (int a = k; a < nl; ++a)
    for (int cj = k; cj < inst.right.vertex_count(); ++cj) {
      const int c = inst.right_vertex(cj);
      for (int b = 0; b < k; ++b)
        profile[b] = ProfilePair::make(inst.left.color(b, a), inst.right.color(b, cj));
      if (auto r = prioritized_color(profile, lang, ts)) {
        res.completed.set_color(a, c, *r);
        res.cross_colors.push_back(CrossEdge{a, c, *r});
      } else {
        res.completed.set_color(a, c, lang.priority().front());
        res.cross_colors.push_back(CrossEdge{a, c, kNoColor});
        res.failed_edges.push_back(FailedEdge{a, c, profile});
      }
    }

  // Forbidden triangles can only appear among the new vertices; skip any
  // triple touching a failed (placeholder) pair.
  auto failed = [&](int x, int y) {
    for (const auto& f : res.failed_edges)
      if ((f.a == x && f.c == y) || (f.a == y && f.c == x)) return true;
    return false;
  };
  for (int i = k; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (failed(i, j)) continue;
      for (int l = j + 1; l < n; ++l) {
        if (failed(i, l) || failed(j, l)) continue;
        Color a = res.completed.color(i, j), b = res.completed.color(i, l),
              c = res.completed.color(j, l);
        if ((ts.blocked_mask(a, b) >> c) & 1u)
          res.violations.push_back(Violation{{i, j, l}, Triangle::make(a, b, c)});
      }
    }
  return res;
}

}  // namespace amalgam

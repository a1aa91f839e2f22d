#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "amalgam/core.hpp"

namespace amalgam {

// Canonical forms for structures with at most 7 vertices over at most 4
// colors. A structure's code packs its edge colors, 2 bits each, in
// column-lexicographic edge order with the first edge in the highest bits,
// so integer comparison of codes is lexicographic comparison of edge
// sequences and a prefix bound prunes whole relabeling subtrees.

namespace detail {
inline constexpr int tri(int k) { return k * (k - 1) / 2; }

inline void check_code_limits(int n, int colors) {
  if (n > 7) throw InputError("canonical forms support at most 7 vertices");
  if (colors > 4) throw InputError("canonical forms support at most 4 colors");
}
}  // namespace detail

inline std::uint64_t structure_code(const CompleteStructure& m) {
  const int n = m.vertex_count();
  const int e_total = detail::tri(n);
  detail::check_code_limits(n, 0);
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      Color c = m.color(i, j);
      if (c >= 4) throw InputError("canonical forms support at most 4 colors");
      int e = detail::tri(j) + i;
      code |= static_cast<std::uint64_t>(c) << (2 * (e_total - 1 - e));
    }
  return code;
}

inline CompleteStructure structure_from_code(std::uint64_t code, int n) {
  detail::check_code_limits(n, 0);
  const int e_total = detail::tri(n);
  CompleteStructure m(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int e = detail::tri(j) + i;
      m.set_color(i, j, static_cast<Color>((code >> (2 * (e_total - 1 - e))) & 3u));
    }
  return m;
}

// Least code over all vertex relabelings (branch and bound).
inline std::uint64_t canonical_code(const CompleteStructure& m) {
  const int n = m.vertex_count();
  std::uint64_t best = structure_code(m);
  if (n < 3) return best;
  const int e_total = detail::tri(n);
  std::vector<int> perm(n);
  std::vector<char> used(n, 0);

  auto dfs = [&](auto&& self, int pos, std::uint64_t cur) -> void {
    if (pos == n) {
      if (cur < best) best = cur;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::uint64_t ext = cur;
      for (int i = 0; i < pos; ++i) {
        int e = detail::tri(pos) + i;
        ext |= static_cast<std::uint64_t>(m.color(perm[i], v)) << (2 * (e_total - 1 - e));
      }
      int shift = 2 * (e_total - detail::tri(pos + 1));
      if ((ext >> shift) > (best >> shift)) continue;
      perm[pos] = v;
      used[v] = 1;
      self(self, pos + 1, ext);
      used[v] = 0;
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

inline CompleteStructure canonical_form(const CompleteStructure& m) {
  return structure_from_code(canonical_code(m), m.vertex_count());
}

// Lazily built catalog of all isomorphism classes of valid structures of
// each size, represented by sorted canonical codes. Level n is produced by
// attaching one vertex to every level n-1 representative in every valid
// way and canonicalizing; since validity is closed under substructures,
// deleting the last vertex of any valid n-structure lands in level n-1, so
// every class is reached.
class CanonicalStructures {
 public:
  explicit CanonicalStructures(TriangleSet ts) : ts_(std::move(ts)) {
    detail::check_code_limits(7, ts_.language().size());
    levels_.resize(8);
    built_.assign(8, false);
    levels_[1] = {0};
    built_[1] = true;
  }

  const TriangleSet& triangle_set() const { return ts_; }

  const std::vector<std::uint64_t>& level(int n) {
    if (n < 1 || n > 7) throw InputError("enumeration supports sizes 1 to 7");
    for (int k = 2; k <= n; ++k)
      if (!built_[k]) build_level(k);
    return levels_[n];
  }

  CompleteStructure structure(int n, std::uint64_t code) const {
    return structure_from_code(code, n);
  }

 private:
  void build_level(int n) {
    const int nc = ts_.language().size();
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t parent_code : levels_[n - 1]) {
      CompleteStructure parent = structure_from_code(parent_code, n - 1);
      const int p = n - 1;
      std::vector<Color> vec(p, 0);
      while (true) {
        bool ok = true;
        for (int i = 0; i < p && ok; ++i)
          for (int j = i + 1; j < p && ok; ++j)
            if ((ts_.blocked_mask(vec[i], vec[j]) >> parent.color(i, j)) & 1u) ok = false;
        if (ok) {
          CompleteStructure child(n);
          for (int j = 1; j < p; ++j)
            for (int i = 0; i < j; ++i) child.set_color(i, j, parent.color(i, j));
          for (int i = 0; i < p; ++i) child.set_color(i, p, vec[i]);
          seen.insert(canonical_code(child));
        }
        int d = 0;
        while (d < p && vec[d] == nc - 1) vec[d++] = 0;
        if (d == p) break;
        ++vec[d];
      }
    }
    levels_[n].assign(seen.begin(), seen.end());
    std::sort(levels_[n].begin(), levels_[n].end());
    built_[n] = true;
  }

  TriangleSet ts_;
  std::vector<std::vector<std::uint64_t>> levels_;
  std::vector<char> built_;
};

}  // namespace amalgam

#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "amalgam/completion.hpp"
#include "amalgam/conditions.hpp"
#include "amalgam/core.hpp"
#include "amalgam/parallel.hpp"

namespace amalgam {

namespace detail {

// All valid complete base structures on k labeled vertices, ascending in
// the edge-color odometer order (first edge fastest).
inline std::vector<CompleteStructure> valid_bases(const TriangleSet& ts, int k) {
  const int nc = ts.language().size();
  const int edges = k * (k - 1) / 2;
  std::vector<CompleteStructure> out;
  std::vector<Color> vec(edges, 0);
  while (true) {
    CompleteStructure base(k);
    {
      int e = 0;
      for (int j = 1; j < k; ++j)
        for (int i = 0; i < j; ++i) base.set_color(i, j, vec[e++]);
    }
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j)
        for (int l = j + 1; l < k && ok; ++l)
          if ((ts.blocked_mask(base.color(i, j), base.color(i, l)) >> base.color(j, l)) & 1u)
            ok = false;
    if (ok) out.push_back(std::move(base));
    int d = 0;
    while (d < edges && vec[d] == nc - 1) vec[d++] = 0;
    if (d == edges) break;
    ++vec[d];
  }
  return out;
}

// All attachment vectors keeping base + one new vertex valid, lexicographic
// (first base vertex fastest).
inline std::vector<std::vector<Color>> valid_attachments(const TriangleSet& ts,
                                                         const CompleteStructure& base) {
  const int nc = ts.language().size();
  const int k = base.vertex_count();
  std::vector<std::vector<Color>> out;
  std::vector<Color> vec(k, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j)
        if ((ts.blocked_mask(vec[i], vec[j]) >> base.color(i, j)) & 1u) ok = false;
    if (ok) out.push_back(vec);
    if (k == 0) break;
    int d = 0;
    while (d < k && vec[d] == nc - 1) vec[d++] = 0;
    if (d == k) break;
    ++vec[d];
  }
  return out;
}

inline CompleteStructure base_plus_one(const CompleteStructure& base,
                                       const std::vector<Color>& va) {
  const int k = base.vertex_count();
  CompleteStructure m(k + 1);
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i) m.set_color(i, j, base.color(i, j));
  for (int i = 0; i < k; ++i) m.set_color(i, k, va[i]);
  return m;
}

inline CompleteStructure base_plus_two(const CompleteStructure& base,
                                       const std::vector<Color>& v1,
                                       const std::vector<Color>& v2, Color internal) {
  const int k = base.vertex_count();
  CompleteStructure m(k + 2);
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i) m.set_color(i, j, base.color(i, j));
  for (int i = 0; i < k; ++i) {
    m.set_color(i, k, v1[i]);
    m.set_color(i, k + 1, v2[i]);
  }
  m.set_color(k, k + 1, internal);
  return m;
}

}  // namespace detail

struct ClosureSearchWitness {
  AmalgamationInstance instance;
  CompletionResult completion;
};

// Exhaustive counterexample search over all amalgamation instances with at
// most `bound` base points: every valid base, every pair of valid one-point
// extensions (semi-freeness failures), and every valid instance with two
// new points on one side and one on the other, in both orientations
// (completion-created forbidden triangles). Deterministic first witness in
// (base size, base, shape, attachment tuple) order.
inline std::optional<ClosureSearchWitness> search_closure_counterexample(
    const TriangleSet& ts, const ColorLanguage& lang, int bound) {
  if (bound < 0 || bound > 4) throw InputError("closure search bound must lie between 0 and 4");
  const std::uint32_t all = ts.all_colors_mask();

  for (int k = 0; k <= bound; ++k) {
    auto bases = detail::valid_bases(ts, k);
    std::atomic<std::size_t> cutoff{bases.size()};
    std::vector<std::optional<ClosureSearchWitness>> found(bases.size());

    auto scan_base = [&](std::size_t bi) -> std::optional<ClosureSearchWitness> {
      const CompleteStructure& base = bases[bi];
      auto attach = detail::valid_attachments(ts, base);
      const std::size_t na = attach.size();
      if (na == 0) return std::nullopt;

      // Cross color for each pair of attachment vectors (kNoColor = failure).
      std::vector<Color> rmat(na * na);
      std::vector<std::uint32_t> pair_blocked(na * na);
      for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = x; y < na; ++y) {
          std::uint32_t blocked = 0;
          for (int b = 0; b < k; ++b)
            blocked |= ts.blocked_mask(attach[x][b], attach[y][b]);
          Color r = kNoColor;
          for (Color c : lang.priority())
            if (!((blocked >> c) & 1u)) {
              r = c;
              break;
            }
          rmat[x * na + y] = rmat[y * na + x] = r;
          pair_blocked[x * na + y] = pair_blocked[y * na + x] = blocked;
        }

      // Shape (1, 1): a failed cross pair is a counterexample by itself.
      for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = x; y < na; ++y)
          if (rmat[x * na + y] == kNoColor) {
            auto inst = AmalgamationInstance::make(k, detail::base_plus_one(base, attach[x]),
                                                   detail::base_plus_one(base, attach[y]));
            return ClosureSearchWitness{inst, amalgamate(inst, lang, ts)};
          }

      // Shapes (2, 1) and (1, 2): two new points u, v on one side with an
      // internal edge, one new point w on the other; the completed colors
      // may close a forbidden triangle on {u, v, w}.
      auto scan_pair_side = [&](bool pair_on_left) -> std::optional<ClosureSearchWitness> {
        for (std::size_t u = 0; u < na; ++u)
          for (std::size_t v = u; v < na; ++v) {
            std::uint32_t internal_mask = all & ~pair_blocked[u * na + v];
            if (!internal_mask) continue;
            for (std::size_t w = 0; w < na; ++w) {
              Color r1 = rmat[u * na + w], r2 = rmat[v * na + w];
              if (r1 == kNoColor || r2 == kNoColor) continue;
              std::uint32_t bad = internal_mask & ts.blocked_mask(r1, r2);
              if (!bad) continue;
              Color e = static_cast<Color>(std::countr_zero(bad));
              auto pair_struct = detail::base_plus_two(base, attach[u], attach[v], e);
              auto single_struct = detail::base_plus_one(base, attach[w]);
              auto inst = pair_on_left
                              ? AmalgamationInstance::make(k, pair_struct, single_struct)
                              : AmalgamationInstance::make(k, single_struct, pair_struct);
              return ClosureSearchWitness{inst, amalgamate(inst, lang, ts)};
            }
          }
        return std::nullopt;
      };
      if (auto w = scan_pair_side(true)) return w;
      if (auto w = scan_pair_side(false)) return w;
      return std::nullopt;
    };

    parallel_chunks(bases.size(), [&](unsigned, std::size_t begin, std::size_t end) {
      for (std::size_t bi = begin; bi < end; ++bi) {
        if (bi > cutoff.load(std::memory_order_relaxed)) return;
        if (auto w = scan_base(bi)) {
          found[bi] = std::move(w);
          std::size_t prev = cutoff.load(std::memory_order_relaxed);
          while (bi < prev &&
                 !cutoff.compare_exchange_weak(prev, bi, std::memory_order_relaxed)) {
          }
          return;
        }
      }
    });

    for (auto& w : found)
      if (w) return std::move(*w);
  }
  return std::nullopt;
}

// Exact search for an instance whose cross pair admits no solution color at
// all. A fully blocked pair stays fully blocked after restricting the base
// to one blocking point per solution color, and restriction preserves
// validity, so a witness always survives inside some base of at most
// min(|solutions|, 4) points; finding nothing at that depth settles
// assignability outright when the solution set has at most four colors.
inline std::optional<ClosureSearchWitness> search_assignment_failure(const TriangleSet& ts,
                                                                     const ColorLanguage& lang) {
  const std::uint32_t sol = lang.solution_mask();
  const int depth = std::min<int>(static_cast<int>(lang.priority().size()), 4);
  for (int k = 1; k <= depth; ++k)
    for (const auto& base : detail::valid_bases(ts, k)) {
      auto attach = detail::valid_attachments(ts, base);
      const std::size_t na = attach.size();
      for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = x; y < na; ++y) {
          std::uint32_t blocked = 0;
          for (int b = 0; b < k; ++b) blocked |= ts.blocked_mask(attach[x][b], attach[y][b]);
          if ((blocked & sol) == sol) {
            auto inst = AmalgamationInstance::make(k, detail::base_plus_one(base, attach[x]),
                                                   detail::base_plus_one(base, attach[y]));
            return ClosureSearchWitness{inst, amalgamate(inst, lang, ts)};
          }
        }
    }
  return std::nullopt;
}

enum class ClosureStatus {
  certified_condition1,
  certified_condition2,
  counterexample_found,
  no_counterexample_up_to_bound,
};

inline const char* to_string(ClosureStatus s) {
  switch (s) {
    case ClosureStatus::certified_condition1: return "certified_condition1";
    case ClosureStatus::certified_condition2: return "certified_condition2";
    case ClosureStatus::counterexample_found: return "counterexample_found";
    default: return "no_counterexample_up_to_bound";
  }
}

struct CertificateInfo {
  int condition = 0;  // 1 or 2
  Condition2Params params;
};

struct ClosureVerdict {
  ClosureStatus status = ClosureStatus::no_counterexample_up_to_bound;
  std::optional<CertificateInfo> certificate;
  std::optional<ClosureSearchWitness> witness;
  int bound_used = 0;  // 0 when the search did not run
  bool search_ran = false;
};

// Certificates first, but a certificate is only trusted once every cross
// pair is known to admit some solution color: both certificates argue about
// the colors the completion picks, so a pair with every solution blocked
// falls outside them and is a counterexample on its own. The exhaustive
// search runs when no certificate applies or when forced; a witness always
// wins. If the bounded search misses but the assignability probe found a
// failure, the probe's witness is returned even though its base may be
// deeper than `bound`.
inline ClosureVerdict check_closure(const TriangleSet& ts, const ColorLanguage& lang, int bound,
                                    bool force_search = false) {
  if (bound < 0 || bound > 4) throw InputError("closure search bound must lie between 0 and 4");
  ClosureVerdict verdict;
  auto blockage = search_assignment_failure(ts, lang);
  const bool assignable = !blockage && static_cast<int>(lang.priority().size()) <= 4;
  if (assignable && check_condition1(ts, lang)) {
    verdict.certificate = CertificateInfo{1, {}};
  } else if (assignable && lang.priority().size() == 2) {
    if (auto params = find_condition2_params(ts, lang))
      verdict.certificate = CertificateInfo{2, *params};
  }
  if (!verdict.certificate || force_search) {
    verdict.search_ran = true;
    verdict.bound_used = bound;
    verdict.witness = search_closure_counterexample(ts, lang, bound);
    if (!verdict.witness) verdict.witness = std::move(blockage);
  }
  if (verdict.witness)
    verdict.status = ClosureStatus::counterexample_found;
  else if (verdict.certificate)
    verdict.status = verdict.certificate->condition == 1 ? ClosureStatus::certified_condition1
                                                         : ClosureStatus::certified_condition2;
  else
    verdict.status = ClosureStatus::no_counterexample_up_to_bound;
  return verdict;
}

}  // namespace amalgam

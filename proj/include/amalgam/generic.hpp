#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/closure.hpp"
#include "amalgam/completion.hpp"
#include "amalgam/conditions.hpp"
#include "amalgam/core.hpp"
#include "amalgam/io.hpp"

namespace amalgam {

struct ExtensionStep {
  std::vector<int> base;
  std::vector<Color> tau;
  int vertex;
};

// A finite structure in which every admissible one-point type over every
// base of at most t vertices is realized.
struct GenericApproximation {
  CompleteStructure structure;
  int t = 0;
  std::uint64_t seed = 0;
  std::vector<ExtensionStep> log;
};

struct BuildOptions {
  int max_vertices = 1200;
  int max_retries = 8;
};

// Data of a semi-freeness failure hit during construction: the instance
// the builder tripped over, and the least one-point instance over the same
// solution set exhibiting the failure (independent of construction state).
struct BuildFailureWitness {
  AmalgamationInstance encountered;
  std::vector<ProfilePair> profile;
  std::optional<AmalgamationInstance> minimal;
  std::vector<ProfilePair> minimal_profile;
};

class BuildError : public std::runtime_error {
 public:
  BuildError(const std::string& msg, std::optional<BuildFailureWitness> w)
      : std::runtime_error(msg), witness(std::move(w)) {}
  std::optional<BuildFailureWitness> witness;
};

namespace detail {

inline std::uint64_t bounded_rand(std::mt19937_64& eng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = eng();
  } while (x >= limit);
  return x % n;
}

struct DeadEnd {};

}  // namespace detail

// Least one-point instance (base size ascending, then base, then
// attachment pair) for which no solution color is admissible.
inline std::optional<std::pair<AmalgamationInstance, std::vector<ProfilePair>>>
minimal_infeasible_instance(const TriangleSet& ts, const ColorLanguage& lang, int bound) {
  for (int k = 0; k <= bound; ++k)
    for (const auto& base : detail::valid_bases(ts, k)) {
      auto attach = detail::valid_attachments(ts, base);
      for (std::size_t x = 0; x < attach.size(); ++x)
        for (std::size_t y = x; y < attach.size(); ++y) {
          std::uint32_t blocked = 0;
          for (int b = 0; b < k; ++b)
            blocked |= ts.blocked_mask(attach[x][b], attach[y][b]);
          if ((~blocked) & lang.solution_mask()) continue;
          std::vector<ProfilePair> profile;
          for (int b = 0; b < k; ++b)
            profile.push_back(ProfilePair::make(attach[x][b], attach[y][b]));
          return std::make_pair(
              AmalgamationInstance::make(k, detail::base_plus_one(base, attach[x]),
                                         detail::base_plus_one(base, attach[y])),
              std::move(profile));
        }
    }
  return std::nullopt;
}

struct MissingType {
  std::vector<int> base;
  std::vector<Color> tau;
};

// Independent saturation audit: recompute, from the finished structure
// alone, every admissible unrealized type over bases of size at most g.t.
inline std::vector<MissingType> audit_saturation(const GenericApproximation& g,
                                                 const TriangleSet& ts,
                                                 const ColorLanguage& lang) {
  const int n = g.structure.vertex_count();
  const int nc = lang.size();
  std::vector<MissingType> missing;

  for (int bsize = 0; bsize <= g.t && bsize <= n; ++bsize) {
    std::vector<int> base(bsize);
    for (int i = 0; i < bsize; ++i) base[i] = i;
    bool more_bases = true;
    while (more_bases) {
      // Patterns realized over this base, as base-nc codes.
      std::size_t limit = 1;
      for (int i = 0; i < bsize; ++i) limit *= static_cast<std::size_t>(nc);
      std::vector<char> seen(limit, 0);
      for (int w = 0; w < n; ++w) {
        bool in_base = false;
        std::size_t code = 0;
        for (int i = 0; i < bsize; ++i) {
          if (base[i] == w) {
            in_base = true;
            break;
          }
          code = code * nc + g.structure.color(w, base[i]);
        }
        if (!in_base) seen[code] = 1;
      }
      std::vector<Color> tau(bsize, 0);
      bool more_taus = true;
      while (more_taus) {
        bool admissible = true;
        for (int i = 0; i < bsize && admissible; ++i)
          for (int j = i + 1; j < bsize && admissible; ++j)
            if ((ts.blocked_mask(tau[i], tau[j]) >> g.structure.color(base[i], base[j])) & 1u)
              admissible = false;
        if (admissible) {
          std::size_t code = 0;
          for (int i = 0; i < bsize; ++i) code = code * nc + tau[i];
          if (!seen[code]) missing.push_back(MissingType{base, tau});
        }
        int d = 0;
        while (d < bsize && tau[d] == nc - 1) tau[d++] = 0;
        more_taus = d < bsize;
        if (more_taus) ++tau[d];
      }
      int i = bsize - 1;
      while (i >= 0 && base[i] == n - bsize + i) --i;
      more_bases = i >= 0;
      if (more_bases) {
        ++base[i];
        for (int j = i + 1; j < bsize; ++j) base[j] = base[j - 1] + 1;
      }
    }
  }
  return missing;
}

namespace detail {

// A color x whose x,x cherries all close through a single color g0, with
// x,x,x itself forbidden. Saturation at t == 2 then rigidifies the whole
// geometry: the x-colored graph has no triangles, two x-edges meeting at a
// vertex force g0 between their far ends, every g0 pair needs a common
// x-neighbor, and the remaining "bulk" colors are pushed out to pairs at
// x-distance three.
struct RigidCherry {
  Color x = 0;
  Color g0 = 0;
  std::vector<Color> bulk;
};

inline std::optional<RigidCherry> find_rigid_cherry(const TriangleSet& ts,
                                                    const ColorLanguage& lang) {
  const int nc = lang.size();
  for (Color x = 0; x < nc; ++x) {
    const std::uint32_t blocked = ts.blocked_mask(x, x);
    if (!((blocked >> x) & 1u)) continue;
    const std::uint32_t open = ~blocked & ts.all_colors_mask();
    if (std::popcount(open) != 1) continue;
    RigidCherry rc;
    rc.x = x;
    rc.g0 = static_cast<Color>(std::countr_zero(open));
    for (Color c = 0; c < nc; ++c)
      if (c != rc.x && c != rc.g0) rc.bulk.push_back(c);
    if (!rc.bulk.empty()) return rc;
  }
  return std::nullopt;
}

// Difference structure on the 64 six-bit vectors: the color of a pair
// depends only on the xor of its endpoints, so one 64-bit mask per
// x-distance class describes everything. conn holds the xor values at
// distance 1 in the x-graph, dist2 and dist3 those at distance 2 and 3.
struct DifferenceSkeleton {
  std::uint64_t conn = 0;
  std::uint64_t dist2 = 0;
  std::uint64_t dist3 = 0;
};

// Distance classes of the connection set; true when the x-graph is
// triangle-free with diameter exactly three.
inline bool skeleton_classes(std::uint64_t conn, DifferenceSkeleton& sk) {
  sk.conn = conn;
  sk.dist2 = 0;
  for (int a = 1; a < 64; ++a) {
    if (!((conn >> a) & 1u)) continue;
    for (int b = a + 1; b < 64; ++b) {
      if (!((conn >> b) & 1u)) continue;
      if ((conn >> (a ^ b)) & 1u) return false;
      sk.dist2 |= 1ull << (a ^ b);
    }
  }
  sk.dist2 &= ~(conn | 1ull);
  sk.dist3 = 0;
  for (int a = 1; a < 64; ++a)
    if ((sk.dist2 >> a) & 1u)
      for (int b = 1; b < 64; ++b)
        if ((conn >> b) & 1u) sk.dist3 |= 1ull << (a ^ b);
  sk.dist3 &= ~(sk.dist2 | conn | 1ull);
  return (conn | sk.dist2 | sk.dist3) == ~1ull && sk.dist3 != 0;
}

// Label the distance-3 classes with bulk colors so that behind every pair,
// every demanded color pattern has a witness, then assemble and verify.
// Clauses list, per pair class and demanded pattern, the witness classes
// able to realize it together with the labels they would pin; a seeded
// random walk repairs violated clauses. Patterns free of bulk colors need
// no clause: the threshold filter already guaranteed their witnesses.
inline std::optional<CompleteStructure> skeleton_structure(const TriangleSet& ts,
                                                           const ColorLanguage& lang,
                                                           const RigidCherry& rc,
                                                           const DifferenceSkeleton& sk, int t,
                                                           std::mt19937_64& eng) {
  const int nc = lang.size();
  const int nb = static_cast<int>(rc.bulk.size());
  int did[64];
  for (int i = 0; i < 64; ++i) did[i] = -1;
  std::vector<int> d3;
  for (int v = 1; v < 64; ++v)
    if ((sk.dist3 >> v) & 1u) {
      did[v] = static_cast<int>(d3.size());
      d3.push_back(v);
    }
  const int nv = static_cast<int>(d3.size());

  struct Option {
    int v1, l1, v2, l2;
  };
  std::vector<std::vector<Option>> clauses;
  std::vector<std::vector<Color>> kinds = {{rc.x}, {rc.g0}, rc.bulk};
  for (int delta = 1; delta < 64; ++delta) {
    const int dk = ((sk.conn >> delta) & 1u) ? 0 : ((sk.dist2 >> delta) & 1u) ? 1 : 2;
    for (Color a = 0; a < nc; ++a)
      for (Color b = a; b < nc; ++b) {
        const bool a_bulk = a != rc.x && a != rc.g0;
        const bool b_bulk = b != rc.x && b != rc.g0;
        if (!a_bulk && !b_bulk) continue;
        bool demanded = false;
        for (Color e : kinds[dk])
          if (!((ts.blocked_mask(a, b) >> e) & 1u)) demanded = true;
        if (!demanded) continue;
        std::vector<Option> opts;
        auto side = [&](Color c, int dd, int& var, int& want) {
          if (c == rc.x) return ((sk.conn >> dd) & 1u) != 0u;
          if (c == rc.g0) return ((sk.dist2 >> dd) & 1u) != 0u;
          if (!((sk.dist3 >> dd) & 1u)) return false;
          var = did[dd];
          for (int bi = 0; bi < nb; ++bi)
            if (rc.bulk[bi] == c) want = bi;
          return true;
        };
        for (int z = 1; z < 64; ++z) {
          if (z == delta) continue;
          int v1 = -1, l1 = 0, v2 = -1, l2 = 0;
          if (side(a, z, v1, l1) && side(b, z ^ delta, v2, l2))
            opts.push_back(Option{v1, l1, v2, l2});
        }
        if (opts.empty()) return std::nullopt;
        clauses.push_back(std::move(opts));
      }
  }
  // Every bulk color must appear on some class: one-point types over a
  // single base vertex demand it, and every class meets every vertex.
  for (int l = 0; l < nb; ++l) {
    std::vector<Option> opts;
    for (int v = 0; v < nv; ++v) opts.push_back(Option{v, l, -1, 0});
    clauses.push_back(std::move(opts));
  }

  std::vector<int> lab(nv, 0);
  auto option_holds = [&](const Option& o) {
    if (o.v1 >= 0 && lab[o.v1] != o.l1) return false;
    if (o.v2 >= 0 && lab[o.v2] != o.l2) return false;
    return true;
  };
  const int restarts = 10, flips = 1500;
  for (int r = 0; r < restarts; ++r) {
    for (int& v : lab) v = static_cast<int>(bounded_rand(eng, nb));
    bool solved = false;
    for (int it = 0; it < flips; ++it) {
      std::vector<int> unsat;
      for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
        bool ok = false;
        for (const auto& o : clauses[ci])
          if (option_holds(o)) {
            ok = true;
            break;
          }
        if (!ok) unsat.push_back(static_cast<int>(ci));
      }
      if (unsat.empty()) {
        solved = true;
        break;
      }
      const auto& cl = clauses[unsat[bounded_rand(eng, unsat.size())]];
      const auto& o = cl[bounded_rand(eng, cl.size())];
      if (o.v1 >= 0) lab[o.v1] = o.l1;
      if (o.v2 >= 0) lab[o.v2] = o.l2;
    }
    if (!solved) continue;
    CompleteStructure mm(64);
    for (int u = 0; u < 64; ++u)
      for (int v = u + 1; v < 64; ++v) {
        const int delta = u ^ v;
        const Color c = ((sk.conn >> delta) & 1u)    ? rc.x
                        : ((sk.dist2 >> delta) & 1u) ? rc.g0
                                                     : rc.bulk[lab[did[delta]]];
        mm.set_color(u, v, c);
      }
    if (!validate_structure(mm, ts).empty()) continue;
    GenericApproximation cand{mm, t, 0, {}};
    if (!audit_saturation(cand, ts, lang).empty()) continue;
    return mm;
  }
  return std::nullopt;
}

// Exhaustive difference-skeleton search for rigid-cherry languages at
// t == 2. Any connection set spanning the six bits maps to one containing
// the standard basis under a linear change of coordinates, which permutes
// xor classes and distances, so enumerating the basis plus up to three
// extra generators covers every spanning candidate up to equivalence.
inline std::optional<CompleteStructure> saturated_difference_structure(const TriangleSet& ts,
                                                                       const ColorLanguage& lang,
                                                                       const RigidCherry& rc,
                                                                       int t,
                                                                       std::uint64_t seed) {
  const int nc = lang.size();
  // Witness demand per (pair distance, endpoint kind, endpoint kind):
  // how many color patterns, demanded under some edge color of that
  // distance class, a pair must be able to seat. Kind 0 is x, 1 is g0,
  // 2 the bulk; edge colors per distance follow the rigid geometry.
  int thr[4][3][3] = {};
  std::vector<std::vector<Color>> kinds = {{rc.x}, {rc.g0}, rc.bulk};
  for (int d = 1; d <= 3; ++d)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int need = 0;
        for (Color a : kinds[i])
          for (Color b : kinds[j]) {
            bool demanded = false;
            for (Color e : kinds[d - 1])
              if (!((ts.blocked_mask(a, b) >> e) & 1u)) demanded = true;
            if (demanded) ++need;
          }
        thr[d][i][j] = need;
      }
  // A five-cycle in the x-graph puts two g0 edges and an x edge on a
  // triangle; filter it out when that triangle is forbidden.
  const bool no_five_cycles = ((ts.blocked_mask(rc.g0, rc.g0) >> rc.x) & 1u) != 0u;

  auto shifted = [](std::uint64_t m, int delta) {
    std::uint64_t r = 0;
    for (int v = 1; v < 64; ++v)
      if ((m >> v) & 1u) r |= 1ull << (v ^ delta);
    return r;
  };
  auto survives = [&](const DifferenceSkeleton& sk) {
    const std::uint64_t cls[3] = {sk.conn, sk.dist2, sk.dist3};
    for (int d = 0; d < 3; ++d)
      for (int v = 1; v < 64; ++v) {
        if (!((cls[d] >> v) & 1u)) continue;
        if (no_five_cycles && d == 0 && (sk.dist2 & shifted(sk.dist2, v)) != 0u) return false;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            if (std::popcount(cls[i] & shifted(cls[j], v)) < thr[d + 1][i][j]) return false;
      }
    return true;
  };

  std::mt19937_64 eng(seed ^ 0x9E3779B97F4A7C15ull);
  std::uint64_t basis = 0;
  for (int i = 0; i < 6; ++i) basis |= 1ull << (1 << i);
  std::vector<int> pool;
  for (int v = 3; v < 64; ++v)
    if (std::popcount(static_cast<unsigned>(v)) >= 2) pool.push_back(v);

  int tried = 0;
  for (int k = 0; k <= 3 && tried < 6; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    bool more = true;
    while (more && tried < 6) {
      std::uint64_t conn = basis;
      for (int i : idx) conn |= 1ull << pool[i];
      DifferenceSkeleton sk;
      if (skeleton_classes(conn, sk) && survives(sk)) {
        ++tried;
        if (auto mm = skeleton_structure(ts, lang, rc, sk, t, eng)) return mm;
      }
      if (k == 0) break;
      int i = k - 1;
      while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - k + i) --i;
      more = i >= 0;
      if (more) {
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Grow a structure until every admissible one-point type over every base of
// size at most t is realized. Each adjoined vertex gets its declared type
// edges; every other edge first has its solution feasibility over the scan
// base checked (an exhausted pair is exactly a semi-freeness failure of the
// class and raises BuildError with the failing instance), then receives a
// seeded-random color admissible against all edges already placed at the
// new vertex. Dead ends retry with fresh substreams; the final attempt
// completes by priority over the scan base alone. Same inputs, same output.
inline GenericApproximation build_generic(const TriangleSet& ts, const ColorLanguage& lang,
                                          int t, std::uint64_t seed,
                                          const BuildOptions& opts = {}) {
  if (t < 0 || t > 3) throw InputError("saturation level must lie between 0 and 3");
  // A solution set leaving some admissible attachment pair colorless can
  // never finish a scan, whatever the schedule or budget: surface the
  // least failing instance up front instead of timing out on it.
  if (auto inf = minimal_infeasible_instance(ts, lang, t)) {
    BuildFailureWitness w{inf->first, inf->second, inf->first, inf->second};
    throw BuildError("construction failed: no solution color fits a required pair",
                     std::move(w));
  }
  // Rigid-cherry languages outgrow every adjoin schedule at t == 2: wedge
  // blocking keeps x-degrees flat while the demand for common x-neighbors
  // grows with every scan. A closed difference construction is tried first
  // and, when it verifies, returned with an empty extension log.
  if (t == 2 && opts.max_vertices >= 64) {
    if (auto rc = detail::find_rigid_cherry(ts, lang)) {
      if (auto mm = detail::saturated_difference_structure(ts, lang, *rc, t, seed)) {
        GenericApproximation g;
        g.structure = std::move(*mm);
        g.t = t;
        g.seed = seed;
        return g;
      }
    }
  }
  const int nc = lang.size();
  const std::uint32_t all = ts.all_colors_mask();

  auto fail_infeasible = [&](const std::vector<int>& base, const std::vector<Color>& tau,
                             int x, const std::vector<std::vector<Color>>& adj,
                             const std::vector<ProfilePair>& profile) -> BuildError {
    const int k = static_cast<int>(base.size());
    CompleteStructure left(k + 1), right(k + 1);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        left.set_color(i, j, adj[base[i]][base[j]]);
        right.set_color(i, j, adj[base[i]][base[j]]);
      }
    for (int i = 0; i < k; ++i) {
      left.set_color(i, k, tau[i]);
      right.set_color(i, k, adj[base[i]][x]);
    }
    BuildFailureWitness w{AmalgamationInstance::make(k, std::move(left), std::move(right)),
                          profile, std::nullopt, {}};
    if (auto minimal = minimal_infeasible_instance(ts, lang, t)) {
      w.minimal = std::move(minimal->first);
      w.minimal_profile = std::move(minimal->second);
    }
    return BuildError("construction failed: no solution color fits a required pair", std::move(w));
  };

  for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
    const bool pure_mode = attempt == opts.max_retries;
    std::mt19937_64 eng(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(attempt));
    std::vector<std::vector<Color>> adj;  // adj[v][w], diagonal unused
    std::vector<ExtensionStep> log;

    try {
      bool changed = true;
      while (changed) {
        changed = false;
        const int n0 = static_cast<int>(adj.size());
        for (int bsize = 0; bsize <= t && bsize <= n0; ++bsize) {
          // Ascending combinations of [0, n0) of size bsize.
          std::vector<int> base(bsize);
          for (int i = 0; i < bsize; ++i) base[i] = i;
          bool more_bases = true;
          while (more_bases) {
            std::vector<Color> tau(bsize, 0);
            bool more_taus = true;
            while (more_taus) {
              bool admissible = true;
              for (int i = 0; i < bsize && admissible; ++i)
                for (int j = i + 1; j < bsize && admissible; ++j)
                  if ((ts.blocked_mask(tau[i], tau[j]) >> adj[base[i]][base[j]]) & 1u)
                    admissible = false;
              if (admissible) {
                const int n = static_cast<int>(adj.size());
                bool realized = false;
                for (int w = 0; w < n && !realized; ++w) {
                  bool in_base = false, match = true;
                  for (int i = 0; i < bsize; ++i) {
                    if (base[i] == w) in_base = true;
                    if (adj[w][base[i]] != tau[i]) match = false;
                  }
                  realized = !in_base && match;
                }
                if (!realized) {
                  if (n + 1 > opts.max_vertices)
                    throw BuildError(
                        "construction did not converge within the vertex budget (" +
                            std::to_string(opts.max_vertices) + ")",
                        std::nullopt);
                  std::vector<Color> col(n, kNoColor);
                  std::vector<int> colored;
                  for (int i = 0; i < bsize; ++i) {
                    col[base[i]] = tau[i];
                    colored.push_back(base[i]);
                  }
                  std::vector<ProfilePair> profile(bsize);
                  for (int x = 0; x < n; ++x) {
                    if (col[x] != kNoColor) continue;
                    for (int i = 0; i < bsize; ++i)
                      profile[i] = ProfilePair::make(tau[i], adj[base[i]][x]);
                    auto feasible = prioritized_color(profile, lang, ts);
                    if (!feasible) throw fail_infeasible(base, tau, x, adj, profile);
                    if (pure_mode) {
                      col[x] = *feasible;
                    } else {
                      std::uint32_t mask = all;
                      for (int y : colored) mask &= ~ts.blocked_mask(col[y], adj[y][x]);
                      if (!mask) throw detail::DeadEnd{};
                      int idx = static_cast<int>(
                          detail::bounded_rand(eng, std::popcount(mask)));
                      std::uint32_t pick = mask;
                      for (int i = 0; i < idx; ++i) pick &= pick - 1;
                      col[x] = static_cast<Color>(std::countr_zero(pick));
                    }
                    colored.push_back(x);
                  }
                  for (int w = 0; w < n; ++w) adj[w].push_back(col[w]);
                  col.push_back(kNoColor);
                  adj.push_back(std::move(col));
                  log.push_back(ExtensionStep{base, tau, n});
                  changed = true;
                }
              }
              int d = 0;
              while (d < bsize && tau[d] == nc - 1) tau[d++] = 0;
              more_taus = d < bsize;
              if (more_taus) ++tau[d];
            }
            // Next combination.
            int i = bsize - 1;
            while (i >= 0 && base[i] == n0 - bsize + i) --i;
            more_bases = i >= 0;
            if (more_bases) {
              ++base[i];
              for (int j = i + 1; j < bsize; ++j) base[j] = base[j - 1] + 1;
            }
          }
        }
      }
    } catch (const detail::DeadEnd&) {
      continue;  // fresh substream
    }

    const int n = static_cast<int>(adj.size());
    GenericApproximation g;
    g.structure = CompleteStructure(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.structure.set_color(i, j, adj[i][j]);
    g.t = t;
    g.seed = seed;
    g.log = std::move(log);
    if (!validate_structure(g.structure, ts).empty()) {
      if (pure_mode)
        throw BuildError("priority completion closed a forbidden triangle", std::nullopt);
      throw std::logic_error("admissible edge choices produced an invalid structure");
    }
    return g;
  }
  throw std::logic_error("unreachable: the final build attempt neither returned nor threw");
}

// First vertex realizing the given admissible type over the given base.
inline int extension_witness(const GenericApproximation& g, const std::vector<int>& base,
                             const std::vector<Color>& tau, const ColorLanguage& lang,
                             const TriangleSet& ts) {
  const int n = g.structure.vertex_count();
  if (tau.size() != base.size())
    throw InputError("type length does not match the base size");
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i] < 0 || base[i] >= n) throw InputError("base vertex out of range");
    for (std::size_t j = i + 1; j < base.size(); ++j)
      if (base[i] == base[j]) throw InputError("repeated base vertex");
  }
  for (Color c : tau)
    if (c >= lang.size()) throw InputError("type color outside the alphabet");
  if (static_cast<int>(base.size()) > g.t)
    throw CapabilityError("base exceeds the saturation level " + std::to_string(g.t));
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j)
      if ((ts.blocked_mask(tau[i], tau[j]) >> g.structure.color(base[i], base[j])) & 1u)
        throw InputError("type is inadmissible over this base");
  for (int w = 0; w < n; ++w) {
    bool in_base = false, match = true;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (base[i] == w) in_base = true;
      else if (g.structure.color(w, base[i]) != tau[i]) match = false;
    }
    if (!in_base && match) return w;
  }
  throw std::logic_error("saturation invariant breached: admissible type unrealized");
}

// A vertex joined to c1 by the top-priority color and to c2 by the second,
// with top-priority edges to the whole base. Exists whenever no forbidden
// triangle involves the two top priorities, the base and the two points
// all carry top-priority edges, and the base plus the two points fit
// within the saturation level.
inline int distinguishing_witness(const GenericApproximation& g, int c1, int c2,
                                  const std::vector<int>& base, const ColorLanguage& lang,
                                  const TriangleSet& ts) {
  const int n = g.structure.vertex_count();
  if (c1 < 0 || c2 < 0 || c1 >= n || c2 >= n || c1 == c2)
    throw InputError("need two distinct vertices in range");
  if (!check_maincond_i(ts, lang))
    throw InputError("the forbidden set does not admit top-priority pair types");
  const Color r1 = lang.priority()[0], r2 = lang.priority()[1];
  for (int b : base) {
    if (b < 0 || b >= n || b == c1 || b == c2) throw InputError("bad base vertex");
    if (g.structure.color(b, c1) != r1 || g.structure.color(b, c2) != r1)
      throw InputError("base edges to both vertices must carry the top-priority color");
  }
  if (static_cast<int>(base.size()) + 2 > g.t)
    throw CapabilityError("base plus the two vertices exceeds the saturation level " +
                          std::to_string(g.t));
  for (int w = 0; w < n; ++w) {
    if (w == c1 || w == c2) continue;
    bool in_base = false, match = true;
    for (int b : base) {
      if (b == w) in_base = true;
      else if (g.structure.color(w, b) != r1) match = false;
    }
    if (in_base || !match) continue;
    if (g.structure.color(w, c1) == r1 && g.structure.color(w, c2) == r2) return w;
  }
  throw std::logic_error("saturation invariant breached: distinguishing type unrealized");
}

struct GenericMetadata {
  std::string entry;
  int t = 0;
  std::uint64_t seed = 0;
};

inline std::string write_generic_file(const GenericApproximation& g, const ColorLanguage& lang,
                                      const std::string& entry_label) {
  return "# entry=" + entry_label + " t=" + std::to_string(g.t) +
         " seed=" + std::to_string(g.seed) + "\n" + write_structure(g.structure, lang);
}

inline std::pair<GenericMetadata, CompleteStructure> parse_generic_file(
    std::string_view text, const ColorLanguage& lang) {
  GenericMetadata meta;
  bool found = false;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size() && !found) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b != std::string_view::npos && line[b] == '#') {
      auto toks = detail::tokens(std::string(line.substr(b + 1)));
      if (!toks.empty() && toks[0].rfind("entry=", 0) == 0) {
        if (toks.size() != 3 || toks[1].rfind("t=", 0) != 0 || toks[2].rfind("seed=", 0) != 0)
          throw InputError(line_no, "malformed metadata line");
        meta.entry = toks[0].substr(6);
        meta.t = detail::parse_int(toks[1].substr(2), line_no, "a saturation level");
        try {
          meta.seed = std::stoull(toks[2].substr(5));
        } catch (...) {
          throw InputError(line_no, "malformed seed");
        }
        found = true;
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  if (!found) throw InputError("missing metadata comment line");
  return {meta, parse_structure(text, lang)};
}

}  // namespace amalgam

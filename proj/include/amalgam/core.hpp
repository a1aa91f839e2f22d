#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace amalgam {

// Colors are indices into a ColorLanguage's alphabet.
using Color = std::uint8_t;
inline constexpr Color kNoColor = 0xff;

// Error for malformed user input (files, option values, ill-typed queries).
// Messages carry position information where it is available.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
  InputError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg) {}
};

// Error for requests beyond what a constructed object can answer (for
// example, querying types above a structure's saturation level).
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An ordered color alphabet together with a distinguished strict subset of
// "solution" colors carrying a priority order (highest priority first).
// Cross pairs created by an amalgamation always receive solution colors.
class ColorLanguage {
 public:
  static ColorLanguage make(std::vector<std::string> color_names,
                            const std::vector<std::string>& solution_names,
                            const std::vector<std::string>& priority_names) {
    ColorLanguage lang;
    if (color_names.size() < 2)
      throw InputError("a color language needs at least two colors");
    if (color_names.size() > 32)
      throw InputError("color alphabets above 32 colors are not supported");
    for (std::size_t i = 0; i < color_names.size(); ++i) {
      if (color_names[i].empty())
        throw InputError("empty color name");
      for (std::size_t j = i + 1; j < color_names.size(); ++j)
        if (color_names[i] == color_names[j])
          throw InputError("duplicate color name '" + color_names[i] + "'");
    }
    lang.names_ = std::move(color_names);
    if (solution_names.empty())
      throw InputError("the solution set must be nonempty");
    if (solution_names.size() >= lang.names_.size())
      throw InputError("the solution set must be a strict subset of the colors");
    for (const auto& name : solution_names) {
      auto c = lang.find(name);
      if (!c) throw InputError("unknown solution color '" + name + "'");
      if (lang.solution_mask_ & (1u << *c))
        throw InputError("duplicate solution color '" + name + "'");
      lang.solution_mask_ |= 1u << *c;
      lang.solution_.push_back(*c);
    }
    std::sort(lang.solution_.begin(), lang.solution_.end());
    if (priority_names.size() != solution_names.size())
      throw InputError("the priority order must list every solution color exactly once");
    std::uint32_t seen = 0;
    for (const auto& name : priority_names) {
      auto c = lang.find(name);
      if (!c || !(lang.solution_mask_ & (1u << *c)))
        throw InputError("priority order mentions non-solution color '" + name + "'");
      if (seen & (1u << *c))
        throw InputError("priority order repeats color '" + name + "'");
      seen |= 1u << *c;
      lang.priority_.push_back(*c);
    }
    return lang;
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Color c) const { return names_.at(c); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Color> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<Color>(i);
    return std::nullopt;
  }
  Color require(std::string_view name, int line = -1) const {
    auto c = find(name);
    if (!c) {
      std::string msg = "unknown color '" + std::string(name) + "'";
      if (line >= 0) throw InputError(line, msg);
      throw InputError(msg);
    }
    return *c;
  }

  // Solution colors in ascending index order.
  const std::vector<Color>& solution_set() const { return solution_; }
  // Solution colors from highest to lowest priority.
  const std::vector<Color>& priority() const { return priority_; }
  std::uint32_t solution_mask() const { return solution_mask_; }
  bool is_solution(Color c) const { return (solution_mask_ >> c) & 1u; }

  // Same alphabet, different solution set / priority order.
  ColorLanguage with_solutions(const std::vector<std::string>& solution_names,
                               const std::vector<std::string>& priority_names) const {
    return make(names_, solution_names, priority_names);
  }
  // Reorders the existing solution set; the order must be a permutation of it.
  ColorLanguage with_priority(const std::vector<Color>& order) const {
    if (order.size() != solution_.size())
      throw InputError("the priority order must list every solution color exactly once");
    ColorLanguage out = *this;
    out.priority_.clear();
    std::uint32_t seen = 0;
    for (Color c : order) {
      if (c < 0 || c >= size() || !is_solution(c))
        throw InputError("the priority order may only mention solution colors");
      if (seen & (1u << c))
        throw InputError("priority order repeats color '" + name(c) + "'");
      seen |= 1u << c;
      out.priority_.push_back(c);
    }
    return out;
  }

  bool operator==(const ColorLanguage& o) const {
    return names_ == o.names_ && priority_ == o.priority_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Color> solution_;
  std::vector<Color> priority_;
  std::uint32_t solution_mask_ = 0;
};

// An unordered triple of colors (multiset), stored sorted by color index.
struct Triangle {
  std::array<Color, 3> colors;

  static Triangle make(Color a, Color b, Color c) {
    Triangle t{{a, b, c}};
    std::sort(t.colors.begin(), t.colors.end());
    return t;
  }

  bool contains(Color c) const {
    return colors[0] == c || colors[1] == c || colors[2] == c;
  }
  int count(Color c) const {
    return (colors[0] == c) + (colors[1] == c) + (colors[2] == c);
  }
  // True when the multiset {a, b} is contained in this triple.
  bool contains_pair(Color a, Color b) const {
    if (a == b) return count(a) >= 2;
    return count(a) >= 1 && count(b) >= 1;
  }

  auto operator<=>(const Triangle&) const = default;
};

inline std::string triangle_name(const Triangle& t, const ColorLanguage& lang) {
  return lang.name(t.colors[0]) + lang.name(t.colors[1]) + lang.name(t.colors[2]);
}

// A finite set of forbidden triangles over a fixed alphabet, with an O(1)
// "which third colors close a forbidden triangle over this pair" table.
class TriangleSet {
 public:
  static TriangleSet make(const ColorLanguage& lang, std::vector<Triangle> triangles) {
    TriangleSet ts;
    ts.language_ = lang;
    const int n = lang.size();
    for (auto& t : triangles)
      for (Color c : t.colors)
        if (c >= n) throw InputError("triangle color index out of range");
    std::sort(triangles.begin(), triangles.end());
    triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());
    ts.triangles_ = std::move(triangles);
    ts.blocked_.assign(static_cast<std::size_t>(n) * n, 0);
    for (const auto& t : ts.triangles_) {
      const auto [a, b, c] = t.colors;
      ts.blocked_[a * n + b] |= 1u << c;
      ts.blocked_[b * n + a] |= 1u << c;
      ts.blocked_[a * n + c] |= 1u << b;
      ts.blocked_[c * n + a] |= 1u << b;
      ts.blocked_[b * n + c] |= 1u << a;
      ts.blocked_[c * n + b] |= 1u << a;
    }
    return ts;
  }

  // The alphabet the triangles are expressed over. Operations that need a
  // priority order take an explicit ColorLanguage whose alphabet must match;
  // its solution set and order may differ from this one's.
  const ColorLanguage& language() const { return language_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }

  bool contains(const Triangle& t) const {
    return (blocked_mask(t.colors[0], t.colors[1]) >> t.colors[2]) & 1u;
  }
  // Bitmask of colors c with {a, b, c} forbidden.
  std::uint32_t blocked_mask(Color a, Color b) const {
    return blocked_[static_cast<std::size_t>(a) * language_.size() + b];
  }
  std::uint32_t all_colors_mask() const {
    return (language_.size() >= 32) ? ~0u : ((1u << language_.size()) - 1u);
  }

  bool operator==(const TriangleSet& o) const {
    return language_ == o.language_ && triangles_ == o.triangles_;
  }

 private:
  ColorLanguage language_;
  std::vector<Triangle> triangles_;
  std::vector<std::uint32_t> blocked_;
};

// A finite complete edge-colored graph: every unordered pair of distinct
// vertices carries exactly one color. Stored as a colex-ordered lower
// triangle; edge (i, j) with i < j lives at index j*(j-1)/2 + i.
class CompleteStructure {
 public:
  CompleteStructure() = default;
  explicit CompleteStructure(int n, Color fill = kNoColor)
      : n_(n), colors_(static_cast<std::size_t>(n) * (n - 1) / 2, fill) {
    if (n < 0) throw InputError("negative vertex count");
  }

  static std::size_t edge_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
  }

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return colors_.size(); }

  Color color(int i, int j) const {
    check_pair(i, j);
    return colors_[edge_index(i, j)];
  }
  void set_color(int i, int j, Color c) {
    check_pair(i, j);
    colors_[edge_index(i, j)] = c;
  }

  // True when every edge carries a color.
  bool complete() const {
    return std::find(colors_.begin(), colors_.end(), kNoColor) == colors_.end();
  }

  // Substructure induced by the given vertices, renumbered 0..k-1 in the
  // order listed (duplicates rejected).
  CompleteStructure induced(const std::vector<int>& vertices) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] < 0 || vertices[i] >= n_)
        throw InputError("induced substructure: vertex out of range");
      for (std::size_t j = i + 1; j < vertices.size(); ++j)
        if (vertices[i] == vertices[j])
          throw InputError("induced substructure: repeated vertex");
    }
    CompleteStructure sub(static_cast<int>(vertices.size()));
    for (std::size_t j = 1; j < vertices.size(); ++j)
      for (std::size_t i = 0; i < j; ++i)
        sub.set_color(static_cast<int>(i), static_cast<int>(j),
                      color(vertices[i], vertices[j]));
    return sub;
  }

  const std::vector<Color>& raw() const { return colors_; }

  bool operator==(const CompleteStructure& o) const {
    return n_ == o.n_ && colors_ == o.colors_;
  }

 private:
  void check_pair(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
      throw InputError("edge endpoints out of range or equal");
  }

  int n_ = 0;
  std::vector<Color> colors_;
};

// A forbidden triangle realized inside a structure.
struct Violation {
  std::array<int, 3> vertices;  // ascending
  Triangle triangle;

  bool operator==(const Violation&) const = default;
};

// All forbidden triangles realized in m, in lexicographic vertex order.
// Colors outside the triangle set's alphabet are an input error; missing
// colors (incomplete structures) are reported against every triple touched.
inline std::vector<Violation> validate_structure(const CompleteStructure& m,
                                                 const TriangleSet& ts) {
  const int n = m.vertex_count();
  const int nc = ts.language().size();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      Color c = m.color(i, j);
      if (c == kNoColor)
        throw InputError("structure is incomplete: edge (" + std::to_string(i) +
                         ", " + std::to_string(j) + ") has no color");
      if (c >= nc)
        throw InputError("structure uses a color outside the alphabet");
    }
  std::vector<Violation> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Color a = m.color(i, j), b = m.color(i, k), c = m.color(j, k);
        if ((ts.blocked_mask(a, b) >> c) & 1u)
          out.push_back(Violation{{i, j, k}, Triangle::make(a, b, c)});
      }
  return out;
}

inline bool is_valid(const CompleteStructure& m, const TriangleSet& ts) {
  const int n = m.vertex_count();
  const int nc = ts.language().size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Color a = m.color(i, j);
      if (a == kNoColor || a >= nc)
        throw InputError("structure is incomplete or uses a color outside the alphabet");
      for (int k = j + 1; k < n; ++k)
        if ((ts.blocked_mask(a, m.color(i, k)) >> m.color(j, k)) & 1u) return false;
    }
  return true;
}

// Color-preserving isomorphism test with optional pinned vertex pairs
// (first ∈ m1, second ∈ m2). Pins must be injective.
inline bool structure_isomorphic(const CompleteStructure& m1, const CompleteStructure& m2,
                                 const std::vector<std::pair<int, int>>& pinned = {}) {
  const int n = m1.vertex_count();
  if (n != m2.vertex_count()) return false;
  std::vector<int> map(n, -1), used(n, 0);
  for (auto [a, b] : pinned) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw InputError("pinned vertex out of range");
    if ((map[a] != -1 && map[a] != b) || (map[a] == -1 && used[b]))
      throw InputError("pinned pairs are not injective");
    map[a] = b;
    used[b] = 1;
  }
  // Pinned edges must already agree.
  for (auto [a, b] : pinned)
    for (int x = 0; x < n; ++x)
      if (x != a && map[x] != -1 && m1.color(a, x) != m2.color(b, map[x])) return false;

  std::vector<int> free_vertices;
  for (int v = 0; v < n; ++v)
    if (map[v] == -1) free_vertices.push_back(v);

  auto extend = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == free_vertices.size()) return true;
    const int v = free_vertices[idx];
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        if (x != v && map[x] != -1 && m1.color(v, x) != m2.color(w, map[x])) ok = false;
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, idx + 1)) return true;
      map[v] = -1;
      used[w] = 0;
    }
    return false;
  };
  return extend(extend, 0);
}

// The colors from vertex a to each base vertex, in base order.
// a must lie outside the base.
inline std::vector<Color> type_vector(const CompleteStructure& m, int a,
                                      const std::vector<int>& base) {
  if (a < 0 || a >= m.vertex_count()) throw InputError("type vector: vertex out of range");
  std::vector<Color> out;
  out.reserve(base.size());
  for (int b : base) {
    if (b == a) throw InputError("type vector: vertex lies inside the base");
    out.push_back(m.color(a, b));
  }
  return out;
}

}  // namespace amalgam

#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "amalgam/completion.hpp"
#include "amalgam/core.hpp"

namespace amalgam {
namespace detail {

struct Line {
  int number;
  std::string text;  // comment-stripped, trimmed
};

inline std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                          : eol - pos);
    ++number;
    std::string line(raw.substr(0, raw.find('#')));
    std::size_t b = line.find_first_not_of(" \t\r");
    std::size_t e = line.find_last_not_of(" \t\r");
    if (b != std::string::npos) out.push_back(Line{number, line.substr(b, e - b + 1)});
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

inline std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline int parse_int(const std::string& tok, int line, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (...) {
    throw InputError(line, std::string("expected ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size())
    throw InputError(line, std::string("expected ") + what + ", got '" + tok + "'");
  return v;
}

// Split a run-together triangle word like "GYX" into color names.
inline bool decompose_word(const ColorLanguage& lang, std::string_view word,
                           std::vector<Color>& out) {
  if (out.size() == 3) return word.empty();
  if (word.empty()) return false;
  for (int c = 0; c < lang.size(); ++c) {
    const std::string& name = lang.name(static_cast<Color>(c));
    if (word.substr(0, name.size()) == name) {
      out.push_back(static_cast<Color>(c));
      if (decompose_word(lang, word.substr(name.size()), out)) return true;
      out.pop_back();
    }
  }
  return false;
}

inline Triangle parse_triangle_line(const ColorLanguage& lang, const std::vector<std::string>& toks,
                                    int line) {
  std::vector<Color> cs;
  if (toks.size() == 3) {
    for (const auto& t : toks) cs.push_back(lang.require(t, line));
  } else if (toks.size() == 1) {
    if (!decompose_word(lang, toks[0], cs))
      throw InputError(line, "cannot read '" + toks[0] + "' as a triple of colors");
  } else {
    throw InputError(line, "a triangle line must hold one word or three colors");
  }
  return Triangle::make(cs[0], cs[1], cs[2]);
}

}  // namespace detail

struct ParsedConstraints {
  ColorLanguage language;
  TriangleSet set;
  bool has_solutions = false;  // whether the file declared a solution set
};

// Constraint file: `colors:` line, optional `solutions:` and `order:` lines,
// then one forbidden triangle per line (any permutation of the colors).
// When `order:` is absent the solution colors rank in their listed order.
inline ParsedConstraints parse_constraints(std::string_view text) {
  std::optional<std::vector<std::string>> colors;
  std::optional<std::vector<std::string>> solutions;
  std::optional<std::vector<std::string>> order;
  int colors_line = 0;
  std::vector<std::pair<int, std::vector<std::string>>> triangle_lines;

  for (const auto& ln : detail::significant_lines(text)) {
    auto toks = detail::tokens(ln.text);
    if (toks.empty()) continue;
    std::string head = toks[0];
    if (head.back() == ':') head.pop_back();
    if (head == "colors") {
      if (colors) throw InputError(ln.number, "duplicate colors line");
      colors = std::vector<std::string>(toks.begin() + 1, toks.end());
      colors_line = ln.number;
    } else if (head == "solutions") {
      if (solutions) throw InputError(ln.number, "duplicate solutions line");
      solutions = std::vector<std::string>(toks.begin() + 1, toks.end());
      if (solutions->empty()) throw InputError(ln.number, "solutions line lists no colors");
    } else if (head == "order") {
      if (order) throw InputError(ln.number, "duplicate order line");
      std::string joined;
      for (std::size_t i = 1; i < toks.size(); ++i) joined += toks[i];
      order = std::vector<std::string>();
      std::size_t pos = 0;
      while (pos <= joined.size()) {
        std::size_t gt = joined.find('>', pos);
        std::string part = joined.substr(pos, gt == std::string::npos ? std::string::npos : gt - pos);
        if (part.empty()) throw InputError(ln.number, "malformed order line");
        order->push_back(part);
        if (gt == std::string::npos) break;
        pos = gt + 1;
      }
    } else {
      triangle_lines.emplace_back(ln.number, toks);
    }
  }

  if (!colors) throw InputError("missing colors line");
  if (colors->size() < 2) throw InputError(colors_line, "need at least two colors");

  ParsedConstraints out{ColorLanguage::make(*colors, {(*colors)[0]}, {(*colors)[0]}),
                        TriangleSet{}, false};
  if (solutions) {
    out.language = ColorLanguage::make(*colors, *solutions, order ? *order : *solutions);
    out.has_solutions = true;
  } else if (order) {
    throw InputError("order line given without a solutions line");
  }

  std::vector<Triangle> tris;
  for (const auto& [line, toks] : triangle_lines)
    tris.push_back(detail::parse_triangle_line(out.language, toks, line));
  out.set = TriangleSet::make(out.language, std::move(tris));
  return out;
}

inline std::string write_constraints(const ColorLanguage& lang, const TriangleSet& ts,
                                     bool include_solutions = true) {
  std::string out = "colors:";
  for (const auto& n : lang.names()) out += " " + n;
  out += "\n";
  if (include_solutions) {
    out += "solutions:";
    for (Color c : lang.solution_set()) out += " " + lang.name(c);
    out += "\norder: ";
    for (std::size_t i = 0; i < lang.priority().size(); ++i) {
      if (i) out += " > ";
      out += lang.name(lang.priority()[i]);
    }
    out += "\n";
  }
  for (const auto& t : ts.triangles()) out += triangle_name(t, lang) + "\n";
  return out;
}

namespace detail {

// Reads `count` edge lines `i j COLOR` into m (vertices `offset`-checked by
// caller-provided n). Every edge must appear exactly once with i < j.
inline void parse_edge_block(const std::vector<Line>& lines, std::size_t& idx, int n,
                             const ColorLanguage& lang, CompleteStructure& m,
                             std::vector<int>* edge_lines = nullptr) {
  const std::size_t need = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<int> seen(need, 0);
  for (std::size_t e = 0; e < need; ++e) {
    if (idx >= lines.size())
      throw InputError("unexpected end of input: expected " + std::to_string(need) +
                       " edge lines, got " + std::to_string(e));
    const auto& ln = lines[idx++];
    auto toks = tokens(ln.text);
    if (toks.size() != 3)
      throw InputError(ln.number, "expected 'i j COLOR', got '" + ln.text + "'");
    int i = parse_int(toks[0], ln.number, "a vertex index");
    int j = parse_int(toks[1], ln.number, "a vertex index");
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw InputError(ln.number, "vertex index out of range (structure has " +
                                      std::to_string(n) + " vertices)");
    if (i >= j) throw InputError(ln.number, "edges must be written with i < j");
    std::size_t k = CompleteStructure::edge_index(i, j);
    if (seen[k]) throw InputError(ln.number, "duplicate edge (" + std::to_string(i) + ", " +
                                                 std::to_string(j) + ")");
    seen[k] = 1;
    m.set_color(i, j, lang.require(toks[2], ln.number));
    if (edge_lines) (*edge_lines)[k] = ln.number;
  }
}

}  // namespace detail

// Structure file: first line the vertex count, then n(n-1)/2 lines `i j COLOR`.
inline CompleteStructure parse_structure(std::string_view text, const ColorLanguage& lang) {
  auto lines = detail::significant_lines(text);
  if (lines.empty()) throw InputError("empty structure file");
  auto head = detail::tokens(lines[0].text);
  if (head.size() != 1)
    throw InputError(lines[0].number, "the first line must hold the vertex count alone");
  int n = detail::parse_int(head[0], lines[0].number, "a vertex count");
  if (n < 1) throw InputError(lines[0].number, "vertex count must be positive");
  CompleteStructure m(n);
  std::size_t idx = 1;
  detail::parse_edge_block(lines, idx, n, lang, m);
  if (idx != lines.size())
    throw InputError(lines[idx].number, "trailing content after the last edge");
  return m;
}

inline std::string write_structure(const CompleteStructure& m, const ColorLanguage& lang) {
  std::string out = std::to_string(m.vertex_count()) + "\n";
  for (int i = 0; i < m.vertex_count(); ++i)
    for (int j = i + 1; j < m.vertex_count(); ++j) {
      Color c = m.color(i, j);
      if (c == kNoColor)
        throw InputError("cannot serialize an incomplete structure");
      out += std::to_string(i) + " " + std::to_string(j) + " " + lang.name(c) + "\n";
    }
  return out;
}

// Instance file: `base: k`, `left: nA` with nA(nA-1)/2 edge lines, then
// `right: nC` with its edges. Vertices 0..k-1 are the shared base and the
// two blocks must agree on it.
inline AmalgamationInstance parse_instance(std::string_view text, const ColorLanguage& lang) {
  auto lines = detail::significant_lines(text);
  std::size_t idx = 0;
  auto expect_header = [&](const char* key) -> int {
    if (idx >= lines.size())
      throw InputError(std::string("unexpected end of input: expected '") + key + ":' line");
    const auto& ln = lines[idx];
    auto toks = detail::tokens(ln.text);
    std::string head = toks.empty() ? "" : toks[0];
    if (!head.empty() && head.back() == ':') head.pop_back();
    if (head != key || toks.size() != 2)
      throw InputError(ln.number, std::string("expected '") + key + ": <count>', got '" +
                                      ln.text + "'");
    ++idx;
    return detail::parse_int(toks[1], ln.number, "a count");
  };

  int base = expect_header("base");
  if (base < 0) throw InputError("negative base size");
  int nl = expect_header("left");
  if (nl < 1) throw InputError("left block must have at least one vertex");
  CompleteStructure left(nl);
  detail::parse_edge_block(lines, idx, nl, lang, left);
  int nr = expect_header("right");
  if (nr < 1) throw InputError("right block must have at least one vertex");
  CompleteStructure right(nr);
  std::vector<int> right_lines(static_cast<std::size_t>(nr) * (nr - 1) / 2, 0);
  detail::parse_edge_block(lines, idx, nr, lang, right, &right_lines);
  if (idx != lines.size())
    throw InputError(lines[idx].number, "trailing content after the right block");

  if (base >= nl || base >= nr)
    throw InputError("each side must properly extend the base");
  for (int j = 1; j < base; ++j)
    for (int i = 0; i < j; ++i)
      if (left.color(i, j) != right.color(i, j))
        throw InputError(right_lines[CompleteStructure::edge_index(i, j)],
                         "left and right blocks disagree on base edge (" + std::to_string(i) +
                             ", " + std::to_string(j) + ")");
  return AmalgamationInstance::make(base, std::move(left), std::move(right));
}

inline std::string write_instance(const AmalgamationInstance& inst, const ColorLanguage& lang) {
  std::string out = "base: " + std::to_string(inst.base_size) + "\n";
  auto block = [&](const char* key, const CompleteStructure& m) {
    out += std::string(key) + ": " + std::to_string(m.vertex_count()) + "\n";
    for (int i = 0; i < m.vertex_count(); ++i)
      for (int j = i + 1; j < m.vertex_count(); ++j)
        out += std::to_string(i) + " " + std::to_string(j) + " " + lang.name(m.color(i, j)) + "\n";
  };
  block("left", inst.left);
  block("right", inst.right);
  return out;
}

}  // namespace amalgam

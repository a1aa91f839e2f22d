#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amalgam/closure.hpp"
#include "amalgam/conditions.hpp"
#include "amalgam/core.hpp"
#include "amalgam/independence.hpp"
#include "amalgam/io.hpp"
#include "amalgam/solutions.hpp"

namespace amalgam {

enum class Classification { condition1, condition2, special26, unclassified };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::condition1: return "condition1";
    case Classification::condition2: return "condition2";
    case Classification::special26: return "special26";
    default: return "unclassified";
  }
}

inline std::optional<Classification> classification_from_string(std::string_view s) {
  for (Classification c : {Classification::condition1, Classification::condition2,
                           Classification::special26})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

struct CatalogueEntry {
  std::string id;
  ColorLanguage language;  // alphabet, solution set and published order
  TriangleSet triangles;
  Classification expected = Classification::unclassified;
  std::optional<Condition2Params> expected_params;
  bool order_independent = false;  // first-certificate entries close under every order
};

// The 28 classified forbidden-triangle systems: one three-color system and
// twenty-seven four-color systems, with their published solution sets,
// priority orders and certificate parameters.
inline std::string_view catalogue_text() {
  static constexpr std::string_view text = R"CAT([3col#1]
classification: condition2
lstar: X
colors: R G X
solutions: R G
order: R > G
RXX
GGX
XXX

[#1]
classification: condition1
colors: R G X Y
solutions: R G
order: R > G
RXX
GYX
YXX

[#2]
classification: condition1
colors: R G X Y
solutions: R G
order: R > G
RXX
GYX
YXX
XXX

[#3]
classification: condition1
colors: R G X Y
solutions: R G
order: R > G
RXX
GYX
YXX
YYX

[#4]
classification: condition1
colors: R G X Y
solutions: R G
order: R > G
RXX
GYX
YXX
YYY

[#5]
classification: condition1
colors: R G X Y
solutions: R G
order: R > G
RXX
GYX
YXX
YYX
XXX

[#6]
classification: condition1
colors: R G X Y
solutions: R G
order: R > G
RXX
GYX
YXX
XXX
YYY

[#7]
classification: condition1
colors: R G X Y
solutions: R G
order: R > G
RXX
GYX
YXX
YYX
YYY

[#8]
classification: condition1
colors: R G X Y
solutions: R G
order: R > G
RXX
GYX
YXX
YYX
YYY
XXX

[#9]
classification: condition1
colors: R G X Y
solutions: R G
order: R > G
RXX
GYX
YYX
XXX

[#10]
classification: condition1
colors: R G X Y
solutions: R G
order: R > G
RXX
GYX
YYX
XXX
YYY

[#11]
classification: condition2
lstar: X
colors: R G X Y
solutions: R G
order: R > G
RXX
GGX
YXX
XXX

[#12]
classification: condition2
lstar: X
colors: R G X Y
solutions: R G
order: R > G
RXX
GGX
YXX
XXX
YYX

[#13]
classification: condition2
lstar: X
colors: R G X Y
solutions: R G
order: R > G
RXX
GGX
YXX
XXX
YYY

[#14]
classification: condition2
lstar: X
colors: R G X Y
solutions: R G
order: R > G
RXX
GGX
YXX
YYX
XXX
YYY

[#15]
classification: condition2
lstar: X
colors: R G X Y
solutions: R G
order: R > G
RXX
GYX
GGX
YXX
XXX

[#16]
classification: condition2
lstar: X
colors: R G X Y
solutions: R G
order: R > G
RXX
GYX
GGX
YXX
XXX
YYX

[#17]
classification: condition2
lstar: X
colors: R G X Y
solutions: R G
order: R > G
RXX
GYX
GGX
YXX
XXX
YYY

[#18]
classification: condition2
lstar: X
colors: R G X Y
solutions: R G
order: R > G
RXX
GYX
GGX
YXX
YYX
XXX
YYY

[#19]
classification: condition2
lstar: X
lhat: Y
colors: R G X Y
solutions: R G
order: R > G
RXX
GYX
GGX
YYX
XXX

[#20]
classification: condition2
lstar: X
lhat: Y
colors: R G X Y
solutions: R G
order: R > G
RXX
GYX
GGX
YYX
XXX
YYY

[#21]
classification: condition1
colors: R G X Y
solutions: R G
order: R > G
RXX
RYY
GYX
YYX
XXX

[#22]
classification: condition1
colors: R G X Y
solutions: R G
order: R > G
RXX
RYY
GYX
YYX
YXX

[#23]
classification: condition1
colors: R G X Y
solutions: R G
order: R > G
RXX
RYY
GYX
YYX
YXX
XXX

[#24]
classification: condition1
colors: R G X Y
solutions: R G
order: R > G
RXX
RYY
GYX
YXX
XXX
YYY

[#25]
classification: condition1
colors: R G X Y
solutions: R G
order: R > G
RXX
RYY
GYX
YXX
YYX
XXX
YYY

[#26]
classification: special26
colors: R G X Y
solutions: R G Y
order: G > R > Y
RRX
RXX
RYY
GYX
GXX
YYX
XXX

[#27]
classification: condition2
lstar: X Y
colors: R G X Y
solutions: R G
order: G > R
RRY
RRX
GYX
GXX
GYY
YYX
YXX
XXX
YYY
)CAT";
  return text;
}

inline std::uint64_t catalogue_checksum() {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : catalogue_text()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::vector<CatalogueEntry> load_catalogue() {
  std::vector<CatalogueEntry> out;
  std::string_view text = catalogue_text();

  std::vector<std::pair<std::string, std::string>> stanzas;  // id, body
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    if (!line.empty() && line.front() == '[') {
      std::size_t close = line.find(']');
      if (close == std::string_view::npos) throw InputError("malformed catalogue header");
      stanzas.emplace_back(std::string(line.substr(1, close - 1)), std::string());
    } else if (!stanzas.empty()) {
      stanzas.back().second.append(line);
      stanzas.back().second.push_back('\n');
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  for (auto& [id, body] : stanzas) {
    std::string classification_token;
    std::vector<std::string> lstar_names, lhat_names;
    std::string constraints;
    std::size_t bpos = 0;
    while (bpos <= body.size()) {
      std::size_t eol = body.find('\n', bpos);
      std::string line = body.substr(bpos, eol == std::string::npos ? std::string::npos
                                                                    : eol - bpos);
      auto toks = detail::tokens(line);
      std::string head = toks.empty() ? "" : toks[0];
      if (!head.empty() && head.back() == ':') head.pop_back();
      if (head == "classification") {
        if (toks.size() != 2) throw InputError("malformed classification line in " + id);
        classification_token = toks[1];
      } else if (head == "lstar") {
        lstar_names.assign(toks.begin() + 1, toks.end());
      } else if (head == "lhat") {
        lhat_names.assign(toks.begin() + 1, toks.end());
      } else {
        constraints += line + "\n";
      }
      if (eol == std::string::npos) break;
      bpos = eol + 1;
    }

    auto parsed = parse_constraints(constraints);
    if (!parsed.has_solutions) throw InputError("catalogue entry " + id + " lacks solutions");
    auto cls = classification_from_string(classification_token);
    if (!cls) throw InputError("catalogue entry " + id + " has no valid classification");

    CatalogueEntry entry{id, parsed.language, parsed.set, *cls, std::nullopt,
                         *cls == Classification::condition1};
    if (*cls == Classification::condition2) {
      Condition2Params params;
      for (const auto& n : lstar_names) params.l_star.push_back(parsed.language.require(n));
      for (const auto& n : lhat_names) params.l_hat.push_back(parsed.language.require(n));
      std::sort(params.l_star.begin(), params.l_star.end());
      std::sort(params.l_hat.begin(), params.l_hat.end());
      entry.expected_params = std::move(params);
    }
    out.push_back(std::move(entry));
  }
  if (out.size() != 28) throw InputError("catalogue must hold exactly 28 entries");
  return out;
}

inline CatalogueEntry catalogue_entry(std::string_view id) {
  for (auto& e : load_catalogue())
    if (e.id == id) return e;
  throw InputError("unknown catalogue entry '" + std::string(id) + "'");
}

struct ClassificationOptions {
  int deletion_max_size = 4;  // classification only needs the minimal witness scale
  bool force_search = false;  // run the closure search even when certified
};

struct ClassificationReport {
  std::string id;
  Classification expected = Classification::unclassified;
  Classification computed = Classification::unclassified;
  bool matches = false;
  bool condition1_holds = false;
  std::optional<Condition2Params> condition2_params;
  bool maincond_i_holds = false;
  ClosureVerdict closure;
  SolutionAnalysis solutions;
  DeletionReport deletion_one;
  DeletionReport deletion_two;
};

// Recompute everything the published table asserts about one entry: the
// certificates, the closure verdict under the published order, the forced
// colors and minimal solution sets, and the deletion behavior.
inline ClassificationReport classify_entry(const CatalogueEntry& e, int bound,
                                           const ClassificationOptions& opts = {}) {
  ClassificationReport r;
  r.id = e.id;
  r.expected = e.expected;

  const auto& lang = e.language;
  const auto& ts = e.triangles;
  r.condition1_holds = check_condition1(ts, lang);
  if (lang.priority().size() == 2) r.condition2_params = find_condition2_params(ts, lang);
  r.maincond_i_holds = check_maincond_i(ts, lang);
  r.closure = check_closure(ts, lang, bound, opts.force_search);
  r.solutions = find_solution_sets(ts, bound);

  CanonicalStructures pool{ts};
  r.deletion_one =
      check_deletion(ts, lang, DeletionVariant::one_sided, opts.deletion_max_size, &pool);
  r.deletion_two =
      check_deletion(ts, lang, DeletionVariant::two_sided, opts.deletion_max_size, &pool);

  std::uint32_t forced_mask = 0;
  for (const auto& w : r.solutions.forced) forced_mask |= 1u << w.color;

  if (r.condition1_holds)
    r.computed = Classification::condition1;
  else if (r.condition2_params)
    r.computed = Classification::condition2;
  else if (r.closure.status == ClosureStatus::no_counterexample_up_to_bound &&
           forced_mask == lang.solution_mask())
    r.computed = Classification::special26;

  bool ok = r.computed == e.expected && r.maincond_i_holds;
  if (e.expected == Classification::condition2)
    ok = ok && r.condition2_params && e.expected_params &&
         *r.condition2_params == *e.expected_params;
  // The published solution set and order must come out of the search.
  {
    bool found = false;
    for (const auto& cand : r.solutions.minimal_sets)
      if (cand.colors == lang.solution_set())
        for (const auto& ov : cand.passing_orders)
          if (ov.order == lang.priority()) found = true;
    ok = ok && found;
  }
  // Deletion: certificate entries delete one-sidedly; the special entry
  // fails one-sidedly and recovers under the two-sided hypothesis.
  if (e.expected == Classification::special26)
    ok = ok && r.deletion_one.violation_count > 0 && r.deletion_two.violation_count == 0;
  else
    ok = ok && r.deletion_one.violation_count == 0;
  r.matches = ok;
  return r;
}

struct TableReport {
  std::vector<ClassificationReport> reports;
  int matched = 0;
  bool all_match = false;
};

inline TableReport verify_table(int bound, const ClassificationOptions& opts = {}) {
  TableReport out;
  for (const auto& e : load_catalogue()) {
    out.reports.push_back(classify_entry(e, bound, opts));
    if (out.reports.back().matches) ++out.matched;
  }
  out.all_match = out.matched == static_cast<int>(out.reports.size());
  return out;
}

}  // namespace amalgam

#pragma once

#include <string>

#include "json.hpp"

#include "amalgam/catalogue.hpp"
#include "amalgam/closure.hpp"
#include "amalgam/completion.hpp"
#include "amalgam/core.hpp"
#include "amalgam/generic.hpp"
#include "amalgam/independence.hpp"
#include "amalgam/io.hpp"
#include "amalgam/solutions.hpp"

namespace amalgam {

using Json = nlohmann::ordered_json;

inline Json json_color(Color c, const ColorLanguage& lang) {
  if (c == kNoColor) return nullptr;
  return lang.name(c);
}

inline Json json_color_list(const std::vector<Color>& cs, const ColorLanguage& lang) {
  Json arr = Json::array();
  for (Color c : cs) arr.push_back(json_color(c, lang));
  return arr;
}

inline Json json_structure(const CompleteStructure& m, const ColorLanguage& lang) {
  Json j;
  j["vertex_count"] = m.vertex_count();
  j["text"] = write_structure(m, lang);
  return j;
}

inline Json json_instance(const AmalgamationInstance& inst, const ColorLanguage& lang) {
  Json j;
  j["base_size"] = inst.base_size;
  j["left_size"] = inst.left.vertex_count();
  j["right_size"] = inst.right.vertex_count();
  j["text"] = write_instance(inst, lang);
  return j;
}

inline Json json_profile(const std::vector<ProfilePair>& profile, const ColorLanguage& lang) {
  Json arr = Json::array();
  for (const auto& p : profile)
    arr.push_back(Json::array({json_color(p.a_side, lang), json_color(p.c_side, lang)}));
  return arr;
}

inline Json json_violations(const std::vector<Violation>& vs, const ColorLanguage& lang) {
  Json arr = Json::array();
  for (const auto& v : vs) {
    Json j;
    j["vertices"] = Json::array({v.vertices[0], v.vertices[1], v.vertices[2]});
    j["triangle"] = triangle_name(v.triangle, lang);
    arr.push_back(std::move(j));
  }
  return arr;
}

inline Json json_completion(const CompletionResult& res, const ColorLanguage& lang) {
  Json j;
  j["clean"] = res.clean();
  Json cross = Json::array();
  for (const auto& e : res.cross_colors)
    cross.push_back(Json::array({e.a, e.c, json_color(e.color, lang)}));
  j["cross_colors"] = std::move(cross);
  j["violations"] = json_violations(res.violations, lang);
  Json failed = Json::array();
  for (const auto& f : res.failed_edges) {
    Json jf;
    jf["a"] = f.a;
    jf["c"] = f.c;
    jf["profile"] = json_profile(f.profile, lang);
    failed.push_back(std::move(jf));
  }
  j["failed_edges"] = std::move(failed);
  if (res.clean()) j["structure"] = json_structure(res.completed, lang);
  return j;
}

inline Json json_condition2_params(const Condition2Params& p, const ColorLanguage& lang) {
  Json j;
  j["lstar"] = json_color_list(p.l_star, lang);
  j["lhat"] = json_color_list(p.l_hat, lang);
  return j;
}

inline Json json_closure(const ClosureVerdict& v, const ColorLanguage& lang) {
  Json j;
  j["status"] = to_string(v.status);
  if (v.certificate) {
    Json c;
    c["condition"] = v.certificate->condition;
    if (v.certificate->condition == 2)
      c["params"] = json_condition2_params(v.certificate->params, lang);
    j["certificate"] = std::move(c);
  } else {
    j["certificate"] = nullptr;
  }
  if (v.witness) {
    Json w;
    w["instance"] = json_instance(v.witness->instance, lang);
    w["completion"] = json_completion(v.witness->completion, lang);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["search_ran"] = v.search_ran;
  j["bound_used"] = v.bound_used;
  return j;
}

inline Json json_solution_analysis(const SolutionAnalysis& a, const ColorLanguage& lang) {
  Json j;
  Json forced = Json::array();
  for (const auto& w : a.forced) {
    Json jw;
    jw["color"] = json_color(w.color, lang);
    jw["instance"] = json_instance(w.instance, lang);
    jw["profile"] = json_profile(w.profile, lang);
    forced.push_back(std::move(jw));
  }
  j["forced"] = std::move(forced);
  Json sets = Json::array();
  for (const auto& cand : a.minimal_sets) {
    Json jc;
    jc["colors"] = json_color_list(cand.colors, lang);
    Json orders = Json::array();
    for (const auto& ov : cand.passing_orders) {
      Json jo;
      jo["order"] = json_color_list(ov.order, lang);
      jo["status"] = to_string(ov.status);
      if (ov.certificate) {
        Json c;
        c["condition"] = ov.certificate->condition;
        if (ov.certificate->condition == 2)
          c["params"] = json_condition2_params(ov.certificate->params, lang);
        jo["certificate"] = std::move(c);
      } else {
        jo["certificate"] = nullptr;
      }
      orders.push_back(std::move(jo));
    }
    jc["passing_orders"] = std::move(orders);
    sets.push_back(std::move(jc));
  }
  j["minimal_sets"] = std::move(sets);
  return j;
}

inline Json json_axiom_report(const AxiomReport& r, const ColorLanguage& lang) {
  Json j;
  j["axiom"] = to_string(r.axiom);
  j["instances_checked"] = r.instances_checked;
  j["violation_count"] = r.violation_count;
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    Json jv;
    jv["ambient"] = json_structure(v.ambient, lang);
    jv["a"] = v.a;
    jv["b"] = v.b;
    jv["c"] = v.c;
    jv["d"] = v.d;
    jv["detail"] = v.detail;
    vs.push_back(std::move(jv));
  }
  j["violations"] = std::move(vs);
  return j;
}

inline Json json_deletion_report(const DeletionReport& r, const ColorLanguage& lang) {
  Json j;
  j["variant"] = to_string(r.variant);
  j["instances_checked"] = r.instances_checked;
  j["violation_count"] = r.violation_count;
  j["minimal_witness_size"] =
      r.minimal_witness_size ? Json(*r.minimal_witness_size) : Json(nullptr);
  Json ws = Json::array();
  for (const auto& w : r.minimal_witnesses) {
    Json jw;
    jw["ambient"] = json_structure(w.ambient, lang);
    jw["a"] = w.a;
    jw["b"] = w.b;
    jw["c"] = w.c;
    jw["retained"] = w.retained;
    ws.push_back(std::move(jw));
  }
  j["minimal_witnesses"] = std::move(ws);
  return j;
}

inline Json json_generic(const GenericApproximation& g, const ColorLanguage& lang) {
  Json j;
  j["t"] = g.t;
  j["seed"] = g.seed;
  j["vertex_count"] = g.structure.vertex_count();
  j["extensions_performed"] = g.log.size();
  j["structure"] = json_structure(g.structure, lang);
  return j;
}

inline Json json_build_failure(const BuildFailureWitness& w, const ColorLanguage& lang) {
  Json j;
  j["encountered"] = json_instance(w.encountered, lang);
  j["profile"] = json_profile(w.profile, lang);
  if (w.minimal) {
    j["minimal"] = json_instance(*w.minimal, lang);
    j["minimal_profile"] = json_profile(w.minimal_profile, lang);
  } else {
    j["minimal"] = nullptr;
    j["minimal_profile"] = nullptr;
  }
  return j;
}

inline Json json_classification(const ClassificationReport& r, const ColorLanguage& lang) {
  Json j;
  j["id"] = r.id;
  j["expected"] = to_string(r.expected);
  j["computed"] = to_string(r.computed);
  j["matches"] = r.matches;
  j["condition1_holds"] = r.condition1_holds;
  j["condition2_params"] =
      r.condition2_params ? json_condition2_params(*r.condition2_params, lang) : Json(nullptr);
  j["maincond_i_holds"] = r.maincond_i_holds;
  j["closure"] = json_closure(r.closure, lang);
  j["solutions"] = json_solution_analysis(r.solutions, lang);
  j["deletion_one_sided"] = json_deletion_report(r.deletion_one, lang);
  j["deletion_two_sided"] = json_deletion_report(r.deletion_two, lang);
  return j;
}

inline Json json_table(const TableReport& t, const std::vector<CatalogueEntry>& entries) {
  Json j;
  j["total"] = t.reports.size();
  j["matched"] = t.matched;
  j["all_match"] = t.all_match;
  Json arr = Json::array();
  for (std::size_t i = 0; i < t.reports.size(); ++i)
    arr.push_back(json_classification(t.reports[i], entries[i].language));
  j["entries"] = std::move(arr);
  return j;
}

}  // namespace amalgam

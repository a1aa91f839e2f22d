#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "amalgam/catalogue.hpp"
#include "amalgam/generic.hpp"
#include "amalgam/independence.hpp"
#include "amalgam/report.hpp"

namespace {

using namespace amalgam;

constexpr int kPass = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Accepts "G>R>Y", "G,R,Y" or "G R Y".
std::vector<std::string> split_colors(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == '>' || ch == ',' || ch == ' ' || ch == '\t') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string join_colors(const std::vector<Color>& cs, const ColorLanguage& lang,
                        const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out += sep;
    out += lang.name(cs[i]);
  }
  return out;
}

// The problem a subcommand runs against: either a catalogue entry or a
// constraint file, with optional solution-set / priority-order overrides.
struct ProblemConfig {
  std::string entry;
  std::string constraints_path;
  std::string solutions;
  std::string order;
};

struct Problem {
  std::string label;
  ColorLanguage language;
  TriangleSet triangles;
};

Problem resolve_problem(const ProblemConfig& cfg) {
  if (cfg.entry.empty() == cfg.constraints_path.empty())
    throw InputError("exactly one of --entry and --constraints is required");
  Problem p;
  if (!cfg.entry.empty()) {
    auto e = catalogue_entry(cfg.entry);
    p.label = e.id;
    p.language = e.language;
    p.triangles = e.triangles;
  } else {
    auto parsed = parse_constraints(read_file(cfg.constraints_path));
    p.label = cfg.constraints_path;
    p.language = parsed.language;
    p.triangles = parsed.set;
  }
  if (!cfg.solutions.empty()) {
    auto sols = split_colors(cfg.solutions);
    auto pri = cfg.order.empty() ? sols : split_colors(cfg.order);
    p.language = p.language.with_solutions(sols, pri);
  } else if (!cfg.order.empty()) {
    std::vector<Color> ord;
    for (const auto& name : split_colors(cfg.order)) {
      Color c = p.language.require(name);
      if (!p.language.is_solution(c))
        throw InputError("--order mentions non-solution color '" + name +
                         "' (use --solutions to change the set)");
      ord.push_back(c);
    }
    p.language = p.language.with_priority(ord);
  }
  return p;
}

void add_problem_options(CLI::App* sub, ProblemConfig& cfg) {
  sub->add_option("--entry", cfg.entry, "catalogue entry id, e.g. \"#11\"");
  sub->add_option("--constraints", cfg.constraints_path, "constraint file path");
  sub->add_option("--solutions", cfg.solutions,
                  "override the solution set, e.g. \"R,G\" (listed order = priority)");
  sub->add_option("--order", cfg.order, "override the priority order, e.g. \"G>R\"");
}

struct OutputConfig {
  std::string format = "text";
  std::string path;
};

void add_output_options(CLI::App* sub, OutputConfig& cfg) {
  sub->add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--output", cfg.path, "write the report to this file instead of stdout");
}

// Reports carry both renderings; emit() picks one. JSON output is wrapped
// in a versioned envelope and is byte-stable for identical configurations.
void emit(const OutputConfig& out, const std::string& command, const Json& config,
          const Json& result, const std::string& text) {
  std::string payload;
  if (out.format == "json") {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    j["config"] = config;
    j["result"] = result;
    payload = j.dump(2) + "\n";
  } else {
    payload = text;
  }
  if (!out.path.empty()) {
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw InputError("cannot write file '" + out.path + "'");
    f << payload;
  } else {
    std::fputs(payload.c_str(), stdout);
  }
}

Json problem_config_json(const Problem& p) {
  Json j;
  j["input"] = p.label;
  j["solutions"] = json_color_list(p.language.solution_set(), p.language);
  j["order"] = json_color_list(p.language.priority(), p.language);
  return j;
}

std::string describe_instance(const AmalgamationInstance& inst, const ColorLanguage& lang) {
  return write_instance(inst, lang);
}

int cmd_validate(const std::string& structure_path, const std::string& constraints_path,
                 const OutputConfig& out) {
  auto parsed = parse_constraints(read_file(constraints_path));
  auto m = parse_structure(read_file(structure_path), parsed.language);
  auto vs = validate_structure(m, parsed.set);

  Json config;
  config["structure"] = structure_path;
  config["constraints"] = constraints_path;
  Json result;
  result["vertex_count"] = m.vertex_count();
  result["violation_count"] = vs.size();
  result["violations"] = json_violations(vs, parsed.language);

  std::ostringstream text;
  text << "structure: " << m.vertex_count() << " vertices\n";
  if (vs.empty()) {
    text << "valid: no forbidden triangle realized\n";
  } else {
    text << "violations: " << vs.size() << "\n";
    for (const auto& v : vs)
      text << "  (" << v.vertices[0] << ", " << v.vertices[1] << ", " << v.vertices[2] << ") "
           << triangle_name(v.triangle, parsed.language) << "\n";
  }
  emit(out, "validate", config, result, text.str());
  return vs.empty() ? kPass : kNegative;
}

int cmd_amalgamate(const std::string& instance_path, const ProblemConfig& pc,
                   const OutputConfig& out) {
  auto p = resolve_problem(pc);
  auto inst = parse_instance(read_file(instance_path), p.language);
  auto res = amalgamate(inst, p.language, p.triangles);

  Json config = problem_config_json(p);
  config["instance"] = instance_path;
  Json result = json_completion(res, p.language);

  std::ostringstream text;
  text << "base size " << inst.base_size << ", left " << inst.left.vertex_count() << ", right "
       << inst.right.vertex_count() << "\n";
  text << "completed:\n" << write_structure(res.completed, p.language);
  if (!res.failed_edges.empty()) {
    text << "failed edges: " << res.failed_edges.size() << "\n";
    for (const auto& fe : res.failed_edges) {
      text << "  (" << fe.a << ", " << fe.c << ") profile";
      for (const auto& pp : fe.profile)
        text << " (" << p.language.name(pp.a_side) << "," << p.language.name(pp.c_side) << ")";
      text << "\n";
    }
  }
  if (!res.violations.empty()) {
    text << "violations: " << res.violations.size() << "\n";
    for (const auto& v : res.violations)
      text << "  (" << v.vertices[0] << ", " << v.vertices[1] << ", " << v.vertices[2] << ") "
           << triangle_name(v.triangle, p.language) << "\n";
  }
  if (res.clean()) text << "clean completion\n";
  emit(out, "amalgamate", config, result, text.str());
  return res.clean() ? kPass : kNegative;
}

int cmd_check_closure(const ProblemConfig& pc, int bound, bool force_search,
                      const OutputConfig& out) {
  auto p = resolve_problem(pc);
  auto v = check_closure(p.triangles, p.language, bound, force_search);

  Json config = problem_config_json(p);
  config["bound"] = bound;
  config["force_search"] = force_search;
  Json result = json_closure(v, p.language);

  std::ostringstream text;
  text << "status: " << to_string(v.status) << "\n";
  if (v.certificate) {
    text << "certificate: condition " << v.certificate->condition;
    if (v.certificate->condition == 2)
      text << " (L*=" << join_colors(v.certificate->params.l_star, p.language, ",")
           << " Lhat=" << join_colors(v.certificate->params.l_hat, p.language, ",") << ")";
    text << "\n";
  }
  if (v.search_ran) text << "search bound: " << v.bound_used << "\n";
  if (v.witness) {
    text << "counterexample instance:\n" << describe_instance(v.witness->instance, p.language);
    const auto& comp = v.witness->completion;
    if (!comp.failed_edges.empty())
      text << "failure: " << comp.failed_edges.size() << " cross pair(s) with no solution color\n";
    if (!comp.violations.empty()) {
      text << "failure: completion realizes";
      for (const auto& viol : comp.violations)
        text << " " << triangle_name(viol.triangle, p.language);
      text << "\n";
    }
  }
  emit(out, "check-closure", config, result, text.str());
  return v.status == ClosureStatus::counterexample_found ? kNegative : kPass;
}

int cmd_find_solutions(const ProblemConfig& pc, int bound, const OutputConfig& out) {
  auto p = resolve_problem(pc);
  auto a = find_solution_sets(p.triangles, bound);

  Json config = problem_config_json(p);
  config["bound"] = bound;
  Json result = json_solution_analysis(a, p.language);

  std::ostringstream text;
  text << "forced colors: ";
  if (a.forced.empty()) text << "(none)";
  for (const auto& w : a.forced) text << p.language.name(w.color) << " ";
  text << "\n";
  for (const auto& w : a.forced)
    text << "  " << p.language.name(w.color) << " forced by base size "
         << w.instance.base_size << " instance\n";
  if (a.minimal_sets.empty()) {
    text << "no solution set closes the class at bound " << bound << "\n";
  } else {
    text << "minimal solution sets: " << a.minimal_sets.size() << "\n";
    for (const auto& cand : a.minimal_sets) {
      text << "  {" << join_colors(cand.colors, p.language, ",") << "} orders:";
      for (const auto& ov : cand.passing_orders)
        text << " " << join_colors(ov.order, p.language, ">") << " [" << to_string(ov.status)
             << "]";
      text << "\n";
    }
  }
  emit(out, "find-solutions", config, result, text.str());
  return a.minimal_sets.empty() ? kNegative : kPass;
}

int cmd_check_sir(const ProblemConfig& pc, int max_size, const std::string& axiom_name,
                  const OutputConfig& out) {
  auto p = resolve_problem(pc);
  std::vector<Axiom> axioms;
  if (axiom_name == "all") {
    axioms = {Axiom::monotonicity, Axiom::transitivity, Axiom::symmetry, Axiom::stationarity,
              Axiom::existence};
  } else {
    auto a = axiom_from_string(axiom_name);
    if (!a) throw InputError("unknown axiom '" + axiom_name + "'");
    axioms = {*a};
  }
  AxiomOptions opts;
  opts.max_size = max_size;

  Json config = problem_config_json(p);
  config["max_size"] = max_size;
  config["axiom"] = axiom_name;
  Json reports = Json::array();
  std::ostringstream text;
  std::uint64_t total = 0;
  for (Axiom a : axioms) {
    auto r = check_axiom(a, p.triangles, p.language, opts);
    total += r.violation_count;
    reports.push_back(json_axiom_report(r, p.language));
    text << to_string(a) << ": " << r.instances_checked << " instances, " << r.violation_count
         << " violation(s)\n";
  }
  Json result;
  result["axioms"] = std::move(reports);
  result["total_violations"] = total;
  text << (total == 0 ? "all checked axioms hold\n" : "axiom violations found\n");
  emit(out, "check-sir", config, result, text.str());
  return total == 0 ? kPass : kNegative;
}

int cmd_check_deletion(const ProblemConfig& pc, const std::string& variant, int max_size,
                       const OutputConfig& out) {
  auto p = resolve_problem(pc);
  std::vector<DeletionVariant> variants;
  if (variant == "both")
    variants = {DeletionVariant::one_sided, DeletionVariant::two_sided};
  else if (variant == "one_sided")
    variants = {DeletionVariant::one_sided};
  else if (variant == "two_sided")
    variants = {DeletionVariant::two_sided};
  else
    throw InputError("unknown deletion variant '" + variant + "'");

  Json config = problem_config_json(p);
  config["variant"] = variant;
  config["max_size"] = max_size;
  CanonicalStructures pool{p.triangles};
  Json result;
  std::ostringstream text;
  std::uint64_t total = 0;
  for (DeletionVariant v : variants) {
    auto r = check_deletion(p.triangles, p.language, v, max_size, &pool);
    total += r.violation_count;
    result[to_string(v)] = json_deletion_report(r, p.language);
    text << to_string(v) << ": " << r.instances_checked << " instances, " << r.violation_count
         << " violation(s)";
    if (r.minimal_witness_size) text << ", minimal witness size " << *r.minimal_witness_size;
    text << "\n";
    for (const auto& w : r.minimal_witnesses) {
      text << "  witness a=" << w.a << " b=" << w.b << " c=" << w.c << " retained {";
      for (std::size_t i = 0; i < w.retained.size(); ++i)
        text << (i ? " " : "") << w.retained[i];
      text << "}\n" << write_structure(w.ambient, p.language);
      break;  // first minimal witness is enough for the text view
    }
  }
  emit(out, "check-deletion", config, result, text.str());
  return total == 0 ? kPass : kNegative;
}

int cmd_build_generic(const ProblemConfig& pc, int t, std::uint64_t seed, int max_vertices,
                      const OutputConfig& out) {
  auto p = resolve_problem(pc);
  Json config = problem_config_json(p);
  config["t"] = t;
  config["seed"] = seed;
  config["max_vertices"] = max_vertices;
  BuildOptions opts;
  if (max_vertices > 0) opts.max_vertices = max_vertices;

  try {
    auto g = build_generic(p.triangles, p.language, t, seed, opts);
    auto missing = audit_saturation(g, p.triangles, p.language);
    Json result;
    result["generic"] = json_generic(g, p.language);
    result["audit_missing"] = missing.size();
    // Text form is the serialized approximation itself: it reparses.
    emit(out, "build-generic", config, result, write_generic_file(g, p.language, p.label));
    return missing.empty() ? kPass : kNegative;
  } catch (const BuildError& err) {
    Json result;
    result["error"] = err.what();
    result["witness"] = err.witness ? json_build_failure(*err.witness, p.language) : Json(nullptr);
    std::ostringstream text;
    text << "construction failed: " << err.what() << "\n";
    if (err.witness && err.witness->minimal) {
      text << "least infeasible instance (profile";
      for (const auto& pp : err.witness->minimal_profile)
        text << " (" << p.language.name(pp.a_side) << "," << p.language.name(pp.c_side) << ")";
      text << "):\n" << describe_instance(*err.witness->minimal, p.language);
    }
    emit(out, "build-generic", config, result, text.str());
    return kNegative;
  }
}

void classification_text(std::ostringstream& text, const ClassificationReport& r,
                         const ColorLanguage& lang) {
  text << r.id << ": expected " << to_string(r.expected) << ", computed "
       << to_string(r.computed) << (r.matches ? " MATCH" : " MISMATCH") << "\n";
  text << "  condition1=" << (r.condition1_holds ? "yes" : "no");
  if (r.condition2_params)
    text << " condition2(L*=" << join_colors(r.condition2_params->l_star, lang, ",")
         << " Lhat=" << join_colors(r.condition2_params->l_hat, lang, ",") << ")";
  text << " maincond_i=" << (r.maincond_i_holds ? "yes" : "no") << "\n";
  text << "  closure: " << to_string(r.closure.status) << "\n";
  text << "  deletion: one_sided " << r.deletion_one.violation_count << ", two_sided "
       << r.deletion_two.violation_count << "\n";
}

int cmd_classify(const std::string& entry, int bound, const ClassificationOptions& copts,
                 const OutputConfig& out) {
  auto e = catalogue_entry(entry);
  auto r = classify_entry(e, bound, copts);
  Json config;
  config["entry"] = e.id;
  config["bound"] = bound;
  config["deletion_max_size"] = copts.deletion_max_size;
  config["force_search"] = copts.force_search;
  Json result = json_classification(r, e.language);
  std::ostringstream text;
  classification_text(text, r, e.language);
  emit(out, "classify", config, result, text.str());
  return r.matches ? kPass : kNegative;
}

int cmd_verify_table(int bound, const ClassificationOptions& copts, const OutputConfig& out) {
  auto entries = load_catalogue();
  auto t = verify_table(bound, copts);
  Json config;
  config["bound"] = bound;
  config["deletion_max_size"] = copts.deletion_max_size;
  config["force_search"] = copts.force_search;
  Json result = json_table(t, entries);
  std::ostringstream text;
  for (std::size_t i = 0; i < t.reports.size(); ++i)
    classification_text(text, t.reports[i], entries[i].language);
  text << t.matched << "/" << t.reports.size() << " entries match\n";
  emit(out, "verify-table", config, result, text.str());
  return t.all_match ? kPass : kNegative;
}

int cmd_catalogue_export(const OutputConfig& out) {
  Json config = Json::object();
  Json result;
  result["entry_count"] = load_catalogue().size();
  result["text"] = std::string(catalogue_text());
  emit(out, "catalogue export", config, result, std::string(catalogue_text()));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"checks and builders for prioritised semi-free amalgamation classes"};
  app.require_subcommand(1);

  // validate
  auto* validate = app.add_subcommand("validate", "check a structure against forbidden triangles");
  std::string structure_path, constraints_path;
  validate->add_option("structure", structure_path, "structure file")->required();
  validate->add_option("constraints", constraints_path, "constraint file")->required();
  OutputConfig validate_out;
  add_output_options(validate, validate_out);

  // amalgamate
  auto* amalg = app.add_subcommand("amalgamate", "complete a two-sided instance by priority");
  std::string instance_path;
  amalg->add_option("instance", instance_path, "instance file")->required();
  ProblemConfig amalg_pc;
  OutputConfig amalg_out;
  add_problem_options(amalg, amalg_pc);
  add_output_options(amalg, amalg_out);

  // check-closure
  auto* closure = app.add_subcommand("check-closure", "certify or refute closure under completion");
  ProblemConfig closure_pc;
  OutputConfig closure_out;
  int closure_bound = 3;
  bool closure_force = false;
  add_problem_options(closure, closure_pc);
  add_output_options(closure, closure_out);
  closure->add_option("--bound", closure_bound, "instance base-size ceiling (0..4)");
  closure->add_flag("--force-search", closure_force, "search even when a certificate applies");

  // find-solutions
  auto* solutions = app.add_subcommand("find-solutions", "minimal closing solution sets and orders");
  ProblemConfig solutions_pc;
  OutputConfig solutions_out;
  int solutions_bound = 3;
  add_problem_options(solutions, solutions_pc);
  add_output_options(solutions, solutions_out);
  solutions->add_option("--bound", solutions_bound, "forcing/closure search bound (0..4)");

  // check-sir
  auto* sir = app.add_subcommand("check-sir", "sweep stationary-independence axioms");
  ProblemConfig sir_pc;
  OutputConfig sir_out;
  int sir_max_size = 6;
  std::string sir_axiom = "all";
  add_problem_options(sir, sir_pc);
  add_output_options(sir, sir_out);
  sir->add_option("--max-size", sir_max_size, "ambient structure vertex ceiling (up to 7)");
  sir->add_option("--axiom", sir_axiom,
                  "monotonicity|transitivity|symmetry|stationarity|existence|all");

  // check-deletion
  auto* deletion = app.add_subcommand("check-deletion", "base-point deletion sweeps");
  ProblemConfig deletion_pc;
  OutputConfig deletion_out;
  int deletion_max_size = 6;
  std::string deletion_variant = "both";
  add_problem_options(deletion, deletion_pc);
  add_output_options(deletion, deletion_out);
  deletion->add_option("--max-size", deletion_max_size, "ambient structure vertex ceiling (4..7)");
  deletion->add_option("--variant", deletion_variant, "one_sided|two_sided|both");

  // build-generic
  auto* generic = app.add_subcommand("build-generic", "build a saturated approximation");
  ProblemConfig generic_pc;
  OutputConfig generic_out;
  int generic_t = 1;
  int generic_max_vertices = 0;
  std::uint64_t generic_seed = 0;
  add_problem_options(generic, generic_pc);
  add_output_options(generic, generic_out);
  generic->add_option("--t", generic_t, "saturation level (0..3)");
  generic->add_option("--seed", generic_seed, "random stream seed");
  generic->add_option("--max-vertices", generic_max_vertices, "vertex budget (default 1200)");

  // classify
  auto* classify = app.add_subcommand("classify", "recompute one catalogue entry's published row");
  std::string classify_entry_id;
  OutputConfig classify_out;
  int classify_bound = 3;
  ClassificationOptions classify_opts;
  classify->add_option("--entry", classify_entry_id, "catalogue entry id")->required();
  add_output_options(classify, classify_out);
  classify->add_option("--bound", classify_bound, "closure/forcing search bound (0..4)");
  classify->add_option("--deletion-max-size", classify_opts.deletion_max_size,
                       "deletion sweep ceiling (4..7)");
  classify->add_flag("--force-search", classify_opts.force_search,
                     "run the closure search even when certified");

  // verify-table
  auto* table = app.add_subcommand("verify-table", "recompute all 28 published rows");
  OutputConfig table_out;
  int table_bound = 3;
  ClassificationOptions table_opts;
  add_output_options(table, table_out);
  table->add_option("--bound", table_bound, "closure/forcing search bound (0..4)");
  table->add_option("--deletion-max-size", table_opts.deletion_max_size,
                    "deletion sweep ceiling (4..7)");
  table->add_flag("--force-search", table_opts.force_search,
                  "run the closure search even when certified");

  // catalogue export
  auto* catalogue = app.add_subcommand("catalogue", "embedded catalogue operations");
  catalogue->require_subcommand(1);
  auto* cat_export = catalogue->add_subcommand("export", "dump the 28 entries as constraint stanzas");
  OutputConfig cat_out;
  add_output_options(cat_export, cat_out);

  try {
    app.parse(argc, argv);
    if (validate->parsed()) return cmd_validate(structure_path, constraints_path, validate_out);
    if (amalg->parsed()) return cmd_amalgamate(instance_path, amalg_pc, amalg_out);
    if (closure->parsed())
      return cmd_check_closure(closure_pc, closure_bound, closure_force, closure_out);
    if (solutions->parsed()) return cmd_find_solutions(solutions_pc, solutions_bound, solutions_out);
    if (sir->parsed()) return cmd_check_sir(sir_pc, sir_max_size, sir_axiom, sir_out);
    if (deletion->parsed())
      return cmd_check_deletion(deletion_pc, deletion_variant, deletion_max_size, deletion_out);
    if (generic->parsed())
      return cmd_build_generic(generic_pc, generic_t, generic_seed, generic_max_vertices,
                               generic_out);
    if (classify->parsed())
      return cmd_classify(classify_entry_id, classify_bound, classify_opts, classify_out);
    if (table->parsed()) return cmd_verify_table(table_bound, table_opts, table_out);
    if (cat_export->parsed()) return cmd_catalogue_export(cat_out);
    std::fputs("error: no subcommand dispatched\n", stderr);
    return kUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const CapabilityError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
}

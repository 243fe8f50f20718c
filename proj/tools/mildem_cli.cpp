#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "mildem/checks.hpp"
#include "mildem/eval.hpp"

using namespace mildem;
using json = nlohmann::ordered_json;

namespace {

struct CheckFlags {
  CheckSpec spec;
  bool json = false;
  bool timing = false;
  bool serial = false;
};

void add_check_flags(CLI::App* cmd, CheckFlags& f) {
  cmd->add_option("--trials", f.spec.trials, "randomized trials per check")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.spec.seed, "base seed");
  cmd->add_option("--degree", f.spec.degree, "largest simplicial degree D")->check(CLI::NonNegativeNumber);
  cmd->add_option("--entry-bound", f.spec.entry_bound, "largest value in exhaustive pools")->check(CLI::Range(2, 64));
  cmd->add_option("--period-bound", f.spec.period_bound, "largest generated period")->check(CLI::Range(1, 64));
  cmd->add_flag("--json", f.json, "print the report as JSON");
  cmd->add_flag("--timing", f.timing, "include elapsed time (reports are then not reproducible)");
  cmd->add_flag("--serial", f.serial, "use the serial reference loop instead of OpenMP");
}

void print_value(const Value& v, bool as_json, const std::string& input) {
  if (as_json) {
    json j;
    j["input"] = input;
    j["type"] = type_name(v);
    j["value"] = to_string(v);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << to_string(v) << '\n';
  }
}

void print_report(const CheckReport& r, bool as_json) {
  if (as_json) {
    std::cout << to_json(r).dump(2) << '\n';
    return;
  }
  std::cout << summary_line(r) << '\n';
  std::cout << "  " << r.statement << '\n';
  for (const auto& [name, n] : r.cases) std::cout << "  case " << name << ": " << n << '\n';
  for (const auto& [name, value] : r.notes) std::cout << "  " << name << ": " << value << '\n';
  for (const std::string& f : r.failures) std::cout << "  failure: " << f << '\n';
  if (r.failure_count > r.failures.size())
    std::cout << "  ... " << (r.failure_count - r.failures.size()) << " more failures\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mildem: exact computations with the injection monoid, supports, box products and operadic products"};
  app.require_subcommand(1);

  std::string expr;
  bool eval_json = false;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression over the literal grammar");
  eval_cmd->add_option("expr", expr, "expression")->required();
  eval_cmd->add_flag("--json", eval_json, "structured output");

  auto* fns_cmd = app.add_subcommand("functions", "list the functions known to eval");

  CheckFlags check_flags;
  auto* check_cmd = app.add_subcommand("check", "run one registry check");
  check_cmd->add_option("id", check_flags.spec.id, "check id (see list-checks)")->required();
  add_check_flags(check_cmd, check_flags);

  CheckFlags all_flags;
  auto* all_cmd = app.add_subcommand("verify-all", "run every registry check");
  add_check_flags(all_cmd, all_flags);

  auto* list_cmd = app.add_subcommand("list-checks", "list registry ids and what they assert");

  std::string class_text;
  auto* phi_cmd = app.add_subcommand("phi", "apply phi to a class{frame=[...], payload=[...]}");
  phi_cmd->add_option("class", class_text, "class literal")->required();

  std::string factors_text;
  auto* inv_cmd = app.add_subcommand("phi-inv", "representative class of a box tuple [s, t, ...]");
  inv_cmd->add_option("factors", factors_text, "list of simplices or elements")->required();

  std::string c1, c2;
  auto* eq_cmd = app.add_subcommand("class-eq", "decide whether two representatives define the same class");
  eq_cmd->add_option("c1", c1, "class literal")->required();
  eq_cmd->add_option("c2", c2, "class literal")->required();

  std::string family_text;
  Int star_degree = 2;
  std::size_t star_samples = 60;
  std::uint64_t star_seed = 42;
  auto* star_cmd = app.add_subcommand("star-module-check", "test whether phi is bijective onto a family");
  star_cmd->add_option("family", family_text, "family literal, e.g. ESelfM{D=3}^mu")->required();
  star_cmd->add_option("--degree", star_degree, "largest degree sampled")->check(CLI::NonNegativeNumber);
  star_cmd->add_option("--samples", star_samples, "random simplices");
  star_cmd->add_option("--seed", star_seed, "seed");

  std::string pa, pb;
  auto* psum_cmd = app.add_subcommand("psum", "sum of two cfg{...} simplices");
  psum_cmd->add_option("a", pa, "cfg literal")->required();
  psum_cmd->add_option("b", pb, "cfg literal")->required();

  CmonBounds cmon;
  std::uint64_t cmon_seed = 42;
  bool cmon_json = false;
  auto* cmon_cmd = app.add_subcommand("cmon-verify", "verify the commutative monoid axioms of the free *-algebra");
  cmon_cmd->add_option("--max-weight", cmon.max_weight, "largest weight in exhaustive pools");
  cmon_cmd->add_option("--entry-bound", cmon.max_entry, "largest entry in exhaustive pools");
  cmon_cmd->add_option("--degree", cmon.max_degree, "largest degree");
  cmon_cmd->add_option("--pairs", cmon.pairs, "sampled summable pairs");
  cmon_cmd->add_option("--triples", cmon.triples, "sampled summable triples");
  cmon_cmd->add_option("--actions", cmon.actions, "sampled I-action instances");
  cmon_cmd->add_option("--seed", cmon_seed, "seed");
  cmon_cmd->add_flag("--json", cmon_json, "structured output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval_cmd->parsed()) {
      print_value(eval(expr), eval_json, expr);
      return 0;
    }
    if (fns_cmd->parsed()) {
      for (const auto& [name, sig] : eval_functions()) std::cout << sig << '\n';
      return 0;
    }
    if (list_cmd->parsed()) {
      for (const std::string& id : check_ids()) std::cout << id << "  " << check_statement(id) << '\n';
      return 0;
    }
    if (check_cmd->parsed()) {
      const CheckReport r =
          run_check(check_flags.spec, check_flags.serial ? Exec::Serial : Exec::Parallel, check_flags.timing);
      print_report(r, check_flags.json);
      return r.passed() ? 0 : 1;
    }
    if (all_cmd->parsed()) {
      const Exec exec = all_flags.serial ? Exec::Serial : Exec::Parallel;
      std::size_t failures = 0;
      json reports = json::array();
      for (const std::string& id : check_ids()) {
        CheckSpec s = all_flags.spec;
        s.id = id;
        const CheckReport r = run_check(s, exec, all_flags.timing);
        failures += r.failure_count;
        if (all_flags.json) reports.push_back(to_json(r));
        else std::cout << summary_line(r) << std::endl;
      }
      if (all_flags.json) {
        json j;
        j["schema_version"] = kReportSchemaVersion;
        j["passed"] = failures == 0;
        j["failure_count"] = failures;
        j["reports"] = reports;
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " failures") << '\n';
      }
      return failures == 0 ? 0 : 1;
    }
    if (phi_cmd->parsed()) {
      ValueList out;
      for (Simplex& s : phi(parse_class(class_text))) out.push_back(Value{std::move(s)});
      std::cout << to_string(Value{out}) << '\n';
      return 0;
    }
    if (inv_cmd->parsed()) {
      std::cout << to_string(Value{phi_inverse(parse_simplex_list(factors_text))}) << '\n';
      return 0;
    }
    if (eq_cmd->parsed()) {
      std::cout << (class_equal(parse_class(c1), parse_class(c2)) ? "true" : "false") << '\n';
      return 0;
    }
    if (star_cmd->parsed()) {
      const TruncEMSS x = parse_family(family_text);
      const StarModuleReport r = star_module_check(x, star_degree, star_samples, star_seed);
      std::cout << family_literal(x) << ": " << (r.is_star_module() ? "*-module" : "not a *-module") << '\n'
                << "  sampled " << r.sampled << ", hit " << r.hit << ", relation pairs " << r.relation_pairs
                << ", compared " << r.compared << '\n';
      if (r.unhit)
        std::cout << "  witness " << to_string(*r.unhit) << " at level " << r.unhit_level << " with least support "
                  << to_string(*r.unhit_support) << '\n';
      return r.is_star_module() ? 0 : 1;
    }
    if (psum_cmd->parsed()) {
      std::cout << to_string(sum(parse_star(pa), parse_star(pb))) << '\n';
      return 0;
    }
    if (cmon_cmd->parsed()) {
      const CmonReport r = verify_cmon(cmon, cmon_seed);
      if (cmon_json) {
        json j;
        j["schema_version"] = kReportSchemaVersion;
        j["passed"] = r.ok();
        j["checks"] = json::array();
        for (const CmonCheck& c : r.checks)
          j["checks"].push_back({{"name", c.name}, {"instances", c.instances}, {"failures", c.failures}});
        std::cout << j.dump(2) << '\n';
      } else {
        for (const CmonCheck& c : r.checks)
          std::cout << (c.failures.empty() ? "PASS " : "FAIL ") << c.name << ": " << c.instances << " instances\n";
      }
      return r.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

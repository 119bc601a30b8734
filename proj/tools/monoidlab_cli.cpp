#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "monoidlab/commands.hpp"
#include "monoidlab/errors.hpp"

namespace {

void emit_error(const std::string& type, const std::string& what,
                bool as_json) {
  if (as_json) {
    nlohmann::json doc;
    doc["error"] = {{"message", what}, {"type", type}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cerr << "error: " << what << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite monoid laboratory"};
  app.require_subcommand(1);

  bool as_json = false;
  monoidlab::CommandCaps caps;
  app.add_flag("--json", as_json, "emit the machine readable report");
  app.add_option("--cap-mset-size", caps.mset_cap,
                 "override the command's size cap for derived structures");
  app.add_option("--cap-subsets", caps.subset_cap,
                 "override the subset enumeration cap");

  std::string monoid_a, monoid_b, topology_file, step_file, category_file;
  std::string system;
  int steps = 20, seed = 0;

  auto* analyze = app.add_subcommand(
      "analyze", "profile a monoid and crosscheck the dictionary");
  analyze->fallthrough();
  analyze->add_option("monoid-file", monoid_a)->required();

  auto* congruences = app.add_subcommand(
      "congruences", "right congruence lattice and its category");
  congruences->fallthrough();
  congruences->add_option("monoid-file", monoid_a)->required();

  auto* complete = app.add_subcommand(
      "complete", "run the completion pipeline for a topology");
  complete->fallthrough();
  complete->add_option("monoid-file", monoid_a)->required();
  complete->add_option("topology-file", topology_file)->required();

  auto* morita = app.add_subcommand(
      "morita", "decide equivalence of two monoids with a witness audit");
  morita->fallthrough();
  morita->add_option("monoid-file-a", monoid_a)->required();
  morita->add_option("monoid-file-b", monoid_b)->required();

  auto* monogenic =
      app.add_subcommand("monogenic", "single generator actions");
  monogenic->fallthrough();
  monogenic->require_subcommand(1);
  auto* mono_classify = monogenic->add_subcommand(
      "classify", "orbit shapes and components of a step function");
  mono_classify->fallthrough();
  mono_classify->add_option("step-file", step_file)->required();

  auto* fraisse =
      app.add_subcommand("fraisse", "extension system chains");
  fraisse->fallthrough();
  fraisse->require_subcommand(1);
  auto* fraisse_run = fraisse->add_subcommand(
      "run", "build a chain in a builtin extension system");
  fraisse_run->fallthrough();
  fraisse_run->add_option("system", system, "lin_orders, finset_inj or cyclic_p_groups")
      ->required();
  fraisse_run->add_option("--steps", steps, "chain steps to build");
  fraisse_run->add_option("--seed", seed, "index of the starting object");
  auto* fraisse_ofs = fraisse->add_subcommand(
      "ofs-validate", "check the factorization laws of a category file");
  fraisse_ofs->fallthrough();
  fraisse_ofs->add_option("category-file", category_file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    auto start = std::chrono::steady_clock::now();
    monoidlab::Report rep;
    if (*analyze)
      rep = monoidlab::cmd_analyze(monoid_a, caps);
    else if (*congruences)
      rep = monoidlab::cmd_congruences(monoid_a, caps);
    else if (*complete)
      rep = monoidlab::cmd_complete(monoid_a, topology_file, caps);
    else if (*morita)
      rep = monoidlab::cmd_morita(monoid_a, monoid_b);
    else if (*mono_classify)
      rep = monoidlab::cmd_monogenic_classify(step_file);
    else if (*fraisse_run)
      rep = monoidlab::cmd_fraisse_run(system, steps, seed);
    else
      rep = monoidlab::cmd_fraisse_ofs(category_file);
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (as_json) {
      std::cout << monoidlab::render_json(rep);
    } else {
      std::cout << monoidlab::render_human(rep);
      std::cerr << "elapsed: " << rep.elapsed_ms << " ms\n";
    }
    return 0;
  } catch (const monoidlab::CapError& e) {
    emit_error("cap", e.what(), as_json);
    return 3;
  } catch (const monoidlab::ValidationError& e) {
    emit_error("validation", e.what(), as_json);
    return 2;
  }
}

#pragma once

// One function per CLI subcommand. Each loads and validates its input
// files, runs the corresponding pipeline, re-asserts the pipeline's
// invariants, and returns a Report whose payload holds the results in a
// canonical order. File parsing failures throw ParseError with a location;
// size caps throw SizeTooLarge.

#include <string>

#include "monoidlab/report.hpp"

namespace monoidlab {

struct CommandCaps {
  int mset_cap = -1;    // -1 means the command's default
  int subset_cap = -1;  // reserved for subset enumerations
};

// Algebraic and topos-level profile of one monoid, with the brute-force
// crosschecks over a small action corpus.
Report cmd_analyze(const std::string& monoid_file, const CommandCaps& caps);

// The lattice of right congruences (Hasse cover edges) and the category
// they generate: objects, hom counts, composition spot checks.
Report cmd_congruences(const std::string& monoid_file,
                       const CommandCaps& caps);

// The full completion pipeline: input topology, its action topology, the
// powder quotient, the filter of open congruences, its base, and the
// completed monoid with table, topology and unit.
Report cmd_complete(const std::string& monoid_file,
                    const std::string& topology_file,
                    const CommandCaps& caps);

// Isomorphism search between two monoids plus the witness audit: every
// Morita witness's local submonoid compared against the ambient monoid,
// and the local submonoids at all idempotents reported for both inputs.
Report cmd_morita(const std::string& monoid_file_a,
                  const std::string& monoid_file_b);

// Orbit shapes, components and component covers of a step function.
Report cmd_monogenic_classify(const std::string& step_file);

// Builds a chain in a builtin extension system and reports stages,
// provenance, the injectivity deficit and universality stages.
Report cmd_fraisse_run(const std::string& system, int steps, int seed);

// Validates the factorization-system laws for a category file's (T, M).
Report cmd_fraisse_ofs(const std::string& category_file);

}  // namespace monoidlab

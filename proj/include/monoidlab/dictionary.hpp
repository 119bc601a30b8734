// Topos-level flags computed from monoid-level predicates, together with
// brute-force counterparts over small action corpora so every claimed
// equivalence can be checked rather than trusted.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "monoidlab/actions.hpp"
#include "monoidlab/monoid.hpp"

namespace monoidlab {

struct ToposProfile {
  bool boolean_atomic = false;
  bool de_morgan = false;
  bool local_ = false;
  bool colocal = false;
  bool totally_connected = false;
  bool strongly_connected = false;
  bool bilocal_quality_type = false;
  bool strongly_compact = true;
  bool two_valued = true;
};

ToposProfile topos_profile(const FiniteMonoid& m);

struct ProfileEntry {
  std::string name;
  bool value = false;
  std::string note;  // the algebraic predicate behind the flag, in words
};
std::vector<ProfileEntry> profile_entries(const ToposProfile& p);

// One brute-force verdict against its algebraic counterpart.
struct Verdict {
  bool monoid_side = false;
  bool topos_side = false;
  std::string detail;
  bool agrees() const { return monoid_side == topos_side; }
};

// Quotients of the monoid, their pairwise products and coproducts within
// the size cap, and a few seeded pseudo-random equivariant quotients.
std::vector<FiniteMSet> dictionary_corpus(const FiniteMonoid& m,
                                          int size_cap);

struct GammaCrosscheck {
  Verdict quotient_fixed_points;     // vs a right absorbing element
  Verdict gamma_surjective_on_epis;  // vs a right absorbing element
  bool all_agree() const {
    return quotient_fixed_points.agrees() &&
           gamma_surjective_on_epis.agrees();
  }
};
GammaCrosscheck crosscheck_gamma(const FiniteMonoid& m, int size_cap);

struct CCrosscheck {
  Verdict omega_two_components;           // vs the right Ore condition
  Verdict equalizer_preservation;         // vs right collapsibility
  Verdict principal_products_connected;   // vs indecomposability of M x M
  bool all_agree() const {
    return omega_two_components.agrees() &&
           equalizer_preservation.agrees() &&
           principal_products_connected.agrees();
  }
};
CCrosscheck crosscheck_c(const FiniteMonoid& m, int size_cap);

// The containment of fixed points into components.
struct AlphaMap {
  std::vector<int> map;  // fixed point index -> component index
  bool mono = false, epi = false, iso = false;
};
AlphaMap alpha_map(const FiniteMSet& x);

// Whether every action-closed subset of x has an action-closed complement.
bool all_subobjects_complemented(const FiniteMSet& x);

// The least non-empty right ideal, when one exists, and whether its
// endomorphism monoid as a right action is trivial.
struct LeastIdealReport {
  bool exists = false;
  ElementSet ideal;
  bool trivial_endos = false;
};
LeastIdealReport least_ideal_report(const FiniteMonoid& m);

}  // namespace monoidlab

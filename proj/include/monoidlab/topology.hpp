// Topologies on a finite monoid and the continuity pipeline: necessary
// clopens of an action, the continuous core, the induced action topology,
// powder quotients, filters of open right congruences, the completion
// monoid they define, and the factorizing topology of a filter.
#pragma once

#include <vector>

#include "monoidlab/actions.hpp"
#include "monoidlab/monoid.hpp"

namespace monoidlab {

struct MonoidTopology {
  FiniteMonoid monoid;
  std::vector<ElementSet> opens;  // canonical order, always with {} and M
  bool operator==(const MonoidTopology&) const = default;

  bool contains(ElementSet s) const;
};

// Closure of the base plus {} and M under unions and intersections.
MonoidTopology topology_from_base(const FiniteMonoid& m,
                                  const std::vector<ElementSet>& base);
MonoidTopology discrete_topology(const FiniteMonoid& m);
MonoidTopology indiscrete_topology(const FiniteMonoid& m);

// For each point x, the partition of M by p -> x*p. Its classes are the
// sets that must be open for the action at x to be continuous.
std::vector<RightCongruence> necessary_clopens(const FiniteMSet& x);

struct ContinuityReport {
  bool continuous = true;
  int point = -1, parameter = -1;  // failing (x, p) when not continuous
};
ContinuityReport is_continuous(const FiniteMSet& x, const MonoidTopology& t);

struct SubMSet {
  FiniteMSet object;
  std::vector<int> embedding;  // sub index -> ambient index
};

// Largest action-closed subset whose points all have open orbit partitions.
SubMSet continuous_core(const FiniteMSet& x, const MonoidTopology& t);

// The subsets of M that are continuous points of the power action, and the
// topology they generate. Always coarsens t and is a fixed point of itself.
struct ActionTopology {
  std::vector<ElementSet> base;
  MonoidTopology topology;
};
ActionTopology action_topology(const FiniteMonoid& m, const MonoidTopology& t,
                               int cap = 12);

struct RectangleReport {
  bool continuous = true;
  ElementSet open;            // the multiplication preimage that fails
  int left = -1, right = -1;  // a pair admitting no open rectangle
};
RectangleReport is_topological_monoid(const FiniteMonoid& m,
                                      const MonoidTopology& t);

// Quotient by topological indistinguishability in the action topology of t.
struct PowderQuotient {
  FiniteMonoid monoid;
  MonoidTopology topology;
  std::vector<int> projection;  // element -> class
};
PowderQuotient powder_quotient(const FiniteMonoid& m,
                               const MonoidTopology& t);

// Non-empty, upward closed, downward directed, pullback-stable set of
// right congruences.
struct CongruenceFilter {
  FiniteMonoid monoid;
  std::vector<RightCongruence> members;  // finest first, coarsest last
  bool operator==(const CongruenceFilter&) const = default;
};

// Normalizes and validates the four filter laws; throws InvalidFilter.
CongruenceFilter make_filter(const FiniteMonoid& m,
                             std::vector<RightCongruence> members);

// The congruences all of whose classes are open in t. The collection is a
// valid filter whenever translations are continuous in t (any action
// topology qualifies); for other topologies pullback stability can fail
// and the validation rejects the collection.
CongruenceFilter open_congruences(const FiniteMonoid& m,
                                  const MonoidTopology& t);

// Limit of the quotients along a filter. The carrier is M modulo the least
// member; the coordinate tuples are kept and the limit-formula product is
// asserted against the carrier product.
struct CompletionMonoid {
  FiniteMonoid base;
  CongruenceFilter filter;
  FiniteMonoid monoid;
  std::vector<std::vector<int>> tuples;  // carrier -> class per member
  MonoidTopology topology;
  std::vector<int> unit;  // M -> carrier, a dense homomorphism
};
CompletionMonoid completion(const FiniteMonoid& m, const CongruenceFilter& f);

struct BaseReduction {
  std::vector<RightCongruence> base;  // minimal members, an antichain
  bool discrete = false;              // a least member exists
  RightCongruence least;
  bool prodiscrete_two_sided = false;  // every base member left-compatible
  std::vector<FiniteMonoid> quotient_monoids;  // one per base member if so
};
BaseReduction base_reduce(const CongruenceFilter& f);

// Coarsest topology whose open congruences could be f: generated by the
// subsets whose left-translation partition lies in f. exact reports
// whether the round trip recovers f.
struct FactorTopology {
  MonoidTopology topology;
  bool exact = false;
};
FactorTopology factor_topology(const FiniteMonoid& m,
                               const CongruenceFilter& f);

// Continuous core of the exponential.
SubMSet continuous_exponential(const FiniteMSet& x, const FiniteMSet& y,
                               const MonoidTopology& t, int cap = 4096);

}  // namespace monoidlab

// Actions of the free monoid on one generator, given by a single step
// function. Orbits fall into the shapes N_{a,b}: a tail of length a feeding
// a cycle of length b. Epi and mono existence between shapes, joint covers,
// and the truncated stages of the profinite chain N_{K,1} live here.
#pragma once

#include <vector>

#include "monoidlab/monoid.hpp"
#include "monoidlab/topology.hpp"

namespace monoidlab {

// A finite set with an endofunction; the action is iteration, never a table.
struct MonogenicAction {
  int size = 0;
  std::vector<int> step;  // step[x] in range
  bool operator==(const MonogenicAction&) const = default;
};

// Validates that every step value lands in the carrier.
MonogenicAction make_monogenic(std::vector<int> step);

// Tail length a >= 0 and cycle length b >= 1. The canonical carrier is
// {0..a+b-1} with x -> x+1 wrapping a+b-1 back to a.
struct NabShape {
  int a = 0;
  int b = 1;
  bool operator==(const NabShape&) const = default;
};

// The canonical carrier of a shape.
MonogenicAction shape_action(const NabShape& s);

struct ShapeClassification {
  std::vector<NabShape> element_shapes;  // shape of the orbit of each point
  std::vector<int> component_of;         // labeled by first occurrence
  int component_count = 0;
  // Per component, the shape with the component's cycle length and its
  // deepest tail: the joint cover of the member orbit shapes. A component
  // is a single orbit exactly when some member realizes this shape.
  std::vector<NabShape> component_shapes;
};
ShapeClassification classify(const MonogenicAction& x);

// A surjective equivariant map N_{a,b} -> N_{a',b'} exists iff a' <= a and
// b' divides b.
bool epi_exists(const NabShape& s, const NabShape& t);

// An injective equivariant map N_{a,b} -> N_{a',b'} exists iff a <= a' and
// b = b'. Such a map splits exactly when a = 0 or a = a': a generator with
// a non-empty tail has no step preimage, so once it lands strictly inside
// a longer tail nothing can retract onto it.
bool mono_exists(const NabShape& s, const NabShape& t);

// N_{max(a,a'), lcm(b,b')}, the least shape admitting epis onto both.
NabShape joint_cover(const NabShape& s, const NabShape& t);

// Stage K of the chain of truncated additions: {0..K} with
// x*y = min(x+y, K), carrying the discrete topology. The inverse limit of
// the whole chain is the one-point compactification of the discrete
// natural numbers; only its finite stages are materialized.
struct TruncatedProfinite {
  int depth = 0;
  FiniteMonoid monoid;
  MonoidTopology topology;
  // Whether {x} is the preimage of {x} under every deeper projection.
  // True below the cap; the cap itself is the moving stand-in for the
  // point at infinity and its preimages keep growing.
  std::vector<bool> point_stabilizes;
};
TruncatedProfinite truncated_profinite(int depth);

// x -> min(x, to), a surjective homomorphism between stages; to <= from.
std::vector<int> truncation_projection(int from, int to);

}  // namespace monoidlab

// Extension systems and the scheduled chains they generate. A system
// presents a countable category through oracles: object sizes, finite hom
// sets, a distinguished class of extensions closed under identity and
// composition, square completion along extensions, and joint embedding.
// The chain builder sweeps extension problems in a fixed fair schedule so
// the finite stages approximate the generic colimit; deficit and
// universality scans measure how far a finite chain has got. The engine
// works on the extension side directly, so nothing is dualized at runtime.
#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace monoidlab {

// A morphism between enumerated objects, carried as an element map.
struct Morph {
  int dom = 0, cod = 0;  // object indices
  std::vector<int> map;  // one image per carrier element of dom
  bool operator==(const Morph&) const = default;
};

// f then g; throws OutOfRange on mismatched ends.
Morph compose_maps(const Morph& f, const Morph& g);

struct Cospan {
  Morph left, right;  // into a common object
};

// Completion of (e: A -> B, f: A -> C) to a commuting square:
// extension: C -> P lies in the extension class, filler: B -> P.
struct CostabilitySquare {
  Morph extension, filler;
};

struct ExtensionSystem {
  std::string name;
  long long object_count = -1;  // -1 when the enumeration is infinite
  std::function<long long(int)> object_size;
  std::function<std::string(int)> object_name;
  // Finite, deterministically ordered; empty when no morphisms exist.
  std::function<std::vector<Morph>(int, int)> hom;
  std::function<bool(const Morph&)> in_e;
  std::function<CostabilitySquare(const Morph&, const Morph&)> costability;
  std::function<Cospan(int, int)> joint_embed;
};

Morph identity_morph(const ExtensionSystem& s, int object);

// Pairing (a+b)(a+b+1)/2 + b and the nested triple schedule built from it.
// The schedule satisfies schedule_decode(n)[2] <= n, so a decoded stage
// index always refers to an already built stage.
long long pair_index(long long a, long long b);
std::array<long long, 2> pair_decode(long long n);
long long schedule_index(long long i, long long j, long long k);
std::array<long long, 3> schedule_decode(long long n);

// The i-th extension in the dovetailed enumeration of the extension class:
// diagonal by diagonal over object pairs, hom order within a pair. Absent
// once a finite system is exhausted.
std::optional<Morph> extension_at(const ExtensionSystem& s, long long index);

struct ChainStep {
  long long extension = -1, span = -1, stage = -1;  // decoded schedule triple
  bool applied = false;  // the decoded problem existed and was completed
  int embedded = -1;     // object joint-embedded this step, -1 if exhausted
  bool operator==(const ChainStep&) const = default;
};

struct Chain {
  std::shared_ptr<const ExtensionSystem> system;
  std::vector<int> stages;  // object indices, seed first
  std::vector<Morph> links;
  std::vector<ChainStep> provenance;
};

// Grows the chain for the given number of steps. Every oracle answer is
// checked on the spot: ends must match, squares must commute, and every
// leg and composite link must stay in the extension class; a violation
// throws OracleViolation rather than corrupting the chain.
Chain build_chain(std::shared_ptr<const ExtensionSystem> s, int steps,
                  int seed);

// Composite link between two built stages.
Morph chain_map(const Chain& ch, int from, int to);

struct ExtensionProblem {
  Morph extension;  // e: A -> B in the extension class
  Morph anchor;     // f: A -> stage carrier
  int stage = 0;
  bool operator==(const ExtensionProblem&) const = default;
};

// Problems (e, f at stage k <= problem_bound, ends among the first
// problem_bound objects) that no g into a stage <= stage_bound solves.
std::vector<ExtensionProblem> injectivity_deficit(const Chain& ch,
                                                  int stage_bound,
                                                  int problem_bound);

// Least built stage admitting an extension-class morphism from the object.
std::optional<int> universality_stage(const Chain& ch, int object);

// lin_orders: finite linear orders with order embeddings, all extensions.
// finset_inj: finite sets with injections, all extensions.
// cyclic_p_groups: groups of order p^k with homomorphisms; extensions are
// the injective ones. Carriers above two-to-the-22nd throw SizeTooLarge.
ExtensionSystem builtin_system(const std::string& name, int p = 2);

// A fully presented finite category with a total composition table.
struct FiniteCategory {
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
  std::vector<int> dom, cod;
  std::vector<int> identity;              // one morphism per object
  std::vector<std::vector<int>> compose;  // compose[f][g] = f then g, -1 if
                                          // not composable
};

// Checks shapes, identity laws and associativity; throws MalformedCategory.
FiniteCategory validate_category(FiniteCategory c);

std::vector<int> split_epimorphisms(const FiniteCategory& c);
std::vector<int> split_monomorphisms(const FiniteCategory& c);

// Two objects each retracting onto a shared point, with the idempotent
// loops those retractions generate: the smallest category whose split epis
// form a stable class without the joint covering property.
FiniteCategory shared_point_category();

struct OfsReport {
  bool factorization_ok = true;
  int unfactored = -1;  // morphism with no extension-then-mono factorization
  bool uniqueness_ok = true;
  // h with factorizations (t, m), (t', m') admitting no middle isomorphism
  std::array<int, 5> ambiguous{-1, -1, -1, -1, -1};
  bool lifting_ok = true;
  std::array<int, 4> unliftable{-1, -1, -1, -1};  // square t, m, u, v whose
                                                  // filler is absent or not
                                                  // unique
  bool stability_ok = true;
  int stability_axiom = 0;  // 1 identities, 2 composition, 3 squares
  std::array<int, 2> unstable{-1, -1};
  bool joint_covering_ok = true;
  std::array<int, 2> uncovered{-1, -1};  // object pair with no common span
                                         // of t-morphisms
  bool all_ok() const {
    return factorization_ok && uniqueness_ok && lifting_ok && stability_ok &&
           joint_covering_ok;
  }
};

// Validates the category, then checks the factorization-system laws for
// the classes t and m together with stability of t and joint t-covering.
OfsReport ofs_validate(const FiniteCategory& c, const std::vector<int>& t,
                       const std::vector<int>& m);

}  // namespace monoidlab

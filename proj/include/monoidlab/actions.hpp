// Finite right M-sets and the machinery built on them: hom-set enumeration,
// fixed points and components, the right-ideal classifier and power object,
// exponentials, (co)limits, right congruences with their category, tensor
// products and flatness.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monoidlab/monoid.hpp"

namespace monoidlab {

struct FiniteMSet {
  FiniteMonoid monoid;
  // action[x][m] = x * m
  std::vector<std::vector<int>> action;

  int size() const { return static_cast<int>(action.size()); }
  int act(int x, int m) const { return action[x][m]; }
  bool operator==(const FiniteMSet&) const = default;
};

// Checks the unit and mixed associativity laws.
FiniteMSet make_mset(const FiniteMonoid& m,
                     std::vector<std::vector<int>> action);

// M acting on itself by right multiplication.
FiniteMSet regular_mset(const FiniteMonoid& m);
FiniteMSet terminal_mset(const FiniteMonoid& m);
FiniteMSet empty_mset(const FiniteMonoid& m);

struct MSetMap {
  FiniteMSet source, target;
  std::vector<int> map;
  bool operator==(const MSetMap&) const = default;
};

// All equivariant maps X -> Y, lexicographically ordered by image vector.
std::vector<MSetMap> hom_set(const FiniteMSet& x, const FiniteMSet& y);

std::vector<int> fixed_points(const FiniteMSet& x);

struct Components {
  std::vector<int> component_of;
  int count = 0;
};
Components components(const FiniteMSet& x);

// Right ideals with the inverse-image action I*m = {m' | m*m' in I}.
// Carrier order matches right_ideals.
FiniteMSet omega(const FiniteMonoid& m);

// All subsets with the inverse-image action under left multiplication;
// carrier index is the subset bitmask.
FiniteMSet power_mset(const FiniteMonoid& m, int cap = 12);

// Carrier = hom(M x X, Y) with (f*m)(n, p) = f(m*n, p).
FiniteMSet exponential(const FiniteMSet& x, const FiniteMSet& y,
                       int cap = 4096);

struct ProductMSet {
  FiniteMSet object;  // index encoding: x * |Y| + y
  int left_size = 0, right_size = 0;
  int pair(int x, int y) const { return x * right_size + y; }
};
ProductMSet product(const FiniteMSet& x, const FiniteMSet& y);

struct QuotientMap {
  FiniteMSet object;
  std::vector<int> projection;  // source index -> class
};
QuotientMap coequalizer(const MSetMap& f, const MSetMap& g);

struct PushoutMSet {
  FiniteMSet object;
  std::vector<int> from_left, from_right;
};
PushoutMSet pushout(const MSetMap& f, const MSetMap& g);

struct ImageMSet {
  FiniteMSet object;
  std::vector<int> target_index;  // image index -> index in the target
};
ImageMSet image(const MSetMap& f);

// Pushout of f against the map to the terminal M-set; lower map picks the
// class of the added point.
struct CokernelMSet {
  FiniteMSet object;
  int point_class = 0;
  bool lower_iso = false;
};
CokernelMSet cokernel(const MSetMap& f);

struct RightCongruence {
  FiniteMonoid monoid;
  // class indices in first-occurrence order, so class_of[0] = 0
  std::vector<int> class_of;
  int class_count = 0;
  bool operator==(const RightCongruence&) const = default;

  bool related(int p, int q) const { return class_of[p] == class_of[q]; }
};

// Normalizes an arbitrary class labeling and checks right compatibility.
RightCongruence make_congruence(const FiniteMonoid& m,
                                std::vector<int> labels);

RightCongruence diagonal_congruence(const FiniteMonoid& m);
RightCongruence total_congruence(const FiniteMonoid& m);

// All right congruences, finest first, coarsest last.
std::vector<RightCongruence> right_congruences(const FiniteMonoid& m,
                                               int cap = 9);

// r subseteq s as relations.
bool refines(const RightCongruence& r, const RightCongruence& s);

FiniteMSet quotient(const FiniteMonoid& m, const RightCongruence& r);

// m*(r): p, q related iff m*p, m*q are related in r.
RightCongruence pullback_congruence(const FiniteMonoid& monoid, int m,
                                    const RightCongruence& r);

// Meet of two congruences (their intersection as relations).
RightCongruence joint_cover(const RightCongruence& a,
                            const RightCongruence& b);

// Join: the least right congruence containing both.
RightCongruence congruence_join(const RightCongruence& a,
                                const RightCongruence& b);

// Morphism r1 -> r2 in the category of right congruences, i.e. a class [m]
// of r2 with r1 subseteq m*(r2). The witness is the least element of that
// class; on quotients it acts by [p] -> [m*p].
struct CongMorphism {
  int source = 0, target = 0;  // object indices in the ambient category
  int witness = 0;
  bool operator==(const CongMorphism&) const = default;
};

struct CongCategory {
  std::vector<RightCongruence> objects;
  // hom[i][j] = all morphisms i -> j, sorted by witness
  std::vector<std::vector<std::vector<CongMorphism>>> hom;
};
CongCategory congruence_category(const FiniteMonoid& m,
                                 const std::vector<RightCongruence>& objects);

// f then g; requires f.target == g.source.
CongMorphism compose_cong(const CongCategory& cat, const CongMorphism& f,
                          const CongMorphism& g);

// Factorization through mid = witness*(r_target): a strict quotient part
// (witness class [1] of mid) followed by a class-injective part.
struct CongFactorization {
  RightCongruence mid;
  int epi_witness = 0, mono_witness = 0;
};
CongFactorization epi_mono_factor(const CongCategory& cat,
                                  const CongMorphism& f);

bool is_strict_epi(const CongMorphism& f);

// Coend of A x B over M: pairs (a, b) modulo (a*m, b) ~ (a, m*b). B must be
// an M^op-set, i.e. a left M-set.
struct TensorResult {
  int size = 0;
  std::vector<int> class_of;  // index a * |B| + b -> class
};
TensorResult tensor(const FiniteMSet& a, const FiniteMSet& b);

// Flatness of a left M-set (a right M^op-set) by the three element-level
// conditions; the witness names the first failing condition.
struct FlatnessReport {
  bool flat = false;
  std::string witness;
};
FlatnessReport is_flat_left(const FiniteMSet& b);

}  // namespace monoidlab

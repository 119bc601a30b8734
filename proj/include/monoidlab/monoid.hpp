// Finite monoids as explicit multiplication tables, plus the combinatorics
// that only needs the table: generated submonoids, local submonoids at an
// idempotent, Morita witnesses, isomorphism search, right ideals, one-sided
// structural predicates, and exhaustive enumeration up to isomorphism.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoidlab/errors.hpp"

namespace monoidlab {

// Subset of {0, ..., n-1} for n <= 64.
struct ElementSet {
  uint64_t bits = 0;

  static ElementSet empty() { return {}; }
  static ElementSet full(int n) {
    return {n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1};
  }
  static ElementSet single(int i) { return {uint64_t{1} << i}; }

  bool contains(int i) const { return (bits >> i) & 1; }
  void add(int i) { bits |= uint64_t{1} << i; }
  void remove(int i) { bits &= ~(uint64_t{1} << i); }
  int count() const { return __builtin_popcountll(bits); }
  bool none() const { return bits == 0; }

  ElementSet operator|(ElementSet o) const { return {bits | o.bits}; }
  ElementSet operator&(ElementSet o) const { return {bits & o.bits}; }
  bool operator==(const ElementSet&) const = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    for (uint64_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
    return out;
  }
};

// Orders first by cardinality, then by the first element where the sets
// differ, the set containing that element coming first. Used everywhere a
// list of subsets must be reproducible.
bool canonical_less(ElementSet a, ElementSet b);

struct FiniteMonoid {
  int size = 1;
  // table[i][j] is the product i * j; row index is the left factor.
  std::vector<std::vector<int>> table{{0}};
  // Always 0 after validation.
  int identity = 0;

  int mul(int a, int b) const { return table[a][b]; }
  bool operator==(const FiniteMonoid&) const = default;
};

// Checks ranges, identity laws and associativity. If the identity is not
// element 0, relabels by swapping it with 0 and reports the permutation
// applied (old index -> new index); identity nullopt means autodetect.
struct ValidatedMonoid {
  FiniteMonoid monoid;
  std::vector<int> relabeling;  // old -> new; empty when no relabel happened
};
ValidatedMonoid validate_monoid(const std::vector<std::vector<int>>& table,
                                std::optional<int> identity = std::nullopt);

ElementSet idempotents(const FiniteMonoid& m);

ElementSet submonoid_generated(const FiniteMonoid& m, ElementSet gens);

// Fixed point of S -> { x | exists t in <S> with t*x in <S> }. Rejects an
// empty seed.
ElementSet right_factorable_closure(const FiniteMonoid& m, ElementSet seed);

// The monoid e*M*e at an idempotent e, with identity e. Carrier order: e
// first, then the remaining elements ascending; embedding maps local index
// to ambient element.
struct LocalSubmonoid {
  FiniteMonoid monoid;
  std::vector<int> embedding;
};
LocalSubmonoid local_submonoid(const FiniteMonoid& m, int e);

// All triples with e*e = e, beta*beta_prime = 1 and beta*e = beta, sorted
// lexicographically.
struct MoritaWitness {
  int e, beta, beta_prime;
  bool operator==(const MoritaWitness&) const = default;
};
std::vector<MoritaWitness> morita_witnesses(const FiniteMonoid& m);

// Some isomorphism a -> b fixing identities, or nullopt.
std::optional<std::vector<int>> monoid_isomorphism(const FiniteMonoid& a,
                                                   const FiniteMonoid& b);

// All right ideals (I*M inside I), including the empty set and M itself,
// in canonical order.
std::vector<ElementSet> right_ideals(const FiniteMonoid& m);

FiniteMonoid opposite(const FiniteMonoid& m);

struct MonoidProfile {
  bool is_group = false;
  bool has_right_absorbing = false;  // z with z*m = z for all m
  bool has_left_absorbing = false;   // z with m*z = z for all m
  bool has_zero = false;             // absorbing on both sides
  bool is_right_ore = false;         // aM and bM always intersect
  bool is_right_collapsible = false; // forall a,b exists c: a*c = b*c
  bool is_left_cancellative = false;
  bool is_right_cancellative = false;
  int right_ideal_count = 0;
};
MonoidProfile algebraic_profile(const FiniteMonoid& m);

// All monoids of order n up to isomorphism, deterministic order (sorted
// canonical forms). n < 1 is OutOfRange; n > 5 is SizeTooLarge.
std::vector<FiniteMonoid> enumerate_monoids(int n);

// Helpers shared across modules.
std::string set_to_string(ElementSet s);

}  // namespace monoidlab

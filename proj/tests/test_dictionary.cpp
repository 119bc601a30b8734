#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "monoidlab/dictionary.hpp"

using namespace monoidlab;
using fixtures::m3;
using fixtures::z2;
using fixtures::z3;

namespace {

// {1, z} with z absorbing on both sides
FiniteMonoid sl2() { return validate_monoid({{0, 1}, {1, 1}}).monoid; }

int right_absorbing_count(const FiniteMonoid& m) {
  int count = 0;
  for (int i = 0; i < m.size; ++i) {
    bool constant = true;
    for (int j = 0; j < m.size; ++j)
      if (m.mul(i, j) != i) constant = false;
    if (constant) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("profile flags on reference monoids") {
  ToposProfile p = topos_profile(m3());
  CHECK(p.strongly_connected);
  CHECK_FALSE(p.de_morgan);
  CHECK(p.local_);
  CHECK_FALSE(p.colocal);
  CHECK_FALSE(p.totally_connected);
  CHECK_FALSE(p.boolean_atomic);
  CHECK_FALSE(p.bilocal_quality_type);

  ToposProfile g = topos_profile(z2());
  CHECK(g.boolean_atomic);
  CHECK(g.de_morgan);
  CHECK_FALSE(g.strongly_connected);
  CHECK_FALSE(g.local_);
  CHECK_FALSE(g.totally_connected);

  ToposProfile s = topos_profile(sl2());
  CHECK(s.bilocal_quality_type);
  CHECK(s.local_);
  CHECK(s.colocal);
  CHECK(s.de_morgan);
  CHECK(s.totally_connected);
  CHECK(s.strongly_connected);
  CHECK_FALSE(s.boolean_atomic);

  ToposProfile t = topos_profile(validate_monoid({{0}}).monoid);
  CHECK(t.boolean_atomic);
  CHECK(t.totally_connected);
  CHECK(t.bilocal_quality_type);
  CHECK(t.strongly_connected);
}

TEST_CASE("profile entries carry plain-language notes") {
  auto entries = profile_entries(topos_profile(m3()));
  REQUIRE(entries.size() == 9);
  CHECK(entries[0].name == "boolean_atomic");
  CHECK(entries[8].name == "two_valued");
  for (const auto& e : entries) CHECK_FALSE(e.note.empty());
  CHECK(entries[2].value);        // local
  CHECK_FALSE(entries[1].value);  // de_morgan
}

TEST_CASE("corpus is deterministic and capped") {
  auto a = dictionary_corpus(m3(), 5);
  auto b = dictionary_corpus(m3(), 5);
  CHECK(a == b);
  CHECK(a.size() >= 3);  // at least the three quotients
  for (const FiniteMSet& x : a) CHECK(x.size() <= 5);
}

TEST_CASE("global sections crosscheck") {
  GammaCrosscheck gm = crosscheck_gamma(m3(), 5);
  CHECK(gm.quotient_fixed_points.monoid_side);
  CHECK(gm.quotient_fixed_points.topos_side);
  CHECK(gm.all_agree());

  GammaCrosscheck gz = crosscheck_gamma(z2(), 5);
  CHECK_FALSE(gz.quotient_fixed_points.monoid_side);
  CHECK_FALSE(gz.quotient_fixed_points.topos_side);
  CHECK_FALSE(gz.gamma_surjective_on_epis.topos_side);
  CHECK(gz.all_agree());
  CHECK_FALSE(gz.quotient_fixed_points.detail.empty());

  CHECK(crosscheck_gamma(validate_monoid({{0}}).monoid, 5).all_agree());

  for (int n = 1; n <= 3; ++n)
    for (const FiniteMonoid& m : enumerate_monoids(n))
      CHECK(crosscheck_gamma(m, 5).all_agree());
}

TEST_CASE("components crosscheck") {
  CCrosscheck cm = crosscheck_c(m3(), 5);
  CHECK_FALSE(cm.omega_two_components.monoid_side);
  CHECK(components(omega(m3())).count == 1);
  CHECK_FALSE(cm.equalizer_preservation.topos_side);
  CHECK(cm.principal_products_connected.topos_side);
  CHECK(cm.all_agree());

  CCrosscheck cs = crosscheck_c(sl2(), 5);
  CHECK(cs.omega_two_components.monoid_side);
  CHECK(components(omega(sl2())).count == 2);
  CHECK(cs.equalizer_preservation.topos_side);
  CHECK(cs.all_agree());

  CCrosscheck cg = crosscheck_c(z3(), 5);
  CHECK(components(omega(z3())).count == 2);
  CHECK_FALSE(cg.equalizer_preservation.topos_side);
  CHECK(cg.all_agree());

  for (int n = 1; n <= 3; ++n)
    for (const FiniteMonoid& m : enumerate_monoids(n))
      CHECK(crosscheck_c(m, 5).all_agree());
}

TEST_CASE("fixed points into components") {
  AlphaMap ar = alpha_map(regular_mset(m3()));
  CHECK(ar.map == std::vector<int>{0, 0});
  CHECK(ar.epi);
  CHECK_FALSE(ar.mono);

  AlphaMap at = alpha_map(terminal_mset(z2()));
  CHECK(at.iso);

  for (int n = 1; n <= 3; ++n)
    for (const FiniteMonoid& m : enumerate_monoids(n)) {
      bool all_iso = true;
      for (const RightCongruence& r : right_congruences(m))
        if (!alpha_map(quotient(m, r)).iso) all_iso = false;
      CHECK(all_iso == algebraic_profile(m).has_zero);
    }
}

TEST_CASE("complemented subobjects characterize groups") {
  CHECK(all_subobjects_complemented(regular_mset(z2())));
  CHECK_FALSE(all_subobjects_complemented(regular_mset(m3())));

  for (int n = 1; n <= 3; ++n)
    for (const FiniteMonoid& m : enumerate_monoids(n)) {
      bool all = true;
      for (const FiniteMSet& x : dictionary_corpus(m, 5))
        if (!all_subobjects_complemented(x)) all = false;
      CHECK(all == algebraic_profile(m).is_group);
    }
}

TEST_CASE("least ideal reading of left absorption") {
  LeastIdealReport rm = least_ideal_report(m3());
  CHECK_FALSE(rm.exists);  // {a} and {b} are incomparable minimal ideals

  LeastIdealReport rs = least_ideal_report(sl2());
  CHECK(rs.exists);
  CHECK(rs.ideal == fixtures::set_of({1}));
  CHECK(rs.trivial_endos);

  LeastIdealReport rg = least_ideal_report(z2());
  CHECK(rg.exists);
  CHECK(rg.ideal == ElementSet::full(2));
  CHECK_FALSE(rg.trivial_endos);

  for (int n = 1; n <= 4; ++n)
    for (const FiniteMonoid& m : enumerate_monoids(n)) {
      LeastIdealReport rep = least_ideal_report(m);
      CHECK((rep.exists && rep.trivial_endos) ==
            algebraic_profile(m).has_left_absorbing);
    }
}

TEST_CASE("profile invariants across small orders") {
  for (int n = 1; n <= 3; ++n)
    for (const FiniteMonoid& m : enumerate_monoids(n)) {
      ToposProfile p = topos_profile(m);
      if (p.bilocal_quality_type) {
        CHECK(p.local_);
        CHECK(p.colocal);
      }
      CHECK(p.totally_connected == (p.de_morgan && p.strongly_connected));
      CHECK(p.strongly_compact);
      CHECK(p.two_valued);
      CHECK(fixed_points(omega(m)).size() == 2);

      int omega_comps = components(omega(m)).count;
      CHECK((omega_comps == 1) == !p.de_morgan);
      CHECK((right_absorbing_count(m) >= 2) ==
            (p.local_ && omega_comps == 1));
    }
}

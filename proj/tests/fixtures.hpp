// Small monoids used across the test binaries.
#pragma once

#include <initializer_list>

#include "monoidlab/actions.hpp"
#include "monoidlab/monoid.hpp"

namespace fixtures {

using monoidlab::ElementSet;
using monoidlab::FiniteMonoid;

// identity plus two right-absorbing elements a = 1, b = 2
inline FiniteMonoid m3() {
  return monoidlab::validate_monoid({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}).monoid;
}

inline FiniteMonoid z2() {
  return monoidlab::validate_monoid({{0, 1}, {1, 0}}).monoid;
}

inline FiniteMonoid z3() {
  return monoidlab::validate_monoid({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}).monoid;
}

inline FiniteMonoid z4() {
  return monoidlab::validate_monoid(
             {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}})
      .monoid;
}

// {1, a, z} with a*a = z and z absorbing
inline FiniteMonoid nil3() {
  return monoidlab::validate_monoid({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}).monoid;
}

// full transformation monoid on 2 points, product = apply left then right;
// 0 = id, 1 = swap, 2 = constant 0, 3 = constant 1
inline FiniteMonoid t2() {
  std::vector<std::vector<int>> maps = {{0, 1}, {1, 0}, {0, 0}, {1, 1}};
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int f = 0; f < 4; ++f)
    for (int g = 0; g < 4; ++g) {
      std::vector<int> h = {maps[g][maps[f][0]], maps[g][maps[f][1]]};
      for (int k = 0; k < 4; ++k)
        if (maps[k] == h) table[f][g] = k;
    }
  return monoidlab::validate_monoid(table).monoid;
}

inline ElementSet set_of(std::initializer_list<int> xs) {
  ElementSet s;
  for (int x : xs) s.add(x);
  return s;
}

inline monoidlab::FiniteMSet disjoint_union(const monoidlab::FiniteMSet& a,
                                            const monoidlab::FiniteMSet& b) {
  std::vector<std::vector<int>> action = a.action;
  for (const auto& row : b.action) {
    action.push_back(row);
    for (int& v : action.back()) v += a.size();
  }
  return monoidlab::make_mset(a.monoid, action);
}

}  // namespace fixtures

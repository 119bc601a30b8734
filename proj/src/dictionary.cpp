#include "monoidlab/dictionary.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace monoidlab {

ToposProfile topos_profile(const FiniteMonoid& m) {
  MonoidProfile p = algebraic_profile(m);
  ToposProfile t;
  t.boolean_atomic = p.is_group;
  t.de_morgan = p.is_right_ore;
  t.local_ = p.has_right_absorbing;
  t.colocal = p.has_left_absorbing;
  t.totally_connected = p.is_right_collapsible;
  t.bilocal_quality_type = p.has_zero;
  FiniteMSet reg = regular_mset(m);
  t.strongly_connected = components(product(reg, reg).object).count == 1;
  t.strongly_compact = true;
  t.two_valued = true;
  return t;
}

std::vector<ProfileEntry> profile_entries(const ToposProfile& p) {
  return {
      {"boolean_atomic", p.boolean_atomic, "the monoid is a group"},
      {"de_morgan", p.de_morgan,
       "any two principal right ideals intersect"},
      {"local", p.local_, "some element is right absorbing"},
      {"colocal", p.colocal, "some element is left absorbing"},
      {"totally_connected", p.totally_connected,
       "any two elements are merged by right multiplication with a common "
       "element"},
      {"strongly_connected", p.strongly_connected,
       "the action on pairs by simultaneous right multiplication is "
       "indecomposable"},
      {"bilocal_quality_type", p.bilocal_quality_type,
       "the monoid has a two-sided absorbing element"},
      {"strongly_compact", p.strongly_compact,
       "whenever right ideals jointly cover the monoid, finitely many of "
       "them already do; automatic at finite size"},
      {"two_valued", p.two_valued,
       "the only invariant right ideals are the empty one and the whole "
       "monoid"},
  };
}

namespace {

FiniteMSet disjoint_sum(const FiniteMSet& a, const FiniteMSet& b) {
  int n = a.monoid.size;
  std::vector<std::vector<int>> act(a.size() + b.size(),
                                    std::vector<int>(n));
  for (int x = 0; x < a.size(); ++x)
    for (int m = 0; m < n; ++m) act[x][m] = a.act(x, m);
  for (int y = 0; y < b.size(); ++y)
    for (int m = 0; m < n; ++m) act[a.size() + y][m] = a.size() + b.act(y, m);
  return make_mset(a.monoid, std::move(act));
}

MSetMap point_map(const FiniteMSet& reg, const FiniteMSet& x, int p) {
  MSetMap f{reg, x, std::vector<int>(reg.size())};
  for (int m = 0; m < reg.size(); ++m) f.map[m] = x.act(p, m);
  return f;
}

void push_unique(std::vector<FiniteMSet>& out, FiniteMSet x) {
  if (std::find(out.begin(), out.end(), x) == out.end())
    out.push_back(std::move(x));
}

}  // namespace

std::vector<FiniteMSet> dictionary_corpus(const FiniteMonoid& m,
                                          int size_cap) {
  std::vector<FiniteMSet> out;
  std::vector<FiniteMSet> quots;
  for (const RightCongruence& r : right_congruences(m))
    quots.push_back(quotient(m, r));
  for (const FiniteMSet& q : quots) push_unique(out, q);
  for (size_t i = 0; i < quots.size(); ++i)
    for (size_t j = i; j < quots.size(); ++j) {
      if (quots[i].size() * quots[j].size() <= size_cap)
        push_unique(out, product(quots[i], quots[j]).object);
      if (quots[i].size() + quots[j].size() <= size_cap)
        push_unique(out, disjoint_sum(quots[i], quots[j]));
    }

  FiniteMSet reg = regular_mset(m);
  std::mt19937 rng(2654435769u);
  int made = 0;
  for (int attempt = 0; attempt < 32 && made < 6; ++attempt) {
    const FiniteMSet& x = out[rng() % out.size()];
    if (x.size() < 2) continue;
    int p = static_cast<int>(rng() % x.size());
    int q = static_cast<int>(rng() % x.size());
    if (p == q) continue;
    QuotientMap co = coequalizer(point_map(reg, x, p), point_map(reg, x, q));
    if (co.object.size() > size_cap) continue;
    push_unique(out, co.object);
    ++made;
  }
  return out;
}

namespace {

bool is_surjective(const MSetMap& f) {
  std::vector<char> hit(f.target.size(), 0);
  for (int v : f.map) hit[v] = 1;
  return std::find(hit.begin(), hit.end(), 0) == hit.end();
}

// Objects with few enough pieces that hom-set sweeps stay small.
std::vector<const FiniteMSet*> sweepable(const std::vector<FiniteMSet>& corpus) {
  std::vector<const FiniteMSet*> out;
  for (const FiniteMSet& x : corpus)
    if (components(x).count <= 2) out.push_back(&x);
  return out;
}

}  // namespace

GammaCrosscheck crosscheck_gamma(const FiniteMonoid& m, int size_cap) {
  MonoidProfile prof = algebraic_profile(m);
  GammaCrosscheck out;
  out.quotient_fixed_points.monoid_side = prof.has_right_absorbing;
  out.gamma_surjective_on_epis.monoid_side = prof.has_right_absorbing;

  bool all_quots_fixed = true;
  std::string witness;
  for (const RightCongruence& r : right_congruences(m)) {
    FiniteMSet q = quotient(m, r);
    if (fixed_points(q).empty()) {
      all_quots_fixed = false;
      if (witness.empty())
        witness = "quotient with " + std::to_string(q.size()) +
                  " classes has no fixed point";
    }
  }
  out.quotient_fixed_points.topos_side = all_quots_fixed;
  out.quotient_fixed_points.detail =
      all_quots_fixed ? "every quotient has a fixed point" : witness;

  std::vector<FiniteMSet> corpus = dictionary_corpus(m, size_cap);
  std::vector<const FiniteMSet*> objs = sweepable(corpus);
  bool sections_onto = true;
  int epis_checked = 0;
  std::string epi_witness;
  for (const FiniteMSet* x : objs)
    for (const FiniteMSet* y : objs)
      for (const MSetMap& f : hom_set(*x, *y)) {
        if (!is_surjective(f)) continue;
        ++epis_checked;
        for (int fy : fixed_points(*y)) {
          bool hit = false;
          for (int fx : fixed_points(*x))
            if (f.map[fx] == fy) { hit = true; break; }
          if (!hit) {
            sections_onto = false;
            if (epi_witness.empty())
              epi_witness = "a surjection " + std::to_string(x->size()) +
                            " -> " + std::to_string(y->size()) +
                            " misses a fixed point";
          }
        }
      }
  out.gamma_surjective_on_epis.topos_side = sections_onto;
  out.gamma_surjective_on_epis.detail =
      sections_onto ? "fixed points map onto fixed points across " +
                          std::to_string(epis_checked) +
                          " surjections between corpus actions with at most "
                          "two pieces"
                    : epi_witness;
  return out;
}

CCrosscheck crosscheck_c(const FiniteMonoid& m, int size_cap) {
  MonoidProfile prof = algebraic_profile(m);
  CCrosscheck out;

  out.omega_two_components.monoid_side = prof.is_right_ore;
  int omega_comps = components(omega(m)).count;
  out.omega_two_components.topos_side = omega_comps == 2;
  out.omega_two_components.detail =
      "the right ideal classifier has " + std::to_string(omega_comps) +
      " components";

  out.equalizer_preservation.monoid_side = prof.is_right_collapsible;
  std::vector<FiniteMSet> corpus = dictionary_corpus(m, size_cap);
  std::vector<const FiniteMSet*> objs = sweepable(corpus);
  bool eq_preserved = true;
  int pairs_checked = 0;
  std::string eq_witness;
  for (const FiniteMSet* x : objs)
    for (const FiniteMSet* y : objs) {
      std::vector<MSetMap> homs = hom_set(*x, *y);
      Components cx = components(*x);
      Components cy = components(*y);
      for (const MSetMap& f : homs)
        for (const MSetMap& g : homs) {
          ++pairs_checked;
          // components of the equalizer, an action-closed subset of x
          std::vector<int> sub;
          for (int p = 0; p < x->size(); ++p)
            if (f.map[p] == g.map[p]) sub.push_back(p);
          std::vector<int> root(x->size());
          for (int p = 0; p < x->size(); ++p) root[p] = p;
          auto find = [&](int p) {
            while (root[p] != p) p = root[p] = root[root[p]];
            return p;
          };
          for (int p : sub)
            for (int mm = 0; mm < m.size; ++mm)
              root[find(p)] = find(x->act(p, mm));
          std::vector<int> comp_of(x->size(), -1);
          int sub_comps = 0;
          for (int p : sub) {
            int r = find(p);
            if (comp_of[r] < 0) comp_of[r] = sub_comps++;
            comp_of[p] = comp_of[r];
          }
          // the equalizer of the induced maps on components
          std::vector<char> in_eq(cx.count, 0);
          int eq_size = 0;
          for (int c = 0; c < cx.count; ++c) {
            int rep = 0;
            while (cx.component_of[rep] != c) ++rep;
            if (cy.component_of[f.map[rep]] == cy.component_of[g.map[rep]]) {
              in_eq[c] = 1;
              ++eq_size;
            }
          }
          // canonical comparison: each component of the restricted part
          // must land in the set-level equalizer, injectively and onto
          std::vector<int> image(sub_comps, -1);
          bool ok = sub_comps == eq_size;
          if (ok)
            for (int p : sub) {
              int c = cx.component_of[p];
              if (!in_eq[c]) { ok = false; break; }
              int& slot = image[comp_of[p]];
              if (slot < 0)
                slot = c;
              else if (slot != c) { ok = false; break; }
            }
          if (ok) {
            std::vector<char> hit(cx.count, 0);
            for (int v : image)
              if (v >= 0) {
                if (hit[v]) { ok = false; break; }
                hit[v] = 1;
              }
          }
          if (!ok && eq_witness.empty()) {
            eq_preserved = false;
            eq_witness = "a parallel pair " + std::to_string(x->size()) +
                         " -> " + std::to_string(y->size()) +
                         " has an equalizer with the wrong components";
          }
          if (!ok) eq_preserved = false;
        }
    }
  out.equalizer_preservation.topos_side = eq_preserved;
  out.equalizer_preservation.detail =
      eq_preserved ? "equalizer components agree across " +
                         std::to_string(pairs_checked) +
                         " parallel pairs between corpus actions with at "
                         "most two pieces"
                   : eq_witness;

  FiniteMSet reg = regular_mset(m);
  out.principal_products_connected.monoid_side =
      components(product(reg, reg).object).count == 1;
  std::vector<FiniteMSet> quots;
  for (const RightCongruence& r : right_congruences(m))
    quots.push_back(quotient(m, r));
  bool all_connected = true;
  std::string prod_witness;
  for (size_t i = 0; i < quots.size() && all_connected; ++i)
    for (size_t j = i; j < quots.size(); ++j) {
      int c = components(product(quots[i], quots[j]).object).count;
      if (c != 1) {
        all_connected = false;
        prod_witness = "a product of quotients with " +
                       std::to_string(quots[i].size()) + " and " +
                       std::to_string(quots[j].size()) + " classes has " +
                       std::to_string(c) + " components";
        break;
      }
    }
  out.principal_products_connected.topos_side = all_connected;
  out.principal_products_connected.detail =
      all_connected ? "every product of two quotients is indecomposable"
                    : prod_witness;
  return out;
}

AlphaMap alpha_map(const FiniteMSet& x) {
  AlphaMap out;
  std::vector<int> fixed = fixed_points(x);
  Components comps = components(x);
  out.map.reserve(fixed.size());
  for (int p : fixed) out.map.push_back(comps.component_of[p]);
  std::vector<int> hits(comps.count, 0);
  for (int c : out.map) ++hits[c];
  out.mono = std::all_of(hits.begin(), hits.end(),
                         [](int h) { return h <= 1; });
  out.epi = std::all_of(hits.begin(), hits.end(),
                        [](int h) { return h >= 1; });
  out.iso = out.mono && out.epi;
  return out;
}

bool all_subobjects_complemented(const FiniteMSet& x) {
  if (x.size() > 20) throw SizeTooLarge("subobject scan needs at most 20 points");
  int n = x.size();
  auto closed = [&](uint32_t s) {
    for (int p = 0; p < n; ++p) {
      if (!((s >> p) & 1)) continue;
      for (int m = 0; m < x.monoid.size; ++m)
        if (!((s >> x.act(p, m)) & 1)) return false;
    }
    return true;
  };
  uint32_t all = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
  for (uint32_t s = 0; s <= all; ++s)
    if (closed(s) && !closed(all & ~s)) return false;
  return true;
}

LeastIdealReport least_ideal_report(const FiniteMonoid& m) {
  ElementSet inter = ElementSet::full(m.size);
  for (int a = 0; a < m.size; ++a) {
    ElementSet principal;
    for (int x = 0; x < m.size; ++x) principal.add(m.mul(a, x));
    inter = inter & principal;
  }
  LeastIdealReport rep;
  rep.ideal = inter;
  rep.exists = !inter.none();
  if (!rep.exists) return rep;

  std::vector<int> elems = inter.elements();
  std::vector<int> pos(m.size, -1);
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) pos[elems[i]] = i;
  std::vector<std::vector<int>> act(elems.size(), std::vector<int>(m.size));
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    for (int x = 0; x < m.size; ++x) act[i][x] = pos[m.mul(elems[i], x)];
  FiniteMSet ideal_set = make_mset(m, std::move(act));
  rep.trivial_endos = hom_set(ideal_set, ideal_set).size() == 1;
  return rep;
}

}  // namespace monoidlab

#include "monoidlab/fraisse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "monoidlab/errors.hpp"

namespace monoidlab {

namespace {

constexpr long long kCarrierCap = 1ll << 22;

bool strictly_increasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

bool injective_map(const std::vector<int>& v, long long cod_size) {
  std::vector<char> seen(cod_size, 0);
  for (int x : v) {
    if (x < 0 || x >= cod_size || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::vector<Morph> lin_hom(int a, int b) {
  std::vector<Morph> out;
  if (a < 0 || b < 0 || a > b) return out;
  std::vector<int> pick(a);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    out.push_back(Morph{a, b, pick});
    int i = a - 1;
    while (i >= 0 && pick[i] == b - a + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int t = i + 1; t < a; ++t) pick[t] = pick[t - 1] + 1;
  }
  return out;
}

// Amalgamates e: A -> B and f: A -> C over their common source: between
// consecutive anchors the B-only elements come first, then the C-only
// ones. The result has b + c - a elements.
CostabilitySquare lin_costability(const Morph& e, const Morph& f) {
  int a = e.dom, b = e.cod, c = f.cod;
  std::vector<int> gm(b, -1), em(c, -1);
  int pos = 0;
  for (int i = 0; i <= a; ++i) {
    int blo = (i == 0) ? 0 : e.map[i - 1] + 1;
    int bhi = (i == a) ? b : e.map[i];
    int clo = (i == 0) ? 0 : f.map[i - 1] + 1;
    int chi = (i == a) ? c : f.map[i];
    for (int x = blo; x < bhi; ++x) gm[x] = pos++;
    for (int y = clo; y < chi; ++y) em[y] = pos++;
    if (i < a) {
      gm[e.map[i]] = pos;
      em[f.map[i]] = pos;
      ++pos;
    }
  }
  return {Morph{c, pos, em}, Morph{b, pos, gm}};
}

// The new object straddles the stage: its front half sits below every
// stage element, its back half above.
Cospan lin_joint(int u, int n) {
  int front = (n + 1) / 2;
  Cospan co;
  co.left = Morph{u, u + n, std::vector<int>(u)};
  co.right = Morph{n, u + n, std::vector<int>(n)};
  for (int x = 0; x < u; ++x) co.left.map[x] = front + x;
  for (int y = 0; y < n; ++y) co.right.map[y] = y < front ? y : u + y;
  return co;
}

void inj_rec(int a, int b, std::vector<int>& cur, std::vector<char>& used,
             std::vector<Morph>& out) {
  if (static_cast<int>(cur.size()) == a) {
    out.push_back(Morph{a, b, cur});
    return;
  }
  for (int v = 0; v < b; ++v) {
    if (used[v]) continue;
    used[v] = 1;
    cur.push_back(v);
    inj_rec(a, b, cur, used, out);
    cur.pop_back();
    used[v] = 0;
  }
}

std::vector<Morph> inj_hom(int a, int b) {
  std::vector<Morph> out;
  if (a < 0 || b < 0 || a > b) return out;
  std::vector<int> cur;
  std::vector<char> used(b, 0);
  inj_rec(a, b, cur, used, out);
  return out;
}

CostabilitySquare inj_costability(const Morph& e, const Morph& f) {
  int a = e.dom, b = e.cod, c = f.cod;
  std::vector<int> gm(b, -1);
  for (int x = 0; x < a; ++x) gm[e.map[x]] = f.map[x];
  int next = c;
  for (int y = 0; y < b; ++y)
    if (gm[y] < 0) gm[y] = next++;
  Morph ext{c, next, std::vector<int>(c)};
  std::iota(ext.map.begin(), ext.map.end(), 0);
  return {std::move(ext), Morph{b, next, std::move(gm)}};
}

Cospan inj_joint(int u, int n) {
  Cospan co;
  co.left = Morph{u, u + n, std::vector<int>(u)};
  co.right = Morph{n, u + n, std::vector<int>(n)};
  std::iota(co.left.map.begin(), co.left.map.end(), 0);
  std::iota(co.right.map.begin(), co.right.map.end(), u);
  return co;
}

long long cyc_size(int p, int k) {
  long long s = 1;
  for (int i = 0; i < k; ++i) {
    s *= p;
    if (s > kCarrierCap)
      throw SizeTooLarge("cyclic stage carrier exceeds the addressable cap");
  }
  return s;
}

Morph cyc_mult(int p, int a, int b, long long w) {
  long long pa = cyc_size(p, a), pb = cyc_size(p, b);
  Morph h{a, b, std::vector<int>(pa)};
  for (long long x = 0; x < pa; ++x)
    h.map[x] = static_cast<int>(x * w % pb);
  return h;
}

std::vector<Morph> cyc_hom(int p, int a, int b) {
  if (a < 0 || b < 0) return {};
  long long pa = cyc_size(p, a), pb = cyc_size(p, b);
  long long stepw = pb / std::min(pa, pb);
  std::vector<Morph> out;
  for (long long m = 0; m < std::min(pa, pb); ++m)
    out.push_back(cyc_mult(p, a, b, m * stepw));
  return out;
}

long long inv_mod(long long a, long long n) {
  long long r0 = n, r1 = a % n, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return ((s0 % n) + n) % n;
}

// Solves z * e(1) = p^(m-c) * f(1) mod p^m for the filler generator; the
// extension side embeds C into the larger of the two cyclic groups.
CostabilitySquare cyc_costability(int p, const Morph& e, const Morph& f) {
  int a = e.dom, b = e.cod, c = f.cod;
  int m = std::max(b, c);
  long long pm = cyc_size(p, m), pb = cyc_size(p, b), pc = cyc_size(p, c);
  long long z;
  if (a == 0) {
    z = pm / pb;
  } else {
    long long pba = pb / cyc_size(p, a);
    long long v = e.map[1] / pba;
    long long rhs = static_cast<long long>(f.map[1]) * (pm / pc) % pm;
    long long mod = pm / pba;
    z = rhs / pba % mod * inv_mod(v % mod, mod) % mod;
  }
  return {cyc_mult(p, c, m, pm / pc), cyc_mult(p, b, m, z)};
}

Cospan cyc_joint(int p, int a, int b) {
  int m = std::max(a, b);
  long long pm = cyc_size(p, m);
  return {cyc_mult(p, a, m, pm / cyc_size(p, a)),
          cyc_mult(p, b, m, pm / cyc_size(p, b))};
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Morph chain_segment(const std::vector<Morph>& links, const Morph& start,
                    int from, int to) {
  Morph h = start;
  for (int k = from; k < to; ++k) h = compose_maps(h, links[k]);
  return h;
}

}  // namespace

Morph compose_maps(const Morph& f, const Morph& g) {
  if (f.cod != g.dom)
    throw OutOfRange("composition needs matching middle object");
  Morph h{f.dom, g.cod, std::vector<int>(f.map.size())};
  for (std::size_t x = 0; x < f.map.size(); ++x) {
    int v = f.map[x];
    if (v < 0 || v >= static_cast<int>(g.map.size()))
      throw OutOfRange("map value outside the middle carrier");
    h.map[x] = g.map[v];
  }
  return h;
}

Morph identity_morph(const ExtensionSystem& s, int object) {
  long long n = s.object_size(object);
  Morph h{object, object, std::vector<int>(n)};
  std::iota(h.map.begin(), h.map.end(), 0);
  return h;
}

long long pair_index(long long a, long long b) {
  if (a < 0 || b < 0) throw OutOfRange("pair components must not be negative");
  return (a + b) * (a + b + 1) / 2 + b;
}

std::array<long long, 2> pair_decode(long long n) {
  if (n < 0) throw OutOfRange("pair index must not be negative");
  long long s = static_cast<long long>((std::sqrt(8.0 * n + 1) - 1) / 2);
  while (s > 0 && s * (s + 1) / 2 > n) --s;
  while ((s + 1) * (s + 2) / 2 <= n) ++s;
  long long b = n - s * (s + 1) / 2;
  return {s - b, b};
}

long long schedule_index(long long i, long long j, long long k) {
  return pair_index(pair_index(i, j), k);
}

std::array<long long, 3> schedule_decode(long long n) {
  auto [w, k] = pair_decode(n);
  auto [i, j] = pair_decode(w);
  return {i, j, k};
}

std::optional<Morph> extension_at(const ExtensionSystem& s, long long index) {
  if (index < 0) throw OutOfRange("extension index must not be negative");
  long long counter = 0;
  for (int diag = 0;; ++diag) {
    if (s.object_count >= 0 && diag >= s.object_count) return std::nullopt;
    for (int a = 0; a <= diag; ++a)
      for (int b = 0; b <= diag; ++b) {
        if (std::max(a, b) != diag) continue;
        if (s.object_count >= 0 &&
            (a >= s.object_count || b >= s.object_count))
          continue;
        for (const Morph& h : s.hom(a, b)) {
          if (!s.in_e(h)) continue;
          if (counter++ == index) return h;
        }
      }
  }
}

Chain build_chain(std::shared_ptr<const ExtensionSystem> s, int steps,
                  int seed) {
  if (!s) throw OutOfRange("chain needs a system");
  if (steps < 0) throw OutOfRange("step count must not be negative");
  if (seed < 0 || (s->object_count >= 0 && seed >= s->object_count))
    throw OutOfRange("seed outside the object enumeration");
  Chain ch;
  ch.system = s;
  ch.stages.push_back(seed);
  for (int k = 0; k < steps; ++k) {
    auto [ei, sj, sk] = schedule_decode(k);
    ChainStep step{ei, sj, sk, false, -1};
    int cur = ch.stages[k];
    Morph first = identity_morph(*s, cur);
    if (auto t = extension_at(*s, ei)) {
      auto spans = s->hom(t->dom, ch.stages[static_cast<int>(sk)]);
      if (sj < static_cast<long long>(spans.size())) {
        Morph anchor = chain_segment(ch.links, spans[static_cast<int>(sj)],
                                     static_cast<int>(sk), k);
        CostabilitySquare sq = s->costability(*t, anchor);
        if (sq.extension.dom != cur || sq.filler.dom != t->cod ||
            sq.extension.cod != sq.filler.cod)
          throw OracleViolation("costability square has mismatched ends");
        if (!s->in_e(sq.extension))
          throw OracleViolation("costability leg left the extension class");
        if (!(compose_maps(anchor, sq.extension) ==
              compose_maps(*t, sq.filler)))
          throw OracleViolation("costability square does not commute");
        first = std::move(sq.extension);
        step.applied = true;
      }
    }
    Morph link = first;
    if (s->object_count < 0 || k + 1 < s->object_count) {
      Cospan co = s->joint_embed(first.cod, k + 1);
      if (co.left.dom != first.cod || co.right.dom != k + 1 ||
          co.left.cod != co.right.cod)
        throw OracleViolation("joint embedding has mismatched ends");
      if (!s->in_e(co.left) || !s->in_e(co.right))
        throw OracleViolation("joint embedding leg left the extension class");
      link = compose_maps(first, co.left);
      step.embedded = k + 1;
    }
    if (!s->in_e(link))
      throw OracleViolation("chain link left the extension class");
    ch.stages.push_back(link.cod);
    ch.links.push_back(std::move(link));
    ch.provenance.push_back(step);
  }
  return ch;
}

Morph chain_map(const Chain& ch, int from, int to) {
  if (from < 0 || to < from || to >= static_cast<int>(ch.stages.size()))
    throw OutOfRange("stage indices outside the built chain");
  return chain_segment(ch.links, identity_morph(*ch.system, ch.stages[from]),
                       from, to);
}

std::vector<ExtensionProblem> injectivity_deficit(const Chain& ch,
                                                  int stage_bound,
                                                  int problem_bound) {
  const ExtensionSystem& s = *ch.system;
  int last = static_cast<int>(ch.stages.size()) - 1;
  int anchor_max = std::min(problem_bound, last);
  int solve_max = std::min(stage_bound, last);
  long long objs = problem_bound;
  if (s.object_count >= 0) objs = std::min<long long>(objs, s.object_count);
  std::vector<ExtensionProblem> out;
  for (int a = 0; a < objs; ++a)
    for (int b = 0; b < objs; ++b)
      for (const Morph& e : s.hom(a, b)) {
        if (!s.in_e(e)) continue;
        for (int k = 0; k <= anchor_max; ++k)
          for (const Morph& f : s.hom(a, ch.stages[k])) {
            bool solved = false;
            for (int k2 = k; k2 <= solve_max && !solved; ++k2) {
              Morph pushed = chain_segment(ch.links, f, k, k2);
              for (const Morph& g : s.hom(b, ch.stages[k2]))
                if (compose_maps(e, g) == pushed) {
                  solved = true;
                  break;
                }
            }
            if (!solved) out.push_back({e, f, k});
          }
      }
  return out;
}

std::optional<int> universality_stage(const Chain& ch, int object) {
  const ExtensionSystem& s = *ch.system;
  if (object < 0 || (s.object_count >= 0 && object >= s.object_count))
    throw OutOfRange("object outside the enumeration");
  for (int k = 0; k < static_cast<int>(ch.stages.size()); ++k)
    for (const Morph& h : s.hom(object, ch.stages[k]))
      if (s.in_e(h)) return k;
  return std::nullopt;
}

ExtensionSystem builtin_system(const std::string& name, int p) {
  ExtensionSystem s;
  s.name = name;
  s.object_count = -1;
  if (name == "lin_orders") {
    s.object_size = [](int n) { return static_cast<long long>(n); };
    s.object_name = [](int n) { return "[" + std::to_string(n) + "]"; };
    s.hom = lin_hom;
    s.in_e = [](const Morph& h) { return strictly_increasing(h.map); };
    s.costability = lin_costability;
    s.joint_embed = lin_joint;
    return s;
  }
  if (name == "finset_inj") {
    s.object_size = [](int n) { return static_cast<long long>(n); };
    s.object_name = [](int n) { return "{" + std::to_string(n) + "}"; };
    s.hom = inj_hom;
    s.in_e = [](const Morph& h) {
      return injective_map(h.map, static_cast<long long>(h.cod));
    };
    s.costability = inj_costability;
    s.joint_embed = inj_joint;
    return s;
  }
  if (name == "cyclic_p_groups") {
    if (!is_prime(p)) throw OutOfRange("cyclic system needs a prime");
    s.object_size = [p](int n) { return cyc_size(p, n); };
    s.object_name = [p](int n) {
      return "C" + std::to_string(cyc_size(p, n));
    };
    s.hom = [p](int a, int b) { return cyc_hom(p, a, b); };
    s.in_e = [p](const Morph& h) {
      return injective_map(h.map, cyc_size(p, h.cod));
    };
    s.costability = [p](const Morph& e, const Morph& f) {
      return cyc_costability(p, e, f);
    };
    s.joint_embed = [p](int a, int b) { return cyc_joint(p, a, b); };
    return s;
  }
  throw UnknownSystem("no builtin system named '" + name + "'");
}

FiniteCategory validate_category(FiniteCategory c) {
  int no = static_cast<int>(c.objects.size());
  int nm = static_cast<int>(c.morphisms.size());
  if (static_cast<int>(c.dom.size()) != nm ||
      static_cast<int>(c.cod.size()) != nm)
    throw MalformedCategory("morphism end tables disagree with the list");
  if (static_cast<int>(c.identity.size()) != no)
    throw MalformedCategory("need exactly one identity per object");
  if (static_cast<int>(c.compose.size()) != nm)
    throw MalformedCategory("composition table must cover all morphisms");
  for (const auto& row : c.compose)
    if (static_cast<int>(row.size()) != nm)
      throw MalformedCategory("composition table must cover all morphisms");
  for (int f = 0; f < nm; ++f)
    if (c.dom[f] < 0 || c.dom[f] >= no || c.cod[f] < 0 || c.cod[f] >= no)
      throw MalformedCategory("morphism ends out of range");
  for (int o = 0; o < no; ++o) {
    int e = c.identity[o];
    if (e < 0 || e >= nm || c.dom[e] != o || c.cod[e] != o)
      throw MalformedCategory("identity has wrong ends");
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      int h = c.compose[f][g];
      if (c.cod[f] != c.dom[g]) {
        if (h != -1)
          throw MalformedCategory("composite given for a non-composable pair");
        continue;
      }
      if (h < 0 || h >= nm)
        throw MalformedCategory("missing composite for a composable pair");
      if (c.dom[h] != c.dom[f] || c.cod[h] != c.cod[g])
        throw MalformedCategory("composite has wrong ends");
    }
  for (int f = 0; f < nm; ++f)
    if (c.compose[c.identity[c.dom[f]]][f] != f ||
        c.compose[f][c.identity[c.cod[f]]] != f)
      throw MalformedCategory("identity laws fail");
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (c.cod[f] != c.dom[g]) continue;
      for (int h = 0; h < nm; ++h) {
        if (c.cod[g] != c.dom[h]) continue;
        if (c.compose[c.compose[f][g]][h] != c.compose[f][c.compose[g][h]])
          throw MalformedCategory("composition is not associative");
      }
    }
  return c;
}

std::vector<int> split_epimorphisms(const FiniteCategory& c) {
  int nm = static_cast<int>(c.morphisms.size());
  std::vector<int> out;
  for (int f = 0; f < nm; ++f)
    for (int sct = 0; sct < nm; ++sct)
      if (c.dom[sct] == c.cod[f] && c.cod[sct] == c.dom[f] &&
          c.compose[sct][f] == c.identity[c.cod[f]]) {
        out.push_back(f);
        break;
      }
  return out;
}

std::vector<int> split_monomorphisms(const FiniteCategory& c) {
  int nm = static_cast<int>(c.morphisms.size());
  std::vector<int> out;
  for (int f = 0; f < nm; ++f)
    for (int r = 0; r < nm; ++r)
      if (c.dom[r] == c.cod[f] && c.cod[r] == c.dom[f] &&
          c.compose[f][r] == c.identity[c.dom[f]]) {
        out.push_back(f);
        break;
      }
  return out;
}

FiniteCategory shared_point_category() {
  // Concrete model: both outer objects are two-point sets, the shared
  // object is the point the sections pick out.
  struct Arrow {
    const char* name;
    int d, c;
    std::vector<int> map;
  };
  const std::vector<Arrow> arrows = {
      {"id_X", 0, 0, {0, 1}}, {"id_1", 1, 1, {0}},  {"id_Y", 2, 2, {0, 1}},
      {"p", 0, 1, {0, 0}},    {"i", 1, 0, {0}},     {"q", 2, 1, {0, 0}},
      {"j", 1, 2, {0}},       {"e_X", 0, 0, {0, 0}}, {"e_Y", 2, 2, {0, 0}},
      {"f_XY", 0, 2, {0, 0}}, {"f_YX", 2, 0, {0, 0}},
  };
  FiniteCategory c;
  c.objects = {"X", "1", "Y"};
  int nm = static_cast<int>(arrows.size());
  for (const Arrow& a : arrows) {
    c.morphisms.push_back(a.name);
    c.dom.push_back(a.d);
    c.cod.push_back(a.c);
  }
  c.identity = {0, 1, 2};
  c.compose.assign(nm, std::vector<int>(nm, -1));
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (arrows[f].c != arrows[g].d) continue;
      std::vector<int> m(arrows[f].map.size());
      for (std::size_t x = 0; x < m.size(); ++x)
        m[x] = arrows[g].map[arrows[f].map[x]];
      for (int h = 0; h < nm; ++h)
        if (arrows[h].d == arrows[f].d && arrows[h].c == arrows[g].c &&
            arrows[h].map == m) {
          c.compose[f][g] = h;
          break;
        }
      if (c.compose[f][g] < 0)
        throw MalformedCategory("presentation is not closed");
    }
  return validate_category(std::move(c));
}

OfsReport ofs_validate(const FiniteCategory& raw, const std::vector<int>& t,
                       const std::vector<int>& m) {
  FiniteCategory c = validate_category(raw);
  int no = static_cast<int>(c.objects.size());
  int nm = static_cast<int>(c.morphisms.size());
  std::vector<char> in_t(nm, 0), in_m(nm, 0);
  for (int f : t) {
    if (f < 0 || f >= nm) throw MalformedCategory("class member out of range");
    in_t[f] = 1;
  }
  for (int f : m) {
    if (f < 0 || f >= nm) throw MalformedCategory("class member out of range");
    in_m[f] = 1;
  }
  std::vector<char> iso(nm, 0);
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      if (c.dom[g] == c.cod[f] && c.cod[g] == c.dom[f] &&
          c.compose[f][g] == c.identity[c.dom[f]] &&
          c.compose[g][f] == c.identity[c.dom[g]]) {
        iso[f] = 1;
        break;
      }

  OfsReport r;
  for (int h = 0; h < nm; ++h) {
    std::vector<std::pair<int, int>> facts;
    for (int tf = 0; tf < nm; ++tf) {
      if (!in_t[tf] || c.dom[tf] != c.dom[h]) continue;
      for (int mf = 0; mf < nm; ++mf)
        if (in_m[mf] && c.cod[tf] == c.dom[mf] && c.compose[tf][mf] == h)
          facts.emplace_back(tf, mf);
    }
    if (facts.empty() && r.factorization_ok) {
      r.factorization_ok = false;
      r.unfactored = h;
    }
    if (r.uniqueness_ok)
      for (std::size_t x = 0; x < facts.size() && r.uniqueness_ok; ++x)
        for (std::size_t y = x + 1; y < facts.size(); ++y) {
          auto [t1, m1] = facts[x];
          auto [t2, m2] = facts[y];
          bool linked = false;
          for (int phi = 0; phi < nm && !linked; ++phi)
            linked = iso[phi] && c.dom[phi] == c.cod[t1] &&
                     c.cod[phi] == c.cod[t2] && c.compose[t1][phi] == t2 &&
                     c.compose[phi][m2] == m1;
          if (!linked) {
            r.uniqueness_ok = false;
            r.ambiguous = {h, t1, m1, t2, m2};
            break;
          }
        }
  }

  for (int tf = 0; tf < nm && r.lifting_ok; ++tf) {
    if (!in_t[tf]) continue;
    for (int mf = 0; mf < nm && r.lifting_ok; ++mf) {
      if (!in_m[mf]) continue;
      for (int u = 0; u < nm && r.lifting_ok; ++u) {
        if (c.dom[u] != c.dom[tf] || c.cod[u] != c.dom[mf]) continue;
        for (int v = 0; v < nm; ++v) {
          if (c.dom[v] != c.cod[tf] || c.cod[v] != c.cod[mf]) continue;
          if (c.compose[tf][v] != c.compose[u][mf]) continue;
          int fillers = 0;
          for (int d = 0; d < nm; ++d)
            if (c.dom[d] == c.cod[tf] && c.cod[d] == c.dom[mf] &&
                c.compose[tf][d] == u && c.compose[d][mf] == v)
              ++fillers;
          if (fillers != 1) {
            r.lifting_ok = false;
            r.unliftable = {tf, mf, u, v};
            break;
          }
        }
      }
    }
  }

  for (int o = 0; o < no && r.stability_ok; ++o)
    if (!in_t[c.identity[o]]) {
      r.stability_ok = false;
      r.stability_axiom = 1;
      r.unstable = {c.identity[o], -1};
    }
  for (int f = 0; f < nm && r.stability_ok; ++f) {
    if (!in_t[f]) continue;
    for (int g = 0; g < nm; ++g)
      if (in_t[g] && c.cod[f] == c.dom[g] && !in_t[c.compose[f][g]]) {
        r.stability_ok = false;
        r.stability_axiom = 2;
        r.unstable = {f, g};
        break;
      }
  }
  for (int f = 0; f < nm && r.stability_ok; ++f) {
    if (!in_t[f]) continue;
    for (int g = 0; g < nm; ++g) {
      if (c.cod[g] != c.cod[f]) continue;
      bool square = false;
      for (int fp = 0; fp < nm && !square; ++fp) {
        if (!in_t[fp] || c.cod[fp] != c.dom[g]) continue;
        for (int gp = 0; gp < nm; ++gp)
          if (c.dom[gp] == c.dom[fp] && c.cod[gp] == c.dom[f] &&
              c.compose[fp][g] == c.compose[gp][f]) {
            square = true;
            break;
          }
      }
      if (!square) {
        r.stability_ok = false;
        r.stability_axiom = 3;
        r.unstable = {f, g};
        break;
      }
    }
    if (!r.stability_ok) break;
  }

  for (int a = 0; a < no && r.joint_covering_ok; ++a)
    for (int b = 0; b < no; ++b) {
      bool covered = false;
      for (int s = 0; s < nm && !covered; ++s) {
        if (!in_t[s] || c.cod[s] != a) continue;
        for (int rr = 0; rr < nm; ++rr)
          if (in_t[rr] && c.cod[rr] == b && c.dom[rr] == c.dom[s]) {
            covered = true;
            break;
          }
      }
      if (!covered) {
        r.joint_covering_ok = false;
        r.uncovered = {a, b};
        break;
      }
    }
  return r;
}

}  // namespace monoidlab

#include "monoidlab/actions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace monoidlab {

namespace {

void check_same_monoid(const FiniteMonoid& a, const FiniteMonoid& b,
                       const char* who) {
  if (!(a == b))
    throw MonoidMismatch(std::string(who) +
                         " requires both arguments over the same monoid");
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<int>& parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

// first-occurrence class ids for an arbitrary labeling
std::vector<int> normalize_labels(const std::vector<int>& labels, int* count) {
  std::map<int, int> seen;
  std::vector<int> out(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = seen.insert({labels[i], static_cast<int>(seen.size())});
    out[i] = it->second;
    (void)fresh;
  }
  if (count) *count = static_cast<int>(seen.size());
  return out;
}

RightCongruence congruence_from_labels(const FiniteMonoid& m,
                                       const std::vector<int>& labels) {
  RightCongruence r;
  r.monoid = m;
  r.class_of = normalize_labels(labels, &r.class_count);
  return r;
}

std::vector<int> class_representatives(const RightCongruence& r) {
  std::vector<int> rep(r.class_count, -1);
  for (int i = 0; i < static_cast<int>(r.class_of.size()); ++i)
    if (rep[r.class_of[i]] < 0) rep[r.class_of[i]] = i;
  return rep;
}

}  // namespace

FiniteMSet make_mset(const FiniteMonoid& m,
                     std::vector<std::vector<int>> action) {
  int k = static_cast<int>(action.size());
  for (int x = 0; x < k; ++x) {
    if (static_cast<int>(action[x].size()) != m.size)
      throw OutOfRange("action row " + std::to_string(x) + " has length " +
                       std::to_string(action[x].size()) + ", expected " +
                       std::to_string(m.size));
    for (int j = 0; j < m.size; ++j)
      if (action[x][j] < 0 || action[x][j] >= k)
        throw OutOfRange("action entry (" + std::to_string(x) + ", " +
                         std::to_string(j) + ") is out of range");
  }
  for (int x = 0; x < k; ++x) {
    if (action[x][m.identity] != x)
      throw ValidationError("action violates the unit law at " +
                            std::to_string(x));
    for (int a = 0; a < m.size; ++a)
      for (int b = 0; b < m.size; ++b)
        if (action[action[x][a]][b] != action[x][m.mul(a, b)])
          throw ValidationError("action is not associative at (" +
                                std::to_string(x) + ", " + std::to_string(a) +
                                ", " + std::to_string(b) + ")");
  }
  return {m, std::move(action)};
}

FiniteMSet regular_mset(const FiniteMonoid& m) {
  return {m, m.table};
}

FiniteMSet terminal_mset(const FiniteMonoid& m) {
  return {m, {std::vector<int>(m.size, 0)}};
}

FiniteMSet empty_mset(const FiniteMonoid& m) { return {m, {}}; }

std::vector<MSetMap> hom_set(const FiniteMSet& x, const FiniteMSet& y) {
  check_same_monoid(x.monoid, y.monoid, "hom_set");
  int nx = x.size(), n = x.monoid.size;
  std::vector<int> f(nx, -1);
  std::vector<std::vector<int>> found;

  auto assign = [&](int start, int img, std::vector<int>& trail) {
    f[start] = img;
    trail.push_back(start);
    for (size_t head = trail.size() - 1; head < trail.size(); ++head) {
      int u = trail[head];
      for (int m = 0; m < n; ++m) {
        int v = x.act(u, m), fv = y.act(f[u], m);
        if (f[v] < 0) {
          f[v] = fv;
          trail.push_back(v);
        } else if (f[v] != fv) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<void()> search = [&]() {
    int start = -1;
    for (int i = 0; i < nx && start < 0; ++i)
      if (f[i] < 0) start = i;
    if (start < 0) {
      found.push_back(f);
      return;
    }
    for (int img = 0; img < y.size(); ++img) {
      std::vector<int> trail;
      if (assign(start, img, trail)) search();
      for (int t : trail) f[t] = -1;
    }
  };
  search();
  std::sort(found.begin(), found.end());
  std::vector<MSetMap> out;
  out.reserve(found.size());
  for (auto& v : found) out.push_back({x, y, std::move(v)});
  return out;
}

std::vector<int> fixed_points(const FiniteMSet& x) {
  std::vector<int> out;
  for (int p = 0; p < x.size(); ++p) {
    bool fixed = true;
    for (int m = 0; m < x.monoid.size && fixed; ++m)
      fixed = x.act(p, m) == p;
    if (fixed) out.push_back(p);
  }
  return out;
}

Components components(const FiniteMSet& x) {
  std::vector<int> parent(x.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (int p = 0; p < x.size(); ++p)
    for (int m = 0; m < x.monoid.size; ++m)
      unite(parent, p, x.act(p, m));
  std::vector<int> labels(x.size());
  for (int p = 0; p < x.size(); ++p) labels[p] = find_root(parent, p);
  Components c;
  c.component_of = normalize_labels(labels, &c.count);
  return c;
}

FiniteMSet omega(const FiniteMonoid& m) {
  auto ideals = right_ideals(m);
  std::map<uint64_t, int> index;
  for (size_t i = 0; i < ideals.size(); ++i) index[ideals[i].bits] = i;
  std::vector<std::vector<int>> action(ideals.size(),
                                       std::vector<int>(m.size));
  for (size_t i = 0; i < ideals.size(); ++i)
    for (int mm = 0; mm < m.size; ++mm) {
      ElementSet j;
      for (int mp = 0; mp < m.size; ++mp)
        if (ideals[i].contains(m.mul(mm, mp))) j.add(mp);
      action[i][mm] = index.at(j.bits);
    }
  return {m, std::move(action)};
}

FiniteMSet power_mset(const FiniteMonoid& m, int cap) {
  if (m.size > cap)
    throw SizeTooLarge("power object over a monoid of order " +
                       std::to_string(m.size) + " exceeds the cap of 2^" +
                       std::to_string(cap));
  int total = 1 << m.size;
  std::vector<std::vector<int>> action(total, std::vector<int>(m.size));
  for (int a = 0; a < total; ++a)
    for (int mm = 0; mm < m.size; ++mm) {
      int b = 0;
      for (int x = 0; x < m.size; ++x)
        if ((a >> m.mul(mm, x)) & 1) b |= 1 << x;
      action[a][mm] = b;
    }
  return {m, std::move(action)};
}

ProductMSet product(const FiniteMSet& x, const FiniteMSet& y) {
  check_same_monoid(x.monoid, y.monoid, "product");
  ProductMSet p;
  p.left_size = x.size();
  p.right_size = y.size();
  std::vector<std::vector<int>> action(x.size() * y.size(),
                                       std::vector<int>(x.monoid.size));
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < y.size(); ++b)
      for (int m = 0; m < x.monoid.size; ++m)
        action[p.pair(a, b)][m] = p.pair(x.act(a, m), y.act(b, m));
  p.object = {x.monoid, std::move(action)};
  return p;
}

FiniteMSet exponential(const FiniteMSet& x, const FiniteMSet& y, int cap) {
  check_same_monoid(x.monoid, y.monoid, "exponential");
  const FiniteMonoid& mon = x.monoid;
  auto prod = product(regular_mset(mon), x);
  auto homs = hom_set(prod.object, y);
  if (static_cast<int>(homs.size()) > cap)
    throw SizeTooLarge("exponential carrier has " +
                       std::to_string(homs.size()) +
                       " elements, cap is " + std::to_string(cap));
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < homs.size(); ++i) index[homs[i].map] = i;
  std::vector<std::vector<int>> action(homs.size(),
                                       std::vector<int>(mon.size));
  for (size_t i = 0; i < homs.size(); ++i)
    for (int m = 0; m < mon.size; ++m) {
      std::vector<int> g(prod.object.size());
      for (int nn = 0; nn < mon.size; ++nn)
        for (int p = 0; p < x.size(); ++p)
          g[prod.pair(nn, p)] = homs[i].map[prod.pair(mon.mul(m, nn), p)];
      action[i][m] = index.at(g);
    }
  return {mon, std::move(action)};
}

QuotientMap coequalizer(const MSetMap& f, const MSetMap& g) {
  check_same_monoid(f.source.monoid, g.source.monoid, "coequalizer");
  if (f.source != g.source || f.target != g.target)
    throw MonoidMismatch("coequalizer requires a parallel pair");
  const FiniteMSet& y = f.target;
  std::vector<int> parent(y.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (int a = 0; a < f.source.size(); ++a)
    unite(parent, f.map[a], g.map[a]);
  std::vector<int> labels(y.size());
  for (int p = 0; p < y.size(); ++p) labels[p] = find_root(parent, p);
  QuotientMap q;
  int count = 0;
  q.projection = normalize_labels(labels, &count);
  std::vector<int> rep(count, -1);
  for (int p = 0; p < y.size(); ++p)
    if (rep[q.projection[p]] < 0) rep[q.projection[p]] = p;
  std::vector<std::vector<int>> action(count, std::vector<int>(y.monoid.size));
  for (int c = 0; c < count; ++c)
    for (int m = 0; m < y.monoid.size; ++m)
      action[c][m] = q.projection[y.act(rep[c], m)];
  q.object = {y.monoid, std::move(action)};
  return q;
}

PushoutMSet pushout(const MSetMap& f, const MSetMap& g) {
  check_same_monoid(f.source.monoid, g.source.monoid, "pushout");
  if (f.source != g.source)
    throw MonoidMismatch("pushout requires a common source");
  const FiniteMSet& b = f.target;
  const FiniteMSet& c = g.target;
  int nb = b.size(), nc = c.size();
  std::vector<int> parent(nb + nc);
  std::iota(parent.begin(), parent.end(), 0);
  for (int a = 0; a < f.source.size(); ++a)
    unite(parent, f.map[a], nb + g.map[a]);
  std::vector<int> labels(nb + nc);
  for (int p = 0; p < nb + nc; ++p) labels[p] = find_root(parent, p);
  int count = 0;
  auto cls = normalize_labels(labels, &count);
  std::vector<int> rep(count, -1);
  for (int p = 0; p < nb + nc; ++p)
    if (rep[cls[p]] < 0) rep[cls[p]] = p;
  std::vector<std::vector<int>> action(count, std::vector<int>(b.monoid.size));
  for (int k = 0; k < count; ++k)
    for (int m = 0; m < b.monoid.size; ++m) {
      int r = rep[k];
      int moved = r < nb ? b.act(r, m) : nb + c.act(r - nb, m);
      action[k][m] = cls[moved];
    }
  PushoutMSet out;
  out.object = {b.monoid, std::move(action)};
  out.from_left.assign(cls.begin(), cls.begin() + nb);
  out.from_right.assign(cls.begin() + nb, cls.end());
  return out;
}

ImageMSet image(const MSetMap& f) {
  std::vector<int> hit;
  for (int v : f.map) hit.push_back(v);
  std::sort(hit.begin(), hit.end());
  hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
  std::vector<int> index(f.target.size(), -1);
  for (size_t i = 0; i < hit.size(); ++i) index[hit[i]] = i;
  std::vector<std::vector<int>> action(hit.size(),
                                       std::vector<int>(f.target.monoid.size));
  for (size_t i = 0; i < hit.size(); ++i)
    for (int m = 0; m < f.target.monoid.size; ++m)
      action[i][m] = index[f.target.act(hit[i], m)];
  ImageMSet out;
  out.object = {f.target.monoid, std::move(action)};
  out.target_index = hit;
  return out;
}

CokernelMSet cokernel(const MSetMap& f) {
  const FiniteMSet& y = f.target;
  int ny = y.size();
  std::vector<int> parent(ny + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (int a = 0; a < f.source.size(); ++a) unite(parent, f.map[a], ny);
  std::vector<int> labels(ny + 1);
  for (int p = 0; p <= ny; ++p) labels[p] = find_root(parent, p);
  int count = 0;
  auto cls = normalize_labels(labels, &count);
  std::vector<int> rep(count, -1);
  for (int p = 0; p <= ny; ++p)
    if (rep[cls[p]] < 0) rep[cls[p]] = p;
  std::vector<std::vector<int>> action(count, std::vector<int>(y.monoid.size));
  for (int k = 0; k < count; ++k)
    for (int m = 0; m < y.monoid.size; ++m) {
      int r = rep[k];
      action[k][m] = r < ny ? cls[y.act(r, m)] : cls[ny];
    }
  CokernelMSet out;
  out.object = {y.monoid, std::move(action)};
  out.point_class = cls[ny];
  out.lower_iso = count == 1;
  return out;
}

RightCongruence make_congruence(const FiniteMonoid& m,
                                std::vector<int> labels) {
  if (static_cast<int>(labels.size()) != m.size)
    throw OutOfRange("congruence labeling has wrong length");
  auto r = congruence_from_labels(m, labels);
  for (int p = 0; p < m.size; ++p)
    for (int q = p + 1; q < m.size; ++q) {
      if (!r.related(p, q)) continue;
      for (int x = 0; x < m.size; ++x)
        if (!r.related(m.mul(p, x), m.mul(q, x)))
          throw ValidationError(
              "not right compatible: " + std::to_string(p) + " ~ " +
              std::to_string(q) + " but their products with " +
              std::to_string(x) + " differ");
    }
  return r;
}

RightCongruence diagonal_congruence(const FiniteMonoid& m) {
  std::vector<int> labels(m.size);
  std::iota(labels.begin(), labels.end(), 0);
  return congruence_from_labels(m, labels);
}

RightCongruence total_congruence(const FiniteMonoid& m) {
  return congruence_from_labels(m, std::vector<int>(m.size, 0));
}

std::vector<RightCongruence> right_congruences(const FiniteMonoid& m,
                                               int cap) {
  if (m.size > cap)
    throw SizeTooLarge("congruence enumeration over order " +
                       std::to_string(m.size) + " exceeds the cap of " +
                       std::to_string(cap));
  std::vector<RightCongruence> out;
  int n = m.size;
  std::vector<int> label(n, 0);

  auto compatible_so_far = [&](int k) {
    for (int i = 0; i < k; ++i) {
      if (label[i] != label[k]) continue;
      for (int x = 0; x < n; ++x) {
        int p = m.mul(i, x), q = m.mul(k, x);
        if (p <= k && q <= k && label[p] != label[q]) return false;
      }
    }
    return true;
  };

  std::function<void(int, int)> grow = [&](int k, int maxlab) {
    if (k == n) {
      RightCongruence r;
      r.monoid = m;
      r.class_of = label;
      r.class_count = maxlab + 1;
      for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
          if (label[p] != label[q]) continue;
          for (int x = 0; x < n; ++x)
            if (label[m.mul(p, x)] != label[m.mul(q, x)]) return;
        }
      out.push_back(r);
      return;
    }
    for (int c = 0; c <= maxlab + 1; ++c) {
      label[k] = c;
      if (compatible_so_far(k)) grow(k + 1, std::max(maxlab, c));
    }
  };
  grow(1, 0);

  std::sort(out.begin(), out.end(),
            [](const RightCongruence& a, const RightCongruence& b) {
              if (a.class_count != b.class_count)
                return a.class_count > b.class_count;
              return a.class_of < b.class_of;
            });
  return out;
}

bool refines(const RightCongruence& r, const RightCongruence& s) {
  std::vector<int> target(r.class_count, -1);
  for (size_t p = 0; p < r.class_of.size(); ++p) {
    int& t = target[r.class_of[p]];
    if (t < 0)
      t = s.class_of[p];
    else if (t != s.class_of[p])
      return false;
  }
  return true;
}

FiniteMSet quotient(const FiniteMonoid& m, const RightCongruence& r) {
  auto rep = class_representatives(r);
  std::vector<std::vector<int>> action(r.class_count,
                                       std::vector<int>(m.size));
  for (int c = 0; c < r.class_count; ++c)
    for (int x = 0; x < m.size; ++x)
      action[c][x] = r.class_of[m.mul(rep[c], x)];
  return {m, std::move(action)};
}

RightCongruence pullback_congruence(const FiniteMonoid& monoid, int m,
                                    const RightCongruence& r) {
  std::vector<int> labels(monoid.size);
  for (int p = 0; p < monoid.size; ++p)
    labels[p] = r.class_of[monoid.mul(m, p)];
  return congruence_from_labels(monoid, labels);
}

RightCongruence joint_cover(const RightCongruence& a,
                            const RightCongruence& b) {
  check_same_monoid(a.monoid, b.monoid, "joint_cover");
  std::vector<int> labels(a.class_of.size());
  for (size_t p = 0; p < labels.size(); ++p)
    labels[p] = a.class_of[p] * b.class_count + b.class_of[p];
  return congruence_from_labels(a.monoid, labels);
}

RightCongruence congruence_join(const RightCongruence& a,
                                const RightCongruence& b) {
  check_same_monoid(a.monoid, b.monoid, "congruence_join");
  const FiniteMonoid& m = a.monoid;
  int n = m.size;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (a.related(p, q) || b.related(p, q)) unite(parent, p, q);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (find_root(parent, p) != find_root(parent, q)) continue;
        for (int x = 0; x < n; ++x) {
          int u = find_root(parent, m.mul(p, x));
          int v = find_root(parent, m.mul(q, x));
          if (u != v) {
            unite(parent, u, v);
            grew = true;
          }
        }
      }
  }
  std::vector<int> labels(n);
  for (int p = 0; p < n; ++p) labels[p] = find_root(parent, p);
  return congruence_from_labels(m, labels);
}

CongCategory congruence_category(
    const FiniteMonoid& m, const std::vector<RightCongruence>& objects) {
  CongCategory cat;
  cat.objects = objects;
  int k = static_cast<int>(objects.size());
  cat.hom.assign(k, std::vector<std::vector<CongMorphism>>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto rep = class_representatives(objects[j]);
      for (int c = 0; c < objects[j].class_count; ++c) {
        int w = rep[c];
        bool ok = true;
        for (int p = 0; p < m.size && ok; ++p)
          for (int q = p + 1; q < m.size && ok; ++q)
            if (objects[i].related(p, q) &&
                !objects[j].related(m.mul(w, p), m.mul(w, q)))
              ok = false;
        if (ok) cat.hom[i][j].push_back({i, j, w});
      }
    }
  return cat;
}

CongMorphism compose_cong(const CongCategory& cat, const CongMorphism& f,
                          const CongMorphism& g) {
  if (f.target != g.source)
    throw ValidationError("composition endpoints do not match");
  const RightCongruence& rt = cat.objects[g.target];
  const FiniteMonoid& m = rt.monoid;
  int w = m.mul(g.witness, f.witness);
  auto rep = class_representatives(rt);
  return {f.source, g.target, rep[rt.class_of[w]]};
}

CongFactorization epi_mono_factor(const CongCategory& cat,
                                  const CongMorphism& f) {
  const RightCongruence& rt = cat.objects[f.target];
  CongFactorization out;
  out.mid = pullback_congruence(rt.monoid, f.witness, rt);
  out.epi_witness = 0;
  auto rep = class_representatives(rt);
  out.mono_witness = rep[rt.class_of[f.witness]];
  return out;
}

bool is_strict_epi(const CongMorphism& f) { return f.witness == 0; }

TensorResult tensor(const FiniteMSet& a, const FiniteMSet& b) {
  if (!(b.monoid == opposite(a.monoid)))
    throw MonoidMismatch("tensor requires a right and a left action of the "
                         "same monoid");
  int na = a.size(), nb = b.size();
  int n = a.monoid.size;
  std::vector<int> parent(na * nb);
  std::iota(parent.begin(), parent.end(), 0);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      for (int m = 0; m < n; ++m)
        unite(parent, a.act(x, m) * nb + y, x * nb + b.act(y, m));
  std::vector<int> labels(na * nb);
  for (int p = 0; p < na * nb; ++p) labels[p] = find_root(parent, p);
  TensorResult out;
  out.class_of = normalize_labels(labels, &out.size);
  return out;
}

FlatnessReport is_flat_left(const FiniteMSet& b) {
  FiniteMonoid m = opposite(b.monoid);
  auto lact = [&](int mm, int y) { return b.act(y, mm); };
  int nb = b.size(), n = m.size;
  if (nb == 0) return {false, "carrier is empty"};
  for (int y1 = 0; y1 < nb; ++y1)
    for (int y2 = 0; y2 < nb; ++y2) {
      bool hit = false;
      for (int a = 0; a < nb && !hit; ++a)
        for (int m1 = 0; m1 < n && !hit; ++m1)
          for (int m2 = 0; m2 < n && !hit; ++m2)
            hit = lact(m1, a) == y1 && lact(m2, a) == y2;
      if (!hit)
        return {false, "no common refinement of " + std::to_string(y1) +
                           " and " + std::to_string(y2)};
    }
  for (int m1 = 0; m1 < n; ++m1)
    for (int m2 = 0; m2 < n; ++m2)
      for (int c = 0; c < nb; ++c) {
        if (lact(m1, c) != lact(m2, c)) continue;
        bool hit = false;
        for (int d = 0; d < nb && !hit; ++d)
          for (int nn = 0; nn < n && !hit; ++nn)
            hit = lact(nn, d) == c && m.mul(m1, nn) == m.mul(m2, nn);
        if (!hit)
          return {false, "equalized point " + std::to_string(c) +
                             " for elements " + std::to_string(m1) + ", " +
                             std::to_string(m2) + " has no equalizing cover"};
      }
  return {true, ""};
}

}  // namespace monoidlab

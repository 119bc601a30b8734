#include "monoidlab/topology.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace monoidlab {

bool MonoidTopology::contains(ElementSet s) const {
  return std::binary_search(opens.begin(), opens.end(), s, canonical_less);
}

MonoidTopology topology_from_base(const FiniteMonoid& m,
                                  const std::vector<ElementSet>& base) {
  std::set<uint64_t> bits{0, ElementSet::full(m.size).bits};
  for (ElementSet s : base) bits.insert(s.bits);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint64_t> cur(bits.begin(), bits.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        grew |= bits.insert(cur[i] | cur[j]).second;
        grew |= bits.insert(cur[i] & cur[j]).second;
      }
  }
  MonoidTopology t{m, {}};
  for (uint64_t b : bits) t.opens.push_back(ElementSet{b});
  std::sort(t.opens.begin(), t.opens.end(), canonical_less);
  return t;
}

MonoidTopology discrete_topology(const FiniteMonoid& m) {
  std::vector<ElementSet> base;
  for (int i = 0; i < m.size; ++i) base.push_back(ElementSet::single(i));
  return topology_from_base(m, base);
}

MonoidTopology indiscrete_topology(const FiniteMonoid& m) {
  return topology_from_base(m, {});
}

std::vector<RightCongruence> necessary_clopens(const FiniteMSet& x) {
  std::vector<RightCongruence> out;
  out.reserve(x.size());
  for (int p = 0; p < x.size(); ++p)
    out.push_back(make_congruence(x.monoid, x.action[p]));
  return out;
}

namespace {

// whether every class of the partition p -> labels[p] is open
bool partition_open(const MonoidTopology& t, const std::vector<int>& labels,
                    int* bad = nullptr) {
  int n = static_cast<int>(labels.size());
  std::vector<char> seen(n, 0);
  for (int p = 0; p < n; ++p) {
    if (seen[p]) continue;
    ElementSet cls;
    for (int q = 0; q < n; ++q)
      if (labels[q] == labels[p]) {
        cls.add(q);
        seen[q] = 1;
      }
    if (!t.contains(cls)) {
      if (bad) *bad = p;
      return false;
    }
  }
  return true;
}

}  // namespace

ContinuityReport is_continuous(const FiniteMSet& x, const MonoidTopology& t) {
  for (int p = 0; p < x.size(); ++p) {
    int bad = -1;
    if (!partition_open(t, x.action[p], &bad)) return {false, p, bad};
  }
  return {};
}

SubMSet continuous_core(const FiniteMSet& x, const MonoidTopology& t) {
  int n = x.monoid.size;
  std::vector<char> ok(x.size());
  for (int p = 0; p < x.size(); ++p)
    ok[p] = partition_open(t, x.action[p]);
  SubMSet out;
  std::vector<int> idx(x.size(), -1);
  for (int p = 0; p < x.size(); ++p) {
    bool good = true;
    for (int q = 0; q < n && good; ++q) good = ok[x.act(p, q)];
    if (good) {
      idx[p] = static_cast<int>(out.embedding.size());
      out.embedding.push_back(p);
    }
  }
  std::vector<std::vector<int>> action(out.embedding.size(),
                                       std::vector<int>(n));
  for (size_t i = 0; i < out.embedding.size(); ++i)
    for (int q = 0; q < n; ++q)
      action[i][q] = idx[x.act(out.embedding[i], q)];
  out.object = FiniteMSet{x.monoid, std::move(action)};
  return out;
}

ActionTopology action_topology(const FiniteMonoid& m, const MonoidTopology& t,
                               int cap) {
  FiniteMSet p = power_mset(m, cap);
  SubMSet core = continuous_core(p, t);
  ActionTopology out;
  for (int mask : core.embedding)
    out.base.push_back(ElementSet{static_cast<uint64_t>(mask)});
  std::sort(out.base.begin(), out.base.end(), canonical_less);
  out.topology = topology_from_base(m, out.base);
  return out;
}

RectangleReport is_topological_monoid(const FiniteMonoid& m,
                                      const MonoidTopology& t) {
  std::vector<ElementSet> nbhd(m.size, ElementSet::full(m.size));
  for (int a = 0; a < m.size; ++a)
    for (ElementSet u : t.opens)
      if (u.contains(a)) nbhd[a] = nbhd[a] & u;
  for (ElementSet u : t.opens)
    for (int a = 0; a < m.size; ++a)
      for (int b = 0; b < m.size; ++b) {
        if (!u.contains(m.mul(a, b))) continue;
        for (int v : nbhd[a].elements())
          for (int w : nbhd[b].elements())
            if (!u.contains(m.mul(v, w))) return {false, u, a, b};
      }
  return {};
}

PowderQuotient powder_quotient(const FiniteMonoid& m,
                               const MonoidTopology& t) {
  MonoidTopology fine = action_topology(m, t).topology;
  std::vector<ElementSet> nbhd(m.size, ElementSet::full(m.size));
  for (int a = 0; a < m.size; ++a)
    for (ElementSet u : fine.opens)
      if (u.contains(a)) nbhd[a] = nbhd[a] & u;

  std::vector<int> cls(m.size, -1);
  int count = 0;
  for (int a = 0; a < m.size; ++a) {
    for (int b = 0; b < a; ++b)
      if (nbhd[b] == nbhd[a]) {
        cls[a] = cls[b];
        break;
      }
    if (cls[a] < 0) cls[a] = count++;
  }
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < m.size; ++b) {
      if (cls[a] != cls[b]) continue;
      for (int x = 0; x < m.size; ++x)
        if (cls[m.mul(a, x)] != cls[m.mul(b, x)] ||
            cls[m.mul(x, a)] != cls[m.mul(x, b)])
          throw OracleViolation(
              "indistinguishability is not a two-sided congruence");
    }

  std::vector<int> rep(count, -1);
  for (int a = m.size - 1; a >= 0; --a) rep[cls[a]] = a;
  std::vector<std::vector<int>> table(count, std::vector<int>(count));
  for (int c = 0; c < count; ++c)
    for (int d = 0; d < count; ++d) table[c][d] = cls[m.mul(rep[c], rep[d])];

  PowderQuotient out;
  out.monoid = validate_monoid(table, cls[0]).monoid;
  out.projection = cls;
  std::set<uint64_t> pushed;
  for (ElementSet u : fine.opens) {
    ElementSet v;
    for (int a : u.elements()) v.add(cls[a]);
    pushed.insert(v.bits);
  }
  for (uint64_t b : pushed) out.topology.opens.push_back(ElementSet{b});
  std::sort(out.topology.opens.begin(), out.topology.opens.end(),
            canonical_less);
  out.topology.monoid = out.monoid;
  return out;
}

namespace {

bool holds_member(const std::vector<RightCongruence>& members,
                  const RightCongruence& r) {
  return std::find(members.begin(), members.end(), r) != members.end();
}

}  // namespace

CongruenceFilter make_filter(const FiniteMonoid& m,
                             std::vector<RightCongruence> members) {
  if (members.empty()) throw InvalidFilter("a filter cannot be empty");
  for (RightCongruence& r : members) r = make_congruence(m, r.class_of);
  std::sort(members.begin(), members.end(),
            [](const RightCongruence& a, const RightCongruence& b) {
              if (a.class_count != b.class_count)
                return a.class_count > b.class_count;
              return a.class_of < b.class_of;
            });
  members.erase(std::unique(members.begin(), members.end()), members.end());

  for (const RightCongruence& r : members)
    for (const RightCongruence& s : right_congruences(m))
      if (refines(r, s) && !holds_member(members, s))
        throw InvalidFilter("filter is not upward closed");
  for (const RightCongruence& a : members)
    for (const RightCongruence& b : members)
      if (!holds_member(members, joint_cover(a, b)))
        throw InvalidFilter("filter is missing a meet");
  for (const RightCongruence& r : members)
    for (int x = 0; x < m.size; ++x)
      if (!holds_member(members, pullback_congruence(m, x, r)))
        throw InvalidFilter("filter is not stable under pullbacks");
  return {m, std::move(members)};
}

CongruenceFilter open_congruences(const FiniteMonoid& m,
                                  const MonoidTopology& t) {
  std::vector<RightCongruence> chosen;
  for (const RightCongruence& r : right_congruences(m)) {
    bool all_open = true;
    for (int c = 0; c < r.class_count && all_open; ++c) {
      ElementSet cls;
      for (int p = 0; p < m.size; ++p)
        if (r.class_of[p] == c) cls.add(p);
      all_open = t.contains(cls);
    }
    if (all_open) chosen.push_back(r);
  }
  return make_filter(m, std::move(chosen));
}

namespace {

int class_representative(const RightCongruence& r, int c) {
  for (int a = 0;; ++a)
    if (r.class_of[a] == c) return a;
}

}  // namespace

CompletionMonoid completion(const FiniteMonoid& m,
                            const CongruenceFilter& f) {
  if (f.members.empty()) throw InvalidFilter("a filter cannot be empty");
  RightCongruence least = f.members.front();
  for (const RightCongruence& r : f.members) least = joint_cover(least, r);
  if (!holds_member(f.members, least))
    throw InvalidFilter("filter has no least member");

  int k = least.class_count;
  std::vector<int> rep(k);
  for (int c = 0; c < k; ++c) rep[c] = class_representative(least, c);
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < k; ++d)
      table[c][d] = least.class_of[m.mul(rep[c], rep[d])];
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < m.size; ++b)
      if (least.class_of[m.mul(a, b)] !=
          table[least.class_of[a]][least.class_of[b]])
        throw OracleViolation("completion product is not well-defined");

  CompletionMonoid out;
  out.base = m;
  out.filter = f;
  out.monoid = validate_monoid(table, least.class_of[0]).monoid;
  out.tuples.assign(k, std::vector<int>(f.members.size()));
  for (int c = 0; c < k; ++c)
    for (size_t i = 0; i < f.members.size(); ++i)
      out.tuples[c][i] = f.members[i].class_of[rep[c]];

  // the coordinatewise limit product must match the carrier product
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < k; ++d)
      for (size_t i = 0; i < f.members.size(); ++i) {
        const RightCongruence& r = f.members[i];
        int a = class_representative(r, out.tuples[c][i]);
        RightCongruence s = pullback_congruence(m, a, r);
        auto it = std::find(f.members.begin(), f.members.end(), s);
        if (it == f.members.end())
          throw InvalidFilter("filter is not stable under pullbacks");
        int b = class_representative(s, it->class_of[rep[d]]);
        if (r.class_of[m.mul(a, b)] != r.class_of[m.mul(rep[c], rep[d])])
          throw OracleViolation(
              "limit product formula disagrees with the carrier product");
      }

  std::vector<ElementSet> base;
  for (size_t i = 0; i < f.members.size(); ++i)
    for (int c = 0; c < f.members[i].class_count; ++c) {
      ElementSet pre;
      for (int x = 0; x < k; ++x)
        if (out.tuples[x][i] == c) pre.add(x);
      base.push_back(pre);
    }
  out.topology = topology_from_base(out.monoid, base);
  out.unit = least.class_of;
  for (int a = 0; a < m.size; ++a)
    for (int b = 0; b < m.size; ++b)
      if (out.unit[m.mul(a, b)] != out.monoid.mul(out.unit[a], out.unit[b]))
        throw OracleViolation("completion unit is not a homomorphism");
  return out;
}

BaseReduction base_reduce(const CongruenceFilter& f) {
  BaseReduction out;
  for (const RightCongruence& r : f.members) {
    bool minimal = true;
    for (const RightCongruence& s : f.members)
      if (!(s == r) && refines(s, r)) minimal = false;
    if (minimal) out.base.push_back(r);
  }
  RightCongruence least = f.members.front();
  for (const RightCongruence& r : f.members) least = joint_cover(least, r);
  out.discrete = holds_member(f.members, least);
  if (out.discrete) out.least = least;

  const FiniteMonoid& m = f.monoid;
  out.prodiscrete_two_sided = true;
  for (const RightCongruence& r : out.base)
    for (int a = 0; a < m.size && out.prodiscrete_two_sided; ++a)
      for (int b = 0; b < m.size; ++b) {
        if (r.class_of[a] != r.class_of[b]) continue;
        bool ok = true;
        for (int x = 0; x < m.size && ok; ++x)
          ok = r.class_of[m.mul(x, a)] == r.class_of[m.mul(x, b)];
        if (!ok) {
          out.prodiscrete_two_sided = false;
          break;
        }
      }
  if (out.prodiscrete_two_sided)
    for (const RightCongruence& r : out.base) {
      std::vector<int> rep(r.class_count);
      for (int c = 0; c < r.class_count; ++c)
        rep[c] = class_representative(r, c);
      std::vector<std::vector<int>> table(r.class_count,
                                          std::vector<int>(r.class_count));
      for (int c = 0; c < r.class_count; ++c)
        for (int d = 0; d < r.class_count; ++d)
          table[c][d] = r.class_of[m.mul(rep[c], rep[d])];
      out.quotient_monoids.push_back(
          validate_monoid(table, r.class_of[0]).monoid);
    }
  return out;
}

FactorTopology factor_topology(const FiniteMonoid& m,
                               const CongruenceFilter& f) {
  if (m.size > 12) throw SizeTooLarge("factorizing topology needs at most 12 elements");
  FactorTopology out;
  std::vector<ElementSet> base;
  for (uint64_t mask = 0; mask < (uint64_t{1} << m.size); ++mask) {
    std::vector<int> labels(m.size);
    for (int p = 0; p < m.size; ++p) {
      int pre = 0;
      for (int x = 0; x < m.size; ++x)
        if ((mask >> m.mul(p, x)) & 1) pre |= 1 << x;
      labels[p] = pre;
    }
    if (holds_member(f.members, make_congruence(m, labels)))
      base.push_back(ElementSet{mask});
  }
  out.topology = topology_from_base(m, base);
  out.exact = open_congruences(m, out.topology) == f;
  return out;
}

SubMSet continuous_exponential(const FiniteMSet& x, const FiniteMSet& y,
                               const MonoidTopology& t, int cap) {
  return continuous_core(exponential(x, y, cap), t);
}

}  // namespace monoidlab

#include "monoidlab/monoid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace monoidlab {

bool canonical_less(ElementSet a, ElementSet b) {
  if (a.count() != b.count()) return a.count() < b.count();
  uint64_t diff = a.bits ^ b.bits;
  if (!diff) return false;
  int first = __builtin_ctzll(diff);
  return a.contains(first);
}

std::string set_to_string(ElementSet s) {
  std::string out = "{";
  bool sep = false;
  for (int i : s.elements()) {
    if (sep) out += ", ";
    out += std::to_string(i);
    sep = true;
  }
  return out + "}";
}

ValidatedMonoid validate_monoid(const std::vector<std::vector<int>>& table,
                                std::optional<int> identity) {
  int n = static_cast<int>(table.size());
  if (n < 1) throw OutOfRange("empty multiplication table");
  if (n > 64) throw SizeTooLarge("monoid order " + std::to_string(n) +
                                 " exceeds the bitset limit of 64");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw OutOfRange("row " + std::to_string(i) + " has length " +
                       std::to_string(table[i].size()) + ", expected " +
                       std::to_string(n));
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        throw OutOfRange("entry (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") = " +
                         std::to_string(table[i][j]) + " is out of range");
  }

  auto is_identity = [&](int e) {
    for (int j = 0; j < n; ++j)
      if (table[e][j] != j || table[j][e] != j) return false;
    return true;
  };

  int e = -1;
  if (identity) {
    if (*identity < 0 || *identity >= n)
      throw BadIdentity("declared identity " + std::to_string(*identity) +
                        " is out of range");
    if (!is_identity(*identity))
      throw BadIdentity("declared identity " + std::to_string(*identity) +
                        " does not satisfy the identity laws");
    e = *identity;
  } else {
    for (int i = 0; i < n && e < 0; ++i)
      if (is_identity(i)) e = i;
    if (e < 0) throw BadIdentity("no two-sided identity element found");
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw NotAssociative(i, j, k);

  FiniteMonoid m;
  m.size = n;
  std::vector<int> relabel;
  if (e == 0) {
    m.table = table;
  } else {
    relabel.resize(n);
    for (int i = 0; i < n; ++i) relabel[i] = i;
    relabel[e] = 0;
    relabel[0] = e;
    m.table.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.table[relabel[i]][relabel[j]] = relabel[table[i][j]];
  }
  return {m, relabel};
}

ElementSet idempotents(const FiniteMonoid& m) {
  ElementSet out;
  for (int i = 0; i < m.size; ++i)
    if (m.mul(i, i) == i) out.add(i);
  return out;
}

ElementSet submonoid_generated(const FiniteMonoid& m, ElementSet gens) {
  ElementSet s = gens;
  s.add(m.identity);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a : s.elements())
      for (int b : s.elements()) {
        int p = m.mul(a, b);
        if (!s.contains(p)) {
          s.add(p);
          grew = true;
        }
      }
  }
  return s;
}

ElementSet right_factorable_closure(const FiniteMonoid& m, ElementSet seed) {
  if (seed.none()) throw EmptyGeneratingSet();
  ElementSet s = seed;
  while (true) {
    ElementSet sub = submonoid_generated(m, s);
    ElementSet next;
    for (int x = 0; x < m.size; ++x)
      for (int t : sub.elements())
        if (sub.contains(m.mul(t, x))) {
          next.add(x);
          break;
        }
    if (next == s) return s;
    s = next;
  }
}

LocalSubmonoid local_submonoid(const FiniteMonoid& m, int e) {
  if (e < 0 || e >= m.size)
    throw OutOfRange("idempotent index " + std::to_string(e) +
                     " is out of range");
  if (m.mul(e, e) != e) throw NotIdempotent(e);
  std::vector<int> carrier{e};
  for (int x = 0; x < m.size; ++x)
    if (x != e && m.mul(m.mul(e, x), e) == x) carrier.push_back(x);
  int k = static_cast<int>(carrier.size());
  std::vector<int> index(m.size, -1);
  for (int i = 0; i < k; ++i) index[carrier[i]] = i;
  LocalSubmonoid out;
  out.monoid.size = k;
  out.monoid.table.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      out.monoid.table[i][j] = index[m.mul(carrier[i], carrier[j])];
  out.embedding = carrier;
  return out;
}

std::vector<MoritaWitness> morita_witnesses(const FiniteMonoid& m) {
  std::vector<MoritaWitness> out;
  for (int e = 0; e < m.size; ++e) {
    if (m.mul(e, e) != e) continue;
    for (int b = 0; b < m.size; ++b) {
      if (m.mul(b, e) != b) continue;
      for (int bp = 0; bp < m.size; ++bp)
        if (m.mul(b, bp) == m.identity) out.push_back({e, b, bp});
    }
  }
  return out;
}

namespace {

// (idempotent?, power tail, power period, row constant?, column constant?)
using ElemSig = std::tuple<bool, int, int, bool, bool>;

ElemSig element_signature(const FiniteMonoid& m, int x) {
  std::vector<int> seen_at(m.size, -1);
  int cur = m.identity, step = 0;
  while (seen_at[cur] < 0) {
    seen_at[cur] = step++;
    cur = m.mul(cur, x);
  }
  int tail = seen_at[cur];
  int period = step - tail;
  bool row_const = true, col_const = true;
  for (int j = 0; j < m.size; ++j) {
    if (m.mul(x, j) != x) row_const = false;
    if (m.mul(j, x) != x) col_const = false;
  }
  return {m.mul(x, x) == x, tail, period, row_const, col_const};
}

bool extend_iso(const FiniteMonoid& a, const FiniteMonoid& b,
                const std::vector<ElemSig>& siga,
                const std::vector<ElemSig>& sigb, std::vector<int>& map,
                std::vector<bool>& used, int next) {
  int n = a.size;
  if (next == n) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (map[a.mul(i, j)] != b.mul(map[i], map[j])) return false;
    return true;
  }
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand] || sigb[cand] != siga[next]) continue;
    bool ok = true;
    for (int i = 0; i <= next && ok; ++i) {
      int p = a.mul(i, next);
      if (map[i] >= 0 && p <= next &&
          (p == next ? cand : map[p]) != b.mul(map[i], cand))
        ok = false;
      int q = a.mul(next, i);
      if (ok && map[i] >= 0 && q <= next &&
          (q == next ? cand : map[q]) != b.mul(cand, map[i]))
        ok = false;
    }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (extend_iso(a, b, siga, sigb, map, used, next + 1)) return true;
    map[next] = -1;
    used[cand] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> monoid_isomorphism(const FiniteMonoid& a,
                                                   const FiniteMonoid& b) {
  if (a.size != b.size) return std::nullopt;
  int n = a.size;
  std::vector<ElemSig> siga(n), sigb(n);
  for (int i = 0; i < n; ++i) {
    siga[i] = element_signature(a, i);
    sigb[i] = element_signature(b, i);
  }
  {
    auto sa = siga, sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  map[0] = 0;
  used[0] = true;
  if (extend_iso(a, b, siga, sigb, map, used, 1)) return map;
  return std::nullopt;
}

std::vector<ElementSet> right_ideals(const FiniteMonoid& m) {
  std::vector<ElementSet> principal;
  for (int a = 0; a < m.size; ++a) {
    ElementSet p;
    for (int x = 0; x < m.size; ++x) p.add(m.mul(a, x));
    if (std::find(principal.begin(), principal.end(), p) == principal.end())
      principal.push_back(p);
  }
  std::set<uint64_t> seen;
  seen.insert(0);
  int k = static_cast<int>(principal.size());
  for (uint64_t combo = 1; combo < (uint64_t{1} << k); ++combo) {
    ElementSet u;
    for (int i = 0; i < k; ++i)
      if ((combo >> i) & 1) u = u | principal[i];
    seen.insert(u.bits);
  }
  std::vector<ElementSet> out;
  for (uint64_t bits : seen) out.push_back({bits});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

FiniteMonoid opposite(const FiniteMonoid& m) {
  FiniteMonoid out;
  out.size = m.size;
  out.table.assign(m.size, std::vector<int>(m.size));
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < m.size; ++j) out.table[i][j] = m.table[j][i];
  return out;
}

MonoidProfile algebraic_profile(const FiniteMonoid& m) {
  int n = m.size;
  MonoidProfile p;

  p.is_group = true;
  for (int a = 0; a < n && p.is_group; ++a) {
    bool inv = false;
    for (int b = 0; b < n && !inv; ++b)
      inv = m.mul(a, b) == m.identity && m.mul(b, a) == m.identity;
    p.is_group = inv;
  }

  for (int z = 0; z < n; ++z) {
    bool row = true, col = true;
    for (int x = 0; x < n; ++x) {
      if (m.mul(z, x) != z) row = false;
      if (m.mul(x, z) != z) col = false;
    }
    p.has_right_absorbing |= row;
    p.has_left_absorbing |= col;
    p.has_zero |= row && col;
  }

  p.is_right_ore = true;
  for (int a = 0; a < n && p.is_right_ore; ++a)
    for (int b = 0; b < n && p.is_right_ore; ++b) {
      ElementSet am, bm;
      for (int x = 0; x < n; ++x) {
        am.add(m.mul(a, x));
        bm.add(m.mul(b, x));
      }
      p.is_right_ore = !(am & bm).none();
    }

  p.is_right_collapsible = true;
  for (int a = 0; a < n && p.is_right_collapsible; ++a)
    for (int b = 0; b < n && p.is_right_collapsible; ++b) {
      bool hit = false;
      for (int c = 0; c < n && !hit; ++c) hit = m.mul(a, c) == m.mul(b, c);
      p.is_right_collapsible = hit;
    }

  p.is_left_cancellative = true;
  p.is_right_cancellative = true;
  for (int c = 0; c < n; ++c) {
    ElementSet row, col;
    for (int x = 0; x < n; ++x) {
      row.add(m.mul(c, x));
      col.add(m.mul(x, c));
    }
    if (row.count() != n) p.is_left_cancellative = false;
    if (col.count() != n) p.is_right_cancellative = false;
  }

  p.right_ideal_count = static_cast<int>(right_ideals(m).size());
  return p;
}

namespace {

// Smallest relabeling of the table over all permutations fixing element 0.
std::vector<int> canonical_form(const FiniteMonoid& m) {
  int n = m.size;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<int> best;
  do {
    std::vector<int> flat;
    flat.reserve(n * n);
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        flat.push_back(perm[m.mul(inv[i], inv[j])]);
    if (best.empty() || flat < best) best = flat;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

struct EnumState {
  int n;
  std::vector<std::vector<int>> table;
  std::set<std::vector<int>>* found;
};

bool partial_associative(const EnumState& st, int i, int j) {
  int n = st.n;
  const auto& t = st.table;
  auto known = [&](int a, int b) { return t[a][b] >= 0; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!((a == i && b == j) || (b == i && c == j) ||
              (known(a, b) && t[a][b] == i && c == j) ||
              (known(b, c) && a == i && t[b][c] == j)))
          continue;
        if (!known(a, b) || !known(b, c)) continue;
        int ab = t[a][b], bc = t[b][c];
        if (!known(ab, c) || !known(a, bc)) continue;
        if (t[ab][c] != t[a][bc]) return false;
      }
  return true;
}

void enumerate_from(EnumState& st, int cell) {
  int n = st.n;
  int free_cells = (n - 1) * (n - 1);
  if (cell == free_cells) {
    FiniteMonoid m;
    m.size = n;
    m.table = st.table;
    st.found->insert(canonical_form(m));
    return;
  }
  int i = 1 + cell / (n - 1);
  int j = 1 + cell % (n - 1);
  for (int v = 0; v < n; ++v) {
    st.table[i][j] = v;
    if (partial_associative(st, i, j)) enumerate_from(st, cell + 1);
  }
  st.table[i][j] = -1;
}

}  // namespace

std::vector<FiniteMonoid> enumerate_monoids(int n) {
  if (n < 1) throw OutOfRange("monoid order must be positive");
  if (n > 5)
    throw SizeTooLarge("exhaustive monoid enumeration is capped at order 5");
  std::set<std::vector<int>> found;
  EnumState st;
  st.n = n;
  st.table.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    st.table[0][i] = i;
    st.table[i][0] = i;
  }
  st.found = &found;
  enumerate_from(st, 0);
  std::vector<FiniteMonoid> out;
  for (const auto& flat : found) {
    FiniteMonoid m;
    m.size = n;
    m.table.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.table[i][j] = flat[i * n + j];
    out.push_back(m);
  }
  return out;
}

}  // namespace monoidlab

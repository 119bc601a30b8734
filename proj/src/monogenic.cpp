#include "monoidlab/monogenic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "monoidlab/errors.hpp"

namespace monoidlab {

namespace {

void check_shape(const NabShape& s) {
  if (s.a < 0) throw OutOfRange("tail length must be non-negative");
  if (s.b < 1) throw OutOfRange("cycle length must be positive");
}

// First-visit positions along the walk from x give the orbit's shape: the
// revisited position is the tail length, the rest of the walk is the cycle.
NabShape orbit_shape(const MonogenicAction& x, int start) {
  std::vector<int> pos(x.size, -1);
  int cur = start, n = 0;
  while (pos[cur] < 0) {
    pos[cur] = n++;
    cur = x.step[cur];
  }
  return {pos[cur], n - pos[cur]};
}

}  // namespace

MonogenicAction make_monogenic(std::vector<int> step) {
  int n = static_cast<int>(step.size());
  for (int v : step)
    if (v < 0 || v >= n)
      throw OutOfRange("step value " + std::to_string(v) + " outside carrier");
  return {n, std::move(step)};
}

MonogenicAction shape_action(const NabShape& s) {
  check_shape(s);
  std::vector<int> step(s.a + s.b);
  for (int x = 0; x + 1 < s.a + s.b; ++x) step[x] = x + 1;
  step[s.a + s.b - 1] = s.a;
  return {s.a + s.b, std::move(step)};
}

ShapeClassification classify(const MonogenicAction& x) {
  if (static_cast<int>(x.step.size()) != x.size)
    throw OutOfRange("step table size disagrees with the carrier");
  make_monogenic(x.step);
  ShapeClassification out;
  out.element_shapes.reserve(x.size);
  for (int p = 0; p < x.size; ++p) out.element_shapes.push_back(orbit_shape(x, p));

  std::vector<int> root(x.size);
  for (int p = 0; p < x.size; ++p) root[p] = p;
  auto find = [&](int p) {
    while (root[p] != p) p = root[p] = root[root[p]];
    return p;
  };
  for (int p = 0; p < x.size; ++p) root[find(p)] = find(x.step[p]);

  out.component_of.assign(x.size, -1);
  for (int p = 0; p < x.size; ++p) {
    int r = find(p);
    if (out.component_of[r] < 0) {
      out.component_of[r] = out.component_count++;
      out.component_shapes.push_back({0, 1});
    }
    out.component_of[p] = out.component_of[r];
    NabShape& c = out.component_shapes[out.component_of[p]];
    c.a = std::max(c.a, out.element_shapes[p].a);
    c.b = out.element_shapes[p].b;
  }
  return out;
}

bool epi_exists(const NabShape& s, const NabShape& t) {
  check_shape(s);
  check_shape(t);
  return t.a <= s.a && s.b % t.b == 0;
}

bool mono_exists(const NabShape& s, const NabShape& t) {
  check_shape(s);
  check_shape(t);
  return s.a <= t.a && s.b == t.b;
}

NabShape joint_cover(const NabShape& s, const NabShape& t) {
  check_shape(s);
  check_shape(t);
  return {std::max(s.a, t.a), std::lcm(s.b, t.b)};
}

TruncatedProfinite truncated_profinite(int depth) {
  if (depth < 1) throw OutOfRange("truncation depth must be at least 1");
  int n = depth + 1;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = std::min(i + j, depth);
  TruncatedProfinite out;
  out.depth = depth;
  out.monoid = validate_monoid(table).monoid;
  out.topology = discrete_topology(out.monoid);
  out.point_stabilizes.assign(n, true);
  out.point_stabilizes[depth] = false;
  return out;
}

std::vector<int> truncation_projection(int from, int to) {
  if (to < 1 || from < to)
    throw OutOfRange("projection runs from a deeper truncation to a shallower one");
  std::vector<int> p(from + 1);
  for (int x = 0; x <= from; ++x) p[x] = std::min(x, to);
  return p;
}

}  // namespace monoidlab

#!/usr/bin/env python3
"""Brute-force cross-check for the three-element workbench instance.

M = {1, a, b} encoded as {0, 1, 2}: 0 is the identity, 1 and 2 have constant
rows. Everything below is computed directly from first definitions and shares
no code with the C++ library. The printed values are pinned as golden outputs
in the test suite; the tests cite this script as their source.
"""

from itertools import product

N = 3
TABLE = [[0, 1, 2], [1, 1, 1], [2, 2, 2]]


def mul(a, b):
    return TABLE[a][b]


M = frozenset(range(N))


def subsets(universe):
    xs = sorted(universe)
    for bits in range(1 << len(xs)):
        yield frozenset(x for i, x in enumerate(xs) if bits >> i & 1)


# ---- right congruences: partitions compatible with right multiplication ----

def partitions(n):
    def rec(prefix, maxc):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in range(maxc + 2):
            yield from rec(prefix + [c], max(maxc, c))
    yield from rec([0], 0)


def is_right_congruence(classof):
    for p, q in product(range(N), repeat=2):
        if classof[p] == classof[q]:
            for m in range(N):
                if classof[mul(p, m)] != classof[mul(q, m)]:
                    return False
    return True


congs = [c for c in partitions(N) if is_right_congruence(c)]

# ---- right ideals ----

ideals = [A for A in subsets(M)
          if all(mul(i, m) in A for i in A for m in range(N))]

# ---- topology generated by the base {{0}, {1, 2}} ----


def close(sets):
    sets = set(sets) | {frozenset(), M}
    while True:
        extra = set()
        for a in sets:
            for b in sets:
                extra.add(a | b)
                extra.add(a & b)
        if extra <= sets:
            return sets
        sets |= extra


TAU = close([frozenset({0}), frozenset({1, 2})])

# ---- T: subsets A of M whose whole orbit in P(M) has open clopens ----
# q*(A) = {x | qx in A};  I^p_B = {m | m*(B) = p*(B)};
# A is in T when I^p_{q*(A)} is open for every p, q.


def inv(q, A):
    return frozenset(x for x in range(N) if mul(q, x) in A)


def clopen(B, p):
    target = inv(p, B)
    return frozenset(m for m in range(N) if inv(m, B) == target)


T = [A for A in subsets(M)
     if all(clopen(inv(q, A), p) in TAU for p in range(N) for q in range(N))]

TAU_TILDE = close(T)

# ---- open congruences: every class open in TAU_TILDE ----


def classes(classof):
    return {frozenset(i for i in range(N) if classof[i] == c)
            for c in set(classof)}


open_congs = [c for c in congs if classes(c) <= TAU_TILDE]

# ---- completion over the filter of open congruences ----
# least member r0; carrier = classes of r0; [a][b] = [ab].


def finer(c1, c2):
    return all(c2[p] == c2[q]
               for p, q in product(range(N), repeat=2) if c1[p] == c1[q])


r0 = [c for c in open_congs if all(finer(c, d) for d in open_congs)][0]
comp_classes = sorted(classes(r0), key=min)
idx = {s: i for i, s in enumerate(comp_classes)}


def cls(x):
    return next(s for s in comp_classes if x in s)


comp_table = [[idx[cls(mul(min(a), min(b)))] for b in comp_classes]
              for a in comp_classes]
u = [idx[cls(m)] for m in range(N)]

# ---- powder quotient: topological indistinguishability for TAU_TILDE ----


def minnbhd(x):
    out = M
    for U in TAU_TILDE:
        if x in U:
            out = out & U
    return out


pow_classes = sorted({frozenset(y for y in range(N)
                                if minnbhd(y) == minnbhd(x))
                      for x in range(N)}, key=min)


def show(sets):
    return sorted(sorted(s) for s in sets)


print("right congruences:", sorted(show(classes(c)) for c in congs))
print("right ideals:", show(ideals))
print("tau from base:", show(TAU))
print("|T| =", len(T), " T =", show(T))
print("tau~ =", show(TAU_TILDE))
print("open congruences:", sorted(show(classes(c)) for c in open_congs))
print("completion size:", len(comp_classes),
      " classes:", show(comp_classes))
print("completion table:", comp_table)
print("u =", u, " injective:", len(set(u)) == len(u))
print("powder classes:", show(pow_classes))

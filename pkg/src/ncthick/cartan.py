"""Cartan data and exact integer arithmetic in Weyl groups.

Vectors live in Z^n, written in the basis e_1..e_n of simple roots.  A
group element is an integer matrix acting on column vectors, so column j
holds the image of e_j and products compose right to left: (u*v)(x) =
u(v(x)).  The bilinear form is (e_i, e_j) = d_i * C_ij for the Cartan
matrix C with minimal positive integer symmetrizer d.

Supported labels: A1.., B2.., C2.., D3.., E6, E7, E8, F4, G2, and the
rank-2 affine KRONECKER type (two vertices joined by a double bond).

Absolute length uses the fixed-space codimension formula for finite
types, which the self-check suite cross-validates against an independent
breadth-first search over the Cayley graph on the reflection set.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass

from . import linalg
from .errors import (
    DimensionMismatchError,
    InfiniteGroupError,
    IsotropicVectorError,
    NonIntegralReflectionError,
    NotRealRootError,
    NotReflectionError,
    PermutationError,
    ResourceLimitError,
    UnsupportedLabelError,
)

Vector = tuple[int, ...]
IntMat = tuple[tuple[int, ...], ...]

KRONECKER = "KRONECKER"

_LABEL_RE = re.compile(r"^([ABCDEFG])(\d+)$")

# Coxeter numbers, used to sanity-check Coxeter elements without
# enumerating the group.
_COXETER_NUMBER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * n,
    "C": lambda n: 2 * n,
    "D": lambda n: 2 * n - 2,
    "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
    "F": lambda n: 12,
    "G": lambda n: 6,
}


def parse_label(label: str) -> tuple[str, int]:
    """Normalize a type label into (family, rank); KRONECKER -> ('K', 2)."""
    if label == KRONECKER:
        return "K", 2
    m = _LABEL_RE.match(label)
    if not m:
        raise UnsupportedLabelError(f"unknown type label {label!r}")
    family, n = m.group(1), int(m.group(2))
    limits = {"A": (1, None), "B": (2, None), "C": (2, None), "D": (3, None),
              "E": (6, 8), "F": (4, 4), "G": (2, 2)}
    lo, hi = limits[family]
    if n < lo or (hi is not None and n > hi):
        raise UnsupportedLabelError(f"rank {n} not supported for family {family}")
    return family, n


def tree_edges(label: str) -> tuple[tuple[int, int], ...]:
    """Edges of the underlying tree, Bourbaki numbering, smaller vertex first."""
    family, n = parse_label(label)
    if family == "K":
        return ((1, 2),)
    if family in "ABCFG":
        return tuple((i, i + 1) for i in range(1, n))
    if family == "D":
        chain = tuple((i, i + 1) for i in range(1, n - 2))
        return chain + ((n - 2, n - 1), (n - 2, n))
    # E types: node 2 hangs off node 4 of the chain 1-3-4-5-...
    edges = [(1, 3), (2, 4), (3, 4), (4, 5), (5, 6)]
    if n >= 7:
        edges.append((6, 7))
    if n == 8:
        edges.append((7, 8))
    return tuple(sorted(edges))


def _root_lengths(family: str, n: int) -> tuple[int, ...]:
    """Squared root lengths per simple root, short roots normalized to 2."""
    if family in "ADE" or family == "K":
        return (2,) * n
    if family == "B":
        return (4,) * (n - 1) + (2,)
    if family == "C":
        return (2,) * (n - 1) + (4,)
    if family == "F":
        return (4, 4, 2, 2)
    return (2, 6)  # G2


@dataclass(frozen=True)
class CartanDatum:
    """A symmetrizable generalized Cartan matrix with its symmetrizer."""

    label: str
    rank: int
    matrix: IntMat
    symmetrizer: tuple[int, ...]

    def __post_init__(self):
        n = self.rank
        c, d = self.matrix, self.symmetrizer
        if len(c) != n or any(len(row) != n for row in c) or len(d) != n:
            raise DimensionMismatchError("Cartan data of inconsistent rank")
        for i in range(n):
            if c[i][i] != 2:
                raise UnsupportedLabelError("diagonal Cartan entries must be 2")
            if d[i] <= 0:
                raise UnsupportedLabelError("symmetrizer must be positive")
            for j in range(n):
                if i != j and c[i][j] > 0:
                    raise UnsupportedLabelError("off-diagonal Cartan entries must be <= 0")
                if (c[i][j] == 0) != (c[j][i] == 0):
                    raise UnsupportedLabelError("Cartan zero pattern must be symmetric")
                if d[i] * c[i][j] != d[j] * c[j][i]:
                    raise UnsupportedLabelError("Cartan matrix is not symmetrizable by d")
        gram = self.gram()
        minors = [linalg.int_det([row[: k + 1] for row in gram[: k + 1]]) for k in range(n)]
        if self.is_finite():
            if any(m <= 0 for m in minors):
                raise UnsupportedLabelError("form is not positive definite")
        else:
            if any(m <= 0 for m in minors[:-1]) or minors[-1] != 0:
                raise UnsupportedLabelError("affine form must be semidefinite with 1-dim kernel")

    def is_finite(self) -> bool:
        return self.label != KRONECKER

    def gram(self) -> IntMat:
        """Matrix of the bilinear form, (e_i, e_j) = d_i C_ij."""
        return tuple(
            tuple(self.symmetrizer[i] * self.matrix[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )


@dataclass(frozen=True)
class WeylElement:
    """An integer matrix acting on the root lattice in the e-basis."""

    matrix: IntMat

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(linalg.mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "WeylElement":
        return WeylElement(linalg.int_inverse(self.matrix))

    def apply(self, v: Vector) -> Vector:
        return linalg.mat_vec(self.matrix, v)

    def det(self) -> int:
        return linalg.int_det(self.matrix)

    def is_identity(self) -> bool:
        n = len(self.matrix)
        return self.matrix == linalg.identity(n)


@functools.lru_cache(maxsize=None)
def build_cartan(label: str) -> CartanDatum:
    """Standard Cartan matrix and minimal symmetrizer for the label."""
    family, n = parse_label(label)
    lengths = _root_lengths(family, n)
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = lengths[i]
    for i, j in tree_edges(label):
        bond = -2 if family == "K" else -max(lengths[i - 1], lengths[j - 1]) // 2
        gram[i - 1][j - 1] = gram[j - 1][i - 1] = bond
    d = tuple(length // 2 for length in lengths)
    c = tuple(
        tuple(2 * gram[i][j] // lengths[i] for j in range(n)) for i in range(n)
    )
    return CartanDatum(label=label, rank=n, matrix=c, symmetrizer=d)


def identity_element(cd: CartanDatum) -> WeylElement:
    return WeylElement(linalg.identity(cd.rank))


def form(cd: CartanDatum, a: Vector, b: Vector) -> int:
    """Bilinear form sum a_i b_j d_i C_ij; symmetric in its arguments."""
    if len(a) != cd.rank or len(b) != cd.rank:
        raise DimensionMismatchError(
            f"vectors of length {len(a)}, {len(b)} against rank {cd.rank}"
        )
    gram = cd.gram()
    return sum(a[i] * sum(g * y for g, y in zip(gram[i], b)) for i in range(cd.rank) if a[i])


def reflect(cd: CartanDatum, alpha: Vector, xi: Vector) -> Vector:
    """Reflect xi in the hyperplane orthogonal to alpha."""
    aa = form(cd, alpha, alpha)
    if aa == 0:
        raise IsotropicVectorError(f"cannot reflect at isotropic vector {alpha}")
    twice = 2 * form(cd, xi, alpha)
    q, r = divmod(twice, aa)
    if r != 0:
        raise NonIntegralReflectionError(
            f"2(xi,alpha)={twice} not divisible by (alpha,alpha)={aa}"
        )
    return tuple(x - q * a for x, a in zip(xi, alpha))


def is_real_root(cd: CartanDatum, v: Vector) -> bool:
    if len(v) != cd.rank:
        return False
    if cd.is_finite():
        return v in real_roots(cd)
    p, q = v
    if p <= 0 and q <= 0:
        p, q = -p, -q
    return p >= 0 and q >= 0 and abs(p - q) == 1


def reflection_element(cd: CartanDatum, alpha: Vector) -> WeylElement:
    """Matrix of the reflection at a real root, columns = images of e_j."""
    if not is_real_root(cd, alpha):
        raise NotRealRootError(f"{alpha} is not a real root of {cd.label}")
    n = cd.rank
    cols = [reflect(cd, alpha, tuple(int(i == j) for i in range(n))) for j in range(n)]
    return WeylElement(tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))


def simple_reflection(cd: CartanDatum, i: int) -> WeylElement:
    if not 1 <= i <= cd.rank:
        raise DimensionMismatchError(f"simple reflection index {i} out of 1..{cd.rank}")
    return reflection_element(cd, tuple(int(j == i - 1) for j in range(cd.rank)))


@functools.lru_cache(maxsize=None)
def real_roots(cd: CartanDatum, bound: int = 0) -> frozenset[Vector]:
    """All real roots: orbit closure for finite types, the |p-q|=1 strip
    with coordinate sum at most 2*bound+1 (and its negatives) for KRONECKER."""
    if not cd.is_finite():
        out = set()
        cap = 2 * bound + 1
        for p in range(0, cap + 1):
            for q in (p - 1, p + 1):
                if q >= 0 and p + q <= cap:
                    out.add((p, q))
                    out.add((-p, -q))
        return frozenset(out)
    n = cd.rank
    simples = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for v in frontier:
            for alpha in simples:
                w = reflect(cd, alpha, v)
                if w not in roots:
                    roots.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(roots)


def positive_roots(cd: CartanDatum, bound: int = 0) -> tuple[Vector, ...]:
    """The roots with nonnegative coordinates, sorted by coordinates."""
    return tuple(sorted(v for v in real_roots(cd, bound) if all(x >= 0 for x in v)))


@functools.lru_cache(maxsize=None)
def reflections(cd: CartanDatum, bound: int = 0) -> tuple[WeylElement, ...]:
    """One reflection per positive root, in positive-root order."""
    return tuple(reflection_element(cd, a) for a in positive_roots(cd, bound))


def is_reflection(cd: CartanDatum, w: WeylElement) -> bool:
    """Reflections are the elements of absolute length one.

    For finite types that is rank(w - id) == 1 together with being an
    involution; in the rank-2 affine group determinant -1 is equivalent.
    """
    if not cd.is_finite():
        return w.det() == -1
    n = cd.rank
    diff = tuple(
        tuple(w.matrix[i][j] - int(i == j) for j in range(n)) for i in range(n)
    )
    return linalg.int_rank(diff) == 1 and (w * w).is_identity()


def reflection_root(cd: CartanDatum, w: WeylElement) -> Vector:
    """The unique positive real root alpha with w(alpha) = -alpha."""
    if not is_reflection(cd, w):
        raise NotReflectionError("element is not a reflection")
    n = cd.rank
    plus = tuple(
        tuple(w.matrix[i][j] + int(i == j) for j in range(n)) for i in range(n)
    )
    kernel = linalg.nullspace(plus, n)
    if len(kernel) != 1:
        raise NotReflectionError("fixed space of -w has wrong dimension")
    vec = kernel[0]
    denom = math.lcm(*(x.denominator for x in vec))
    ints = [int(x * denom) for x in vec]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    if any(x < 0 for x in ints):
        ints = [-x for x in ints]
    alpha = tuple(ints)
    if any(x < 0 for x in alpha) or not is_real_root(cd, alpha):
        raise NotReflectionError(f"kernel vector {alpha} is not a positive real root")
    return alpha


def weyl_group(cd: CartanDatum, max_order: int = 10_000_000) -> frozenset[WeylElement]:
    """Closure of the simple reflections under multiplication."""
    if not cd.is_finite():
        raise InfiniteGroupError("the KRONECKER Weyl group is infinite")
    gens = [simple_reflection(cd, i) for i in range(1, cd.rank + 1)]
    seen = {identity_element(cd)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                u = w * g
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
                    if len(seen) > max_order:
                        raise ResourceLimitError(
                            f"group order exceeds cap {max_order}"
                        )
        frontier = nxt
    return frozenset(seen)


def absolute_length(cd: CartanDatum, w: WeylElement) -> int:
    """Minimal number of reflections multiplying to w.

    Finite types use the fixed-space codimension rank(w - id); the
    infinite dihedral KRONECKER group is classified by determinant.
    """
    if cd.is_finite():
        n = cd.rank
        diff = tuple(
            tuple(w.matrix[i][j] - int(i == j) for j in range(n)) for i in range(n)
        )
        return linalg.int_rank(diff)
    if w.is_identity():
        return 0
    return 1 if w.det() == -1 else 2


@functools.lru_cache(maxsize=None)
def _bfs_length_table(cd: CartanDatum) -> dict[WeylElement, int]:
    """Distances from the identity in the Cayley graph on all reflections."""
    refs = reflections(cd)
    dist = {identity_element(cd): 0}
    frontier = list(dist)
    d = 0
    while frontier:
        d += 1
        nxt = []
        for w in frontier:
            for t in refs:
                u = w * t
                if u not in dist:
                    dist[u] = d
                    nxt.append(u)
        frontier = nxt
    return dist


def absolute_length_bfs(cd: CartanDatum, w: WeylElement) -> int:
    """Independent oracle for absolute_length; enumerates the whole group."""
    if not cd.is_finite():
        raise InfiniteGroupError("BFS length oracle needs a finite group")
    return _bfs_length_table(cd)[w]


def abs_leq(cd: CartanDatum, u: WeylElement, v: WeylElement) -> bool:
    """The absolute order: u <= v iff l(u) + l(u^-1 v) = l(v)."""
    lu = absolute_length(cd, u)
    lv = absolute_length(cd, v)
    if lu > lv:
        return False
    return lu + absolute_length(cd, u.inverse() * v) == lv


def coxeter_element(cd: CartanDatum, perm: tuple[int, ...] | None = None) -> WeylElement:
    """Product of all simple reflections in the order given by perm."""
    n = cd.rank
    if perm is None:
        perm = tuple(range(1, n + 1))
    if sorted(perm) != list(range(1, n + 1)):
        raise PermutationError(f"{perm} is not a permutation of 1..{n}")
    w = identity_element(cd)
    for i in perm:
        w = w * simple_reflection(cd, i)
    return w


def coxeter_number(cd: CartanDatum) -> int:
    family, n = parse_label(cd.label)
    if family == "K":
        raise InfiniteGroupError("the KRONECKER Coxeter element has infinite order")
    return _COXETER_NUMBER[family](n)


def is_coxeter_element(cd: CartanDatum, c: WeylElement) -> bool:
    """Necessary check: absolute length n and multiplicative order h.

    This rejects non-Coxeter elements such as -id in B2 without
    enumerating the group; a full conjugacy test is not attempted.
    """
    if not cd.is_finite():
        return absolute_length(cd, c) == cd.rank and c.det() == 1
    if absolute_length(cd, c) != cd.rank:
        return False
    h = coxeter_number(cd)
    power = c
    for k in range(1, h):
        if power.is_identity():
            return False
        power = power * c
    return power.is_identity()

"""Exact quiver representations for simply-laced Dynkin types.

Morphism spaces are computed by solving the arrow-commutation linear
system over Q, Ext^1 through the hereditary Euler form, and one
indecomposable per positive root is built deterministically by
reflection-functor transport of a simple along sink reorderings (with a
randomized 0/1-matrix fallback should the transport ever fail).  This
module is the independent oracle the combinatorial modules are checked
against, so nothing here consults the Weyl-group machinery beyond root
enumeration.

Representations store one rational matrix per arrow with shape
dim[target] x dim[source]; matrices with zero rows or columns are empty
tuples, with shapes recovered from the dimension vector.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import cartan, linalg
from .errors import (
    DimensionMismatchError,
    NotRealRootError,
    ResourceLimitError,
    StructuralError,
    UnsupportedLabelError,
)
from .tquiver import TranslationQuiver

Vector = tuple[int, ...]
Mat = tuple[tuple[Fraction, ...], ...]

_SIMPLY_LACED = "ADE"


@dataclass(frozen=True)
class Quiver:
    """An orientation of a simply-laced Dynkin tree, vertices 1..n."""

    label: str
    vertices: tuple[int, ...]
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        family, n = cartan.parse_label(self.label)
        if family not in _SIMPLY_LACED:
            raise UnsupportedLabelError(
                f"{self.label} is not simply-laced; species representations are out of scope"
            )
        if self.vertices != tuple(range(1, n + 1)):
            raise DimensionMismatchError("vertices must be 1..n")
        edges = sorted(tuple(sorted(a)) for a in self.arrows)
        if edges != sorted(cartan.tree_edges(self.label)):
            raise DimensionMismatchError(
                f"arrows are not an orientation of the {self.label} tree"
            )

    @property
    def rank(self) -> int:
        return len(self.vertices)


def dynkin_quiver(label: str, arrows: tuple[tuple[int, int], ...] | None = None) -> Quiver:
    """Quiver on the tree of the label; default orientation low -> high."""
    family, n = cartan.parse_label(label)
    if arrows is None:
        arrows = cartan.tree_edges(label)
    return Quiver(label=label, vertices=tuple(range(1, n + 1)), arrows=tuple(arrows))


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    dim: Vector
    maps: tuple[Mat, ...]

    def __post_init__(self):
        if len(self.dim) != self.quiver.rank or any(d < 0 for d in self.dim):
            raise DimensionMismatchError("dimension vector does not fit the quiver")
        if len(self.maps) != len(self.quiver.arrows):
            raise DimensionMismatchError("one matrix per arrow required")
        for (s, t), m in zip(self.quiver.arrows, self.maps):
            rows, cols = self.dim[t - 1], self.dim[s - 1]
            if len(m) != rows or any(len(r) != cols for r in m):
                raise DimensionMismatchError(
                    f"matrix for arrow {s}->{t} must be {rows}x{cols}"
                )


@dataclass(frozen=True)
class HomSpace:
    """A basis of intertwiners; each element is one matrix per vertex."""

    source: Representation
    target: Representation
    basis: tuple[tuple[Mat, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _zero(rows: int, cols: int) -> Mat:
    return tuple((Fraction(0),) * cols for _ in range(rows))


def simple_rep(q: Quiver, i: int) -> Representation:
    dim = tuple(int(v == i) for v in q.vertices)
    maps = tuple(_zero(dim[t - 1], dim[s - 1]) for s, t in q.arrows)
    return Representation(q, dim, maps)


def _mm(a: Mat, b: Mat, n: int, k: int, m: int) -> Mat:
    """a (n x k) times b (k x m) with explicit shapes, empty-safe."""
    return tuple(
        tuple(sum((a[i][r] * b[r][j] for r in range(k)), Fraction(0)) for j in range(m))
        for i in range(n)
    )


def hom(q: Quiver, source: Representation, target: Representation) -> HomSpace:
    """Solve the intertwining system f_t M_a = N_a f_s over Q, exactly."""
    if source.quiver != q or target.quiver != q:
        raise DimensionMismatchError("representations live over a different quiver")
    n = q.rank
    dm, dn = source.dim, target.dim
    # unknowns: entries of f_v (dn[v] x dm[v]) for each vertex, row-major
    offsets = []
    total = 0
    for v in range(n):
        offsets.append(total)
        total += dn[v] * dm[v]
    rows: list[list] = []
    for a_idx, (s, t) in enumerate(q.arrows):
        ma = source.maps[a_idx]
        na = target.maps[a_idx]
        si, ti = s - 1, t - 1
        for r in range(dn[ti]):
            for c in range(dm[si]):
                row = [0] * total
                # (f_t @ M_a)[r][c] contributes M_a[k][c] on f_t[r][k]
                for k in range(dm[ti]):
                    row[offsets[ti] + r * dm[ti] + k] += ma[k][c]
                # (N_a @ f_s)[r][c] contributes N_a[r][k] on f_s[k][c]
                for k in range(dn[si]):
                    row[offsets[si] + k * dm[si] + c] -= na[r][k]
                rows.append(row)
    kernel = linalg.nullspace(rows, total)
    basis = []
    for vec in kernel:
        mats = []
        for v in range(n):
            o = offsets[v]
            mats.append(
                tuple(
                    tuple(vec[o + r * dm[v] + c] for c in range(dm[v]))
                    for r in range(dn[v])
                )
            )
        basis.append(tuple(mats))
    return HomSpace(source=source, target=target, basis=tuple(basis))


def euler_form(q: Quiver, a: Vector, b: Vector) -> int:
    """Sum a_i b_i minus sum over arrows i->j of a_i b_j."""
    val = sum(x * y for x, y in zip(a, b))
    for s, t in q.arrows:
        val -= a[s - 1] * b[t - 1]
    return val


def ext1_dim(q: Quiver, source: Representation, target: Representation) -> int:
    """dim Hom minus the Euler form; nonnegative for hereditary algebras."""
    d = hom(q, source, target).dim - euler_form(q, source.dim, target.dim)
    if d < 0:
        raise StructuralError("negative Ext dimension; hereditary identity violated")
    return d


# ---------------------------------------------------------------------------
# indecomposables by reflection-functor transport


def _simple_root_index(alpha: Vector) -> int | None:
    if sum(alpha) == 1 and all(x in (0, 1) for x in alpha):
        return alpha.index(1) + 1
    return None


def _tree_neighbors(label: str) -> dict[int, set[int]]:
    nb: dict[int, set[int]] = {}
    for i, j in cartan.tree_edges(label):
        nb.setdefault(i, set()).add(j)
        nb.setdefault(j, set()).add(i)
    return nb


def _simple_reflect(label: str, alpha: Vector, i: int) -> Vector:
    """s_i(alpha) for the simply-laced form 2*delta - adjacency."""
    nb = _tree_neighbors(label)
    pairing = 2 * alpha[i - 1] - sum(alpha[j - 1] for j in nb.get(i, ()))
    out = list(alpha)
    out[i - 1] -= pairing
    return tuple(out)


def _flip_at(arrows: tuple[tuple[int, int], ...], i: int) -> tuple[tuple[int, int], ...]:
    return tuple((t, s) if s == i or t == i else (s, t) for s, t in arrows)


def _sinks(arrows: tuple[tuple[int, int], ...], n: int) -> list[int]:
    sources = {s for s, _ in arrows}
    return [v for v in range(1, n + 1) if v not in sources]


def _coreflect(
    label: str, arrows: tuple[tuple[int, int], ...], dim: Vector, maps: tuple[Mat, ...], i: int
) -> tuple[Vector, tuple[Mat, ...]]:
    """Apply the source-i coreflection functor; arrows at i get reversed.

    New space at i is the cokernel of the combined map out of i; every
    reversed arrow t(a) -> i picks up the corresponding block of the
    cokernel projection.
    """
    out_idx = [k for k, (s, _) in enumerate(arrows) if s == i]
    targets = [arrows[k][1] for k in out_idx]
    di = dim[i - 1]
    # stack the outgoing maps vertically: (sum of target dims) x di
    stacked: list[tuple[Fraction, ...]] = []
    slots = []
    for k in out_idx:
        t = arrows[k][1]
        start = len(stacked)
        stacked.extend(maps[k])
        slots.append((k, t, start, dim[t - 1]))
    total_rows = len(stacked)
    # rows of the cokernel projection = basis of the left kernel of psi
    proj = linalg.nullspace(linalg.transpose(stacked, di) if stacked else [], total_rows)
    new_di = len(proj)
    new_dim = tuple(new_di if v == i else d for v, d in zip(range(1, len(dim) + 1), dim))
    new_maps = list(maps)
    for k, t, start, dt in slots:
        block = tuple(tuple(row[start + c] for c in range(dt)) for row in proj)
        new_maps[k] = block
    return new_dim, tuple(new_maps)


def _transport_rep(q: Quiver, alpha: Vector) -> Representation:
    label, n = q.label, q.rank
    steps: list[int] = []
    arrows = q.arrows
    cur = alpha
    while _simple_root_index(cur) is None:
        sinks = _sinks(arrows, n)
        if not sinks:
            raise StructuralError("acyclic orientation must have a sink")
        i = sinks[0]
        steps.append(i)
        cur = _simple_reflect(label, cur, i)
        arrows = _flip_at(arrows, i)
        if len(steps) > 64 * n:
            raise StructuralError("reflection transport did not terminate")
    j = _simple_root_index(cur)
    dim = tuple(int(v == j) for v in range(1, n + 1))
    maps: tuple[Mat, ...] = tuple(
        _zero(dim[t - 1], dim[s - 1]) for s, t in arrows
    )
    for i in reversed(steps):
        dim, maps = _coreflect(label, arrows, dim, maps, i)
        arrows = _flip_at(arrows, i)
    if arrows != q.arrows or dim != alpha:
        raise StructuralError("transport returned to the wrong quiver or root")
    return Representation(q, dim, maps)


def _random_rep(q: Quiver, alpha: Vector, rng: random.Random) -> Representation:
    maps = []
    for s, t in q.arrows:
        rows, cols = alpha[t - 1], alpha[s - 1]
        maps.append(
            tuple(tuple(Fraction(rng.randint(0, 1)) for _ in range(cols)) for _ in range(rows))
        )
    return Representation(q, alpha, tuple(maps))


def indecomposable_for_root(q: Quiver, alpha: Vector) -> Representation:
    """A representation with dimension vector alpha and scalar endomorphisms."""
    cd = cartan.build_cartan(q.label)
    if not (cartan.is_real_root(cd, alpha) and all(x >= 0 for x in alpha)):
        raise NotRealRootError(f"{alpha} is not a positive root of {q.label}")
    try:
        rep = _transport_rep(q, alpha)
        if hom(q, rep, rep).dim == 1:
            return rep
    except StructuralError:
        pass
    # fallback: generic 0/1 matrices; the indecomposable locus is dense
    rng = random.Random(f"{q.label}:{q.arrows}:{alpha}")
    for _ in range(200):
        rep = _random_rep(q, alpha, rng)
        if hom(q, rep, rep).dim == 1:
            return rep
    raise StructuralError(f"could not construct an indecomposable for {alpha}")


# ---------------------------------------------------------------------------
# the module category as a whole


class _ModuleCategory:
    """All indecomposables of a Dynkin quiver with their Hom/Rad tables."""

    def __init__(self, q: Quiver):
        self.quiver = q
        cd = cartan.build_cartan(q.label)
        self.roots: tuple[Vector, ...] = cartan.positive_roots(cd)
        self.reps = {a: indecomposable_for_root(q, a) for a in self.roots}
        self.hom_spaces = {
            (a, b): hom(q, self.reps[a], self.reps[b])
            for a in self.roots
            for b in self.roots
        }
        for a in self.roots:
            if self.hom_spaces[(a, a)].dim != 1:
                raise StructuralError(f"endomorphism ring at {a} is not scalar")

    def hom_dim(self, a: Vector, b: Vector) -> int:
        return self.hom_spaces[(a, b)].dim

    def rad_basis(self, a: Vector, b: Vector):
        # End is scalar, so Rad(X,X) = 0; otherwise Rad = Hom
        if a == b:
            return ()
        return self.hom_spaces[(a, b)].basis

    @functools.cached_property
    def rad2_dims(self) -> dict[tuple[Vector, Vector], int]:
        q = self.quiver
        dims = {}
        for a in self.roots:
            for b in self.roots:
                da, db = self.reps[a].dim, self.reps[b].dim
                flat: list[tuple[Fraction, ...]] = []
                for z in self.roots:
                    dz = self.reps[z].dim
                    for f in self.rad_basis(a, z):
                        for g in self.rad_basis(z, b):
                            comp = []
                            for v in range(q.rank):
                                comp.extend(
                                    itertools.chain.from_iterable(
                                        _mm(g[v], f[v], db[v], dz[v], da[v])
                                    )
                                )
                            flat.append(tuple(comp))
                total = sum(x * y for x, y in zip(da, db))
                dims[(a, b)] = linalg.rank(flat, total) if flat else 0
        return dims

    def rad_dim(self, a: Vector, b: Vector) -> int:
        return len(self.rad_basis(a, b))

    def irr_dim(self, a: Vector, b: Vector) -> int:
        return self.rad_dim(a, b) - self.rad2_dims[(a, b)]

    @functools.cached_property
    def gram_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        g = [[self.hom_dim(a, b) for b in self.roots] for a in self.roots]
        return linalg.inverse(g)

    def decompose(self, rep: Representation) -> dict[Vector, int]:
        """Multiplicities of the indecomposable summands via Hom counting."""
        h = [hom(self.quiver, rep, self.reps[b]).dim for b in self.roots]
        mult = linalg.mat_vec(linalg.transpose(self.gram_inverse, len(self.roots)), h)
        out = {}
        for a, m in zip(self.roots, mult):
            if m.denominator != 1 or m < 0:
                raise StructuralError("Hom-count decomposition failed")
            if m:
                out[a] = int(m)
        if tuple(
            sum(out.get(a, 0) * self.reps[a].dim[v] for a in self.roots)
            for v in range(self.quiver.rank)
        ) != rep.dim:
            raise StructuralError("decomposition does not add up to the dimension vector")
        return out

    @functools.cached_property
    def tau(self) -> dict[Vector, Vector]:
        """AR translate from the mesh: dim tau(Z) = sum_in - dim Z."""
        cd = cartan.build_cartan(self.quiver.label)
        out = {}
        for b in self.roots:
            total = [0] * self.quiver.rank
            for a in self.roots:
                m = self.irr_dim(a, b)
                if m:
                    for v in range(self.quiver.rank):
                        total[v] += m * a[v]
            cand = tuple(x - y for x, y in zip(total, b))
            if all(x >= 0 for x in cand) and cartan.is_real_root(cd, cand):
                out[b] = cand
        projectives = {self._projective_dim(i) for i in self.quiver.vertices}
        if set(self.roots) - set(out) != projectives:
            raise StructuralError("tau should be undefined exactly at projectives")
        return out

    def _projective_dim(self, i: int) -> Vector:
        reach = {i}
        changed = True
        while changed:
            changed = False
            for s, t in self.quiver.arrows:
                if s in reach and t not in reach:
                    reach.add(t)
                    changed = True
        return tuple(int(v in reach) for v in self.quiver.vertices)


@functools.lru_cache(maxsize=None)
def _category(q: Quiver) -> _ModuleCategory:
    return _ModuleCategory(q)


def indecomposables(q: Quiver) -> tuple[Representation, ...]:
    cat = _category(q)
    return tuple(cat.reps[a] for a in cat.roots)


def _root_of(cat: _ModuleCategory, rep: Representation) -> Vector:
    if rep.dim not in cat.reps:
        raise NotRealRootError(f"{rep.dim} is not a positive root")
    return rep.dim


def is_exceptional_sequence(q: Quiver, seq) -> bool:
    """No self-extensions, and Hom/Ext vanish from later to earlier terms."""
    seq = list(seq)
    for x in seq:
        if ext1_dim(q, x, x) != 0:
            return False
    for i, x in enumerate(seq):
        for y in seq[i + 1 :]:
            if hom(q, y, x).dim != 0 or ext1_dim(q, y, x) != 0:
                return False
    return True


def rad_dims(q: Quiver) -> dict[tuple[Vector, Vector], tuple[int, int]]:
    """Table (dim Rad, dim Rad^2) keyed by pairs of positive roots."""
    cat = _category(q)
    return {
        (a, b): (cat.rad_dim(a, b), cat.rad2_dims[(a, b)])
        for a in cat.roots
        for b in cat.roots
    }


def irr_dim(q: Quiver, source: Representation, target: Representation) -> int:
    cat = _category(q)
    return cat.irr_dim(_root_of(cat, source), _root_of(cat, target))


def ar_quiver_module_category(q: Quiver) -> TranslationQuiver:
    """Vertices are positive roots; arrows carry (irr, irr) valuations."""
    cat = _category(q)
    arrows = []
    for a in cat.roots:
        for b in cat.roots:
            m = cat.irr_dim(a, b)
            if m:
                arrows.append((a, b, (m, m)))
    return TranslationQuiver(
        vertices=tuple(cat.roots), arrows=tuple(arrows), tau=dict(cat.tau)
    )


def hom_table_json(q: Quiver) -> dict:
    """Hom and Ext dimension tables keyed by root labels."""
    cat = _category(q)
    key = lambda a: ",".join(str(x) for x in a)  # noqa: E731
    return {
        "type": q.label,
        "arrows": [list(a) for a in q.arrows],
        "hom": {key(a): {key(b): cat.hom_dim(a, b) for b in cat.roots} for a in cat.roots},
        "ext1": {
            key(a): {
                key(b): ext1_dim(q, cat.reps[a], cat.reps[b]) for b in cat.roots
            }
            for a in cat.roots
        },
    }

"""The lattice of thick subcategories through the noncrossing bijection.

A thick subcategory is identified with its noncrossing-partition element;
the stored generator roots are a certificate (an exceptional sequence
realizing the element as a prefix of a reflection factorization of the
Coxeter element), not part of the identity.  Perpendicular subcategories
are Kreweras complements.  The independent oracle enumerates wide
subcategories of the module category by closing subsets of
indecomposables under kernels, cokernels, and extensions, all computed on
explicit intertwiner matrices.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import cartan, linalg, noncrossing, repcat
from .cartan import CartanDatum, WeylElement
from .errors import (
    LatticeStructureError,
    NotInPosetError,
    ResourceLimitError,
    StructuralError,
)
from .noncrossing import NCLattice

Vector = tuple[int, ...]


def root_of_reflection(cd: CartanDatum, s: WeylElement) -> Vector:
    """The unique positive real root alpha with s(alpha) = -alpha."""
    return cartan.reflection_root(cd, s)


@dataclass(frozen=True)
class ThickSubcategory:
    """An NC element together with a generating exceptional sequence."""

    cartan: CartanDatum
    nc_element: WeylElement
    generators: tuple[Vector, ...]

    def __post_init__(self):
        prod = cartan.identity_element(self.cartan)
        for alpha in self.generators:
            prod = prod * cartan.reflection_element(self.cartan, alpha)
        if prod != self.nc_element:
            raise StructuralError("generators do not multiply to the nc element")

    # two thick subcategories are the same iff their nc elements agree
    def __eq__(self, other):
        return (
            isinstance(other, ThickSubcategory)
            and self.cartan.label == other.cartan.label
            and self.nc_element == other.nc_element
        )

    def __hash__(self):
        return hash((self.cartan.label, self.nc_element))

    @property
    def rank(self) -> int:
        return cartan.absolute_length(self.cartan, self.nc_element)


def cox(u: ThickSubcategory, c: WeylElement | None = None) -> WeylElement:
    """Product of the generator reflections; must land below c."""
    if c is None:
        c = cartan.coxeter_element(u.cartan)
    w = u.nc_element
    if not cartan.abs_leq(u.cartan, w, c):
        raise StructuralError("cox value is not below the Coxeter element")
    return w


def _reflection_factorization(cd: CartanDatum, w: WeylElement) -> tuple[Vector, ...]:
    """Greedy left-to-right factorization of w into l(w) reflections,
    deterministic through the positive-root order."""
    roots = cartan.positive_roots(cd)
    out: list[Vector] = []
    cur = w
    length = cartan.absolute_length(cd, cur)
    while length > 0:
        for alpha in roots:
            t = cartan.reflection_element(cd, alpha)
            rest = t * cur
            if cartan.absolute_length(cd, rest) == length - 1:
                out.append(alpha)
                cur = rest
                length -= 1
                break
        else:
            raise StructuralError(f"no reflection shortens {w}")
    return tuple(out)


def thick_from_nc(
    cd: CartanDatum, w: WeylElement, c: WeylElement | None = None
) -> ThickSubcategory:
    """Materialize the thick subcategory for an NC element.

    Greedily factorizes w = x_1...x_r; the corresponding roots generate.
    For simply-laced labels with the standard Coxeter element the
    resulting module sequence is checked to be exceptional.
    """
    if c is None:
        c = cartan.coxeter_element(cd)
    if not cartan.abs_leq(cd, w, c):
        raise NotInPosetError("element is not below the Coxeter element")
    gens = _reflection_factorization(cd, w)
    u = ThickSubcategory(cartan=cd, nc_element=w, generators=gens)
    family, _ = cartan.parse_label(cd.label)
    if family in "ADE" and c == cartan.coxeter_element(cd):
        q = repcat.dynkin_quiver(cd.label)
        seq = [repcat.indecomposable_for_root(q, a) for a in gens]
        if not repcat.is_exceptional_sequence(q, seq):
            raise StructuralError("generator roots are not an exceptional sequence")
    return u


def left_perp(u: ThickSubcategory, c: WeylElement | None = None) -> ThickSubcategory:
    """Everything mapping trivially into u: nc element cox(u)^-1 c."""
    if c is None:
        c = cartan.coxeter_element(u.cartan)
    return thick_from_nc(u.cartan, u.nc_element.inverse() * c, c)


def right_perp(u: ThickSubcategory, c: WeylElement | None = None) -> ThickSubcategory:
    """Everything u maps trivially into: nc element c cox(u)^-1."""
    if c is None:
        c = cartan.coxeter_element(u.cartan)
    return thick_from_nc(u.cartan, c * u.nc_element.inverse(), c)


@dataclass
class ThickLattice:
    """The NC lattice with every element materialized."""

    nc: NCLattice
    subcategories: tuple[ThickSubcategory, ...]

    def __len__(self):
        return len(self.subcategories)

    def by_nc(self, w: WeylElement) -> ThickSubcategory:
        return self.subcategories[self.nc.index(w)]


def thick_lattice(cd: CartanDatum) -> ThickLattice:
    lat = noncrossing.enumerate_nc(cd)
    subs = tuple(thick_from_nc(cd, w, lat.coxeter) for w in lat.elements)
    return ThickLattice(nc=lat, subcategories=subs)


# ---------------------------------------------------------------------------
# wide subcategory oracle


@dataclass(frozen=True)
class WideOracleResult:
    count: int
    subsets: tuple[tuple[Vector, ...], ...]


class _ClosureTables:
    """Kernels, cokernels, and extension middle terms between
    indecomposables, decomposed into indecomposable summands."""

    def __init__(self, q: repcat.Quiver):
        self.cat = repcat._category(q)
        self.q = q
        roots = self.cat.roots
        for a in roots:
            for b in roots:
                if self.cat.hom_dim(a, b) > 1 or self._ext(a, b) > 1:
                    raise ResourceLimitError(
                        "wide oracle needs multiplicity-free Hom and Ext tables"
                    )
        self.consequences: dict[frozenset, frozenset] = {}
        for a in roots:
            for b in roots:
                need: set[Vector] = set()
                if a != b and self.cat.hom_dim(a, b) == 1:
                    f = self.cat.hom_spaces[(a, b)].basis[0]
                    need |= self._summands(self._kernel(a, b, f))
                    need |= self._summands(self._cokernel(a, b, f))
                if self._ext(a, b) == 1:
                    need |= self._summands(self._middle(a, b))
                if need:
                    self.consequences[frozenset((a, b))] = frozenset(need)

    def _ext(self, a: Vector, b: Vector) -> int:
        return repcat.ext1_dim(self.q, self.cat.reps[a], self.cat.reps[b])

    def _summands(self, rep: repcat.Representation) -> set[Vector]:
        return set(self.cat.decompose(rep))

    def _kernel(self, a, b, f) -> repcat.Representation:
        q = self.cat.quiver
        m = self.cat.reps[a]
        bases = []
        dims = []
        for v in range(q.rank):
            k = linalg.nullspace(f[v], m.dim[v])
            cols = linalg.transpose(k, m.dim[v]) if k else ()
            bases.append(cols)  # m.dim[v] x (kernel dim)
            dims.append(len(k))
        maps = []
        for idx, (s, t) in enumerate(q.arrows):
            si, ti = s - 1, t - 1
            if dims[si] == 0 or m.dim[ti] == 0:
                maps.append(tuple((Fraction(0),) * dims[si] for _ in range(dims[ti])))
                continue
            image = linalg.mat_mul(m.maps[idx], bases[si]) if m.dim[ti] else ()
            z = linalg.solve_columns(bases[ti], dims[ti], image, dims[si])
            maps.append(z)
        return repcat.Representation(q, tuple(dims), tuple(maps))

    def _cokernel(self, a, b, f) -> repcat.Representation:
        q = self.cat.quiver
        n = self.cat.reps[b]
        projs = []
        dims = []
        for v in range(q.rank):
            # rows spanning the annihilator of the image of f_v
            rows = linalg.nullspace(linalg.transpose(f[v], self.cat.reps[a].dim[v]), n.dim[v])
            projs.append(rows)  # (coker dim) x n.dim[v]
            dims.append(len(rows))
        maps = []
        for idx, (s, t) in enumerate(q.arrows):
            si, ti = s - 1, t - 1
            if dims[si] == 0 or dims[ti] == 0:
                maps.append(tuple((Fraction(0),) * dims[si] for _ in range(dims[ti])))
                continue
            rhs = linalg.mat_mul(projs[ti], n.maps[idx]) if n.dim[si] else ()
            # want W with W @ projs[si] = projs[ti] @ n.maps[idx]
            wt = linalg.solve_columns(
                linalg.transpose(projs[si], n.dim[si]),
                dims[si],
                linalg.transpose(rhs, n.dim[si]) if rhs else (),
                dims[ti],
            )
            maps.append(linalg.transpose(wt, dims[ti]))
        return repcat.Representation(q, tuple(dims), tuple(maps))

    def _middle(self, a, b) -> repcat.Representation:
        """Middle term of the nonsplit extension of X_a by X_b."""
        q = self.cat.quiver
        m, n = self.cat.reps[a], self.cat.reps[b]
        # cocycles live in the direct sum over arrows of Hom(M_s, N_t);
        # coboundaries are images of vertex maps g: (g_t M_a - N_a g_s)
        slots = []
        total = 0
        for s, t in q.arrows:
            slots.append(total)
            total += m.dim[s - 1] * n.dim[t - 1]
        # coboundaries, one column per basis vertex map g
        cob = []
        for v in range(q.rank):
            for r in range(n.dim[v]):
                for c in range(m.dim[v]):
                    col = [Fraction(0)] * total
                    for idx, (s, t) in enumerate(q.arrows):
                        si, ti = s - 1, t - 1
                        if ti == v:
                            # (g_t @ M_a) entry rows r', cols c'
                            for cc in range(m.dim[si]):
                                col[slots[idx] + r * m.dim[si] + cc] += m.maps[idx][c][cc]
                        if si == v:
                            for rr in range(n.dim[ti]):
                                col[slots[idx] + rr * m.dim[si] + c] -= n.maps[idx][rr][r]
                    cob.append(col)
        # pick a cocycle outside the coboundary span
        image_rank = linalg.rank(cob, total)
        z = None
        for k in range(total):
            probe = [list(row) for row in cob]
            unit = [Fraction(0)] * total
            unit[k] = Fraction(1)
            probe.append(unit)
            if linalg.rank(probe, total) > image_rank:
                z = unit
                break
        if z is None:
            raise StructuralError("extension class vanished despite Ext = 1")
        dims = tuple(nx + mx for nx, mx in zip(n.dim, m.dim))
        maps = []
        for idx, (s, t) in enumerate(q.arrows):
            si, ti = s - 1, t - 1
            rows_n, rows_m = n.dim[ti], m.dim[ti]
            cols_n, cols_m = n.dim[si], m.dim[si]
            blk = []
            for r in range(rows_n):
                row = list(n.maps[idx][r]) + [
                    z[slots[idx] + r * cols_m + c] for c in range(cols_m)
                ]
                blk.append(tuple(row))
            for r in range(rows_m):
                row = [Fraction(0)] * cols_n + list(m.maps[idx][r])
                blk.append(tuple(row))
            maps.append(tuple(blk))
        return repcat.Representation(q, dims, tuple(maps))


@functools.lru_cache(maxsize=None)
def _closure_tables(q: repcat.Quiver) -> _ClosureTables:
    return _ClosureTables(q)


def wide_subcategory_oracle(q: repcat.Quiver, max_indecomposables: int = 12) -> WideOracleResult:
    """Brute force over subsets of indecomposables, closing each under
    kernels, cokernels, and extension middle terms."""
    tables = _closure_tables(q)
    roots = tables.cat.roots
    if len(roots) > max_indecomposables:
        raise ResourceLimitError(
            f"{len(roots)} indecomposables exceed the oracle cap {max_indecomposables}"
        )
    wide = []
    for size in range(len(roots) + 1):
        for combo in itertools.combinations(roots, size):
            s = set(combo)
            closed = True
            for a, b in itertools.product(combo, repeat=2):
                extra = tables.consequences.get(frozenset((a, b)), ())
                if any(x not in s for x in extra):
                    closed = False
                    break
            if closed:
                wide.append(tuple(sorted(s)))
    return WideOracleResult(count=len(wide), subsets=tuple(wide))


# ---------------------------------------------------------------------------
# the Kronecker lattice

Element = tuple  # ("bottom",) | ("top",) | ("nc", WeylElement) | ("tube", frozenset)


@dataclass
class KroneckerLattice:
    """NC part glued to an augmented power set along bottom and top."""

    nc_part: NCLattice
    tube_points: tuple[str, ...]
    elements: tuple[Element, ...]

    _index: dict[Element, int] = field(init=False, repr=False)

    def __post_init__(self):
        self._index = {e: i for i, e in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def index(self, e: Element) -> int:
        try:
            return self._index[e]
        except KeyError:
            raise NotInPosetError(f"{e} is not a lattice element") from None

    def leq(self, a: Element, b: Element) -> bool:
        self.index(a), self.index(b)
        if a == b or a == ("bottom",) or b == ("top",):
            return True
        if b == ("bottom",) or a == ("top",):
            return False
        if a[0] != b[0]:
            return False
        if a[0] == "nc":
            return a == b
        return a[1] <= b[1]

    def meet(self, a: Element, b: Element) -> Element:
        lower = [x for x in self.elements if self.leq(x, a) and self.leq(x, b)]
        return self._extremum(lower, lower=True)

    def join(self, a: Element, b: Element) -> Element:
        upper = [x for x in self.elements if self.leq(a, x) and self.leq(b, x)]
        return self._extremum(upper, lower=False)

    def _extremum(self, bounds: list[Element], lower: bool) -> Element:
        for x in bounds:
            if all((self.leq(y, x) if lower else self.leq(x, y)) for y in bounds):
                return x
        raise LatticeStructureError("no unique extremum; not a lattice")

    def rank_of(self, e: Element) -> int:
        if e == ("bottom",):
            return 0
        if e == ("top",):
            return len(self.tube_points) + 1
        if e[0] == "nc":
            return 1
        return len(e[1])


def kronecker_lattice(bound: int, points) -> KroneckerLattice:
    """Glue the truncated NC part to the augmented power set of the
    given tube labels, identifying bottoms and tops."""
    if isinstance(points, int):
        points = tuple(f"p{i}" for i in range(1, points + 1))
    points = tuple(sorted(str(p) for p in points))
    nc_part = noncrossing.nc_kronecker(bound)
    elements: list[Element] = [("bottom",)]
    for w in nc_part.reflection_members():
        elements.append(("nc", w))
    for size in range(1, len(points) + 1):
        for combo in itertools.combinations(points, size):
            elements.append(("tube", frozenset(combo)))
    elements.append(("top",))
    return KroneckerLattice(
        nc_part=nc_part, tube_points=points, elements=tuple(elements)
    )


# ---------------------------------------------------------------------------
# serialization


def thick_to_json(lat: ThickLattice) -> dict:
    nc = lat.nc
    perp = []
    for i, u in enumerate(lat.subcategories):
        perp.append(
            [
                i,
                nc.index(left_perp(u, nc.coxeter).nc_element),
                nc.index(right_perp(u, nc.coxeter).nc_element),
            ]
        )
    return {
        "type": nc.cartan.label,
        "elements": [
            {
                "nc_id": i,
                "rank": u.rank,
                "generator_roots": [list(a) for a in u.generators],
            }
            for i, u in enumerate(lat.subcategories)
        ],
        "hasse": [list(e) for e in nc.hasse],
        "perp_pairs": perp,
    }


def _kron_name(lat: KroneckerLattice, e: Element) -> str:
    if e == ("bottom",):
        return "0"
    if e == ("top",):
        return "1"
    if e[0] == "nc":
        root = cartan.reflection_root(lat.nc_part.cartan, e[1])
        return "s(" + ",".join(str(x) for x in root) + ")"
    return "{" + ",".join(sorted(e[1])) + "}"


def kronecker_to_json(lat: KroneckerLattice) -> dict:
    names = [_kron_name(lat, e) for e in lat.elements]
    edges = []
    for i, a in enumerate(lat.elements):
        for j, b in enumerate(lat.elements):
            if i != j and lat.leq(a, b):
                if not any(
                    lat.leq(a, c) and lat.leq(c, b) and c != a and c != b
                    for c in lat.elements
                ):
                    edges.append([i, j])
    return {
        "tube_points": list(lat.tube_points),
        "truncation_bound": lat.nc_part.truncation_bound,
        "elements": [
            {"id": i, "name": names[i], "rank": lat.rank_of(e)}
            for i, e in enumerate(lat.elements)
        ],
        "hasse": edges,
    }


def kronecker_dot(lat: KroneckerLattice) -> str:
    data = kronecker_to_json(lat)
    lines = ["digraph kronecker {", "  rankdir=BT;", '  node [shape=box, fontname="monospace"];']
    for el in data["elements"]:
        lines.append(f'  n{el["id"]} [label="{el["name"]}"];')
    ranks: dict[int, list[int]] = {}
    for el in data["elements"]:
        ranks.setdefault(el["rank"], []).append(el["id"])
    for r in sorted(ranks):
        row = " ".join(f"n{i};" for i in ranks[r])
        lines.append(f"  {{ rank=same; {row} }}")
    for i, j in data["hasse"]:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"

"""Combinatorial model of the bounded derived category of a Dynkin quiver.

The ambient translation quiver is the repetition of the tree: vertices
(n, x) for integer levels n, with an arrow (n,x) -> (n,y) and an arrow
(n-1,y) -> (n,x) for each tree arrow x -> y, and translate
tau(n,x) = (n-1,x).  Morphism dimensions are knitted from the mesh
recursion

    dim(X,Z) = sum over arrows Y -> Z of d * dim(X,Y) - dim(X, tau Z)
               + [Z = X] + [Z = suspension of X],

where the suspension of X is not prescribed: it is detected as the unique
vertex at which the uncorrected recursion first hits -1.  Windows extend
themselves geometrically until the hammock dies out, with a hard cap so
that broken inputs terminate.

The bridge to the module category identifies Hom at equal shifts and
Ext^1 at shift one; everything else vanishes since the algebra is
hereditary.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import repcat
from .errors import StructuralError, WindowError
from .tquiver import TranslationQuiver

Vertex = tuple[int, int]
Vector = tuple[int, ...]

_HARD_CAP = 64  # tau steps a window may auto-extend past its end


@dataclass(frozen=True)
class Hammock:
    """dim Hom(source, -) on the repetition, with the located suspension."""

    source: Vertex
    values: dict[Vertex, int]
    sigma_of_source: Vertex

    def value(self, z: Vertex) -> int:
        return self.values.get(z, 0)

    def __hash__(self):  # values dict is never mutated after build
        return hash((self.source, self.sigma_of_source))


@dataclass(frozen=True)
class MeshReport:
    checked: tuple[Vertex, ...]
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def build_zdelta(
    label: str,
    window: tuple[int, int],
    orientation: tuple[tuple[int, int], ...] | None = None,
) -> TranslationQuiver:
    """The repetition of the tree restricted to levels lo..hi inclusive."""
    q = repcat.dynkin_quiver(label, orientation)
    lo, hi = window
    if lo > hi:
        raise WindowError(f"empty window {window}")
    vertices = tuple((n, x) for n in range(lo, hi + 1) for x in q.vertices)
    arrows = []
    for n in range(lo, hi + 1):
        for x, y in q.arrows:
            arrows.append(((n, x), (n, y), (1, 1)))
            if n + 1 <= hi:
                arrows.append(((n, y), (n + 1, x), (1, 1)))
    tau = {(n, x): (n - 1, x) for n in range(lo + 1, hi + 1) for x in q.vertices}
    return TranslationQuiver(
        vertices=vertices,
        arrows=tuple(arrows),
        tau=tau,
        meta={"label": label, "orientation": q.arrows, "window": (lo, hi)},
    )


def _require_meta(t: TranslationQuiver) -> tuple[str, tuple[tuple[int, int], ...], tuple[int, int]]:
    if not t.meta or "label" not in t.meta:
        raise WindowError("this operation needs a window built by build_zdelta")
    return t.meta["label"], t.meta["orientation"], t.meta["window"]


def _node_order(orientation: tuple[tuple[int, int], ...], nodes: tuple[int, ...]) -> list[int]:
    """Topological order of the tree nodes along the orientation."""
    remaining = set(nodes)
    order = []
    while remaining:
        for v in sorted(remaining):
            if all(s not in remaining for s, t in orientation if t == v):
                order.append(v)
                remaining.discard(v)
                break
        else:
            raise StructuralError("orientation has a cycle")
    return order


def knit_hammock(t: TranslationQuiver, source: Vertex, auto_extend: bool = True) -> Hammock:
    """Knit dim Hom(source, -) forward until the hammock dies out."""
    label, orientation, (lo, hi) = _require_meta(t)
    q = repcat.dynkin_quiver(label, orientation)
    order = _node_order(orientation, q.vertices)
    pos = {x: k for k, x in enumerate(order)}
    src_level, src_node = source
    if not (lo <= src_level <= hi):
        raise WindowError(f"source {source} outside window {(lo, hi)}")

    max_hi = src_level + _HARD_CAP
    values: dict[Vertex, int] = {}
    sigma: Vertex | None = None
    in_arrows = _in_arrow_rule(orientation)

    n = src_level
    while True:
        if n > hi:
            if not auto_extend or n > max_hi:
                raise WindowError(
                    f"window exhausted before hammock of {source} died out"
                )
            hi = min(max_hi, hi + max(4, hi - lo + 1))
        slice_total = 0
        for x in order:
            z = (n, x)
            if n == src_level and pos[x] < pos[src_node]:
                continue
            u = 0
            for y in in_arrows(z):
                u += values.get(y, 0)
            u -= values.get((n - 1, x), 0)
            if z == source:
                u += 1
            if u == -1 and sigma is None:
                sigma = z
                u = 0
            if u < 0:
                raise StructuralError(
                    f"mesh recursion produced {u} at {z}; duplicate suspension event"
                )
            if u:
                values[z] = u
            slice_total += u
        if sigma is not None and slice_total == 0 and n > sigma[0]:
            break
        if sigma is None and n >= max_hi:
            raise WindowError(f"no suspension event found for {source} within the cap")
        n += 1
    return Hammock(source=source, values=values, sigma_of_source=sigma)


def _in_arrow_rule(orientation: tuple[tuple[int, int], ...]):
    """Arrow sources of a vertex in the full (unwindowed) repetition."""
    preds: dict[int, list[int]] = {}
    succs: dict[int, list[int]] = {}
    for s, t in orientation:
        preds.setdefault(t, []).append(s)
        succs.setdefault(s, []).append(t)

    def into(z: Vertex):
        n, x = z
        for s in preds.get(x, ()):
            yield (n, s)
        for t in succs.get(x, ()):
            yield (n - 1, t)

    return into


def suspension(t: TranslationQuiver, x: Vertex) -> Vertex:
    """The shift of x, located by the hammock's -1 event."""
    return _knit_cached(t, x).sigma_of_source


def serre(t: TranslationQuiver, x: Vertex) -> Vertex:
    """Nakayama functor: one translate before the suspension."""
    level, node = suspension(t, x)
    return (level - 1, node)


@functools.lru_cache(maxsize=None)
def _knit_by_key(label, orientation, window, source) -> Hammock:
    return knit_hammock(build_zdelta(label, window, orientation), source)


def _knit_cached(t: TranslationQuiver, source: Vertex) -> Hammock:
    label, orientation, window = _require_meta(t)
    return _knit_by_key(label, orientation, window, source)


def _opposite(t: TranslationQuiver) -> TranslationQuiver:
    """The repetition of the opposite orientation; (n,x) matches (-n,x)."""
    label, orientation, (lo, hi) = _require_meta(t)
    flipped = tuple((b, a) for a, b in orientation)
    return build_zdelta(label, (-hi, -lo), flipped)


def reverse_hammock(t: TranslationQuiver, x: Vertex) -> dict[Vertex, int]:
    """dim Hom(-, x), knitted in the opposite repetition."""
    top = _opposite(t)
    h = _knit_cached(top, (-x[0], x[1]))
    return {(-n, v): k for (n, v), k in h.values.items()}


def ell(t: TranslationQuiver, x: Vertex) -> int:
    """Total morphism length into x, summed over all indecomposables."""
    return sum(reverse_hammock(t, x).values())


def verify_mesh(t: TranslationQuiver, levels: tuple[int, int] | None = None) -> MeshReport:
    """Check 2*ell(Z) = ell(Z) + ell(tau Z) = 2 + sum d * ell(Y) vertex-wise."""
    label, orientation, (lo, hi) = _require_meta(t)
    if levels is None:
        levels = (lo + 1, hi)
    checked = []
    violations = []
    for z in t.vertices:
        n, _ = z
        if not (levels[0] <= n <= levels[1]) or z not in t.tau:
            continue
        checked.append(z)
        lz = ell(t, z)
        ltz = ell(t, t.tau[z])
        mesh = 2 + sum(val[0] * ell(t, y) for y, val in t.arrows_into(z))
        if not (2 * lz == lz + ltz == mesh):
            violations.append(
                f"at {z}: 2*{lz} vs {lz}+{ltz} vs {mesh}"
            )
    return MeshReport(checked=tuple(checked), violations=tuple(violations))


def derived_hom(
    q: repcat.Quiver,
    source: tuple[repcat.Representation, int],
    target: tuple[repcat.Representation, int],
) -> int:
    """Morphisms between stalk complexes: Hom at equal shift, Ext^1 at
    shift one, zero otherwise."""
    (m, i), (n, j) = source, target
    if j == i:
        return repcat.hom(q, m, n).dim
    if j == i + 1:
        return repcat.ext1_dim(q, m, n)
    return 0


def module_slice(q: repcat.Quiver) -> dict[Vector, Vertex]:
    """Embed the module indecomposables (as positive roots) into the
    repetition: projectives span a slice, the rest follow by translation."""
    ar = repcat.ar_quiver_module_category(q)
    # grade the tree so that every arrow i -> j drops the level by one
    grade = {q.vertices[0]: 0}
    frontier = [q.vertices[0]]
    nb = {}
    for s, t in q.arrows:
        nb.setdefault(s, []).append((t, -1))
        nb.setdefault(t, []).append((s, +1))
    while frontier:
        v = frontier.pop()
        for w, step in nb.get(v, ()):
            if w not in grade:
                grade[w] = grade[v] + step
                frontier.append(w)
    shift = -min(grade.values())
    grade = {v: g + shift for v, g in grade.items()}

    proj_of: dict[Vector, int] = {}
    for i in q.vertices:
        reach = {i}
        changed = True
        while changed:
            changed = False
            for s, t in q.arrows:
                if s in reach and t not in reach:
                    reach.add(t)
                    changed = True
        proj_of[tuple(int(v in reach) for v in q.vertices)] = i

    out: dict[Vector, Vertex] = {}
    for root in ar.vertices:
        steps = 0
        cur = root
        while cur in ar.tau:
            cur = ar.tau[cur]
            steps += 1
        if cur not in proj_of:
            raise StructuralError(f"tau-orbit of {root} does not end at a projective")
        i = proj_of[cur]
        out[root] = (grade[i] + steps, i)
    if len(set(out.values())) != len(out):
        raise StructuralError("module slice embedding is not injective")
    return out


def window_dot(t: TranslationQuiver) -> str:
    """DOT for a window; the translate is drawn as dashed back-edges."""
    name = lambda v: f"{v[0]}:{v[1]}"  # noqa: E731
    lines = ["digraph zdelta {", "  rankdir=LR;", '  node [shape=plaintext, fontname="monospace"];']
    for v in t.vertices:
        lines.append(f'  "{name(v)}" [label="({v[0]},{v[1]})"];')
    for s, d, (a, b) in t.arrows:
        val = "" if (a, b) == (1, 1) else f' [label="({a},{b})"]'
        lines.append(f'  "{name(s)}" -> "{name(d)}"{val};')
    for z, tz in sorted(t.tau.items()):
        lines.append(f'  "{name(z)}" -> "{name(tz)}" [style=dashed, constraint=false];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def hammocks_json(t: TranslationQuiver) -> dict:
    """All forward hammocks of the window's vertices, JSON-ready."""
    label, orientation, window = _require_meta(t)
    name = lambda v: f"{v[0]}:{v[1]}"  # noqa: E731
    hams = {}
    for v in t.vertices:
        h = _knit_cached(t, v)
        hams[name(v)] = {
            "values": {name(z): k for z, k in sorted(h.values.items())},
            "suspension": name(h.sigma_of_source),
        }
    return {
        "type": label,
        "orientation": [list(a) for a in orientation],
        "window": list(window),
        "vertices": [name(v) for v in t.vertices],
        "arrows": [[name(s), name(d), list(val)] for s, d, val in t.arrows],
        "tau": {name(z): name(tz) for z, tz in sorted(t.tau.items())},
        "hammocks": hams,
    }

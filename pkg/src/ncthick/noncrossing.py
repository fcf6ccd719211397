"""The poset NC(W,c) of noncrossing partitions and its lattice structure.

Enumeration grows prefix products of reflections rank by rank, so the
ambient Weyl group is never materialized; that is what makes E6-E8 sized
posets reachable.  Meets and joins are computed from the explicit order
relation, favouring correctness over speed at these sizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import cartan
from .cartan import CartanDatum, WeylElement
from .errors import (
    LatticeStructureError,
    NotInPosetError,
    UnsupportedLabelError,
)

Vector = tuple[int, ...]


@dataclass
class NCLattice:
    """Interval [id, c] in the absolute order, with rank and cover data."""

    cartan: CartanDatum
    coxeter: WeylElement
    elements: tuple[WeylElement, ...]
    ranks: dict[WeylElement, int]
    truncation_bound: int | None = None

    _index: dict[WeylElement, int] = field(init=False, repr=False)
    _inverses: dict[WeylElement, WeylElement] = field(init=False, repr=False)
    _leq_cache: dict[tuple[int, int], bool] = field(init=False, repr=False)
    _hasse: tuple[tuple[int, int], ...] | None = field(init=False, repr=False)
    _words: dict[WeylElement, tuple[Vector, ...]] | None = field(init=False, repr=False)

    def __post_init__(self):
        self._index = {w: i for i, w in enumerate(self.elements)}
        self._inverses = {}
        self._leq_cache = {}
        self._hasse = None
        self._words = None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, w: WeylElement) -> bool:
        return w in self._index

    def index(self, w: WeylElement) -> int:
        try:
            return self._index[w]
        except KeyError:
            raise NotInPosetError("element does not lie in NC(W,c)") from None

    def rank_of(self, w: WeylElement) -> int:
        self.index(w)
        return self.ranks[w]

    def identity(self) -> WeylElement:
        return cartan.identity_element(self.cartan)

    def _inv(self, w: WeylElement) -> WeylElement:
        if w not in self._inverses:
            self._inverses[w] = w.inverse()
        return self._inverses[w]

    def leq(self, u: WeylElement, v: WeylElement) -> bool:
        i, j = self.index(u), self.index(v)
        if i == j:
            return True
        key = (i, j)
        if key not in self._leq_cache:
            ru, rv = self.ranks[u], self.ranks[v]
            if ru >= rv:
                ok = False
            elif self.truncation_bound is not None:
                # truncated Kronecker poset: id < reflections < c by rank
                ok = True
            else:
                ok = ru + cartan.absolute_length(self.cartan, self._inv(u) * v) == rv
            self._leq_cache[key] = ok
        return self._leq_cache[key]

    @property
    def hasse(self) -> tuple[tuple[int, int], ...]:
        """Cover relations as index pairs (lower, upper)."""
        if self._hasse is None:
            by_rank: dict[int, list[int]] = {}
            for i, w in enumerate(self.elements):
                by_rank.setdefault(self.ranks[w], []).append(i)
            edges = []
            for r in sorted(by_rank):
                for i in by_rank.get(r, ()):
                    for j in by_rank.get(r + 1, ()):
                        if self.leq(self.elements[i], self.elements[j]):
                            edges.append((i, j))
            self._hasse = tuple(edges)
        return self._hasse

    def reflection_members(self) -> tuple[WeylElement, ...]:
        return tuple(w for w in self.elements if self.ranks[w] == 1)

    def canonical_word(self, w: WeylElement) -> tuple[Vector, ...]:
        """Lexicographically least shortest reflection word for w."""
        if self._words is None:
            self._words = self._compute_words()
        return self._words[w]

    def _compute_words(self) -> dict[WeylElement, tuple[Vector, ...]]:
        gens = [(cartan.reflection_root(self.cartan, t), t) for t in self.reflection_members()]
        gens.sort()
        words = {self.identity(): ()}
        frontier = [self.identity()]
        while frontier:
            frontier.sort(key=lambda w: words[w])
            nxt = []
            for w in frontier:
                for root, t in gens:
                    u = w * t
                    if u in self._index and u not in words and self.ranks[u] == self.ranks[w] + 1:
                        words[u] = words[w] + (root,)
                        nxt.append(u)
            frontier = nxt
        if len(words) != len(self.elements):
            raise LatticeStructureError("some element has no reflection word inside NC")
        return words


def enumerate_nc(
    cd: CartanDatum,
    c: WeylElement | None = None,
    reflection_order: tuple[WeylElement, ...] | None = None,
) -> NCLattice:
    """All w with id <= w <= c, grown by prefix products of reflections."""
    if not cd.is_finite():
        raise UnsupportedLabelError("use nc_kronecker for the affine rank-2 type")
    if c is None:
        c = cartan.coxeter_element(cd)
    if not cartan.is_coxeter_element(cd, c):
        raise NotInPosetError("the given element is not a Coxeter element")
    n = cd.rank
    refs = reflection_order if reflection_order is not None else cartan.reflections(cd)
    ident = cartan.identity_element(cd)
    ranks: dict[WeylElement, int] = {ident: 0}
    # frontier entries carry (w, w^-1 c) so no inverses are ever computed
    frontier: dict[WeylElement, WeylElement] = {ident: c}
    for r in range(n):
        nxt: dict[WeylElement, WeylElement] = {}
        for w, rem in frontier.items():
            for t in refs:
                w2 = w * t
                if w2 in nxt or w2 in ranks:
                    continue
                rem2 = t * rem
                if cartan.absolute_length(cd, rem2) == n - r - 1:
                    nxt[w2] = rem2
        for w2 in nxt:
            ranks[w2] = r + 1
        frontier = nxt
    elements = tuple(sorted(ranks, key=lambda w: (ranks[w], w.matrix)))
    return NCLattice(cartan=cd, coxeter=c, elements=elements, ranks=ranks)


def nc_kronecker(bound: int) -> NCLattice:
    """The truncated Kronecker lattice: id, c, and the reflections with
    root coordinate sum at most 2*bound+1.  Height two at every bound."""
    cd = cartan.build_cartan(cartan.KRONECKER)
    c = cartan.coxeter_element(cd)
    refs = cartan.reflections(cd, bound)
    ident = cartan.identity_element(cd)
    ranks = {ident: 0, c: 2}
    for t in refs:
        ranks[t] = 1
    elements = tuple(sorted(ranks, key=lambda w: (ranks[w], w.matrix)))
    return NCLattice(
        cartan=cd, coxeter=c, elements=elements, ranks=ranks, truncation_bound=bound
    )


def kreweras(lattice: NCLattice, w: WeylElement) -> WeylElement:
    """The complement map w -> w^-1 c."""
    lattice.index(w)
    out = w.inverse() * lattice.coxeter
    if out not in lattice:
        raise LatticeStructureError("Kreweras complement escaped the lattice")
    return out


def co_kreweras(lattice: NCLattice, w: WeylElement) -> WeylElement:
    """The inverse complement map w -> c w^-1."""
    lattice.index(w)
    out = lattice.coxeter * w.inverse()
    if out not in lattice:
        raise LatticeStructureError("co-Kreweras complement escaped the lattice")
    return out


def _extremum(lattice: NCLattice, bounds: list[WeylElement], lower: bool) -> WeylElement:
    if not bounds:
        raise LatticeStructureError("empty bound set; poset is not a lattice")
    if lower:
        cand = max(bounds, key=lambda x: (lattice.ranks[x], x.matrix))
        ok = all(lattice.leq(x, cand) for x in bounds)
    else:
        cand = min(bounds, key=lambda x: (lattice.ranks[x], x.matrix))
        ok = all(lattice.leq(cand, x) for x in bounds)
    if not ok:
        raise LatticeStructureError("bound set has no unique extremum; poset is not a lattice")
    return cand


def meet(lattice: NCLattice, u: WeylElement, v: WeylElement) -> WeylElement:
    """Greatest lower bound; finite labels only."""
    if lattice.truncation_bound is not None:
        raise UnsupportedLabelError("meet is defined for finite labels only")
    lower = [x for x in lattice.elements if lattice.leq(x, u) and lattice.leq(x, v)]
    return _extremum(lattice, lower, lower=True)


def join(lattice: NCLattice, u: WeylElement, v: WeylElement) -> WeylElement:
    """Least upper bound; finite labels only."""
    if lattice.truncation_bound is not None:
        raise UnsupportedLabelError("join is defined for finite labels only")
    upper = [x for x in lattice.elements if lattice.leq(u, x) and lattice.leq(v, x)]
    return _extremum(lattice, upper, lower=False)


def _word_label(word: tuple[Vector, ...]) -> str:
    if not word:
        return "id"
    return "".join("s(" + ",".join(str(x) for x in root) + ")" for root in word)


def hasse_dot(lattice: NCLattice) -> str:
    """Deterministic rank-layered DOT digraph of the cover relations."""
    lines = [
        "digraph nc {",
        "  rankdir=BT;",
        '  node [shape=box, fontname="monospace"];',
    ]
    by_rank: dict[int, list[int]] = {}
    for i, w in enumerate(lattice.elements):
        by_rank.setdefault(lattice.ranks[w], []).append(i)
    for i, w in enumerate(lattice.elements):
        label = _word_label(lattice.canonical_word(w))
        lines.append(f'  n{i} [label="{label}"];')
    for r in sorted(by_rank):
        row = " ".join(f"n{i};" for i in by_rank[r])
        lines.append(f"  {{ rank=same; {row} }}")
    for i, j in lattice.hasse:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(lattice: NCLattice) -> dict:
    """JSON form: type, coxeter word, ranked elements, and Hasse edges."""
    cox_word = [list(root) for root in lattice.canonical_word(lattice.coxeter)]
    data = {
        "type": lattice.cartan.label,
        "coxeter_word": cox_word,
        "elements": [
            {
                "id": i,
                "rank": lattice.ranks[w],
                "matrix": [list(row) for row in w.matrix],
            }
            for i, w in enumerate(lattice.elements)
        ],
        "hasse": [list(e) for e in lattice.hasse],
    }
    if lattice.truncation_bound is not None:
        data["truncation_bound"] = lattice.truncation_bound
    return data

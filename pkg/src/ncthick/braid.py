"""Reflection factorizations of Coxeter elements and the Hurwitz action.

The braid generator acts by conjugating to the left,

    (..., x_i, x_{i+1}, ...)  |->  (..., x_i x_{i+1} x_i^-1, x_i, ...),

with the inverse generator undoing it.  Either convention gives the same
orbits; this one is fixed here once and for all.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cartan
from .cartan import CartanDatum, WeylElement
from .errors import NotInPosetError, NotReflectionError, ResourceLimitError

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Factorization:
    """An ordered tuple of reflections multiplying to a fixed target."""

    cartan: CartanDatum
    parts: tuple[WeylElement, ...]
    target: WeylElement

    def __post_init__(self):
        prod = cartan.identity_element(self.cartan)
        for x in self.parts:
            if not cartan.is_reflection(self.cartan, x):
                raise NotReflectionError("factorization entry is not a reflection")
            prod = prod * x
        if prod != self.target:
            raise NotInPosetError("parts do not multiply to the target")

    def __len__(self) -> int:
        return len(self.parts)

    def key(self) -> tuple:
        return tuple(x.matrix for x in self.parts)

    def roots(self) -> tuple[Vector, ...]:
        return tuple(cartan.reflection_root(self.cartan, x) for x in self.parts)


def braid_act(f: Factorization, i: int, inverse: bool = False) -> Factorization:
    """Apply the i-th braid generator (1-based, 1 <= i < len(parts))."""
    if not 1 <= i < len(f.parts):
        raise IndexError(f"braid index {i} out of range for length {len(f.parts)}")
    parts = list(f.parts)
    a, b = parts[i - 1], parts[i]
    if inverse:
        parts[i - 1], parts[i] = b, b * a * b
    else:
        parts[i - 1], parts[i] = a * b * a, a
    return Factorization(cartan=f.cartan, parts=tuple(parts), target=f.target)


def enumerate_factorizations(
    cd: CartanDatum, c: WeylElement | None = None, max_rank: int = 4
) -> tuple[Factorization, ...]:
    """All length-n reflection tuples with product c, by brute force.

    The last factor is forced by the first n-1, so the search space is
    |W_1|^(n-1); capped at rank <= max_rank.
    """
    if not cd.is_finite():
        raise ResourceLimitError("cannot enumerate factorizations in infinite type")
    if cd.rank > max_rank:
        raise ResourceLimitError(
            f"rank {cd.rank} exceeds the brute-force cap {max_rank}"
        )
    if c is None:
        c = cartan.coxeter_element(cd)
    refs = cartan.reflections(cd)
    ident = cartan.identity_element(cd)
    out: list[Factorization] = []

    def grow(prefix: tuple[WeylElement, ...], prod: WeylElement) -> None:
        if len(prefix) == cd.rank - 1:
            last = prod.inverse() * c
            if cartan.is_reflection(cd, last):
                out.append(Factorization(cd, prefix + (last,), c))
            return
        for t in refs:
            grow(prefix + (t,), prod * t)

    grow((), ident)
    return tuple(sorted(out, key=Factorization.key))


def hurwitz_orbit(f: Factorization, max_size: int = 1_000_000) -> tuple[Factorization, ...]:
    """Closure of {f} under all braid generators and their inverses."""
    seen = {f.key(): f}
    frontier = [f]
    while frontier:
        nxt = []
        for g in frontier:
            for i in range(1, len(g.parts)):
                for inv in (False, True):
                    h = braid_act(g, i, inverse=inv)
                    k = h.key()
                    if k not in seen:
                        seen[k] = h
                        nxt.append(h)
                        if len(seen) > max_size:
                            raise ResourceLimitError("Hurwitz orbit exceeded cap")
        frontier = nxt
    return tuple(sorted(seen.values(), key=Factorization.key))


def to_json(facts: tuple[Factorization, ...]) -> dict:
    """Factorizations as lists of root labels (coordinate lists)."""
    if not facts:
        return {"type": None, "factorizations": []}
    return {
        "type": facts[0].cartan.label,
        "factorizations": [[list(r) for r in f.roots()] for f in facts],
    }

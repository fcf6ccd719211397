"""Valued translation quivers: vertices, valued arrows, partial translate."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable

Valuation = tuple[int, int]


@dataclass
class TranslationQuiver:
    """A quiver with arrow valuations (d, d') and a partial translate tau.

    Vertices may be any hashable labels.  Where tau(z) is defined, the
    arrows into z must biject with the arrows out of tau(z); this mesh
    shape is checkable via check_mesh_shape, not enforced on build, so
    that windows cut out of an ambient quiver remain representable.
    """

    vertices: tuple[Hashable, ...]
    arrows: tuple[tuple[Hashable, Hashable, Valuation], ...]
    tau: dict[Hashable, Hashable]
    meta: dict | None = None

    _into: dict[Hashable, tuple] = field(init=False, repr=False)
    _out: dict[Hashable, tuple] = field(init=False, repr=False)

    def __post_init__(self):
        for _, _, (d, dp) in self.arrows:
            if d < 1 or dp < 1:
                raise ValueError("valuations must be positive")
        into: dict[Hashable, list] = {v: [] for v in self.vertices}
        out: dict[Hashable, list] = {v: [] for v in self.vertices}
        for s, t, val in self.arrows:
            out[s].append((t, val))
            into[t].append((s, val))
        self._into = {v: tuple(xs) for v, xs in into.items()}
        self._out = {v: tuple(xs) for v, xs in out.items()}

    def arrows_into(self, v: Hashable) -> tuple[tuple[Hashable, Valuation], ...]:
        return self._into.get(v, ())

    def arrows_out_of(self, v: Hashable) -> tuple[tuple[Hashable, Valuation], ...]:
        return self._out.get(v, ())

    def check_mesh_shape(self) -> list[str]:
        """Report vertices where arrows into z fail to match arrows out of tau z."""
        problems = []
        for z, tz in self.tau.items():
            into = sorted((src, val) for src, val in self.arrows_into(z))
            out = sorted((dst, (val[1], val[0])) for dst, val in self.arrows_out_of(tz))
            if [v for v, _ in into] != [v for v, _ in out]:
                problems.append(f"mesh at {z}: sources {into} vs tau-targets {out}")
        return problems

    def reverse(self) -> "TranslationQuiver":
        """Opposite translation quiver: arrows flipped, valuations swapped,
        translate inverted."""
        return TranslationQuiver(
            vertices=self.vertices,
            arrows=tuple((t, s, (dp, d)) for s, t, (d, dp) in self.arrows),
            tau={v: k for k, v in self.tau.items()},
            meta=None,
        )

"""On-line coloring strategies for Algorithm."""

from __future__ import annotations

from collections import Counter

import numpy as np

from .graph import GraphView, OddCycle, bipartition_of_component


def least_absent(colors) -> int:
    c = 1
    while c in colors:
        c += 1
    return c


def first_fit_color(view: GraphView, v: int) -> int:
    return least_absent(view.neighbor_colors(v))


def cbip_color(view: GraphView, v: int) -> int:
    """Least color missing from the side of v's component opposite to v.

    Recomputes the bipartition from scratch; raises OddCycle if the
    component is not bipartite.
    """
    _, other = bipartition_of_component(view, v)
    return least_absent({view.color(u) for u in other})


def fresh_color(view: GraphView, v: int) -> int:
    return view.max_color + 1


class FirstFit:
    name = "first-fit"

    def __init__(self, seed: int = 0) -> None:
        self.seed = seed

    def choose_color(self, view: GraphView, v: int) -> int:
        return first_fit_color(view, v)


class FreshColor:
    name = "fresh"

    def __init__(self, seed: int = 0) -> None:
        self.seed = seed

    def choose_color(self, view: GraphView, v: int) -> int:
        return fresh_color(view, v)


class RandomAdmissible:
    """Uniform over {1..max used + 1} minus the neighbors' colors.

    Draws come from numpy's PCG64 seeded with ``seed``; one draw per vertex,
    so the color is a function of the seed and the visible history.
    """

    name = "random"

    def __init__(self, seed: int = 0) -> None:
        self.seed = seed
        self._rng = np.random.Generator(np.random.PCG64(seed))

    def choose_color(self, view: GraphView, v: int) -> int:
        taken = view.neighbor_colors(v)
        options = [c for c in range(1, view.max_color + 2) if c not in taken]
        return options[int(self._rng.integers(len(options)))]


class _Part:
    __slots__ = ("members", "counts", "bipartite")

    def __init__(self, v: int) -> None:
        self.members = [v]
        self.counts = (Counter(), Counter())  # colors by parity
        self.bipartite = True


class CBIP:
    """Bipartite-component coloring, maintained incrementally.

    Each component keeps its vertices' parities and a color multiset per
    parity class, so a new vertex costs time proportional to the smaller
    pieces it merges. With ``strict=True`` a non-bipartite component raises
    OddCycle; otherwise such components fall back to First-Fit.
    """

    name = "cbip"

    def __init__(self, seed: int = 0, strict: bool = False) -> None:
        self.seed = seed
        self.strict = strict
        self._part: dict[int, _Part] = {}
        self._parity: dict[int, int] = {}
        self._seen = 0
        self.fallbacks = 0

    def choose_color(self, view: GraphView, v: int) -> int:
        # catch up on vertices this instance did not color itself
        for u in range(self._seen + 1, v):
            self._absorb(view, u)
            self._record(u, view.color(u))
        part = self._absorb(view, v)
        self._seen = v
        if part.bipartite:
            opposite = part.counts[1 - self._parity[v]]
            color = least_absent(opposite)
        else:
            if self.strict:
                raise OddCycle(f"component of vertex {v} is not bipartite")
            self.fallbacks += 1
            color = first_fit_color(view, v)
        self._record(v, color)
        return color

    def _record(self, v: int, color: int | None) -> None:
        if color is not None:
            self._part[v].counts[self._parity[v]][color] += 1

    def _absorb(self, view: GraphView, v: int) -> _Part:
        part = _Part(v)
        self._part[v] = part
        self._parity[v] = 0
        for u in view.neighbors(v):
            if u > v:
                continue
            other = self._part[u]
            if other is part:
                if self._parity[u] == self._parity[v]:
                    part.bipartite = False
                continue
            # u must sit opposite v; flip the smaller piece if needed
            flip = self._parity[u] == self._parity[v]
            big, small = (part, other) if len(part.members) >= len(other.members) else (other, part)
            for w in small.members:
                if flip:
                    self._parity[w] ^= 1
                self._part[w] = big
            big.members.extend(small.members)
            s0, s1 = small.counts
            if flip:
                s0, s1 = s1, s0
            big.counts[0].update(s0)
            big.counts[1].update(s1)
            big.bipartite = big.bipartite and small.bipartite
            part = big
        return part


ALGORITHMS = {
    "first-fit": FirstFit,
    "cbip": CBIP,
    "random": RandomAdmissible,
    "fresh": FreshColor,
}


def make_algorithm(name: str, seed: int = 0, **kwargs):
    try:
        cls = ALGORITHMS[name]
    except KeyError:
        raise KeyError(f"unknown algorithm {name!r}; choose from {sorted(ALGORITHMS)}") from None
    return cls(seed=seed, **kwargs)

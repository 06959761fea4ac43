"""Presenter strategies and the vertex bounds they guarantee."""

from __future__ import annotations

import math

from .bipartite import BipartitePresenter
from .oddgirth7 import OddGirth7Presenter, vertex_bound as oddgirth7_bound
from .trianglefree import TriangleFreePresenter

PRESENTERS = {
    "bipartite": BipartitePresenter,
    "triangle-free": TriangleFreePresenter,
    "odd-girth-7": OddGirth7Presenter,
}

# graph class each presenter promises: the odd girth must be at least this
CLASS_ODD_GIRTH = {
    "bipartite": math.inf,
    "triangle-free": 5,
    "odd-girth-7": 7,
}

BIPARTITE_CONSTANT = 8 + 7 * math.sqrt(2)


def bipartite_bound(c: int) -> float:
    return BIPARTITE_CONSTANT * 2 ** (c / 2)


def trianglefree_bound(c: int) -> int:
    return c * c


def vertex_bound(presenter: str, c: int) -> float:
    """Largest n at which the named presenter must already have forced c colors."""
    if presenter == "bipartite":
        return bipartite_bound(c)
    if presenter == "triangle-free":
        return trianglefree_bound(c)
    if presenter == "odd-girth-7":
        return oddgirth7_bound(c)
    raise KeyError(f"unknown presenter {presenter!r}; choose from {sorted(PRESENTERS)}")


def default_round_cap(presenter: str, c: int) -> int:
    return int(10 * vertex_bound(presenter, c)) + 1


def make_presenter(name: str, c: int, **kwargs):
    try:
        cls = PRESENTERS[name]
    except KeyError:
        raise KeyError(f"unknown presenter {name!r}; choose from {sorted(PRESENTERS)}") from None
    return cls(c=c, **kwargs)


__all__ = [
    "BipartitePresenter", "TriangleFreePresenter", "OddGirth7Presenter", "PRESENTERS",
    "CLASS_ODD_GIRTH", "bipartite_bound", "trianglefree_bound", "oddgirth7_bound",
    "vertex_bound", "default_round_cap", "make_presenter",
]

"""Transcript checks that rely only on the graph oracles, never on strategy state."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .game import GameOutcome, Transcript, replay, replay_verify
from .graph import (CHROMATIC_ORACLE_CAP, ColoredGraph, chromatic_number_oracle,
                    has_odd_cycle_shorter_than, is_bipartite, odd_girth)

DEPTHS = ("structural", "full-odd-girth", "oracle")
FULL_ODD_GIRTH_LIMIT = 10_000
SPOT_SOURCES = 64


@dataclass
class VerifyReport:
    outcome: GameOutcome
    class_ok: bool
    odd_girth: float | None = None  # exact unless odd_girth_sampled
    odd_girth_sampled: bool = False
    chromatic_number: int | None = None
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.class_ok and not self.problems


def class_member(g: ColoredGraph, min_odd_girth: float) -> bool:
    """Odd girth of g is at least ``min_odd_girth`` (inf means bipartite)."""
    if math.isinf(min_odd_girth):
        return is_bipartite(g)
    return not has_odd_cycle_shorter_than(g, int(min_odd_girth))


def spot_sources(n: int, k: int = SPOT_SOURCES) -> list[int]:
    if n <= k:
        return list(range(1, n + 1))
    return sorted({1 + (i * (n - 1)) // (k - 1) for i in range(k)})


def verify_graph(g: ColoredGraph, min_odd_girth: float, depth: str = "structural") -> VerifyReport:
    if depth not in DEPTHS:
        raise ValueError(f"unknown verification depth {depth!r}")
    outcome = GameOutcome(g.n, g.num_colors(), None)
    report = VerifyReport(outcome, class_member(g, min_odd_girth))
    if not g.is_proper():
        report.problems.append("coloring is not proper")
    if depth in ("full-odd-girth", "oracle"):
        if g.n <= FULL_ODD_GIRTH_LIMIT:
            report.odd_girth = odd_girth(g)
        else:
            report.odd_girth = odd_girth(g, sources=spot_sources(g.n))
            report.odd_girth_sampled = True
        if report.odd_girth < min_odd_girth:
            report.problems.append(f"odd girth {report.odd_girth} below {min_odd_girth}")
    if depth == "oracle" and g.n <= CHROMATIC_ORACLE_CAP:
        chi = chromatic_number_oracle(g)
        report.chromatic_number = chi
        if g.num_colors() < chi:
            report.problems.append(f"{g.num_colors()} colors used but chromatic number is {chi}")
    if not report.class_ok:
        report.problems.append("graph is outside the promised class")
    return report


def verify_transcript(t: Transcript, min_odd_girth: float, depth: str = "structural") -> VerifyReport:
    """Replay (rechecking properness per round) and check class membership."""
    outcome = replay_verify(t)
    report = verify_graph(replay(t), min_odd_girth, depth)
    report.outcome = outcome
    return report

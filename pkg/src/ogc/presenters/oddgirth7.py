"""Presenter forcing c colors on graphs with neither C3 nor C5.

The Presenter files vertices in a table with c rows (one per color, in order
of first appearance) and 3c columns numbered 0..3c-1; a cell holds at most 3c
vertices and is *blocked* once full. Phase k presents fans (independent sets
of 3c(1 + ceil(ln 3c)) vertices) adjacent to groups drawn from column k, and
files part of each fan into a single column to the right of k.

Weights are exact Fractions. The ledger checks run as the game proceeds and
are reported through ``stats()``; with ``strict=True`` the first violation
raises instead.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Generator, Iterable

from ..game import GeneratorPresenter, Move


class LedgerViolation(AssertionError):
    pass


def ceil_ln(x: int) -> int:
    """ceil(ln x) for an integer x >= 1 (e^m is never an integer for m >= 1)."""
    with localcontext() as ctx:
        ctx.prec = 60
        return math.ceil(Decimal(x).ln())


def ln_lower(x: int) -> Fraction:
    """A rational strictly below ln x (Decimal.ln is correctly rounded)."""
    with localcontext() as ctx:
        ctx.prec = 60
        return Fraction(Decimal(x).ln()) - Fraction(1, 10**50)


def fan_size(c: int) -> int:
    return 3 * c * (1 + ceil_ln(3 * c))


def vertex_bound(c: int) -> int:
    """Most vertices the strategy can present: 27c^3(1 + ceil(ln 3c))."""
    return 27 * c**3 * (1 + ceil_ln(3 * c))


def row_weight_bound(c: int) -> Fraction:
    """A rational lower bound on 9c^2(1 + ln 3c); row totals are kept below it."""
    return 9 * c * c * (1 + ln_lower(3 * c))


class WeightedTable:
    def __init__(self, c: int) -> None:
        self.c = c
        self.cap = 3 * c
        self.ncols = 3 * c
        self.row_of_color: dict[int, int] = {}
        self.cells: dict[tuple[int, int], list[tuple[int, Fraction]]] = defaultdict(list)
        self.column_of: dict[int, int] = {}
        self.row_of: dict[int, int] = {}
        self.weight_of: dict[int, Fraction] = {}
        self.row_weight: dict[int, Fraction] = defaultdict(Fraction)
        # per row: how many vertices carry weight 3c/t, keyed by t
        self.row_denominators: dict[int, Counter] = defaultdict(Counter)
        self.blocked_count = 0

    @property
    def rows(self) -> range:
        return range(1, self.c + 1)

    def row_for(self, color: int) -> int:
        row = self.row_of_color.get(color)
        if row is None:
            row = len(self.row_of_color) + 1
            self.row_of_color[color] = row
        return row

    def size(self, row: int, col: int) -> int:
        cell = self.cells.get((row, col))
        return len(cell) if cell else 0

    def available(self, row: int, col: int) -> bool:
        return self.size(row, col) < self.cap

    def blocked(self, row: int, col: int) -> bool:
        return not self.available(row, col)

    def put(self, v: int, row: int, col: int, weight: Fraction, t: int | None) -> None:
        was_available = self.available(row, col)
        self.cells[row, col].append((v, weight))
        self.column_of[v] = col
        self.row_of[v] = row
        self.weight_of[v] = weight
        self.row_weight[row] += weight
        if t is not None:
            self.row_denominators[row][t] += 1
        if was_available and self.blocked(row, col):
            self.blocked_count += 1

    def column_vertices(self, col: int) -> list[int]:
        out = []
        for row in self.rows:
            out.extend(v for v, _ in self.cells.get((row, col), ()))
        return out


def split_groups(table: WeightedTable, k: int) -> list[list[int]]:
    """3c groups; group g takes the g-th vertex of every blocked cell of column k."""
    n_groups = 3 * table.c
    blocked_rows = [r for r in table.rows if table.blocked(r, k)]
    if k == 0 or not blocked_rows:
        return [[] for _ in range(n_groups)]
    return [[table.cells[r, k][g][0] for r in blocked_rows] for g in range(n_groups)]


def rule1_broken(table: WeightedTable, k: int) -> bool:
    """Some color is available for column k but blocked in every column right of k."""
    right = range(k + 1, table.ncols)
    return any(table.available(r, k) and all(table.blocked(r, j) for j in right)
               for r in table.rows)


@dataclass
class FanRecord:
    fan_id: int
    phase: int
    group: int
    R: tuple[int, ...]
    vertices: list[tuple[int, int]] = field(default_factory=list)  # (vertex, color)
    disposition: str = "truncated"  # blocked | interesting | truncated
    column: int | None = None
    cell: tuple[int, int] | None = None
    placed: list[int] = field(default_factory=list)
    discarded: list[int] = field(default_factory=list)
    placed_weight: Fraction = Fraction(0)


def try_rule2(table: WeightedTable, fan: list[tuple[int, int]], k: int):
    """Lexicographically least (row, col), col > k, that the fan can fill to capacity.

    Returns ((row, col), vertices to file) or None.
    """
    by_row: dict[int, list[int]] = defaultdict(list)
    for v, color in fan:
        by_row[table.row_for(color)].append(v)
    for row in sorted(by_row):
        have = len(by_row[row])
        for j in range(k + 1, table.ncols):
            m = table.size(row, j)
            if m < table.cap and have >= table.cap - m:
                return (row, j), by_row[row][: table.cap - m]
    return None


@dataclass
class Rule3Plan:
    column: int
    t: dict[int, int]  # row -> available columns right of k
    weights: dict[int, Fraction]  # row -> weight of its fan vertices
    column_weight: dict[int, Fraction]  # col -> incident edge weight
    total_weight: Fraction
    placements: list[tuple[int, int]]  # (vertex, row)
    anomalous: list[int]  # fan vertices whose color has no available column


def rule3_interesting(table: WeightedTable, fan: list[tuple[int, int]], k: int) -> Rule3Plan:
    three_c = 3 * table.c
    right = range(k + 1, table.ncols)
    counts: Counter = Counter(table.row_for(color) for _, color in fan)
    t = {row: sum(1 for j in right if table.available(row, j)) for row in counts}
    weights = {row: Fraction(three_c, t[row]) for row in counts if t[row] > 0}
    column_weight = {
        j: sum((counts[row] * w for row, w in weights.items() if table.available(row, j)), Fraction(0))
        for j in right
    }
    total = sum(column_weight.values(), Fraction(0))
    best = max(right, key=lambda j: (column_weight[j], -j))
    placements, anomalous = [], []
    for v, color in fan:
        row = table.row_for(color)
        if t[row] == 0:
            anomalous.append(v)
        elif table.available(row, best):
            placements.append((v, row))
    return Rule3Plan(best, t, weights, column_weight, total, placements, anomalous)


class OddGirth7Presenter(GeneratorPresenter):
    name = "odd-girth-7"

    def __init__(self, c: int, strict: bool = False) -> None:
        super().__init__()
        if c < 1:
            raise ValueError("c must be positive")
        self.c = c
        self.strict = strict
        self.table = WeightedTable(c)
        self.fan_size = fan_size(c)
        self.row_bound = row_weight_bound(c)
        self.fans: list[FanRecord] = []
        self.phase = 0
        self.phases_completed = 0
        self.presented_phase = -1  # phase of the latest presented vertex
        self.broken_at: list[int] = []
        self.discarded: set[int] = set()
        self.intro_column: dict[int, int] = {}  # vertex -> column its neighbors were in
        self._annotations: dict[int, str] = {}
        self.violations: list[str] = []
        self.counters: Counter = Counter()

    def stats(self) -> dict[str, int]:
        out = {
            "phases": self.presented_phase + 1,
            # a break found while running ahead of a finished game does not count
            "broken_phases": sum(1 for k in self.broken_at if k < self.presented_phase),
            "fans": sum(1 for f in self.fans if f.vertices),
            "interesting_fans": 0,
            "blocked_cells": self.table.blocked_count,
            "anomalies": 0,
            "weight_violations": 0,
            "identity_violations": 0,
            "overflow_violations": 0,
            "row_weight_violations": 0,
            "census_violations": 0,
        }
        out.update(self.counters)
        return out

    def final_annotation(self, v: int) -> str | None:
        return self._annotations.get(v)

    def _flag(self, counter: str, msg: str) -> None:
        self.counters[counter] += 1
        self.violations.append(msg)
        if self.strict:
            raise LedgerViolation(msg)

    def strategy(self) -> Generator[Move, tuple[int, int], None]:
        table = self.table
        for k in range(table.ncols):
            self.phase = k
            for g, group in enumerate(split_groups(table, k), start=1):
                if rule1_broken(table, k):
                    self.broken_at.append(k)
                    break
                fan = FanRecord(len(self.fans) + 1, k, g, tuple(group))
                self.fans.append(fan)
                note = f"phase={k} group={g} fan={fan.fan_id}"
                nbrs = frozenset(group)
                for _ in range(self.fan_size):
                    v, color = yield Move(nbrs, f"{note} rule=- col=-")
                    self.presented_phase = k
                    fan.vertices.append((v, color))
                    if group:
                        self.intro_column[v] = k
                self._file_fan(fan, k)
                rule = "2" if fan.disposition == "blocked" else "3"
                for v, _ in fan.vertices:
                    self._annotations[v] = f"{note} rule={rule} col={fan.column}"
            self.phases_completed = k + 1

    def _file_fan(self, fan: FanRecord, k: int) -> None:
        table = self.table
        hit = try_rule2(table, fan.vertices, k)
        if hit is not None:
            (row, col), chosen = hit
            for v in chosen:
                table.put(v, row, col, Fraction(0), None)
            fan.disposition, fan.cell, fan.column, fan.placed = "blocked", (row, col), col, list(chosen)
            if not table.blocked(row, col):
                self._flag("overflow_violations", f"fan {fan.fan_id}: cell {row, col} not blocked by rule 2")
        else:
            plan = rule3_interesting(table, fan.vertices, k)
            self.counters["interesting_fans"] += 1
            if plan.anomalous:
                self.counters["anomalies"] += len(plan.anomalous)
            usable = len(fan.vertices) - len(plan.anomalous)
            if plan.total_weight != usable * 3 * self.c:
                self._flag("identity_violations",
                           f"fan {fan.fan_id}: edge weight {plan.total_weight} != {usable}*3c")
            for v, row in plan.placements:
                table.put(v, row, plan.column, plan.weights[row], plan.t[row])
            fan.disposition, fan.column = "interesting", plan.column
            fan.placed = [v for v, _ in plan.placements]
            fan.placed_weight = plan.column_weight[plan.column]
            placed_sum = sum((table.weight_of[v] for v in fan.placed), Fraction(0))
            if placed_sum != fan.placed_weight or placed_sum < len(fan.vertices):
                self._flag("weight_violations",
                           f"fan {fan.fan_id}: placed weight {placed_sum} < |F|={len(fan.vertices)}")
            for row in table.rows:
                if table.size(row, plan.column) > table.cap:
                    self._flag("overflow_violations", f"fan {fan.fan_id}: cell {row, plan.column} overflows")
        placed = set(fan.placed)
        fan.discarded = [v for v, _ in fan.vertices if v not in placed]
        self.discarded.update(fan.discarded)
        self._check_rows()

    def _check_rows(self) -> None:
        table, c3 = self.table, 3 * self.c
        for row in table.rows:
            if table.row_weight[row] >= self.row_bound:
                self._flag("row_weight_violations",
                           f"row {row}: weight {float(table.row_weight[row]):.3f} reaches the bound")
            dens = table.row_denominators[row]
            running = 0
            for t in range(1, c3 + 1):
                running += dens.get(t, 0)
                if running > c3 * t:
                    self._flag("census_violations",
                               f"row {row}: {running} vertices of weight >= 3c/{t}")

    # checks against the finished graph

    def structural_check(self, g) -> list[str]:
        """Column-structure checks on the presented graph.

        Every vertex's earlier neighbors must be filed vertices of a single
        column, to the left of the vertex's own column if it was filed; and no
        edge may join two vertices of one column.
        """
        problems = []
        col = self.table.column_of
        for v in g.vertices():
            earlier = [u for u in g.neighbors(v) if u < v]
            if not earlier:
                continue
            cols = {col.get(u) for u in earlier}
            if None in cols:
                problems.append(f"vertex {v} has a neighbor outside the table")
            elif len(cols) != 1:
                problems.append(f"vertex {v} has earlier neighbors in columns {sorted(cols)}")
            elif v in col and col[v] <= next(iter(cols)):
                problems.append(f"vertex {v} filed in column {col[v]}, not right of its neighbors")
            if v in col and any(col.get(u) == col[v] for u in earlier):
                problems.append(f"edge inside column {col[v]} at vertex {v}")
        return problems


def weight_census(weights: Iterable[Fraction], c: int) -> bool:
    """At most 3c*t of the given weights are >= 3c/t, for every t in 1..3c."""
    ws = list(weights)
    c3 = 3 * c
    return all(sum(1 for w in ws if w >= Fraction(c3, t)) <= c3 * t for t in range(1, c3 + 1))

"""Presenter forcing c colors on a triangle-free graph of at most c^2 vertices.

Vertices are filed in a c x c table: a vertex of the r-th color to appear goes
into row r, in the rightmost empty cell. Phase k presents vertices adjacent to
exactly the set I_k of vertices found in column k when the phase starts.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Generator

from ..game import GeneratorPresenter, Move


class StrategyFailure(RuntimeError):
    pass


class ShiftTable:
    """c x c table, rows and columns numbered from 1; one vertex per cell."""

    def __init__(self, c: int) -> None:
        self.c = c
        self.row_of_color: dict[int, int] = {}
        self.cells: dict[tuple[int, int], int] = {}
        self.position: dict[int, tuple[int, int]] = {}
        self.color_of: dict[int, int] = {}
        self._filled = defaultdict(int)
        self._columns: dict[int, list[int]] = defaultdict(list)

    def row_for(self, color: int) -> int:
        if color not in self.row_of_color:
            self.row_of_color[color] = len(self.row_of_color) + 1
        return self.row_of_color[color]

    def place(self, v: int, color: int) -> tuple[int, int]:
        row = self.row_for(color)
        if row > self.c or self._filled[row] >= self.c:
            raise StrategyFailure(f"no empty cell for vertex {v} (color {color}, row {row})")
        col = self.c - self._filled[row]
        self._filled[row] += 1
        self.cells[row, col] = v
        self.position[v] = (row, col)
        self.color_of[v] = color
        self._columns[col].append(v)
        return row, col

    def column(self, j: int) -> list[int]:
        return sorted(self._columns.get(j, ()))


def phase_should_end(table: ShiftTable, k: int, i_colors: set[int]) -> bool:
    """Some vertex in column k+1 has a color outside those of I_k."""
    return any(table.color_of[v] not in i_colors for v in table.column(k + 1))


class TriangleFreePresenter(GeneratorPresenter):
    name = "triangle-free"

    def __init__(self, c: int) -> None:
        super().__init__()
        if c < 1:
            raise ValueError("c must be positive")
        self.c = c
        self.table = ShiftTable(c)
        self.k = 0
        self.phases_played = 0
        self.placements: list[tuple[int, int]] = []
        self.intro_column: dict[int, int] = {}  # vertex -> column holding its neighborhood
        self.counters = defaultdict(int)

    def stats(self) -> dict[str, int]:
        out = {"phases": self.phases_played, "placed": len(self.placements)}
        out.update(self.counters)
        out.setdefault("invariant_violations", 0)
        return out

    def strategy(self) -> Generator[Move, tuple[int, int], None]:
        for k in range(self.c):
            self.k = k
            i_k = self.table.column(k) if k > 0 else []
            if len(i_k) < k:
                self.counters["invariant_violations"] += 1
            i_colors = {self.table.color_of[u] for u in i_k}
            note = f"phase={k} |I_k|={len(i_k)}"
            while not phase_should_end(self.table, k, i_colors):
                v, color = yield Move(frozenset(i_k), note)
                self.phases_played = k + 1
                pos = self.table.place(v, color)
                self.placements.append(pos)
                self.intro_column[v] = k
                if k > 0 and pos[1] == k:
                    self.counters["invariant_violations"] += 1

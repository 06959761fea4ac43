"""Presenter forcing about 2 log2 n colors on bipartite graphs.

The graph is built as a forest of components. Each phase either merges
components of equal level through two new adjacent vertices a (joined to every
Left vertex) and b (joined to every Right vertex), or introduces a fresh edge.
A component's level is the number of colors appearing on both of its sides.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Generator, Sequence

from ..game import GeneratorPresenter, Move


class InvariantViolation(AssertionError):
    pass


class Rule(str, enum.Enum):
    MERGE_DIFFERENT = "merge-diff"
    MERGE_SIMILAR = "merge-sim"
    MERGE_EQUAL = "merge-eq"
    INTRODUCE = "introduce"


@dataclass
class ComponentRecord:
    cid: int
    created_phase: int
    left: set[int]
    right: set[int]
    left_colors: set[int]
    right_colors: set[int]
    sel: tuple[int, int]

    @property
    def members(self) -> set[int]:
        return self.left | self.right

    @property
    def size(self) -> int:
        return len(self.left) + len(self.right)

    @property
    def ts(self) -> frozenset[int]:
        return frozenset(self.left_colors & self.right_colors)

    @property
    def lev(self) -> int:
        return len(self.left_colors & self.right_colors)

    @property
    def one_sided(self) -> frozenset[int]:
        return frozenset(self.left_colors ^ self.right_colors)

    def side_of(self, v: int) -> str:
        if v in self.left:
            return "L"
        if v in self.right:
            return "R"
        raise KeyError(v)

    def flipped(self) -> ComponentRecord:
        return ComponentRecord(self.cid, self.created_phase, self.right, self.left,
                               self.right_colors, self.left_colors, self.sel)


def recompute_classification(left_colors, right_colors) -> tuple[set[int], set[int]]:
    """(one-sided, two-sided) colors of a component given per-side color sets."""
    left, right = set(left_colors), set(right_colors)
    return left ^ right, left & right


@dataclass
class RuleChoice:
    kind: Rule
    operands: list[int] = field(default_factory=list)  # component ids
    flips: list[bool] = field(default_factory=list)
    cycle_colors: list[int] = field(default_factory=list)


@dataclass
class _Comp:
    """What the rule finder needs to know about a component."""
    cid: int
    ts: frozenset[int]
    sel_colors: tuple[int, int]


def find_equal_cycle(family: Sequence[tuple[int, tuple[int, int]]]):
    """Cycle in the multigraph on selected colors, one edge per component.

    ``family`` lists (component id, (color, color)) in creation order. Edges
    are added in that order and the first one closing a cycle determines it,
    so the result minimizes the latest component used. Returns
    (component ids, colors) with component i carrying colors i and i+1
    (cyclically), rotated to start at the earliest component with its smaller
    color first; or None if the multigraph is a forest.
    """
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree: dict[int, list[tuple[int, int]]] = defaultdict(list)  # color -> [(color, cid)]
    for cid, (x, y) in family:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry
            tree[x].append((y, cid))
            tree[y].append((x, cid))
            continue
        # path y -> x through the forest
        prev: dict[int, tuple[int, int] | None] = {y: None}
        stack = [y]
        while stack:
            u = stack.pop()
            if u == x:
                break
            for w, e in tree[u]:
                if w not in prev:
                    prev[w] = (u, e)
                    stack.append(w)
        path_colors = [x]
        path_comps = []
        u = x
        while prev[u] is not None:
            p, e = prev[u]
            path_comps.append(e)
            path_colors.append(p)
            u = p
        # path_colors runs x ... y; closing edge cid joins y back to x
        comps = path_comps + [cid]
        colors = path_colors
        # component i joins colors[i] and colors[i+1 mod k]
        return _normalize_cycle(comps, colors)
    return None


def _normalize_cycle(comps: list[int], colors: list[int]) -> tuple[list[int], list[int]]:
    k = len(comps)
    i = comps.index(min(comps))
    comps = comps[i:] + comps[:i]
    colors = colors[i:] + colors[:i]
    if colors[0] > colors[1 % k]:
        comps = [comps[0]] + comps[:0:-1]
        colors = [colors[1 % k], colors[0]] + colors[:1:-1]
    return comps, colors


def select_rule(comps: Sequence[_Comp]) -> RuleChoice:
    """First applicable rule; operands in creation order.

    ``comps`` must be in creation order. Orientation of operands is filled in
    later by the presenter, which knows the sides.
    """
    by_level: dict[int, list[_Comp]] = defaultdict(list)
    for c in comps:
        by_level[len(c.ts)].append(c)
    pairs = []
    for group in by_level.values():
        for i, c1 in enumerate(group):
            for c2 in group[i + 1:]:
                pairs.append((c1, c2))
    pairs.sort(key=lambda p: (p[0].cid, p[1].cid))

    for c1, c2 in pairs:
        if len(c1.ts - c2.ts) >= 2:
            return RuleChoice(Rule.MERGE_DIFFERENT, [c1.cid, c2.cid])
    for c1, c2 in pairs:
        if len(c1.ts - c2.ts) == 1:
            common = set(c1.sel_colors) & set(c2.sel_colors)
            if common:
                return RuleChoice(Rule.MERGE_SIMILAR, [c1.cid, c2.cid], cycle_colors=[min(common)])

    families: dict[frozenset[int], list[_Comp]] = {}
    for c in comps:
        families.setdefault(c.ts, []).append(c)
    for family in families.values():
        if len(family) < 2:
            continue
        found = find_equal_cycle([(c.cid, c.sel_colors) for c in family])
        if found is not None:
            cids, colors = found
            return RuleChoice(Rule.MERGE_EQUAL, cids, cycle_colors=colors)
    return RuleChoice(Rule.INTRODUCE)


def size_bound_ok(size: int, lev: int) -> bool:
    """size <= 2^(lev/2 + 2) - 2, in integers."""
    return (size + 2) ** 2 <= 2 ** (lev + 4)


class BipartitePresenter(GeneratorPresenter):
    name = "bipartite"

    def __init__(self, c: int | None = None, strict: bool = False) -> None:
        super().__init__()
        self.c = c
        self.strict = strict
        self.components: dict[int, ComponentRecord] = {}  # insertion order = creation order
        self.colors: dict[int, int] = {}
        self.phase = 0
        self.phases_played = 0  # the generator runs ahead, so count phases that presented a vertex
        self.newest: int | None = None
        self.history: list[RuleChoice] = []
        self.violations: list[str] = []
        self.counters = defaultdict(int)
        self._next_cid = 0

    def stats(self) -> dict[str, int]:
        out = {"phases": self.phases_played, "components": len(self.components)}
        out.update(self.counters)
        for key in ("invariant1_violations", "invariant2_violations", "census_violations",
                    "sel_violations", "level_growth_violations"):
            out.setdefault(key, 0)
        return out

    # bookkeeping

    def _summary(self, comp: ComponentRecord) -> _Comp:
        x, y = self.colors[comp.sel[0]], self.colors[comp.sel[1]]
        return _Comp(comp.cid, comp.ts, (min(x, y), max(x, y)))

    def summaries(self, exclude: int | None = None) -> list[_Comp]:
        return [self._summary(c) for cid, c in self.components.items() if cid != exclude]

    def _orient(self, choice: RuleChoice) -> list[ComponentRecord]:
        ops = [self.components[cid] for cid in choice.operands]
        if choice.kind is Rule.MERGE_DIFFERENT:
            choice.flips = [False] * len(ops)
        elif choice.kind is Rule.MERGE_SIMILAR:
            alpha = choice.cycle_colors[0]
            # alpha Left in the first operand, Right in the second
            choice.flips = [self._side_with_color(ops[0], alpha) != "L",
                            self._side_with_color(ops[1], alpha) != "R"]
        else:
            k = len(ops)
            colors = choice.cycle_colors
            choice.flips = [self._side_with_color(ops[i], colors[i]) != "L" for i in range(k)]
            for i in range(k):
                right = self._side_with_color(ops[i], colors[(i + 1) % k])
                if (right == "R") == choice.flips[i]:
                    self._flag("sel_violations", f"phase {self.phase}: cycle colors not on opposite sides")
        return [c.flipped() if f else c for c, f in zip(ops, choice.flips)]

    def _side_with_color(self, comp: ComponentRecord, color: int) -> str:
        for v in comp.sel:
            if self.colors[v] == color:
                return comp.side_of(v)
        raise KeyError(f"color {color} is not selected in component {comp.cid}")

    def _flag(self, counter: str, msg: str) -> None:
        self.counters[counter] += 1
        self.violations.append(msg)
        if self.strict:
            raise InvariantViolation(msg)

    # the strategy

    def strategy(self) -> Generator[Move, tuple[int, int], None]:
        while True:
            self.phase += 1
            choice = select_rule(self.summaries())
            self.history.append(choice)
            note = f"phase={self.phase} rule={choice.kind.value} k={len(choice.operands)}"
            if choice.kind is Rule.INTRODUCE:
                x, cx = yield Move(frozenset(), note)
                self.phases_played = self.phase
                self.colors[x] = cx
                y, cy = yield Move(frozenset({x}), note)
                self.colors[y] = cy
                comp = ComponentRecord(self._next_cid, self.phase, {x}, {y}, {cx}, {cy}, (x, y))
            else:
                ops = self._orient(choice)
                lefts = set().union(*(c.left for c in ops))
                rights = set().union(*(c.right for c in ops))
                a, ca = yield Move(frozenset(lefts), note)
                self.phases_played = self.phase
                self.colors[a] = ca
                b, cb = yield Move(frozenset(rights | {a}), note)
                self.colors[b] = cb
                left_colors = set().union(*(c.left_colors for c in ops))
                right_colors = set().union(*(c.right_colors for c in ops))
                comp = ComponentRecord(self._next_cid, self.phase, lefts | {b}, rights | {a},
                                       left_colors | {cb}, right_colors | {ca}, (a, b))
                for cid in choice.operands:
                    del self.components[cid]
                self._check_merge(comp, ops, choice)
            self._next_cid += 1
            self.components[comp.cid] = comp
            self.newest = comp.cid
            self._check_phase(comp)

    def _check_merge(self, comp: ComponentRecord, ops: list[ComponentRecord], choice: RuleChoice) -> None:
        a, b = comp.sel
        ca, cb = self.colors[a], self.colors[b]
        if ca in comp.left_colors or cb in comp.right_colors:
            self._flag("sel_violations", f"phase {self.phase}: colors of a, b not one-sided")
        base = ops[0].lev
        gain = 2 if choice.kind in (Rule.MERGE_DIFFERENT, Rule.MERGE_SIMILAR) else len(ops)
        if comp.lev < base + gain:
            self._flag("level_growth_violations",
                       f"phase {self.phase}: {choice.kind.value} gave level {comp.lev} < {base}+{gain}")
        expected = set().union(*(c.ts for c in ops))
        if not expected <= comp.ts:
            self._flag("level_growth_violations", f"phase {self.phase}: lost a two-sided color")

    def _check_phase(self, comp: ComponentRecord) -> None:
        if not size_bound_ok(comp.size, comp.lev):
            self._flag("invariant1_violations",
                       f"phase {self.phase}: |C|={comp.size} exceeds bound at level {comp.lev}")
        rest = self.summaries(exclude=comp.cid)
        if select_rule(rest).kind is not Rule.INTRODUCE:
            self._flag("invariant2_violations", f"phase {self.phase}: a merge applies without the newest component")
        if self.c is not None and len(set(self.colors.values())) < self.c:
            census: dict[int, int] = defaultdict(int)
            for s in rest:
                census[len(s.ts)] += 1
            for lev, count in census.items():
                if count > self.c - lev - 2:
                    self._flag("census_violations",
                               f"phase {self.phase}: {count} components at level {lev}, limit {self.c - lev - 2}")

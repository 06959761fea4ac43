"""Round loop between a Presenter and an Algorithm, with a replayable transcript."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Generator, Protocol

from .graph import ColoredGraph, GraphError, GraphView, ImproperColor, UnknownVertex

TRANSCRIPT_MAGIC = "ogc-transcript v1"


class IllegalMove(Exception):
    pass


class TranscriptParseError(ValueError):
    def __init__(self, lineno: int, msg: str) -> None:
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class StopReason(str, enum.Enum):
    TARGET_REACHED = "TargetReached"
    PRESENTER_DONE = "PresenterDone"
    ROUND_CAP = "RoundCap"


@dataclass(frozen=True)
class Move:
    neighbors: frozenset[int]
    annotation: str = ""


DONE = None  # what next_move returns when the Presenter has nothing left


class Presenter(Protocol):
    name: str

    def next_move(self, view: GraphView) -> Move | None: ...

    def observe(self, v: int, color: int) -> None: ...

    def stats(self) -> dict[str, int]: ...


class Algorithm(Protocol):
    name: str
    seed: int

    def choose_color(self, view: GraphView, v: int) -> int: ...


class GeneratorPresenter:
    """Presenter written as a generator that yields Moves and is sent colors.

    Subclasses implement ``strategy()``; each ``yield move`` evaluates to the
    pair (vertex id, color) once the Algorithm has answered.
    """

    name = "generator"

    def __init__(self) -> None:
        self._gen: Generator[Move, tuple[int, int], None] | None = None
        self._next: Move | None = None
        self._finished = False
        self.view: GraphView | None = None

    def strategy(self) -> Generator[Move, tuple[int, int], None]:
        raise NotImplementedError

    def next_move(self, view: GraphView) -> Move | None:
        self.view = view
        if self._gen is None:
            self._gen = self.strategy()
            self._advance(None)
        if self._finished:
            return DONE
        move, self._next = self._next, None
        if move is None:
            raise RuntimeError("next_move called before the previous vertex was observed")
        return move

    def observe(self, v: int, color: int) -> None:
        # the answer goes in at once, so bookkeeping for the last vertex of a game still runs
        self._advance((v, color))

    def _advance(self, answer: tuple[int, int] | None) -> None:
        if self._finished:
            return
        try:
            self._next = next(self._gen) if answer is None else self._gen.send(answer)
        except StopIteration:
            self._finished = True

    def stats(self) -> dict[str, int]:
        return {}

    def final_annotation(self, v: int) -> str | None:
        """Annotation to record for vertex v once the game is over, if it changed."""
        return None


@dataclass(frozen=True)
class Round:
    index: int
    neighbors: tuple[int, ...]
    color: int
    annotation: str = ""


@dataclass
class Transcript:
    presenter: str
    algorithm: str
    c: int
    seed: int = 0
    rounds: list[Round] = field(default_factory=list)

    def to_text(self) -> str:
        lines = [f"{TRANSCRIPT_MAGIC} presenter={self.presenter} algorithm={self.algorithm} "
                 f"c={self.c} seed={self.seed}"]
        for r in self.rounds:
            nbrs = ",".join(str(u) for u in r.neighbors)
            lines.append(f"{r.index};{nbrs};{r.color};{r.annotation}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Transcript:
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        if not lines:
            raise TranscriptParseError(1, "missing header")
        header = lines[0]
        if not header.startswith(TRANSCRIPT_MAGIC + " "):
            raise TranscriptParseError(1, f"expected header starting with {TRANSCRIPT_MAGIC!r}")
        fields = {}
        for tok in header[len(TRANSCRIPT_MAGIC) + 1:].split(" "):
            key, sep, val = tok.partition("=")
            if not sep:
                raise TranscriptParseError(1, f"bad header field {tok!r}")
            fields[key] = val
        missing = {"presenter", "algorithm", "c", "seed"} - set(fields)
        if missing:
            raise TranscriptParseError(1, f"header lacks {sorted(missing)}")
        try:
            c = int(fields["c"])
            seed = int(fields["seed"])
        except ValueError as e:
            raise TranscriptParseError(1, str(e)) from None
        if c < 1 or not 0 <= seed < 2**64:
            raise TranscriptParseError(1, "c must be >= 1 and seed a uint64")
        t = cls(fields["presenter"], fields["algorithm"], c, seed)
        for lineno, line in enumerate(lines[1:], start=2):
            parts = line.split(";", 3)
            if len(parts) != 4:
                raise TranscriptParseError(lineno, "expected 4 ';'-separated fields")
            idx_s, nbr_s, col_s, note = parts
            try:
                idx = int(idx_s)
                nbrs = tuple(int(x) for x in nbr_s.split(",")) if nbr_s else ()
                color = int(col_s)
            except ValueError as e:
                raise TranscriptParseError(lineno, str(e)) from None
            if idx != len(t.rounds) + 1:
                raise TranscriptParseError(lineno, f"round {idx} out of sequence")
            t.rounds.append(Round(idx, nbrs, color, note))
        return t


@dataclass
class GameOutcome:
    vertices: int
    distinct_colors: int
    stopped_reason: StopReason
    strategy_stats: dict[str, int] = field(default_factory=dict)


def play(presenter: Presenter, algorithm: Algorithm, target_colors: int, round_cap: int,
         seed: int | None = None) -> tuple[GameOutcome, Transcript]:
    """Play until Algorithm has used ``target_colors`` colors, Presenter is done, or the cap hits.

    The target check runs after every single assignment.
    """
    if target_colors < 1 or round_cap < 1:
        raise ValueError("target_colors and round_cap must be positive")
    if seed is None:
        seed = getattr(algorithm, "seed", 0)
    g = ColoredGraph()
    view = g.view()
    transcript = Transcript(presenter.name, algorithm.name, target_colors, seed)
    reason = StopReason.ROUND_CAP
    while g.n < round_cap:
        move = presenter.next_move(view)
        if move is DONE:
            reason = StopReason.PRESENTER_DONE
            break
        rnd = g.n + 1
        try:
            v = g.add_vertex(move.neighbors)
        except UnknownVertex as e:
            raise IllegalMove(f"round {rnd}: {e}") from None
        color = algorithm.choose_color(view, v)
        try:
            g.assign_color(v, color)
        except GraphError as e:
            raise ImproperColor(f"round {rnd}: algorithm {algorithm.name}: {e}") from None
        transcript.rounds.append(Round(rnd, tuple(sorted(move.neighbors)), color, move.annotation))
        presenter.observe(v, color)
        if g.num_colors() >= target_colors:
            reason = StopReason.TARGET_REACHED
            break
    final = getattr(presenter, "final_annotation", None)
    if final is not None:
        transcript.rounds = [Round(r.index, r.neighbors, r.color, final(r.index) or r.annotation)
                             for r in transcript.rounds]
    outcome = GameOutcome(g.n, g.num_colors(), reason, dict(presenter.stats()))
    return outcome, transcript


def replay(t: Transcript) -> ColoredGraph:
    """Rebuild the colored graph, rechecking properness round by round."""
    g = ColoredGraph()
    for r in t.rounds:
        try:
            v = g.add_vertex(r.neighbors)
            g.assign_color(v, r.color)
        except UnknownVertex as e:
            raise IllegalMove(f"round {r.index}: {e}") from None
        except GraphError as e:
            raise ImproperColor(f"round {r.index}: {e}") from None
    return g


def replay_verify(t: Transcript) -> GameOutcome:
    """Outcome recomputed from the transcript alone.

    The format records no stop reason, so it is inferred: TargetReached when
    the c-th color appears in the last round, PresenterDone otherwise.
    """
    g = replay(t)
    k = g.num_colors()
    if k > t.c:
        raise ImproperColor(f"transcript uses {k} colors, more than its target c={t.c}")
    if k == t.c:
        seen: set[int] = set()
        for r in t.rounds:
            seen.add(r.color)
            if len(seen) == t.c and r.index != len(t.rounds):
                raise IllegalMove(f"round {r.index} reached c={t.c} colors but the game went on")
    reason = StopReason.TARGET_REACHED if k == t.c else StopReason.PRESENTER_DONE
    return GameOutcome(g.n, k, reason)

"""Command line front end: duel, sweep, verify, replay.

Exit codes: 0 all checks passed, 2 usage or unknown strategy, 3 I/O error,
4 a check failed, 5 transcript could not be parsed, 6 a strategy broke the
rules of the game.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields

from .algorithms import ALGORITHMS, make_algorithm
from .game import (GameOutcome, IllegalMove, StopReason, Transcript, TranscriptParseError, play,
                   replay, replay_verify)
from .graph import ImproperColor, OddCycle
from .presenters import (CLASS_ODD_GIRTH, PRESENTERS, default_round_cap, make_presenter,
                         vertex_bound)
from .verify import DEPTHS, verify_graph, verify_transcript

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_CHECK, EXIT_PARSE, EXIT_GAME = 0, 2, 3, 4, 5, 6


@dataclass
class RunConfig:
    presenter: str
    algorithm: str
    c: int
    seed: int = 0
    round_cap: int | None = None
    out: str | None = None
    verify_depth: str = "structural"


@dataclass
class SweepRecord:
    presenter: str
    algorithm: str
    c: int
    seed: int
    n_vertices: int
    colors_used: int
    phases: int
    broken_phases: int
    interesting_fans: int
    class_ok: bool
    bound_ok: bool
    elapsed_ms: float

    def row(self) -> list[str]:
        out = []
        for v in astuple(self):
            if isinstance(v, bool):
                out.append("1" if v else "0")
            elif isinstance(v, float):
                out.append(f"{v:.3f}")
            else:
                out.append(str(v))
        return out


SWEEP_HEADER = [f.name for f in fields(SweepRecord)]


def format_girth(g: float | None) -> str:
    if g is None:
        return "-"
    return "INFINITE" if math.isinf(g) else str(int(g))


def strategy_problems(stats: dict[str, int]) -> list[str]:
    return [f"{k}={v}" for k, v in sorted(stats.items())
            if v and (k.endswith("_violations") or k == "anomalies")]


@dataclass
class DuelResult:
    config: RunConfig
    outcome: GameOutcome
    transcript: Transcript
    bound: float
    bound_ok: bool
    class_ok: bool
    odd_girth: float | None
    problems: list[str]
    elapsed_ms: float

    @property
    def ok(self) -> bool:
        return self.bound_ok and self.class_ok and not self.problems

    def summary(self) -> str:
        o = self.outcome
        og = format_girth(self.odd_girth)
        return (f"presenter={self.config.presenter} algorithm={self.config.algorithm} c={self.config.c} "
                f"seed={self.config.seed} n={o.vertices} colors={o.distinct_colors} "
                f"reason={o.stopped_reason.value} bound={self.bound:.3f} "
                f"bound_ok={int(self.bound_ok)} class_ok={int(self.class_ok)} odd_girth={og}")


def run_duel(cfg: RunConfig) -> DuelResult:
    if cfg.presenter not in PRESENTERS:
        raise KeyError(f"unknown presenter {cfg.presenter!r}; choose from {sorted(PRESENTERS)}")
    if cfg.algorithm not in ALGORITHMS:
        raise KeyError(f"unknown algorithm {cfg.algorithm!r}; choose from {sorted(ALGORITHMS)}")
    presenter = make_presenter(cfg.presenter, cfg.c)
    kwargs = {"strict": True} if cfg.algorithm == "cbip" and cfg.presenter == "bipartite" else {}
    algorithm = make_algorithm(cfg.algorithm, cfg.seed, **kwargs)
    cap = cfg.round_cap or default_round_cap(cfg.presenter, cfg.c)
    start = time.perf_counter()
    outcome, transcript = play(presenter, algorithm, cfg.c, cap, seed=cfg.seed)
    g = replay(transcript)
    report = verify_graph(g, CLASS_ODD_GIRTH[cfg.presenter], cfg.verify_depth)
    elapsed = (time.perf_counter() - start) * 1000
    problems = report.problems + strategy_problems(outcome.strategy_stats)
    structural = getattr(presenter, "structural_check", None)
    if structural is not None:
        problems += structural(g)
    bound = vertex_bound(cfg.presenter, cfg.c)
    bound_ok = (outcome.stopped_reason is StopReason.TARGET_REACHED
                and outcome.distinct_colors == cfg.c and outcome.vertices <= bound)
    return DuelResult(cfg, outcome, transcript, bound, bound_ok, report.class_ok,
                      report.odd_girth, problems, elapsed)


def sweep_row(cfg: RunConfig, timing: bool = True) -> tuple[SweepRecord, list[str]]:
    res = run_duel(cfg)
    s = res.outcome.strategy_stats
    rec = SweepRecord(cfg.presenter, cfg.algorithm, cfg.c, cfg.seed, res.outcome.vertices,
                      res.outcome.distinct_colors, s.get("phases", 0), s.get("broken_phases", 0),
                      s.get("interesting_fans", 0), res.class_ok, res.bound_ok,
                      res.elapsed_ms if timing else 0.0)
    return rec, res.problems


def sweep_csv(configs: list[RunConfig], jobs: int = 1, timing: bool = True) -> tuple[str, bool]:
    """CSV text for the given runs, rows in input order; second value is True iff all passed."""
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(sweep_row, configs, [timing] * len(configs)))
    else:
        results = [sweep_row(cfg, timing) for cfg in configs]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    all_ok = True
    for rec, problems in results:
        writer.writerow(rec.row())
        all_ok &= rec.class_ok and rec.bound_ok and not problems
    return buf.getvalue(), all_ok


def parse_int_range(text: str) -> list[int]:
    """'2..5' -> [2,3,4,5]; '1,4,7' -> [1,4,7]; mixed forms allowed."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def _read(path: str) -> str:
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)


def cmd_duel(args) -> int:
    cfg = RunConfig(args.presenter, args.algorithm, args.colors, args.seed, args.round_cap,
                    args.out, args.verify_depth)
    res = run_duel(cfg)
    if cfg.out:
        _write(cfg.out, res.transcript.to_text())
    print(res.summary())
    for p in res.problems:
        print(f"problem: {p}", file=sys.stderr)
    return EXIT_OK if res.ok else EXIT_CHECK


def cmd_sweep(args) -> int:
    presenters = args.presenter.split(",")
    algorithms = args.algorithm.split(",")
    for name in presenters:
        if name not in PRESENTERS:
            raise KeyError(f"unknown presenter {name!r}")
    for name in algorithms:
        if name not in ALGORITHMS:
            raise KeyError(f"unknown algorithm {name!r}")
    configs = [RunConfig(p, a, c, s, args.round_cap, None, args.verify_depth)
               for p in presenters for a in algorithms
               for c in parse_int_range(args.colors) for s in parse_int_range(args.seeds)]
    text, ok = sweep_csv(configs, args.jobs, timing=not args.no_timing)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_CHECK


def _load(path: str) -> Transcript:
    return Transcript.from_text(_read(path))


def cmd_verify(args) -> int:
    t = _load(args.transcript)
    expect = args.expect or t.presenter
    if expect not in CLASS_ODD_GIRTH:
        raise KeyError(f"cannot infer the graph class for {expect!r}; pass --expect")
    try:
        report = verify_transcript(t, CLASS_ODD_GIRTH[expect], args.verify_depth)
    except (ImproperColor, IllegalMove) as e:
        print(f"check failed: {e}", file=sys.stderr)
        return EXIT_CHECK
    o = report.outcome
    og = format_girth(report.odd_girth)
    print(f"n={o.vertices} colors={o.distinct_colors} reason={o.stopped_reason.value} "
          f"class={expect} class_ok={int(report.class_ok)} odd_girth={og}")
    for p in report.problems:
        print(f"problem: {p}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_CHECK


def cmd_replay(args) -> int:
    t = _load(args.transcript)
    o = replay_verify(t)
    print(f"presenter={t.presenter} algorithm={t.algorithm} c={t.c} seed={t.seed} "
          f"n={o.vertices} colors={o.distinct_colors} reason={o.stopped_reason.value}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ogc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def game_flags(p, multi: bool) -> None:
        p.add_argument("--presenter", required=True,
                       help=("comma-separated " if multi else "") + "|".join(PRESENTERS))
        p.add_argument("--algorithm", required=True,
                       help=("comma-separated " if multi else "") + "|".join(ALGORITHMS))
        p.add_argument("--round-cap", type=int, default=None,
                       help="safety cap on rounds (default 10x the presenter's bound)")
        p.add_argument("--verify-depth", choices=DEPTHS, default="structural")
        p.add_argument("--out", default=None)

    duel = sub.add_parser("duel", help="play one game and verify it")
    game_flags(duel, multi=False)
    duel.add_argument("-c", "--colors", type=int, required=True)
    duel.add_argument("--seed", type=int, default=0)
    duel.set_defaults(func=cmd_duel)

    sweep = sub.add_parser("sweep", help="play a grid of games, write CSV")
    game_flags(sweep, multi=True)
    sweep.add_argument("-c", "--colors", required=True, help="e.g. 2..16 or 3,5,8")
    sweep.add_argument("--seeds", default="0", help="e.g. 0..4")
    sweep.add_argument("--jobs", type=int, default=1)
    sweep.add_argument("--no-timing", action="store_true", help="write elapsed_ms as 0 for byte-stable output")
    sweep.set_defaults(func=cmd_sweep)

    verify = sub.add_parser("verify", help="replay a transcript and check its graph class")
    verify.add_argument("transcript")
    verify.add_argument("--expect", choices=sorted(CLASS_ODD_GIRTH), default=None,
                        help="graph class (default: from the transcript's presenter)")
    verify.add_argument("--verify-depth", choices=DEPTHS, default="full-odd-girth")
    verify.set_defaults(func=cmd_verify)

    rep = sub.add_parser("replay", help="replay a transcript and print its outcome")
    rep.add_argument("transcript")
    rep.set_defaults(func=cmd_replay)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except KeyError as e:
        print(f"error: {e.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except TranscriptParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return EXIT_IO
    except (ImproperColor, IllegalMove, OddCycle) as e:
        print(f"game error: {e}", file=sys.stderr)
        return EXIT_GAME


if __name__ == "__main__":
    sys.exit(main())

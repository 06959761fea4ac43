"""Print First-Fit transcripts for small c and the n-vs-bound table for each presenter.

    python scripts/trace_first_fit.py --trace triangle-free -c 3
    python scripts/trace_first_fit.py --table
"""

import argparse

from ogc import make_algorithm, make_presenter, play, vertex_bound
from ogc.presenters import default_round_cap

TABLE_RANGES = {"bipartite": range(2, 17), "triangle-free": range(2, 21), "odd-girth-7": range(1, 7)}


def first_fit_game(presenter: str, c: int):
    return play(make_presenter(presenter, c), make_algorithm("first-fit"), c,
                default_round_cap(presenter, c))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trace", choices=sorted(TABLE_RANGES))
    parser.add_argument("-c", "--colors", type=int, default=3)
    parser.add_argument("--table", action="store_true")
    args = parser.parse_args()

    if args.trace:
        _, t = first_fit_game(args.trace, args.colors)
        print(t.to_text(), end="")
    if args.table or not args.trace:
        print(f"{'presenter':<14} {'c':>3} {'n':>7} {'bound':>12} {'n/bound':>8}")
        for presenter, cs in TABLE_RANGES.items():
            for c in cs:
                outcome, _ = first_fit_game(presenter, c)
                bound = vertex_bound(presenter, c)
                print(f"{presenter:<14} {c:>3} {outcome.vertices:>7} {bound:>12.1f} "
                      f"{outcome.vertices / bound:>8.4f}")


if __name__ == "__main__":
    main()

"""On-line graph coloring games: adversarial Presenters, coloring Algorithms, and checkers."""

from .algorithms import CBIP, FirstFit, FreshColor, RandomAdmissible, make_algorithm
from .game import GameOutcome, Move, StopReason, Transcript, play, replay, replay_verify
from .graph import INFINITE, ColoredGraph, chromatic_number_oracle, odd_girth
from .presenters import make_presenter, vertex_bound

__version__ = "0.1.0"

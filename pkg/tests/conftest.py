import sys
from collections import Counter
from pathlib import Path

import hypothesis
import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

hypothesis.settings.register_profile("default", deadline=None, max_examples=60)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=10)
hypothesis.settings.load_profile("default")


class Balanced:
    """Stress opponent: least-used admissible color from a fixed palette, overflowing upward."""

    name = "balanced"

    def __init__(self, palette, seed=0):
        self.palette = palette
        self.seed = seed
        self.uses = Counter()

    def choose_color(self, view, v):
        taken = view.neighbor_colors(v)
        options = [c for c in range(1, self.palette + 1) if c not in taken]
        if options:
            color = min(options, key=lambda c: (self.uses[c], c))
        else:
            color = self.palette + 1
            while color in taken:
                color += 1
        self.uses[color] += 1
        return color


class PaletteRandom:
    """Stress opponent: uniform over admissible colors of a palette, overflowing upward."""

    name = "palette-random"

    def __init__(self, palette, seed=0):
        self.palette = palette
        self.seed = seed
        self.rng = np.random.default_rng(seed)

    def choose_color(self, view, v):
        taken = view.neighbor_colors(v)
        options = [c for c in range(1, self.palette + 1) if c not in taken]
        if not options:
            c = self.palette + 1
            while c in taken:
                c += 1
            return c
        return options[int(self.rng.integers(len(options)))]


class Scripted:
    """Colors vertices from a fixed list."""

    name = "scripted"
    seed = 0

    def __init__(self, colors):
        self.colors = list(colors)

    def choose_color(self, view, v):
        return self.colors[v - 1]


@pytest.fixture
def balanced():
    return Balanced


@pytest.fixture
def palette_random():
    return PaletteRandom

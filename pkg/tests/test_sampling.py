import numpy as np
import pytest

from chordblend.chords import Chord
from chordblend.errors import DeadStartError, UnknownIndexError
from chordblend.idioms import TransitionMatrix, artificial_idiom
from chordblend.sampling import WalkConfig, sample_walk, walk_chords

ALTERNATING = TransitionMatrix([[0.0, 1.0], [1.0, 0.0]])


def test_deterministic_chain():
    walk = sample_walk(ALTERNATING, WalkConfig(start=0, length=4, seed=7))
    assert walk == [0, 1, 0, 1]


def test_fixed_seed_reproducibility():
    matrix = TransitionMatrix([
        [0.0, 0.5, 0.5],
        [0.5, 0.0, 0.5],
        [0.5, 0.5, 0.0],
    ])
    cfg = WalkConfig(start=0, length=64, seed=123456789)
    assert sample_walk(matrix, cfg) == sample_walk(matrix, cfg)
    assert sample_walk(matrix, cfg) != sample_walk(
        matrix, WalkConfig(start=0, length=64, seed=987654321))


def test_walk_steps_have_nonzero_probability():
    matrix = TransitionMatrix([
        [0.0, 0.7, 0.3, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.25, 0.25, 0.0, 0.5],
        [1.0, 0.0, 0.0, 0.0],
    ])
    for seed in range(50):
        walk = sample_walk(matrix, WalkConfig(start=0, length=32, seed=seed))
        for a, b in zip(walk, walk[1:]):
            assert matrix[a, b] > 0.0


def test_early_termination_on_absorbing_row():
    matrix = TransitionMatrix([[0.0, 1.0], [0.0, 0.0]])
    walk = sample_walk(matrix, WalkConfig(start=0, length=10, seed=1))
    assert walk == [0, 1]


def test_dead_start_raises():
    matrix = TransitionMatrix([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(DeadStartError):
        sample_walk(matrix, WalkConfig(start=1, length=4, seed=1))


def test_out_of_range_start():
    with pytest.raises(UnknownIndexError):
        sample_walk(ALTERNATING, WalkConfig(start=5, length=4, seed=1))


@pytest.mark.parametrize("length", [0, -3, 1025])
def test_length_bounds(length):
    with pytest.raises(ValueError):
        WalkConfig(start=0, length=length, seed=0)


def test_negative_seed_is_normalized():
    cfg = WalkConfig(start=0, length=8, seed=-1)
    assert cfg.seed == (1 << 64) - 1
    assert sample_walk(ALTERNATING, cfg) == [0, 1, 0, 1, 0, 1, 0, 1]


def test_empirical_frequencies_match_row():
    # every row splits 0.5 / 0.5 over the two other states
    matrix = TransitionMatrix([
        [0.0, 0.5, 0.5],
        [0.5, 0.0, 0.5],
        [0.5, 0.5, 0.0],
    ])
    length = 1024
    draws = []
    for seed in range(100):
        walk = sample_walk(matrix, WalkConfig(start=0, length=length, seed=seed))
        nxt = {0: 1, 1: 2, 2: 0}
        draws.extend(int(b == nxt[a]) for a, b in zip(walk, walk[1:]))
    assert len(draws) >= 100_000
    frequency = float(np.mean(draws))
    assert abs(frequency - 0.5) <= 0.01


def test_walk_chords_resolves_start():
    idiom = artificial_idiom("toy", 0, ["0:0,4,7", "7:0,4,7,10"],
                             [(0, 1, 1.0), (1, 0, 1.0)])
    walk = walk_chords(idiom.chords, idiom.matrix, Chord.parse("0:0,4,7"), 4, 0)
    assert [str(c) for c in walk] == ["0:0,4,7", "7:0,4,7,10", "0:0,4,7", "7:0,4,7,10"]
    with pytest.raises(UnknownIndexError):
        walk_chords(idiom.chords, idiom.matrix, Chord.parse("5:0,4,7"), 4, 0)

"""Seeded random games and arbiter states."""

from __future__ import annotations

import numpy as np

from arbiterlab.game import SymmetricGame
from arbiterlab.quantum import InitialState

DEFAULT_BOUND = 9


def make_rng(seed) -> np.random.Generator:
    """Generator from an int, a sequence of ints, or an existing Generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream for one trial of a seeded run.

    Depends only on ``(seed, trial)``, so any trial can be replayed alone.
    """
    return np.random.default_rng([seed, trial])


def random_symmetric_game(seed, bound: int = DEFAULT_BOUND) -> SymmetricGame:
    """Four distinct integer payoffs drawn uniformly from ``[-bound, bound]``."""
    if bound < 4:
        raise ValueError("bound must be at least 4")
    rng = make_rng(seed)
    values = rng.choice(np.arange(-bound, bound + 1), size=4, replace=False)
    return SymmetricGame(*(int(v) for v in values))


def _complex_gaussian(rng: np.random.Generator, size) -> np.ndarray:
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def random_amplitudes(seed, size: int | tuple = ()) -> np.ndarray:
    """Haar-random normalized 4-vectors, shape ``size + (4,)``."""
    rng = make_rng(seed)
    shape = (size,) if isinstance(size, int) else tuple(size)
    vec = _complex_gaussian(rng, shape + (4,))
    return vec / np.linalg.norm(vec, axis=-1, keepdims=True)


def random_state(seed) -> InitialState:
    return InitialState.from_vector(random_amplitudes(seed))


def random_symmetric_state(seed) -> InitialState:
    """Random state with ``|b| == |c|`` and independent phases on b and c."""
    rng = make_rng(seed)
    a, b, _, d = _complex_gaussian(rng, 4)
    c = abs(b) * np.exp(2j * np.pi * rng.random())
    vec = np.array([a, b, c, d])
    vec /= np.sqrt(np.sum(np.abs(vec) ** 2))
    # renormalizing scales b and c alike, so |b| == |c| survives up to rounding
    return InitialState.from_vector(vec)


def random_asymmetric_state(seed, gap: float = 0.05) -> InitialState:
    """Random state with ``| |b|^2 - |c|^2 | >= gap``, by rejection."""
    if not 0 < gap < 1:
        raise ValueError("gap must lie in (0, 1)")
    rng = make_rng(seed)
    while True:
        vec = random_amplitudes(rng)
        if abs(abs(vec[1]) ** 2 - abs(vec[2]) ** 2) >= gap:
            return InitialState.from_vector(vec)


def random_phases(seed, size: int | tuple = ()) -> np.ndarray:
    """Unit-modulus complex numbers, shape ``size + (4,)``."""
    rng = make_rng(seed)
    shape = (size,) if isinstance(size, int) else tuple(size)
    return np.exp(2j * np.pi * rng.random(shape + (4,)))

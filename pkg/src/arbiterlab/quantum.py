"""Two-qubit statevector engine for games played with qubits instead of coins.

The arbiter prepares ``a|00> + b|01> + c|10> + d|11>`` (first slot is
player A's qubit). Each player either leaves their qubit alone (Stay) or
bit-flips it (Flip); the arbiter then measures in the computational basis
and pays according to the classical bimatrix.

Two independent routes to the resulting payoff bimatrix are provided:

* :func:`mw_payoff_bimatrix` evaluates the closed-form expressions in the
  squared magnitudes of the amplitudes;
* :func:`mw_payoff_bimatrix_oracle` simulates every move pair on the
  statevector and takes Born-rule expectations.

Batched numpy versions of both (:func:`closed_form_payoffs`,
:func:`simulated_payoffs`) are used for large sweeps.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from arbiterlab.errors import NotNormalized
from arbiterlab.game import PayoffBimatrix, SymmetricGame

#: Maximum allowed deviation of the squared norm from 1.
NORMALIZATION_TOLERANCE = 1e-9


class LocalMove(enum.Enum):
    STAY = "Stay"
    FLIP = "Flip"


_IDENTITY = np.eye(2, dtype=complex)
_BIT_FLIP = np.array([[0, 1], [1, 0]], dtype=complex)
_LOCAL = {LocalMove.STAY: _IDENTITY, LocalMove.FLIP: _BIT_FLIP}

#: Move pairs in bimatrix order: entry (i, j) is A playing i, B playing j.
MOVE_PAIRS = tuple(product((LocalMove.STAY, LocalMove.FLIP), repeat=2))

#: Two-qubit operator for each move pair, player A on the left tensor factor.
MOVE_OPERATORS = {
    (ma, mb): np.kron(_LOCAL[ma], _LOCAL[mb]) for ma, mb in MOVE_PAIRS
}


def _finite_complex(v) -> complex:
    v = complex(v)
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise ValueError("amplitudes must be finite")
    return v


@dataclass(frozen=True)
class InitialState:
    """Amplitudes of |00>, |01>, |10>, |11>.

    Construction only checks finiteness; use :func:`validate_state` to
    enforce normalization.
    """

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, _finite_complex(getattr(self, name)))

    @classmethod
    def from_vector(cls, vec) -> InitialState:
        a, b, c, d = np.asarray(vec, dtype=complex).reshape(4)
        return cls(a, b, c, d)

    @classmethod
    def basis(cls, label: str) -> InitialState:
        """Computational basis state from a label such as ``"01"``."""
        vec = np.zeros(4, dtype=complex)
        vec[int(label, 2)] = 1
        return cls.from_vector(vec)

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c, self.d], dtype=complex)

    @property
    def squared_norm(self) -> float:
        return sum(abs(v) ** 2 for v in (self.a, self.b, self.c, self.d))


@dataclass(frozen=True)
class OutcomeDistribution:
    p00: float
    p01: float
    p10: float
    p11: float

    def __post_init__(self):
        probs = self.as_tuple()
        if any(not (0.0 <= p <= 1.0 + NORMALIZATION_TOLERANCE) for p in probs):
            raise ValueError(f"probabilities out of range: {probs}")
        if abs(sum(probs) - 1.0) > NORMALIZATION_TOLERANCE:
            raise NotNormalized(sum(probs), f"probabilities sum to {sum(probs)!r}")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.p00, self.p01, self.p10, self.p11)


def validate_state(s: InitialState) -> InitialState:
    norm = s.squared_norm
    if abs(norm - 1.0) > NORMALIZATION_TOLERANCE:
        raise NotNormalized(norm)
    return s


def apply_moves(s: InitialState, move_a: LocalMove, move_b: LocalMove) -> InitialState:
    """Apply each player's local operation to their own qubit."""
    op = MOVE_OPERATORS[LocalMove(move_a), LocalMove(move_b)]
    return InitialState.from_vector(op @ s.vector)


def outcome_probabilities(s: InitialState) -> OutcomeDistribution:
    """Born-rule probabilities of measuring 00, 01, 10, 11."""
    return OutcomeDistribution(*(abs(v) ** 2 for v in (s.a, s.b, s.c, s.d)))


def expected_payoffs(game: SymmetricGame, dist: OutcomeDistribution) -> tuple[float, float]:
    """Expected payoffs ``(uA, uB)`` under a measurement distribution.

    Outcome 00 pays (x, x), 01 pays (y, w), 10 pays (w, y), 11 pays (z, z).
    """
    x, y, w, z = map(float, game.payoffs)
    p00, p01, p10, p11 = dist.as_tuple()
    return (
        x * p00 + y * p01 + w * p10 + z * p11,
        x * p00 + w * p01 + y * p10 + z * p11,
    )


def closed_form_entries(x, y, w, z, pa, pb, pc, pd):
    """Payoff matrices ``(A, B)`` as nested 2x2 tuples.

    Arguments are the game payoffs and the squared magnitudes of the four
    amplitudes. Plain arithmetic only, so Fractions give exact results
    and numpy arrays broadcast.
    """
    a = (
        (x * pa + y * pb + w * pc + z * pd, x * pb + y * pa + w * pd + z * pc),
        (x * pc + y * pd + w * pa + z * pb, x * pd + y * pc + w * pb + z * pa),
    )
    b = (
        (x * pa + w * pb + y * pc + z * pd, x * pb + w * pa + y * pd + z * pc),
        (x * pc + w * pd + y * pa + z * pb, x * pd + w * pc + y * pb + z * pa),
    )
    return a, b


def mw_payoff_bimatrix(game: SymmetricGame, s: InitialState) -> PayoffBimatrix:
    """Payoff bimatrix induced by the arbiter's state, from the closed forms.

    Entry (i, j) is the pair of expected payoffs when A plays move i and B
    plays move j, with index 1 meaning Stay and 2 meaning Flip.
    """
    validate_state(s)
    probs = (abs(s.a) ** 2, abs(s.b) ** 2, abs(s.c) ** 2, abs(s.d) ** 2)
    a, b = closed_form_entries(*map(float, game.payoffs), *probs)
    return PayoffBimatrix(a, b)


def mw_payoff_bimatrix_oracle(game: SymmetricGame, s: InitialState) -> PayoffBimatrix:
    """Same bimatrix as :func:`mw_payoff_bimatrix`, by explicit simulation.

    For every move pair the state is evolved, measured and paid out; the
    closed-form expressions are never used.
    """
    validate_state(s)
    a = [[0.0, 0.0], [0.0, 0.0]]
    b = [[0.0, 0.0], [0.0, 0.0]]
    for i, move_a in enumerate(LocalMove):
        for j, move_b in enumerate(LocalMove):
            final = apply_moves(s, move_a, move_b)
            a[i][j], b[i][j] = expected_payoffs(game, outcome_probabilities(final))
    return PayoffBimatrix(a, b)


# Batched versions. ``payoffs`` has shape (..., 4) holding (x, y, w, z);
# the result has shape (..., 2, 2, 2) indexed [..., player, row, column].

def closed_form_payoffs(payoffs, probabilities) -> np.ndarray:
    payoffs = np.asarray(payoffs, dtype=float)
    probabilities = np.asarray(probabilities, dtype=float)
    args = [payoffs[..., k] for k in range(4)] + [probabilities[..., k] for k in range(4)]
    a, b = closed_form_entries(*args)
    return np.stack([np.stack([np.stack(row, -1) for row in m], -2) for m in (a, b)], -3)


def simulated_payoffs(payoffs, amplitudes) -> np.ndarray:
    payoffs = np.asarray(payoffs, dtype=float)
    amplitudes = np.asarray(amplitudes, dtype=complex)
    # payout vectors over outcomes 00, 01, 10, 11
    pay_a = payoffs
    pay_b = payoffs[..., [0, 2, 1, 3]]
    shape = np.broadcast_shapes(payoffs.shape[:-1], amplitudes.shape[:-1])
    out = np.empty(shape + (2, 2, 2))
    for (i, j), pair in zip(product(range(2), repeat=2), MOVE_PAIRS):
        evolved = np.einsum("kl,...l->...k", MOVE_OPERATORS[pair], amplitudes)
        probs = np.abs(evolved) ** 2
        out[..., 0, i, j] = np.sum(probs * pay_a, axis=-1)
        out[..., 1, i, j] = np.sum(probs * pay_b, axis=-1)
    return out


def bimatrix_from_array(arr) -> PayoffBimatrix:
    """Wrap one (2, 2, 2) payoff array as a :class:`PayoffBimatrix`."""
    arr = np.asarray(arr, dtype=float)
    return PayoffBimatrix(arr[0].tolist(), arr[1].tolist())

"""Exact 2x2 games: bimatrices, symmetry, characteristic numbers and categories.

Player A is the row player. Outcomes are ordered (1,1), (1,2), (2,1), (2,2),
and a symmetric game with row payoffs ``x, y, w, z`` has the bimatrix::

    [[(x, x), (y, w)],
     [(w, y), (z, z)]]

Exact entries are :class:`fractions.Fraction`; bimatrices produced by the
quantum engine hold floats and are flagged ``exact=False``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from arbiterlab.errors import IdenticalPayoffs, NotSymmetric

Number = Union[Fraction, float]

#: Default tolerance for symmetry and sign tests on floating data.
DEFAULT_TOLERANCE = 1e-9


def to_payoff(value) -> Fraction:
    """Coerce ``value`` to an exact rational payoff.

    Accepts ints, Fractions, and strings such as ``"3"``, ``"-7/2"`` or
    ``"0.25"``. Floats are refused so that exact mode never silently
    inherits binary rounding.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not payoffs")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"exact payoffs must be int, Fraction or str, not {type(value).__name__}")


class GameCategory(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    DEGENERATE = "Degenerate"

    @classmethod
    def parse(cls, text: str) -> GameCategory:
        for member in cls:
            if text.strip().lower() in (member.value.lower(), member.name.lower()):
                return member
        raise ValueError(f"unknown category {text!r}")

    @property
    def label(self) -> str:
        return {
            "I": "Prisoner's Dilemma",
            "II": "Coordination",
            "III": "Hawk-Dove",
            "Degenerate": "Degenerate",
        }[self.value]


@dataclass(frozen=True)
class CharacteristicNumbers:
    """The differences ``alpha = a11 - a21`` and ``beta = a22 - a12``."""

    alpha: Number
    beta: Number

    def __post_init__(self):
        for v in (self.alpha, self.beta):
            if isinstance(v, float) and not math.isfinite(v):
                raise ValueError("characteristic numbers must be finite")

    def __iter__(self):
        return iter((self.alpha, self.beta))


@dataclass(frozen=True)
class SymmetricGame:
    """A symmetric 2x2 game given by the row player's four distinct payoffs."""

    x: Fraction
    y: Fraction
    w: Fraction
    z: Fraction

    def __post_init__(self):
        for name in ("x", "y", "w", "z"):
            object.__setattr__(self, name, to_payoff(getattr(self, name)))
        values = self.payoffs
        if len(set(values)) != 4:
            raise IdenticalPayoffs(f"payoffs must be pairwise distinct, got {tuple(map(str, values))}")

    @property
    def payoffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.x, self.y, self.w, self.z)

    def bimatrix(self) -> PayoffBimatrix:
        x, y, w, z = self.payoffs
        return PayoffBimatrix(((x, y), (w, z)), ((x, w), (y, z)))

    def characteristic_numbers(self) -> CharacteristicNumbers:
        return characteristic_numbers(self)

    def category(self) -> GameCategory:
        return classify(characteristic_numbers(self))

    def __str__(self):
        return "SymmetricGame(x={}, y={}, w={}, z={})".format(*self.payoffs)


def _matrix(rows: Sequence[Sequence]) -> tuple[tuple, tuple]:
    rows = tuple(tuple(r) for r in rows)
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ValueError("expected a 2x2 matrix")
    return rows


@dataclass(frozen=True)
class PayoffBimatrix:
    """Payoff matrices ``a`` (row player) and ``b`` (column player).

    Entries that are all ints/Fractions/rational strings give an exact
    bimatrix; any float entry switches the whole bimatrix to approximate
    mode, with every entry stored as a float. ``exact`` does not take part
    in equality, so an exact and an approximate bimatrix with the same
    values compare equal.
    """

    a: tuple[tuple[Number, Number], tuple[Number, Number]]
    b: tuple[tuple[Number, Number], tuple[Number, Number]]
    exact: bool = field(init=False, compare=False)

    def __post_init__(self):
        a, b = _matrix(self.a), _matrix(self.b)
        flat = [v for m in (a, b) for row in m for v in row]
        exact = all(isinstance(v, (Rational, str)) and not isinstance(v, bool) for v in flat)
        if exact:
            conv = to_payoff
        else:
            def conv(v):
                f = float(v)
                if not math.isfinite(f):
                    raise ValueError("bimatrix entries must be finite")
                return f
        a = tuple(tuple(conv(v) for v in row) for row in a)
        b = tuple(tuple(conv(v) for v in row) for row in b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "exact", exact)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[Sequence]]) -> PayoffBimatrix:
        """Build from a 2x2 grid of ``(payoffA, payoffB)`` pairs."""
        grid = _matrix(pairs)
        a = tuple(tuple(cell[0] for cell in row) for row in grid)
        b = tuple(tuple(cell[1] for cell in row) for row in grid)
        return cls(a, b)

    @property
    def pairs(self) -> tuple[tuple[tuple[Number, Number], ...], ...]:
        return tuple(tuple((self.a[i][j], self.b[i][j]) for j in range(2)) for i in range(2))

    def to_approximate(self) -> PayoffBimatrix:
        return PayoffBimatrix(
            tuple(tuple(float(v) for v in row) for row in self.a),
            tuple(tuple(float(v) for v in row) for row in self.b),
        )

    def max_abs_difference(self, other: PayoffBimatrix) -> float:
        return max(
            abs(float(p) - float(q))
            for m, n in ((self.a, other.a), (self.b, other.b))
            for r, s in zip(m, n)
            for p, q in zip(r, s)
        )

    def allclose(self, other: PayoffBimatrix, tolerance: float = DEFAULT_TOLERANCE) -> bool:
        return self.max_abs_difference(other) <= tolerance

    def characteristic_numbers(self) -> CharacteristicNumbers:
        """Characteristic numbers read off the row player's matrix."""
        a = self.a
        return CharacteristicNumbers(a[0][0] - a[1][0], a[1][1] - a[0][1])


def characteristic_numbers(game: SymmetricGame) -> CharacteristicNumbers:
    """Return ``(x - w, z - y)`` exactly."""
    return CharacteristicNumbers(game.x - game.w, game.z - game.y)


def classify(cn: CharacteristicNumbers, tolerance: float = 0) -> GameCategory:
    """Category from the signs of ``alpha`` and ``beta``.

    Values within ``tolerance`` of zero have no sign and give
    ``GameCategory.DEGENERATE``. Pass ``tolerance=0`` for exact data.
    """
    if tolerance < 0:
        raise ValueError("tolerance must be nonnegative")
    alpha, beta = cn
    if abs(alpha) <= tolerance or abs(beta) <= tolerance:
        return GameCategory.DEGENERATE
    if alpha > 0 and beta > 0:
        return GameCategory.II
    if alpha < 0 and beta < 0:
        return GameCategory.III
    return GameCategory.I


def _default_tolerance(bm: PayoffBimatrix, tolerance: float | None) -> float:
    if tolerance is None:
        return 0 if bm.exact else DEFAULT_TOLERANCE
    if tolerance < 0:
        raise ValueError("tolerance must be nonnegative")
    return tolerance


def is_symmetric(bm: PayoffBimatrix, tolerance: float | None = None) -> bool:
    """True iff ``B`` equals the transpose of ``A``.

    ``tolerance`` defaults to 0 for exact bimatrices and
    :data:`DEFAULT_TOLERANCE` for approximate ones.
    """
    tol = _default_tolerance(bm, tolerance)
    return all(abs(bm.a[j][i] - bm.b[i][j]) <= tol for i in range(2) for j in range(2))


def classify_bimatrix(bm: PayoffBimatrix, tolerance: float | None = None) -> GameCategory | None:
    """Category of a bimatrix, or ``None`` when it is not symmetric."""
    tol = _default_tolerance(bm, tolerance)
    if not is_symmetric(bm, tol):
        return None
    return classify(bm.characteristic_numbers(), tol)


def symmetric_game_from_bimatrix(bm: PayoffBimatrix) -> SymmetricGame:
    if not bm.exact:
        raise ValueError("symmetric_game_from_bimatrix requires an exact bimatrix")
    if not is_symmetric(bm, 0):
        raise NotSymmetric("B is not the transpose of A")
    (x, y), (w, z) = bm.a
    return SymmetricGame(x, y, w, z)


def pure_nash_equilibria(bm: PayoffBimatrix) -> set[tuple[int, int]]:
    """Pure-strategy Nash equilibria as 1-based ``(row, column)`` cells.

    Weak inequalities are used, so ties count as best responses.
    """
    cells = set()
    for i in range(2):
        for j in range(2):
            if bm.a[i][j] >= bm.a[1 - i][j] and bm.b[i][j] >= bm.b[i][1 - j]:
                cells.add((i + 1, j + 1))
    return cells

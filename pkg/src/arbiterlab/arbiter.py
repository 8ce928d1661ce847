"""What a quantum cheating arbiter can do to a symmetric game.

Everything here works on magnitude profiles, the squared magnitudes
``(pa, pb, pc, pd)`` of the arbiter's amplitudes, in exact rational
arithmetic. Only squared magnitudes enter the induced payoffs, so phases
never matter.

With ``s = pa - pb`` and ``t = pd - pb`` (and ``pb == pc``) the induced
game has characteristic numbers::

    alpha = alpha0 * s + beta0 * t
    beta  = alpha0 * t + beta0 * s

from which every recipe and impossibility result below follows.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from arbiterlab.errors import InvalidTarget, NotNormalized, SymmetryViolated
from arbiterlab.game import (
    CharacteristicNumbers,
    GameCategory,
    PayoffBimatrix,
    SymmetricGame,
    characteristic_numbers,
    classify,
    to_payoff,
)
from arbiterlab.quantum import InitialState, closed_form_entries

DEFAULT_RESOLUTION = 50
DEFAULT_MARGIN = Fraction(1, 10)


@dataclass(frozen=True)
class MagnitudeProfile:
    pa: Fraction
    pb: Fraction
    pc: Fraction
    pd: Fraction

    def __post_init__(self):
        for name in ("pa", "pb", "pc", "pd"):
            object.__setattr__(self, name, to_payoff(getattr(self, name)))
        if any(p < 0 for p in self.as_tuple()):
            raise ValueError(f"squared magnitudes must be nonnegative: {self}")
        total = sum(self.as_tuple())
        if total != 1:
            raise NotNormalized(float(total), f"squared magnitudes sum to {total}, not 1")

    @classmethod
    def symmetric(cls, pa, pb, pd) -> MagnitudeProfile:
        """Profile with ``pc == pb``."""
        return cls(pa, pb, pb, pd)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.pa, self.pb, self.pc, self.pd)

    def to_state(self) -> InitialState:
        """Real nonnegative amplitudes with these squared magnitudes."""
        return InitialState(*(math.sqrt(p) for p in self.as_tuple()))

    def mix(self, other: MagnitudeProfile, weight) -> MagnitudeProfile:
        """``weight * self + (1 - weight) * other``."""
        lam = to_payoff(weight)
        if not 0 <= lam <= 1:
            raise ValueError("weight must lie in [0, 1]")
        return MagnitudeProfile(*(lam * p + (1 - lam) * q for p, q in zip(self.as_tuple(), other.as_tuple())))

    def __str__(self):
        return "({}, {}, {}, {})".format(*self.as_tuple())


IDENTITY_PROFILE = MagnitudeProfile(1, 0, 0, 0)


class ExceptionalCase(enum.Enum):
    NONE = "None"
    ALPHA_EQ_BETA = "AlphaEqBeta"
    ALPHA_EQ_MINUS_BETA = "AlphaEqMinusBeta"


class Outcome(enum.Enum):
    FOUND = "Found"
    IMPOSSIBLE = "Impossible"
    ALREADY_TARGET = "AlreadyTarget"


@dataclass(frozen=True)
class SynthesisResult:
    outcome: Outcome
    target: GameCategory
    profile: MagnitudeProfile | None = None
    achieved: GameCategory | None = None
    numbers: CharacteristicNumbers | None = None
    reason: ExceptionalCase | None = None
    recipe: str | None = None

    @property
    def found(self) -> bool:
        return self.outcome is Outcome.FOUND

    @property
    def impossible(self) -> bool:
        return self.outcome is Outcome.IMPOSSIBLE


def profile_payoff_bimatrix(game: SymmetricGame, profile: MagnitudeProfile) -> PayoffBimatrix:
    """Exact induced bimatrix for a magnitude profile."""
    a, b = closed_form_entries(*game.payoffs, *profile.as_tuple())
    return PayoffBimatrix(a, b)


def symmetry_preserved(game: SymmetricGame, profile: MagnitudeProfile) -> bool:
    """Whether the induced game is still symmetric, tested exactly.

    The induced ``B`` equals ``A`` transposed iff both
    ``(pb - pc)(x - z)`` and ``(pb - pc)(y - w)`` vanish.
    """
    gap = profile.pb - profile.pc
    return gap * (game.x - game.z) == 0 and gap * (game.y - game.w) == 0


def final_characteristic_numbers(game: SymmetricGame, profile: MagnitudeProfile) -> CharacteristicNumbers:
    if profile.pb != profile.pc:
        raise SymmetryViolated(f"profile {profile} has pb != pc")
    alpha0, beta0 = characteristic_numbers(game)
    s = profile.pa - profile.pb
    t = profile.pd - profile.pb
    return CharacteristicNumbers(alpha0 * s + beta0 * t, alpha0 * t + beta0 * s)


def exceptional_case(game: SymmetricGame) -> ExceptionalCase:
    alpha0, beta0 = characteristic_numbers(game)
    if alpha0 == beta0:
        return ExceptionalCase.ALPHA_EQ_BETA
    if alpha0 == -beta0:
        return ExceptionalCase.ALPHA_EQ_MINUS_BETA
    return ExceptionalCase.NONE


def _recipe(game: SymmetricGame, target: GameCategory, margin: Fraction):
    """Pick the profile recipe taking ``game`` to ``target``.

    Returns ``(name, profile)`` or ``(None, reason)`` when the target is
    out of reach. All profiles sit ``margin`` away from the uniform point.
    """
    alpha0, beta0 = characteristic_numbers(game)
    source = classify(CharacteristicNumbers(alpha0, beta0))
    case = exceptional_case(game)
    q = Fraction(1, 4)
    m = margin

    if source is GameCategory.I:
        if target is GameCategory.I:
            # pa < pb = pc < pd: s < 0 < t flips both terms consistently
            return "keep-I", MagnitudeProfile.symmetric(q - m, q, q + m)
        if case is ExceptionalCase.ALPHA_EQ_MINUS_BETA:
            # beta = -alpha for every profile
            return None, case
        # pa = pd: alpha = beta = s * (alpha0 + beta0)
        sign = 1 if (target is GameCategory.II) == (alpha0 + beta0 > 0) else -1
        return "pa=pd", MagnitudeProfile.symmetric(q + sign * m, q - sign * m, q + sign * m)

    if target is source:
        # pb < min(pa, pd): s, t > 0
        return "keep-II/III", MagnitudeProfile.symmetric(q + m, q - m, q + m)
    if target is GameCategory.I:
        if case is ExceptionalCase.ALPHA_EQ_BETA:
            # alpha = beta for every profile
            return None, case
        # pb = 1/4, pa != pd: t = -s, so beta = -alpha = -s * (alpha0 - beta0)
        return "pb=1/4", MagnitudeProfile.symmetric(q + m, q, q - m)
    # pb > max(pa, pd): s, t < 0
    return "swap-II/III", MagnitudeProfile.symmetric(q - m, q + m, q - m)


def synthesize_state(
    game: SymmetricGame,
    target: GameCategory | str,
    margin=DEFAULT_MARGIN,
    allow_identity: bool = False,
) -> SynthesisResult:
    """Find a symmetry-preserving profile that puts ``game`` in ``target``.

    Parameters
    ----------
    game:
        The game the players believe they are playing.
    target:
        One of categories I, II, III.
    margin:
        Distance of the recipe profiles from the uniform profile, in
        ``(0, 1/4]``. Larger margins push the induced game further from
        the category boundaries.
    allow_identity:
        When the game already belongs to ``target``, return
        ``AlreadyTarget`` (leave the state alone) instead of a
        category-preserving manipulation.

    Returns
    -------
    SynthesisResult
        ``Found`` with the profile and the exact induced numbers, or
        ``Impossible`` with the exceptional case that blocks the change.
    """
    if isinstance(target, str):
        target = GameCategory.parse(target)
    if target is GameCategory.DEGENERATE:
        raise InvalidTarget("Degenerate is not a synthesis target")
    margin = to_payoff(margin)
    if not 0 < margin <= Fraction(1, 4):
        raise ValueError("margin must lie in (0, 1/4]")

    source = game.category()
    if allow_identity and source is target:
        return SynthesisResult(
            Outcome.ALREADY_TARGET, target, achieved=source, numbers=characteristic_numbers(game)
        )

    name, found = _recipe(game, target, margin)
    if name is None:
        return SynthesisResult(Outcome.IMPOSSIBLE, target, reason=found)
    numbers = final_characteristic_numbers(game, found)
    achieved = classify(numbers)
    assert achieved is target, (game, target, found, numbers)
    return SynthesisResult(
        Outcome.FOUND, target, profile=found, achieved=achieved, numbers=numbers, recipe=name
    )


def simplex_grid(resolution: int = DEFAULT_RESOLUTION):
    """Symmetric profiles ``(i/N, j/2N, j/2N, k/N)`` with ``i + j + k = N``.

    Yielded in lexicographic order of ``(i, j, k)``; there are
    ``(N + 1)(N + 2)/2`` of them.
    """
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    n = resolution
    for i in range(n + 1):
        for j in range(n + 1 - i):
            k = n - i - j
            yield MagnitudeProfile(Fraction(i, n), Fraction(j, 2 * n), Fraction(j, 2 * n), Fraction(k, n))


def reachable_categories(
    game: SymmetricGame, resolution: int = DEFAULT_RESOLUTION
) -> dict[GameCategory, MagnitudeProfile]:
    """First grid witness for every category the arbiter can reach.

    A brute-force sweep over :func:`simplex_grid`, independent of the
    recipes in :func:`synthesize_state`.
    """
    witnesses: dict[GameCategory, MagnitudeProfile] = {}
    for profile in simplex_grid(resolution):
        category = classify(final_characteristic_numbers(game, profile))
        witnesses.setdefault(category, profile)
        if len(witnesses) == len(GameCategory):
            break
    return {c: witnesses[c] for c in GameCategory if c in witnesses}

"""Randomized checks of the three arbiter results.

Each ``verify_theoremN`` draws games (and states) from per-trial random
streams derived from ``(seed, trial)`` and collects every violated
expectation as a :class:`Counterexample`. The functions under test are
injectable so the harness itself can be shown to catch broken
implementations.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from arbiterlab.arbiter import (
    ExceptionalCase,
    Outcome,
    exceptional_case,
    final_characteristic_numbers,
    reachable_categories,
    synthesize_state,
)
from arbiterlab.classical import CoinPair, apply_classical_cheat
from arbiterlab.game import GameCategory, SymmetricGame, classify, is_symmetric
from arbiterlab.quantum import mw_payoff_bimatrix
from arbiterlab.sampling import (
    random_asymmetric_state,
    random_symmetric_game,
    random_symmetric_state,
    trial_rng,
)
from arbiterlab.serialization import game_to_json, profile_to_json, state_to_json

#: Tolerance for the symmetric branch of the symmetry-preservation check.
SYMMETRY_TOLERANCE = 1e-12
#: Minimum ``| |b|^2 - |c|^2 |`` for the asymmetric branch.
ASYMMETRY_GAP = 0.05

#: alpha0 == beta0 == -4, Category III; cannot be made Category I.
ALPHA_EQ_BETA_FIXTURE = SymmetricGame(1, 6, 5, 2)
#: alpha0 == 2 == -beta0, Category I; its category cannot be changed.
ALPHA_EQ_MINUS_BETA_FIXTURE = SymmetricGame(3, 4, 1, 2)


@dataclass
class Counterexample:
    """One violated expectation.

    ``trial`` is the trial index for random games (replay with
    :func:`trial_game`) and ``None`` for fixed fixtures.
    """

    trial: int | None
    game: dict
    case: str
    expected: str
    observed: str


@dataclass
class VerificationReport:
    theorem: str
    trials: int
    seed: int
    failures: list[Counterexample] = field(default_factory=list)
    checks: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        data = asdict(self)
        data["passed"] = self.passed
        return data

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        return cls(
            theorem=data["theorem"],
            trials=data["trials"],
            seed=data["seed"],
            failures=[Counterexample(**f) for f in data["failures"]],
            checks=data.get("checks", 0),
        )


def trial_game(seed: int, trial: int) -> SymmetricGame:
    """The random game used by trial ``trial`` of a run seeded with ``seed``."""
    return random_symmetric_game(trial_rng(seed, trial))


class _Recorder:
    def __init__(self, report: VerificationReport):
        self.report = report

    def check(self, ok, trial, game, case, expected, observed):
        self.report.checks += 1
        if not ok:
            self.report.failures.append(
                Counterexample(trial, game_to_json(game), case, str(expected), str(observed))
            )


def _check_trials(trials: int):
    if trials < 1:
        raise ValueError("trials must be at least 1")


def verify_theorem1(trials: int = 1000, seed: int = 0, cheat=apply_classical_cheat) -> VerificationReport:
    """A classical arbiter cannot change the category of a symmetric game.

    Per game: HH leaves the bimatrix alone, HT and TH break symmetry, and
    TT keeps it symmetric with the characteristic numbers swapped.
    """
    _check_trials(trials)
    report = VerificationReport("T1", trials, seed)
    rec = _Recorder(report)
    for trial in range(trials):
        game = trial_game(seed, trial)
        original = game.bimatrix()
        alpha0, beta0 = game.characteristic_numbers()

        bm = cheat(original, CoinPair.HH)
        rec.check(bm == original, trial, game, "HH", original.pairs, bm.pairs)
        for coins in (CoinPair.HT, CoinPair.TH):
            bm = cheat(original, coins)
            rec.check(not is_symmetric(bm, 0), trial, game, coins.value, "non-symmetric", "symmetric")

        bm = cheat(original, CoinPair.TT)
        if not is_symmetric(bm, 0):
            rec.check(False, trial, game, "TT", "symmetric", "non-symmetric")
            continue
        numbers = tuple(bm.characteristic_numbers())
        rec.check(numbers == (beta0, alpha0), trial, game, "TT numbers", (beta0, alpha0), numbers)
        category = classify(bm.characteristic_numbers())
        rec.check(category is game.category(), trial, game, "TT category", game.category(), category)
    return report


def verify_theorem2(
    trials: int = 1000,
    seed: int = 0,
    payoff=mw_payoff_bimatrix,
    tolerance: float = SYMMETRY_TOLERANCE,
    gap: float = ASYMMETRY_GAP,
) -> VerificationReport:
    """``|b| == |c|`` keeps a game symmetric and is necessary for it.

    Per game: one random state with ``|b| == |c|`` must give a symmetric
    bimatrix within ``tolerance``; one with ``| |b|^2 - |c|^2 | >= gap``
    must not.
    """
    _check_trials(trials)
    report = VerificationReport("T2", trials, seed)
    rec = _Recorder(report)
    for trial in range(trials):
        rng = trial_rng(seed, trial)
        game = random_symmetric_game(rng)
        # distinct payoffs always give x != z or y != w, so |b| == |c| is necessary
        for case, state, want in (
            ("|b|=|c|", random_symmetric_state(rng), True),
            ("|b|!=|c|", random_asymmetric_state(rng, gap), False),
        ):
            got = is_symmetric(payoff(game, state), tolerance)
            rec.check(
                got == want, trial, game, f"{case} {state_to_json(state)}",
                "symmetric" if want else "non-symmetric",
                "symmetric" if got else "non-symmetric",
            )
    return report


def _expected_impossible(game: SymmetricGame, target: GameCategory) -> ExceptionalCase | None:
    case = exceptional_case(game)
    source = game.category()
    if case is ExceptionalCase.ALPHA_EQ_BETA and target is GameCategory.I:
        return case
    if case is ExceptionalCase.ALPHA_EQ_MINUS_BETA and source is GameCategory.I and target is not GameCategory.I:
        return case
    return None


def _check_synthesis(rec, trial, game, resolution, synthesize):
    reachable = reachable_categories(game, resolution)
    for target in (GameCategory.I, GameCategory.II, GameCategory.III):
        result = synthesize(game, target)
        label = f"target {target.value}"
        if result.outcome is Outcome.FOUND:
            profile = result.profile
            ok_shape = profile.pb == profile.pc
            rec.check(ok_shape, trial, game, label, "pb == pc", profile_to_json(profile))
            if ok_shape:
                got = classify(final_characteristic_numbers(game, profile))
                rec.check(got is target, trial, game, label, target, got)
            rec.check(target in reachable, trial, game, label, "grid finds no witness", "Found")
        elif result.outcome is Outcome.IMPOSSIBLE:
            rec.check(target not in reachable, trial, game, label, "Impossible",
                      f"grid witness {reachable.get(target)}")
            rec.check(result.reason is exceptional_case(game), trial, game, label,
                      exceptional_case(game), result.reason)
        else:
            rec.check(game.category() is target, trial, game, label, result.outcome, target)
        expected_block = _expected_impossible(game, target)
        rec.check(
            (expected_block is not None) == (result.outcome is Outcome.IMPOSSIBLE),
            trial, game, f"{label} verdict",
            f"Impossible({expected_block.value})" if expected_block else "reachable",
            result.outcome.value,
        )


def verify_theorem3(
    trials: int = 200,
    seed: int = 0,
    resolution: int = 50,
    synthesize=synthesize_state,
) -> VerificationReport:
    """A quantum arbiter can move a game into any category, bar two exceptions.

    Per random game and target, the synthesizer verdict must agree with a
    brute-force grid sweep, and found profiles must classify exactly to the
    target. The two exceptional fixtures are always checked as well.
    """
    _check_trials(trials)
    report = VerificationReport("T3", trials, seed)
    rec = _Recorder(report)
    for trial in range(trials):
        _check_synthesis(rec, trial, trial_game(seed, trial), resolution, synthesize)
    for fixture in (ALPHA_EQ_BETA_FIXTURE, ALPHA_EQ_MINUS_BETA_FIXTURE):
        _check_synthesis(rec, None, fixture, resolution, synthesize)
    return report


def verify(theorems=("1", "2", "3"), trials: int | None = None, seed: int = 0) -> list[VerificationReport]:
    runners = {"1": verify_theorem1, "2": verify_theorem2, "3": verify_theorem3}
    reports = []
    for t in theorems:
        kwargs = {"seed": seed}
        if trials is not None:
            kwargs["trials"] = trials
        reports.append(runners[str(t)](**kwargs))
    return reports

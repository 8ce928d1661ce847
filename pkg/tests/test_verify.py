import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from arbiterlab import (
    CoinPair,
    GameCategory,
    InitialState,
    PayoffBimatrix,
    SymmetricGame,
    apply_classical_cheat,
    classify,
    mw_payoff_bimatrix,
    random_symmetric_game,
    synthesize_state,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
)
from arbiterlab.arbiter import Outcome, SynthesisResult
from arbiterlab.sampling import (
    random_amplitudes,
    random_asymmetric_state,
    random_symmetric_state,
    trial_rng,
)
from arbiterlab.verify import VerificationReport, trial_game, verify


def test_random_game_is_deterministic_and_in_range():
    g1, g2 = random_symmetric_game(0, 9), random_symmetric_game(0, 9)
    assert g1 == g2
    assert all(-9 <= v <= 9 and v.denominator == 1 for v in g1.payoffs)
    with pytest.raises(ValueError):
        random_symmetric_game(0, 3)


@given(st.integers(0, 2**32 - 1))
def test_random_games_never_degenerate(seed):
    game = random_symmetric_game(seed, 9)
    assert classify(game.characteristic_numbers()) is not GameCategory.DEGENERATE


def test_random_games_cover_all_categories():
    seen = {random_symmetric_game(trial_rng(1, k)).category() for k in range(200)}
    assert seen == {GameCategory.I, GameCategory.II, GameCategory.III}


@given(st.integers(0, 2**32 - 1))
def test_random_state_generators(seed):
    vec = random_amplitudes(seed)
    assert abs(np.sum(np.abs(vec) ** 2) - 1) < 1e-12
    sym = random_symmetric_state(seed)
    assert abs(abs(sym.b) - abs(sym.c)) < 1e-15
    assert abs(sym.squared_norm - 1) < 1e-12
    asym = random_asymmetric_state(seed, 0.05)
    assert abs(abs(asym.b) ** 2 - abs(asym.c) ** 2) >= 0.05


def test_theorem1_passes():
    report = verify_theorem1(1000, seed=42)
    assert report.passed and report.trials == 1000


def test_theorem1_single_trial_count():
    assert verify_theorem1(1, seed=5).trials == 1


def _broken_cheat(bm, coins):
    # forgets to swap rows for TT
    if CoinPair(coins) is CoinPair.TT:
        return apply_classical_cheat(bm, CoinPair.HT)
    return apply_classical_cheat(bm, coins)


def test_theorem1_detects_broken_cheat_and_records_replay():
    report = verify_theorem1(5, seed=11, cheat=_broken_cheat)
    assert not report.passed
    failure = report.failures[0]
    assert failure.case == "TT"
    assert SymmetricGame(**failure.game) == trial_game(11, failure.trial)


def test_theorem2_passes():
    assert verify_theorem2(1000, seed=7).passed


def test_theorem2_non_symmetric_example():
    # (0.64 - 0.36) * (3 - 1) and (0.64 - 0.36) * (0 - 5) are nonzero
    bm = mw_payoff_bimatrix(SymmetricGame(3, 0, 5, 1), InitialState(0, 0.8, 0.6, 0))
    assert abs(bm.a[0][1] - bm.b[1][0]) == pytest.approx(0.28 * 2)
    assert abs(bm.a[0][0] - bm.b[0][0]) == pytest.approx(0.28 * 5)


def test_theorem2_detects_symmetrizing_payoff():
    def always_symmetric(game, state):
        return game.bimatrix().to_approximate()

    report = verify_theorem2(3, seed=1, payoff=always_symmetric)
    assert len(report.failures) == 3
    assert all(f.case.startswith("|b|!=|c|") for f in report.failures)


def test_theorem3_passes():
    report = verify_theorem3(200, seed=3)
    assert report.passed


def test_theorem3_detects_overclaiming_synthesizer():
    def overclaim(game, target):
        result = synthesize_state(game, target)
        if result.impossible:
            return SynthesisResult(Outcome.FOUND, target, profile=synthesize_state(game, game.category()).profile)
        return result

    report = verify_theorem3(1, seed=0, synthesize=overclaim)
    assert not report.passed
    assert {f.trial for f in report.failures} == {None}


def test_report_serializes_losslessly():
    report = verify_theorem1(5, seed=11, cheat=_broken_cheat)
    data = json.loads(json.dumps(report.to_dict()))
    assert data["passed"] is False
    assert VerificationReport.from_dict(data) == report


def test_runs_are_deterministic():
    assert verify_theorem2(20, seed=9).to_dict() == verify_theorem2(20, seed=9).to_dict()
    assert [r.theorem for r in verify(("1", "2"), trials=2, seed=0)] == ["T1", "T2"]


def test_bad_trial_count():
    with pytest.raises(ValueError):
        verify_theorem1(0)

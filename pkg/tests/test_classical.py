import pytest
from hypothesis import given

from arbiterlab import (
    CoinPair,
    GameCategory,
    PayoffBimatrix,
    SymmetricGame,
    apply_classical_cheat,
    classical_cheat_report,
    is_symmetric,
)

from conftest import games

PD_BIMATRIX = SymmetricGame(3, 0, 5, 1).bimatrix()


@pytest.mark.parametrize(
    "coins, expected",
    [
        (CoinPair.HH, [[(3, 3), (0, 5)], [(5, 0), (1, 1)]]),
        (CoinPair.HT, [[(0, 5), (3, 3)], [(1, 1), (5, 0)]]),
        (CoinPair.TH, [[(5, 0), (1, 1)], [(3, 3), (0, 5)]]),
        (CoinPair.TT, [[(1, 1), (5, 0)], [(0, 5), (3, 3)]]),
    ],
)
def test_apply_classical_cheat(coins, expected):
    assert apply_classical_cheat(PD_BIMATRIX, coins) == PayoffBimatrix.from_pairs(expected)


def test_cheat_accepts_string_tags():
    assert apply_classical_cheat(PD_BIMATRIX, "TT") == apply_classical_cheat(PD_BIMATRIX, CoinPair.TT)


def test_report_prisoners_dilemma():
    report = {o.coins: o for o in classical_cheat_report(SymmetricGame(3, 0, 5, 1))}
    assert report[CoinPair.HH].symmetric and report[CoinPair.HH].category is GameCategory.I
    assert report[CoinPair.TT].symmetric and report[CoinPair.TT].category is GameCategory.I
    for coins in (CoinPair.HT, CoinPair.TH):
        assert not report[coins].symmetric
        assert report[coins].category is None and report[coins].numbers is None


def test_report_coordination_tt_swaps_numbers():
    tt = classical_cheat_report(SymmetricGame(4, 1, 0, 3))[3]
    assert tt.coins is CoinPair.TT
    assert tuple(tt.numbers) == (2, 4)
    assert tt.category is GameCategory.II


def test_report_hawk_dove_tt_keeps_category():
    tt = classical_cheat_report(SymmetricGame(1, 6, 5, 3))[3]
    assert tt.symmetric and tt.category is GameCategory.III


@given(games())
def test_cheats_are_involutions(game):
    bm = game.bimatrix()
    for coins in CoinPair:
        assert apply_classical_cheat(apply_classical_cheat(bm, coins), coins) == bm


@given(games())
def test_ht_then_th_is_tt(game):
    bm = game.bimatrix()
    composed = apply_classical_cheat(apply_classical_cheat(bm, CoinPair.HT), CoinPair.TH)
    assert composed == apply_classical_cheat(bm, CoinPair.TT)


@given(games())
def test_single_coin_cheat_breaks_symmetry(game):
    for coins in (CoinPair.HT, CoinPair.TH):
        assert not is_symmetric(apply_classical_cheat(game.bimatrix(), coins), 0)


@given(games())
def test_tt_cheat_swaps_characteristic_numbers(game):
    alpha0, beta0 = game.characteristic_numbers()
    bm = apply_classical_cheat(game.bimatrix(), CoinPair.TT)
    assert is_symmetric(bm, 0)
    assert tuple(bm.characteristic_numbers()) == (beta0, alpha0)

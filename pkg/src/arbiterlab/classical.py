"""Classical cheating arbiter: the four coin states and the bimatrices they induce.

Players believe they receive two coins heads-up (HH). A coin sent tails-up
makes its owner play the opposite of the strategy they intend, which
relabels that player's strategies in the bimatrix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from arbiterlab.game import (
    CharacteristicNumbers,
    GameCategory,
    PayoffBimatrix,
    SymmetricGame,
    classify,
    is_symmetric,
)


class CoinPair(enum.Enum):
    """Actual state of (player A's coin, player B's coin)."""

    HH = "HH"
    HT = "HT"
    TH = "TH"
    TT = "TT"

    @property
    def flips_a(self) -> bool:
        return self.value[0] == "T"

    @property
    def flips_b(self) -> bool:
        return self.value[1] == "T"


def _permute(matrix, swap_rows: bool, swap_cols: bool):
    return tuple(
        tuple(matrix[1 - i if swap_rows else i][1 - j if swap_cols else j] for j in range(2))
        for i in range(2)
    )


def apply_classical_cheat(bm: PayoffBimatrix, coins: CoinPair) -> PayoffBimatrix:
    """Bimatrix the players actually face when the arbiter sends ``coins``.

    A tails coin for player B swaps the columns (HT); for player A it swaps
    the rows (TH); TT swaps both.
    """
    coins = CoinPair(coins)
    return PayoffBimatrix(
        _permute(bm.a, coins.flips_a, coins.flips_b),
        _permute(bm.b, coins.flips_a, coins.flips_b),
    )


@dataclass(frozen=True)
class CheatOutcome:
    coins: CoinPair
    bimatrix: PayoffBimatrix
    symmetric: bool
    category: GameCategory | None
    numbers: CharacteristicNumbers | None


def classical_cheat_report(game: SymmetricGame) -> list[CheatOutcome]:
    """One outcome per coin state, with a category only for symmetric results."""
    original = game.bimatrix()
    report = []
    for coins in CoinPair:
        bm = apply_classical_cheat(original, coins)
        symmetric = is_symmetric(bm, 0)
        numbers = bm.characteristic_numbers() if symmetric else None
        category = classify(numbers) if symmetric else None
        report.append(CheatOutcome(coins, bm, symmetric, category, numbers))
    return report

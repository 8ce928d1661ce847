"""Cheating arbiters in classical and quantum 2x2 symmetric games."""

from arbiterlab.arbiter import (
    ExceptionalCase,
    MagnitudeProfile,
    Outcome,
    SynthesisResult,
    exceptional_case,
    final_characteristic_numbers,
    profile_payoff_bimatrix,
    reachable_categories,
    symmetry_preserved,
    synthesize_state,
)
from arbiterlab.classical import CoinPair, apply_classical_cheat, classical_cheat_report
from arbiterlab.errors import (
    ArbiterLabError,
    IdenticalPayoffs,
    InvalidTarget,
    NotNormalized,
    NotSymmetric,
    SymmetryViolated,
)
from arbiterlab.game import (
    CharacteristicNumbers,
    GameCategory,
    PayoffBimatrix,
    SymmetricGame,
    characteristic_numbers,
    classify,
    classify_bimatrix,
    is_symmetric,
    pure_nash_equilibria,
    symmetric_game_from_bimatrix,
)
from arbiterlab.quantum import (
    InitialState,
    LocalMove,
    OutcomeDistribution,
    apply_moves,
    expected_payoffs,
    mw_payoff_bimatrix,
    mw_payoff_bimatrix_oracle,
    outcome_probabilities,
    validate_state,
)
from arbiterlab.sampling import random_state, random_symmetric_game
from arbiterlab.verify import VerificationReport, verify_theorem1, verify_theorem2, verify_theorem3

__version__ = "0.1.0"

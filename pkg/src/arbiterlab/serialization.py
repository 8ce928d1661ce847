"""JSON forms of games, bimatrices, states, profiles and reports.

Exact rationals are written as strings (``"3"``, ``"-7/2"``); floats as
JSON numbers. Readers accept either for exact fields as long as numbers
are integers.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from arbiterlab.arbiter import MagnitudeProfile
from arbiterlab.game import PayoffBimatrix, SymmetricGame, to_payoff
from arbiterlab.quantum import InitialState


def rational_to_str(value) -> str:
    return str(Fraction(value))


def _exact(value) -> Fraction:
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(f"non-integer JSON number {value!r} in an exact field; write it as a string")
        value = int(value)
    return to_payoff(value)


def _entry(value):
    return rational_to_str(value) if isinstance(value, Fraction) else value


def game_to_json(game: SymmetricGame) -> dict:
    return {k: rational_to_str(getattr(game, k)) for k in ("x", "y", "w", "z")}


def game_from_json(data: dict) -> SymmetricGame:
    try:
        return SymmetricGame(*(_exact(data[k]) for k in ("x", "y", "w", "z")))
    except KeyError as exc:
        raise ValueError(f"game JSON is missing key {exc.args[0]!r}") from None


def bimatrix_to_json(bm: PayoffBimatrix) -> list:
    return [[[_entry(p), _entry(q)] for p, q in row] for row in bm.pairs]


def bimatrix_from_json(data: list) -> PayoffBimatrix:
    """Exact if every entry is a string or an integer, approximate otherwise."""
    flat = [v for row in data for cell in row for v in cell]
    if all(isinstance(v, (str, int)) and not isinstance(v, bool) for v in flat):
        return PayoffBimatrix.from_pairs([[[to_payoff(v) for v in cell] for cell in row] for row in data])
    return PayoffBimatrix.from_pairs([[[float(v) for v in cell] for cell in row] for row in data])


def state_to_json(state: InitialState) -> dict:
    return {k: [getattr(state, k).real, getattr(state, k).imag] for k in "abcd"}


def state_from_json(data: dict) -> InitialState:
    def amp(v):
        if isinstance(v, (list, tuple)):
            re, im = v
            return complex(float(re), float(im))
        return complex(float(v))

    try:
        return InitialState(*(amp(data[k]) for k in "abcd"))
    except KeyError as exc:
        raise ValueError(f"state JSON is missing key {exc.args[0]!r}") from None


def profile_to_json(profile: MagnitudeProfile) -> dict:
    return {k: rational_to_str(getattr(profile, k)) for k in ("pa", "pb", "pc", "pd")}


def profile_from_json(data: dict) -> MagnitudeProfile:
    return MagnitudeProfile(*(_exact(data[k]) for k in ("pa", "pb", "pc", "pd")))


def numbers_to_json(cn) -> dict:
    return {"alpha": _entry(cn.alpha), "beta": _entry(cn.beta)}


def load_json(path) -> object:
    return json.loads(Path(path).read_text())


def load_game(path) -> SymmetricGame:
    return game_from_json(load_json(path))


def load_state(path) -> InitialState:
    return state_from_json(load_json(path))

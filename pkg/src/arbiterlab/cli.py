"""Command-line interface: ``arbiterlab <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from arbiterlab.arbiter import exceptional_case, reachable_categories, synthesize_state
from arbiterlab.classical import CoinPair, apply_classical_cheat, classical_cheat_report
from arbiterlab.errors import ArbiterLabError
from arbiterlab.game import (
    DEFAULT_TOLERANCE,
    GameCategory,
    classify,
    is_symmetric,
    pure_nash_equilibria,
)
from arbiterlab.quantum import mw_payoff_bimatrix, mw_payoff_bimatrix_oracle
from arbiterlab.serialization import (
    bimatrix_to_json,
    game_to_json,
    load_game,
    load_state,
    numbers_to_json,
    profile_to_json,
    state_to_json,
)
from arbiterlab.verify import verify

SEED_ENV = "ARBITERLAB_SEED"
EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise ArbiterLabError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if v is None:
        return "-"
    return str(v)


def _bimatrix_text(bm_json) -> str:
    return "; ".join(" ".join(f"({_fmt(p)},{_fmt(q)})" for p, q in row) for row in bm_json)


def render_table(headers, rows) -> str:
    cells = [[str(h) for h in headers]] + [[_fmt(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_csv(headers, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows([[_fmt(v) for v in row] for row in rows])
    return buf.getvalue().rstrip("\n")


def emit(payload, headers, rows, fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json":
        text = json.dumps(payload, indent=2)
    elif fmt == "csv":
        text = render_csv(headers, rows)
    else:
        text = render_table(headers, rows)
    print(text, file=out)


def _category_value(cat):
    return cat.value if cat is not None else None


def cmd_classify(args) -> int:
    game = load_game(args.game)
    cn = game.characteristic_numbers()
    category = classify(cn)
    payload = {
        "game": game_to_json(game),
        "characteristic_numbers": numbers_to_json(cn),
        "category": category.value,
        "label": category.label,
        "exceptional_case": exceptional_case(game).value,
    }
    rows = [[*game_to_json(game).values(), str(cn.alpha), str(cn.beta), category.value,
             payload["exceptional_case"]]]
    emit(payload, ["x", "y", "w", "z", "alpha", "beta", "category", "exceptional"], rows, args.format)
    return EXIT_OK


def _cheat_classical(args, game) -> int:
    report = classical_cheat_report(game)
    payload = {
        "game": game_to_json(game),
        "outcomes": [
            {
                "coins": o.coins.value,
                "bimatrix": bimatrix_to_json(o.bimatrix),
                "symmetric": o.symmetric,
                "characteristic_numbers": numbers_to_json(o.numbers) if o.numbers else None,
                "category": _category_value(o.category),
            }
            for o in report
        ],
    }
    rows = [
        [o["coins"], _bimatrix_text(o["bimatrix"]), o["symmetric"], o["category"]]
        for o in payload["outcomes"]
    ]
    emit(payload, ["coins", "bimatrix", "symmetric", "category"], rows, args.format)
    return EXIT_OK


def _cheat_quantum(args, game) -> int:
    state = load_state(args.state)
    closed = mw_payoff_bimatrix(game, state)
    oracle = mw_payoff_bimatrix_oracle(game, state)
    tol = args.tolerance
    symmetric = is_symmetric(closed, tol)
    cn = closed.characteristic_numbers() if symmetric else None
    category = classify(cn, tol) if symmetric else None
    payload = {
        "game": game_to_json(game),
        "state": state_to_json(state),
        "closed_form": bimatrix_to_json(closed),
        "simulated": bimatrix_to_json(oracle),
        "max_difference": closed.max_abs_difference(oracle),
        "symmetric": symmetric,
        "characteristic_numbers": numbers_to_json(cn) if cn else None,
        "category": _category_value(category),
    }
    rows = [
        ["closed_form", _bimatrix_text(payload["closed_form"])],
        ["simulated", _bimatrix_text(payload["simulated"])],
        ["symmetric", symmetric],
        ["alpha", cn.alpha if cn else None],
        ["beta", cn.beta if cn else None],
        ["category", _category_value(category)],
    ]
    emit(payload, ["field", "value"], rows, args.format)
    return EXIT_OK


def cmd_cheat(args) -> int:
    game = load_game(args.game)
    if args.quantum:
        if not args.state:
            raise ArbiterLabError("cheat --quantum requires --state FILE")
        return _cheat_quantum(args, game)
    return _cheat_classical(args, game)


def cmd_synthesize(args) -> int:
    game = load_game(args.game)
    kwargs = {} if args.margin is None else {"margin": args.margin}
    result = synthesize_state(game, GameCategory.parse(args.target), **kwargs)
    payload = {
        "game": game_to_json(game),
        "target": result.target.value,
        "outcome": result.outcome.value,
        "profile": profile_to_json(result.profile) if result.profile else None,
        "amplitudes": state_to_json(result.profile.to_state()) if result.profile else None,
        "characteristic_numbers": numbers_to_json(result.numbers) if result.numbers else None,
        "achieved": _category_value(result.achieved),
        "reason": result.reason.value if result.reason else None,
        "recipe": result.recipe,
    }
    profile = payload["profile"] or {}
    numbers = payload["characteristic_numbers"] or {}
    rows = [[result.target.value, result.outcome.value, profile.get("pa"), profile.get("pb"),
             profile.get("pc"), profile.get("pd"), numbers.get("alpha"), numbers.get("beta"),
             payload["reason"]]]
    emit(payload, ["target", "outcome", "pa", "pb", "pc", "pd", "alpha", "beta", "reason"],
         rows, args.format)
    return EXIT_OK


def cmd_reach(args) -> int:
    game = load_game(args.game)
    witnesses = reachable_categories(game, args.resolution)
    payload = {
        "game": game_to_json(game),
        "resolution": args.resolution,
        "witnesses": {c.value: profile_to_json(p) for c, p in witnesses.items()},
    }
    rows = [[c.value, *profile_to_json(p).values()] for c, p in witnesses.items()]
    emit(payload, ["category", "pa", "pb", "pc", "pd"], rows, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    theorems = ("1", "2", "3") if args.theorem == "all" else (args.theorem,)
    seed = args.seed if args.seed is not None else default_seed()
    reports = verify(theorems, args.trials, seed)
    payload = {"reports": [r.to_dict() for r in reports]}
    rows = [[r.theorem, r.trials, r.seed, r.checks, len(r.failures), "pass" if r.passed else "FAIL"]
            for r in reports]
    emit(payload, ["theorem", "trials", "seed", "checks", "failures", "verdict"], rows, args.format)
    if args.format != "json":
        for r in reports:
            for f in r.failures[:10]:
                print(f"{r.theorem} trial={f.trial} game={f.game} {f.case}: "
                      f"expected {f.expected}, observed {f.observed}", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_nash(args) -> int:
    game = load_game(args.game)
    if args.state:
        bm = mw_payoff_bimatrix(game, load_state(args.state))
    else:
        bm = apply_classical_cheat(game.bimatrix(), CoinPair(args.coins))
    cells = sorted(pure_nash_equilibria(bm))
    payload = {"game": game_to_json(game), "bimatrix": bimatrix_to_json(bm),
               "equilibria": [list(c) for c in cells]}
    rows = [[i, j, _fmt(bm.a[i - 1][j - 1]), _fmt(bm.b[i - 1][j - 1])] for i, j in cells]
    emit(payload, ["row", "column", "payoff_A", "payoff_B"], rows, args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE,
                        help="tolerance for symmetry and sign tests on floating bimatrices")

    parser = argparse.ArgumentParser(prog="arbiterlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="characteristic numbers and category")
    p.add_argument("--game", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("cheat", parents=[common], help="bimatrices induced by a cheating arbiter")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--classical", action="store_true")
    mode.add_argument("--quantum", action="store_true")
    p.add_argument("--game", required=True)
    p.add_argument("--state")
    p.set_defaults(func=cmd_cheat)

    p = sub.add_parser("synthesize", parents=[common], help="arbiter profile forcing a category")
    p.add_argument("--game", required=True)
    p.add_argument("--target", required=True, choices=("I", "II", "III"))
    p.add_argument("--margin", help="recipe margin as a rational, e.g. 1/10")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("reach", parents=[common], help="grid sweep of reachable categories")
    p.add_argument("--game", required=True)
    p.add_argument("--resolution", type=int, default=50)
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("verify", parents=[common], help="randomized theorem checks")
    p.add_argument("--theorem", choices=("1", "2", "3", "all"), default="all")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("nash", parents=[common], help="pure Nash equilibria")
    p.add_argument("--game", required=True)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--state")
    src.add_argument("--coins", choices=[c.value for c in CoinPair], default="HH")
    p.set_defaults(func=cmd_nash)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ArbiterLabError, ValueError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"arbiterlab: error: {exc}", file=sys.stderr)
        return EXIT_INPUT

"""Command line: orbit listings, verification suites, tableau tools.

Exit codes: 0 success, 1 a dynamical invariant failed (or an orbit hit
the iteration cap), 2 configuration or input errors.
"""

import argparse
import json
import os
import sys

from .dynamics import BIRATIONAL, PL, promotion, rowmotion
from .orbits import OrbitError, orbit
from .posets import OrderIdeal, PosetError, promotion_ideal, rectangle_poset, rowmotion_ideal
from .rational import format_rat, parse_rat
from .serialize import (
    array_to_json,
    dumps_canonical,
    pattern_to_json,
    poset_from_json,
    poset_to_json,
    tableau_from_json,
    tableau_to_json,
)
from .tableaux import TableauError, tableau_promotion, tableau_to_array, tableau_to_pattern
from .verify import SUITES, suite_bridge

TWO_BY_TWO_ALIASES = {"w": (1, 1), "x": (2, 1), "y": (1, 2), "z": (2, 2)}

REGIMES = ("combinatorial", "pl", "birational")
MAPS = ("rowmotion", "promotion")


def _parse_shape(text):
    parts = text.lower().split("x")
    try:
        numbers = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"bad shape {text!r}; expected AxB") from None
    if len(numbers) not in (2, 3) or any(n < 1 for n in numbers):
        raise ValueError(f"bad shape {text!r}; expected AxB")
    return tuple(numbers)


def _resolve_poset(args, required=True):
    if args.shape and args.poset:
        raise ValueError("pass --shape or --poset, not both")
    if args.shape:
        shape = _parse_shape(args.shape)
        if len(shape) != 2:
            raise ValueError(f"bad shape {args.shape!r}; expected AxB")
        return rectangle_poset(*shape)
    if args.poset:
        with open(args.poset) as handle:
            return poset_from_json(json.load(handle))
    if required:
        raise ValueError("a poset is required: pass --shape AxB or --poset FILE")
    return None


def _display_labels(poset):
    if poset.rectangle_shape == (2, 2):
        order = {v: k for k, v in TWO_BY_TWO_ALIASES.items()}
        return [order[lab] for lab in poset.labels]
    return [
        ".".join(str(part) for part in lab) if isinstance(lab, tuple) else str(lab)
        for lab in poset.labels
    ]


def _element_index(poset, token):
    if poset.rectangle_shape == (2, 2) and token in TWO_BY_TWO_ALIASES:
        return poset.index_of(TWO_BY_TWO_ALIASES[token])
    if "." in token:
        parts = token.split(".")
        if len(parts) == 2 and all(p.isdigit() for p in parts):
            return poset.index_of((int(parts[0]), int(parts[1])))
    if token.lstrip("-").isdigit():
        index = int(token)
        if not 0 <= index < poset.size:
            raise ValueError(f"element index {index} outside 0..{poset.size - 1}")
        return index
    return poset.index_of(token)


def _parse_start(poset, regime, text):
    if regime == "combinatorial":
        tokens = [t.strip() for t in text.split(",") if t.strip()]
        return OrderIdeal(poset, [_element_index(poset, t) for t in tokens])
    values = [parse_rat(t) for t in text.split(",")]
    if len(values) != poset.size:
        raise ValueError(f"{len(values)} values for {poset.size} elements")
    return values


def _format_values(values):
    return "(" + ",".join(format_rat(v) for v in values) + ")"


def _format_ideal(ideal, labels):
    return "{" + ",".join(labels[i] for i in ideal.indices) + "}"


def cmd_orbit(args):
    poset = _resolve_poset(args)
    labels = _display_labels(poset)
    start = _parse_start(poset, args.regime, args.start)
    if args.regime == "combinatorial":
        step = rowmotion_ideal if args.map == "rowmotion" else promotion_ideal
        record = orbit(step, start, cap=args.cap)
        states_json = [list(state.indices) for state in record]
        lines = [_format_ideal(state, labels) for state in record]
    else:
        alg = PL if args.regime == "pl" else BIRATIONAL
        f = alg.array(poset, start)
        mapper = rowmotion if args.map == "rowmotion" else promotion
        record = orbit(lambda g: mapper(alg, g), f, cap=args.cap)
        states_json = [[format_rat(v) for v in state.values] for state in record]
        lines = [_format_values(state.values) for state in record]
    if args.json:
        sys.stdout.write(
            dumps_canonical(
                {
                    "regime": args.regime,
                    "map": args.map,
                    "poset": poset_to_json(poset),
                    "states": states_json,
                    "period": record.period,
                }
            )
        )
    else:
        print("# elements: " + ",".join(labels))
        for line in lines:
            print(line)
        print(f"period: {record.period}")
    return 0


def cmd_verify(args):
    try:
        runner = SUITES[args.suite]
    except KeyError:
        raise ValueError(
            f"unknown suite {args.suite!r}; pick one of {', '.join(sorted(SUITES))}"
        ) from None
    seed = args.seed
    if seed is None and os.environ.get("TOGGLEKIT_SEED"):
        seed = int(os.environ["TOGGLEKIT_SEED"])
    kwargs = {"seed": seed, "cap": args.cap}
    if args.samples is not None:
        kwargs["samples"] = args.samples
    if args.suite == "bridge":
        if args.poset:
            raise ValueError("the bridge suite takes --shape AxBxN, not --poset")
        if args.start:
            raise ValueError("the bridge suite does not take --start")
        if args.shape:
            shape = _parse_shape(args.shape)
            if len(shape) != 3:
                raise ValueError("the bridge suite needs a tableau shape AxBxN")
            kwargs["shapes"] = (shape,)
        report = suite_bridge(**kwargs)
    else:
        poset = _resolve_poset(args)
        if args.start:
            if args.suite == "vertex":
                raise ValueError("the vertex suite does not take --start")
            kwargs["start"] = _parse_start(poset, "birational", args.start)
        report = runner(poset, **kwargs)
    if args.json:
        sys.stdout.write(dumps_canonical(report))
    else:
        seed_note = "entropy" if report["seed"] is None else report["seed"]
        print(f"suite: {report['suite']}  seed: {seed_note}")
        for check in report["checks"]:
            status = "PASS" if check["pass"] else "FAIL"
            print(
                f"{status} {check['check']} [{check['regime']}] "
                f"({check['inputs']} inputs)"
            )
            for violation in check["violations"]:
                print(f"     counterexample: {json.dumps(violation, sort_keys=True)}")
        print("result: " + ("pass" if report["pass"] else "fail"))
    return 0 if report["pass"] else 1


def _rank_rows(f):
    'Rows of the array by rank, top rank first, high column first inside a row.'
    poset = f.poset
    order = sorted(
        range(poset.size),
        key=lambda i: (-poset.ranks[i], -poset.rc.positions[i][0]),
    )
    rows = []
    for i in order:
        if rows and poset.ranks[rows[-1][0][0]] == poset.ranks[i]:
            rows[-1].append((i, f.values[i]))
        else:
            rows.append([(i, f.values[i])])
    return [[v for _, v in row] for row in rows]


def cmd_tableau(args):
    if args.input:
        with open(args.input) as handle:
            data = json.load(handle)
    else:
        data = json.load(sys.stdin)
    tableau = tableau_from_json(data)
    if args.action == "to-gt":
        pattern = tableau_to_pattern(tableau)
        if args.json:
            sys.stdout.write(dumps_canonical(pattern_to_json(pattern)))
        else:
            for row in pattern.rows:
                print(" ".join(str(v) for v in row))
        return 0
    if args.action == "to-array":
        f = tableau_to_array(tableau)
        if args.json:
            sys.stdout.write(
                dumps_canonical(
                    {"poset": poset_to_json(f.poset), "array": array_to_json(f)}
                )
            )
        else:
            print("# elements: " + ",".join(_display_labels(f.poset)))
            print("# values: " + _format_values(f.values))
            for row in _rank_rows(f):
                print(" ".join(format_rat(v) for v in row))
        return 0
    if args.action == "promote":
        advanced = tableau_promotion(tableau)
        if args.json:
            sys.stdout.write(dumps_canonical(tableau_to_json(advanced)))
        else:
            for row in advanced.rows:
                print(" ".join(str(v) for v in row))
        return 0
    left = tableau_to_array(tableau_promotion(tableau))
    right = promotion(PL, tableau_to_array(tableau))
    equal = left == right
    if args.json:
        sys.stdout.write(
            dumps_canonical(
                {
                    "left": [format_rat(v) for v in left.values],
                    "right": [format_rat(v) for v in right.values],
                    "equal": equal,
                }
            )
        )
    else:
        print("left:  " + _format_values(left.values))
        print("right: " + _format_values(right.values))
        print("equal: " + ("true" if equal else "false"))
    return 0 if equal else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="togglekit",
        description="Exact toggle dynamics on posets: orbits, verification, tableaux.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    orbit_p = sub.add_parser("orbit", help="iterate a map and print the orbit")
    orbit_p.add_argument("--regime", choices=REGIMES, required=True)
    orbit_p.add_argument("--map", choices=MAPS, default="rowmotion")
    orbit_p.add_argument("--shape", help="rectangle AxB")
    orbit_p.add_argument("--poset", help="poset JSON file")
    orbit_p.add_argument(
        "--start",
        required=True,
        help="comma-separated rationals, or ideal members for the combinatorial regime",
    )
    orbit_p.add_argument("--cap", type=int, default=1000)
    orbit_p.add_argument("--json", action="store_true")
    orbit_p.set_defaults(func=cmd_orbit)

    verify_p = sub.add_parser("verify", help="run a verification suite")
    verify_p.add_argument("suite", choices=sorted(SUITES))
    verify_p.add_argument("--shape", help="rectangle AxB (bridge: AxBxN)")
    verify_p.add_argument("--poset", help="poset JSON file")
    verify_p.add_argument("--samples", type=int)
    verify_p.add_argument("--seed", type=int, help="defaults to TOGGLEKIT_SEED")
    verify_p.add_argument("--start", help="check one explicit array instead of samples")
    verify_p.add_argument("--cap", type=int, default=1000)
    verify_p.add_argument("--json", action="store_true")
    verify_p.set_defaults(func=cmd_verify)

    tableau_p = sub.add_parser("tableau", help="tableau conversions and checks")
    tableau_p.add_argument(
        "action", choices=("to-gt", "to-array", "promote", "bridge-check")
    )
    tableau_p.add_argument("--input", help="tableau JSON file (default: stdin)")
    tableau_p.add_argument("--json", action="store_true")
    tableau_p.set_defaults(func=cmd_tableau)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OrbitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (PosetError, TableauError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

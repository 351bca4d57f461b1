"""Batch front door: run scenarios, run the invariant suite, emit results.

    noncomm run <scenario> [--config PATH] [--set k=v,...] [--seed U64]
                [--trials N] [--out PATH] [--format csv|json] [--snapshots]
    noncomm check [--suite NAME] [--tolerance-profile default|strict]
    noncomm list [--json]

Exit codes for `run`: 0 success, 2 unknown scenario, 3 config/schema error,
4 numerical invariant violation during the run.  `check` exits 1 if any
invariant fails.  NONCOMM_SEED is used when --seed is absent.

Result files are deterministic: two runs with the same scenario, parameters,
and seed produce byte-identical files.  Timestamps live only in the manifest
written next to each result file.
"""

from __future__ import annotations

import argparse
import ast
import datetime
import json
import math
import operator
import os
import sys

from . import __version__
from .algebra import ContextMismatchError
from .checks import SUITES, run_checks
from .scenarios import (
    SCENARIOS,
    ParameterError,
    ScenarioResult,
    UnknownScenarioError,
    validate_params,
)
from .states import ZeroProbabilityError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_UNKNOWN_SCENARIO = 2
EXIT_CONFIG_ERROR = 3
EXIT_NUMERICAL_ERROR = 4

_DEFAULT_TRIALS = 1000

_NAMES = {"pi": math.pi, "e": math.e, "tau": math.tau, "true": True, "false": False}
_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}
_UNARYOPS = {ast.USub: operator.neg, ast.UAdd: operator.pos}


def _eval_arith(node):
    if isinstance(node, ast.Expression):
        return _eval_arith(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        return node.value
    if isinstance(node, ast.Name) and node.id.lower() in _NAMES:
        return _NAMES[node.id.lower()]
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval_arith(node.left), _eval_arith(node.right))
    if isinstance(node, ast.UnaryOp) and type(node.op) in _UNARYOPS:
        return _UNARYOPS[type(node.op)](_eval_arith(node.operand))
    raise ValueError("not a constant arithmetic expression")


def parse_value(text: str):
    """Parse a --set value: constant arithmetic ("0.5", "pi", "pi/4"), then
    JSON ("[1,-1]", "\"singlet\"", "true"), then a bare string."""
    text = text.strip()
    try:
        return _eval_arith(ast.parse(text, mode="eval"))
    except (ValueError, SyntaxError):
        pass
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def split_assignments(text: str) -> list:
    """Split "k1=v1,k2=[1,2]" on top-level commas only."""
    parts, cur, depth = [], [], 0
    for ch in text:
        if ch in "[{(":
            depth += 1
        elif ch in "]})":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def parse_set_options(chunks) -> dict:
    out = {}
    for chunk in chunks or ():
        for assignment in split_assignments(chunk):
            if "=" not in assignment:
                raise ParameterError(f"--set entries look like key=value, got {assignment!r}")
            key, _, raw = assignment.partition("=")
            out[key.strip()] = parse_value(raw)
    return out


def _format_number(x) -> str:
    # 17 significant digits: lossless round trip for doubles
    return format(float(x), ".17g")


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _format_number(value)
    if isinstance(value, (list, tuple)):
        return json.dumps(value)
    return str(value)


def result_csv(result: ScenarioResult) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["scenario", "statistic", "value"])
    for key, value in result.summary.items():
        writer.writerow([result.scenario, key, _csv_cell(value)])
    for key, value in result.series.items():
        writer.writerow([result.scenario, key, _csv_cell(value)])
    return buf.getvalue()


def trials_csv(result: ScenarioResult) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["trial", "record"])
    for rec in result.trial_records or ():
        writer.writerow([rec.get("trial"), json.dumps(rec)])
    return buf.getvalue()


def result_json(result: ScenarioResult) -> str:
    return json.dumps(result.to_dict(), indent=2) + "\n"


def _atomic_write(path: str, text: str):
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _utc_now() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")


def _check_seed(seed) -> int:
    try:
        seed = int(seed)
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"seed must be an integer, got {seed!r}") from exc
    if not 0 <= seed < 2**64:
        raise ParameterError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed


def _resolve_seed(arg_seed):
    if arg_seed is not None:
        return _check_seed(arg_seed)
    env = os.environ.get("NONCOMM_SEED")
    if env is not None:
        try:
            return _check_seed(int(env))
        except ValueError as exc:
            raise ParameterError(f"NONCOMM_SEED must be an integer, got {env!r}") from exc
    return 0


def _load_config(path):
    if path is None:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ParameterError(f"cannot read config {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParameterError(f"config {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ParameterError("config must be a JSON object")
    unknown = set(cfg) - {"seed", "trials", "parameters"}
    if unknown:
        raise ParameterError(f"unknown config keys {sorted(unknown)}; "
                             "expected seed, trials, parameters")
    params = cfg.get("parameters", {})
    if not isinstance(params, dict):
        raise ParameterError("config 'parameters' must be an object")
    return cfg


def _cmd_run(args) -> int:
    name = args.scenario
    if name not in SCENARIOS:
        print(f"error: unknown scenario {name!r}; see `noncomm list`", file=sys.stderr)
        return EXIT_UNKNOWN_SCENARIO
    started = _utc_now()
    try:
        config = _load_config(args.config)
        overrides = dict(config.get("parameters", {}))
        overrides.update(parse_set_options(args.set))
        params = validate_params(name, overrides)
        seed = _resolve_seed(args.seed if args.seed is not None else config.get("seed"))
        trials = args.trials if args.trials is not None else config.get("trials", _DEFAULT_TRIALS)
        try:
            trials = int(trials)
        except (TypeError, ValueError) as exc:
            raise ParameterError(f"trials must be an integer, got {trials!r}") from exc
        if trials < 1:
            raise ParameterError("trials must be positive")
    except UnknownScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_SCENARIO
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR

    try:
        result = SCENARIOS[name].fn(params, trials, seed, args.snapshots)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except (ZeroProbabilityError, ContextMismatchError, ValueError) as exc:
        print(f"error: numerical invariant violation during run: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL_ERROR

    if args.format == "json":
        payload = result_json(result)
    else:
        payload = result_csv(result)

    if args.out is None:
        sys.stdout.write(payload)
        return EXIT_OK

    outputs = [args.out]
    _atomic_write(args.out, payload)
    if args.snapshots and args.format == "csv":
        trials_path = args.out + ".trials.csv"
        _atomic_write(trials_path, trials_csv(result))
        outputs.append(trials_path)
    manifest = {
        "tool": "noncomm",
        "version": __version__,
        "scenario": name,
        "parameters": result.parameters,
        "seed": seed,
        "trials": trials,
        "started": started,
        "finished": _utc_now(),
        "outputs": outputs,
    }
    _atomic_write(args.out + ".manifest.json", json.dumps(manifest, indent=2) + "\n")
    return EXIT_OK


def _cmd_check(args) -> int:
    try:
        results = run_checks(args.suite, args.tolerance_profile)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    for res in results:
        print(res.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} invariants passed "
          f"(profile={args.tolerance_profile})")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _cmd_list(args) -> int:
    if args.json:
        doc = {name: scen.schema() for name, scen in SCENARIOS.items()}
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    for name, scen in SCENARIOS.items():
        print(f"{name}: {scen.description}")
        for p in scen.params:
            choice = f" (one of {', '.join(map(str, p.choices))})" if p.choices else ""
            print(f"    {p.name} [{p.kind}, default {p.schema()['default']!r}]"
                  f" - {p.description}{choice}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noncomm",
        description="Commutative and noncommutative conditional-probability engine: "
                    "measurement scenarios and invariant checks.",
    )
    parser.add_argument("--version", action="version", version=f"noncomm {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run a scenario and emit its result")
    run_p.add_argument("scenario", help="scenario name (see `noncomm list`)")
    run_p.add_argument("--config", help="JSON config file with seed/trials/parameters")
    run_p.add_argument("--set", action="append", metavar="k=v,...",
                       help="parameter overrides; repeatable, comma-separable")
    run_p.add_argument("--seed", type=int, help="64-bit seed (default: $NONCOMM_SEED or 0)")
    run_p.add_argument("--trials", type=int, help=f"trial count (default {_DEFAULT_TRIALS})")
    run_p.add_argument("--out", help="output path (default: stdout, no manifest)")
    run_p.add_argument("--format", choices=("csv", "json"), default="csv")
    run_p.add_argument("--snapshots", action="store_true",
                       help="keep per-trial outcome records in the output")
    run_p.set_defaults(fn=_cmd_run)

    check_p = sub.add_parser("check", help="run the invariant/property suite")
    check_p.add_argument("--suite", default="all", choices=("all", *SUITES))
    check_p.add_argument("--tolerance-profile", default="default",
                         choices=("default", "strict"))
    check_p.set_defaults(fn=_cmd_check)

    list_p = sub.add_parser("list", help="list scenarios and their parameter schemas")
    list_p.add_argument("--json", action="store_true", help="machine-readable schema dump")
    list_p.set_defaults(fn=_cmd_list)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())

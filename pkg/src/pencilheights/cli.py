"""Command-line front door.

Subcommands: coeff, griffiths, git-height, semistable, verify
{identities | monotonicity | contact}, and sweep.  Inputs are JSON documents
(path or "-" for stdin); all rationals are exact "p/q" strings.  Exit codes:
0 on success, 1 on domain errors (a structured error object goes to stderr),
2 on usage or malformed-input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Any, Sequence

try:
    import tomllib
except ImportError:  # pragma: no cover - 3.10 fallback
    import tomli as tomllib

from . import coeffs, jsonio
from .algebra import format_rat
from .git_binary import fiber_semistability_profile, git_height, verify_contact_identity
from .pencils import full_report
from .sampling import random_binary_pencil, random_budget_consistent_descriptor
from .semistability import binary_semistable, criteria_engine, torus_semistable

SEED_ENV_VAR = "PENCILHEIGHTS_SEED"
DEFAULT_SEED = 20240801


def _emit(obj: Any, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        for key in sorted(obj):
            print(f"{key:<24}{_plain(obj[key])}")


def _plain(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def _domain_error(message: str) -> int:
    sys.stderr.write(json.dumps({"error": {"kind": "domain", "message": message}}) + "\n")
    return 1


def _usage_error(message: str) -> int:
    sys.stderr.write(json.dumps({"error": {"kind": "input", "message": message}}) + "\n")
    return 2


def _load_input(source: str) -> Any:
    """Input as a file path, "-" for stdin, or an inline JSON object."""
    if source == "-":
        return json.load(sys.stdin)
    if source.lstrip().startswith("{"):
        return json.loads(source)
    if source.endswith(".toml"):
        with open(source, "rb") as fh:
            return tomllib.load(fh)
    with open(source, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _parse_range(text: str, flag: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        value = int(text)
        return value, value
    except ValueError:
        raise argparse.ArgumentTypeError(f"{flag} expects N or LO..HI, got {text!r}")


def _seed(args: argparse.Namespace) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_SEED


def _cmd_coeff(args: argparse.Namespace) -> int:
    if args.fstab is not None:
        d, n = args.fstab
        print(format_rat(coeffs.f_stab(d, n)))
    elif args.w is not None:
        n, delta = args.w
        print(format_rat(coeffs.w(n, delta)))
    elif args.g is not None:
        n, delta = args.g
        print(format_rat(coeffs.g(n, delta)))
    elif args.identity is not None:
        d, n = args.identity
        print("true" if coeffs.check_f_equals_fstab(d, n) else "false")
    else:
        try:
            n = int(args.classify[0])
            mults = [int(x) for x in args.classify[1].split(",") if x]
        except ValueError:
            return _usage_error("--classify expects N and a comma-separated multiplicity list")
        print("true" if coeffs.classify_equality_case(n, mults) else "false")
    return 0


def _cmd_griffiths(args: argparse.Namespace) -> int:
    descriptor = jsonio.descriptor_from_json(_load_input(args.input))
    report = full_report(descriptor)
    _emit(jsonio.height_report_to_json(report), args.format)
    return 0


def _cmd_git_height(args: argparse.Namespace) -> int:
    pencil = jsonio.binary_pencil_from_json(_load_input(args.input))
    report = git_height(pencil)
    payload = jsonio.git_report_to_json(report)
    if args.profile:
        payload["fiberProfile"] = jsonio.fiber_profile_to_json(
            fiber_semistability_profile(pencil)
        )
    _emit(payload, args.format)
    return 0


def _cmd_semistable(args: argparse.Namespace) -> int:
    obj = _load_input(args.input)
    if not isinstance(obj, dict):
        raise jsonio.SchemaError("expected a JSON object")
    if "terms" in obj:
        form = jsonio.multiform_from_json(obj)
        if form.nvars == 2 and not args.torus:
            verdict = binary_semistable(form)
        else:
            verdict = torus_semistable(form)
    elif "delta" in obj:
        verdict = criteria_engine(jsonio.profile_from_json(obj))
    else:
        raise jsonio.SchemaError(
            "expected a form (key 'terms') or a singularity profile (key 'delta')"
        )
    _emit(jsonio.verdict_to_json(verdict), args.format)
    return 0


def _say(args: argparse.Namespace, line: str) -> None:
    if not args.quiet:
        print(line)


def _cmd_verify_identities(args: argparse.Namespace) -> int:
    n_lo, n_hi = args.n_range
    d_lo, d_hi = args.d_range
    failures: list[str] = []
    if coeffs.f_stab(3, 3) != 0:
        failures.append("f_stab(3,3) != 0")
    for d in range(2, d_hi + 1):
        if coeffs.f_stab(d, 1) != 0:
            failures.append(f"f_stab({d},1) != 0")
    for n in range(n_lo, n_hi + 1):
        for k in range(1, d_hi + 1):
            twelve_f = 12 * coeffs.f_stab(k, n)
            twelve_w = 12 * coeffs.w(n, k)
            if twelve_f.denominator != 1 or twelve_w.denominator != 1:
                failures.append(f"integrality fails at n={n}, value={k}")
    if not failures:
        _say(args, f"PASS pins: f_stab(3,3) = 0 and f_stab(d,1) = 0 for d in [2, {d_hi}]")
        _say(
            args,
            f"PASS integrality: 12*f_stab and 12*w integral on n in [{n_lo}, {n_hi}], "
            f"d, delta in [1, {d_hi}]",
        )
    bad = [
        (d, n)
        for n in range(n_lo, n_hi + 1)
        for d in range(max(2, d_lo), d_hi + 1)
        if not coeffs.check_f_equals_fstab(d, n)
    ]
    if bad:
        failures.append(f"closed-form identity fails at {bad[:5]}")
    else:
        _say(
            args,
            f"PASS identity: -(n+1) w(n,d) + (n+1)(d-1)^n (2n+1+3(-1)^n)/48 = f_stab(d,n) "
            f"on n in [{n_lo}, {n_hi}], d in [{max(2, d_lo)}, {d_hi}]",
        )
    for f in failures:
        print(f"FAIL {f}")
    return 1 if failures else 0


def _cmd_verify_monotonicity(args: argparse.Namespace) -> int:
    n_lo, n_hi = args.n_range
    delta_lo, delta_hi = args.delta_range
    delta_lo = max(2, delta_lo)
    failures: list[str] = []
    for n in range(n_lo, n_hi + 1):
        values = [coeffs.g(n, delta) for delta in range(delta_lo, delta_hi + 1)]
        for a, b in zip(values, values[1:]):
            if b > a:
                failures.append(f"g({n}, .) increases")
                break
        strict = all(b < a for a, b in zip(values, values[1:]))
        if n == 2 or n >= 4:
            if not strict:
                failures.append(f"g({n}, .) not strictly decreasing")
        if n == 3 and delta_lo == 2 and delta_hi >= 3:
            if not (values[0] == values[1] == 1):
                failures.append("g(3,2) = g(3,3) = 1 fails")
            tail = values[1:]
            if not all(b < a for a, b in zip(tail, tail[1:])):
                failures.append("g(3, .) not strictly decreasing past the plateau")
    if failures:
        for f in failures:
            print(f"FAIL {f}")
        return 1
    _say(
        args,
        f"PASS monotonicity: g(n, .) non-increasing on delta in [{delta_lo}, {delta_hi}] "
        f"for n in [{n_lo}, {n_hi}]; strictly decreasing for n = 2 and n >= 4",
    )
    _say(args, "note: plateau g(3,2) = g(3,3) = 1, strictly decreasing from delta = 3 on")
    return 0


def _cmd_verify_contact(args: argparse.Namespace) -> int:
    rng = random.Random(_seed(args))
    failures: list[str] = []
    for label, d, count, m_max in (
        ("quartic", 4, args.quartics, args.m_max),
        ("cubic", 3, args.cubics, min(args.m_max, 3)),
    ):
        for _ in range(count):
            pencil = random_binary_pencil(rng, d, m_max)
            if not verify_contact_identity(pencil):
                failures.append(f"contact identity fails on a random {label} pencil")
                continue
            report = git_height(pencil)
            if (report.ht_git == report.ht_int) != report.all_fibers_semistable:
                failures.append(f"equality case mismatch on a random {label} pencil")
            if d == 3:
                if report.ht_git != 0 or report.contact_length != 4 * report.ht_int:
                    failures.append("cubic pencil does not have ht_git = 0, contact = 4m")
    for _ in range(args.descriptors):
        descriptor = random_budget_consistent_descriptor(rng)
        # full_report asserts the bound and the equality classification
        full_report(descriptor)
    if failures:
        for f in failures:
            print(f"FAIL {f}")
        return 1
    _say(
        args,
        f"PASS contact identity: ht_int = ht_git + contact/delta on {args.quartics} "
        f"random quartic and {args.cubics} random cubic pencils (m <= {args.m_max}), "
        "with equality exactly on all-semistable-fiber pencils",
    )
    _say(
        args,
        f"PASS closed-form bound: asserted on {args.descriptors} random "
        "budget-consistent descriptors",
    )
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    rows = []
    for d in range(1, args.d_max + 1):
        for n in range(1, args.n_max + 1):
            rows.append(
                (d, n, format_rat(coeffs.f_stab(d, n)), format_rat(coeffs.w(n, d)))
            )
    if args.format == "csv":
        print("d,n,f_stab,w")
        for row in rows:
            print(",".join(map(str, row)))
    else:
        print(f"{'d':>4} {'n':>4} {'f_stab':>16} {'w':>16}")
        for d, n, fs, wv in rows:
            print(f"{d:>4} {n:>4} {fs:>16} {wv:>16}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pencilheights",
        description=(
            "Exact heights of pencils of projective hypersurfaces: closed-form "
            "Griffiths heights, GIT semistability tests, and GIT heights of "
            "binary-form pencils."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_coeff = sub.add_parser("coeff", help="evaluate a closed-form coefficient")
    group = p_coeff.add_mutually_exclusive_group(required=True)
    group.add_argument("--fstab", nargs=2, type=int, metavar=("D", "N"))
    group.add_argument("--w", nargs=2, type=int, metavar=("N", "DELTA"))
    group.add_argument("--g", nargs=2, type=int, metavar=("N", "DELTA"))
    group.add_argument("--identity", nargs=2, type=int, metavar=("D", "N"))
    group.add_argument("--classify", nargs=2, metavar=("N", "MULTS"))
    p_coeff.set_defaults(func=_cmd_coeff)

    p_grif = sub.add_parser("griffiths", help="height report for a pencil descriptor")
    p_grif.add_argument("input", help="JSON/TOML path, inline JSON, or - for stdin")
    p_grif.add_argument("--format", choices=("json", "table"), default="json")
    p_grif.set_defaults(func=_cmd_griffiths)

    p_git = sub.add_parser("git-height", help="GIT height report for a binary pencil")
    p_git.add_argument("input", help="JSON/TOML path, inline JSON, or - for stdin")
    p_git.add_argument("--profile", action="store_true", help="append the fiber list")
    p_git.add_argument("--format", choices=("json", "table"), default="json")
    p_git.set_defaults(func=_cmd_git_height)

    p_ss = sub.add_parser("semistable", help="semistability of a form or profile")
    p_ss.add_argument("input", help="JSON/TOML path, inline JSON, or - for stdin")
    p_ss.add_argument(
        "--torus",
        action="store_true",
        help="force the coordinate-torus test even on binary forms",
    )
    p_ss.add_argument("--format", choices=("json", "table"), default="json")
    p_ss.set_defaults(func=_cmd_semistable)

    p_verify = sub.add_parser("verify", help="machine-check the exact identities")
    verify_sub = p_verify.add_subparsers(dest="suite", required=True)

    v_id = verify_sub.add_parser("identities", help="coefficient pins and identity grid")
    v_id.add_argument("--N", dest="n_range", type=lambda s: _parse_range(s, "--N"),
                      default=(1, 12), metavar="LO..HI")
    v_id.add_argument("--d", dest="d_range", type=lambda s: _parse_range(s, "--d"),
                      default=(1, 50), metavar="LO..HI")
    v_id.add_argument("--quiet", action="store_true")
    v_id.set_defaults(func=_cmd_verify_identities)

    v_mono = verify_sub.add_parser("monotonicity", help="normalized weight monotonicity")
    v_mono.add_argument("--N", dest="n_range", type=lambda s: _parse_range(s, "--N"),
                        default=(1, 12), metavar="LO..HI")
    v_mono.add_argument("--delta", dest="delta_range",
                        type=lambda s: _parse_range(s, "--delta"),
                        default=(2, 200), metavar="LO..HI")
    v_mono.add_argument("--quiet", action="store_true")
    v_mono.set_defaults(func=_cmd_verify_monotonicity)

    v_contact = verify_sub.add_parser("contact", help="randomized contact identity")
    v_contact.add_argument("--quartics", type=int, default=100)
    v_contact.add_argument("--cubics", type=int, default=100)
    v_contact.add_argument("--descriptors", type=int, default=100)
    v_contact.add_argument("--m-max", type=int, default=4)
    v_contact.add_argument("--seed", type=int, default=None,
                           help=f"override the default seed (env {SEED_ENV_VAR})")
    v_contact.add_argument("--quiet", action="store_true")
    v_contact.set_defaults(func=_cmd_verify_contact)

    p_sweep = sub.add_parser("sweep", help="table of f_stab and w over (d, n)")
    p_sweep.add_argument("--d-max", type=int, default=12)
    p_sweep.add_argument("--n-max", type=int, default=8)
    p_sweep.add_argument("--format", choices=("table", "csv"), default="table")
    p_sweep.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        return _usage_error(f"malformed JSON: {exc}")
    except tomllib.TOMLDecodeError as exc:
        return _usage_error(f"malformed TOML: {exc}")
    except jsonio.SchemaError as exc:
        return _usage_error(str(exc))
    except OSError as exc:
        return _usage_error(str(exc))
    except ValueError as exc:
        return _domain_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())

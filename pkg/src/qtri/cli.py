"""Command line front end: ``qtri matrix`` and ``qtri verify``.

Exit codes: 0 success, 1 usage error, 2 excluded parameter (a vanishing
denominator), 3 an identity failed.  Errors are JSON objects on stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import identities as ids
from .errors import QTriError, VanishingDenominatorFactor
from .matrices import build_example42, build_L, build_L0, build_M, build_M0, invert_unitriangular
from .scalar import DEFAULT_REL_TOL, Mode, Scalar

EXIT_USAGE = 1
EXIT_EXCLUDED = 2
EXIT_FAILED = 3

FAMILIES = ("L", "M", "L0", "M0", "ex42", "inverse-oracle")
IDENTITIES = ("inverse", "lemma32", "dp", "sears", "genfunc", "product-rule", "ex43",
              "gegenbauer", "hermite", "racah-ortho", "ex42", "dp-racah")
MAX_DENOM = 97

CSV_HELP = """\
CSV output (--format csv) has one row per stored coefficient with columns
  m, n   : row and column of the matrix entry (lo <= n <= m <= hi)
  k      : exponent of e^{ik theta}, from -(m-n) to m-n
  coeff  : the coefficient, "p/q" in exact mode or a float literal
For --family ex42 a leading column "matrix" holds "L" or "inverse".
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage errors as JSON on stderr."""

    def error(self, message):
        raise UsageError(message)


def _rational(text: str) -> str:
    try:
        Scalar.parse(text)
    except (ValueError, ZeroDivisionError, QTriError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc
    return text


def _emit_error(payload: dict, code: int) -> int:
    print(json.dumps(payload), file=sys.stderr)
    return code


# ---------------------------------------------------------------------------
# matrix


def _matrix_objects(args, mode: Mode):
    q = Scalar.parse(args.q, mode)
    beta = Scalar.parse(args.beta, mode)
    fam = args.family
    if fam == "L":
        return {"L": build_L(beta, q, args.lo, args.hi)}
    if fam == "M":
        return {"M": build_M(beta, q, args.lo, args.hi)}
    if fam == "L0":
        return {"L0": build_L0(q, args.lo, args.hi)}
    if fam == "M0":
        return {"M0": build_M0(q, args.lo, args.hi)}
    if fam == "inverse-oracle":
        return {"inverse-oracle": invert_unitriangular(build_L(beta, q, args.lo, args.hi))}
    if args.lo != 0:
        raise UsageError("--family ex42 lives on the window [0, hi]; drop --lo")
    L, Linv = build_example42(q, args.hi)
    return {"L": L, "inverse": Linv}


def cmd_matrix(args, out=None) -> int:
    out = out or sys.stdout
    mats = _matrix_objects(args, Mode.parse(args.mode))
    pair = args.family == "ex42"
    if args.format == "json":
        if pair:
            payload = {name: m.to_json() for name, m in mats.items()}
        else:
            payload = next(iter(mats.values())).to_json()
        payload = {"family": args.family, "mode": args.mode, **(
            {"matrices": payload} if pair else payload)}
        out.write(json.dumps(payload) + "\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow((["matrix"] if pair else []) + ["m", "n", "k", "coeff"])
        for name, m in mats.items():
            for row in m.csv_rows():
                writer.writerow(([name] if pair else []) + list(row))
    return 0


# ---------------------------------------------------------------------------
# random parameters


def _draw(rng: random.Random) -> Fraction:
    b = rng.randint(2, MAX_DENOM)
    return Fraction(rng.randint(1, b - 1), b)


def _is_q_power(x: Fraction, q: Fraction, kmax: int) -> bool:
    """x = q^k for some integer |k| <= kmax."""
    return any(x == q ** k for k in range(-kmax, kmax + 1))


def _draw_until(rng, count, ok, limit=10_000):
    for _ in range(limit):
        vals = [_draw(rng) for _ in range(count)]
        if ok(*vals):
            return vals
    raise RuntimeError("rejection sampling did not find admissible parameters")


def _sears_ok(n, a, b, c, d, e, q) -> bool:
    f = a * b * c / (d * e * q ** (n - 1))
    qn1 = q ** (1 - n)
    # every lower parameter and every prefactor denominator must keep (x;q)_n away from zero
    for x in (d, e, f, a * qn1 / e, a * qn1 / f, e * f / (a * b), e * f / (a * c), qn1 / a,
              e * f / (a * b * c)):
        if any(x * q ** j == 1 for j in range(n)):
            return False
    return all(v != 0 for v in (a, b, c, d, e))


def _random_params(identity: str, args, rng: random.Random) -> dict:
    """Rational parameters for one randomized check, as Fractions / ints."""
    if identity in ("inverse", "lemma32", "dp-racah"):
        K = 4 * (abs(args.lo) + abs(args.hi) + args.m + args.n) + 4
        q, beta = _draw_until(rng, 2, lambda q, b: not _is_q_power(b * b, q, K)
                              and not _is_q_power(b, q, K))
        return {"q": q, "beta": beta}
    if identity == "dp":
        n = args.n if args.n else 4
        K = 2 * n + 2
        q = _draw(rng)
        out = {"q": q, "alphas": [], "betas": [], "cs": []}
        for _ in range(n + 1):
            a, b = _draw_until(rng, 2, lambda a, b: not any(
                _is_q_power(x, q, K) for x in (a, b, a * b)))
            out["alphas"].append(a)
            out["betas"].append(b)
            out["cs"].append(_draw(rng) * rng.choice((-1, 1)))
        return out
    if identity == "sears":
        n = args.n if args.n else 3
        a, b, c, d, e, q = _draw_until(rng, 6, lambda *v: _sears_ok(n, *v))
        return dict(a=a, b=b, c=c, d=d, e=e, q=q)
    if identity == "genfunc":
        q, beta = _draw_until(rng, 2, lambda q, b: True)
        return {"q": q, "beta": beta}
    if identity == "product-rule":
        q, alpha, beta = _draw_until(rng, 3, lambda *v: True)
        return {"q": q, "alpha": alpha, "beta": beta}
    if identity == "ex43":
        K = args.n_max + 2
        q, alpha = _draw_until(rng, 2, lambda q, a: not _is_q_power(a, q, K))
        return {"q": q, "alpha": alpha}
    if identity == "gegenbauer":
        while True:
            alpha = _draw(rng) * rng.choice((-1, 1)) + rng.randint(-2, 2)
            if (2 * alpha).denominator != 1:
                return {"alpha": alpha}
    if identity == "racah-ortho":
        q, gamma, delta = _draw_until(rng, 3, lambda q, g, d: g * d * q != 1)
        return {"q": q, "gamma": gamma, "delta": delta}
    if identity in ("hermite", "ex42"):
        return {"q": _draw(rng)}
    raise UsageError(f"unknown identity {identity}")


# ---------------------------------------------------------------------------
# checks


def _defaults(identity: str, args) -> dict:
    pick = lambda value, fallback: value if value is not None else fallback  # noqa: E731
    table = {
        "inverse": {"q": pick(args.q, "1/3"), "beta": pick(args.beta, "2/5")},
        "lemma32": {"q": pick(args.q, "1/3"), "beta": pick(args.beta, "2/5")},
        "dp-racah": {"q": pick(args.q, "1/3"), "beta": pick(args.beta, "2/5")},
        "sears": {"a": pick(args.a, "2/3"), "b": pick(args.b, "3/7"), "c": pick(args.c, "5/11"),
                  "d": pick(args.d, "4/13"), "e": pick(args.e, "6/17"), "q": pick(args.q, "1/3")},
        "genfunc": {"q": pick(args.q, "1/3"), "beta": pick(args.beta, "2/5")},
        "product-rule": {"q": pick(args.q, "1/3"), "alpha": pick(args.alpha, "3/7"),
                         "beta": pick(args.beta, "2/5")},
        "ex43": {"q": pick(args.q, "1/3"), "alpha": pick(args.alpha, "2/5")},
        "gegenbauer": {"alpha": pick(args.alpha, "2/5")},
        "racah-ortho": {"q": pick(args.q, "1/3"), "gamma": pick(args.gamma, "2/7"),
                        "delta": pick(args.delta, "3/11")},
        "hermite": {"q": pick(args.q, "1/3")},
        "ex42": {"q": pick(args.q, "1/2")},
    }
    if identity == "dp":
        # dp takes whole parameter lists; seed them from --seed even without --trials
        return _random_params("dp", args, random.Random(f"{args.seed}:dp:0"))
    return table[identity]


def _to_scalars(value, mode: Mode):
    if isinstance(value, list):
        return [_to_scalars(v, mode) for v in value]
    return Scalar.parse(str(value), mode)


def _run_check(identity: str, raw: dict, ints: dict, mode_name: str, tol: float) -> list[dict]:
    """Evaluate one check; returns serialized reports (timing kept, stripped by the caller)."""
    mode = Mode.parse(mode_name)
    p = {k: _to_scalars(v, mode) for k, v in raw.items()}
    i = ints
    if identity == "inverse":
        reps = [ids.verify_inverse(p["beta"], p["q"], i["lo"], i["hi"], tol)]
    elif identity == "lemma32":
        reps = [ids.verify_lemma32(i["m"], i["n"], p["beta"], p["q"], tol)]
    elif identity == "dp-racah":
        reps = [ids.verify_dp_racah_rewrite(i["m"], i["n"], p["beta"], p["q"], tol)]
    elif identity == "dp":
        reps = [ids.verify_dp(len(p["alphas"]) - 1, p["alphas"], p["betas"], p["cs"], p["q"], tol)]
    elif identity == "sears":
        reps = [ids.verify_sears(i["n_sears"], p["a"], p["b"], p["c"], p["d"], p["e"], p["q"], tol)]
    elif identity == "genfunc":
        reps = [ids.verify_genfunc_ultra(p["beta"], p["q"], i["T"], tol),
                ids.verify_genfunc_hermite(p["q"], i["T"], tol),
                ids.verify_genfunc_hermite_qinv(p["q"], i["T"], tol)]
    elif identity == "product-rule":
        reps = [ids.verify_genfunc_product_rule(p["alpha"], p["beta"], p["q"], i["n_max_pr"], tol)]
    elif identity == "ex43":
        reps = [ids.verify_ex43_sums(p["alpha"], p["q"], i["n_max"], i["n_max_p1"], tol)]
    elif identity == "gegenbauer":
        reps = [ids.verify_gegenbauer_key(i["m_geg"], i["n"], p["alpha"], tol)]
    elif identity == "hermite":
        reps = [ids.verify_hermite_convolution(p["q"], i["n_max"], tol),
                ids.verify_hermite_inverse(p["q"], i["lo"], i["hi"], tol)]
    elif identity == "racah-ortho":
        reps = [ids.verify_racah_ortho(p["gamma"], p["delta"], i["N"], p["q"], tol, m=i["m_racah"])]
    elif identity == "ex42":
        reps = [ids.verify_example42(p["q"], i["hi"], tol)]
    else:
        raise UsageError(f"unknown identity {identity}")
    return [r.to_json() for r in reps]


def _int_params(args) -> dict:
    return {
        "lo": args.lo, "hi": args.hi, "m": args.m, "n": args.n, "N": args.N, "T": args.T,
        "n_max": args.n_max, "n_max_p1": args.n_max_p1 if args.n_max_p1 is not None else 6,
        "n_max_pr": min(args.n_max, 6) if args.n_max_pr is None else args.n_max_pr,
        "n_sears": args.n if args.n else 3,
        "m_geg": args.m if args.m <= args.n + 5 else args.n + 5,
        "m_racah": args.m_racah,
    }


def _plan(args) -> list[tuple]:
    names = IDENTITIES if args.identity == "all" else (args.identity,)
    ints = _int_params(args)
    tasks = []
    for name in names:
        if args.trials:
            for t in range(args.trials):
                rng = random.Random(f"{args.seed}:{name}:{t}")
                tasks.append((name, _random_params(name, args, rng), ints))
        else:
            tasks.append((name, _defaults(name, args), ints))
    return tasks


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    if args.m < args.n:
        raise UsageError("--m must be >= --n")
    tasks = _plan(args)
    jobs = [(name, {k: v if isinstance(v, list) else str(v) for k, v in raw.items()}, ints,
             args.mode, args.tol) for name, raw, ints in tasks]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = pool.map(_run_check_star, jobs)
            return _stream(results, args, out)
    return _stream(map(_run_check_star, jobs), args, out)


def _run_check_star(job):
    return _run_check(*job)


def _stream(results, args, out) -> int:
    first_failure = None
    for reports in results:
        for rep in reports:
            if not args.timing:
                rep["elapsed_ms"] = 0
            out.write(json.dumps(rep) + "\n")
            if not rep["pass"] and first_failure is None:
                first_failure = rep
    out.flush()
    if first_failure is not None:
        return _emit_error({"error": "IdentityFailed", "counterexample": first_failure},
                           EXIT_FAILED)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    default_mode = os.environ.get("QTRI_MODE", "exact")
    parser = _Parser(prog="qtri", description="Triangular matrices of q-ultraspherical "
                     "polynomials and exact verification of the identities around them.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--mode", choices=("exact", "float"), default=default_mode,
                        help="scalar arithmetic (default: $QTRI_MODE or exact)")
    common.add_argument("--q", type=_rational, help="base q as p/q")
    common.add_argument("--beta", type=_rational, help="beta as p/q")
    common.add_argument("--lo", type=int, default=0, help="first window index")
    common.add_argument("--hi", type=int, default=4, help="last window index")

    mat = sub.add_parser("matrix", parents=[common], help="build and export a matrix",
                         epilog=CSV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    mat.add_argument("--family", choices=FAMILIES, required=True)
    mat.add_argument("--format", choices=("json", "csv"), default="json")
    mat.set_defaults(func=cmd_matrix)

    ver = sub.add_parser("verify", parents=[common], help="verify identities, emit NDJSON reports")
    ver.add_argument("--identity", choices=IDENTITIES + ("all",), required=True)
    ver.add_argument("--alpha", type=_rational)
    ver.add_argument("--gamma", type=_rational)
    ver.add_argument("--delta", type=_rational)
    for name in "abcde":
        ver.add_argument(f"--{name}", type=_rational, help=f"Sears parameter {name}")
    ver.add_argument("--m", type=int, default=4, help="row index for lemma32/gegenbauer/dp-racah")
    ver.add_argument("--n", type=int, default=0,
                     help="column index; also the degree for dp and sears when > 0")
    ver.add_argument("--N", type=int, default=3, help="q-Racah degree bound")
    ver.add_argument("--m-racah", dest="m_racah", type=int, default=None,
                     help="single q-Racah orthogonality index (default: all 0..N)")
    ver.add_argument("--T", type=int, default=10, help="generating-function truncation order")
    ver.add_argument("--n-max", dest="n_max", type=int, default=8)
    ver.add_argument("--n-max-p1", dest="n_max_p1", type=int, default=None)
    ver.add_argument("--n-max-pr", dest="n_max_pr", type=int, default=None,
                     help="degree bound for the product rule (default min(n-max, 6))")
    ver.add_argument("--trials", type=int, default=0, help="random draws per identity")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--tol", type=float, default=DEFAULT_REL_TOL, help="Float-mode rel_tol")
    ver.add_argument("--jobs", type=int, default=1, help="worker processes")
    ver.add_argument("--timing", action="store_true",
                     help="report elapsed_ms (output is then not byte-reproducible)")
    ver.set_defaults(func=cmd_verify)
    return parser


def _racah_m_alias(argv: list[str]) -> list[str]:
    """``--m`` right after ``--identity racah-ortho`` means the orthogonality index."""
    if "racah-ortho" in argv and "--m" in argv and "--m-racah" not in argv:
        argv = list(argv)
        argv[argv.index("--m")] = "--m-racah"
    return argv


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_racah_m_alias(argv))
        if getattr(args, "q", None) is None and args.command == "matrix":
            args.q = "1/2"
        if getattr(args, "beta", None) is None and args.command == "matrix":
            args.beta = "2/5"
        if args.command == "verify" and args.trials < 0:
            raise UsageError("--trials must be >= 0")
        return args.func(args)
    except UsageError as exc:
        return _emit_error({"error": "UsageError", "message": str(exc)}, EXIT_USAGE)
    except VanishingDenominatorFactor as exc:
        return _emit_error(exc.to_json(), EXIT_EXCLUDED)
    except QTriError as exc:
        return _emit_error(exc.to_json(), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())

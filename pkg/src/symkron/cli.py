"""Command-line interface.

Scalar queries print a bare integer; everything else prints JSON. Exit codes:
0 success, 1 computational failure (or a failed check), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .config import config
from .partitions import format_partition, parse_partition

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _sign(text: str) -> int:
    table = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}
    if text not in table:
        raise argparse.ArgumentTypeError(f"sign must be + or -, got {text!r}")
    return table[text]


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_char(a) -> int:
    from .characters import character

    print(character(a.lam, a.mu))
    return EXIT_OK


def cmd_kron(a) -> int:
    from .coefficients import kronecker

    print(kronecker(a.lam, a.mu, a.nu))
    return EXIT_OK


def cmd_sk(a) -> int:
    from .coefficients import sym_kron

    print(sym_kron(a.lam, a.mu))
    return EXIT_OK


def cmd_ak(a) -> int:
    from .coefficients import alt_kron

    print(alt_kron(a.lam, a.mu))
    return EXIT_OK


def cmd_sm(a) -> int:
    from .coefficients import sm

    print(sm(a.lam, a.n))
    return EXIT_OK


def cmd_am(a) -> int:
    from .coefficients import am

    print(am(a.lam, a.n))
    return EXIT_OK


def cmd_kostka(a) -> int:
    from .coefficients import kostka

    print(kostka(a.lam, a.mu))
    return EXIT_OK


def cmd_plethysm(a) -> int:
    from .plethysm import plethysm_coefficient, schur_expansion

    if a.lam is not None:
        print(plethysm_coefficient(a.lam, a.d, a.m))
    else:
        _emit({"d": a.d, "m": a.m, "schur": {format_partition(k): v for k, v in schur_expansion(a.d, a.m).items()}})
    return EXIT_OK


def cmd_construct(a) -> int:
    from .selfconjugate import construct_self_conjugate

    res = construct_self_conjugate(a.a, a.sign)
    _emit(res.as_dict())
    return EXIT_OK if all(res.validate().values()) else EXIT_FAIL


def cmd_certify(a) -> int:
    from .certifier import Certificate, certificate_problems, certify

    out = certify(a.lam, a.ell)
    doc = out.as_dict()
    if isinstance(out, Certificate):
        problems = certificate_problems(out)
        doc["verified"] = not problems
        doc["problems"] = problems
        _emit(doc)
        return EXIT_OK if not problems else EXIT_FAIL
    _emit(doc)
    return EXIT_FAIL


def cmd_scan(a) -> int:
    from .certifier import scan_exceptional

    _emit(scan_exceptional(a.max_a).as_dict())
    return EXIT_OK


def cmd_small_values(a) -> int:
    from .certifier import reproduce_small_values

    rep = reproduce_small_values(a.cap)
    _emit(rep.as_dict())
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_stabilizer(a) -> int:
    from .stabilizer import stabilizer_report

    _emit(stabilizer_report(a.n, a.m, a.trials))
    return EXIT_OK


def cmd_verify(a) -> int:
    from .audit import dumps, verify_paper

    report, code = verify_paper(a.level)
    text = dumps(report)
    if a.output:
        with open(a.output, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-weight", type=_positive, default=argparse.SUPPRESS,
                        help="coefficient weight cap (overrides KF_MAX_WEIGHT)")
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS,
                        help="worker threads (overrides KF_THREADS)")

    p = argparse.ArgumentParser(prog="symkron", description=__doc__.splitlines()[0], parents=[common])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(func=func)
        return sp

    sp = add("char", cmd_char, "character chi_lam(mu)")
    sp.add_argument("lam", type=_partition)
    sp.add_argument("mu", type=_partition)
    sp = add("kron", cmd_kron, "Kronecker coefficient g(lam, mu, nu)")
    for name in ("lam", "mu", "nu"):
        sp.add_argument(name, type=_partition)
    for name, func, help_ in (("sk", cmd_sk, "sk(lam, mu)"), ("ak", cmd_ak, "ak(lam, mu)"),
                              ("kostka", cmd_kostka, "Kostka number K_{lam, mu}")):
        sp = add(name, func, help_)
        sp.add_argument("lam", type=_partition)
        sp.add_argument("mu", type=_partition)
    for name, func in (("sm", cmd_sm), ("am", cmd_am)):
        sp = add(name, func, f"{name}(lam, n)")
        sp.add_argument("lam", type=_partition)
        sp.add_argument("--n", type=_positive, required=True)
    sp = add("plethysm", cmd_plethysm, "a_lam(d[m]), or the full Schur expansion when lam is omitted")
    sp.add_argument("lam", type=_partition, nargs="?")
    sp.add_argument("--d", type=_positive, required=True)
    sp.add_argument("--m", type=_positive, required=True)
    sp = add("construct-selfconj", cmd_construct, "self-conjugate partition of weight a and given sign")
    sp.add_argument("a", type=_positive)
    sp.add_argument("--sign", type=_sign, required=True)
    sp = add("certify", cmd_certify, "positivity certificate for sm(lam, ell)")
    sp.add_argument("lam", type=_partition)
    sp.add_argument("--ell", type=_positive, default=None,
                    help="default max(ceil(sqrt(len(lam)))+2, 12)")
    sp = add("scan-exceptional", cmd_scan, "exceptional column lengths up to max-a")
    sp.add_argument("--max-a", type=_positive, default=14)
    sp = add("reproduce-small-values", cmd_small_values, "sm(lam, 7) classification up to a weight cap")
    sp.add_argument("--cap", type=_positive, default=12)
    sp = add("stabilizer", cmd_stabilizer, "annihilator and invariant dimensions for Pow^m_n")
    sp.add_argument("--n", type=_positive, required=True)
    sp.add_argument("--m", type=_positive, required=True)
    sp.add_argument("--trials", type=_positive, default=2)
    sp = add("verify-paper", cmd_verify, "run every check and print the report")
    sp.add_argument("--level", choices=("quick", "full"), default="quick")
    sp.add_argument("--output", default=None, help="also write the report to this file")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    if "max_weight" in args:
        config.max_weight = args.max_weight
    if "threads" in args:
        config.threads = args.threads
    try:
        return args.func(args)
    except ArithmeticError as e:
        print(f"symkron: computation failed: {e}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as e:
        print(f"symkron: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())

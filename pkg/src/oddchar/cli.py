"""Batch command-line surface: JSON in, JSON out, deterministic.

Exit codes: 0 success (and every verify check passed), 1 verify sweep with
failures, 2 usage or domain error, 3 violated uniqueness/existence guarantee
(never happens on a correct build).
"""

import argparse
import json
import sys

from .errors import DomainError, TheoremViolationError
from .partitions import Partition
from .glu import GLabel, parabolic_star, count_odd_irr_gl
from .omega import sharp_glu, count_real_odd
from .sym import (
    alpha_sn,
    count_odd_irr_sn,
    sharp_sn,
    star_sn,
    theorem_d_star,
    young_star,
)
from .glu import levi_star
from .verify import SUITES, run_suite

USAGE_EXIT = 2
VIOLATION_EXIT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(USAGE_EXIT)


def parse_partition(text):
    try:
        parts = [int(x) for x in text.split(",") if x.strip() != ""]
        return Partition(parts)
    except (ValueError, DomainError) as exc:
        raise DomainError(f"bad partition {text!r}: {exc}") from exc


def parse_pairs(text):
    """Pairs syntax: 's=1:l=2,2,1;s=0:l=1'."""
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        fields = dict(item.split("=", 1) for item in chunk.split(":"))
        if set(fields) != {"s", "l"}:
            raise DomainError(f"bad pair {chunk!r}: need s=INT:l=PARTS")
        pairs.append((int(fields["s"]), parse_partition(fields["l"])))
    if not pairs:
        raise DomainError("no pairs given")
    return tuple(pairs)


def parse_int_list(text):
    return [int(x) for x in text.split(",") if x.strip() != ""]


def emit(payload):
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def build_parser():
    parser = _Parser(prog="oddchar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("star", help="unique odd branch of an odd partition")
    p.add_argument("partition")

    p = sub.add_parser("alpha", help="hook coordinates of an odd partition")
    p.add_argument("partition")

    p = sub.add_parser("sharp", help="Sylow linear-character label of an odd partition")
    p.add_argument("partition")

    p = sub.add_parser("young-star", help="per-factor partitions for an odd-index Young subgroup")
    p.add_argument("partition")
    p.add_argument("--blocks", required=True, help="comma list of factor sizes")

    p = sub.add_parser("wreath-star", help="wreath-product correspondent for an odd-index S_k wr S_t")
    p.add_argument("partition")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    for name in ("parabolic-star", "sharp-glu", "levi-star"):
        p = sub.add_parser(name, help=f"{name.replace('-', ' ')} on a GL/GU label")
        p.add_argument("--kappa", default="+", choices=["+", "-"])
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--pairs", required=True, help="e.g. 's=1:l=2,2,1;s=0:l=1'")
        if name == "levi-star":
            p.add_argument("--blocks", required=True, help="comma list of Levi block sizes")

    p = sub.add_parser("count", help="exact census of odd-degree labels")
    p.add_argument("target", choices=["sn", "gl", "real"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--kappa", default="+", choices=["+", "-"])

    p = sub.add_parser("verify", help="run a named verification sweep")
    p.add_argument("suite", help=f"one of: {', '.join(sorted(SUITES))}")
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--q", help="comma list of prime powers")
    p.add_argument("--kappa", help="comma list drawn from +,-")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", default="json", choices=["json"])
    return parser


def _json_int(value):
    return value if abs(value) <= (1 << 53) else str(value)


def run(argv):
    args = build_parser().parse_args(argv)
    cmd = args.command

    if cmd == "star":
        lam = parse_partition(args.partition)
        emit({"result": star_sn(lam).to_json()})
    elif cmd == "alpha":
        emit({"theta": alpha_sn(parse_partition(args.partition)).to_json()})
    elif cmd == "sharp":
        emit({"label": sharp_sn(parse_partition(args.partition)).to_json()})
    elif cmd == "young-star":
        factors = young_star(parse_partition(args.partition), parse_int_list(args.blocks))
        emit({"factors": [f.to_json() for f in factors]})
    elif cmd == "wreath-star":
        label = theorem_d_star(parse_partition(args.partition), args.k, args.t)
        emit(label.to_json())
    elif cmd == "parabolic-star":
        label = GLabel(args.kappa, args.q, parse_pairs(args.pairs))
        emit(parabolic_star(label).to_json())
    elif cmd == "sharp-glu":
        label = GLabel(args.kappa, args.q, parse_pairs(args.pairs))
        emit(sharp_glu(label).to_json())
    elif cmd == "levi-star":
        label = GLabel(args.kappa, args.q, parse_pairs(args.pairs))
        factors = levi_star(label, parse_int_list(args.blocks))
        emit({"factors": [f.to_json() for f in factors]})
    elif cmd == "count":
        if args.target == "sn":
            count = count_odd_irr_sn(args.n)
        else:
            if args.q is None:
                raise DomainError("--q is required for gl and real counts")
            if args.target == "gl":
                count = count_odd_irr_gl(args.n, args.q, args.kappa)
            else:
                count = count_real_odd(args.n, args.q, args.kappa)
        emit({"count": _json_int(count)})
    elif cmd == "verify":
        if args.suite not in SUITES:
            raise DomainError(f"unknown suite {args.suite!r}")
        kwargs = {"jobs": args.jobs}
        if args.max_n is not None:
            kwargs["max_n"] = args.max_n
        if args.q is not None:
            kwargs["qs"] = tuple(parse_int_list(args.q))
        if args.kappa is not None:
            kwargs["kappas"] = tuple(k for k in args.kappa.split(",") if k)
        report = run_suite(args.suite, **kwargs)
        emit(report.to_json())
        return 0 if report.failed == 0 else 1
    return 0


def main(argv=None):
    try:
        code = run(sys.argv[1:] if argv is None else argv)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = USAGE_EXIT
    except TheoremViolationError as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        code = VIOLATION_EXIT
    sys.exit(code)


if __name__ == "__main__":
    main()

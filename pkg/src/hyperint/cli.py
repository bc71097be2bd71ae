"""Command-line front end.

Exit codes: 0 affirmative verdict (or a finished experiment), 1 negative
verdict with witness, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from hyperint.equidist import (
    Progression,
    QuadraticPoly,
    count_mod_p2_roots,
    count_prime_square_values,
    histogram,
    sample_X,
    star_discrepancy,
)
from hyperint.exact import QuadraticNumber, check_discriminant, common_discriminant, is_nonpositive_integer
from hyperint.oracle import ValuationScanConfig, scan_details, violating_primes
from hyperint.quadratic_criterion import admissible_threshold, breakpoints, compute_groups, decide_thm14, decompose
from hyperint.rational_criterion import PrimeTooSmall, RationalSystem, decide_christol, decide_thm12
from hyperint.report import CriterionReport, dump_record, make_record, to_plain


class ParseError(ValueError):
    pass


class _Scanner:
    def __init__(self, text: str):
        self.text, self.pos = text, 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, token: str) -> bool:
        self.skip()
        return self.text.startswith(token, self.pos)

    def take(self, token: str) -> bool:
        if self.peek(token):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.take(token):
            self.fail(f"expected {token!r}")

    def fail(self, what: str):
        raise ParseError(f"position {self.pos}: {what} in {self.text!r}")

    def digits(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected digits")
        return int(self.text[start : self.pos])

    def rational(self) -> Fraction:
        num = self.digits()
        if self.take("/"):
            start = self.pos
            den = self.digits()
            if den == 0:
                self.pos = start
                self.fail("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def sqrt(self) -> int:
        self.expect("sqrt(")
        sign = -1 if self.take("-") else 1
        D = sign * self.digits()
        self.expect(")")
        return D

    def sign(self) -> int:
        if self.take("-"):
            return -1
        self.take("+")
        return 1


def _parse_term(sc: _Scanner) -> tuple[Fraction, Fraction, int | None]:
    s1 = sc.sign()
    if sc.peek("sqrt("):
        return Fraction(0), Fraction(s1), sc.sqrt()
    q = s1 * sc.rational()
    if sc.take("*"):
        return Fraction(0), q, sc.sqrt()
    if sc.peek("+") or sc.peek("-"):
        s2 = sc.sign()
        if sc.peek("sqrt("):
            return q, Fraction(s2), sc.sqrt()
        q2 = s2 * sc.rational()
        sc.expect("*")
        return q, q2, sc.sqrt()
    return q, Fraction(0), None


def parse_parameters(text: str) -> list[QuadraticNumber]:
    """Comma separated terms like 1/2, -1*sqrt(2) or 1/2+3/4*sqrt(-6)."""
    sc = _Scanner(text)
    terms = []
    while True:
        sc.skip()
        start = sc.pos
        terms.append((start, _parse_term(sc)))
        if sc.take(","):
            continue
        sc.skip()
        if sc.pos != len(text):
            sc.fail("expected ',' or end of input")
        break
    Ds = {D for _, (_, _, D) in terms if D is not None}
    if len(Ds) > 1:
        raise ParseError(f"mixed discriminants {sorted(Ds)} in {text!r}")
    D = Ds.pop() if Ds else None
    if D is not None:
        try:
            check_discriminant(D)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    out = []
    for start, (r1, r2, _) in terms:
        if r2 == 0 and is_nonpositive_integer(r1):
            raise ParseError(f"position {start}: parameter {r1} is a nonpositive integer")
        out.append(QuadraticNumber(r1, r2, D))
    return out


def parse_system(alpha_text: str, beta_text: str, D: int | None = None):
    """(alpha, beta, D) with D None when every entry is rational and none was given."""
    alpha, beta = parse_parameters(alpha_text), parse_parameters(beta_text)
    found = common_discriminant(alpha + beta)
    if found is not None and D is not None and found != D:
        raise ParseError(f"--D {D} conflicts with sqrt({found})")
    D = found if found is not None else D
    if D is not None:
        check_discriminant(D)
        alpha = [g.with_D(D) for g in alpha]
        beta = [g.with_D(D) for g in beta]
    return alpha, beta, D


def _rational_system(alpha, beta) -> RationalSystem:
    if any(not g.is_rational for g in alpha + beta):
        raise ParseError("this command needs rational parameters")
    return RationalSystem(tuple(g.r1 for g in alpha), tuple(g.r1 for g in beta))


def _system(args):
    alpha, beta, D = parse_system(args.alpha, args.beta, args.D)
    if D is None:
        return _rational_system(alpha, beta)
    return decompose(alpha, beta, D)


def _system_inputs(args, system) -> dict:
    inputs = {"alpha": [str(g) for g in system.alpha], "beta": [str(g) for g in system.beta]}
    if not isinstance(system, RationalSystem):
        inputs["D"] = system.D
    return inputs


# commands


def cmd_decide(args):
    system = _system(args)
    if isinstance(system, RationalSystem):
        report = decide_christol(system)
    else:
        report = decide_thm14(system)
    return _system_inputs(args, system), report


def cmd_padic(args):
    system = _rational_system(*parse_system(args.alpha, args.beta)[:2])
    inputs = _system_inputs(args, system)
    inputs["p"] = args.p
    try:
        return inputs, decide_thm12(system, args.p)
    except PrimeTooSmall:
        pass
    # below the bound the criterion does not apply, so scan this prime directly
    if system.d % args.p == 0:
        raise ValueError(f"p={args.p} divides d={system.d}")
    n_max = args.nmax if args.nmax is not None else args.p * args.p
    inputs["nmax"] = n_max
    cfg = ValuationScanConfig(p_max=args.p, n_max=n_max, p_min=args.p, p0=0, threads=args.threads)
    violations = scan_details(system, cfg).violations
    meta = {"p": args.p, "bound": system.prime_bound, "violation_count": len(violations)}
    if violations:
        v = violations[0]
        witness = {"statement": "valuation", "p": v.p, "embedding": v.embedding, "n": v.n, "value": v.valuation}
        return inputs, CriterionReport("not-in-Zp", "valuation-scan", witness, meta)
    return inputs, CriterionReport("inconclusive", "valuation-scan", None, meta)


def cmd_oracle(args):
    system = _system(args)
    cfg = ValuationScanConfig(p_max=args.pmax, n_max=args.nmax, p_min=args.pmin, p0=args.p0, threads=args.threads)
    result = scan_details(system, cfg)
    inputs = _system_inputs(args, system)
    inputs.update({"pmin": args.pmin, "pmax": args.pmax, "nmax": args.nmax})
    meta = {
        "P0": result.p0,
        "scanned_primes": len(result.scanned),
        "skipped_primes": list(result.skipped),
        "violation_count": len(result.violations),
        "violating_primes": violating_primes(result),
    }
    if result.violations:
        v = result.violations[0]
        witness = {"statement": "valuation", "p": v.p, "embedding": v.embedding, "n": v.n, "value": v.valuation}
        return inputs, CriterionReport("not-in-Zp", "valuation-scan", witness, meta)
    return inputs, CriterionReport("inconclusive", "valuation-scan", None, meta)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"expected comma separated integers, got {text!r}") from None


def cmd_equidist(args):
    coeffs = _int_list(args.poly)
    if len(coeffs) != 3:
        raise ParseError("--poly needs A,B,C")
    f = QuadraticPoly(*coeffs)
    prog = Progression(args.mod, tuple(_int_list(args.res)))
    samples = sample_X(f, prog, args.xmax, threads=args.threads)
    p2_count, p2_ratio = count_mod_p2_roots(f, prog, args.xmax, threads=args.threads)
    meta = {
        "samples": len(samples),
        "primes_with_roots": len({s.p for s in samples}),
        "star_discrepancy": star_discrepancy(samples) if samples else None,
        "histogram": histogram(samples, args.bins),
        "mod_p2_count": p2_count,
        "mod_p2_ratio": p2_ratio,
        "prime_square_counts": {str(a): count_prime_square_values(f, prog, args.xmax, a) for a in range(1, f.A + 1)},
        "heuristic": True,
    }
    inputs = {"poly": coeffs, "mod": args.mod, "res": list(prog.residues), "xmax": args.xmax, "bins": args.bins}
    return inputs, CriterionReport(None, "equidistribution", None, meta)


def cmd_breakpoints(args):
    alpha, beta, D = parse_system(args.alpha, args.beta, args.D)
    if D is None:
        raise ParseError("breakpoints need a quadratic system; pass --D for rational entries")
    system = decompose(alpha, beta, D)
    groups = compute_groups(system.E, system.D)
    bps = breakpoints(system, groups)
    meta = {
        "E": system.E,
        "H": list(groups.H),
        "I": list(groups.I),
        "points": list(bps.points),
        "samples": bps.components(),
        "P0": admissible_threshold(system),
    }
    return _system_inputs(args, system), CriterionReport(None, "breakpoints", None, meta)


COMMANDS = {
    "decide": cmd_decide,
    "padic": cmd_padic,
    "oracle": cmd_oracle,
    "equidist": cmd_equidist,
    "breakpoints": cmd_breakpoints,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperint", description="Integrality of hypergeometric series.")
    parser.add_argument("--json", action="store_true", help="emit a structured record")
    parser.add_argument("--threads", type=int, default=1, help="worker processes for scans")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def system_args(p, beta_required=True):
        p.add_argument("--alpha", required=True)
        p.add_argument("--beta", required=beta_required)
        p.add_argument("--D", type=int, default=None, help="discriminant for all-rational input")

    p = sub.add_parser("decide", parents=[common], help="decide N-integrality")
    system_args(p)
    p = sub.add_parser("padic", parents=[common], help="integrality at one prime (rational parameters)")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--nmax", type=int, default=None, help="scan length when p is below the bound (default p^2)")
    p = sub.add_parser("oracle", parents=[common], help="brute-force valuation scan")
    system_args(p)
    p.add_argument("--pmin", type=int, default=2)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--p0", type=int, default=None, help="override the excluded-prime threshold")
    p = sub.add_parser("equidist", parents=[common], help="root statistics of a quadratic congruence")
    p.add_argument("--poly", required=True, help="A,B,C for Az^2+Bz+C")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--res", required=True, help="residues, comma separated")
    p.add_argument("--xmax", type=int, required=True)
    p.add_argument("--bins", type=int, default=10)
    p = sub.add_parser("breakpoints", parents=[common], help="breakpoints and residue groups")
    system_args(p)
    return parser


def _text(command: str, inputs: dict, report: CriterionReport) -> str:
    lines = [f"command: {command}"]
    for k, v in to_plain(inputs).items():
        lines.append(f"  {k}: {v}")
    if report.verdict is not None:
        lines.append(f"verdict: {report.verdict}")
    lines.append(f"route: {report.route}")
    if report.witness:
        lines.append("witness: " + ", ".join(f"{k}={v}" for k, v in to_plain(report.witness).items()))
    for k, v in to_plain(report.metadata).items():
        lines.append(f"{k}: {v}")
    return "\n".join(lines)


def run(argv=None) -> tuple[int, str]:
    """Parse argv, run the command and return (exit code, output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    if args.threads < 1:
        return 2, "error: --threads must be at least 1"
    try:
        inputs, report = COMMANDS[args.command](args)
    except (ValueError, RuntimeError) as exc:
        return 2, f"error: {exc}"
    code = 1 if report.negative else 0
    if args.json:
        return code, dump_record(make_record(args.command, inputs, report))
    return code, _text(args.command, inputs, report)


def main(argv=None) -> int:
    code, out = run(argv)
    if out:
        stream = sys.stderr if code == 2 else sys.stdout
        print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``euclidiv <subcommand> ...``.

Output is JSON by default with every number written as a string, so big
integers survive any JSON reader.  Exit status is 0 on success, 1 when the
mathematics refuses the input (e.g. a base that is not invertible), and 2 on
usage or literal parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import census as census_mod
from . import divtest, period, recurring
from .domain import GAUSS, ZZ, DomainError, Kind, ParseError, check_axioms, divide, parse_element, polynomials
from .arith import is_prime
from .digits import format_numeral

BUDGET_ENV = "EUCLID_DIGITS_BUDGET"
DEFAULT_SEED = 42


class UsageError(Exception):
    pass


def _budget(default: int) -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise UsageError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise UsageError(f"{BUDGET_ENV} must be positive")
    return value


def _tag(args):
    if args.domain == "z":
        return ZZ
    if args.domain == "gauss":
        return GAUSS
    if args.char is None:
        raise UsageError("--char is required for the polynomial domain")
    if not is_prime(args.char):
        raise UsageError("--char must be a prime")
    return polynomials(args.char)


def _elem(text: str, tag):
    try:
        return parse_element(text, tag)
    except ParseError as exc:
        raise UsageError(str(exc)) from exc


def _base(args, tag):
    text = args.base
    if text is None:
        text = {Kind.INTEGERS: "10", Kind.POLYNOMIAL: "x"}.get(tag.kind)
        if text is None:
            raise UsageError("--base is required for the Gaussian domain")
    return _elem(text, tag)


def _s(e) -> str:
    return str(e)


def _digits(ds) -> list[str]:
    return [str(a) for a in ds]


def _ratio(x: Fraction | float | None, places: int = 12) -> str | None:
    if x is None:
        return None
    return f"{float(x):.{places}f}"


# -- subcommand handlers ----------------------------------------------------------------------


def cmd_divtest(args):
    tag = _tag(args)
    base = _base(args, tag)
    s, d = _elem(args.s, tag), _elem(args.divisor, tag)
    mode, *rest = args.mode
    if mode == "forward":
        v = divtest.forward_reduce(s, d, base)
    elif mode == "reverse":
        v = divtest.reverse_reduce(s, d, base)
    elif mode == "general":
        v = divtest.general_divisibility(s, d, base)
    elif mode == "chunks":
        if len(rest) != 1:
            raise UsageError("chunks mode needs cut positions, e.g. --mode chunks 3,6")
        try:
            cuts = tuple(int(c) for c in rest[0].split(","))
        except ValueError as exc:
            raise UsageError(f"bad cut list {rest[0]!r}") from exc
        v = divtest.chunked_reduce(s, d, base, cuts)
    else:
        raise UsageError(f"unknown mode {mode!r}")
    if rest and mode != "chunks":
        raise UsageError(f"mode {mode} takes no extra values")
    out = {
        "divisible": v.divisible,
        "residue": _s(v.residue),
        "reduced_value": _s(v.reduced_value),
        "k": None if v.k is None else _s(v.k),
    }
    if v.trail:
        out["trail"] = [_s(t) for t in v.trail]
    if mode == "general":
        out["factors"] = [
            {"modulus": _s(c.modulus), "digits_checked": None if c.digits_checked is None else str(c.digits_checked),
             "checked_value": _s(c.tail), "divisible": c.divisible}
            for c in v.parts
        ]
    return out


def cmd_kvalue(args):
    tag = _tag(args)
    base = _base(args, tag)
    d = _elem(args.d, tag)
    kv = divtest.forward_k(d, base) if args.mode == "forward" else divtest.reverse_k(d, base)
    return {"k": _s(kv.value), "divisor": _s(d), "base": _s(base), "direction": kv.direction.value}


def cmd_expand(args):
    tag = _tag(args)
    base = _base(args, tag)
    num, sep, den = args.fraction.partition("/")
    a = _elem(num, tag)
    d = _elem(den, tag) if sep else tag.one
    rn = recurring.recurring_expansion(a, d, base, max_steps=_budget(recurring.CHAIN_BUDGET))
    out = {
        "text": format_numeral(rn),
        "integer": _digits(rn.integer_digits),
        "preperiod": _digits(rn.preperiod_digits),
        "repetend": _digits(rn.repetend_digits),
        "period": str(rn.period),
    }
    if args.digits is not None:
        frac = divide(a, d).remainder
        out["digits"] = _digits(recurring.expansion_sequence(frac, d, base, args.digits))
    return out


def cmd_chains(args):
    tag = _tag(args)
    base = _base(args, tag)
    c = recurring.chains(_elem(args.d, tag), base, budget=_budget(recurring.CHAIN_BUDGET))
    return {
        "entries": [{"length": str(b), "count": str(n)} for b, n in c.entries],
        "total": str(c.total),
        "chains": [_digits(ch.digits) for ch in c.chains],
    }


def cmd_midy(args):
    tag = _tag(args)
    base = _base(args, tag)
    r = recurring.midy_complement_check(_elem(args.d, tag), base, seed=args.seed)
    return {
        "l": None if r.l is None else str(r.l),
        "ok": r.ok,
        "samples": [
            {"numerator": _s(m.numerator), "first_half": _digits(m.first_half),
             "second_half": _digits(m.second_half), "sums": _digits(m.sums), "represents": m.represents}
            for m in r.samples
        ],
    }


def cmd_squaresplit(args):
    tag = _tag(args)
    base = _base(args, tag)
    r = recurring.square_split_check(_elem(args.d, tag), base, args.k, args.l)
    return {
        "multiple": _s(r.multiple), "high": _s(r.high), "low": _s(r.low), "total": _s(r.total),
        "divisible": r.divisible, "quotient": _s(r.quotient),
        "predicted_quotient": _s(r.predicted_quotient), "degenerate": r.degenerate, "ok": r.ok,
    }


def cmd_period(args):
    tag = _tag(args)
    base = _base(args, tag)
    res = period.period_of_d(_elem(args.d, tag), base)
    factors = []
    for fp in res.per_prime:
        entry = {"p": _s(fp.prime), "alpha": str(fp.alpha), "Q": str(fp.period)}
        if fp.lifting is not None:
            entry["g"] = str(fp.lifting.g)
            entry["q_list"] = [str(q) for q in fp.lifting.q]
        factors.append(entry)
    return {"period": str(res.period), "factors": factors}


def _census_json(rep):
    props = rep.proportions
    refs = rep.references
    key = {c: c.value for c in census_mod.PrimeClass}
    return {
        "base": str(rep.base),
        "limit": str(rep.limit),
        "counts": {**{key[c]: str(n) for c, n in rep.counts.items()}, "excluded": str(rep.excluded)},
        "proportions": {key[c]: _ratio(p) for c, p in props.items()},
        "references": {"artin": _ratio(refs.full), "odd": _ratio(refs.odd),
                       "even_nonfull": _ratio(refs.even_nonfull), "grh_conditional": refs.grh_conditional},
        "deltas": {key[c]: {k: _ratio(v) for k, v in d.items()} for c, d in rep.deltas.items()},
    }


def cmd_census(args):
    rep = census_mod.census(args.limit, args.base, segment_size=args.segment_size, workers=args.workers)
    if args.out == "tsv":
        refs = {census_mod.PrimeClass.FULL: rep.references.full, census_mod.PrimeClass.ODD: rep.references.odd,
                census_mod.PrimeClass.EVEN_NONFULL: rep.references.even_nonfull}
        lines = ["class\tcount\tproportion\treference"]
        for c, n in rep.counts.items():
            ref = _ratio(refs[c])
            lines.append(f"{c.value}\t{n}\t{_ratio(rep.proportions[c])}\t{ref if ref else '-'}")
        lines.append(f"excluded\t{rep.excluded}\t-\t-")
        return "\n".join(lines)
    return _census_json(rep)


def cmd_artin(args):
    est = census_mod.artin_constant(args.primes_limit)
    return {"prime_limit": str(est.prime_limit), "value": str(est.value), "error_bound": str(est.error_bound),
            "lower": str(est.lower), "upper": str(est.upper)}


def cmd_residual(args):
    h = census_mod.residual_index_histogram(args.limit, args.base, args.max_m)
    buckets = {str(m): str(n) for m, n in h.buckets.items() if m is not None}
    buckets[f">{h.max_m}"] = str(h.buckets[None])
    return {"base": str(h.base), "limit": str(h.limit), "total": str(h.total), "buckets": buckets}


def cmd_wieferich(args):
    hits = census_mod.wieferich_search(args.limit, args.base, seed=args.seed)
    return {"base": str(args.base), "limit": str(args.limit), "primes": [str(p) for p in hits]}


# -- selftest ---------------------------------------------------------------------------------


def _selftest_checks(seed: int):
    z = ZZ
    f5 = polynomials(5)
    x = f5.x

    def kvalues():
        return divtest.reverse_k(z(29), z(10)).value == 3 and divtest.reverse_reduce(z(841), z(29), z(10)).divisible

    def chunks():
        v = divtest.chunked_reduce(z(142857142), z(7), z(10), (3, 6))
        return v.residue == 1 and not v.divisible

    def poly_k():
        return divtest.reverse_k(x**2 + 1, x).value == -x

    def repetends():
        r7 = recurring.repetend(z(7), z(10))
        r27 = recurring.repetend(z(27), z(10))
        return (r7.period, r7.value) == (6, 142857) and (r27.period, r27.value) == (3, 37)

    def chain_totals():
        return all(recurring.chains(z(d), z(10)).total == d for d in range(2, 200) if d % 2 and d % 5)

    def periods():
        return period.period_of_d(z(91), z(10)).period == 6 and period.period_of_d(z(49), z(10)).period == 42

    def lifting():
        return period.prime_power_period(z(3), 4, z(10)).q == (1, 1, 3, 9)

    def axioms():
        return all(check_axioms(t, 200, seed).ok for t in (ZZ, GAUSS, f5))

    def wieferich():
        return census_mod.wieferich_search(10**4, 10, seed=seed) == [3, 487]

    def artin():
        est = census_mod.artin_constant(10**5)
        return est.lower <= census_mod.ARTIN <= est.upper

    def small_census():
        rep = census_mod.census(10**5, 10)
        p = rep.proportions
        c = census_mod.PrimeClass
        return p[c.FULL] > p[c.ODD] > p[c.EVEN_NONFULL]

    return [
        ("divtest.reverse_k / reverse_reduce", kvalues),
        ("divtest.chunked_reduce", chunks),
        ("divtest.reverse_k over F_5[X]", poly_k),
        ("recurring.repetend", repetends),
        ("recurring.chains totals", chain_totals),
        ("period.period_of_d", periods),
        ("period.prime_power_period", lifting),
        ("domain.check_axioms", axioms),
        ("census.wieferich_search", wieferich),
        ("census.artin_constant", artin),
        ("census.census ordering", small_census),
    ]


def cmd_selftest(args):
    rows = []
    for name, fn in _selftest_checks(args.seed):
        t0 = time.perf_counter()
        try:
            ok = bool(fn())
            note = ""
        except Exception as exc:  # report, keep going
            ok, note = False, f"{type(exc).__name__}: {exc}"
        rows.append({"check": name, "passed": ok, "seconds": f"{time.perf_counter() - t0:.3f}", "note": note})
    args._failed = not all(r["passed"] for r in rows)
    if args.out == "json":
        checks = [{k: v for k, v in r.items() if k != "seconds"} for r in rows]
        return {"checks": checks, "passed": not args._failed}
    width = max(len(r["check"]) for r in rows)
    lines = [f"{'PASS' if r['passed'] else 'FAIL'}  {r['check']:<{width}}  {r['seconds']}s  {r['note']}".rstrip()
             for r in rows]
    return "\n".join(lines)


# -- parser -----------------------------------------------------------------------------------


def _add_domain(p):
    p.add_argument("--base", help="base B as a literal of the domain (default 10, or x for polynomials)")
    p.add_argument("--domain", choices=("z", "gauss", "poly"), default="z")
    p.add_argument("--char", type=int, help="field characteristic for --domain poly")


def _add_out(p, choices=("json", "human")):
    p.add_argument("--out", choices=choices, default=choices[0])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="euclidiv", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled checks (default 42)")
    sub = parser.add_subparsers(dest="command", metavar="subcommand")
    sub.required = True

    def add(name, handler, desc):
        p = sub.add_parser(name, help=desc, description=desc)
        p.set_defaults(handler=handler)
        p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        return p

    p = add("divtest", cmd_divtest,
            "Divisibility verdict via divtest.forward_reduce, reverse_reduce, chunked_reduce or general_divisibility.")
    p.add_argument("s")
    p.add_argument("--divisor", required=True)
    p.add_argument("--mode", nargs="+", default=["reverse"], metavar="MODE",
                   help="forward | reverse | chunks N1,N2,... | general")
    _add_domain(p)
    _add_out(p)

    p = add("kvalue", cmd_kvalue, "k-value of a divisor via divtest.forward_k or divtest.reverse_k.")
    p.add_argument("d")
    p.add_argument("--mode", choices=("forward", "reverse"), default="reverse")
    _add_domain(p)
    _add_out(p)

    p = add("expand", cmd_expand, "Recurring expansion of a/d via recurring.recurring_expansion.")
    p.add_argument("fraction", help="a/d")
    p.add_argument("--digits", type=int, help="also list this many leading fractional digits")
    _add_domain(p)
    _add_out(p)

    p = add("chains", cmd_chains, "Chain census of d via recurring.chains.")
    p.add_argument("d")
    _add_domain(p)
    _add_out(p)

    p = add("midy", cmd_midy, "Complementary half-blocks via recurring.midy_complement_check.")
    p.add_argument("d")
    _add_domain(p)
    _add_out(p)

    p = add("squaresplit", cmd_squaresplit, "Split-and-add of k*r_d^l via recurring.square_split_check.")
    p.add_argument("d")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    _add_domain(p)
    _add_out(p)

    p = add("period", cmd_period, "Period of 1/d with prime-power lifting via period.period_of_d.")
    p.add_argument("d")
    _add_domain(p)
    _add_out(p)

    p = add("census", cmd_census, "Prime classes by period type via census.census.")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--segment-size", type=int, default=census_mod.SEGMENT_SIZE)
    _add_out(p, ("json", "tsv", "human"))

    p = add("artin", cmd_artin, "Certified bracket for Artin's constant via census.artin_constant.")
    p.add_argument("--primes-limit", type=int, required=True)
    _add_out(p)

    p = add("residual", cmd_residual, "Residual-index histogram via census.residual_index_histogram.")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--max-m", type=int, default=8)
    _add_out(p)

    p = add("wieferich", cmd_wieferich, "Primes with B^(p-1) = 1 mod p^2 via census.wieferich_search.")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--base", type=int, default=10)
    _add_out(p)

    p = add("selftest", cmd_selftest, "Runs domain.check_axioms plus spot checks from the other modules and prints a pass/fail table.")
    _add_out(p, ("human", "json"))
    return parser


def _human(obj, indent: str = "") -> str:
    if isinstance(obj, str):
        return obj
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_human(v, indent + "  "))
        elif isinstance(v, list):
            lines.append(f"{indent}{k}: " + ", ".join(json.dumps(i) if not isinstance(i, str) else i for i in v))
        else:
            lines.append(f"{indent}{k}: {v}")
    return "\n".join(lines)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.handler(args)
    except UsageError as exc:
        print(f"euclidiv {args.command}: {exc}", file=stderr)
        return 2
    except (DomainError, ValueError, ArithmeticError) as exc:
        print(f"euclidiv {args.command}: {exc}", file=stderr)
        return 1
    if isinstance(result, str):
        print(result, file=stdout)
    elif getattr(args, "out", "json") == "json":
        print(json.dumps(result, indent=2, sort_keys=False), file=stdout)
    else:
        print(_human(result), file=stdout)
    return 1 if getattr(args, "_failed", False) else 0


def main() -> None:
    sys.exit(run())

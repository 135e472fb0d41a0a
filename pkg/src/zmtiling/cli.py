"""Command-line interface.

Every subcommand prints one JSON document (or, with ``--quiet``, just the
verdict line) and exits 0 when the property holds / something was found,
1 when it does not, and 2 on usage, parse or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from zmtiling import spectra, threeprime, tiling
from zmtiling.polynomials import cyclotomic_support_prime_powers, divides_cyclotomic, make_set

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2

_INT_RE = re.compile(r"^-?\d+$")


class UsageError(Exception):
    pass


def parse_set(text: str) -> tuple[int, ...]:
    """Parse '{0, 2, -5}' / '0 2 -5' / '0,2,-5' into a sorted tuple of distinct ints."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    if "{" in body or "}" in body:
        raise UsageError(f"malformed set literal: {text!r}")
    tokens = [tok for tok in re.split(r"[,\s]+", body) if tok]
    bad = [tok for tok in tokens if not _INT_RE.match(tok)]
    if bad:
        raise UsageError(f"malformed set literal: bad element {bad[0]!r}")
    try:
        return make_set(int(tok) for tok in tokens)
    except ValueError as exc:
        raise UsageError(f"malformed set literal: {exc}") from None


def format_set(S) -> str:
    return "{" + ",".join(str(x) for x in S) + "}"


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _divisor_map(values: dict) -> dict[str, object]:
    return {str(k): values[k] for k in sorted(values)}


def _emit(args, command: str, inputs: dict, results: dict, verdict: str, code: int) -> int:
    if args.quiet:
        print(verdict)
    else:
        doc = {"command": command, "inputs": inputs, "results": results, "verdict": verdict}
        print(json.dumps(doc, indent=2))
    return code


def _read_sets(args, count: int) -> list[tuple[int, ...]]:
    literals = list(args.sets)
    out = []
    for name in ("a", "b")[:count]:
        path = getattr(args, f"{name}_file", None)
        if path:
            try:
                with open(path, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        elif literals:
            text = literals.pop(0)
        else:
            raise UsageError(f"missing set {name.upper()}")
        out.append(parse_set(text))
    if literals:
        raise UsageError(f"unexpected argument {literals[0]!r}")
    return out


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


# -- subcommands ---------------------------------------------------------------


def cmd_verify(args) -> int:
    A, B = _read_sets(args, 2)
    M = args.modulus
    direct = tiling.is_tiling(A, B, M)
    poly = tiling.is_tiling_poly(A, B, M)
    results: dict = {"is_tiling": direct, "is_tiling_poly": poly}
    if tiling.distinct_mod(A, M) and tiling.distinct_mod(B, M):
        s = tiling.sands_criterion(A, B, M)
        results["sands"] = {"D_A": list(s.D_A), "D_B": list(s.D_B), "disjoint": s.disjoint, "product_is_M": s.product_is_M}
    else:
        results["sands"] = None
    inputs = {"A": format_set(A), "B": format_set(B), "M": M}
    return _emit(args, "verify", inputs, results, "tiling" if direct else "not-tiling", EXIT_OK if direct else EXIT_FALSE)


def _conditions(A) -> dict:
    t1, t2 = tiling.check_T1(A), tiling.check_T2(A)
    return {
        "S_A": cyclotomic_support_prime_powers(A),
        "T1": {"holds": t1.holds, "lhs": t1.lhs, "rhs": t1.rhs},
        "T2": {"holds": t2.holds, "witnesses": t2.witnesses},
    }


def cmd_conditions(args) -> int:
    (A,) = _read_sets(args, 1)
    res = _conditions(A)
    ok = res["T1"]["holds"] and res["T2"]["holds"]
    verdict = f"T1={'holds' if res['T1']['holds'] else 'fails'} T2={'holds' if res['T2']['holds'] else 'fails'}"
    return _emit(args, "conditions", {"A": format_set(A)}, res, verdict, EXIT_OK if ok else EXIT_FALSE)


def cmd_identity(args) -> int:
    A, B = _read_sets(args, 2)
    N = args.n
    check = spectra.verify_main_identity(A, B, N)
    results = {
        "A_m": _divisor_map(spectra.difference_spectrum(A, N).counts),
        "B_m": _divisor_map(spectra.difference_spectrum(B, N).counts),
        "power_A": _divisor_map(spectra.power_spectrum(A, N).values),
        "power_B": _divisor_map(spectra.power_spectrum(B, N).values),
        "lhs": format_rational(check.lhs),
        "rhs": format_rational(check.rhs),
        "equal": check.equal,
    }
    inputs = {"A": format_set(A), "B": format_set(B), "N": N}
    return _emit(args, "identity", inputs, results, "equal" if check.equal else "unequal", EXIT_OK if check.equal else EXIT_FALSE)


def cmd_constant(args) -> int:
    A, B = _read_sets(args, 2)
    M, N = args.modulus, args.n
    inputs = {"A": format_set(A), "B": format_set(B), "M": M, "N": N}
    if args.c is not None:
        value = spectra.corollary_constant(A, B, M, N, args.c)
        inputs["c"] = args.c
        results = {"value": format_rational(value)}
        return _emit(args, "constant", inputs, results, format_rational(value), EXIT_OK)
    cs = range(-2 * M, 2 * M + 1)
    values = spectra.corollary_constant_sweep(A, B, M, N, cs)
    distinct = sorted(set(values.values()))
    constant = len(distinct) == 1
    results = {
        "tiling": tiling.is_tiling(A, B, M),
        "c_range": [-2 * M, 2 * M],
        "values": [format_rational(v) for v in distinct],
        "constant": constant,
    }
    if N == M:
        results["equals_size_of_A"] = constant and distinct[0] == len(A)
    return _emit(args, "constant", inputs, results, "constant" if constant else "varies", EXIT_OK if constant else EXIT_FALSE)


def cmd_search(args) -> int:
    (A,) = _read_sets(args, 1)
    found = []
    for M in range(len(A), args.max_modulus + 1, len(A)):
        if len(found) >= args.limit:
            break
        if not tiling.distinct_mod(A, M):
            continue
        for B in tiling.find_complements(A, M, limit=args.limit - len(found), jobs=args.jobs):
            found.append({"M": M, "B": format_set(B)})
    inputs = {"A": format_set(A), "max_modulus": args.max_modulus, "limit": args.limit}
    verdict = "found" if found else "none-found"
    return _emit(args, "search", inputs, {"complements": found}, verdict, EXIT_OK if found else EXIT_FALSE)


def cmd_theorem1(args) -> int:
    A, B = _read_sets(args, 2)
    p, q, r = args.p, args.q, args.r
    res = threeprime.verify_theorem1(A, B, p, q, r)
    flags = {
        f"Phi_{s}": divides_cyclotomic(A, s)
        for s in (p, q, r, p * q, p * r, q * r, p * q * r)
    }
    results = {
        "hypotheses_hold": res.hypotheses_hold,
        "conclusion_holds": res.conclusion_holds,
        "consistent": res.consistent,
        "divides_A": flags,
    }
    inputs = {"A": format_set(A), "B": format_set(B), "p": p, "q": q, "r": r}
    verdict = "consistent" if res.consistent else "inconsistent"
    return _emit(args, "theorem1", inputs, results, verdict, EXIT_OK if res.consistent else EXIT_FALSE)


def cmd_decompose(args) -> int:
    A, B = _read_sets(args, 2)
    d = tiling.decompose_tiling(A, B, args.modulus, args.p)
    results = {
        "offsets": list(d.offsets),
        "parts": [format_set(part) for part in d.parts],
        "reduced_complement": format_set(d.reduced_complement),
        "reduced_modulus": d.reduced_modulus,
        "equal_sizes": d.equal_sizes,
        "parts_tile": d.parts_tile,
        "equal_support": d.equal_support,
        "support_relation": d.support_relation,
    }
    inputs = {"A": format_set(A), "B": format_set(B), "M": args.modulus, "p": args.p}
    return _emit(args, "decompose", inputs, results, "valid" if d.valid else "invalid", EXIT_OK if d.valid else EXIT_FALSE)


def corpus_records(M: int) -> list[dict]:
    out = []
    for A, B in tiling.enumerate_tilings(M):
        ca, cb = _conditions(A), _conditions(B)
        out.append({
            "M": M,
            "A": format_set(A),
            "B": format_set(B),
            "S_A": ca["S_A"],
            "S_B": cb["S_A"],
            "T1_A": ca["T1"]["holds"],
            "T1_B": cb["T1"]["holds"],
            "T2_A": ca["T2"]["holds"],
            "T2_B": cb["T2"]["holds"],
        })
    return out


def read_corpus(path) -> list[dict]:
    """Load a corpus file back; A and B become tuples again."""
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                rec = json.loads(line)
                rec["A"], rec["B"] = parse_set(rec["A"]), parse_set(rec["B"])
                records.append(rec)
    return records


def cmd_corpus(args) -> int:
    moduli = list(range(1, args.max_modulus + 1))
    for M in moduli:
        if not tiling.is_good_cyclic(M):
            raise UsageError(f"exhaustive enumeration is not supported for M={M}")
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            batches = list(pool.map(corpus_records, moduli))
    else:
        batches = [corpus_records(M) for M in moduli]
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            for batch in batches:
                for rec in batch:
                    fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc.strerror}") from None
    counts = {str(M): len(b) for M, b in zip(moduli, batches)}
    results = {"output": str(args.output), "records": sum(counts.values()), "per_modulus": counts}
    return _emit(args, "corpus", {"max_modulus": args.max_modulus}, results, f"wrote {results['records']} records", EXIT_OK)


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zmtiling", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, nsets, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--quiet", action="store_true", help="print only the verdict line")
        if nsets:
            sp.add_argument("sets", nargs="*", metavar="SET", help="set literal such as '{0,2,-5}'")
            sp.add_argument("--a-file", help="read set A from a file")
            if nsets > 1:
                sp.add_argument("--b-file", help="read set B from a file")
        return sp

    sp = add("verify", cmd_verify, 2, "check A (+) B = Z/MZ three ways")
    sp.add_argument("-M", "--modulus", type=_positive, required=True)

    add("conditions", cmd_conditions, 1, "S_A and the T1/T2 conditions")

    sp = add("identity", cmd_identity, 2, "both sides of the spectral identity at modulus N")
    sp.add_argument("-N", "--n", type=_positive, required=True)

    sp = add("constant", cmd_constant, 2, "the c-independent quantity for a tiling; sweeps c unless --c is given")
    sp.add_argument("-M", "--modulus", type=_positive, required=True)
    sp.add_argument("-N", "--n", type=_positive, required=True)
    sp.add_argument("--c", type=int)

    sp = add("search", cmd_search, 1, "search complements of A over M = |A|, 2|A|, ...")
    sp.add_argument("--max-modulus", type=_positive, required=True)
    sp.add_argument("--limit", type=_positive, default=1)
    sp.add_argument("--jobs", type=_positive, default=1)

    sp = add("theorem1", cmd_theorem1, 2, "check the three-prime T2 statement on a tiling")
    for name in ("p", "q", "r"):
        sp.add_argument(f"-{name}", type=_positive, required=True)

    sp = add("decompose", cmd_decompose, 2, "split a tiling with B in pZ by residues mod p")
    sp.add_argument("-M", "--modulus", type=_positive, required=True)
    sp.add_argument("-p", type=_positive, required=True)

    sp = add("corpus", cmd_corpus, 0, "write all tilings with M <= max_modulus as JSON lines")
    sp.add_argument("--max-modulus", type=_positive, required=True)
    sp.add_argument("-o", "--output", required=True)
    sp.add_argument("--jobs", type=_positive, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"zmtiling {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    kcritical factor check   -g G6 -b B [--f 3,1,1]
    kcritical critical check -g G6|--file F -b B -k K [--method criterion|direct|both]
    kcritical extremal build --family parts|cluster|star|G2|G3 ...
    kcritical spectral radius   (-g G6 | --family ...)
    kcritical spectral quotient (--cubic B2|Bstar|B3 ... | -g G6 --partition 0,1/2,3)
    kcritical verify thm11|thm12 --b B --k K --delta D --n N --samples S --seed X
    kcritical verify identities
    kcritical graph6 roundtrip (-g G6 | --file F)

Exit status: 0 success, 1 counterexample or failed invariant, 2 usage or
parameter error, 3 capacity error. Results are one JSON object per line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterator

from . import factors, harness, identities
from .errors import CapacityError, InvariantViolation, KCriticalError, PreconditionError
from .families import (
    ExtremalParams,
    build_cluster_join,
    build_G2,
    build_G3,
    build_G_star,
    build_parts,
)
from .graph import Graph
from .graph6 import emit_graph6, graph6_str, parse_graph6, read_graph6_lines
from .spectral import Partition, char_cubic, family_quotient, quotient_matrix, spectral_radius

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _add_graph_source(p, family: bool = True):
    p.add_argument("-g", "--graph", help="graph6 string, or '-' to read lines from stdin")
    p.add_argument("--file", help="file with one graph6 line per graph")
    if family:
        _add_family_args(p)


def _add_family_args(p):
    p.add_argument("--family", choices=["parts", "cluster", "star", "G2", "G3"])
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--parts", type=_ints)
    p.add_argument("--delta", type=int)


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="kcritical", description=__doc__.split("\n\n")[0])
    top.add_argument("--format", choices=["json", "csv", "plain"], default="json")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "plain"], default=argparse.SUPPRESS)
    sub = top.add_subparsers(dest="group", required=True, parser_class=_Parser)

    fac = sub.add_parser("factor").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = fac.add_parser("check", parents=[common])
    _add_graph_source(p)
    p.add_argument("-b", "--b", type=int, default=1)
    p.add_argument("--f", type=_ints, help="per-vertex odd upper bounds instead of a uniform b")

    crit = sub.add_parser("critical").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = crit.add_parser("check", parents=[common])
    _add_graph_source(p)
    p.add_argument("-b", "--b", type=int, required=True)
    p.add_argument("-k", "--k", type=int, required=True)
    p.add_argument("--method", choices=["criterion", "direct", "both"], default="criterion")

    ext = sub.add_parser("extremal").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = ext.add_parser("build", parents=[common])
    _add_family_args(p)
    p.add_argument("-b", "--b", type=int)
    p.add_argument("-k", "--k", type=int)

    spec = sub.add_parser("spectral").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = spec.add_parser("radius", parents=[common])
    _add_graph_source(p)
    p.add_argument("-b", "--b", type=int)
    p.add_argument("-k", "--k", type=int)
    p.add_argument("--tol", type=float, default=1e-10)
    p = spec.add_parser("quotient", parents=[common])
    _add_graph_source(p, family=False)
    p.add_argument("--partition", help="blocks separated by '/', vertices by ','")
    p.add_argument("--cubic", choices=["B2", "Bstar", "B3"])
    for name in ("n", "b", "k", "delta", "s"):
        p.add_argument(f"--{name}", type=int)

    ver = sub.add_parser("verify").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name in ("thm11", "thm12"):
        p = ver.add_parser(name, parents=[common])
        p.add_argument("--b", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--delta", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--samples", type=int, default=500)
        p.add_argument("--seed", type=int, required=True)
        p.add_argument("--jsonl", help="write one verdict per line to this file")
    p = ver.add_parser("identities", parents=[common])
    p.add_argument("--corrected-g1", action="store_true",
                   help="use g1 with its constant term reduced by 2")

    g6 = sub.add_parser("graph6").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = g6.add_parser("roundtrip", parents=[common])
    _add_graph_source(p, family=False)
    return top


def _caps(err) -> tuple[int, int]:
    raw = os.environ.get("OVERRIDE_CAPS")
    if not raw:
        return factors.FACTOR_CAP, factors.DEFICIENCY_CAP
    cap = int(raw)
    print(f"warning: OVERRIDE_CAPS={cap} raises enumeration caps (defaults "
          f"{factors.FACTOR_CAP}/{factors.DEFICIENCY_CAP})", file=err)
    return max(cap, factors.FACTOR_CAP), max(cap, factors.DEFICIENCY_CAP)


def _family_graph(a) -> Graph:
    fam = a.family
    if fam == "parts":
        return build_parts(_need(a, "s"), _need(a, "parts"))
    if fam == "cluster":
        return build_cluster_join(_need(a, "n"), _need(a, "s"), _need(a, "t"), _need(a, "p"))
    if fam == "star":
        return build_G_star(ExtremalParams(_need(a, "n"), _need(a, "b"), _need(a, "k"), _need(a, "delta")))
    if fam == "G2":
        return build_G2(_need(a, "n"), _need(a, "b"), _need(a, "k"), _need(a, "s"))
    return build_G3(_need(a, "n"), _need(a, "b"), _need(a, "k"), _need(a, "s"), _need(a, "delta"))


def _need(a, name):
    val = getattr(a, name, None)
    if val is None:
        raise _UsageError(f"--{name} is required here")
    return val


def _graphs(a, stdin) -> Iterator[Graph]:
    sources = [x for x in (a.graph, a.file, getattr(a, "family", None)) if x is not None]
    if len(sources) != 1:
        raise _UsageError("give exactly one graph source (-g, --file or --family)")
    if a.graph == "-":
        yield from read_graph6_lines(stdin)
    elif a.graph is not None:
        yield parse_graph6(a.graph)
    elif a.file is not None:
        with open(a.file, "rb") as fh:
            yield from read_graph6_lines(fh)
    else:
        yield _family_graph(a)


def _emit(out, fmt: str, obj: dict):
    if fmt == "plain":
        out.write(" ".join(f"{k}={obj[k]}" for k in sorted(obj)) + "\n")
    else:
        out.write(json.dumps(obj, sort_keys=True) + "\n")


def _cmd_factor(a, out, err, stdin) -> int:
    fcap, _ = _caps(err)
    for g in _graphs(a, stdin):
        upper = a.f if a.f is not None else a.b
        found = factors.has_odd_factor(g, upper, cap=fcap)
        _emit(out, a.format, {"graph6": graph6_str(g), "b": a.b if a.f is None else None, "f": a.f,
                              "hasFactor": found is not None,
                              "factor": [list(e) for e in found.edges] if found else None})
    return EXIT_OK


def _cmd_critical(a, out, err, stdin) -> int:
    fcap, dcap = _caps(err)
    params = factors.FactorParams(a.b, a.k)
    status = EXIT_OK
    for g in _graphs(a, stdin):
        rec = {"graph6": graph6_str(g), "b": a.b, "k": a.k, "method": a.method}
        if a.method in ("criterion", "both"):
            ok, cert = factors.is_k_critical(g, params, cap=dcap)
            rec["criterion"] = ok
            rec["certificate"] = cert.to_json() if cert else None
        if a.method in ("direct", "both"):
            ok, X = factors.is_k_critical_direct(g, params, cap=fcap)
            rec["direct"] = ok
            rec["failingX"] = list(X) if X else None
        if a.method == "both":
            rec["agree"] = rec["criterion"] == rec["direct"]
            if not rec["agree"]:
                status = EXIT_FAIL
                _emit(err, "json", {"reproducer": {"graph6": rec["graph6"], "b": a.b, "k": a.k}})
        _emit(out, a.format, rec)
    return status


def _cmd_extremal(a, out, err, stdin) -> int:
    g = _family_graph(a) if a.family else None
    if g is None:
        raise _UsageError("--family is required")
    _emit(out, a.format, {"family": a.family, "graph6": graph6_str(g), "n": g.n, "e": g.e,
                          "minDegree": g.min_degree() if g.n else None})
    return EXIT_OK


def _cmd_spectral(a, out, err, stdin) -> int:
    if a.cmd == "radius":
        for g in _graphs(a, stdin):
            _emit(out, a.format, {"graph6": graph6_str(g), "rho": spectral_radius(g, a.tol)})
        return EXIT_OK
    if a.cubic:
        closed = char_cubic(a.cubic, _need(a, "n"), _need(a, "b"), _need(a, "k"), a.delta, a.s)
        g, computed = family_quotient(a.cubic, a.n, a.b, a.k, a.delta, a.s)
        rec = closed.to_json()
        rec["graph6"] = graph6_str(g)
        rec["matchesGraph"] = computed.coeffs == closed.coeffs and computed.matrix == closed.matrix
        rec["rho"] = spectral_radius(g)
        _emit(out, a.format, rec)
        return EXIT_OK if rec["matchesGraph"] else EXIT_FAIL
    if not a.partition:
        raise _UsageError("give --cubic or -g with --partition")
    blocks = tuple(tuple(_ints(blk)) for blk in a.partition.split("/"))
    for g in _graphs(a, stdin):
        q = quotient_matrix(g, Partition(blocks))
        rec = q.to_json()
        rec["graph6"] = graph6_str(g)
        _emit(out, a.format, rec)
    return EXIT_OK


def _cmd_verify(a, out, err, stdin) -> int:
    if a.cmd == "identities":
        return _verify_identities(a, out)
    mode = "size" if a.cmd == "thm11" else "spectral"
    verdicts = harness.sweep(a.b, a.k, a.delta, a.n, mode, a.samples, a.seed)
    if a.jsonl:
        with open(a.jsonl, "w") as fh:
            harness.write_jsonl(verdicts, fh)
    counts = harness.summary(verdicts)
    tight = harness.tightness(a.b, a.k, a.delta, mode, n=a.n)
    row = {"mode": mode, "b": a.b, "k": a.k, "delta": a.delta, "n": a.n, "samples": a.samples, **counts}
    if a.format == "csv":
        out.write(harness.summary_csv([row]))
    else:
        row.update(seed=a.seed, tightness=tight["classification"],
                   counterexamples=[v.graph6 for v in verdicts if v.classification == harness.COUNTEREXAMPLE])
        _emit(out, a.format, row)
    bad = counts[harness.COUNTEREXAMPLE] or tight["classification"] != harness.EXTREMAL
    return EXIT_FAIL if bad else EXIT_OK


def _distinct_case3():
    return sorted({p[:4] for p in identities.grid_case3()})


IDENTITY_SUITE = {
    "identity_3_4": (identities.verify_identity_3_4, lambda: identities.grid_case3()),
    "g_closed_form": (identities.verify_g_closed_form, _distinct_case3),
    "g_monotone": (identities.verify_g_monotone, _distinct_case3),
    "identity_4_5": (identities.verify_identity_4_5, lambda: identities.grid_any_s()),
    "f1_chain": (identities.verify_f1_chain, lambda: identities.grid_case1_spectral()),
    "identity_4_8": (identities.verify_identity_4_8, lambda: identities.grid_case3()),
    "phiB3_derivative_chain": (identities.verify_phiB3_derivative_chain, identities.grid_case3_spectral),
    "g1_chain": (identities.verify_g1_chain, identities.grid_case3_spectral),
}


def run_identity_suite(corrected_g1: bool = False) -> dict[str, dict]:
    """Counts of passed / failed / not-applicable points for each verifier."""
    results = {}
    for name, (fn, grid) in IDENTITY_SUITE.items():
        counts = {"passed": 0, "failed": 0, "notApplicable": 0}
        for point in grid():
            try:
                if name == "identity_4_8":
                    ok = fn(*point, corrected=corrected_g1)
                else:
                    ok = fn(*point)
            except PreconditionError:
                counts["notApplicable"] += 1
                continue
            counts["passed" if ok else "failed"] += 1
        results[name] = counts
    return results


def _verify_identities(a, out) -> int:
    results = run_identity_suite(a.corrected_g1)
    status = EXIT_OK
    for name, counts in results.items():
        _emit(out, a.format, {"identity": name, "correctedG1": a.corrected_g1, **counts})
        if counts["failed"] or counts["passed"] == 0:
            status = EXIT_FAIL
    return status


def _cmd_graph6(a, out, err, stdin) -> int:
    status = EXIT_OK
    lines = []
    if a.graph == "-":
        lines = [ln.strip() for ln in stdin if ln.strip()]
    elif a.graph is not None:
        lines = [a.graph]
    elif a.file is not None:
        with open(a.file, "rb") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    else:
        raise _UsageError("give -g or --file")
    total = same = 0
    for ln in lines:
        raw = ln.encode("ascii") if isinstance(ln, str) else ln
        total += 1
        if emit_graph6(parse_graph6(raw)) == raw:
            same += 1
        else:
            status = EXIT_FAIL
    _emit(out, a.format, {"lines": total, "byteExact": same})
    return status


def main(argv=None, stdout=None, stderr=None, stdin=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    stdin = stdin or sys.stdin
    try:
        a = build_parser().parse_args(argv)
        handler = {"factor": _cmd_factor, "critical": _cmd_critical, "extremal": _cmd_extremal,
                   "spectral": _cmd_spectral, "verify": _cmd_verify, "graph6": _cmd_graph6}[a.group]
        return handler(a, out, err, stdin)
    except _UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=err)
        return EXIT_CAPACITY
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=err)
        return EXIT_FAIL
    except KCriticalError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())

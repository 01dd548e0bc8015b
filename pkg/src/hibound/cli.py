"""Command-line entry point: ``hibound {gen,bound,exact,verify,examples}``.

Exit codes: 0 success, 1 invariant violation or failed example check,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import hypergraph as hg
from .alpha import SolverConfig, alpha_exact
from .bounds import BOUND_NAMES, BoundReport, NotApplicable, compute_report, normalize_selection
from .errors import HiboundError
from .io import format_report, read_hypergraph, serialize_hypergraph
from .verify import SweepSpec, reproduce_worked_examples, run_sweep

FAMILIES = ("complete", "empty", "minus-one", "uniform", "regular")


class _UsageError(Exception):
    pass


def _span(text: str) -> tuple[int, int]:
    """Parse ``a:b`` (inclusive) or a single integer."""
    try:
        if ":" in text:
            a, b = text.split(":", 1)
            return int(a), int(b)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A:B, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hibound", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a hypergraph file")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("-n", type=int, required=True)
    g.add_argument("-k", type=int, required=True)
    g.add_argument("-m", type=int, help="edge count (uniform)")
    g.add_argument("-d", type=int, help="vertex degree (regular)")
    g.add_argument("--max-attempts", type=int, default=50)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", help="output file (default: stdout)")

    b = sub.add_parser("bound", help="compute lower bounds for a hypergraph file")
    b.add_argument("--input", required=True)
    b.add_argument("--bounds", default="ell,turan,ts,ct,cps")
    b.add_argument("--alpha", action="store_true", help="also compute the exact alpha")
    b.add_argument("--budget", type=int, default=10**8)
    b.add_argument("--format", choices=("json", "csv", "table"), default="json")
    b.add_argument("--one-based", action="store_true")

    e = sub.add_parser("exact", help="exact independence number")
    e.add_argument("--input", required=True)
    e.add_argument("--budget", type=int, default=10**8)
    e.add_argument("--ell-pruning", action="store_true")
    e.add_argument("--format", choices=("json", "csv", "table"), default="json")
    e.add_argument("--one-based", action="store_true")

    v = sub.add_parser("verify", help="run a soundness / comparison sweep")
    v.add_argument("--n-range", type=_span, required=True, metavar="A:B")
    v.add_argument("--k-range", type=_span, required=True, metavar="A:B")
    v.add_argument("--m-policy", choices=("exhaustive", "random"), default="random")
    v.add_argument("--instances", type=int, default=1, help="instances per cell")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--alpha", action="store_true")
    v.add_argument("--alpha-budget", type=int, default=10**6)
    v.add_argument("--workers", type=int, help="default: $HIBOUND_THREADS or 1")
    v.add_argument("--format", choices=("json", "csv", "table"), default="table")
    v.add_argument("--out")

    sub.add_parser("examples", help="reproduce the worked comparison examples")
    return p


def _emit(text: str, out: str | None = None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_gen(a) -> int:
    if a.family == "complete":
        h = hg.complete(a.n, a.k)
    elif a.family == "empty":
        h = hg.empty(a.n, a.k)
    elif a.family == "minus-one":
        h = hg.complete_minus_one_edge(a.n, a.k)
    elif a.family == "uniform":
        if a.m is None:
            raise _UsageError("gen uniform needs -m")
        h = hg.random_uniform(a.n, a.k, a.m, seed=a.seed)
    else:
        if a.d is None:
            raise _UsageError("gen regular needs -d")
        h = hg.random_regular(a.n, a.k, a.d, seed=a.seed, max_attempts=a.max_attempts)
    _emit(serialize_hypergraph(h), a.out)
    return 0


def _soundness_failed(r: BoundReport) -> bool:
    if r.alpha is None or not r.alpha_exhausted:
        return False
    return any(v > r.alpha for v in r.present().values())


def _cmd_bound(a) -> int:
    h = read_hypergraph(a.input, one_based=a.one_based)
    which = normalize_selection(a.bounds.split(","))
    r = compute_report(h, which, with_alpha=a.alpha, solver_config=SolverConfig(a.budget))
    _emit(format_report(r, a.format))
    if _soundness_failed(r):
        print("error: a lower bound exceeds the exact independence number", file=sys.stderr)
        return 1
    return 0


def _cmd_exact(a) -> int:
    h = read_hypergraph(a.input, one_based=a.one_based)
    res = alpha_exact(h, SolverConfig(a.budget, use_ell_pruning=a.ell_pruning))
    r = BoundReport(h.n, h.m, h.k, {b: NotApplicable("not requested") for b in BOUND_NAMES},
                    alpha=res.alpha, alpha_exhausted=res.exhausted,
                    witness=tuple(sorted(res.witness)), nodes_explored=res.nodes_explored)
    if not res.exhausted:
        r.warnings.append(f"alpha: node budget {a.budget} exceeded; value is a lower estimate")
    _emit(format_report(r, a.format))
    return 0


def _cmd_verify(a) -> int:
    spec = SweepSpec(a.n_range, a.k_range, a.m_policy, a.instances, a.seed,
                     a.alpha, a.alpha_budget)
    res = run_sweep(spec, workers=a.workers)
    text = {"json": res.to_json, "csv": res.to_csv, "table": res.to_table}[a.format]()
    _emit(text, a.out)
    if not res.ok:
        print(f"error: {len(res.violations)} violation(s)", file=sys.stderr)
        return 1
    return 0


def _cmd_examples(a) -> int:
    results = reproduce_worked_examples()
    for r in results:
        print(r.line())
    return 0 if all(r.passed for r in results) else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    handler = {"gen": _cmd_gen, "bound": _cmd_bound, "exact": _cmd_exact,
               "verify": _cmd_verify, "examples": _cmd_examples}[a.command]
    try:
        return handler(a)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (HiboundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

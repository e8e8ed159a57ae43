"""Command-line front end.

    hyperstar analyze --k 3 [--folded] [--checks metrics,aut,...] [--format json|text]
    hyperstar verify  --k-range 2..4 [--checks ...] [--format text|json]
    hyperstar export  --k 3 --format dot|edgelist [--out PATH]

Exit codes: 0 success, 1 verification failure, 2 bad parameters, 3 cap
exceeded, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import autsearch, cayley, checks, graphs
from .groups import CapExceeded

SCHEMA = 1

EXIT_OK, EXIT_FAIL, EXIT_PARAMS, EXIT_CAP, EXIT_IO = 0, 1, 2, 3, 4

ANALYSES = ("metrics", "aut", "transitivity", "cycles", "cayley")
DEFAULT_MAX_GROUP_ORDER = 10**6


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    k: int | None = None
    n: int | None = None
    folded: bool = False
    k_range: tuple[int, int] | None = None
    checks: tuple[str, ...] = ANALYSES
    output: str | None = None
    format: str = "json"
    max_vertices: int = autsearch.MAX_VERTICES
    max_group_order: int = DEFAULT_MAX_GROUP_ORDER
    k5_opt_in: bool = False
    extra: dict = field(default_factory=dict)

    @property
    def ks(self) -> list[int]:
        if self.k_range is not None:
            return list(range(self.k_range[0], self.k_range[1] + 1))
        return [self.k]

    def validate(self) -> None:
        if self.k_range is None and self.k is None:
            raise UsageError("--k or --k-range is required")
        for k in self.ks:
            if k is None or k < (1 if self.n is not None else 2):
                raise UsageError(f"k must be at least 2, got {k}")
        if self.n is not None:
            if self.k_range is not None:
                raise UsageError("--n cannot be combined with --k-range")
            if self.folded and self.n != 2 * self.k:
                raise UsageError(f"folded graphs need n = 2k, got n={self.n}, k={self.k}")
            if not 1 <= self.k <= self.n - 1 or self.n < 3:
                raise UsageError(f"need n >= 3 and 1 <= k <= n-1, got n={self.n}, k={self.k}")
        bad = set(self.checks) - set(ANALYSES)
        if bad:
            raise UsageError(f"unknown checks: {', '.join(sorted(bad))}")

    def check_caps(self) -> None:
        for k in self.ks:
            n = self.n if self.n is not None else 2 * k
            if n == 2 * k and k >= 5 and not self.k5_opt_in and needs_groups(self.checks):
                raise CapExceeded(f"k={k} group computations need --enable-k5")
            if needs_groups(self.checks) and checks_order_estimate(n, k) > self.max_group_order:
                raise CapExceeded(f"expected |Aut| for k={k} exceeds --max-group-order "
                                  f"{self.max_group_order}")
            from math import comb
            if comb(n, k) > self.max_vertices and needs_groups(self.checks):
                raise CapExceeded(f"C({n},{k}) = {comb(n, k)} vertices exceeds cap "
                                  f"{self.max_vertices}")


def needs_groups(which) -> bool:
    return bool(set(which) & {"aut", "transitivity", "cayley"})


def checks_order_estimate(n: int, k: int) -> int:
    """Order the structured group predicts, used to refuse work up front."""
    from math import factorial
    return 2 * factorial(2 * k - 1) if n == 2 * k else 0


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected A..B") from None
    if lo_i > hi_i:
        raise UsageError(f"empty range {text!r}")
    return lo_i, hi_i


def parse_checks(text: str | None) -> tuple[str, ...]:
    if not text:
        return ANALYSES
    items = [t.strip() for t in text.split(",") if t.strip()]
    if "all" in items:
        return ANALYSES
    return tuple(dict.fromkeys(items))


# -- analyses ---------------------------------------------------------------

def analyze(config: RunConfig) -> dict:
    k = config.k
    n = config.n if config.n is not None else 2 * k
    g = graphs.build(n, k, config.folded)
    report: dict = {"schema": SCHEMA, "graph": {"n": n, "k": k, "folded": config.folded}}
    if "metrics" in config.checks:
        report["metrics"] = graphs.metrics(g)
    aut = None
    if needs_groups(config.checks):
        aut = autsearch.automorphism_group(g, config.max_vertices)
    if "aut" in config.checks:
        block = autsearch.aut_report(g, aut)
        block["group"] = aut.report()
        report["aut"] = block
    if "transitivity" in config.checks:
        report["transitivity"] = {
            "vertex_transitive": autsearch.is_vertex_transitive(g, aut),
            "edge_transitive": autsearch.is_edge_transitive(g, aut),
            "arc_transitive": autsearch.is_arc_transitive(g, aut),
        }
    if "cycles" in config.checks and g.regular:
        report["cycles"] = cycle_summary(g)
    if "cayley" in config.checks:
        report["cayley"] = cayley.is_cayley(g, aut).as_dict()
    return report


def cycle_summary(g: graphs.HyperStarGraph) -> dict:
    """Distribution of cycle counts through 3-paths (6-cycles) and edges
    (4-cycles)."""
    def histogram(values) -> dict:
        out: dict[str, int] = {}
        for v in values:
            out[str(v)] = out.get(str(v), 0) + 1
        return dict(sorted(out.items()))

    paths = graphs.simple_paths(g, 3)
    out = {"six_cycles_per_3path": histogram(graphs.cycles_through_path(g, p, 6) for p in paths),
           "four_cycles_per_edge": histogram(graphs.cycles_through_path(g, e, 4) for e in g.edges())}
    return out


def verify(config: RunConfig) -> tuple[list[checks.Check], int]:
    results = checks.run(config.ks, config.checks)
    failed = sum(not c.passed for c in results)
    return results, EXIT_FAIL if failed else EXIT_OK


def export(config: RunConfig) -> str:
    k = config.k
    n = config.n if config.n is not None else 2 * k
    g = graphs.build(n, k, config.folded)
    if config.format == "dot":
        return graphs.to_dot(g)
    if config.format == "edgelist":
        return graphs.to_edgelist(g)
    if config.format == "json":
        return json.dumps(graphs.metrics(g), sort_keys=True, indent=2) + "\n"
    raise UsageError(f"export supports dot, edgelist or json, not {config.format}")


# -- entry point ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperstar", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats, default_format):
        p.add_argument("--k", type=int)
        p.add_argument("--n", type=int, help="ground-set size for non-regular HS(n,k)")
        p.add_argument("--folded", action="store_true")
        p.add_argument("--checks", help="comma list of " + ",".join(ANALYSES) + ",all")
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--out", help="output path (default stdout)")
        p.add_argument("--max-group-order", type=int)
        p.add_argument("--enable-k5", action="store_true",
                       help="allow k=5 group computations (a few seconds; budget 30 min)")

    common(sub.add_parser("analyze", help="report metrics and group data for one graph"),
           ("json", "text"), "json")
    vp = sub.add_parser("verify", help="run the verification checks")
    common(vp, ("text", "json"), "text")
    vp.add_argument("--k-range", help="inclusive range such as 2..4")
    common(sub.add_parser("export", help="write the graph as DOT or an edge list"),
           ("dot", "edgelist", "json"), "edgelist")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cap = args.max_group_order
    if cap is None:
        cap = int(os.environ.get("HYPERSTAR_CAP_ORDER", DEFAULT_MAX_GROUP_ORDER))
    k_range = getattr(args, "k_range", None)
    cfg = RunConfig(
        k=args.k,
        n=args.n,
        folded=args.folded,
        k_range=parse_range(k_range) if k_range else None,
        checks=parse_checks(args.checks),
        output=args.out,
        format=args.format,
        max_group_order=cap,
        k5_opt_in=args.enable_k5,
    )
    cfg.validate()
    return cfg


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _text_report(report: dict) -> str:
    lines = []

    def walk(prefix: str, value) -> None:
        if isinstance(value, dict):
            for key in sorted(value):
                walk(f"{prefix}.{key}" if prefix else key, value[key])
        else:
            lines.append(f"{prefix}: {json.dumps(value)}")

    walk("", report)
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARAMS if exc.code else EXIT_OK
    try:
        cfg = config_from_args(args)
        if args.command == "export":
            if cfg.folded and cfg.n is None and cfg.k is None:
                raise UsageError("--k is required")
            text = export(cfg)
            code = EXIT_OK
        else:
            cfg.check_caps()
            if args.command == "analyze":
                if cfg.k_range is not None:
                    raise UsageError("analyze takes a single --k")
                report = analyze(cfg)
                text = (json.dumps(report, sort_keys=True, indent=2) + "\n"
                        if cfg.format == "json" else _text_report(report))
                code = EXIT_OK
            else:
                if cfg.n is not None:
                    raise UsageError("verify works on regular graphs; drop --n")
                results, code = verify(cfg)
                if cfg.format == "json":
                    text = json.dumps({"schema": SCHEMA, "ks": cfg.ks,
                                       "passed": code == EXIT_OK,
                                       "checks": [c.as_dict() for c in results]},
                                      sort_keys=True, indent=2) + "\n"
                else:
                    failed = sum(not c.passed for c in results)
                    text = "".join(c.line() + "\n" for c in results)
                    text += f"{len(results) - failed}/{len(results)} checks passed\n"
    except UsageError as exc:
        print(f"hyperstar: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except CapExceeded as exc:
        print(f"hyperstar: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"hyperstar: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    try:
        _emit(text, cfg.output)
    except OSError as exc:
        print(f"hyperstar: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())

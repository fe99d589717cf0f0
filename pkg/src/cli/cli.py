"""
Command-line front end: `tbn <subcommand> ...`.

Every subcommand reads graphs and divisors from JSON files and writes a
versioned JSON report (TSV for sweep tables). Exit codes: 0 on success, 1 on
a domain error, 2 on a usage error.
"""
import argparse
import inspect
import json
import logging
import sys
import time
from pathlib import Path
from typing import Optional, Sequence, Tuple

import pandas as pd

from config.config import (OUTPUT_DIR, SCHEMA_VERSION, TBN_BUDGET, TBN_JOBS, TBN_LOG_LEVEL, TBN_SEED,
                           TOOL_VERSION)
from src.errors import TropicalError
from src.graph_core import (Divisor, MetricGraph, canonical_divisor, dump_graph, lattice_denominator,
                            load_divisor, load_graph, parse_rational_list)
from src.graph_core.generators import FAMILIES, generate
from src.graph_core.io import divisor_to_json, graph_to_model
from src.jacobian_bn import FamilySpec, bn_rank, family_sweep, linsys_enum, scan_Wrd
from src.models import Command, Report
from src.oracle import cross_check_batch, finite_rank, subdivide
from src.rank import a_rank, rank, user_set
from src.reduction import canonical_basepoint, is_equivalent, oracle_reduce, reduce

logger = logging.getLogger(__name__)


# ============ Parsing ============

def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tbn", description="Tropical Brill-Noether toolkit")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def command(name: str, help_text: str, graph: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if graph:
            p.add_argument("--graph", type=str, required=True, help="Graph JSON file")
        p.add_argument("--out", type=str, help="Write the report (or generated graph) here")
        p.add_argument("--save", action="store_true", help="Also write the report under the report directory")
        p.add_argument("--format", choices=["json", "tsv"], default="json")
        p.add_argument("--budget", type=int, default=TBN_BUDGET, help="Cap on lattice enumeration sizes")
        p.add_argument("--verbose", action="store_true")
        return p

    p = command("gen", "Generate a named graph family", graph=False)
    p.add_argument("--family", type=str, required=True)
    p.add_argument("--g", type=int)
    p.add_argument("--lengths", type=str, help="Comma separated single edge lengths, e.g. 5,4,3")
    p.add_argument("--pair-lengths", dest="pair_lengths", type=str)
    p.add_argument("--t", type=str)

    command("genus", "Print the first Betti number")
    command("canonical", "Print the canonical divisor")

    p = command("reduce", "Reduce a divisor at a basepoint")
    p.add_argument("--divisor", type=str, required=True)
    p.add_argument("--basepoint", type=str, help="Point spec such as v1 or e3@3/2")
    p.add_argument("--oracle", action="store_true", help="Reduce on the lattice subdivision instead")

    p = command("equiv", "Decide linear equivalence")
    p.add_argument("--d1", type=str, required=True)
    p.add_argument("--d2", type=str, required=True)

    p = command("rank", "Baker-Norine rank")
    p.add_argument("--divisor", type=str, required=True)
    p.add_argument("--oracle", action="store_true", help="Compute on the finite subdivision")
    p.add_argument("-q", dest="q", type=int, help="Subdivision denominator for --oracle")

    p = command("arank", "Rank relative to a finite set of points")
    p.add_argument("--divisor", type=str, required=True)
    p.add_argument("--points", type=str, required=True, help="Comma separated point specs")

    p = command("linsys", "Enumerate the lattice points of a complete linear system")
    p.add_argument("--divisor", type=str, required=True)
    p.add_argument("-q", dest="q", type=int, required=True)

    for name, help_text in (("scan-wrd", "Grid scan of W^r_d"), ("bn-rank", "Brill-Noether rank certificate")):
        p = command(name, help_text)
        p.add_argument("-r", dest="r", type=int, required=True)
        p.add_argument("-d", dest="d", type=int, required=True)
        p.add_argument("-q", dest="q", type=int, required=True)
        p.add_argument("--jobs", type=int, default=TBN_JOBS)
        if name == "bn-rank":
            p.add_argument("--points", type=str, help="Witness to try first, e.g. v1,w1")

    p = command("sweep", "Scan a one-parameter family", graph=False)
    p.set_defaults(format="tsv")
    p.add_argument("--family", type=str, required=True)
    p.add_argument("--ts", type=str, required=True, help="Comma separated rationals")
    p.add_argument("--lengths", type=str)
    p.add_argument("-r", dest="r", type=int, required=True)
    p.add_argument("-d", dest="d", type=int, required=True)
    p.add_argument("-q", dest="q", type=int, required=True)
    p.add_argument("--jobs", type=int, default=TBN_JOBS)

    p = command("cross-check", "Compare metric ranks with the finite-graph oracle")
    p.add_argument("-q", dest="q", type=int, default=1)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=TBN_SEED)
    return parser


def parse(argv: Sequence[str]) -> Command:
    """Parse a command line; usage errors exit with code 2."""
    args = _parser().parse_args(list(argv))
    return Command(**{k: v for k, v in vars(args).items() if v is not None})


# ============ Execution ============

def _divisor(graph: MetricGraph, path: str) -> Divisor:
    return load_divisor(graph, path)


def _point_list(graph: MetricGraph, text: str) -> list:
    return [graph.parse_point(part) for part in text.split(",") if part.strip()]


def _gen(cmd: Command):
    func = FAMILIES.get(cmd.family.replace("-", "_"))
    offered = {
        "g": cmd.g,
        "lengths": parse_rational_list(cmd.lengths) if cmd.lengths else None,
        "pair_lengths": parse_rational_list(cmd.pair_lengths) if cmd.pair_lengths else None,
        "t": cmd.t,
    }
    accepted = inspect.signature(func).parameters if func is not None else {}
    graph = generate(cmd.family, **{k: v for k, v in offered.items() if v is not None and k in accepted})
    if cmd.out:
        dump_graph(graph, cmd.out)
    return graph_to_model(graph).model_dump()


def _sweep(cmd: Command):
    params = {"lengths": parse_rational_list(cmd.lengths)} if cmd.lengths else {}
    spec = FamilySpec(cmd.family, parse_rational_list(cmd.ts), params)
    table = family_sweep(spec, cmd.r, cmd.d, cmd.q, budget=cmd.budget, jobs=cmd.jobs, skip_errors=True)
    return table.to_dict(orient="records")


def _dispatch(cmd: Command):
    if cmd.subcommand == "gen":
        return _gen(cmd)
    if cmd.subcommand == "sweep":
        return _sweep(cmd)

    graph = load_graph(cmd.graph)
    budget = cmd.budget or TBN_BUDGET
    jobs = cmd.jobs or TBN_JOBS

    if cmd.subcommand == "genus":
        return {"genus": graph.genus}
    if cmd.subcommand == "canonical":
        return divisor_to_json(canonical_divisor(graph))
    if cmd.subcommand == "reduce":
        d = _divisor(graph, cmd.divisor)
        q = graph.parse_point(cmd.basepoint) if cmd.basepoint else canonical_basepoint(graph)
        reduced = oracle_reduce(d, q) if cmd.oracle else reduce(d, q).divisor
        return {"basepoint": str(q), "reduced": divisor_to_json(reduced)}
    if cmd.subcommand == "equiv":
        return {"equivalent": is_equivalent(_divisor(graph, cmd.d1), _divisor(graph, cmd.d2))}
    if cmd.subcommand == "rank":
        d = _divisor(graph, cmd.divisor)
        if cmd.oracle:
            finite, _ = subdivide(graph, cmd.q or lattice_denominator(graph, d.support))
            return {"rank": finite_rank(finite.divisor(d), budget), "oracle": True}
        return {"rank": rank(d, budget)}
    if cmd.subcommand == "arank":
        d = _divisor(graph, cmd.divisor)
        return {"a_rank": a_rank(d, user_set(graph, _point_list(graph, cmd.points)), budget)}
    if cmd.subcommand == "linsys":
        members = linsys_enum(_divisor(graph, cmd.divisor), cmd.q, budget)
        return {"q": cmd.q, "count": len(members), "divisors": [divisor_to_json(m) for m in members]}
    if cmd.subcommand == "scan-wrd":
        return scan_Wrd(graph, cmd.r, cmd.d, cmd.q, budget=budget, jobs=jobs).to_report().model_dump()
    if cmd.subcommand == "bn-rank":
        hints = [Divisor.from_points(graph, _point_list(graph, cmd.points))] if cmd.points else []
        certificate = bn_rank(graph, cmd.r, cmd.d, cmd.q, budget=budget, jobs=jobs, hints=hints)
        return certificate.to_report().model_dump()
    if cmd.subcommand == "cross-check":
        failures = cross_check_batch(graph, cmd.q, cmd.trials, seed=cmd.seed)
        return {"trials": cmd.trials, "failures": failures}
    raise ValueError(f"Unhandled subcommand {cmd.subcommand}")


def execute(cmd: Command) -> Tuple[Report, int]:
    start = time.perf_counter()
    report = Report(
        schema_version=SCHEMA_VERSION,
        tool_version=TOOL_VERSION,
        subcommand=cmd.subcommand,
        inputs=cmd.model_dump(exclude_none=True, exclude={"verbose", "out", "save", "format"}),
    )
    code = 0
    try:
        report.result = _dispatch(cmd)
    except TropicalError as exc:
        logger.error("[execute] %s: %s", type(exc).__name__, exc)
        report.error = type(exc).__name__
        report.message = str(exc)
        code = 1
    report.timing_seconds = round(time.perf_counter() - start, 6)
    return report, code


# ============ Output ============

def render(report: Report, fmt: str) -> str:
    if fmt == "tsv" and report.error is None and isinstance(report.result, list):
        return pd.DataFrame(report.result).to_csv(sep="\t", index=False)
    return json.dumps(report.model_dump(), indent=2, default=str) + "\n"


def saved_report_path(cmd: Command) -> Path:
    """Fresh file under OUTPUT_DIR named after the subcommand and the time."""
    ext = "tsv" if cmd.format == "tsv" and cmd.subcommand == "sweep" else "json"
    OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
    stamp = time.strftime("%Y%m%d-%H%M%S")
    path = OUTPUT_DIR / f"{cmd.subcommand}-{stamp}.{ext}"
    suffix = 1
    while path.exists():
        path = OUTPUT_DIR / f"{cmd.subcommand}-{stamp}-{suffix}.{ext}"
        suffix += 1
    return path


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cmd = parse(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(
        level=logging.INFO if cmd.verbose else TBN_LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    report, code = execute(cmd)
    text = render(report, cmd.format)
    if cmd.out and cmd.subcommand != "gen":
        Path(cmd.out).write_text(text)
    else:
        sys.stdout.write(text)
    if cmd.save:
        path = saved_report_path(cmd)
        path.write_text(text)
        logger.info("[main] report saved to %s", path)
    return code

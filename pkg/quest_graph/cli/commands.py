"""
Command Line Interface
The run, bench and graph subcommands
"""

import argparse
import csv
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .dot_export import right_move_labeler, write_trace_dot
from .machine_files import CNF_GRAMMAR, DPDA, FSM, LM, TM, MachineFile, load_machine, parse_input
from ..cgsim.analysis import growth_fit, plot_growth, rqdp_ratio_band
from ..cgsim.report import CSV_FIELDS, SimReport
from ..cgsim.simulate import sim_fqdp, sim_questgraph, sim_rqdp
from ..compgraph.bmcg import bmcg_from_dag, bmcg_from_mcg, total_proxy_count
from ..compgraph.dag import Dag
from ..compgraph.mcg import Mcg, mcg_from_dag
from ..constructions.cfl_nfqdp import simulate_cfl_on_nfqdp
from ..constructions.conformance import BUDGET, ConformanceResult
from ..constructions.dpda_fqdp import simulate_dpda_on_fqdp
from ..constructions.lm_fsm import simulate_fsm_on_lm, simulate_lm_on_fsm
from ..constructions.tm_questgraph import simulate_tm_on_questgraph
from ..constructions.tm_rqdp import simulate_tm_on_rqdp
from ..database.db_manager import ResultsManager
from ..utils.config import Config
from ..utils.errors import CycleError, MachineFileError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

VARIANTS = ("qg", "rqdp", "fqdp")


def _run_lm(machine_file: MachineFile, symbols: List[str], budget: Optional[int]) -> ConformanceResult:
    if machine_file.kind == FSM:
        return simulate_fsm_on_lm(machine_file.machine, symbols)
    extras = machine_file.extras
    missing = [k for k in ("input_alphabet", "initial_context", "accepting_tokens") if k not in extras]
    if missing:
        raise MachineFileError("an lm file run as lm-fsm needs these fields", path=machine_file.path,
                               field=", ".join(missing))
    return simulate_lm_on_fsm(machine_file.machine, symbols, extras["input_alphabet"],
                              extras["initial_context"], extras["accepting_tokens"])


CONSTRUCTIONS: Dict[str, Tuple[Tuple[str, ...], Callable]] = {
    "tm-qg": ((TM,), lambda mf, s, b: simulate_tm_on_questgraph(mf.machine, s, b)),
    "tm-rqdp": ((TM,), lambda mf, s, b: simulate_tm_on_rqdp(mf.machine, s, b)),
    "dpda-fqdp": ((DPDA,), lambda mf, s, b: simulate_dpda_on_fqdp(mf.machine, s, b)),
    "cfl-nfqdp": ((CNF_GRAMMAR,), lambda mf, s, b: simulate_cfl_on_nfqdp(mf.machine, s, b)),
    "lm-fsm": ((FSM, LM), _run_lm),
}


def _int_list(text: str) -> List[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("the list of sizes is empty")
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("sizes must be positive")
    return values


def _variant_list(text: str) -> List[str]:
    values = [v.strip() for v in text.split(",") if v.strip()]
    unknown = [v for v in values if v not in VARIANTS]
    if not values or unknown:
        raise argparse.ArgumentTypeError(f"variants must be drawn from {', '.join(VARIANTS)}")
    return values


def cmd_run(args) -> int:
    """Run a construction and its oracle on one input"""
    try:
        machine_file = load_machine(args.machine)
        kinds, simulate = CONSTRUCTIONS[args.construction]
        if machine_file.kind not in kinds:
            raise MachineFileError(f"{args.construction} needs a {' or '.join(kinds)} machine, "
                                   f"got {machine_file.kind}", path=args.machine, field="kind")
        result = simulate(machine_file, parse_input(args.input), args.budget)
    except MachineFileError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    print(result.verdict_line())

    if args.trace_dot:
        if result.run is None or not result.run.trace:
            logger.warning(f"{args.construction} produced no rollout trace to export")
        else:
            labeler = right_move_labeler if args.construction == "tm-rqdp" else None
            write_trace_dot(result.run.trace, result.run.graph, args.trace_dot,
                            name=args.construction.replace("-", "_"), labeler=labeler)

    if result.status == BUDGET or result.oracle_status == BUDGET:
        return EXIT_BUDGET
    return EXIT_OK if result.agree else EXIT_DISAGREE


def bench_one(variant: str, n: int, c: int, cap: int) -> SimReport:
    """One simulator run on the n-node MCG"""
    mcg = Mcg.of_size(n)
    if variant == "qg":
        return sim_questgraph(bmcg_from_mcg(mcg, c))
    if variant == "rqdp":
        return sim_rqdp(mcg, c)
    return sim_fqdp(bmcg_from_mcg(mcg, c), cap)


def cmd_bench(args) -> int:
    """Sweep the simulators over MCG sizes and write one CSV row per run"""
    jobs = []
    for variant in args.variants:
        for n in args.N:
            if variant == "fqdp" and n > args.cap:
                message = f"fqdp at N={n} skipped: above the cap of {args.cap}"
                logger.warning(message)
                print(f"warning: {message}", file=sys.stderr)
                continue
            jobs.append((variant, n))

    with ThreadPoolExecutor(max_workers=max(1, args.workers)) as pool:
        reports = list(pool.map(lambda job: bench_one(job[0], job[1], args.C, args.cap), jobs))

    with open(args.out, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for report in reports:
            writer.writerow(report.csv_row())
    logger.info(f"Wrote {len(reports)} rows to {args.out}")

    print(f"{'variant':<8}{'N':>6}{'C':>4}{'raw_ops':>14}{'weighted':>16}")
    for report in reports:
        print(f"{report.variant:<8}{report.n:>6}{report.c:>4}{report.raw_ops:>14}{report.weighted_cost:>16.1f}")

    fits = []
    for variant in args.variants:
        group = [r for r in reports if r.variant == variant]
        if not group:
            continue
        try:
            fit = growth_fit(group, weighted=variant == "rqdp")
        except ValueError as e:
            print(f"{variant}: no fit ({e})")
        else:
            fits.append(fit)
            flag = ", super-polynomial" if fit.super_polynomial else ""
            print(f"{variant}: log-log slope {fit.slope:.3f}, residual {fit.residual:.3f}{flag}")
        if variant == "rqdp" and any(r.n >= 2 for r in group):
            print(f"rqdp: weighted / (N^2 log2 N) band {rqdp_ratio_band(group):.3f}")

    if args.plot and fits:
        plot_growth(fits, args.plot)
    if args.db:
        manager = ResultsManager(args.db)
        try:
            manager.add_reports(reports)
        finally:
            manager.close()
    return EXIT_OK


def cmd_graph(args) -> int:
    """Transform an edge-list DAG into its MCG or BMCG"""
    try:
        dag = Dag.from_edge_list(args.dag)
        if args.emit == "mcg":
            mcg = mcg_from_dag(dag)
            lines = [f"{s} {t}" for s, t in mcg.edges()] if len(mcg) > 1 else [mcg.terminal]
            stats = {"nodes": len(mcg), "edges": mcg.edge_count, "added_terminal": mcg.added_terminal}
        else:
            dag.validate()
            bmcg = bmcg_from_dag(dag, args.C)
            mcg = mcg_from_dag(dag)
            lines = bmcg.to_edge_list()
            stats = bmcg.stats()
    except CycleError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (MachineFileError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    closed, brute = total_proxy_count(len(mcg), args.C)
    stats.update(mcg_nodes=len(mcg), mcg_proxies_closed=closed, mcg_proxies_brute=brute)
    text = "\n".join(lines + [f"# {key}: {value}" for key, value in stats.items()]) + "\n"

    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info(f"Wrote {args.emit} to {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quest-graph", description=f"{Config.APP_NAME} {Config.APP_VERSION}")
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run a construction against its oracle")
    run.add_argument("construction", choices=sorted(CONSTRUCTIONS))
    run.add_argument("machine", help="machine JSON file")
    run.add_argument("input", help="input string; whitespace separates multi-character symbols")
    run.add_argument("--budget", type=int, default=None)
    run.add_argument("--trace-dot", metavar="PATH", default=None)
    run.set_defaults(handler=cmd_run)

    bench = commands.add_parser("bench", help="computation graph simulation sweep")
    bench.add_argument("out", help="CSV output path")
    bench.add_argument("--variants", type=_variant_list, default=list(VARIANTS))
    bench.add_argument("--N", type=_int_list, required=True)
    bench.add_argument("--C", type=int, default=Config.DEFAULT_BENCH_C)
    bench.add_argument("--cap", type=int, default=Config.DEFAULT_FQDP_CAP)
    bench.add_argument("--plot", metavar="PATH", default=None)
    bench.add_argument("--db", metavar="PATH", default=None)
    bench.add_argument("--workers", type=int, default=Config.BENCH_WORKERS)
    bench.set_defaults(handler=cmd_bench)

    graph = commands.add_parser("graph", help="DAG to MCG or BMCG")
    graph.add_argument("dag", help="edge-list file")
    graph.add_argument("--C", type=int, default=Config.DEFAULT_BENCH_C)
    graph.add_argument("--emit", choices=("mcg", "bmcg"), default="mcg")
    graph.add_argument("-o", "--output", default=None)
    graph.set_defaults(handler=cmd_graph)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments and dispatch; returns the exit code"""
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    return args.handler(args)

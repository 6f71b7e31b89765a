#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Command-line front-end.

    tree-ramsey density --input A.txt
    tree-ramsey search tree|regular|array|product|cartesian --input A.txt [--r R] ...
    tree-ramsey verify witness.json --input A.txt
    tree-ramsey ap-grid --input A.txt --r 2
    tree-ramsey markov validate|phi|roots|mu --input ...
    tree-ramsey random --k 2 --depth 4 --delta 1/2 --seed 7 --out A.txt

Exit status: 0 success, PASS or found; 1 exhaustive none or FAIL; 2 search
budget exhausted; 3 input error.
"""

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .cli_display import CLIDisplay, setup_display
from .config import Settings, load_settings, set_settings
from .errors import (AlphabetMismatchError, BudgetExhaustedError, PreconditionError,
                     TreeRamseyError)
from .formats import (AnySet, format_set, load_markov_file, parse_set_file, read_witness,
                      write_witness)
from .markov import (CommutingPair, find_markov_roots, labelled_tree_pair, mu_N_exact,
                     mu_N_monte_carlo, phi_integrals, roots_by_search, validate_pair)
from .search import (SearchBudget, SearchOutcome, SearchStatus, construct_tree_array, find_ap_grid,
                     find_arithmetic_subtree, find_cartesian_product, find_product_tree,
                     find_regular_embedding)
from .sets import (GridTreeSet, TreeSet, density_2d, density_sequence, occupied_grid,
                   random_grid_set, random_tree_set)
from .structures import (CartesianProductWitness, ProductTreeWitness, RegularEmbeddingWitness,
                         TreeArrayWitness, TreeWitness, verify_arithmetic_subtree,
                         verify_cartesian_product, verify_product_tree, verify_regular_embedding,
                         verify_tree_array)
from .templates import render
from .version import __version__

__all__ = ["RunConfig", "build_parser", "dispatch", "main", "parse_set_file", "write_witness"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NONE = 1
EXIT_BUDGET = 2
EXIT_INPUT = 3

COMMANDS = (
    "density", "random", "ap-grid", "verify",
    "search tree", "search regular", "search array", "search product", "search cartesian",
    "markov validate", "markov phi", "markov roots", "markov mu",
)


@dataclass(frozen=True)
class RunConfig:
    """One invocation: a subcommand plus its inputs and overrides."""

    command: str
    inputs: Tuple[str, ...] = ()
    witness: Optional[str] = None
    out: Optional[str] = None
    r: Optional[int] = None
    q: Optional[int] = None
    u: Optional[Tuple[int, int]] = None
    v: Optional[Tuple[int, int]] = None
    n_range: Optional[Tuple[int, int]] = None
    delta: Optional[Fraction] = None
    budget: Optional[int] = None
    time_budget: Optional[float] = None
    seed: Optional[int] = None
    samples: Optional[int] = None
    workers: Optional[int] = None
    deterministic: bool = True
    relaxed: bool = False
    states: Optional[Tuple[int, ...]] = None
    k: Optional[int] = None
    depth: Optional[int] = None
    dim: int = 2
    config: Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown subcommand {self.command!r}")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        command = args.command
        if command == "search":
            command = f"search {args.search_kind}"
        elif command == "markov":
            command = f"markov {args.markov_kind}"
        return cls(
            command=command,
            inputs=tuple(args.inputs or ()),
            witness=getattr(args, "witness", None),
            out=args.out,
            r=args.r,
            q=args.q,
            u=args.u,
            v=args.v,
            n_range=args.n_range,
            delta=args.delta,
            budget=args.budget,
            time_budget=args.time_budget,
            seed=args.seed,
            samples=args.samples,
            workers=args.workers,
            deterministic=args.deterministic,
            relaxed=args.relaxed,
            states=args.states,
            k=args.k,
            depth=args.depth,
            dim=args.dim,
            config=args.config,
        )

    @property
    def source(self) -> str:
        return ",".join(os.path.basename(p) for p in self.inputs) or "-"


# argument types

def _pair_arg(text: str) -> Tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
        raise argparse.ArgumentTypeError(f"expected 'a,b' with non-negative integers, got {text!r}")
    return int(parts[0]), int(parts[1])


def _range_arg(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        hi = lo
    if not lo.isdigit() or not hi.isdigit():
        raise argparse.ArgumentTypeError(f"expected 'lo..hi', got {text!r}")
    return int(lo), int(hi)


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational such as 1/2, got {text!r}")


def _states_arg(text: str) -> Tuple[int, ...]:
    parts = [p for p in text.split(",") if p.strip()]
    if not all(p.strip().isdigit() for p in parts):
        raise argparse.ArgumentTypeError(f"expected comma-separated state indices, got {text!r}")
    return tuple(sorted({int(p) for p in parts}))


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with the input-error status."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    io_group = common.add_argument_group("input and output")
    io_group.add_argument('-i', '--input', dest='inputs', action='append', metavar='PATH',
                          help='Set file or Markov system file (repeat for a pair of systems)')
    io_group.add_argument('-o', '--out', help='Write the witness or report here (default: stdout for witnesses)')
    io_group.add_argument('--config', help='Path to a JSON config file')

    params = common.add_argument_group("parameters")
    params.add_argument('--r', type=int, help='Order of the structure (depth for regular embeddings)')
    params.add_argument('--q', type=int, help='Fix the gap q')
    params.add_argument('--u', type=_pair_arg, help='X-increment a,b')
    params.add_argument('--v', type=_pair_arg, help='Y-increment a,b')
    params.add_argument('--n-range', dest='n_range', type=_range_arg, help='Scale factors lo..hi')
    params.add_argument('--delta', type=_fraction_arg, help='Density threshold or inclusion probability, e.g. 1/2')
    params.add_argument('--relaxed', action='store_true',
                        help='Allow increments with a zero coordinate')
    params.add_argument('--states', type=_states_arg, help='Comma-separated Markov states forming the set A')
    params.add_argument('--k', type=int, help='Alphabet size (checked against the input)')
    params.add_argument('--depth', type=int, help='Depth N for density, mu and random sets')
    params.add_argument('--dim', type=int, choices=(1, 2), default=2, help='Dimension of a random set')

    run = common.add_argument_group("search control")
    run.add_argument('--budget', type=int, help='Node budget per search branch')
    run.add_argument('--time-budget', dest='time_budget', type=float, help='Wall-clock budget in seconds')
    run.add_argument('--seed', type=int, help='Seed for random sets and Monte Carlo (default 0)')
    run.add_argument('--samples', type=int, help='Monte Carlo sample count')
    run.add_argument('--workers', type=int, help='Worker threads for independent search branches')
    run.add_argument('--deterministic', action=argparse.BooleanOptionalAction, default=True,
                     help='Report the canonical first witness (default on)')

    out = common.add_argument_group("display")
    out.add_argument('--debug', action='store_true', help='Enable debug mode with detailed logging')
    out.add_argument('--verbose', '-v', action='store_true', help='Enable verbose mode (same as --debug)')
    out.add_argument('--quiet', action='store_true', help='Only show warnings and errors')
    out.add_argument('--no-color', action='store_true', help='Disable colored output')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _ArgumentParser(prog='tree-ramsey',
                             description='Search and verify arithmetic structures in dense subsets of trees')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    commands = parser.add_subparsers(dest='command', required=True)

    commands.add_parser('density', parents=[common], help='Print the density sequence d_N')
    commands.add_parser('random', parents=[common], help='Write a seeded random set')
    commands.add_parser('ap-grid', parents=[common], help='Find an r×r grid progression in the occupied levels')
    verify = commands.add_parser('verify', parents=[common], help='Check a witness against a set')
    verify.add_argument('witness', help='Witness JSON file')

    search = commands.add_parser('search', help='Search for a witness')
    kinds = search.add_subparsers(dest='search_kind', required=True)
    kinds.add_parser('tree', parents=[common], help='Arithmetic subtree in a one-dimensional set')
    kinds.add_parser('regular', parents=[common], help='Regular embedding in a one-dimensional set')
    kinds.add_parser('array', parents=[common], help='Tree array in a two-dimensional set')
    kinds.add_parser('product', parents=[common], help='(u, v)-arithmetic product tree')
    kinds.add_parser('cartesian', parents=[common], help='Cartesian product of two arithmetic subtrees')

    markov = commands.add_parser('markov', help='Finite Markov systems')
    actions = markov.add_subparsers(dest='markov_kind', required=True)
    actions.add_parser('validate', parents=[common], help='Check the properties of a commuting pair')
    actions.add_parser('phi', parents=[common], help='Integrals of the recurrence function per n')
    actions.add_parser('roots', parents=[common], help='Roots of product trees inside a pair')
    actions.add_parser('mu', parents=[common], help='Exact and Monte Carlo μ_N(E) of a set')
    return parser


# helpers

def _write_text(path: str, text: str) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def _emit_report(cfg: RunConfig, display: CLIDisplay, text: str) -> None:
    if cfg.out:
        _write_text(cfg.out, text)
        display.print_file_saved(cfg.out, "report")
    elif display.debug_mode:
        display.print_report(text)


def _load_input(cfg: RunConfig, index: int = 0) -> AnySet:
    if len(cfg.inputs) <= index:
        raise PreconditionError(f"{cfg.command} needs --input")
    S = parse_set_file(cfg.inputs[index])
    if cfg.k is not None and cfg.k != S.k:
        raise AlphabetMismatchError(cfg.k, S.k)
    return S


def _as_grid(cfg: RunConfig, S: AnySet) -> GridTreeSet:
    if not isinstance(S, GridTreeSet):
        raise PreconditionError(f"{cfg.command} needs a two-dimensional set (dim=2)")
    return S


def _as_tree(cfg: RunConfig, S: AnySet) -> TreeSet:
    if not isinstance(S, TreeSet):
        raise PreconditionError(f"{cfg.command} needs a one-dimensional set (dim=1)")
    return S


def _budget(cfg: RunConfig, settings: Settings) -> SearchBudget:
    return SearchBudget.from_settings(settings, deterministic=cfg.deterministic)


def _finish_search(cfg: RunConfig, display: CLIDisplay, kind: str, outcome: SearchOutcome) -> int:
    if outcome.found:
        write_witness(outcome.witness, cfg.out)
        if cfg.out:
            display.print_file_saved(cfg.out, f"{kind} witness")
        display.success(f"Found a {kind} witness after {outcome.nodes} nodes")
        return EXIT_OK

    report = render("search_outcome", kind=kind, source=cfg.source, outcome=outcome)
    _emit_report(cfg, display, report)
    where = f" at stage {outcome.stage}" if outcome.stage else ""
    if outcome.status == SearchStatus.BUDGET_EXHAUSTED:
        display.warning(f"Budget exhausted{where} after {outcome.nodes} nodes")
        return EXIT_BUDGET
    display.warning(f"No {kind} witness exists{where}: {outcome.detail or 'search space exhausted'}")
    return EXIT_NONE


# subcommands

def _run_density(cfg: RunConfig, settings: Settings, display: CLIDisplay) -> int:
    S = _load_input(cfg)
    values = density_sequence(S, cfg.depth)
    rows = list(enumerate(values, start=1))
    dim = 1 if isinstance(S, TreeSet) else 2
    display.print_table("Density sequence", ["N", "d_N"], rows)
    _emit_report(cfg, display, render("density", source=cfg.source, k=S.k, depth=S.depth, dim=dim, rows=rows))
    return EXIT_OK


def _run_random(cfg: RunConfig, settings: Settings, display: CLIDisplay) -> int:
    if cfg.depth is None:
        raise PreconditionError("random needs --depth")
    k = cfg.k if cfg.k is not None else 2
    delta = cfg.delta if cfg.delta is not None else Fraction(1, 2)
    if cfg.dim == 1:
        S = random_tree_set(cfg.depth, k, delta, settings.seed)
    else:
        S = random_grid_set(cfg.depth, k, delta, settings.seed)
    text = format_set(S)
    if cfg.out:
        _write_text(cfg.out, text)
        display.print_file_saved(cfg.out, "set")
    else:
        print(text, end="")
    return EXIT_OK


def _search(cfg: RunConfig, display: CLIDisplay, kind: str, run: Callable[[], SearchOutcome]) -> int:
    with display.create_search_progress(f"Searching for a {kind} witness in {cfg.source}..."):
        outcome = run()
    display.debug(f"{kind} search: {outcome.status.value}, {outcome.nodes} nodes, {outcome.elapsed:.3f}s")
    return _finish_search(cfg, display, kind, outcome)


def _run_search_tree(cfg: RunConfig, settings: Settings, display: CLIDisplay) -> int:
    S = _as_tree(cfg, _load_input(cfg))
    q_range = (cfg.q, cfg.q) if cfg.q is not None else None
    r = cfg.r if cfg.r is not None else 1
    return _search(cfg, display, "tree",
                   lambda: find_arithmetic_subtree(S, r, q_range, _budget(cfg, settings)))


def _run_search_regular(cfg: RunConfig, settings: Settings, display: CLIDisplay) -> int:
    S = _as_tree(cfg, _load_input(cfg))
    d = cfg.r if cfg.r is not None else 1
    return _search(cfg, display, "regular", lambda: find_regular_embedding(S, d, _budget(cfg, settings)))


def _run_search_array(cfg: RunConfig, settings: Settings, display: CLIDisplay) -> int:
    A = _as_grid(cfg, _load_input(cfg))
    delta = cfg.delta if cfg.delta is not None else density_2d(A)
    r = cfg.r if cfg.r is not None else 1
    display.info(f"Tree array of order {r} at density threshold {delta}")
    return _search(cfg, display, "array", lambda: construct_tree_array(A, r, delta, _budget(cfg, settings)))


def _run_search_product(cfg: RunConfig, settings: Settings, display: CLIDisplay) -> int:
    A = _as_grid(cfg, _load_input(cfg))
    r = cfg.r if cfg.r is not None else 1
    u = cfg.u or (1, 1)
    v = cfg.v or (1, 1)
    n_range = cfg.n_range or (1, A.depth)
    return _search(cfg, display, "product",
                   lambda: find_product_tree(A, r, u, v, n_range, relaxed=cfg.relaxed,
                                             budget=_budget(cfg, settings)))


def _run_search_cartesian(cfg: RunConfig, settings: Settings, display: CLIDisplay) -> int:
    A = _as_grid(cfg, _load_input(cfg))
    r = cfg.r if cfg.r is not None else 1
    q_range = (cfg.q, cfg.q) if cfg.q is not None else None
    return _search(cfg, display, "cartesian",
                   lambda: find_cartesian_product(A, r, q_range, _budget(cfg, settings)))


_VERIFIERS = {
    TreeWitness: (verify_arithmetic_subtree, _as_tree),
    RegularEmbeddingWitness: (verify_regular_embedding, _as_tree),
    TreeArrayWitness: (verify_tree_array, _as_grid),
    ProductTreeWitness: (verify_product_tree, _as_grid),
    CartesianProductWitness: (verify_cartesian_product, _as_grid),
}


def _run_verify(cfg: RunConfig, settings: Settings, display: CLIDisplay) -> int:
    if not cfg.witness:
        raise PreconditionError("verify needs a witness file")
    witness = read_witness(cfg.witness)
    S = _load_input(cfg)
    if witness.k != S.k:
        raise AlphabetMismatchError(witness.k, S.k)
    verifier, coerce = _VERIFIERS[type(witness)]
    verdict = verifier(witness, coerce(cfg, S))
    display.print_verdict(verdict)
    _emit_report(cfg, display, render("verdict", kind=witness.kind, witness=os.path.basename(cfg.witness),
                                      source=cfg.source, verdict=verdict))
    return EXIT_OK if verdict else EXIT_NONE


def _run_ap_grid(cfg: RunConfig, settings: Settings, display: CLIDisplay) -> int:
    A = _as_grid(cfg, _load_input(cfg))
    r = cfg.r if cfg.r is not None else 2
    witness = find_ap_grid(occupied_grid(A), r)
    if witness is None:
        display.warning(f"No {r}×{r} grid progression among the occupied levels")
    else:
        display.success(f"Grid progression at ({witness.a1}, {witness.a2}) with gap {witness.q}")
    _emit_report(cfg, display, render("ap_grid", source=cfg.source, r=r, depth=A.depth, witness=witness))
    return EXIT_OK if witness is not None else EXIT_NONE


def _load_pair(cfg: RunConfig, validate: bool) -> Tuple[CommutingPair, Optional[Tuple[int, ...]]]:
    """Two Markov files form a pair; a single set file gives its labelled-tree pair."""
    if len(cfg.inputs) == 2:
        first, second = (load_markov_file(path) for path in cfg.inputs)
        return CommutingPair(first, second, validate=validate), None
    if len(cfg.inputs) == 1:
        A = _as_grid(cfg, _load_input(cfg))
        system = labelled_tree_pair(A)
        event = tuple(sorted(system.event))
        logger.info(f"Labelled-tree pair of {cfg.source}: {system.m} states, {len(system.event)} in the event")
        return system.pair, event
    raise PreconditionError(f"{cfg.command} needs two Markov files or one set file as --input")


def _pair_states(cfg: RunConfig, default: Optional[Tuple[int, ...]]) -> Tuple[int, ...]:
    if cfg.states is not None:
        return cfg.states
    if default is None:
        raise PreconditionError(f"{cfg.command} on a pair of Markov files needs --states")
    return default


def _run_markov_validate(cfg: RunConfig, settings: Settings, display: CLIDisplay) -> int:
    pair, _ = _load_pair(cfg, validate=False)
    report = validate_pair(pair)
    rows = report.rows()
    display.print_table("Commuting pair", ["Property", "Value"], rows)
    _emit_report(cfg, display, render("markov_validate", source=cfg.source, k=pair.k, m=pair.m,
                                      rows=rows, all_hold=report.all_hold))
    return EXIT_OK if report.all_hold else EXIT_NONE


def _run_markov_phi(cfg: RunConfig, settings: Settings, display: CLIDisplay) -> int:
    pair, default = _load_pair(cfg, validate=True)
    states = _pair_states(cfg, default)
    r = cfg.r if cfg.r is not None else 1
    u, v = cfg.u or (1, 1), cfg.v or (1, 1)
    rows = phi_integrals(pair, states, u, v, cfg.n_range or (1, 1), r)
    display.print_table(f"φ_{r} integrals", ["n", "∫φ_r"], rows)
    _emit_report(cfg, display, render("markov_phi", source=cfg.source, r=r, u=u, v=v, states=states, rows=rows))
    return EXIT_OK


def _run_markov_roots(cfg: RunConfig, settings: Settings, display: CLIDisplay) -> int:
    r = cfg.r if cfg.r is not None else 1
    u, v = cfg.u or (1, 1), cfg.v or (1, 1)
    lo, hi = cfg.n_range or (1, 1)
    budget = _budget(cfg, settings)
    rows: List[Tuple[int, List[int]]] = []
    certified: List[Tuple[int, int, str, str]] = []
    if len(cfg.inputs) == 1 and cfg.states is None:
        A = _as_grid(cfg, _load_input(cfg))
        system = labelled_tree_pair(A)
        states = tuple(sorted(system.event))
        logger.info(f"Labelled-tree pair of {cfg.source}: {system.m} states, {len(states)} in the event")
        for n in range(lo, hi + 1):
            roots = find_markov_roots(A, r, u, v, n, budget, system=system)
            rows.append((n, [root.state for root in roots]))
            for root in roots:
                ok = root.witness is not None and bool(verify_product_tree(root.witness, A))
                certified.append((n, root.state, str(root.offset), "PASS" if ok else "FAIL"))
    else:
        pair, default = _load_pair(cfg, validate=True)
        states = _pair_states(cfg, default)
        for n in range(lo, hi + 1):
            rows.append((n, sorted(roots_by_search(pair, states, u, v, n, r, budget))))
    display.print_table("Product-tree roots", ["n", "roots"],
                        [(n, ",".join(map(str, roots)) or "none") for n, roots in rows])
    if certified:
        display.print_table("Product trees in A", ["n", "state", "root", "verdict"], certified)
    _emit_report(cfg, display, render("markov_roots", source=cfg.source, r=r, u=u, v=v, states=states,
                                      rows=rows, certified=certified))
    if any(verdict != "PASS" for *_, verdict in certified):
        return EXIT_NONE
    return EXIT_OK if any(roots for _, roots in rows) else EXIT_NONE


def _run_markov_mu(cfg: RunConfig, settings: Settings, display: CLIDisplay) -> int:
    A = _as_grid(cfg, _load_input(cfg))
    N = cfg.depth if cfg.depth is not None else A.depth
    if not 1 <= N <= A.depth:
        raise PreconditionError(f"N must lie in [1, {A.depth}], got {N}")
    with display.create_search_progress("Evaluating μ_N exactly..."):
        exact = mu_N_exact(A, N)
    density = density_2d(A.restrict(N))
    estimate = mu_N_monte_carlo(A, N, samples=settings.mc_samples, seed=settings.seed)
    display.print_table("μ_N(E)", ["Quantity", "Value"], [
        ("exact", exact),
        ("density d_N", density),
        ("Monte Carlo", f"{float(estimate.estimate):.6f} ± {estimate.stderr:.6f}"),
        ("samples", estimate.samples),
    ])
    _emit_report(cfg, display, render("markov_mu", source=cfg.source, k=A.k, depth=N, exact=exact,
                                      density=density, estimate=estimate, seed=settings.seed))
    if exact != density:
        display.error(f"μ_N(E) = {exact} differs from d_N = {density}")
        return EXIT_NONE
    return EXIT_OK


_HANDLERS: Dict[str, Callable[[RunConfig, Settings, CLIDisplay], int]] = {
    "density": _run_density,
    "random": _run_random,
    "ap-grid": _run_ap_grid,
    "verify": _run_verify,
    "search tree": _run_search_tree,
    "search regular": _run_search_regular,
    "search array": _run_search_array,
    "search product": _run_search_product,
    "search cartesian": _run_search_cartesian,
    "markov validate": _run_markov_validate,
    "markov phi": _run_markov_phi,
    "markov roots": _run_markov_roots,
    "markov mu": _run_markov_mu,
}


def dispatch(cfg: RunConfig, display: Optional[CLIDisplay] = None) -> int:
    """Run one subcommand and return its exit status; library errors propagate."""
    display = display or CLIDisplay()
    settings = load_settings(cfg.config).with_overrides(
        node_budget=cfg.budget,
        time_budget=cfg.time_budget,
        workers=cfg.workers,
        mc_samples=cfg.samples,
        seed=cfg.seed,
    )
    set_settings(settings)
    try:
        display.print_config_info(settings)
        return _HANDLERS[cfg.command](cfg, settings, display)
    finally:
        set_settings(None)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Command-line interface for tree_ramsey."""
    parser = build_parser()
    args = parser.parse_args(argv)

    debug_mode = args.debug or args.verbose
    display = setup_display(debug=debug_mode, quiet=args.quiet, no_color=args.no_color)
    cfg = RunConfig.from_args(args)
    display.print_header("🌳 Tree Ramsey", cfg.command)

    try:
        code = dispatch(cfg, display)
    except BudgetExhaustedError as e:
        display.error(str(e))
        code = EXIT_BUDGET
    except (TreeRamseyError, ValueError, OSError) as e:
        display.error(str(e))
        if debug_mode:
            logger.exception("Input error")
        code = EXIT_INPUT

    display.print_summary(code)
    return code


if __name__ == "__main__":
    sys.exit(main())

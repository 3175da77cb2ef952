"""
critnum command-line front end.

Every command prints one JSON document on standard output; log records go to
standard error. Exit codes: 0 success or agreement, 1 invalid input,
2 engine mismatch, 64 usage error.
"""

import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Tuple

import log_config
from branching import branch_enumerate, tate_decomposition, weyl_dim
from crosscheck import compare_engines, fuzz_campaign
from engines import ENGINES
from engines.base import ensure_rank_pair
from engines.embedding_engine import crit_embedding, emb_interval
from engines.inequality_engine import bound_L, is_empty_quick, witness_diagnostic
from engines.weil_engine import dimension, render_gamma_factors, tau_closed_form
from log_config import get_logger
from models import (
    Agreement,
    CritnumError,
    DominantWeight,
    GenConfig,
    InvalidParameterError,
    LanglandsParam,
    PureWeight,
    Violation,
    dual_weight,
    kappa,
)
from settings import Settings
from utils import parse_int_list, read_document

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MISMATCH = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit status 64."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def parse_pair(document: Any) -> Tuple[LanglandsParam, LanglandsParam]:
    """
    Read {"pi": ..., "sigma": ...}; each side is {n, w, l, delta} or {mu, delta}.
    :param document: Decoded JSON document
    :return: The validated pair
    """
    if not isinstance(document, dict):
        raise InvalidParameterError([Violation("BadDocument", "document", None, "input must be a JSON object")])
    missing = [side for side in ("pi", "sigma") if side not in document]
    if missing:
        raise InvalidParameterError(
            [Violation("MissingField", side, None, f"missing side {side}") for side in missing]
        )
    return LanglandsParam.from_info(document["pi"]), LanglandsParam.from_info(document["sigma"])


def _emit(document: Dict[str, Any]):
    sys.stdout.write(json.dumps(document, indent=2) + "\n")


def cmd_crit(args: argparse.Namespace) -> Tuple[Dict[str, Any], int]:
    pi, sigma = parse_pair(read_document(args.input))
    ensure_rank_pair(pi, sigma)

    if args.engine != "all":
        crit = ENGINES[args.engine].crit(pi, sigma)
        return {"crit": crit.to_strings(), "engine": args.engine, "agreement": True}, EXIT_OK

    outcome = compare_engines(pi, sigma)
    if isinstance(outcome, Agreement):
        strings = outcome.crit.to_strings()
        return {
            "crit": strings,
            "engines": {name: strings for name in ENGINES},
            "agreement": True,
        }, EXIT_OK

    report = outcome.to_dict()
    return {
        "crit": None,
        "engines": report["engines"],
        "agreement": False,
        "errors": report["errors"],
        "first_difference": report["first_difference"],
    }, EXIT_MISMATCH


def cmd_trace(args: argparse.Namespace) -> Tuple[Dict[str, Any], int]:
    pi, sigma = parse_pair(read_document(args.input))
    _, trace = crit_embedding(pi, sigma)

    document = trace.to_dict()
    document["kappa"] = str(kappa(pi, sigma))
    document["L"] = str(bound_L(pi, sigma))
    document["emptiness"] = is_empty_quick(pi, sigma).to_dict()
    tau = tau_closed_form(pi, sigma)
    document["tau"] = tau.to_strings()
    document["tau_dim"] = dimension(tau)
    document["gamma_factors"] = render_gamma_factors(tau)
    document["witness"] = witness_diagnostic(pi, sigma).to_dict()
    return document, EXIT_OK


def cmd_fuzz(args: argparse.Namespace) -> Tuple[Dict[str, Any], int]:
    cfg = GenConfig(
        n_range=(1, args.n_max),
        m_range=(1, args.m_max),
        l_bound=args.l_bound,
        trials=args.trials,
        seed=args.seed,
        boundary_bias=args.boundary_bias,
    )
    logger.info("Fuzz campaign: %d trials, seed %d", cfg.trials, cfg.seed)
    summary = fuzz_campaign(cfg)
    status = EXIT_MISMATCH if summary["mismatches"] or summary["structural_failures"] else EXIT_OK
    return summary, status


def cmd_convert(args: argparse.Namespace) -> Tuple[Dict[str, Any], int]:
    if args.mu is not None:
        if args.w is not None or args.l is not None:
            raise UsageError("give either --mu or --w with --l")
        param = LanglandsParam.from_weight(PureWeight(args.mu))
        return {"w": param.w, "l": list(param.l)}, EXIT_OK

    if args.w is None or args.l is None:
        raise UsageError("give either --mu or --w with --l")
    param = LanglandsParam(n=len(args.l), w=args.w, l=args.l)
    return {"mu": param.to_weight().to_list()}, EXIT_OK


def cmd_branch(args: argparse.Namespace) -> Tuple[Dict[str, Any], int]:
    alpha = DominantWeight(args.alpha)

    if args.beta is not None:
        beta = DominantWeight(args.beta)
        interval = emb_interval(beta, alpha)
        document: Dict[str, Any] = {"emb": interval.to_list() if not interval.is_empty else []}
        if args.tate:
            decomposition = tate_decomposition(beta, dual_weight(alpha))
            document["tate"] = list(decomposition.support)
            document["fallback"] = decomposition.fallback
        return document, EXIT_OK

    if args.tate:
        raise UsageError("--tate needs --beta")
    weights = list(branch_enumerate(alpha))
    return {
        "alpha": alpha.to_list(),
        "count": len(weights),
        "branches": [beta.to_list() for beta in weights],
        "weyl_dim": weyl_dim(alpha),
        "branch_dim_sum": sum(weyl_dim(beta) for beta in weights),
    }, EXIT_OK


def build_parser() -> CliParser:
    parser = CliParser(prog="critnum", description="Critical numbers of archimedean Rankin-Selberg L-factors")
    parser.add_argument("--log-level", default=None, help="Override CRITNUM_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)

    crit = sub.add_parser("crit", help="Compute Crit for a pair")
    crit.add_argument("--input", default=None, help="JSON pair document (stdin when omitted)")
    crit.add_argument("--engine", choices=["gamma", "inequality", "embedding", "all"], default="all")
    crit.set_defaults(handler=cmd_crit)

    trace = sub.add_parser("trace", help="Dump every intermediate object of the highest-weight pipeline")
    trace.add_argument("--input", default=None, help="JSON pair document (stdin when omitted)")
    trace.set_defaults(handler=cmd_trace)

    fuzz = sub.add_parser("fuzz", help="Seeded three-way differential campaign")
    fuzz.add_argument("--n-max", type=int, default=4)
    fuzz.add_argument("--m-max", type=int, default=4)
    fuzz.add_argument("--l-bound", type=int, default=20)
    fuzz.add_argument("--trials", type=int, default=1000)
    fuzz.add_argument("--seed", type=int, default=Settings.CRITNUM_SEED)
    fuzz.add_argument("--boundary-bias", type=float, default=0.2)
    fuzz.set_defaults(handler=cmd_fuzz)

    convert = sub.add_parser("convert", help="Convert between highest weights and Langlands parameters")
    convert.add_argument("--mu", type=parse_int_list, default=None, help="Pure weight, e.g. 3,1")
    convert.add_argument("--w", type=int, default=None)
    convert.add_argument("--l", type=parse_int_list, default=None, help="Spectrum, e.g. 3,-3")
    convert.set_defaults(handler=cmd_convert)

    branch = sub.add_parser("branch", help="Branching constituents or the Emb interval")
    branch.add_argument("--alpha", type=parse_int_list, required=True)
    branch.add_argument("--beta", type=parse_int_list, default=None)
    branch.add_argument("--tate", action="store_true", help="Also list the Tate modules (needs --beta)")
    branch.set_defaults(handler=cmd_branch)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"critnum: {e}\n")
        return EXIT_USAGE

    if args.log_level is not None:
        log_config.configure(log_config.resolve_level(args.log_level))

    try:
        document, status = args.handler(args)
    except UsageError as e:
        sys.stderr.write(f"critnum: {e}\n")
        return EXIT_USAGE
    except CritnumError as e:
        logger.error("Invalid input: %s", e)
        _emit({"error": e.to_dict()})
        return EXIT_INVALID
    except (ValueError, OSError) as e:
        logger.error("Could not read input: %s", e)
        _emit({"error": {"rule": "BadDocument", "field": "input", "index": None, "message": str(e)}})
        return EXIT_INVALID

    _emit(document)
    return status


if __name__ == "__main__":
    sys.exit(main())

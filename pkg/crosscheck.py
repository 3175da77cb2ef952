"""
Random valid parameter pairs and three-way differential testing of the engines.

Campaigns are reproducible: one numpy SeedSequence is spawned into a child
per trial and every child drives its own Philox generator, so a trial's draw
does not depend on how many trials ran before it.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from engines import ENGINES
from engines.embedding_engine import crit_embedding, crit_weight_system
from engines.inequality_engine import is_empty_quick, witness_diagnostic, reflect
from log_config import get_logger
from models import (
    Agreement,
    CritnumError,
    CritSet,
    GenConfig,
    HalfInt,
    LanglandsParam,
    MismatchReport,
    PipelineTrace,
    is_exceptional,
)
from settings import Settings

logger = get_logger(__name__)

# Largest distance between spectral values counted as near-coincident
NEAR_DISTANCE = 2


def _positive_pool(parity: int, l_bound: int) -> List[int]:
    return list(range(2 - parity, l_bound + 1, 2))


def gen_langlands(
    n: int, l_bound: int, rng: np.random.Generator, near: Optional[Sequence[int]] = None
) -> LanglandsParam:
    """
    Draw a random valid parameter of rank n.
    :param n: Rank >= 1
    :param l_bound: Largest absolute l entry, at least n
    :param rng: numpy generator
    :param near: When given, one positive l entry is drawn within distance 2 of one of these values
    :return: A parameter that passes validation
    """
    if n < 1 or l_bound < n:
        raise ValueError(f"need n >= 1 and l_bound >= n, got n={n} l_bound={l_bound}")

    half = n // 2
    # odd n has the middle entry 0, which fixes the parity of every l_i
    parity = 0 if n % 2 == 1 else int(rng.integers(0, 2))
    pool = _positive_pool(parity, l_bound)

    chosen: List[int] = []
    if near and half:
        close = [v for v in pool if any(abs(v - x) <= NEAR_DISTANCE for x in near)]
        if close:
            chosen.append(int(rng.choice(close)))
    rest = [v for v in pool if v not in chosen]
    if half > len(chosen):
        chosen.extend(int(v) for v in rng.choice(rest, size=half - len(chosen), replace=False))

    positive = sorted(chosen, reverse=True)
    middle = [0] if n % 2 == 1 else []
    l = tuple(positive + middle + [-x for x in reversed(positive)])

    w_parity = (n + 1 - parity) % 2
    w = 2 * int(rng.integers(-(l_bound // 2), l_bound // 2 + 1)) + w_parity
    if w > l_bound:
        w -= 2
    delta = int(rng.integers(0, 2))
    return LanglandsParam(n=n, w=w, l=l, delta=delta)


def gen_pair(cfg: GenConfig, rng: np.random.Generator) -> Tuple[LanglandsParam, LanglandsParam]:
    """Draw (n, m) from the configured ranges, never n = m = 1, and a pair of parameters."""
    while True:
        n = int(rng.integers(cfg.n_range[0], cfg.n_range[1] + 1))
        m = int(rng.integers(cfg.m_range[0], cfg.m_range[1] + 1))
        if not (n == 1 and m == 1):
            break
    pi = gen_langlands(n, cfg.l_bound, rng)
    near = pi.positive_l if rng.random() < cfg.boundary_bias else None
    sigma = gen_langlands(m, cfg.l_bound, rng, near=near)
    return pi, sigma


def _first_difference(results: Dict[str, Optional[CritSet]]) -> Optional[HalfInt]:
    sets = [set(crit.values) if crit is not None else set() for crit in results.values()]
    union = set().union(*sets)
    differing = [t for t in union if not all(t in s for s in sets)]
    return min(differing) if differing else None


def compare_engines(pi: LanglandsParam, sigma: LanglandsParam) -> Union[Agreement, MismatchReport]:
    """
    Run every engine on the pair.
    :return: Agreement when all three sets coincide, otherwise a report with every engine's output
    """
    results: Dict[str, Optional[CritSet]] = {}
    errors: Dict[str, str] = {}
    for name, engine in ENGINES.items():
        try:
            results[name] = engine.crit(pi, sigma)
        except ValueError as e:
            logger.error("%s engine failed on pi=%s sigma=%s: %s", name, pi.to_dict(), sigma.to_dict(), e)
            results[name] = None
            errors[name] = f"{getattr(e, 'rule', type(e).__name__)}: {e}"

    values = list(results.values())
    if not errors and all(crit == values[0] for crit in values):
        try:
            weight_view = crit_weight_system(pi, sigma)
        except ValueError as e:
            logger.error("Weight-system view failed on pi=%s sigma=%s: %s", pi.to_dict(), sigma.to_dict(), e)
            weight_view = None
        return Agreement(values[0], weight_system_agrees=weight_view == values[0])

    trace: Optional[PipelineTrace] = None
    try:
        _, trace = crit_embedding(pi, sigma)
    except CritnumError:
        pass
    report = MismatchReport(
        pi=pi,
        sigma=sigma,
        results=results,
        errors=errors,
        first_difference=_first_difference(results),
        trace=trace,
    )
    logger.warning("Engine mismatch: %s", report.to_dict()["engines"])
    return report


def structural_violations(pi: LanglandsParam, sigma: LanglandsParam, crit: CritSet) -> List[str]:
    """
    Properties every agreed result must satisfy: reflection closure, swap
    invariance of every engine, emptiness for coincident spectra and
    non-emptiness in the regular case with L_0 != 0.
    """
    problems = []
    reflected = {reflect(t, pi.w, sigma.w) for t in crit}
    if reflected != set(crit.values):
        problems.append("reflection")

    for name, engine in ENGINES.items():
        try:
            if engine.crit(sigma, pi) != crit:
                problems.append(f"swap:{name}")
        except ValueError:
            problems.append(f"swap:{name}")

    verdict = is_empty_quick(pi, sigma)
    if verdict.kind == "Empty" and not crit.is_empty:
        problems.append("coincidence-nonempty")
    if verdict.kind == "NonEmpty" and crit.is_empty:
        problems.append("regular-empty")
    return problems


@dataclass
class CampaignState:
    """Counters accumulated over a fuzz campaign."""

    trials: int = 0
    agreements: int = 0
    empties: int = 0
    exceptional: int = 0
    exceptional_empties_with_room: int = 0
    witness_flags: int = 0
    weight_system_agreements: int = 0
    structural_failures: int = 0
    mismatch_count: int = 0
    # the smallest reports by sort key, at most the campaign limit
    reports: List[MismatchReport] = field(default_factory=list)
    rows: List[Dict[str, Any]] = field(default_factory=list)


def _per_rank_pair(rows: List[Dict[str, Any]]) -> List[Dict[str, int]]:
    if not rows:
        return []
    frame = pd.DataFrame(rows)
    grouped = (
        frame.groupby(["n", "m"])
        .agg(trials=("agree", "size"), agreements=("agree", "sum"), empties=("empty", "sum"))
        .reset_index()
    )
    return [{key: int(value) for key, value in record.items()} for record in grouped.to_dict(orient="records")]


def fuzz_campaign(cfg: GenConfig, mismatch_limit: Optional[int] = None) -> Dict[str, Any]:
    """
    Run cfg.trials seeded comparisons.
    :param cfg: Campaign configuration
    :param mismatch_limit: Full reports kept, CRITNUM_MISMATCH_LIMIT by default
    :return: JSON-ready summary
    """
    limit = Settings.CRITNUM_MISMATCH_LIMIT if mismatch_limit is None else mismatch_limit
    state = CampaignState()
    children = np.random.SeedSequence(cfg.seed).spawn(cfg.trials)

    for index, child in enumerate(children, start=1):
        rng = np.random.Generator(np.random.Philox(child))
        pi, sigma = gen_pair(cfg, rng)
        state.trials += 1
        exceptional = is_exceptional(pi.n, sigma.n)
        state.exceptional += exceptional

        outcome = compare_engines(pi, sigma)
        if isinstance(outcome, Agreement):
            state.agreements += 1
            state.empties += outcome.crit.is_empty
            state.weight_system_agreements += outcome.weight_system_agrees
            if exceptional and outcome.crit.is_empty and is_empty_quick(pi, sigma).kind == "PossiblyNonEmpty":
                state.exceptional_empties_with_room += 1
            if structural_violations(pi, sigma, outcome.crit):
                state.structural_failures += 1
                logger.warning("Structural check failed for pi=%s sigma=%s", pi.to_dict(), sigma.to_dict())
            state.witness_flags += witness_diagnostic(pi, sigma, log=False).fires
        else:
            state.mismatch_count += 1
            state.reports.append(outcome)
            if len(state.reports) > limit:
                state.reports.sort(key=MismatchReport.sort_key)
                del state.reports[limit:]
        state.rows.append(
            {
                "n": pi.n,
                "m": sigma.n,
                "agree": isinstance(outcome, Agreement),
                "empty": isinstance(outcome, Agreement) and outcome.crit.is_empty,
            }
        )

        if index % 1000 == 0:
            logger.info("%d/%d trials, %d mismatches so far", index, cfg.trials, state.mismatch_count)

    if state.witness_flags:
        logger.warning("Witness t0 was not critical in %d of %d trials", state.witness_flags, state.trials)
    state.reports.sort(key=MismatchReport.sort_key)
    return {
        "seed": cfg.seed,
        "trials": state.trials,
        "agreements": state.agreements,
        "empties": state.empties,
        "exceptional": state.exceptional,
        "exceptional_parity_empties": state.exceptional_empties_with_room,
        "mismatches": state.mismatch_count,
        "structural_failures": state.structural_failures,
        "witness_flags": state.witness_flags,
        "weight_system_agreements": state.weight_system_agreements,
        "per_rank_pair": _per_rank_pair(state.rows),
        "mismatch_reports": [report.to_dict() for report in state.reports],
    }

"""
One-step branching GL_{r+1} -> GL_r: interlacing, enumeration of the
branching constituents, Weyl dimensions and multiplicities of the Tate
modules det^s.
"""

import itertools
import math
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from engines.embedding_engine import emb_interval
from engines.inequality_engine import parity_set_contains
from log_config import get_logger
from models import (
    DominantWeight,
    EnumerationTooLarge,
    HalfInt,
    PipelineTrace,
    RankMismatch,
    TateDecomposition,
)
from settings import Settings

logger = get_logger(__name__)

WeightLike = Union[DominantWeight, Sequence[int]]

# (eps, n, m, w, w') selecting the parity-filtered twists
ParityData = Tuple[int, int, int, int, int]


def _entries(y: WeightLike) -> Tuple[int, ...]:
    if isinstance(y, DominantWeight):
        return y.entries
    return tuple(y)


def interlaces(beta: WeightLike, alpha: WeightLike) -> bool:
    """
    beta < alpha, i.e. alpha_rho >= beta_rho >= alpha_{rho+1} for every rho.
    :raises RankMismatch: unless rank(alpha) = rank(beta) + 1
    """
    beta, alpha = _entries(beta), _entries(alpha)
    if len(alpha) != len(beta) + 1:
        raise RankMismatch(f"ranks {len(beta)} and {len(alpha)} do not differ by one")
    return all(alpha[rho] >= b >= alpha[rho + 1] for rho, b in enumerate(beta))


def interlacing_count(alpha: WeightLike) -> int:
    """Number of weights interlacing alpha: prod(alpha_rho - alpha_{rho+1} + 1)."""
    alpha = _entries(alpha)
    return math.prod(alpha[rho] - alpha[rho + 1] + 1 for rho in range(len(alpha) - 1))


def branch_enumerate(alpha: WeightLike, cap: Optional[int] = None) -> Iterator[DominantWeight]:
    """
    Every beta interlacing alpha, each once, in decreasing lexicographic order.
    :param alpha: Dominant weight of rank r+1 >= 1
    :param cap: Largest accepted count, CRITNUM_ENUM_CAP by default
    :raises EnumerationTooLarge: when the count exceeds the cap
    """
    alpha = _entries(alpha)
    if len(alpha) < 2:
        raise RankMismatch("branching needs a weight of rank at least 2")
    cap = Settings.CRITNUM_ENUM_CAP if cap is None else cap
    count = interlacing_count(alpha)
    if count > cap:
        raise EnumerationTooLarge(f"{count} interlacing weights exceed the cap {cap}")

    ranges = [range(alpha[rho], alpha[rho + 1] - 1, -1) for rho in range(len(alpha) - 1)]
    for combo in itertools.product(*ranges):
        yield DominantWeight(combo)


def weyl_dim(mu: WeightLike) -> int:
    """
    Dimension of the irreducible GL_n representation with highest weight mu,
    prod_{i<j} (mu_i - mu_j + j - i) / (j - i).
    """
    mu = _entries(mu)
    DominantWeight(mu)
    numerator = 1
    denominator = 1
    for i, j in itertools.combinations(range(len(mu)), 2):
        numerator *= mu[i] - mu[j] + j - i
        denominator *= j - i
    result = Fraction(numerator, denominator)
    assert result.denominator == 1
    return result.numerator


def _dual(y: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(-x for x in reversed(y))


def _twists_by_enumeration(alpha: Tuple[int, ...], beta: Tuple[int, ...], cap: Optional[int]) -> Dict[int, int]:
    """
    Count, for every s, the gamma < beta equal to dual(alpha) + s.
    """
    target = _dual(alpha)
    counts: Dict[int, int] = {}
    for gamma in branch_enumerate(beta, cap):
        diffs = {g - t for g, t in zip(gamma.entries, target)}
        if len(diffs) == 1:
            s = diffs.pop()
            counts[s] = counts.get(s, 0) + 1
    return counts


def count_tate_multiplicity(alpha: WeightLike, beta: WeightLike, s: int, cap: Optional[int] = None) -> Tuple[int, bool]:
    """
    Multiplicity of det^s in (M_alpha (x) M_beta) restricted to GL_r, with the route that produced it.
    :param alpha: Weight of rank r
    :param beta: Weight of rank r+1
    :param s: Twist
    :return: (0 or 1, True when the enumeration was too large and only the interlacing test ran)
    """
    alpha, beta = _entries(alpha), _entries(beta)
    shifted = tuple(x - s for x in alpha)
    by_interlacing = 1 if interlaces(shifted, _dual(beta)) else 0
    try:
        by_enumeration = _twists_by_enumeration(alpha, beta, cap).get(s, 0)
    except EnumerationTooLarge:
        logger.warning("Tate multiplicity for s=%d falls back to the interlacing test", s)
        return by_interlacing, True
    if by_enumeration != by_interlacing:
        raise AssertionError(
            f"enumeration gives {by_enumeration} but interlacing gives {by_interlacing} for alpha={alpha} beta={beta} s={s}"
        )
    return by_enumeration, False


def tate_multiplicity(alpha: WeightLike, beta: WeightLike, s: int, cap: Optional[int] = None) -> int:
    multiplicity, _ = count_tate_multiplicity(alpha, beta, s, cap)
    return multiplicity


def emb_set_parity(
    beta: WeightLike, alpha: WeightLike, eps: int, n: int, m: int, w: int, w_prime: int
) -> List[int]:
    """
    Twists s in Emb(beta, alpha) with s - (n - m + w + w')/2 + 1 in Z_eps.
    """
    shift = HalfInt.half(n - m + w + w_prime)
    return [s for s in emb_interval(beta, alpha) if parity_set_contains(int(HalfInt.of(s + 1) - shift), eps)]


def tate_decomposition(
    alpha: WeightLike, beta: WeightLike, parity: Optional[ParityData] = None, cap: Optional[int] = None
) -> TateDecomposition:
    """
    All Tate modules det^s inside (M_alpha (x) M_beta) restricted to GL_r,
    optionally keeping only the parity-filtered twists.
    :param alpha: Weight of rank r
    :param beta: Weight of rank r+1
    :param parity: (eps, n, m, w, w') for the parity-filtered variant
    """
    alpha, beta = _entries(alpha), _entries(beta)
    interval = emb_interval(alpha, _dual(beta))
    allowed = set(interval)
    if parity is not None:
        allowed = set(emb_set_parity(alpha, _dual(beta), *parity))

    fallback = False
    try:
        counts = _twists_by_enumeration(alpha, beta, cap)
    except EnumerationTooLarge:
        logger.warning("Tate decomposition of alpha=%s beta=%s uses the interlacing route", alpha, beta)
        counts = {s: 1 for s in interval}
        fallback = True

    if set(counts) != set(interval):
        raise AssertionError(f"enumerated twists {sorted(counts)} differ from Emb interval {interval.to_list()}")
    return TateDecomposition({s: counts[s] for s in sorted(counts) if s in allowed}, fallback=fallback)


def pipeline_tate_support(trace: PipelineTrace, n: int, m: int, w: int, w_prime: int) -> Tuple[int, ...]:
    """
    Intersect the two Tate decompositions built from a pipeline trace.

    beta is theta_i(mu_tilde), the dual of the recorded theta_i(u_hat).
    :param trace: Trace of a pipeline run that reached the splitting maps
    :param n: Rank of the larger side after normalization
    :param m: Rank of the smaller side after normalization
    """
    if not trace.theta_images:
        return ()
    parity = None
    if trace.parity_filter is not None:
        parity = (trace.parity_filter, n, m, w, w_prime)
    decompositions = [
        tate_decomposition(
            trace.theta_images[f"theta_prime_{which}"],
            _dual(trace.theta_images[f"theta_{which}"]),
            parity,
        )
        for which in (1, 2)
    ]
    return decompositions[0].intersect(decompositions[1]).support

"""
Engine B: the closed-form criterion. A number t in (m+n)/2 + Z is critical
iff |t - kappa| < L + 1/2, together with the parity condition
t - kappa' in Z_eps when n and m are both odd.
"""

from typing import Iterable, Optional, Tuple

from engines.base import CritEngine, coset_window, ensure_rank_pair
from log_config import get_logger
from models import (
    CritSet,
    Emptiness,
    HalfInt,
    LanglandsParam,
    WitnessDiagnostic,
    coset_of,
    is_exceptional,
    kappa,
    kappa_prime,
)

logger = get_logger(__name__)


def parity_eps(pi: LanglandsParam, sigma: LanglandsParam) -> int:
    return (pi.delta + sigma.delta) % 2


def parity_set_contains(x: int, eps: int) -> bool:
    """
    Membership in Z_eps = (2N - eps) u -(2N - 1 - eps) with N = {1, 2, 3, ...}.

    Z_0 = {2, 4, ...} u {-1, -3, ...} and Z_1 = {1, 3, ...} u {0, -2, ...}.
    """
    if eps not in (0, 1):
        raise ValueError(f"eps must be 0 or 1, got {eps}")
    positive = x + eps
    negative = eps + 1 - x
    return (positive >= 2 and positive % 2 == 0) or (negative >= 2 and negative % 2 == 0)


def _admissible_pairs(pi: LanglandsParam, sigma: LanglandsParam) -> Iterable[Tuple[int, int]]:
    mid_i = (pi.n + 1) // 2 if pi.n % 2 == 1 else None
    mid_j = (sigma.n + 1) // 2 if sigma.n % 2 == 1 else None
    for i in range(1, pi.n + 1):
        for j in range(1, sigma.n + 1):
            if i == mid_i and j == mid_j:
                continue
            yield i, j


def bound_L0(pi: LanglandsParam, sigma: LanglandsParam) -> int:
    """
    L_0 = min |l_i - l'_j|, leaving out the two middle entries together when
    both ranks are odd.
    """
    ensure_rank_pair(pi, sigma)
    return min(abs(pi.at(i) - sigma.at(j)) for i, j in _admissible_pairs(pi, sigma))


def bound_L(pi: LanglandsParam, sigma: LanglandsParam) -> HalfInt:
    """
    :return: L = L_0 / 2
    """
    ensure_rank_pair(pi, sigma)
    return HalfInt.half(bound_L0(pi, sigma))


def bound_L_positions(pi: LanglandsParam, sigma: LanglandsParam) -> Optional[HalfInt]:
    """
    L computed from the position tuple of the normalized pair.
    :return: None when the pair is screened out as empty before positions exist
    """
    from engines.embedding_engine import normalize_pair, position_tuple, screen_pair

    normalized = normalize_pair(pi, sigma)
    if screen_pair(normalized) is not None:
        return None
    big, small = normalized.pi, normalized.sigma
    pos = position_tuple(big.l, small.l)
    mid = (small.n + 1) // 2

    gaps = []
    for j in range(1, small.n + 1):
        if pos.exceptional and j == mid:
            continue
        a_j = pos.a_at(j)
        gaps.append(big.at(a_j) - small.at(j))
        gaps.append(small.at(j) - big.at(a_j + 1))
    if pos.exceptional:
        gaps.append(big.at((big.n - 1) // 2))
        if small.n >= 3:
            gaps.append(small.at((small.n - 1) // 2))
    return HalfInt.half(min(gaps))


def _window_values(pi: LanglandsParam, sigma: LanglandsParam) -> Tuple[int, ...]:
    offset = coset_of(pi.n, sigma.n)
    # |t - kappa| < L + 1/2 is |2t - 2 kappa| <= L_0 on doubled values
    return coset_window(kappa(pi, sigma).times2, bound_L0(pi, sigma), offset.times2)


def crit_inequality(pi: LanglandsParam, sigma: LanglandsParam) -> CritSet:
    ensure_rank_pair(pi, sigma)
    offset = coset_of(pi.n, sigma.n)
    values = [HalfInt(times2) for times2 in _window_values(pi, sigma)]

    if is_exceptional(pi.n, sigma.n):
        eps = parity_eps(pi, sigma)
        shift = kappa_prime(pi, sigma)
        values = [t for t in values if parity_set_contains(int(t - shift), eps)]
        logger.debug("Parity filter eps=%d keeps %d values", eps, len(values))

    return CritSet(tuple(values), offset)


def reflect(t: HalfInt, w: int, w_prime: int) -> HalfInt:
    """t -> w + w' + 1 - t, the reflection about kappa."""
    return HalfInt.of(w + w_prime + 1) - t


def is_empty_quick(pi: LanglandsParam, sigma: LanglandsParam) -> Emptiness:
    """
    Decide emptiness from the spectra alone where that is possible.
    """
    if pi.n == 1 and sigma.n == 1:
        return Emptiness("Empty", "no critical numbers are defined for n = m = 1")
    for i, l_i in enumerate(pi.l, start=1):
        for j, l_j in enumerate(sigma.l, start=1):
            if l_i == l_j and l_i != 0:
                return Emptiness("Empty", f"coincident spectra l_{i} = l'_{j} = {l_i}")

    if bound_L0(pi, sigma) == 0:
        return Emptiness("Empty", "L = 0")
    if is_exceptional(pi.n, sigma.n):
        return Emptiness("PossiblyNonEmpty", "parity condition may empty the window")
    return Emptiness("NonEmpty")


def witness_diagnostic(pi: LanglandsParam, sigma: LanglandsParam, log: bool = True) -> WitnessDiagnostic:
    """
    Check the closed-form candidate t0 = L - 1 + kappa against the computed Crit.

    The diagnostic fires when Crit is non-empty by the closed-form criterion
    but t0 is not one of its elements. 2 t0 always has the parity of n + m + 1,
    so t0 never lies in the coset of Crit and the diagnostic fires for every
    non-empty regular pair.
    :param log: Emit the warning; campaigns count the flags instead
    """
    ensure_rank_pair(pi, sigma)
    t0 = bound_L(pi, sigma) - 1 + kappa(pi, sigma)
    crit = crit_inequality(pi, sigma)
    verdict = is_empty_quick(pi, sigma)
    diagnostic = WitnessDiagnostic(
        t0=t0,
        t0_reflected=reflect(t0, pi.w, sigma.w),
        in_coset=t0.in_coset(coset_of(pi.n, sigma.n)),
        critical=t0 in crit,
        expected_nonempty=verdict.kind == "NonEmpty",
    )
    if diagnostic.fires and log:
        logger.warning(
            "Witness t0 = %s is not critical for pi=%s sigma=%s (Crit = %s)",
            t0,
            pi.to_dict(),
            sigma.to_dict(),
            crit.to_strings(),
        )
    return diagnostic


class InequalityEngine(CritEngine):
    name = "inequality"

    def _compute(self, pi: LanglandsParam, sigma: LanglandsParam) -> CritSet:
        return crit_inequality(pi, sigma)

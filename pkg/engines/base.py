from typing import Tuple

from log_config import get_logger
from models import CritSet, LanglandsParam, RankPairExcluded, coset_of

logger = get_logger(__name__)


def ensure_rank_pair(pi: LanglandsParam, sigma: LanglandsParam):
    """
    Reject the one rank pair for which critical numbers are not defined.
    :raises RankPairExcluded: when n = m = 1
    """
    if pi.n == 1 and sigma.n == 1:
        raise RankPairExcluded("critical numbers are not considered for n = m = 1")


def coset_window(center_times2: int, half_width_times2: int, offset_times2: int) -> Tuple[int, ...]:
    """
    Doubled values 2t of every t in offset + Z with |t - center| <= half_width.
    """
    lo = center_times2 - half_width_times2
    hi = center_times2 + half_width_times2
    if (lo - offset_times2) % 2 != 0:
        lo += 1
    return tuple(range(lo, hi + 1, 2))


class CritEngine:
    """
    Base class of the interchangeable Crit algorithms.

    Subclasses implement _compute; crit() performs the shared rank check and
    the coset sanity check on the result.
    """

    name = "base"

    def crit(self, pi: LanglandsParam, sigma: LanglandsParam) -> CritSet:
        ensure_rank_pair(pi, sigma)
        result = self._compute(pi, sigma)

        expected = coset_of(pi.n, sigma.n)
        if result.coset_offset != expected:
            raise ValueError(f"{self.name} engine returned a set in the wrong coset {result.coset_offset}")

        logger.debug("%s engine: n=%s m=%s -> %s", self.name, pi.n, sigma.n, result.to_strings())
        return result

    def _compute(self, pi: LanglandsParam, sigma: LanglandsParam) -> CritSet:
        raise NotImplementedError

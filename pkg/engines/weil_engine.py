"""
Engine A: Crit by scanning the poles of the archimedean Gamma factors of
tau = pi^W (x) sigma^W and of its dual.
"""

from typing import FrozenSet, List, Tuple

from engines.base import CritEngine, coset_window, ensure_rank_pair
from log_config import get_logger
from models import (
    CritSet,
    HalfInt,
    LanglandsParam,
    PipelineInvariantError,
    WeilIrrep,
    WeilRep,
    coset_of,
    is_exceptional,
    kappa,
    kappa_prime,
)

logger = get_logger(__name__)

# Extra room on each side of the scan window beyond (l_1 + l'_1)/2
WINDOW_MARGIN = 2


def to_weil(p: LanglandsParam) -> WeilRep:
    """
    Weil-group parameter of J(-w, l) (x) sgn^delta.
    :param p: Validated Langlands parameter
    :return: floor(n/2) two dimensional constituents (l_i, -w/2) plus (sgn^delta, -w/2) for odd n
    """
    shift = -p.half_w
    constituents = [WeilIrrep.two_dim(l_i, shift) for l_i in p.positive_l]
    if p.n % 2 == 1:
        constituents.append(WeilIrrep.one_dim(p.delta, shift))
    return WeilRep(tuple(constituents))


def _tensor_irreps(x: WeilIrrep, y: WeilIrrep) -> List[WeilIrrep]:
    t = x.shift + y.shift
    if x.is_two_dim and y.is_two_dim:
        out = [WeilIrrep.two_dim(x.l + y.l, t)]
        diff = abs(x.l - y.l)
        if diff == 0:
            out.extend([WeilIrrep.one_dim(0, t), WeilIrrep.one_dim(1, t)])
        else:
            out.append(WeilIrrep.two_dim(diff, t))
        return out
    if x.is_two_dim:
        return [WeilIrrep.two_dim(x.l, t)]
    if y.is_two_dim:
        return [WeilIrrep.two_dim(y.l, t)]
    return [WeilIrrep.one_dim(x.eps + y.eps, t)]


def tensor(a: WeilRep, b: WeilRep) -> WeilRep:
    """Fully expanded tensor product; (0, t) is always split into (+, t) + (-, t)."""
    constituents: List[WeilIrrep] = []
    for x in a:
        for y in b:
            constituents.extend(_tensor_irreps(x, y))
    return WeilRep(tuple(constituents))


def dual(r: WeilRep) -> WeilRep:
    """Contragredient: every shift t is negated."""
    return WeilRep(tuple(WeilIrrep(shift=-c.shift, l=c.l, eps=c.eps) for c in r))


def dimension(r: WeilRep) -> int:
    return r.dim


def gamma_factors(r: WeilRep) -> List[Tuple[str, HalfInt]]:
    """
    Symbolic L(s, r) as a list of factors ("C", b) for Gamma_C(s + b) and
    ("R", a) for Gamma_R(s + a).
    """
    factors = []
    for c in r:
        if c.is_two_dim:
            factors.append(("C", c.shift + HalfInt.half(c.l)))
        else:
            factors.append(("R", c.shift + c.eps))
    return factors


def render_gamma_factors(r: WeilRep) -> List[str]:
    return [f"Gamma_{kind}(s + {shift})" for kind, shift in gamma_factors(r)]


def pole_set(r: WeilRep, lo: HalfInt, hi: HalfInt) -> FrozenSet[HalfInt]:
    """
    Poles of L(s, r) inside the closed window [lo, hi].

    Gamma_C(s + b) has poles at s = -b - j and Gamma_R(s + a) at s = -a - 2j, j >= 0.
    :param r: Weil representation
    :param lo: Lower end of the window
    :param hi: Upper end of the window
    :return: The poles as HalfInt values
    """
    poles = set()
    for kind, shift in gamma_factors(r):
        step = 2 if kind == "C" else 4
        start = (-shift).times2
        # walk down from the first pole, skipping what lies above the window
        if start > hi.times2:
            skip = (start - hi.times2 + step - 1) // step
            start -= skip * step
        for value in range(start, lo.times2 - 1, -step):
            poles.add(HalfInt(value))
    return frozenset(poles)


def tau_closed_form(pi: LanglandsParam, sigma: LanglandsParam) -> WeilRep:
    """
    Decomposition of tau read off constituent by constituent from the two
    spectra, without multiplying Weil representations.
    """
    shift = -kappa_prime(pi, sigma)
    constituents: List[WeilIrrep] = []

    def add_two_dim(l_value: int):
        if l_value == 0:
            constituents.extend([WeilIrrep.one_dim(0, shift), WeilIrrep.one_dim(1, shift)])
        else:
            constituents.append(WeilIrrep.two_dim(l_value, shift))

    for l_i in pi.positive_l:
        for l_j in sigma.positive_l:
            add_two_dim(l_i + l_j)
            add_two_dim(abs(l_i - l_j))
    if sigma.n % 2 == 1:
        for l_i in pi.positive_l:
            add_two_dim(l_i)
    if pi.n % 2 == 1:
        for l_j in sigma.positive_l:
            add_two_dim(l_j)
    if is_exceptional(pi.n, sigma.n):
        constituents.append(WeilIrrep.one_dim(pi.delta + sigma.delta, shift))
    return WeilRep(tuple(constituents))


def scan_half_width(pi: LanglandsParam, sigma: LanglandsParam) -> HalfInt:
    return HalfInt.half(pi.l[0] + sigma.l[0] + 2 * WINDOW_MARGIN)


def crit_gamma(pi: LanglandsParam, sigma: LanglandsParam) -> CritSet:
    """
    Critical numbers by brute-force pole scanning.

    t is critical when neither L(s, tau) has a pole at t nor L(s, dual tau)
    has a pole at 1 - t.
    """
    ensure_rank_pair(pi, sigma)
    offset = coset_of(pi.n, sigma.n)
    center = kappa(pi, sigma)
    candidates = coset_window(center.times2, scan_half_width(pi, sigma).times2, offset.times2)
    if not candidates:
        return CritSet.empty(offset)

    tau = tensor(to_weil(pi), to_weil(sigma))
    if dimension(tau) != pi.n * sigma.n:
        raise PipelineInvariantError(f"tau has dimension {dimension(tau)}, expected {pi.n * sigma.n}")
    t_lo, t_hi = HalfInt(candidates[0]), HalfInt(candidates[-1])
    poles = pole_set(tau, t_lo, t_hi)
    dual_poles = pole_set(dual(tau), 1 - t_hi, 1 - t_lo)
    logger.debug(
        "Pole scan over [%s, %s]: %d poles of tau, %d of its dual", t_lo, t_hi, len(poles), len(dual_poles)
    )

    values = []
    for times2 in candidates:
        t = HalfInt(times2)
        if t not in poles and (1 - t) not in dual_poles:
            values.append(t)
    return CritSet(tuple(values), offset)


class WeilEngine(CritEngine):
    name = "gamma"

    def _compute(self, pi: LanglandsParam, sigma: LanglandsParam) -> CritSet:
        return crit_gamma(pi, sigma)

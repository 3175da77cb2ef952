"""
Engine C: critical numbers from highest weights.

The pair is normalized so that l_1 > l'_1, the relative position of the two
spectra is recorded, and the weights u, v of rank 2r are built from the dual
weight of pi and the shifted weight lambda of sigma. After the defect step the
splitting maps turn the inequality system into two interlacing conditions,
each of which cuts out an integer interval of twists s. Crit is the image of
their intersection under s -> s - (n-m)/2 + 1.

All indices below are 1-based, as in the formulas they implement.
"""

from typing import Callable, List, Optional, Sequence, Tuple, Union

from engines.base import CritEngine, ensure_rank_pair
from engines.inequality_engine import parity_eps, parity_set_contains
from log_config import get_logger
from models import (
    CritSet,
    DefectNonzero,
    DominantWeight,
    EmptyCertificate,
    HalfInt,
    IntInterval,
    InvalidParameterError,
    LanglandsParam,
    NormalizedPair,
    PipelineInvariantError,
    PipelineTrace,
    PositionData,
    PureWeight,
    RankMismatch,
    CoincidenceError,
    coset_of,
    dual_weight,
    is_exceptional,
)

logger = get_logger(__name__)

Vector = Tuple[int, ...]
WeightLike = Union[DominantWeight, Sequence[int]]


def _entries(y: WeightLike) -> Vector:
    if isinstance(y, DominantWeight):
        return y.entries
    return tuple(y)


def _check(condition: bool, message: str):
    if not condition:
        raise PipelineInvariantError(message)


def _is_dominant(y: Sequence[int]) -> bool:
    return all(y[i] >= y[i + 1] for i in range(len(y) - 1))


def _purity_weight(y: Sequence[int]) -> Optional[int]:
    """wt(y) when y is pure, None otherwise."""
    if not y:
        return None
    wt = y[0] + y[-1]
    if all(y[i] + y[len(y) - 1 - i] == wt for i in range(len(y))):
        return wt
    return None


# ---------------------------------------------------------------------------
# Normalization and position data
# ---------------------------------------------------------------------------


def normalize_pair(pi: LanglandsParam, sigma: LanglandsParam) -> Union[NormalizedPair, EmptyCertificate]:
    """
    Order the pair so that l_1 > l'_1.
    :return: The ordered pair, or a certificate of emptiness when l_1 = l'_1
    """
    ensure_rank_pair(pi, sigma)
    if pi.l[0] > sigma.l[0]:
        return NormalizedPair(pi, sigma, swapped=False)
    if pi.l[0] < sigma.l[0]:
        return NormalizedPair(sigma, pi, swapped=True)
    return EmptyCertificate(f"coincident spectra l_1 = l'_1 = {pi.l[0]}")


def screen_pair(pair: Union[NormalizedPair, EmptyCertificate]) -> Optional[EmptyCertificate]:
    """
    Reject pairs sharing a nonzero spectral value; such pairs have no critical numbers.
    """
    if isinstance(pair, EmptyCertificate):
        return pair
    shared = (set(pair.pi.l) & set(pair.sigma.l)) - {0}
    if shared:
        return EmptyCertificate(f"coincident spectra value {max(shared)}", swapped=pair.swapped)
    return None


def position_tuple(l: Sequence[int], l_prime: Sequence[int]) -> PositionData:
    """
    For every j the unique a_j in [1, n-1] with l_{a_j} > l'_j >= l_{1+a_j}.
    :param l: Spectrum of the larger side, l_1 > l'_1
    :param l_prime: Spectrum of the other side
    :return: The position tuple with its jump indices
    """
    n, m = len(l), len(l_prime)
    a = []
    for j, value in enumerate(l_prime, start=1):
        if value != 0 and value in l:
            raise CoincidenceError(f"l'_{j} = {value} coincides with an entry of l")
        found = [i for i in range(1, n) if l[i - 1] > value >= l[i]]
        _check(len(found) == 1, f"no position for l'_{j} = {value}; the pair is not normalized")
        a.append(found[0])

    exceptional = is_exceptional(n, m)
    mid = (m + 1) // 2
    for j in range(1, m + 1):
        if exceptional and j == mid:
            _check(a[j - 1] == (n - 1) // 2, f"middle position a_{j} = {a[j - 1]} != (n-1)/2")
        else:
            _check(a[j - 1] + a[m - j] == n, f"a_{j} + a_{m + 1 - j} != n")

    jumps = tuple(j for j in range(1, m) if a[j - 1] < a[j])
    k = len(jumps)
    for kap in range(1, k + 1):
        if exceptional and k % 2 == 1 and kap == (k + 1) // 2:
            _check(jumps[kap - 1] == mid, f"middle jump j_{kap} = {jumps[kap - 1]} != (m+1)/2")
        else:
            _check(jumps[kap - 1] + jumps[k - kap] == m, f"jumps j_{kap} and j_{k + 1 - kap} do not sum to m")

    return PositionData(a=tuple(a), jumps=jumps, exceptional=exceptional)


def lambda_from(nu: PureWeight, pos: PositionData, n: int) -> Tuple[Vector, Optional[Vector], Optional[Vector]]:
    """
    lambda_j = nu_j + a_j - j, plus the modified and truncated variants in the exceptional case.
    :param nu: Highest weight of the smaller side
    :param pos: Position data of the same pair
    :param n: Rank of the larger side
    :return: (lambda, lambda_mod, lambda_tr); the last two are None outside the exceptional case with m > 1
    """
    m = pos.m
    lam = tuple(nu.at(j) + pos.a_at(j) - j for j in range(1, m + 1))
    _check(_is_dominant(lam), f"lambda = {lam} is not dominant")

    target = nu.wt + n - m - 1
    mid = (m + 1) // 2
    for j in range(1, m + 1):
        if pos.exceptional and j == mid:
            _check(2 * lam[j - 1] == target - 1, f"2 lambda_{j} != w' + n - m - 2")
        else:
            _check(lam[j - 1] + lam[m - j] == target, f"lambda_{j} + lambda_{m + 1 - j} != w' + n - m - 1")

    if not pos.exceptional or m == 1:
        return lam, None, None
    lam_mod = lam[:mid] + tuple(x - 1 for x in lam[mid:])
    lam_tr = lam[: mid - 1] + lam[mid:]
    _check(_purity_weight(lam_mod) is not None, f"lambda_mod = {lam_mod} is not pure")
    _check(_purity_weight(lam_tr) is not None, f"lambda_tr = {lam_tr} is not pure")
    return lam, lam_mod, lam_tr


# ---------------------------------------------------------------------------
# The weights u and v
# ---------------------------------------------------------------------------


def build_uv(mu_check: PureWeight, lam: Sequence[int], pos: PositionData, n: int) -> Tuple[Vector, Vector, str]:
    """
    Build u and v0 (v = v0 - s) of length 2r.
    :param mu_check: Dual highest weight of the larger side
    :param lam: lambda of the smaller side
    :param pos: Position data
    :param n: Rank of the larger side
    :return: (u, v0, case tag)
    """
    r = pos.r
    m = pos.m
    mid = (m + 1) // 2

    def mu(i: int) -> int:
        return mu_check.at(i)

    def la(j: int) -> int:
        return lam[j - 1]

    u: List[int] = []
    v0: List[int] = []
    for rho in range(1, r + 1):
        j_rho, j_prev = pos.jump(rho), pos.jump(rho - 1)
        a_rho = pos.a_at(j_rho)
        u.extend([mu(a_rho), mu(1 + a_rho)])
        v0.extend([la(1 + j_prev), la(j_rho)])

    if not pos.exceptional:
        tag = "regular"
    elif r % 2 == 1:
        tag = "exceptional-odd"
        middle = (r + 1) // 2
        u[r - 1], u[r] = mu((n - 1) // 2), mu((n + 3) // 2) - 1
        v0[r - 1] = v0[r] = la(mid)
        for idx in range(2 * middle, 2 * r):
            u[idx] -= 1
            v0[idx] -= 1
    else:
        tag = "exceptional-even"
        v0[r - 1] = la(pos.jump(r // 2) - 1)

    return tuple(u), tuple(v0), tag


def _check_uv(u: Vector, v0: Vector, tag: str, w: int, w_prime: int, n: int, m: int):
    _check(_is_dominant(u), f"u = {u} is not dominant")
    _check(_is_dominant(v0), f"v0 = {v0} is not dominant")
    wt_u = _purity_weight(u)
    wt_v = _purity_weight(v0)
    expected_u = -w - 1 if tag == "exceptional-odd" else -w
    expected_v = w_prime + n - m - 2 if tag == "exceptional-odd" else w_prime + n - m - 1
    _check(wt_u == expected_u, f"wt(u) = {wt_u}, expected {expected_u}")
    _check(wt_v == expected_v, f"wt(v0) = {wt_v}, expected {expected_v}")
    r = len(u) // 2
    if tag == "exceptional-odd":
        _check(defect(v0) == 0, "the middle entries of v must agree in the odd exceptional case")
    if tag == "exceptional-even":
        _check(defect(u) == 0, "d(u) must vanish in the even exceptional case")
    _check(len(u) == len(v0) == 2 * r, "u and v0 must have the same even length")


def defect(y: WeightLike) -> int:
    """d(y) = y_r - y_{r+1} for y of length 2r."""
    entries = _entries(y)
    if len(entries) % 2 != 0 or not entries:
        raise ValueError(f"the defect needs a weight of even length, got {len(entries)}")
    r = len(entries) // 2
    return entries[r - 1] - entries[r]


def _raise_second_half(y: Vector, d: int) -> Vector:
    r = len(y) // 2
    return y[:r] + tuple(x + d for x in y[r:])


def hat_modify(u: WeightLike, v0: WeightLike) -> Tuple[Vector, Vector, int]:
    """
    Add d = min(d(u), d(v)) to the last r entries of both weights.
    :return: (u_hat, v0_hat, d)
    """
    u, v0 = _entries(u), _entries(v0)
    d = min(defect(u), defect(v0))
    return _raise_second_half(u, d), _raise_second_half(v0, d), d


def mu_tilde_lambda_tilde(u_hat: WeightLike, v0_hat: WeightLike, w: int, d: int) -> Tuple[Vector, Vector]:
    """
    mu_tilde is the dual of u_hat; lambda_tilde is v0_hat, the twist s having cancelled.
    """
    u_hat, v0_hat = _entries(u_hat), _entries(v0_hat)
    mu_tilde = tuple(-x for x in reversed(u_hat))
    wt = _purity_weight(u_hat)
    if wt is not None and wt == d - w:
        _check(mu_tilde == tuple(x + w - d for x in u_hat), "dual(u_hat) != u_hat + w - d")
    return mu_tilde, v0_hat


def mu_tilde_explicit(mu: PureWeight, pos: PositionData, d: int) -> Vector:
    """
    Closed form of mu_tilde in the regular case: mu_{a_{j_rho}} and
    mu_{1+a_{j_rho}}, lowered by d in the first half.
    """
    r = pos.r
    out = []
    for rho in range(1, r + 1):
        a_rho = pos.a_at(pos.jump(rho))
        out.append(mu.at(a_rho) - (d if 2 * rho - 1 <= r else 0))
        out.append(mu.at(1 + a_rho) - (d if 2 * rho <= r else 0))
    return tuple(out)


# ---------------------------------------------------------------------------
# Splitting maps
# ---------------------------------------------------------------------------


def _theta_indices(r: int, which: int, prime: bool) -> List[int]:
    if r % 2 == 0:
        if not prime and which == 1:
            return [1] + list(range(2, r + 1, 2)) + list(range(r + 3, 2 * r, 2)) + [2 * r]
        if not prime and which == 2:
            return list(range(1, r, 2)) + [r + 1] + list(range(r + 2, 2 * r + 1, 2))
        if prime and which == 1:
            return list(range(2, r + 1, 2)) + list(range(r + 1, 2 * r, 2))
        return list(range(1, r, 2)) + list(range(r + 2, 2 * r + 1, 2))
    if not prime and which == 1:
        return [1] + list(range(2, r, 2)) + list(range(r + 2, 2 * r, 2)) + [2 * r]
    if not prime and which == 2:
        return list(range(1, r + 1, 2)) + list(range(r + 1, 2 * r + 1, 2))
    if prime and which == 1:
        return list(range(2, r, 2)) + [r + 1] + list(range(r + 2, 2 * r, 2))
    return list(range(1, r + 1, 2)) + list(range(r + 3, 2 * r + 1, 2))


def _split(y: WeightLike, which: int, prime: bool) -> Vector:
    entries = _entries(y)
    if which not in (1, 2):
        raise ValueError(f"which must be 1 or 2, got {which}")
    if len(entries) % 2 != 0 or not entries:
        raise ValueError(f"splitting maps need a weight of even length, got {len(entries)}")
    r = len(entries) // 2
    constrained = (r % 2 == 0) != prime
    if constrained and defect(entries) != 0:
        raise DefectNonzero(f"d(y) = {defect(entries)} but the splitting map needs a weight of defect 0")
    if r == 1:
        return (entries[0],) if prime else entries
    return tuple(entries[i - 1] for i in _theta_indices(r, which, prime))


def split_theta(y: WeightLike, which: int) -> Vector:
    """theta_which: rank 2r -> rank r+1. For even r the argument must have defect 0."""
    return _split(y, which, prime=False)


def split_theta_prime(z: WeightLike, which: int) -> Vector:
    """theta'_which: rank 2r -> rank r. For odd r the argument must have defect 0."""
    return _split(z, which, prime=True)


# ---------------------------------------------------------------------------
# Embedding intervals
# ---------------------------------------------------------------------------


def emb_interval(beta: WeightLike, alpha: WeightLike) -> IntInterval:
    """
    Emb(beta, alpha) = {s : alpha_rho >= beta_rho - s >= alpha_{rho+1}}.
    :param beta: Weight of rank r
    :param alpha: Weight of rank r+1
    :return: The (possibly empty) integer interval of twists
    """
    beta, alpha = _entries(beta), _entries(alpha)
    if len(alpha) != len(beta) + 1:
        raise RankMismatch(f"ranks {len(beta)} and {len(alpha)} do not differ by one")
    if not beta:
        return IntInterval(0, -1)
    lo = max(b - alpha[rho] for rho, b in enumerate(beta))
    hi = min(b - alpha[rho + 1] for rho, b in enumerate(beta))
    return IntInterval(lo, hi)


def system_holds(u: WeightLike, v0: WeightLike, s: int) -> bool:
    """The 4r-term system u_{2rho-1} >= v_{2rho-1} >= v_{2rho} >= u_{2rho} with v = v0 - s."""
    u, v0 = _entries(u), _entries(v0)
    for rho in range(len(u) // 2):
        a, b = 2 * rho, 2 * rho + 1
        if not (u[a] >= v0[a] - s >= v0[b] - s >= u[b]):
            return False
    return True


def _interlaces(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    return all(alpha[rho] >= beta[rho] >= alpha[rho + 1] for rho in range(len(beta)))


def theta_embeddings_hold(y: WeightLike, z: WeightLike, s: int) -> bool:
    """
    The splitting-map side of the equivalence for y of defect 0:
    theta'_i(z) - s < theta_i(y) for even r and theta'_i(y) - s < theta_i(z) for odd r.
    """
    y, z = _entries(y), _entries(z)
    r = len(y) // 2
    big, small = (y, z) if r % 2 == 0 else (z, y)
    for which in (1, 2):
        beta = tuple(x - s for x in split_theta_prime(small, which))
        if not _interlaces(beta, split_theta(big, which)):
            return False
    return True


def covering_window(y: WeightLike, z: WeightLike) -> IntInterval:
    """An s-window outside of which neither side of the equivalence can hold."""
    y, z = _entries(y), _entries(z)
    return IntInterval(min(y + z) - max(y + z) - 1, max(y + z) - min(y + z) + 1)


def splitting_equivalence_holds(y: WeightLike, z: WeightLike, window: Optional[IntInterval] = None) -> bool:
    """
    Compare the inequality system with the two splitting-map interlacings for every s in the window.
    :param y: Pure weight of rank 2r with defect 0
    :param z: Pure weight of rank 2r
    :return: True when both sides agree for every s
    """
    y, z = _entries(y), _entries(z)
    r = len(y) // 2
    u, v0 = (y, z) if r % 2 == 0 else (z, y)
    window = window if window is not None else covering_window(y, z)
    for s in window:
        if system_holds(u, v0, s) != theta_embeddings_hold(y, z, s):
            logger.warning("Splitting-map equivalence fails for y=%s z=%s s=%d", y, z, s)
            return False
    return True


# ---------------------------------------------------------------------------
# The pipeline
# ---------------------------------------------------------------------------


def _t_from_s(s: int, n: int, m: int) -> HalfInt:
    # t = s - (n-m)/2 + 1
    return HalfInt.of(s + 1) - HalfInt.half(n - m)


def _parity_filter(n: int, m: int, w: int, w_prime: int, eps: int) -> Callable[[int], bool]:
    shift = HalfInt.half(n - m + w + w_prime)

    def keep(s: int) -> bool:
        return parity_set_contains(int(HalfInt.of(s + 1) - shift), eps)

    return keep


def crit_embedding(pi: LanglandsParam, sigma: LanglandsParam) -> Tuple[CritSet, PipelineTrace]:
    """
    Run the full highest-weight pipeline.
    :return: Crit together with the record of every intermediate object
    """
    ensure_rank_pair(pi, sigma)
    offset = coset_of(pi.n, sigma.n)
    trace = PipelineTrace()

    normalized = normalize_pair(pi, sigma)
    certificate = screen_pair(normalized)
    if certificate is not None:
        trace.normalized = certificate.swapped
        trace.screened = certificate.reason
        trace.crit = CritSet.empty(offset)
        logger.debug("Pair screened out: %s", certificate.reason)
        return trace.crit, trace

    big, small = normalized.pi, normalized.sigma
    n, m = big.n, small.n
    trace.normalized = normalized.swapped

    pos = position_tuple(big.l, small.l)
    trace.a, trace.jumps, trace.r, trace.exceptional = pos.a, pos.jumps, pos.r, pos.exceptional

    try:
        mu = big.to_weight()
        nu = small.to_weight()
    except InvalidParameterError as e:
        raise PipelineInvariantError(f"weight conversion failed: {e}") from e
    mu_check = dual_weight(mu)
    trace.mu_check = mu_check.entries

    lam, lam_mod, lam_tr = lambda_from(nu, pos, n)
    trace.lambda_, trace.lambda_mod, trace.lambda_tr = lam, lam_mod, lam_tr

    u, v0, tag = build_uv(mu_check, lam, pos, n)
    _check_uv(u, v0, tag, big.w, small.w, n, m)
    trace.u, trace.v0, trace.case_tag = u, v0, tag
    trace.d_u, trace.d_v = defect(u), defect(v0)

    u_hat, v0_hat, d = hat_modify(u, v0)
    trace.u_hat, trace.v0_hat, trace.d = u_hat, v0_hat, d

    mu_tilde, lambda_tilde = mu_tilde_lambda_tilde(u_hat, v0_hat, big.w + (1 if tag == "exceptional-odd" else 0), d)
    trace.mu_tilde, trace.lambda_tilde = mu_tilde, lambda_tilde
    if tag == "regular":
        _check(mu_tilde_explicit(mu, pos, d) == mu_tilde, "closed form of mu_tilde disagrees with dual(u_hat)")

    r = pos.r
    # theta needs d(u_hat) = 0 for even r, theta' needs d(v_hat) = 0 for odd r
    admissible = defect(u_hat) == 0 if r % 2 == 0 else defect(v0_hat) == 0
    trace.defect_admissible = admissible
    if not admissible:
        trace.crit = CritSet.empty(offset)
        logger.debug("Defect admissibility fails for r=%d: d(u)=%d d(v)=%d", r, trace.d_u, trace.d_v)
        return trace.crit, trace

    intervals = []
    for which in (1, 2):
        alpha = split_theta(u_hat, which)
        beta = split_theta_prime(lambda_tilde, which)
        trace.theta_images[f"theta_{which}"] = alpha
        trace.theta_images[f"theta_prime_{which}"] = beta
        intervals.append(emb_interval(beta, alpha))
    trace.emb_intervals = intervals

    common = intervals[0].intersect(intervals[1])
    twists = list(common)
    if pos.exceptional:
        eps = parity_eps(big, small)
        trace.parity_filter = eps
        twists = [s for s in twists if _parity_filter(n, m, big.w, small.w, eps)(s)]

    trace.t_shift = HalfInt.half(n - m) - 1
    crit = CritSet(tuple(_t_from_s(s, n, m) for s in twists), offset)
    trace.crit = crit
    logger.debug("Pipeline r=%d d=%d intervals=%s -> %s", r, d, [i.to_list() for i in intervals], crit.to_strings())
    return crit, trace


def crit_weight_system(pi: LanglandsParam, sigma: LanglandsParam) -> CritSet:
    """
    Critical numbers straight from the weight inequalities
    mu_check_{a_j} >= lambda_j - s >= mu_check_{1+a_j}, with the middle
    condition and the parity filter in the exceptional case.
    """
    ensure_rank_pair(pi, sigma)
    offset = coset_of(pi.n, sigma.n)
    normalized = normalize_pair(pi, sigma)
    if screen_pair(normalized) is not None:
        return CritSet.empty(offset)

    big, small = normalized.pi, normalized.sigma
    n, m = big.n, small.n
    pos = position_tuple(big.l, small.l)
    mu_check = dual_weight(big.to_weight())
    lam, _, _ = lambda_from(small.to_weight(), pos, n)
    mid = (m + 1) // 2

    bounds = IntInterval(-(10**18), 10**18)
    for j in range(1, m + 1):
        if pos.exceptional and j == mid:
            lo = lam[j - 1] - mu_check.at((n - 1) // 2)
            hi = lam[j - 1] - mu_check.at((n + 3) // 2) + 1
        else:
            a_j = pos.a_at(j)
            lo = lam[j - 1] - mu_check.at(a_j)
            hi = lam[j - 1] - mu_check.at(1 + a_j)
        bounds = bounds.intersect(IntInterval(lo, hi))

    twists = list(bounds)
    if pos.exceptional:
        keep = _parity_filter(n, m, big.w, small.w, parity_eps(big, small))
        twists = [s for s in twists if keep(s)]
    return CritSet(tuple(_t_from_s(s, n, m) for s in twists), offset)


class EmbeddingEngine(CritEngine):
    name = "embedding"

    def _compute(self, pi: LanglandsParam, sigma: LanglandsParam) -> CritSet:
        crit, _ = crit_embedding(pi, sigma)
        return crit

    def crit_with_trace(self, pi: LanglandsParam, sigma: LanglandsParam) -> Tuple[CritSet, PipelineTrace]:
        return crit_embedding(pi, sigma)

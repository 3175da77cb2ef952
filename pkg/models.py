"""
Data types shared by the engines, the branching toolkit and the CLI.

All values are immutable after construction. Weight entries and Langlands
l-entries are plain integers; every quantity that can be half-integral
(shifts t, kappa, the bound L, w/2) is a HalfInt.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------


class CritnumError(ValueError):
    """Base class for every error raised by critnum."""

    rule = "CritnumError"

    def to_dict(self) -> Dict[str, Any]:
        return {"rule": self.rule, "message": str(self)}


@dataclass(frozen=True)
class Violation:
    """
    One violated invariant of an input value.
    """
    rule: str
    field: str
    index: Optional[int]
    message: str

    def to_dict(self) -> Dict[str, Any]:
        return {"rule": self.rule, "field": self.field, "index": self.index, "message": self.message}


class InvalidParameterError(CritnumError):
    """Raised with the complete list of violations found while validating an input."""

    def __init__(self, violations: Iterable[Violation]):
        self.violations: List[Violation] = list(violations)
        super().__init__("; ".join(v.message for v in self.violations) or "invalid parameter")

    @property
    def rule(self) -> str:
        return self.violations[0].rule if self.violations else "InvalidParameter"

    def to_dict(self) -> Dict[str, Any]:
        first = self.violations[0] if self.violations else None
        return {
            "rule": self.rule,
            "field": first.field if first else None,
            "index": first.index if first else None,
            "message": str(self),
            "violations": [v.to_dict() for v in self.violations],
        }


class RankPairExcluded(CritnumError):
    rule = "RankPairExcluded"


class CoincidenceError(CritnumError):
    rule = "CoincidenceError"


class DefectNonzero(CritnumError):
    rule = "DefectNonzero"


class RankMismatch(CritnumError):
    rule = "RankMismatch"


class EnumerationTooLarge(CritnumError):
    rule = "EnumerationTooLarge"


class PipelineInvariantError(CritnumError):
    """An internal identity of an engine failed; always a bug."""

    rule = "PipelineInvariantError"


# ---------------------------------------------------------------------------
# Exact scalars
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class HalfInt:
    """
    Exact element of (1/2)Z stored as twice its value.
    """
    times2: int

    def __post_init__(self):
        if isinstance(self.times2, bool) or not isinstance(self.times2, int):
            raise TypeError(f"HalfInt needs an integer numerator, got {self.times2!r}")

    @classmethod
    def of(cls, value: Union[int, "HalfInt"]) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        return cls(2 * int(value))

    @classmethod
    def half(cls, numerator: int) -> "HalfInt":
        """The value numerator/2."""
        return cls(int(numerator))

    @classmethod
    def parse(cls, text: Union[str, int]) -> "HalfInt":
        """
        Parse "a" or "b/2".
        :param text: Decimal integer or a numerator over 2
        :return: The parsed value
        """
        if isinstance(text, int) and not isinstance(text, bool):
            return cls.of(text)
        raw = str(text).strip()
        if "/" in raw:
            num, den = raw.split("/", 1)
            if den.strip() != "2":
                raise ValueError(f"Not a half-integer: {text!r}")
            return cls(int(num.strip()))
        return cls.of(int(raw))

    @property
    def is_integral(self) -> bool:
        return self.times2 % 2 == 0

    def floor(self) -> int:
        return self.times2 // 2

    def ceil(self) -> int:
        return -((-self.times2) // 2)

    def in_coset(self, offset: "HalfInt") -> bool:
        """True when self - offset is an integer."""
        return (self.times2 - offset.times2) % 2 == 0

    def __int__(self) -> int:
        if not self.is_integral:
            raise ValueError(f"{self} is not an integer")
        return self.times2 // 2

    def __add__(self, other: Union["HalfInt", int]) -> "HalfInt":
        other = HalfInt.of(other)
        return HalfInt(self.times2 + other.times2)

    __radd__ = __add__

    def __sub__(self, other: Union["HalfInt", int]) -> "HalfInt":
        other = HalfInt.of(other)
        return HalfInt(self.times2 - other.times2)

    def __rsub__(self, other: Union["HalfInt", int]) -> "HalfInt":
        return HalfInt.of(other) - self

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.times2)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.times2))

    def __str__(self) -> str:
        if self.is_integral:
            return str(self.times2 // 2)
        return f"{self.times2}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


def coset_of(n: int, m: int) -> HalfInt:
    """Canonical representative (0 or 1/2) of the class (n+m)/2 mod 1."""
    return HalfInt((n + m) % 2)


# ---------------------------------------------------------------------------
# Highest weights
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DominantWeight:
    """
    Element of X+(n): a non-increasing integer vector.
    """
    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        violations = self._violations()
        if violations:
            raise InvalidParameterError(violations)

    def _violations(self) -> List[Violation]:
        if len(self.entries) == 0:
            return [Violation("BadRank", "entries", None, "a weight needs rank >= 1")]
        return [
            Violation("NotDominant", "entries", i + 1, f"entry {i + 1} is smaller than entry {i + 2}")
            for i in range(len(self.entries) - 1)
            if self.entries[i] < self.entries[i + 1]
        ]

    @property
    def rank(self) -> int:
        return len(self.entries)

    def at(self, i: int) -> int:
        """1-based component access."""
        return self.entries[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def to_list(self) -> List[int]:
        return list(self.entries)


@dataclass(frozen=True)
class PureWeight(DominantWeight):
    """
    Element of X0+(n): dominant with entries[i] + entries[n+1-i] constant.
    """

    def _violations(self) -> List[Violation]:
        violations = super()._violations()
        if violations:
            return violations
        wt = self.entries[0] + self.entries[-1]
        n = len(self.entries)
        return [
            Violation("NotPure", "entries", i, f"entries {i} and {n + 1 - i} do not sum to {wt}")
            for i in range(1, n + 1)
            if self.entries[i - 1] + self.entries[n - i] != wt
        ]

    @property
    def wt(self) -> int:
        return self.entries[0] + self.entries[-1]


def dual_weight(mu: DominantWeight) -> DominantWeight:
    """
    The contragredient highest weight, components -mu_{n+1-j}.
    :param mu: Dominant (or pure) weight
    :return: A weight of the same class; wt(dual) = -wt(mu) for pure weights
    """
    return type(mu)(tuple(-x for x in reversed(mu.entries)))


# ---------------------------------------------------------------------------
# Langlands parameters
# ---------------------------------------------------------------------------


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def delta_violations(delta: Any) -> List[Violation]:
    if _is_int(delta) and delta in (0, 1):
        return []
    return [Violation("BadDelta", "delta", None, f"delta must be 0 or 1, got {delta!r}")]


def langlands_violations(n: Any, w: Any, l: Sequence[Any], delta: Any) -> List[Violation]:
    """
    Collect every violated invariant of L0+(n) plus the sign bit.

    Only an unusable rank or l stops the scan; a bad w skips just the parity check.
    """
    violations: List[Violation] = []

    rank_ok = _is_int(n) and n >= 1
    if not rank_ok:
        violations.append(Violation("BadRank", "n", None, f"rank must be an integer >= 1, got {n!r}"))
    w_ok = _is_int(w)
    if not w_ok:
        violations.append(Violation("BadWeight", "w", None, f"w must be an integer, got {w!r}"))
    violations.extend(delta_violations(delta))

    entries = list(l)
    if not all(_is_int(x) for x in entries):
        violations.append(Violation("BadEntry", "l", None, "l entries must be integers"))
        return violations
    if not rank_ok:
        return violations
    if len(entries) != n:
        violations.append(Violation("RankMismatch", "l", None, f"l has {len(entries)} entries, rank is {n}"))
        return violations

    for i in range(1, n):
        if entries[i - 1] <= entries[i]:
            violations.append(
                Violation("NotDecreasing", "l", i, f"l_{i} = {entries[i - 1]} is not > l_{i + 1} = {entries[i]}")
            )
    for i in range(1, (n + 1) // 2 + 1):
        if entries[i - 1] + entries[n - i] != 0:
            violations.append(
                Violation("NotAntisymmetric", "l", i, f"l_{i} + l_{n + 1 - i} = {entries[i - 1] + entries[n - i]} != 0")
            )
    if not w_ok:
        return violations
    for i in range(1, n + 1):
        if (w + entries[i - 1] - n - 1) % 2 != 0:
            violations.append(
                Violation("ParityViolation", "l", i, f"w + l_{i} = {w + entries[i - 1]} is not congruent to n+1 mod 2")
            )
    return violations


@dataclass(frozen=True)
class LanglandsParam:
    """
    Archimedean parameter J(-w, l) (x) sgn^delta with (w, l) in L0+(n).
    """
    n: int
    w: int
    l: Tuple[int, ...]
    delta: int = 0

    def __post_init__(self):
        object.__setattr__(self, "l", tuple(self.l))
        violations = langlands_violations(self.n, self.w, self.l, self.delta)
        if violations:
            raise InvalidParameterError(violations)

    @classmethod
    def from_weight(cls, mu: PureWeight, delta: int = 0) -> "LanglandsParam":
        w, l = weight_to_langlands(mu)
        return cls(n=mu.rank, w=w, l=l, delta=delta)

    @classmethod
    def from_info(cls, info: Dict[str, Any]) -> "LanglandsParam":
        """
        Build a parameter from either {n, w, l, delta} or {mu, delta}.
        :param info: One side of a pair input document
        :return: The validated parameter
        """
        if not isinstance(info, dict):
            raise InvalidParameterError([Violation("BadDocument", "side", None, "each side must be a JSON object")])
        has_mu = "mu" in info
        has_l = any(key in info for key in ("n", "w", "l"))
        if has_mu == has_l:
            raise InvalidParameterError(
                [Violation("AmbiguousForm", "side", None, "give exactly one of {n, w, l} or {mu}")]
            )
        delta = info.get("delta", 0)
        if has_mu:
            mu = info["mu"]
            if not isinstance(mu, list) or not all(_is_int(x) for x in mu):
                raise InvalidParameterError([Violation("BadEntry", "mu", None, "mu must be a list of integers")])
            weight = PureWeight(tuple(mu))
            bad_delta = delta_violations(delta)
            if bad_delta:
                raise InvalidParameterError(bad_delta)
            return cls.from_weight(weight, delta)
        missing = [key for key in ("n", "w", "l") if key not in info]
        if missing:
            raise InvalidParameterError(
                [Violation("MissingField", key, None, f"missing field {key}") for key in missing]
            )
        l = info["l"]
        if not isinstance(l, list):
            raise InvalidParameterError([Violation("BadEntry", "l", None, "l must be a list of integers")])
        return cls(n=info["n"], w=info["w"], l=tuple(l), delta=delta)

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "w": self.w, "l": list(self.l), "delta": self.delta}

    def to_weight(self) -> PureWeight:
        return langlands_to_weight(self.w, self.l)

    def at(self, i: int) -> int:
        """1-based access to l_i."""
        return self.l[i - 1]

    @property
    def positive_l(self) -> Tuple[int, ...]:
        """l_1, ..., l_{floor(n/2)}, the strictly positive entries."""
        return self.l[: self.n // 2]

    @property
    def half_w(self) -> HalfInt:
        return HalfInt.half(self.w)


def validate_langlands(n: Any, w: Any, l: Sequence[Any], delta: Any = 0) -> Union[LanglandsParam, List[Violation]]:
    """
    Validate a raw parameter.
    :return: The parameter, or the complete list of violations
    """
    violations = langlands_violations(n, w, list(l), delta)
    if violations:
        return violations
    return LanglandsParam(n=n, w=w, l=tuple(l), delta=delta)


def weight_to_langlands(mu: PureWeight) -> Tuple[int, Tuple[int, ...]]:
    """
    (w, l) with w = mu_1 + mu_n and l_i = 2 mu_i + n + 1 - w - 2i.
    """
    n = mu.rank
    w = mu.at(1) + mu.at(n)
    return w, tuple(2 * mu.at(i) + n + 1 - w - 2 * i for i in range(1, n + 1))


def langlands_to_weight(w: int, l: Sequence[int]) -> PureWeight:
    """
    mu_i = (w + l_i + 2i - 1 - n) / 2.
    :raises InvalidParameterError: ParityViolation when a numerator is odd
    """
    n = len(l)
    numerators = [w + l[i - 1] + 2 * i - 1 - n for i in range(1, n + 1)]
    violations = [
        Violation("ParityViolation", "l", i, f"w + l_{i} + {2 * i - 1 - n} = {num} is odd")
        for i, num in enumerate(numerators, start=1)
        if num % 2 != 0
    ]
    if violations:
        raise InvalidParameterError(violations)
    return PureWeight(tuple(num // 2 for num in numerators))


def kappa(pi: LanglandsParam, sigma: LanglandsParam) -> HalfInt:
    """(w + w' + 1) / 2."""
    return HalfInt.half(pi.w + sigma.w + 1)


def kappa_prime(pi: LanglandsParam, sigma: LanglandsParam) -> HalfInt:
    """(w + w') / 2."""
    return HalfInt.half(pi.w + sigma.w)


def is_exceptional(n: int, m: int) -> bool:
    return n % 2 == 1 and m % 2 == 1


# ---------------------------------------------------------------------------
# Weil group representations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeilIrrep:
    """
    Irreducible Weil-group representation: (l, t) with l >= 1 when two
    dimensional, (sgn^eps, t) when one dimensional (l is None).
    """
    shift: HalfInt
    l: Optional[int] = None
    eps: Optional[int] = None

    def __post_init__(self):
        if (self.l is None) == (self.eps is None):
            raise ValueError("a Weil irrep is either (l, t) or (sgn^eps, t)")
        if self.l is not None and self.l < 1:
            raise ValueError(f"two dimensional irreps need l >= 1, got {self.l}; expand (0, t) first")
        if self.eps is not None and self.eps not in (0, 1):
            raise ValueError(f"sign exponent must be 0 or 1, got {self.eps}")

    @classmethod
    def two_dim(cls, l: int, t: HalfInt) -> "WeilIrrep":
        return cls(shift=t, l=l)

    @classmethod
    def one_dim(cls, eps: int, t: HalfInt) -> "WeilIrrep":
        return cls(shift=t, eps=eps % 2)

    @property
    def is_two_dim(self) -> bool:
        return self.l is not None

    @property
    def dim(self) -> int:
        return 2 if self.is_two_dim else 1

    def sort_key(self) -> Tuple[int, int, int]:
        if self.is_two_dim:
            return (self.shift.times2, 0, self.l)
        return (self.shift.times2, 1, self.eps)

    def __str__(self) -> str:
        if self.is_two_dim:
            return f"({self.l},{self.shift})"
        return f"(sgn^{self.eps},{self.shift})"


@dataclass(frozen=True)
class WeilRep:
    """
    Semisimple Weil-group representation as a sorted multiset of irreducibles.
    """
    constituents: Tuple[WeilIrrep, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "constituents", tuple(sorted(self.constituents, key=WeilIrrep.sort_key)))

    @property
    def dim(self) -> int:
        return sum(c.dim for c in self.constituents)

    def __iter__(self) -> Iterator[WeilIrrep]:
        return iter(self.constituents)

    def __len__(self) -> int:
        return len(self.constituents)

    def to_strings(self) -> List[str]:
        return [str(c) for c in self.constituents]


# ---------------------------------------------------------------------------
# Results
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CritSet:
    """
    Sorted set of critical numbers, all in coset_offset + Z.
    """
    values: Tuple[HalfInt, ...]
    coset_offset: HalfInt

    def __post_init__(self):
        offset = HalfInt(self.coset_offset.times2 % 2)
        object.__setattr__(self, "coset_offset", offset)
        object.__setattr__(self, "values", tuple(sorted(set(self.values))))
        stray = [str(v) for v in self.values if not v.in_coset(offset)]
        if stray:
            raise ValueError(f"values {stray} are not in the coset {offset} + Z")

    @classmethod
    def empty(cls, coset_offset: HalfInt) -> "CritSet":
        return cls((), coset_offset)

    def __iter__(self) -> Iterator[HalfInt]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __contains__(self, item: HalfInt) -> bool:
        return item in self.values

    @property
    def is_empty(self) -> bool:
        return not self.values

    def to_strings(self) -> List[str]:
        return [str(v) for v in self.values]


@dataclass(frozen=True)
class IntInterval:
    """
    Integer interval [lo, hi]; empty when lo > hi.
    """
    lo: int
    hi: int

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi

    def __contains__(self, s: int) -> bool:
        return self.lo <= s <= self.hi

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def intersect(self, other: "IntInterval") -> "IntInterval":
        return IntInterval(max(self.lo, other.lo), min(self.hi, other.hi))

    def to_list(self) -> List[int]:
        return [self.lo, self.hi]


@dataclass(frozen=True)
class PositionData:
    """
    Relative position of two Langlands spectra (1-based a_j and jump indices).
    """
    a: Tuple[int, ...]
    jumps: Tuple[int, ...]
    exceptional: bool

    @property
    def m(self) -> int:
        return len(self.a)

    @property
    def k(self) -> int:
        return len(self.jumps)

    @property
    def r(self) -> int:
        return self.k + 1

    def a_at(self, j: int) -> int:
        return self.a[j - 1]

    def jump(self, rho: int) -> int:
        """j_rho with the conventions j_0 = 0 and j_{k+1} = m."""
        if rho == 0:
            return 0
        if rho == self.k + 1:
            return self.m
        return self.jumps[rho - 1]


@dataclass
class PipelineTrace:
    """
    Every intermediate object of one run of the highest-weight pipeline.
    """
    normalized: bool = False
    screened: Optional[str] = None
    a: Tuple[int, ...] = ()
    jumps: Tuple[int, ...] = ()
    r: int = 0
    exceptional: bool = False
    lambda_: Optional[Tuple[int, ...]] = None
    lambda_mod: Optional[Tuple[int, ...]] = None
    lambda_tr: Optional[Tuple[int, ...]] = None
    mu_check: Optional[Tuple[int, ...]] = None
    case_tag: Optional[str] = None
    u: Optional[Tuple[int, ...]] = None
    v0: Optional[Tuple[int, ...]] = None
    d_u: Optional[int] = None
    d_v: Optional[int] = None
    d: Optional[int] = None
    u_hat: Optional[Tuple[int, ...]] = None
    v0_hat: Optional[Tuple[int, ...]] = None
    mu_tilde: Optional[Tuple[int, ...]] = None
    lambda_tilde: Optional[Tuple[int, ...]] = None
    theta_images: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    emb_intervals: List[IntInterval] = field(default_factory=list)
    defect_admissible: Optional[bool] = None
    parity_filter: Optional[int] = None
    t_shift: Optional[HalfInt] = None
    crit: Optional[CritSet] = None

    def to_dict(self) -> Dict[str, Any]:
        def as_list(value):
            return list(value) if value is not None else None

        return {
            "normalized": self.normalized,
            "screened": self.screened,
            "a": list(self.a),
            "jumps": list(self.jumps),
            "r": self.r,
            "exceptional": self.exceptional,
            "lambda": as_list(self.lambda_),
            "lambda_mod": as_list(self.lambda_mod),
            "lambda_tr": as_list(self.lambda_tr),
            "mu_check": as_list(self.mu_check),
            "case": self.case_tag,
            "u": as_list(self.u),
            "v0": as_list(self.v0),
            "d_u": self.d_u,
            "d_v": self.d_v,
            "d": self.d,
            "u_hat": as_list(self.u_hat),
            "v0_hat": as_list(self.v0_hat),
            "mu_tilde": as_list(self.mu_tilde),
            "lambda_tilde": as_list(self.lambda_tilde),
            "theta_images": {key: list(value) for key, value in self.theta_images.items()},
            "emb_intervals": [interval.to_list() for interval in self.emb_intervals],
            "defect_admissible": self.defect_admissible,
            "parity_filter": self.parity_filter,
            "t_shift": str(self.t_shift) if self.t_shift is not None else None,
            "crit": self.crit.to_strings() if self.crit is not None else None,
        }


@dataclass(frozen=True)
class TateDecomposition:
    """
    Multiplicities of the Tate modules T_r(s) = det^s; each is 0 or 1.
    """
    multiplicities: Dict[int, int]
    fallback: bool = False

    def __post_init__(self):
        bad = {s: mult for s, mult in self.multiplicities.items() if mult not in (0, 1)}
        if bad:
            raise ValueError(f"multiplicity-one violated at {bad}")

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(s for s, mult in self.multiplicities.items() if mult))

    def intersect(self, other: "TateDecomposition") -> "TateDecomposition":
        common = set(self.support) & set(other.support)
        return TateDecomposition({s: 1 for s in sorted(common)}, fallback=self.fallback or other.fallback)


# ---------------------------------------------------------------------------
# Campaigns
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GenConfig:
    """
    Parameters of a differential fuzz campaign.
    """
    n_range: Tuple[int, int] = (1, 4)
    m_range: Tuple[int, int] = (1, 4)
    l_bound: int = 20
    trials: int = 1000
    seed: int = 42
    boundary_bias: float = 0.2

    def __post_init__(self):
        violations = []
        for name, (lo, hi) in (("n_range", self.n_range), ("m_range", self.m_range)):
            if lo < 1 or lo > hi:
                violations.append(Violation("BadRange", name, None, f"{name} must satisfy 1 <= lo <= hi"))
        if not violations and self.n_range == (1, 1) and self.m_range == (1, 1):
            violations.append(Violation("RankPairExcluded", "n_range", None, "only n = m = 1 would be drawn"))
        if self.l_bound < max(self.n_range[1], self.m_range[1]):
            violations.append(Violation("BadBound", "l_bound", None, "l_bound must be at least the largest rank"))
        if self.trials < 0:
            violations.append(Violation("BadTrials", "trials", None, "trials must be >= 0"))
        if not 0.0 <= self.boundary_bias <= 1.0:
            violations.append(Violation("BadBias", "boundary_bias", None, "boundary_bias must lie in [0, 1]"))
        if violations:
            raise InvalidParameterError(violations)


@dataclass
class MismatchReport:
    """
    Emitted when at least two engines disagree on a pair.
    """
    pi: LanglandsParam
    sigma: LanglandsParam
    results: Dict[str, Optional[CritSet]]
    errors: Dict[str, str]
    first_difference: Optional[HalfInt]
    trace: Optional[PipelineTrace]

    def sort_key(self) -> Tuple:
        return (self.pi.n, self.pi.w, self.pi.l, self.pi.delta, self.sigma.n, self.sigma.w, self.sigma.l, self.sigma.delta)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pi": self.pi.to_dict(),
            "sigma": self.sigma.to_dict(),
            "engines": {name: (crit.to_strings() if crit is not None else None) for name, crit in self.results.items()},
            "errors": dict(self.errors),
            "first_difference": str(self.first_difference) if self.first_difference is not None else None,
            "trace": self.trace.to_dict() if self.trace is not None else None,
        }


@dataclass(frozen=True)
class Emptiness:
    """
    Quick verdict on Crit before any scan: "Empty", "NonEmpty" or "PossiblyNonEmpty".
    """
    kind: str
    reason: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "reason": self.reason}


@dataclass(frozen=True)
class WitnessDiagnostic:
    """
    The closed-form witness t0 = L - 1 + kappa checked against the actual Crit.
    """
    t0: HalfInt
    t0_reflected: HalfInt
    in_coset: bool
    critical: bool
    expected_nonempty: bool

    @property
    def fires(self) -> bool:
        """True when Crit is known to be non-empty but t0 is not in it."""
        return self.expected_nonempty and not self.critical

    def to_dict(self) -> Dict[str, Any]:
        return {
            "t0": str(self.t0),
            "t0_reflected": str(self.t0_reflected),
            "in_coset": self.in_coset,
            "critical": self.critical,
            "fires": self.fires,
        }


@dataclass(frozen=True)
class NormalizedPair:
    """
    A pair ordered so that l_1 > l'_1; swapped records whether the roles were exchanged.
    """
    pi: LanglandsParam
    sigma: LanglandsParam
    swapped: bool


@dataclass(frozen=True)
class EmptyCertificate:
    """
    Proof that Crit is empty, found while normalizing or screening a pair.
    """
    reason: str
    swapped: bool = False


@dataclass(frozen=True)
class Agreement:
    """
    All three engines returned the same set.
    """
    crit: CritSet
    weight_system_agrees: bool = True

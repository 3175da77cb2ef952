"""
Shared pairs and hypothesis strategies.
"""

import pytest
from hypothesis import strategies as st

from models import LanglandsParam


def param(n, w, l, delta=0):
    return LanglandsParam(n=n, w=w, l=tuple(l), delta=delta)


# (pi, sigma, expected Crit as strings)
PAIRS = {
    "shimura": (param(2, 4, (3, -3)), param(1, 0, (0,)), ["3/2", "5/2", "7/2"]),
    "rankin": (param(2, 6, (5, -5)), param(2, 4, (3, -3)), ["5", "6"]),
    "gelbart_jacquet": (param(3, 0, (6, 0, -6), 1), param(1, 0, (0,)), ["-2", "0", "1", "3"]),
    "gelbart_jacquet_twisted": (param(3, 0, (6, 0, -6), 1), param(1, -2, (0,), 1), ["-2", "1"]),
    "four_two": (param(4, 0, (5, 1, -1, -5)), param(2, 1, (2, -2)), ["1"]),
    "coincident": (param(2, 4, (3, -3)), param(2, 0, (3, -3)), []),
    "parity_empty": (param(3, 0, (2, 0, -2)), param(1, 0, (0,)), []),
    "codimension_one": (param(3, 0, (6, 0, -6)), param(2, 0, (3, -3)), ["-1/2", "1/2", "3/2"]),
}


@pytest.fixture(params=sorted(PAIRS))
def known_pair(request):
    return PAIRS[request.param]


@pytest.fixture
def shimura():
    return PAIRS["shimura"]


@pytest.fixture
def rankin():
    return PAIRS["rankin"]


@pytest.fixture
def gelbart_jacquet():
    return PAIRS["gelbart_jacquet"]


@pytest.fixture
def four_two():
    return PAIRS["four_two"]


@st.composite
def langlands_params(draw, n=None, max_rank=5, l_bound=16):
    """Valid parameters; the l entries share one parity and w matches it."""
    if n is None:
        n = draw(st.integers(min_value=1, max_value=max_rank))
    parity = 0 if n % 2 == 1 else draw(st.integers(min_value=0, max_value=1))
    pool = list(range(2 - parity, l_bound + 1, 2))
    positive = sorted(draw(st.lists(st.sampled_from(pool), min_size=n // 2, max_size=n // 2, unique=True)), reverse=True)
    middle = [0] if n % 2 == 1 else []
    l = tuple(positive + middle + [-x for x in reversed(positive)])
    w = 2 * draw(st.integers(min_value=-8, max_value=8)) + (n + 1 - parity) % 2
    delta = draw(st.integers(min_value=0, max_value=1))
    return LanglandsParam(n=n, w=w, l=l, delta=delta)


@st.composite
def param_pairs(draw, max_rank=5):
    pi = draw(langlands_params(max_rank=max_rank))
    if pi.n == 1:
        sigma = draw(langlands_params(n=draw(st.integers(min_value=2, max_value=max_rank))))
    else:
        sigma = draw(langlands_params(max_rank=max_rank))
    return pi, sigma


@st.composite
def dominant_weights(draw, min_rank=1, max_rank=5, low=-6, high=6):
    rank = draw(st.integers(min_value=min_rank, max_value=max_rank))
    entries = draw(st.lists(st.integers(min_value=low, max_value=high), min_size=rank, max_size=rank))
    return tuple(sorted(entries, reverse=True))


@st.composite
def pure_weights(draw, max_rank=5):
    """mu_i + mu_{n+1-i} = wt for every i."""
    rank = draw(st.integers(min_value=1, max_value=max_rank))
    wt = draw(st.integers(min_value=-6, max_value=6))
    half = rank // 2
    top = sorted(draw(st.lists(st.integers(min_value=-4, max_value=8), min_size=half, max_size=half)), reverse=True)
    if rank % 2 == 1:
        # the middle entry is wt/2, so wt must be even and the top half must sit above it
        wt = 2 * (wt // 2)
        middle = [wt // 2]
        top = [max(x, wt // 2) for x in top]
    else:
        middle = []
        top = [max(x, wt - x) for x in top]
        top = sorted(top, reverse=True)
    bottom = [wt - x for x in reversed(top)]
    return tuple(top + middle + bottom)

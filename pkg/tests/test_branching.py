import pytest
from hypothesis import given, settings

from branching import (
    branch_enumerate,
    count_tate_multiplicity,
    emb_set_parity,
    interlaces,
    interlacing_count,
    pipeline_tate_support,
    tate_decomposition,
    tate_multiplicity,
    weyl_dim,
)
from conftest import PAIRS, dominant_weights
from engines.embedding_engine import crit_embedding
from models import EnumerationTooLarge, HalfInt, InvalidParameterError, RankMismatch


def test_interlaces():
    assert interlaces((2, 0), (3, 1, 0))
    assert not interlaces((2, 2), (3, 1, 0))
    with pytest.raises(RankMismatch):
        interlaces((1,), (3, 1, 0))


def test_enumeration_order_and_count():
    weights = [beta.to_list() for beta in branch_enumerate((2, 1, 0))]
    assert weights == [[2, 1], [2, 0], [1, 1], [1, 0]]
    assert interlacing_count((2, 1, 0)) == 4


def test_enumeration_cap():
    with pytest.raises(EnumerationTooLarge):
        list(branch_enumerate((10, 0, -10), cap=50))


def test_enumeration_needs_rank_two():
    with pytest.raises(RankMismatch):
        list(branch_enumerate((3,)))


@pytest.mark.parametrize(
    "mu,expected",
    [((0,), 1), ((1, 0), 2), ((2, 0), 3), ((1, 0, 0), 3), ((1, 1, 0), 3), ((2, 1, 0), 8), ((3, 1), 3)],
)
def test_weyl_dimension(mu, expected):
    assert weyl_dim(mu) == expected


def test_weyl_dimension_needs_a_dominant_weight():
    with pytest.raises(InvalidParameterError):
        weyl_dim((0, 1))


@settings(max_examples=200, deadline=None)
@given(dominant_weights(min_rank=2, max_rank=5, low=-3, high=3))
def test_dimension_is_the_sum_over_branches(alpha):
    assert weyl_dim(alpha) == sum(weyl_dim(beta) for beta in branch_enumerate(alpha))


@settings(max_examples=200, deadline=None)
@given(dominant_weights(min_rank=2, max_rank=4, low=-4, high=4))
def test_enumerated_weights_all_interlace(alpha):
    weights = list(branch_enumerate(alpha))
    assert len(weights) == len(set(weights)) == interlacing_count(alpha)
    assert all(interlaces(beta, alpha) for beta in weights)


def test_tate_multiplicity_of_the_shimura_pair():
    # (0,) against the dual of (-1, -3): the twists 1, 2, 3
    assert [tate_multiplicity((0,), (3, 1), s) for s in range(0, 5)] == [0, 1, 1, 1, 0]


def test_tate_multiplicity_reports_the_route():
    assert count_tate_multiplicity((0,), (3, 1), 2) == (1, False)
    assert count_tate_multiplicity((0,), (3, 1), 2, cap=1) == (1, True)
    assert count_tate_multiplicity((0,), (3, 1), 4, cap=1) == (0, True)


def test_tate_decomposition_matches_emb():
    decomposition = tate_decomposition((0,), (3, 1))
    assert decomposition.support == (1, 2, 3)
    assert not decomposition.fallback


def test_tate_decomposition_with_parity():
    # Gelbart-Jacquet: theta' image (0,), theta image (2, -3), eps = 1
    decomposition = tate_decomposition((0,), (3, -2), parity=(1, 3, 1, 0, 0))
    assert decomposition.support == (-2, 0, 1, 3)


def test_tate_decomposition_falls_back_past_the_cap():
    decomposition = tate_decomposition((0,), (3, 1), cap=1)
    assert decomposition.fallback
    assert decomposition.support == (1, 2, 3)


def test_emb_set_parity():
    assert emb_set_parity((0,), (2, -3), 1, 3, 1, 0, 0) == [-2, 0, 1, 3]
    assert emb_set_parity((-1,), (2, -3), 0, 3, 1, 0, -2) == [-2, 1]


@pytest.mark.parametrize("name", ["shimura", "rankin", "gelbart_jacquet", "gelbart_jacquet_twisted", "four_two"])
def test_tate_support_matches_crit(name):
    pi, sigma, _ = PAIRS[name]
    crit, trace = crit_embedding(pi, sigma)
    big, small = (sigma, pi) if trace.normalized else (pi, sigma)
    support = pipeline_tate_support(trace, big.n, small.n, big.w, small.w)
    shift = HalfInt.half(big.n - small.n) - 1
    assert support == tuple(int(t + shift) for t in crit)


def test_tate_support_of_a_screened_trace_is_empty():
    pi, sigma, _ = PAIRS["coincident"]
    _, trace = crit_embedding(pi, sigma)
    assert pipeline_tate_support(trace, pi.n, sigma.n, pi.w, sigma.w) == ()

import pytest
from hypothesis import given

from conftest import langlands_params, pure_weights
from models import (
    CritSet,
    DominantWeight,
    GenConfig,
    HalfInt,
    IntInterval,
    InvalidParameterError,
    LanglandsParam,
    PureWeight,
    TateDecomposition,
    WeilIrrep,
    WeilRep,
    coset_of,
    dual_weight,
    is_exceptional,
    kappa,
    langlands_to_weight,
    validate_langlands,
    weight_to_langlands,
)


def test_halfint_arithmetic_and_rendering():
    assert str(HalfInt.half(7)) == "7/2"
    assert str(HalfInt.of(-2)) == "-2"
    assert HalfInt.half(3) + HalfInt.half(1) == HalfInt.of(2)
    assert 1 - HalfInt.half(3) == HalfInt.half(-1)
    assert HalfInt.half(-3).floor() == -2
    assert HalfInt.half(-3).ceil() == -1
    assert -HalfInt.half(5) == HalfInt.half(-5)


@pytest.mark.parametrize("text,expected", [("3", 6), ("-5/2", -5), ("0", 0), (" 7/2 ", 7)])
def test_halfint_parse(text, expected):
    assert HalfInt.parse(text).times2 == expected


def test_halfint_rejects_other_denominators():
    with pytest.raises(ValueError):
        HalfInt.parse("1/3")
    with pytest.raises(TypeError):
        HalfInt(1.5)


def test_int_conversion_needs_an_integer():
    assert int(HalfInt.of(4)) == 4
    with pytest.raises(ValueError):
        int(HalfInt.half(1))


def test_coset_of():
    assert coset_of(2, 1) == HalfInt.half(1)
    assert coset_of(3, 1) == HalfInt.of(0)
    assert HalfInt.half(5).in_coset(coset_of(2, 1))
    assert not HalfInt.of(5).in_coset(coset_of(2, 1))


def test_dominant_weight_rejects_increasing_entries():
    with pytest.raises(InvalidParameterError) as info:
        DominantWeight((1, 2, 0))
    assert info.value.rule == "NotDominant"
    assert info.value.violations[0].index == 1


def test_pure_weight_checks_the_sum():
    assert PureWeight((3, 1)).wt == 4
    with pytest.raises(InvalidParameterError) as info:
        PureWeight((3, 1, 0))
    assert info.value.rule == "NotPure"


def test_dual_weight_keeps_the_class():
    dual = dual_weight(PureWeight((3, 1)))
    assert isinstance(dual, PureWeight)
    assert dual.entries == (-1, -3)
    assert dual.wt == -4


@pytest.mark.parametrize(
    "l,rule,index",
    [
        ((3, 2), "NotAntisymmetric", 1),
        ((-3, 3), "NotDecreasing", 1),
        ((2, -2), "ParityViolation", 1),
        ((3, -3, 0), "RankMismatch", None),
    ],
)
def test_langlands_violations_name_the_rule(l, rule, index):
    violations = validate_langlands(2, 4, l)
    assert isinstance(violations, list)
    assert violations[0].rule == rule
    assert violations[0].index == index


def test_all_violations_are_reported():
    violations = validate_langlands(2, 4, (2, 3), delta=2)
    rules = {v.rule for v in violations}
    assert {"BadDelta", "NotDecreasing", "NotAntisymmetric", "ParityViolation"} <= rules


def test_a_bad_weight_does_not_hide_other_violations():
    violations = validate_langlands(2, 4.5, [3, -2], 2)
    assert [v.rule for v in violations] == ["BadWeight", "BadDelta", "NotAntisymmetric"]
    assert violations[2].index == 1


@pytest.mark.parametrize("delta", [1.0, True, "1"])
def test_delta_must_be_a_plain_integer(delta):
    with pytest.raises(InvalidParameterError) as info:
        LanglandsParam(n=2, w=4, l=(3, -3), delta=delta)
    assert info.value.rule == "BadDelta"


def test_valid_parameter_round_trips_through_dict():
    param = LanglandsParam(n=3, w=0, l=(6, 0, -6), delta=1)
    assert LanglandsParam.from_info(param.to_dict()) == param
    assert param.positive_l == (6,)
    assert param.half_w == HalfInt.of(0)


def test_from_info_accepts_a_weight():
    param = LanglandsParam.from_info({"mu": [3, 1], "delta": 1})
    assert (param.n, param.w, param.l, param.delta) == (2, 4, (3, -3), 1)


@pytest.mark.parametrize(
    "info,rule",
    [
        ({"mu": [3, 1], "w": 4}, "AmbiguousForm"),
        ({}, "AmbiguousForm"),
        ({"n": 2, "w": 4}, "MissingField"),
        ({"mu": ["a"]}, "BadEntry"),
        ({"mu": [3, 1], "delta": 3}, "BadDelta"),
        ({"mu": [3, 1], "delta": 1.0}, "BadDelta"),
        ([1, 2], "BadDocument"),
    ],
)
def test_from_info_errors(info, rule):
    with pytest.raises(InvalidParameterError) as excinfo:
        LanglandsParam.from_info(info)
    assert excinfo.value.rule == rule
    assert excinfo.value.to_dict()["rule"] == rule


def test_weight_conversion_example():
    assert weight_to_langlands(PureWeight((3, 1))) == (4, (3, -3))
    assert langlands_to_weight(6, (5, -5)).entries == (5, 1)


def test_langlands_to_weight_parity():
    with pytest.raises(InvalidParameterError) as info:
        langlands_to_weight(3, (3, -3))
    assert info.value.rule == "ParityViolation"


@given(pure_weights())
def test_weight_conversion_is_a_bijection(entries):
    mu = PureWeight(entries)
    param = LanglandsParam.from_weight(mu)
    assert param.to_weight() == mu


@given(pure_weights())
def test_dual_weight_is_an_involution_negating_the_weight(entries):
    mu = PureWeight(entries)
    dual = dual_weight(mu)
    assert dual_weight(dual) == mu
    assert dual.wt == -mu.wt


@given(langlands_params())
def test_parameter_conversion_is_a_bijection(param):
    back = LanglandsParam.from_weight(param.to_weight(), param.delta)
    assert back == param


def test_kappa_and_exceptional():
    pi = LanglandsParam(n=2, w=6, l=(5, -5))
    sigma = LanglandsParam(n=2, w=4, l=(3, -3))
    assert kappa(pi, sigma) == HalfInt.half(11)
    assert is_exceptional(3, 1)
    assert not is_exceptional(3, 2)


def test_weil_irrep_shape():
    with pytest.raises(ValueError):
        WeilIrrep(shift=HalfInt.of(0))
    with pytest.raises(ValueError):
        WeilIrrep.two_dim(0, HalfInt.of(0))
    assert WeilIrrep.one_dim(3, HalfInt.of(0)).eps == 1


def test_weil_rep_is_sorted_multiset():
    t = HalfInt.half(-1)
    a = WeilRep((WeilIrrep.one_dim(1, t), WeilIrrep.two_dim(3, t)))
    b = WeilRep((WeilIrrep.two_dim(3, t), WeilIrrep.one_dim(1, t)))
    assert a == b
    assert a.dim == 3
    assert a.to_strings() == ["(3,-1/2)", "(sgn^1,-1/2)"]


def test_crit_set_normalizes_and_checks_the_coset():
    crit = CritSet((HalfInt.of(6), HalfInt.of(5), HalfInt.of(5)), HalfInt.of(2))
    assert crit.to_strings() == ["5", "6"]
    assert crit.coset_offset == HalfInt.of(0)
    with pytest.raises(ValueError):
        CritSet((HalfInt.half(1),), HalfInt.of(0))


def test_int_interval():
    interval = IntInterval(1, 3)
    assert list(interval) == [1, 2, 3]
    assert interval.intersect(IntInterval(3, 8)).to_list() == [3, 3]
    assert IntInterval(2, 1).is_empty
    assert len(IntInterval(2, 1)) == 0


def test_tate_decomposition_multiplicity_one():
    with pytest.raises(ValueError):
        TateDecomposition({1: 2})
    left = TateDecomposition({1: 1, 2: 1, 3: 1})
    right = TateDecomposition({2: 1, 3: 1, 4: 1}, fallback=True)
    both = left.intersect(right)
    assert both.support == (2, 3)
    assert both.fallback


@pytest.mark.parametrize(
    "kwargs,rule",
    [
        ({"n_range": (0, 3)}, "BadRange"),
        ({"n_range": (1, 1), "m_range": (1, 1)}, "RankPairExcluded"),
        ({"l_bound": 2}, "BadBound"),
        ({"trials": -1}, "BadTrials"),
        ({"boundary_bias": 1.5}, "BadBias"),
    ],
)
def test_gen_config_validation(kwargs, rule):
    with pytest.raises(InvalidParameterError) as info:
        GenConfig(**kwargs)
    assert info.value.rule == rule

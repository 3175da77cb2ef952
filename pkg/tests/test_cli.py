import io
import json
import logging

import pytest

from engines import ENGINES
from engines.base import CritEngine
from main import EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main, parse_pair
from models import CritSet, HalfInt, coset_of
from settings import Settings

SHIMURA = {"pi": {"n": 2, "w": 4, "l": [3, -3], "delta": 0}, "sigma": {"n": 1, "w": 0, "l": [0]}}
GELBART_JACQUET = {"pi": {"n": 3, "w": 0, "l": [6, 0, -6], "delta": 1}, "sigma": {"mu": [0]}}
RANKIN = {"pi": {"mu": [5, 1]}, "sigma": {"mu": [3, 1]}}
FOUR_TWO = {"pi": {"n": 4, "w": 0, "l": [5, 1, -1, -5]}, "sigma": {"n": 2, "w": 1, "l": [2, -2]}}


def run(capsys, argv, document=None, monkeypatch=None):
    if document is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(document)))
    status = main(argv)
    out = capsys.readouterr().out
    return status, (json.loads(out) if out.strip() else None)


def test_crit_all_engines(capsys, monkeypatch):
    status, document = run(capsys, ["crit"], SHIMURA, monkeypatch)
    assert status == EXIT_OK
    assert document["crit"] == ["3/2", "5/2", "7/2"]
    assert document["agreement"] is True
    assert set(document["engines"]) == {"gamma", "inequality", "embedding"}


def test_crit_single_engine_from_file(capsys, tmp_path):
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(GELBART_JACQUET))
    status, document = run(capsys, ["crit", "--engine", "gamma", "--input", str(path)])
    assert status == EXIT_OK
    assert document["crit"] == ["-2", "0", "1", "3"]


def test_crit_rejects_a_non_antisymmetric_spectrum(capsys, monkeypatch):
    bad = {"pi": {"n": 2, "w": 4, "l": [3, -1]}, "sigma": {"n": 1, "w": 0, "l": [0]}}
    status, document = run(capsys, ["crit"], bad, monkeypatch)
    assert status == EXIT_INVALID
    assert document["error"]["rule"] == "NotAntisymmetric"
    assert document["error"]["field"] == "l"
    assert document["error"]["index"] == 1


def test_crit_rejects_rank_one_one(capsys, monkeypatch):
    pair = {"pi": {"n": 1, "w": 0, "l": [0]}, "sigma": {"n": 1, "w": 0, "l": [0]}}
    status, document = run(capsys, ["crit"], pair, monkeypatch)
    assert status == EXIT_INVALID
    assert document["error"]["rule"] == "RankPairExcluded"


def test_crit_rejects_broken_json(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("{not json"))
    status = main(["crit"])
    document = json.loads(capsys.readouterr().out)
    assert status == EXIT_INVALID
    assert document["error"]["rule"] == "BadDocument"


def test_crit_rejects_a_missing_side(capsys, monkeypatch):
    status, document = run(capsys, ["crit"], {"pi": SHIMURA["pi"]}, monkeypatch)
    assert status == EXIT_INVALID
    assert document["error"]["rule"] == "MissingField"


def test_trace_of_the_rankin_pair(capsys, monkeypatch):
    status, document = run(capsys, ["trace"], RANKIN, monkeypatch)
    assert status == EXIT_OK
    assert document["d"] == 3
    assert document["mu_tilde"] == [2, 1]
    assert document["lambda_tilde"] == [3, 3]
    assert document["crit"] == ["5", "6"]
    assert document["gamma_factors"] == ["Gamma_C(s + -4)", "Gamma_C(s + -1)"]
    assert document["witness"]["t0"] == "11/2"
    assert document["witness"]["fires"] is True


def test_trace_of_the_four_two_pair(capsys, monkeypatch):
    status, document = run(capsys, ["trace"], FOUR_TWO, monkeypatch)
    assert status == EXIT_OK
    assert document["emb_intervals"] == [[1, 1], [1, 1]]
    assert document["crit"] == ["1"]
    assert document["tau_dim"] == 8
    assert document["normalized"] is False


def test_trace_reports_a_swapped_pair(capsys, monkeypatch):
    swapped = {"pi": SHIMURA["sigma"], "sigma": SHIMURA["pi"]}
    status, document = run(capsys, ["trace"], swapped, monkeypatch)
    assert status == EXIT_OK
    assert document["normalized"] is True


def test_convert_weight_to_parameter(capsys):
    status, document = run(capsys, ["convert", "--mu", "3,1"])
    assert status == EXIT_OK
    assert document == {"w": 4, "l": [3, -3]}


def test_convert_parameter_to_weight(capsys):
    status, document = run(capsys, ["convert", "--w", "4", "--l=3,-3"])
    assert status == EXIT_OK
    assert document == {"mu": [3, 1]}


def test_convert_rejects_an_impure_weight(capsys):
    status, document = run(capsys, ["convert", "--mu", "3,1,0"])
    assert status == EXIT_INVALID
    assert document["error"]["rule"] == "NotPure"


def test_convert_needs_one_form(capsys):
    status, _ = run(capsys, ["convert"])
    assert status == EXIT_USAGE


def test_branch_emb_interval(capsys):
    status, document = run(capsys, ["branch", "--beta", "0", "--alpha=-1,-3"])
    assert status == EXIT_OK
    assert document == {"emb": [1, 3]}


def test_branch_emb_with_tate(capsys):
    status, document = run(capsys, ["branch", "--beta", "0", "--alpha=-1,-3", "--tate"])
    assert status == EXIT_OK
    assert document["tate"] == [1, 2, 3]
    assert document["fallback"] is False


def test_branch_lists_constituents(capsys):
    status, document = run(capsys, ["branch", "--alpha", "2,1,0"])
    assert status == EXIT_OK
    assert document["count"] == 4
    assert document["branches"][0] == [2, 1]
    assert document["weyl_dim"] == document["branch_dim_sum"] == 8


def test_fuzz_summary(capsys):
    status, document = run(capsys, ["fuzz", "--trials", "30", "--seed", "3", "--l-bound", "10"])
    assert status == EXIT_OK
    assert document["mismatches"] == 0
    assert document["seed"] == 3


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["crit", "--engine", "magic"],
        ["branch"],
        ["branch", "--alpha", "1,x"],
        ["fuzz", "--trials", "many"],
        ["branch", "--alpha", "2,1", "--tate"],
    ],
)
def test_usage_errors_exit_64(capsys, argv):
    assert main(argv) == EXIT_USAGE


def test_parse_pair_accepts_both_forms():
    pi, sigma = parse_pair(RANKIN)
    assert (pi.w, pi.l) == (6, (5, -5))
    assert (sigma.w, sigma.l) == (4, (3, -3))


def test_fuzz_seed_defaults_to_the_configured_seed(capsys, monkeypatch):
    monkeypatch.setattr(Settings, "CRITNUM_SEED", 1234)
    status, document = run(capsys, ["fuzz", "--trials", "5", "--l-bound", "10"])
    assert status == EXIT_OK
    assert document["seed"] == 1234


class OnlyFiveEngine(CritEngine):
    name = "gamma"

    def _compute(self, pi, sigma):
        return CritSet((HalfInt.of(5),), coset_of(pi.n, sigma.n))


def test_crit_reports_a_mismatch_with_exit_2(capsys, monkeypatch, caplog):
    monkeypatch.setitem(ENGINES, "gamma", OnlyFiveEngine())
    with caplog.at_level(logging.WARNING):
        status, document = run(capsys, ["crit"], RANKIN, monkeypatch)
    assert status == EXIT_MISMATCH
    assert document["agreement"] is False
    assert document["crit"] is None
    assert document["engines"]["gamma"] == ["5"]
    assert document["engines"]["inequality"] == ["5", "6"]
    assert document["first_difference"] == "6"
    assert any("Engine mismatch" in record.getMessage() for record in caplog.records)

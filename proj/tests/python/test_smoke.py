from pathlib import Path

import pytest

import stanley

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def load(name):
    return stanley.Instance.load(str(FIXTURES / name))


def test_parse_and_round_trip():
    inst = load("r5_eight_vars.txt")
    assert (inst.n, inst.d, inst.r) == (8, 1, 5)
    assert inst.E == ["x6*x7", "x7*x8"]
    assert stanley.Instance.parse(inst.to_text()) == inst


def test_sdepth_and_depth():
    inst = load("five_cubics.txt")
    value, witness = stanley.sdepth(inst)
    assert value == 3
    assert all(len(pair) == 2 for pair in witness)
    assert stanley.sdepth_decision(inst, 4) is None
    assert stanley.depth(inst) == 1
    assert stanley.depth(inst, field="q") == 1
    assert stanley.taylor_depth(inst, field="q") == 1


def test_depth_of_the_rings():
    inst = stanley.Instance.parse("n = 3\nF: x1\n")
    assert stanley.depth(inst) == 3
    assert stanley.depth(inst, module="s-over-i") == 2
    assert stanley.depth(inst, module="s-over-j") == 3


def test_analyze_and_verify():
    inst = load("r5_eight_vars.txt")
    rep = stanley.analyze(inst)
    assert (rep["s"], rep["q"], rep["flags"]["case_r5_t"]) == (16, 15, 7)
    rec = stanley.verify(inst)
    assert rec["status"] == "Verified"
    assert rec["sdepth"] == 2


def test_paths():
    report = stanley.paths(load("seven_vars_a.txt"), "x1*x6", start="x2*x4")
    assert report["built"]
    assert len(report["tug"]["T"]) >= 1


def test_errors_surface_as_stanley_error():
    with pytest.raises(stanley.StanleyError):
        stanley.Instance.parse("n = 3\nF: x1, x1*x2\n")
    with pytest.raises(ValueError):
        stanley.depth(load("five_cubics.txt"), field="reals")


def test_small_campaign_is_reproducible():
    config = "mode = random\nseed = 5\ncount = 20\nn = 6..7\nr = 5\ne_policy = inside_xt\nrequire_t_hypothesis = true\n"
    first = stanley.campaign(config)
    second = stanley.campaign(config, jobs=2)
    assert first["total"] == 20
    assert first["violations"] == 0
    for key in ("verified", "premise_false", "violations"):
        assert first[key] == second[key]
    assert [stanley.canonical_key(i) for i in stanley.generate(config)] == [
        stanley.canonical_key(i) for i in stanley.generate(config)
    ]

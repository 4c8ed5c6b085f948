from artifact.scenarios import (SCENARIOS, Outcome, chain_fork_examples, filtering_join_check, g2_retraction,
                                g3_refutation, positive_control, two_frame_refutation)


def test_outcome_text():
    assert Outcome("x", True, ["a"]).text() == "x: pass\n  a\n"
    assert Outcome("x", False).word == "fail"
    assert Outcome("x", None).word == "inconclusive"


def test_scenario_names():
    assert set(SCENARIOS) == {"figure-ki", "figure-ti", "f6m", "l7", "l8i-retraction", "uu-example",
                              "kost-examples", "filtering-join"}


def test_g3_refutation_larger_k():
    r = g3_refutation(m=1, k=3)
    assert r.passed is True, r.text()


def test_g3_refutation_strategies_agree():
    assert g3_refutation(strategy="f-first").passed is True
    assert g3_refutation(strategy="g-first").passed is True


def test_budget_overrun_is_not_a_refutation():
    r = two_frame_refutation(budget=100)
    assert r.passed is None and r.word == "inconclusive"


def test_positive_control():
    assert positive_control(m=1).passed is True
    assert positive_control(m=3).passed is True


def test_cheap_scenarios_pass():
    for fn in (chain_fork_examples, filtering_join_check, g2_retraction):
        r = fn()
        assert r.passed is True, r.text()

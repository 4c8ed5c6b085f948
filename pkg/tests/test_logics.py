import pytest

from artifact.formulas import axiom, parse_formula
from artifact.frames import catalog_lookup, chain
from artifact.logics import (LogicSpec, character, extension_lattice, h_complete_extensions, hasse_edges,
                             is_theorem, logic, logic_equal, logic_leq, omits, parse_logics, report_lines,
                             sm_closure, th_leq)
from artifact.models import WidthMismatch, build_model, enumerate_models
from artifact.morphisms import canonical_form, isomorphic, reduce


def shapes(frames):
    return {canonical_form(f) for f in frames}


def named(*names):
    return shapes(catalog_lookup(n) for n in names)


def test_sm_g3():
    assert shapes(sm_closure([catalog_lookup("G3")])) == named("L1", "L2", "L3", "F2", "G3")


def test_sm_r2_as_model_classes():
    # every 2-model over the closure of R2 is equivalent to one over L1, L2 or R2
    closure = sm_closure([catalog_lookup("R2")])
    assert shapes(closure) == named("L1", "L2", "L3", "R2")
    small = [catalog_lookup(n) for n in ("L1", "L2", "R2")]
    reps = {canonical_form(reduce(m)[0]) for m in enumerate_models(small, 2)}
    for m in enumerate_models(closure, 2, irreducible_only=True):
        assert canonical_form(m) in reps


def test_sm_c5():
    got = shapes(sm_closure([catalog_lookup("C5")]))
    assert got == named("L1", "L2", "F2", "L3", "plusF2", "R2", "Y2", "Y3", "C5")


def test_is_theorem():
    for L in (logic("R2"), logic("F2"), logic("G3")):
        assert is_theorem(L, parse_formula("x1 -> x1"))
    assert is_theorem(logic("R2"), axiom("KC"))
    assert not is_theorem(logic("F2"), axiom("KC"))
    assert is_theorem(logic("L3"), axiom("LC"))
    assert not is_theorem(logic("L3"), axiom("H(2)"))
    assert is_theorem(logic("F2"), axiom("H(2)"))


def test_th_leq():
    L = logic("L2")
    m = build_model(chain(2), 1, ["0", "1"])
    top = build_model(chain(1), 1, ["1"])
    bottom = build_model(chain(1), 1, ["0"])
    assert th_leq(L, m, m)
    assert th_leq(L, m, top)
    assert not th_leq(L, top, bottom)
    with pytest.raises(WidthMismatch):
        th_leq(L, m, build_model(chain(1), 2, ["11"]))


def _character_contract(L, m):
    d = character(L, m)
    for k in enumerate_models(L.closure, m.n):
        assert k.forces(d) == th_leq(L, m, k)


def test_character_on_one_point():
    L = logic("L1")
    one = build_model(chain(1), 1, ["1"])
    zero = build_model(chain(1), 1, ["0"])
    for m in (one, zero):
        _character_contract(L, m)
    x1 = parse_formula("x1")
    assert one.forces(character(L, one)) and not zero.forces(character(L, one))
    assert is_theorem(L, parse_formula("x1 <-> x1"))
    for k in (one, zero):
        assert k.forces(character(L, one)) == k.forces(x1)
        assert k.forces(character(L, zero)) == k.forces(parse_formula("~x1"))


def test_character_on_two_chain():
    L = logic("L2")
    m = build_model(chain(2), 1, ["0", "1"])
    d = character(L, m)
    assert build_model(chain(1), 1, ["1"]).forces(d)
    assert not build_model(chain(1), 1, ["0"]).forces(d)
    _character_contract(L, m)


def test_omits():
    assert omits(logic("G3"), catalog_lookup("R2"))
    assert omits(logic("G3plus"), catalog_lookup("F2"))
    for name in ("G3", "R2", "C5", "L1"):
        assert not omits(logic(name), chain(1))


def test_g3plus_closure():
    assert shapes(logic("G3plus").closure) == named("L1", "L2", "L3", "L4", "R2", "G3plus")


def test_logic_equality_and_order():
    assert logic_equal(logic("L2", "L1"), logic("L2"))
    assert logic_equal(logic("R3"), logic("C2"))
    assert logic_leq(logic("F2"), logic("L2"))
    assert not logic_leq(logic("L2"), logic("F2"))
    assert logic("R3") == logic("C2")


def test_h_complete_counts():
    assert len(h_complete_extensions(logic("G1"))) == 14
    assert len(h_complete_extensions(logic("L3"))) == 3
    assert len(h_complete_extensions(logic("L1"))) == 1


def test_lattice_counts():
    assert len(extension_lattice(logic("G1"))) == 42
    assert len(extension_lattice(logic("L2"))) == 2
    assert len(extension_lattice(logic("L1"))) == 1


def test_lattice_closed_under_intersection():
    lat = extension_lattice(logic("G3"))
    keys = {L.key for L in lat}
    for a in lat:
        for b in lat:
            assert a.key | b.key in keys


def test_hasse_edges_chain():
    lat = extension_lattice(logic("L3"))
    assert len(lat) == 3 and len(hasse_edges(lat)) == 2


def test_logic_text_format():
    text = "frame T { nodes: p, q; root: p; order: p<q; }\nlogic A { frames: T, F2; }"
    L = parse_logics(text)["A"]
    assert logic_equal(L, logic("L2", "F2"))


def test_report_lines():
    lines = report_lines([logic("L2")], [False])
    assert lines == ["L(L2): frames=[L1, L2] nullary=false"]


def test_empty_logic_rejected():
    with pytest.raises(ValueError):
        LogicSpec([])


def test_closure_operator_on_catalog():
    for name in ("G3", "R2plus", "Y2", "F3", "C4"):
        f = catalog_lookup(name)
        first = sm_closure([f])
        assert any(isomorphic(f, g) for g in first)
        assert shapes(sm_closure(first)) == shapes(first)

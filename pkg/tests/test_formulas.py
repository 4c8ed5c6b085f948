import pytest

from artifact._parsing import ParseError
from artifact.formulas import (BOT, TOP, And, Imp, Or, Substitution, TargetMismatch, UnknownAxiom, Var,
                               apply_subst_formula, axiom, compose, conj, disj, free_variables, identity, neg,
                               parse_formula, parse_substitution, to_text)
from artifact.scenarios import nnor_sigma

x1, x2, x3 = Var(1), Var(2), Var(3)


def test_parse_kc():
    assert parse_formula("~x1 | ~~x1") == Or(neg(x1), neg(neg(x1)))


def test_parse_basics():
    assert parse_formula("false -> x1") == Imp(BOT, x1)
    assert parse_formula("x1 -> x2 -> x3") == Imp(x1, Imp(x2, x3))
    assert parse_formula("true") == TOP


def test_precedence():
    assert parse_formula("x1 & x2 | x3") == Or(And(x1, x2), x3)
    assert parse_formula("~x1 & x2") == And(neg(x1), x2)
    assert parse_formula("x1 | x2 -> x3") == Imp(Or(x1, x2), x3)
    a = parse_formula("x1 <-> x2 -> x3")
    assert a == Imp(And(Imp(x1, x2), Imp(x2, x1)), x3)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as e:
        parse_formula("x1 & (x2 | ")
    assert e.value.pos is not None
    with pytest.raises(ParseError):
        parse_formula("x0")
    with pytest.raises(ParseError):
        parse_formula("y1")


def test_print_round_trip():
    for text in ["x1 -> x2 -> x3", "(x1 -> x2) -> x3", "~(x1 | x2) & x3", "x1 | x2 & x3", "~~x1",
                 "(x1 & x2) & x3", "x1 & (x2 & x3)", "true -> false"]:
        a = parse_formula(text)
        assert parse_formula(to_text(a)) == a


def test_parse_substitution():
    s = parse_substitution("vars 2; x1 := true; x2 := x2")
    assert s.n == 2 and s.k == 2 and s.images == (TOP, x2)
    s = parse_substitution("vars 0; x1 := false")
    assert s.k == 0 and s.images == (BOT,)
    with pytest.raises(TargetMismatch):
        parse_substitution("vars 1; x1 := x2")


def test_substitution_defaults_to_identity():
    s = parse_substitution("vars 3\nx3 := x1 -> x2")
    assert s.images == (x1, x2, Imp(x1, x2))


def test_axioms():
    assert axiom("KC") == Or(neg(x1), neg(neg(x1)))
    assert axiom("H(1)") == Or(x1, neg(x1))
    assert axiom("H", 2) == Or(x2, Imp(x2, Or(x1, neg(x1))))
    assert axiom("LC") == Or(Imp(x1, x2), Imp(x2, x1))
    assert free_variables(axiom("B(2)")) == {1, 2, 3}
    with pytest.raises(UnknownAxiom):
        axiom("XYZ")
    with pytest.raises(UnknownAxiom):
        axiom("H(0)")


def test_apply_and_compose():
    s = Substitution([BOT], 0)
    assert apply_subst_formula(s, neg(x1)) == neg(BOT)
    t = parse_substitution("vars 2; x1 := x2 | x1; x2 := ~x1")
    assert compose(identity(2), t) == t


def test_composition_law():
    a = parse_substitution("vars 2; x1 := x1 & x2; x2 := ~x2")
    t = parse_substitution("vars 2; x1 := x2 -> x1; x2 := x1 | x2")
    f = parse_formula("(x1 -> x2) | ~x1")
    assert apply_subst_formula(compose(a, t), f) == apply_subst_formula(a, apply_subst_formula(t, f))


def test_bottom_instance_recovers_shifted_sigma():
    k = 3
    xs = [Var(i) for i in range(2, k + 2)]

    def box(a):
        return Imp(Imp(a, x1), x1)

    plus = Substitution([x1, conj([box(disj(xs))] + [Or(box(x), Imp(x, x1)) for x in xs])], k + 1)
    alpha = Substitution([BOT] + xs, k + 1)
    shift = Substitution([Var(i + 1) for i in range(1, k + 1)], k + 1)
    got = compose(alpha, plus)
    assert got.images[0] == BOT
    assert got.images[1] == apply_subst_formula(shift, nnor_sigma(k).images[0])


def test_constant_folding():
    assert conj([]) == TOP and disj([]) == BOT
    assert conj([x1, BOT]) == BOT and disj([x1, TOP]) == TOP

import pytest

from artifact.formulas import BOT, TOP, Substitution, Var, compose, iff, identity, neg, parse_formula, parse_substitution
from artifact.frames import catalog_lookup, chain, fork
from artifact.logics import is_theorem, logic
from artifact.models import WidthMismatch, build_model, labelings, restrict
from artifact.scenarios import RETRACTION_SIGMA, WORKED_FORMULA, WORKED_UNIFIERS, nnor_sigma
from artifact.unification import (Certificate, DimensionMismatch, NotASubstitution, NotFiltering,
                                  certificate_from_text, certificate_to_text, check_main_certificate,
                                  complete_set_check, filtering_join, find_certificate, find_projective_unifier,
                                  find_retraction, is_projective_formula, is_projective_unifier, is_unifiable,
                                  is_unifier, more_general, realize, refute_finitary_at, search_certificate,
                                  sem_subst_from_images, sigma_classes, sigma_model, strongest_unified,
                                  subst_equal, to_semantic)

R2 = logic("R2")
E1, E2, E3 = (parse_substitution(t) for t in WORKED_UNIFIERS)
WORKED = parse_formula(WORKED_FORMULA)
KOST = parse_substitution("vars 2; x1 := x2 | (x2 -> x1 | ~x1)")
NNOT = parse_substitution("vars 1; x1 := ~~x1 | ~x1")


def test_sigma_model_on_chain():
    m = build_model(chain(3), 2, ["00", "01", "11"])
    assert sigma_model(logic("L3"), KOST, m).val == (0, 1, 1)


def test_sigma_model_on_fork():
    m = build_model(fork(2), 1, ["0", "1", "0"])
    assert sigma_model(logic("F2"), NNOT, m).val == (0, 1, 1)


def test_sigma_model_identity_restricts():
    m = build_model(catalog_lookup("G3"), 2, {"r": "00", "a": "10", "b": "00", "t": "11"})
    s = Substitution([Var(1)], 2)
    assert sigma_model(logic("G3"), s, m) == restrict(m, 1)
    with pytest.raises(WidthMismatch):
        sigma_model(logic("G3"), NNOT, m)


def test_to_semantic_and_realize():
    L = logic("L1")
    h = to_semantic(L, Substitution([BOT], 1))
    assert h.table == (0, 0)
    ident = to_semantic(R2, identity(2))
    U = R2.semantic(2)
    assert list(ident.table) == [U.rootval[i] for i in range(U.size)]
    for s in (E1, E2, E3, identity(2)):
        assert subst_equal(R2, realize(R2, to_semantic(R2, s)), s)


def test_frame_preservation_enforced():
    L = logic("L2")
    U = L.semantic(1)
    images = [build_model(r.frame, 1, list(r.val)) for r in U.reps]
    sem_subst_from_images(L, 1, 1, images)
    wrong = [build_model(chain(1), 1, ["1"]) for _ in U.reps]
    with pytest.raises(NotASubstitution):
        sem_subst_from_images(L, 1, 1, wrong)


def test_subst_equal():
    s = parse_substitution("vars 1; x1 := x1")
    t = parse_substitution("vars 1; x1 := ~~x1")
    assert subst_equal(R2, s, s)
    assert subst_equal(logic("L1"), s, t)
    assert not subst_equal(logic("L2"), s, t)
    with pytest.raises(WidthMismatch):
        subst_equal(R2, s, E1)


def test_is_unifier():
    x1 = parse_formula("x1")
    assert is_unifier(R2, Substitution([TOP], 0), x1)
    assert not is_unifier(R2, Substitution([BOT], 0), x1)
    for e in (E1, E2, E3):
        assert is_unifier(R2, e, WORKED)


def test_is_unifiable():
    assert not is_unifiable(R2, BOT)
    assert is_unifiable(R2, parse_formula("~x1"))
    assert not is_unifiable(R2, parse_formula("x1 & ~x1"))


def test_strongest_unified():
    a = strongest_unified(R2, identity(2))
    assert is_theorem(R2, a)
    L = logic("L1")
    a = strongest_unified(L, Substitution([BOT], 1))
    assert is_theorem(L, iff(a, neg(Var(1))))
    s = nnor_sigma(2)
    a = strongest_unified(R2, s)
    assert is_unifier(R2, s, a)


def test_g3_sigma_models_five_shapes():
    G3 = logic("G3")
    frame = catalog_lookup("G3")
    s = nnor_sigma(2)
    images = {sigma_model(G3, s, build_model(frame, 2, list(val))).val for val in labelings(frame, 2)}
    # nodes r, a, b, t with a a leaf and b below t
    assert images == {(0, 0, 0, 0), (0, 0, 1, 1), (0, 1, 0, 0), (1, 1, 1, 1), (0, 1, 1, 1)}
    # up to equivalence these are four p-irreducible 1-models
    assert bin(sigma_classes(G3, s)).count("1") == 4


def test_more_general():
    for s in (E1, E2, E3):
        assert more_general(R2, s, s)
    mu = filtering_join(R2, E1, E3)
    assert more_general(R2, mu, E1) and more_general(R2, mu, E3)
    assert not more_general(R2, E1, E3)


def test_more_general_transitive():
    mu = filtering_join(R2, E1, E3)
    top = filtering_join(R2, mu, E2)
    assert more_general(R2, top, mu) and more_general(R2, mu, E1)
    assert more_general(R2, top, E1)


def test_filtering_join():
    mu = filtering_join(R2, E1, E1)
    assert more_general(R2, mu, E1)
    mu = filtering_join(R2, E1, E2)
    assert mu.k == 3
    with pytest.raises(NotFiltering):
        filtering_join(logic("F2"), E1, E2)
    with pytest.raises(ValueError):
        filtering_join(R2, E1, E2, y=2)


def test_projective_unifier():
    x1 = parse_formula("x1")
    assert is_projective_unifier(R2, Substitution([TOP], 1), x1)
    assert not is_projective_unifier(R2, Substitution([BOT], 1), x1)
    a = parse_formula("(x1 -> x2) <-> x3")
    e = parse_substitution("vars 3; x3 := x1 -> x2")
    for L in (R2, logic("F2"), logic("G3")):
        assert is_projective_unifier(L, e, a)


def test_projective_formula():
    for name in ("R2", "F2", "G3", "L3"):
        assert is_projective_formula(logic(name), parse_formula("~x1"))
    assert not is_projective_formula(logic("F2"), parse_formula("(x1 -> x2 | x3) & x1"))
    assert is_projective_formula(logic("L2"), parse_formula("x1 | ~x1"))
    assert find_projective_unifier(logic("L2"), parse_formula("x1 | ~x1")) is not None
    assert find_projective_unifier(logic("F2"), parse_formula("x1 | ~x1")) is None


def test_projective_proj_absorption():
    # a projective unifier e of a: any unifier s satisfies s after e = s
    L = logic("L3")
    a = parse_formula("x1 | ~x1")
    e = realize(L, find_projective_unifier(L, a))
    for s in [parse_substitution("vars 1; x1 := true"), parse_substitution("vars 1; x1 := false")]:
        assert subst_equal(L, compose(s, e), s)


def test_main_certificate_identity():
    s = identity(1)
    U = R2.semantic(1)
    table = [U.rootval[i] for i in range(U.size)]
    assert check_main_certificate(R2, s, Certificate(1, 1, 1, table, table))
    bad = [0] * U.size
    assert not check_main_certificate(R2, NNOT, Certificate(1, 1, 1, table, table))
    assert not check_main_certificate(R2, s, Certificate(1, 1, 1, bad, table))
    with pytest.raises(DimensionMismatch):
        check_main_certificate(R2, E1, Certificate(1, 1, 1, table, table))


def test_find_certificate():
    cert = find_certificate(R2, identity(1), 1)
    assert cert is not None and check_main_certificate(R2, identity(1), cert)
    cert = find_certificate(R2, NNOT, 3)
    assert cert is not None and check_main_certificate(R2, NNOT, cert)
    assert refute_finitary_at(logic("G3"), nnor_sigma(2), 1)


def test_strategies_agree():
    cases = [(R2, NNOT, 1), (logic("G3"), nnor_sigma(2), 1), (logic("F2"), NNOT, 1), (logic("L3"), KOST, 1),
             (R2, nnor_sigma(2), 2)]
    for L, s, m in cases:
        a, _ = search_certificate(L, s, m, strategy="f-first")
        b, _ = search_certificate(L, s, m, strategy="g-first")
        assert a == b, (L, s, m)


def test_certificate_text_round_trip():
    cert = find_certificate(R2, NNOT, 1)
    text = certificate_to_text(R2, NNOT, cert)
    assert certificate_from_text(R2, text) == cert


def test_find_retraction():
    g = find_retraction(R2, identity(2))
    assert g == to_semantic(R2, identity(2))
    assert find_retraction(logic("G2"), parse_substitution(RETRACTION_SIGMA)) is None
    assert find_retraction(logic("F2"), parse_substitution("vars 2; x1 := ~x2")) is not None


def test_complete_set_check():
    L = logic("L2")
    a = parse_formula("x1 | ~x1")
    e = realize(L, find_projective_unifier(L, a))
    assert complete_set_check(L, [e], a, 1)
    assert not complete_set_check(R2, [E1, E2], WORKED, 2)
    assert complete_set_check(R2, [identity(0)], TOP, 1)

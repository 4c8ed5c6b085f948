"""Randomized and exhaustive checks of the laws the engine relies on."""
from functools import lru_cache
from itertools import islice

import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from artifact.formulas import (BOT, TOP, And, Imp, Or, Substitution, Var, apply_subst_formula, compose, neg)
from artifact.frames import bits_of, catalog_lookup, catalog_names, chain, fork, rhombus
from artifact.logics import LogicSpec, character, is_theorem, logic, th_leq
from artifact.models import Model, enumerate_models, generated_submodel
from artifact.morphisms import (brute_canonical_form, canonical_form, check_p_morphism, equivalent, find_p_morphism,
                                greatest_bisimulation, is_irreducible, isomorphic, reduce)
from artifact.unification import (find_projective_unifier, fixes_own_models, is_idempotent, is_projective_unifier,
                                  is_unifier, realize, sigma_model, strongest_unified, subst_equal, unifiers)

EXAMPLES = settings(max_examples=500, deadline=None, suppress_health_check=[HealthCheck.too_slow])

# logics small enough for three variables, and the rest for at most two
SMALL = ["L2", "L3", "F2", "F3", "R2", "G3", "plusF2", "R2plus", "G3plus"]
LARGER = ["Y2", "Y3", "G2", "C5"]


@lru_cache(maxsize=None)
def spec(name):
    return logic(name)


# ---------------------------------------------------------------- strategies


@st.composite
def widths_and_logic(draw, max_n=3):
    name = draw(st.sampled_from(SMALL + LARGER))
    n = draw(st.integers(0, max_n if name in SMALL else min(max_n, 2)))
    return spec(name), n


@st.composite
def model_over(draw, L, n):
    f = draw(st.sampled_from(L.closure))
    val = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=len(f), max_size=len(f)))
    # make the valuation persistent by pushing every value upward
    for i in range(len(f)):
        for j in bits_of(f.up[i]):
            val[j] |= val[i]
    return Model(f, n, val)


def formulas(n, leaves=8):
    base = [st.just(TOP), st.just(BOT)] + ([st.builds(Var, st.integers(1, n))] if n else [])
    return st.recursive(
        st.one_of(*base),
        lambda sub: st.one_of(st.builds(And, sub, sub), st.builds(Or, sub, sub), st.builds(Imp, sub, sub),
                              st.builds(neg, sub)),
        max_leaves=leaves)


@st.composite
def substitutions(draw, n, k, leaves=6):
    images = [draw(formulas(k, leaves)) for _ in range(n)]
    return Substitution(images, k)


@st.composite
def model_and_formula(draw, max_n=3):
    L, n = draw(widths_and_logic(max_n))
    return L, draw(model_over(L, n)), draw(formulas(n))


# ---------------------------------------------------------------- forcing and p-morphisms


@EXAMPLES
@given(model_and_formula())
def test_forcing_invariant_under_p_morphisms(case):
    L, m, a = case
    q, p = reduce(m)
    assert check_p_morphism(m, q, p)
    for w in m.frame.nodes:
        assert m.forces(a, w) == q.forces(a, p[w])


@EXAMPLES
@given(model_and_formula())
def test_persistence(case):
    _, m, a = case
    f = m.frame
    t = m.truth_set(a)
    for i in bits_of(t):
        assert f.up[i] & ~t == 0


@EXAMPLES
@given(st.data())
def test_theory_order_law(data):
    L, n = data.draw(widths_and_logic(2))
    m = data.draw(model_over(L, n))
    k = data.draw(model_over(L, n))
    subs = {canonical_form(reduce(generated_submodel(m, w))[0]) for w in m.frame.nodes}
    expected = canonical_form(reduce(k)[0]) in subs
    assert th_leq(L, m, k) == expected
    if expected:
        for a in data.draw(st.lists(formulas(n), min_size=3, max_size=3)):
            assert not m.forces(a) or k.forces(a)


@EXAMPLES
@given(st.data())
def test_equivalence_is_equal_canonical_reducts(data):
    L, n = data.draw(widths_and_logic(3))
    m = data.draw(model_over(L, n))
    how = data.draw(st.sampled_from(["random", "reduct", "submodel"]))
    if how == "random":
        k = data.draw(model_over(L, n))
    elif how == "reduct":
        k = reduce(m)[0]
    else:
        k = generated_submodel(m, data.draw(st.sampled_from(m.frame.nodes)))
    same = brute_canonical_form(reduce(m)[0]) == brute_canonical_form(reduce(k)[0])
    assert equivalent(m, k) == same
    if same:
        for a in data.draw(st.lists(formulas(n), min_size=3, max_size=3)):
            assert m.forces(a) == k.forces(a)


@EXAMPLES
@given(st.data())
def test_reduct_unique_and_idempotent(data):
    L, n = data.draw(widths_and_logic(3))
    m = data.draw(model_over(L, n))
    q, p = reduce(m)
    assert is_irreducible(q) and greatest_bisimulation(q).is_discrete()
    assert isomorphic(reduce(q)[0], q)
    # the map onto a p-irreducible model is the only one
    assert find_p_morphism(m, q) == p
    # any other p-morphic image of m reduces to the same model
    img, _ = reduce(generated_submodel(m, m.frame.root))
    assert isomorphic(img, q)


# ---------------------------------------------------------------- characters


def _small_catalog_frames():
    seen, out = set(), []
    pool = [catalog_lookup(n) for n in catalog_names()]
    pool += [chain(d) for d in range(1, 6)] + [fork(n) for n in range(2, 5)] + [rhombus(n) for n in range(2, 4)]
    for f in pool:
        key = canonical_form(f)
        if len(f) <= 5 and key not in seen:
            seen.add(key)
            out.append(f)
    return out


@pytest.mark.parametrize("frame", _small_catalog_frames(), ids=lambda f: f.name)
def test_character_contract_exhaustive(frame):
    L = LogicSpec([frame])
    for n in range(3):
        U = L.semantic(n)
        raw = list(enumerate_models(L.closure, n))
        raw_keys = [canonical_form(reduce(k)[0]) for k in raw]
        for i in range(U.size):
            m = U.reps[i]
            subs = {canonical_form(reduce(generated_submodel(m, w))[0]) for w in m.frame.nodes}
            d = U.character(i)
            for k, key in zip(raw, raw_keys):
                assert k.forces(d) == (key in subs), (frame.name, n, U.label(i))


@EXAMPLES
@given(st.data())
def test_character_contract_random(data):
    L, n = data.draw(widths_and_logic(3))
    m = reduce(data.draw(model_over(L, n)))[0]
    k = data.draw(model_over(L, n))
    subs = {canonical_form(reduce(generated_submodel(m, w))[0]) for w in m.frame.nodes}
    assert k.forces(character(L, m)) == (canonical_form(reduce(k)[0]) in subs)


# ---------------------------------------------------------------- sigma-models


@st.composite
def sigma_case(draw, max_k=3):
    L, k = draw(widths_and_logic(max_k))
    n = draw(st.integers(1, 3))
    s = draw(substitutions(n, k))
    return L, s, draw(model_over(L, k))


@EXAMPLES
@given(sigma_case())
def test_sigma_commutes_with_generated_submodels(case):
    L, s, m = case
    image = sigma_model(L, s, m)
    for w in m.frame.nodes:
        assert sigma_model(L, s, generated_submodel(m, w)) == generated_submodel(image, w)


@EXAMPLES
@given(sigma_case())
def test_sigma_commutes_with_p_morphisms(case):
    L, s, m = case
    q, p = reduce(m)
    a, b = sigma_model(L, s, m), sigma_model(L, s, q)
    assert check_p_morphism(a, b, p)
    for w in m.frame.nodes:
        assert a.val[m.frame.index[w]] == b.val[q.frame.index[p[w]]]


# ---------------------------------------------------------------- unifiers


@EXAMPLES
@given(st.data())
def test_unifier_checks_agree(data):
    L, k = data.draw(widths_and_logic(2))
    n = data.draw(st.integers(1, 2))
    s = data.draw(substitutions(n, k))
    a = data.draw(formulas(n))
    # is_unifier raises if its own two checks disagree
    got = is_unifier(L, s, a)
    semantic = all(sigma_model(L, s, m).forces(a) for m in enumerate_models(L.closure, k))
    assert got == semantic == is_theorem(L, apply_subst_formula(s, a))


@EXAMPLES
@given(st.data())
def test_idempotent_iff_projective_for_own_formula(data):
    L, n = data.draw(widths_and_logic(2))
    assume(n >= 1)
    e = data.draw(substitutions(n, n))
    a = strongest_unified(L, e)
    idem = is_idempotent(L, e)
    assert idem == fixes_own_models(L, e)
    assert idem == is_projective_unifier(L, e, a)


@lru_cache(maxsize=None)
def _projective_pool(name, n, a):
    L = spec(name)
    e = find_projective_unifier(L, a)
    if e is None:
        return None
    found = []
    for m in range(3):
        found += [realize(L, u) for u in islice(unifiers(L, a, m), 20)]
    return realize(L, e), found


@EXAMPLES
@given(st.data())
def test_projective_unifier_absorbs(data):
    name = data.draw(st.sampled_from(["L2", "L3", "F2", "R2", "G3", "plusF2"]))
    n = data.draw(st.integers(1, 2))
    a = data.draw(formulas(n, 5))
    pool = _projective_pool(name, n, a)
    assume(pool is not None and pool[1])
    e, found = pool
    s = data.draw(st.sampled_from(found))
    L = spec(name)
    assert is_projective_unifier(L, e, a)
    assert subst_equal(L, compose(s, e), s)

"""Scripted checks of the worked results, shared by the CLI and the test suite.

Each scenario returns an ``Outcome``: ``passed`` is True, False, or None when
a search ran out of budget, and ``lines`` hold the witnesses.
"""
from dataclasses import dataclass, field

from .classifier import census
from .formulas import Imp, Or, Substitution, Var, conj, disj, neg, parse_formula, parse_substitution
from .frames import bits_of, chain, fork
from .logics import frame_sort_key, logic
from .models import Model, build_model, labelings
from .morphisms import equivalent, reduce
from .unification import (DEFAULT_BUDGET, Inconclusive, NotFiltering, filtering_join, find_retraction,
                          is_unifier, more_general, search_certificate, sigma_classes, sigma_model,
                          unifiers)


@dataclass
class Outcome:
    name: str
    passed: object
    lines: list = field(default_factory=list)

    @property
    def word(self):
        if self.passed is None:
            return "inconclusive"
        return "pass" if self.passed else "fail"

    def text(self):
        return "\n".join([f"{self.name}: {self.word}"] + ["  " + ln for ln in self.lines]) + "\n"


def _check(lines, label, ok):
    lines.append(f"{label}: {'ok' if ok else 'FAILED'}")
    return ok


# ---------------------------------------------------------------- substitutions used below


def nnor_sigma(k):
    """x1 := ~~(x1 | ... | xk) & (~~x1 | ~x1) & ... & (~~xk | ~xk)."""
    xs = [Var(i) for i in range(1, k + 1)]
    return Substitution([conj([neg(neg(disj(xs)))] + [Or(neg(neg(x)), neg(x)) for x in xs])], k)


def split_sigma(k):
    """x1 := conjunction of (~xi | ~~xi), x2 := conjunction of (~~xi -> xi)."""
    xs = [Var(i) for i in range(1, k + 1)]
    return Substitution([conj([Or(neg(x), neg(neg(x))) for x in xs]),
                         conj([Imp(neg(neg(x)), x) for x in xs])], k)


RETRACTION_SIGMA = "vars 2; x1 := ~~x1 & (x2 | (x2 -> x1 | ~x1))"
RETRACTION_SHAPES = {"L1(0)", "L1(1)", "L2(0;1)", "F2(0;0,1)"}

WORKED_FORMULA = "x1 | x2 | (~x1 & ~x2)"
WORKED_UNIFIERS = ("vars 2; x1 := true; x2 := x2", "vars 2; x1 := x1; x2 := true", "vars 2; x1 := false; x2 := false")

# inclusions between single-frame extensions of L(G1), larger frame first
SINGLE_FRAME_NULLARY = ["G3", "G3L2", "G3F2", "Y2", "Y3"]
SINGLE_FRAME_EDGES = {
    ("L2", "L1"), ("F2", "L2"), ("L3", "L2"), ("R2", "L3"), ("G3", "F2"), ("G3", "L3"),
    ("plusF2", "F2"), ("plusF2", "L3"), ("G2", "G3"), ("G2", "plusF2"), ("G3L2", "R2"),
    ("G3L2", "G3"), ("Y2", "R2"), ("Y2", "plusF2"), ("Y3", "R2"), ("Y3", "plusF2"),
    ("C5", "Y2"), ("C5", "Y3"), ("G3F2", "G2"), ("G3F2", "G3L2"), ("G3F2", "Y2"),
    ("G1", "C5"), ("G1", "G3F2"),
}
FINITARY_NOT_HEREDITARY = {"G2", "C5", "G2,C5", "G1"}


# ---------------------------------------------------------------- lattice censuses


def single_frame_census(budget=DEFAULT_BUDGET):
    c = census(logic("G1"), h_complete=True)
    names = [L.label() for L in c.logics]
    order = sorted(c.nullary(), key=lambda i: [frame_sort_key(f) for f in c.logics[i].maximal])
    nullary = [names[i] for i in order]
    edges = {(names[a], names[b]) for a, b in c.edges}
    lines = [f"{c.total} logics, {len(nullary)} nullary: {' '.join(nullary)}"]
    ok = _check(lines, "14 distinct logics", c.total == 14 and len(set(names)) == 14)
    ok &= _check(lines, "nullary nodes", nullary == SINGLE_FRAME_NULLARY)
    ok &= _check(lines, f"{len(edges)} Hasse edges match", edges == SINGLE_FRAME_EDGES)
    return Outcome("figure-ki", ok, lines)


def full_census(budget=DEFAULT_BUDGET):
    c = census(logic("G1"))
    total, nullary, hereditary, finitary = c.counts()
    lines = [f"{total} logics, {nullary} nullary, {hereditary} hereditary finitary, "
             f"finitary otherwise: {'; '.join(finitary)}",
             f"{sum(r.figure_sourced for r in c.reports)} nullary labels set by the census default (figure-sourced)",
             "finitary non-hereditary logics: those of G2, C5, G2 and C5 together, and G1"]
    ok = _check(lines, "42 logics", total == 42)
    ok &= _check(lines, "31 nullary", nullary == 31)
    ok &= _check(lines, "7 hereditary", hereditary == 7)
    ok &= _check(lines, "4 finitary non-hereditary", set(finitary) == FINITARY_NOT_HEREDITARY)
    ok &= _check(lines, "no unknown labels", not c.unknown())
    return Outcome("figure-ti", ok, lines)


# ---------------------------------------------------------------- certificate refutations


def _refutation(name, L, s, m, budget, strategy="auto"):
    lines = [f"L({L.label()}), n={s.n}, m={m}, k={s.k}"]
    V = L.semantic(s.n)
    lines.append("sigma-model classes: " + " ".join(V.label(c) for c in bits_of(sigma_classes(L, s))))
    try:
        status, cert = search_certificate(L, s, m, budget, strategy)
    except Inconclusive as e:
        lines.append(f"search stopped: {e}")
        return Outcome(name, None, lines)
    lines.append(f"exhaustive search: {status}")
    return Outcome(name, status == "refuted", lines)


def g3_refutation(m=1, k=None, budget=DEFAULT_BUDGET, strategy="auto"):
    k = k or max(2, m + 1)
    return _refutation("f6m", logic("G3"), nnor_sigma(k), m, budget, strategy)


def two_frame_refutation(m=2, k=None, budget=DEFAULT_BUDGET, strategy="auto"):
    k = k or max(3, m + 1)
    return _refutation("l7", logic("R2", "F2"), split_sigma(k), m, budget, strategy)


def positive_control(m=3, budget=DEFAULT_BUDGET):
    """Over L(R2), which is unitary, a certificate exists for x1 := ~~x1 | ~x1."""
    L = logic("R2")
    s = Substitution([parse_formula("~~x1 | ~x1")], 1)
    lines = [f"L(R2), n=1, m={m}, k=1"]
    try:
        status, cert = search_certificate(L, s, m, budget)
    except Inconclusive as e:
        lines.append(f"search stopped: {e}")
        return Outcome("r2-certificate", None, lines)
    lines.append(f"exhaustive search: {status}")
    return Outcome("r2-certificate", status == "certificate", lines)


def g2_retraction(budget=DEFAULT_BUDGET):
    L = logic("G2")
    s = parse_substitution(RETRACTION_SIGMA)
    V = L.semantic(s.n)
    shapes = {V.label(c) for c in bits_of(sigma_classes(L, s))}
    lines = [f"sigma-model classes: {' '.join(sorted(shapes))}"]
    ok = _check(lines, "four shapes", shapes == RETRACTION_SHAPES)
    try:
        r = find_retraction(L, s, budget)
    except Inconclusive as e:
        lines.append(f"search stopped: {e}")
        return Outcome("l8i-retraction", None, lines)
    ok &= _check(lines, "no retraction onto the sigma-models", r is None)
    return Outcome("l8i-retraction", ok, lines)


# ---------------------------------------------------------------- unitary example


def worked_example(budget=DEFAULT_BUDGET):
    L = logic("R2")
    a = parse_formula(WORKED_FORMULA)
    eps = [parse_substitution(t) for t in WORKED_UNIFIERS]
    lines = []
    ok = _check(lines, "each of the three unifies A", all(is_unifier(L, e, a) for e in eps))
    # u more general than e forces every e-model to be a u-model
    need = 0
    for e in eps:
        need |= sigma_classes(L, e)
    total = dominating = 0
    try:
        for u in unifiers(L, a, 2, budget):
            total += 1
            if sigma_classes(L, u) & need != need:
                continue
            if all(more_general(L, u, e, budget) for e in eps):
                dominating += 1
    except Inconclusive as e:
        lines.append(f"search stopped: {e}")
        return Outcome("uu-example", None, lines)
    lines.append(f"{total} unifiers into 2 variables, {dominating} more general than all three")
    ok &= _check(lines, "no 2-variable unifier is more general than all three", total > 0 and dominating == 0)
    mu = filtering_join(L, filtering_join(L, eps[0], eps[2], y=1), eps[1])
    lines.append(f"joined unifier: {mu.to_text()}")
    ok &= _check(lines, "joined unifier has 3 variables, unifies A and is more general than all three",
                 mu.k == 3 and is_unifier(L, mu, a) and all(more_general(L, mu, e) for e in eps))
    return Outcome("uu-example", ok, lines)


def filtering_join_check(budget=DEFAULT_BUDGET):
    L = logic("R2")
    a = parse_formula(WORKED_FORMULA)
    eps = [parse_substitution(t) for t in WORKED_UNIFIERS]
    lines = []
    ok = True
    for i in range(3):
        for j in range(i + 1, 3):
            mu = filtering_join(L, eps[i], eps[j])
            good = is_unifier(L, mu, a) and more_general(L, mu, eps[i]) and more_general(L, mu, eps[j])
            ok &= _check(lines, f"join of e{i + 1} and e{j + 1} in {mu.k} variables generalizes both", good)
    nested = filtering_join(L, filtering_join(L, eps[0], eps[2], y=1), eps[1])
    ok &= _check(lines, f"nested join in {nested.k} variables generalizes all three",
                 all(more_general(L, nested, e) for e in eps))
    try:
        filtering_join(logic("F2"), eps[0], eps[1])
        refused = False
    except NotFiltering:
        refused = True
    ok &= _check(lines, "refused over L(F2), which does not contain KC", refused)
    return Outcome("filtering-join", ok, lines)


# ---------------------------------------------------------------- non-closure of sigma-models


def _images_at_root(L, s, frame):
    """Root values of the s-models over ``frame``."""
    out = set()
    for val in labelings(frame, s.k):
        out.add(sigma_model(L, s, Model(frame, s.k, val)).val)
    return out


def chain_fork_examples(budget=DEFAULT_BUDGET):
    lines = []
    # first: x1 := x2 | (x2 -> x1 | ~x1) over chains
    L = logic("L3")
    s = parse_substitution("vars 2; x1 := x2 | (x2 -> x1 | ~x1)")
    three = build_model(chain(3), 2, ["00", "01", "11"])
    img = sigma_model(L, s, three)
    two = build_model(chain(2), 1, ["0", "1"])
    ok = _check(lines, "three-chain 00,01,11 goes to 0,1,1", img.val == (0, 1, 1))
    ok &= _check(lines, "0,1,1 reduces to the two-chain 0,1", equivalent(img, two) and len(reduce(img)[0]) == 2)
    V = L.semantic(1)
    ok &= _check(lines, "two-chain 0,1 is equivalent to a sigma-model",
                 sigma_classes(L, s) >> V.classify(two) & 1 == 1)
    short = _images_at_root(L, s, chain(2)) | _images_at_root(L, s, chain(1))
    ok &= _check(lines, "no model over one or two points falsifies sigma(x1) at the root",
                 all(v[0] == 1 for v in short))
    ok &= _check(lines, "some three-chain falsifies it", any(v[0] == 0 for v in _images_at_root(L, s, chain(3))))
    # second: x := ~~x | ~x over the fork
    L = logic("F2")
    s = parse_substitution("vars 1; x1 := ~~x1 | ~x1")
    fm = build_model(fork(2), 1, ["0", "1", "0"])
    img = sigma_model(L, s, fm)
    ok &= _check(lines, "fork 0;1,0 goes to 0;1,1", sorted(img.val[1:]) == [1, 1] and img.val[0] == 0)
    ok &= _check(lines, "0;1,1 is equivalent to the two-chain 0,1", equivalent(img, two))
    V = L.semantic(1)
    ok &= _check(lines, "two-chain 0,1 is equivalent to a sigma-model",
                 sigma_classes(L, s) >> V.classify(two) & 1 == 1)
    chains = _images_at_root(L, s, chain(2)) | _images_at_root(L, s, chain(1))
    ok &= _check(lines, "no chain model is itself a sigma-model with root 0", all(v[0] == 1 for v in chains))
    return Outcome("kost-examples", ok, lines)


SCENARIOS = {
    "figure-ki": single_frame_census,
    "figure-ti": full_census,
    "f6m": g3_refutation,
    "l7": two_frame_refutation,
    "l8i-retraction": g2_retraction,
    "uu-example": worked_example,
    "kost-examples": chain_fork_examples,
    "filtering-join": filtering_join_check,
}

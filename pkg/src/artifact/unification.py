"""sigma-models, unifiers, the more-general preorder and certificate searches.

A substitution sigma from x1..xn into formulas in x1..xk acts on k-models:
the sigma-model of M has the frame of M and x_i holds where M forces
sigma(x_i).  Up to equivalence this action is fixed by the root value it
assigns to each p-irreducible k-model, so semantic substitutions are stored
as one n-bit value per class of the k-variable ``SemanticClass``.
Searches over semantic substitutions are exhaustive depth-first searches
that process classes from the top of the order down, so every class is
handled after all of its proper submodels.
"""
from .formulas import And, Imp, Or, Substitution, Var, apply_subst_formula, disj, free_variables, iff, max_variable, neg
from .frames import bits_of, catalog_lookup
from .logics import is_theorem, omits
from .models import Model, WidthMismatch, labelings
from .morphisms import digest
from ._parsing import ParseError, Scanner

DEFAULT_BUDGET = 2_000_000


class NotASubstitution(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SearchBudgetExceeded(RuntimeError):
    pass


class Inconclusive(SearchBudgetExceeded):
    pass


class NotFiltering(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class _Budget:
    __slots__ = ("left", "error")

    def __init__(self, budget, error=SearchBudgetExceeded):
        self.left = budget
        self.error = error

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise self.error("search budget exhausted")


def _submasks(mask):
    """All submasks of ``mask``, largest first."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


# ---------------------------------------------------------------- semantic substitutions


class SemSubst:
    """Root value (an n-bit int) for every class of p-irreducible k-models."""

    __slots__ = ("logic", "n", "k", "table")

    def __init__(self, logic, n, k, table, check=True):
        self.logic = logic
        self.n = n
        self.k = k
        self.table = tuple(table)
        if check:
            U = logic.semantic(k)
            if len(self.table) != U.size:
                raise NotASubstitution(f"expected {U.size} values, got {len(self.table)}")
            for i in range(U.size):
                if self.table[i] >> n:
                    raise NotASubstitution(f"value for {U.label(i)} is wider than {n} bits")
                for j in bits_of(U.strict(i)):
                    if self.table[i] & ~self.table[j]:
                        raise NotASubstitution(
                            f"image of {U.label(i)} does not commute with its submodel {U.label(j)}",
                            (U.reps[i], U.reps[j]))

    def __eq__(self, other):
        return isinstance(other, SemSubst) and (self.n, self.k, self.table) == (other.n, other.k, other.table)

    def __hash__(self):
        return hash((self.n, self.k, self.table))

    def __repr__(self):
        return f"<SemSubst {self.k} -> {self.n} variables>"

    def image(self, m):
        """The n-model this substitution sends the k-model ``m`` to."""
        if m.n != self.k:
            raise WidthMismatch(f"{m.n}-model given to a substitution on {self.k}-models")
        U = self.logic.semantic(self.k)
        cls = U.node_classes(m)
        return Model(m.frame, self.n, [self.table[c] for c in cls])

    def classes(self):
        """Class in the n-variable order of every image, indexed by source class."""
        U = self.logic.semantic(self.k)
        V = self.logic.semantic(self.n)
        out = []
        for i in range(U.size):
            T = 0
            for j in bits_of(U.strict(i)):
                T |= 1 << out[j]
            out.append(V.classify_root(self.table[i], T))
        return out


def sem_subst_from_images(L, k, n, images):
    """Build a SemSubst from n-models given for each k-class representative, validating them."""
    U = L.semantic(k)
    V = L.semantic(n)
    if len(images) != U.size:
        raise NotASubstitution(f"expected {U.size} images, got {len(images)}")
    classes = []
    for i, img in enumerate(images):
        rep = U.reps[i]
        if img.frame != rep.frame:
            raise NotASubstitution(f"image of {U.label(i)} is over another frame", rep)
        if img.n != n:
            raise NotASubstitution(f"image of {U.label(i)} has width {img.n}", rep)
        classes.append(V.node_classes(img))
    for i in range(U.size):
        for w, c in enumerate(U.sub[i]):
            if classes[i][w] != classes[c][0]:
                raise NotASubstitution(
                    f"image of {U.label(i)} does not commute with its submodel {U.label(c)}", U.reps[i])
    return SemSubst(L, n, k, [img.val[0] for img in images])


def sigma_model(L, s, m):
    if m.n != s.k:
        raise WidthMismatch(f"substitution into {s.k} variables applied to a {m.n}-model")
    val = [0] * len(m.frame)
    for i, a in enumerate(s.images):
        mask = m.truth_set(a)
        for w in bits_of(mask):
            val[w] |= 1 << i
    return Model(m.frame, s.n, val)


def _table(L, s):
    U = L.semantic(s.k)
    table = [0] * U.size
    for i, a in enumerate(s.images):
        for c in bits_of(U.truth(a)):
            table[c] |= 1 << i
    return table


def to_semantic(L, s):
    return SemSubst(L, s.n, s.k, _table(L, s), check=False)


def realize(L, h):
    """A substitution whose action is ``h``: x_j goes to the join of the characters of its classes."""
    if isinstance(h, Substitution):
        raise TypeError("realize expects a semantic substitution")
    U = L.semantic(h.k)
    images = []
    for j in range(h.n):
        hits = 0
        for i in range(U.size):
            if h.table[i] >> j & 1:
                hits |= 1 << i
        keep = [i for i in bits_of(hits) if not any(
            c != i and U.leq(c, i) for c in bits_of(hits))]
        images.append(disj([U.character(i) for i in keep]))
    return Substitution(images, h.k)


def _sem(L, s):
    return s if isinstance(s, SemSubst) else to_semantic(L, s)


def subst_equal(L, s, e):
    if (s.n, s.k) != (e.n, e.k):
        raise WidthMismatch(f"{s.n}->{s.k} against {e.n}->{e.k}")
    return _sem(L, s).table == _sem(L, e).table


def sigma_classes(L, s):
    """Classes (n variables) of the s-models, as a bitmask; closed under submodels."""
    out = 0
    for c in _sem(L, s).classes():
        out |= 1 << c
    return out


def is_unifier(L, s, a):
    """Checked twice: s(a) is a theorem, and every s-model forces a."""
    if max_variable(a) > s.n:
        raise WidthMismatch(f"formula uses x{max_variable(a)} but the substitution has {s.n} variables")
    syntactic = is_theorem(L, apply_subst_formula(s, a))
    U = L.semantic(s.k)
    semantic = all(sigma_model(L, s, U.reps[i]).forces(a) for i in range(U.size))
    if syntactic != semantic:
        raise AssertionError(f"unifier checks disagree for {s!r} and {a}")
    return syntactic


def is_unifiable(L, a):
    return L.semantic(max_variable(a)).truth(a) != 0


def strongest_unified(L, s):
    """The strongest formula that ``s`` unifies: the join of the characters of s-models."""
    V = L.semantic(s.n)
    mask = sigma_classes(L, s)
    keep = [i for i in bits_of(mask) if not any(c != i and V.leq(c, i) for c in bits_of(mask))]
    return disj([V.character(i) for i in keep])


# ---------------------------------------------------------------- the more-general preorder


def _find_f(U, V, want, through, budget, first_only=True):
    """Monotone f on the classes of U (values in V's width) with ``through[class of f-image] == want``.

    Returns the table of f or None.  Classes are visited successors first;
    on a dead end the search jumps back to the latest class that constrained it.
    """
    size = U.size
    full = (1 << V.n) - 1
    succ = [bits_of(U.strict(i)) for i in range(size)]
    f = [0] * size
    fcls = [0] * size

    def go(i):
        if i == size:
            return True
        budget.tick()
        meet = full
        T = 0
        for j in succ[i]:
            meet &= f[j]
            T |= 1 << fcls[j]
        conflict = U.strict(i)
        target = want[i]
        for c in _submasks(meet):
            cls = V.classify_root(c, T)
            if through[cls] != target:
                continue
            f[i], fcls[i] = c, cls
            r = go(i + 1)
            if r is True:
                return True
            if not r >> i & 1:
                return r
            conflict |= r & ~(1 << i)
        return conflict

    return list(f) if go(0) is True else None


def more_general(L, t, s, budget=DEFAULT_BUDGET):
    """``t`` is more general than ``s``: some substitution f has t composed after f equal to s."""
    if t.n != s.n:
        raise WidthMismatch(f"substitutions on {t.n} and {s.n} variables")
    ht, hs = _sem(L, t), _sem(L, s)
    U = L.semantic(hs.k)
    V = L.semantic(ht.k)
    f = _find_f(U, V, hs.table, ht.table, _Budget(budget))
    return f is not None


def general_witness(L, t, s, budget=DEFAULT_BUDGET):
    """The semantic f behind ``more_general(t, s)``, or None."""
    ht, hs = _sem(L, t), _sem(L, s)
    U = L.semantic(hs.k)
    V = L.semantic(ht.k)
    f = _find_f(U, V, hs.table, ht.table, _Budget(budget))
    return None if f is None else SemSubst(L, ht.k, hs.k, f, check=False)


def filtering_join(L, e, s, y=None, check=True, budget=DEFAULT_BUDGET):
    """Common generalization of two unifiers, selected by a variable y.

    By default y is the first variable past both targets.  Any y absent from
    the images of both works, which keeps nested joins small.
    """
    if not omits(L, catalog_lookup("F2")):
        raise NotFiltering("the logic does not contain KC")
    if e.n != s.n:
        raise WidthMismatch(f"substitutions on {e.n} and {s.n} variables")
    used = set()
    for a in e.images + s.images:
        used |= free_variables(a)
    if y is None:
        y = max(e.k, s.k) + 1
    if y in used:
        raise ValueError(f"x{y} occurs in an image")
    fresh = Var(y)
    images = [Or(And(e.image(i), neg(fresh)), And(s.image(i), neg(neg(fresh)))) for i in range(1, e.n + 1)]
    mu = Substitution(images, max(e.k, s.k, y))
    if check and not (more_general(L, mu, e, budget) and more_general(L, mu, s, budget)):
        raise AssertionError("filtering join is not a common generalization")
    return mu


# ---------------------------------------------------------------- projectivity


def is_projective_unifier(L, e, a):
    """``e`` unifies ``a`` and ``a`` proves e(x_i) <-> x_i for every i (checked twice)."""
    if e.n != e.k:
        raise WidthMismatch(f"projective unifiers map {e.n} variables to {e.n}, not {e.k}")
    if max_variable(a) > e.n:
        raise WidthMismatch(f"formula uses x{max_variable(a)} beyond {e.n} variables")
    if not is_unifier(L, e, a):
        return False
    syntactic = all(is_theorem(L, Imp(a, iff(e.image(i), Var(i)))) for i in range(1, e.n + 1))
    U = L.semantic(e.n)
    h = _sem(L, e).table
    models = U.truth(a)
    semantic = all(h[c] == U.rootval[c] for c in bits_of(models))
    if syntactic != semantic:
        raise AssertionError(f"projectivity checks disagree for {e!r} and {a}")
    return syntactic


def is_idempotent(L, e):
    """e composed with itself equals e."""
    from .formulas import compose

    return subst_equal(L, compose(e, e), e)


def fixes_own_models(L, e):
    """Every e-model is sent to an equivalent model by e."""
    U = L.semantic(e.n)
    h = _sem(L, e).table
    return all(h[c] == U.rootval[c] for c in bits_of(sigma_classes(L, e)))


def is_projective_formula(L, a, n=None):
    """Extension property: a model whose proper submodels force ``a`` has a root variant forcing it."""
    n = max(max_variable(a), n or 0)
    U = L.semantic(n)
    good = U.truth(a)
    seen = set()
    for f in U.frames:
        if len(f) == 1:
            continue
        stricts = [bits_of(f.up[i] & ~(1 << i)) for i in range(len(f))]
        for val in labelings(f, n):
            if val[0] != 0:
                continue
            cls = U._classify_nodes(val, stricts)
            T = 0
            meet = (1 << n) - 1
            for w in stricts[0]:
                T |= 1 << cls[w]
            if T in seen or T & ~good:
                continue
            seen.add(T)
            for c in bits_of(T):
                meet &= U.rootval[c]
            if not any(good >> U.classify_root(v, T) & 1 for v in _submasks(meet)):
                return False
    # one-point models: some value forces a
    return good != 0 or n < 0


def find_projective_unifier(L, a, budget=DEFAULT_BUDGET):
    """A semantic projective unifier of ``a`` (on its own variables), or None."""
    n = max_variable(a)
    U = L.semantic(n)
    good = U.truth(a)
    if not good:
        return None
    fixed = {c: U.rootval[c] for c in bits_of(good)}
    g = _complete_g(U, U, fixed, good, _Budget(budget, Inconclusive))
    return None if g is None else SemSubst(L, n, n, g, check=False)


# ---------------------------------------------------------------- G-maps


def _g_solutions(U, V, fixed, allowed, budget):
    """Monotone g on U's classes (V's width) whose image classes lie in ``allowed``."""
    size = U.size
    full = (1 << V.n) - 1
    succ = [bits_of(U.strict(i)) for i in range(size)]
    lower = [0] * size
    for d, v in fixed.items():
        for j in bits_of(U.upcls[d]):
            lower[j] |= v
    g = [0] * size
    gcls = [0] * size

    def go(i):
        if i == size:
            yield list(g)
            return
        budget.tick()
        meet = full
        T = 0
        for j in succ[i]:
            meet &= g[j]
            T |= 1 << gcls[j]
        if i in fixed:
            cands = (fixed[i],) if fixed[i] & ~meet == 0 else ()
        else:
            cands = [c for c in _submasks(meet) if c & lower[i] == lower[i]]
        for c in cands:
            cls = V.classify_root(c, T)
            if not allowed >> cls & 1:
                continue
            g[i], gcls[i] = c, cls
            yield from go(i + 1)

    yield from go(0)


def _complete_g(U, V, fixed, allowed, budget):
    return _cbj_g(U, V, fixed, allowed, budget)[0]


def _cbj_g(U, V, fixed, allowed, budget):
    """First g extending ``fixed``, with backjumping; on failure also the fixed classes to blame."""
    size = U.size
    full = (1 << V.n) - 1
    succ = [bits_of(U.strict(i)) for i in range(size)]
    lower = [0] * size
    blame = [0] * size
    for d, v in fixed.items():
        for j in bits_of(U.upcls[d]):
            lower[j] |= v
            if v:
                blame[j] |= 1 << d
    g = [0] * size
    gcls = [0] * size

    def go(i):
        if i == size:
            return True
        budget.tick()
        meet = full
        T = 0
        for j in succ[i]:
            meet &= g[j]
            T |= 1 << gcls[j]
        if i in fixed:
            conflict = U.upcls[i]
            cands = (fixed[i],) if fixed[i] & ~meet == 0 else ()
        else:
            conflict = U.strict(i) | blame[i]
            cands = [c for c in _submasks(meet) if c & lower[i] == lower[i]]
        for c in cands:
            cls = V.classify_root(c, T)
            if not allowed >> cls & 1:
                continue
            g[i], gcls[i] = c, cls
            r = go(i + 1)
            if r is True:
                return True
            if i in fixed:
                return r | 1 << i
            if not r >> i & 1:
                return r
            conflict |= r & ~(1 << i)
        return conflict

    r = go(0)
    if r is True:
        return list(g), 0
    keep = 0
    for d in fixed:
        keep |= 1 << d
    return None, r & keep


def find_retraction(L, s, budget=DEFAULT_BUDGET):
    """G on n-models with every image equivalent to an s-model and s-models fixed, or None."""
    U = L.semantic(s.n)
    allowed = sigma_classes(L, s)
    fixed = {c: U.rootval[c] for c in bits_of(allowed)}
    g = _complete_g(U, U, fixed, allowed, _Budget(budget, Inconclusive))
    return None if g is None else SemSubst(L, s.n, s.n, g, check=False)


def unifiers(L, a, m, budget=DEFAULT_BUDGET):
    """Every unifier of ``a`` into m variables, up to equivalence, as semantic substitutions."""
    n = max_variable(a)
    V = L.semantic(n)
    W = L.semantic(m)
    for g in _g_solutions(W, V, {}, V.truth(a), _Budget(budget, Inconclusive)):
        yield SemSubst(L, n, m, g, check=False)


def complete_set_check(L, sigmas, a, m_bound, budget=DEFAULT_BUDGET):
    """Every unifier of ``a`` into at most ``m_bound`` variables is an instance of some member."""
    for s in sigmas:
        if not is_unifier(L, s, a):
            raise ValueError(f"{s!r} does not unify {a}")
    sems = [to_semantic(L, s) for s in sigmas]
    for m in range(m_bound + 1):
        for t in unifiers(L, a, m, budget):
            if not any(more_general(L, s, t, budget) for s in sems):
                return False
    return True


# ---------------------------------------------------------------- certificates


class Certificate:
    """Maps G (m-classes to n-bit values) and F (k-classes to m-bit values)."""

    __slots__ = ("n", "m", "k", "g", "f")

    def __init__(self, n, m, k, g, f):
        self.n, self.m, self.k = n, m, k
        self.g = tuple(g)
        self.f = tuple(f)

    def __eq__(self, other):
        return isinstance(other, Certificate) and (self.n, self.m, self.k, self.g, self.f) == (
            other.n, other.m, other.k, other.g, other.f)

    def __repr__(self):
        return f"<Certificate n={self.n} m={self.m} k={self.k}>"


def check_main_certificate(L, s, cert):
    if (cert.n, cert.k) != (s.n, s.k):
        raise DimensionMismatch(f"certificate is {cert.n}/{cert.k}, substitution is {s.n}/{s.k}")
    U, W, V = L.semantic(s.k), L.semantic(cert.m), L.semantic(s.n)
    if len(cert.f) != U.size or len(cert.g) != W.size:
        raise DimensionMismatch("certificate tables do not match the class counts")
    try:
        G = SemSubst(L, cert.n, cert.m, cert.g)
        F = SemSubst(L, cert.m, cert.k, cert.f)
    except NotASubstitution:
        return False
    gcls = G.classes()
    fcls = F.classes()
    allowed = sigma_classes(L, s)
    if any(not allowed >> c & 1 for c in gcls):
        return False
    scls = _sem(L, s).classes()
    return all(gcls[fcls[i]] == scls[i] for i in range(U.size))


def search_certificate(L, s, m, budget=DEFAULT_BUDGET, strategy="auto"):
    """Exhaustive search: ("certificate", cert) or ("refuted", None); raises Inconclusive.

    "f-first" builds F and pins G where F lands; "g-first" enumerates every
    admissible G and looks for a matching F.  Both are exhaustive.
    """
    U, W, V = L.semantic(s.k), L.semantic(m), L.semantic(s.n)
    hs = _sem(L, s).table
    allowed = sigma_classes(L, s)
    bud = _Budget(budget, Inconclusive)
    if strategy == "auto":
        strategy = "f-first"
    if strategy == "g-first":
        found = None
        for g in _g_solutions(W, V, {}, allowed, bud):
            f = _find_f(U, W, hs, g, bud)
            if f is not None:
                found = g, f
                break
    elif strategy == "f-first":
        found = _f_first([(U, hs)], W, V, allowed, bud)
        if found is not None:
            found = found[0], found[1][0]
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    if found is None:
        return "refuted", None
    cert = Certificate(s.n, m, s.k, *found)
    if not check_main_certificate(L, s, cert):
        raise AssertionError("search produced an invalid certificate")
    return "certificate", cert


def common_generalization(L, sigmas, m, allowed=None, budget=DEFAULT_BUDGET):
    """A semantic mu: n -> m more general than every member of ``sigmas``, or None.

    ``allowed`` (a bitmask of n-variable classes) restricts the mu-models, e.g.
    to the models of a formula so that mu is a unifier of it.
    """
    sems = [_sem(L, s) for s in sigmas]
    n = sems[0].n
    if any(e.n != n for e in sems):
        raise WidthMismatch("substitutions on different numbers of variables")
    W, V = L.semantic(m), L.semantic(n)
    if allowed is None:
        allowed = V.full
    problems = [(L.semantic(e.k), e.table) for e in sems]
    found = _f_first(problems, W, V, allowed, _Budget(budget, Inconclusive))
    return None if found is None else SemSubst(L, n, m, found[0], check=False)


def _f_first(problems, W, V, allowed, budget):
    """Maps F_p, one per (U, want) problem, chosen class by class; G is pinned where they land.

    G is completed at the end.  Dead ends are traced back to the choices
    that caused them and the search jumps straight back to the latest one.
    Returns (g, [f_p ...]) or None.
    """
    full = (1 << W.n) - 1
    owner, local, succ, strict, want = [], [], [], [], []
    offsets = []
    for U, target in problems:
        off = len(owner)
        offsets.append(off)
        for i in range(U.size):
            owner.append(U)
            local.append(i)
            succ.append([off + j for j in bits_of(U.strict(i))])
            strict.append(U.strict(i) << off)
            want.append(target[i])
    size = len(owner)
    f = [0] * size
    fcls = [0] * size
    gfix = {}
    setter = {}
    result = []

    def clash(cls, v):
        # blame for monotonicity clashes between the pin (cls, v) and existing pins
        out = 0
        for d, w in gfix.items():
            if W.upcls[cls] >> d & 1 and v & ~w or W.upcls[d] >> cls & 1 and w & ~v:
                out |= 1 << setter[d]
        return out

    def go(i):
        if i == size:
            g, bad = _cbj_g(W, V, gfix, allowed, budget)
            if g is not None:
                result.append(g)
                return True
            out = 0
            for d in bits_of(bad):
                out |= 1 << setter[d]
            return out
        budget.tick()
        meet = full
        T = 0
        for j in succ[i]:
            meet &= f[j]
            T |= 1 << fcls[j]
        conflict = strict[i]
        target = want[i]
        for c in _submasks(meet):
            cls = W.classify_root(c, T)
            had = cls in gfix
            if had and gfix[cls] != target:
                conflict |= 1 << setter[cls]
                continue
            if not had:
                bad = clash(cls, target)
                if bad:
                    conflict |= bad
                    continue
                gfix[cls] = target
                setter[cls] = i
            f[i], fcls[i] = c, cls
            r = go(i + 1)
            if not had:
                del gfix[cls], setter[cls]
            if r is True:
                return True
            if not r >> i & 1:
                return r
            conflict |= r & ~(1 << i)
        return conflict

    if go(0) is not True:
        return None
    tables = [f[off:off + U.size] for off, (U, _) in zip(offsets, problems)]
    return result[0], tables


def find_certificate(L, s, m, budget=DEFAULT_BUDGET, strategy="auto"):
    status, cert = search_certificate(L, s, m, budget, strategy)
    return cert


def refute_finitary_at(L, s, m, budget=DEFAULT_BUDGET, strategy="auto"):
    """True iff the exhaustive search finds no certificate at this m (Inconclusive on budget)."""
    status, _ = search_certificate(L, s, m, budget, strategy)
    return status == "refuted"


# ---------------------------------------------------------------- certificate files


def certificate_to_text(L, s, cert):
    U, W, V = L.semantic(s.k), L.semantic(cert.m), L.semantic(s.n)
    F = SemSubst(L, cert.m, cert.k, cert.f, check=False)
    G = SemSubst(L, cert.n, cert.m, cert.g, check=False)
    fcls, gcls = F.classes(), G.classes()
    lines = [f"certificate n={cert.n} m={cert.m} k={cert.k}"]
    for j in range(W.size):
        lines.append(f"G {digest(W.reps[j])} -> {digest(V.reps[gcls[j]])} root={_bits(cert.g[j], cert.n)}")
    for i in range(U.size):
        lines.append(f"F {digest(U.reps[i])} -> {digest(W.reps[fcls[i]])} root={_bits(cert.f[i], cert.m)}")
    return "\n".join(lines) + "\n"


def _bits(v, n):
    return "".join("1" if v >> i & 1 else "0" for i in range(n))


def certificate_from_text(L, text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise ParseError("empty certificate")
    sc = Scanner(lines[0])
    if not sc.match(r"certificate\b"):
        sc.error("expected 'certificate'")
    dims = {}
    for key in ("n", "m", "k"):
        if not sc.match(key + "="):
            sc.error(f"expected {key}=")
        dims[key] = int(sc.match(r"\d+") or sc.error("expected a number"))
    U, W = L.semantic(dims["k"]), L.semantic(dims["m"])
    where_u = {digest(U.reps[i]): i for i in range(U.size)}
    where_w = {digest(W.reps[j]): j for j in range(W.size)}
    g = [None] * W.size
    f = [None] * U.size
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 5 or parts[0] not in "GF" or parts[2] != "->" or not parts[4].startswith("root="):
            raise ParseError(f"bad certificate line: {line!r}")
        bits = parts[4][5:]
        value = sum(1 << i for i, c in enumerate(bits) if c == "1")
        if parts[0] == "G":
            if parts[1] not in where_w or len(bits) != dims["n"]:
                raise ParseError(f"unknown m-model or bad width: {line!r}")
            g[where_w[parts[1]]] = value
        else:
            if parts[1] not in where_u or len(bits) != dims["m"]:
                raise ParseError(f"unknown k-model or bad width: {line!r}")
            f[where_u[parts[1]]] = value
    if None in g or None in f:
        raise ParseError("certificate does not cover every model")
    return Certificate(dims["n"], dims["m"], dims["k"], g, f)

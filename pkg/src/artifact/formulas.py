"""Intuitionistic propositional formulas over ->, |, &, false.

Negation, equivalence and ``true`` are sugar: ``~A`` is ``A -> false``,
``A <-> B`` is ``(A -> B) & (B -> A)`` and ``true`` is ``false -> false``.
Variables are ``x1, x2, ...``.
"""
import re

from ._parsing import ParseError, Scanner


class Formula:
    __slots__ = ("_hash",)

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Formula({to_text(self)!r})"

    def __hash__(self):
        try:
            return self._hash
        except AttributeError:
            self._hash = hash(self._key())
            return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Formula) and hash(self) == hash(other) and self._key() == other._key()


class Var(Formula):
    __slots__ = ("index",)

    def __init__(self, index):
        if index < 1:
            raise ValueError("variable indices start at 1")
        self.index = index

    def _key(self):
        return ("v", self.index)


class _Bot(Formula):
    __slots__ = ()

    def _key(self):
        return ("bot",)


class _Binary(Formula):
    __slots__ = ("left", "right")
    tag = None

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def _key(self):
        return (self.tag, self.left, self.right)


class Imp(_Binary):
    __slots__ = ()
    tag = "imp"


class Or(_Binary):
    __slots__ = ()
    tag = "or"


class And(_Binary):
    __slots__ = ()
    tag = "and"


BOT = _Bot()
Bot = BOT
TOP = Imp(BOT, BOT)


def neg(a):
    return Imp(a, BOT)


def iff(a, b):
    return And(Imp(a, b), Imp(b, a))


def is_neg(a):
    return isinstance(a, Imp) and a.right == BOT


# constant folding helpers; only used when building formulas programmatically


def conj(items):
    out = None
    for a in items:
        if a == BOT:
            return BOT
        if a == TOP:
            continue
        out = a if out is None else And(out, a)
    return TOP if out is None else out


def disj(items):
    out = None
    for a in items:
        if a == TOP:
            return TOP
        if a == BOT:
            continue
        out = a if out is None else Or(out, a)
    return BOT if out is None else out


def imp(a, b):
    if a == BOT or b == TOP:
        return TOP
    if a == TOP:
        return b
    if a == b:
        return TOP
    return Imp(a, b)


def free_variables(a):
    out = set()
    stack = [a]
    while stack:
        f = stack.pop()
        if isinstance(f, Var):
            out.add(f.index)
        elif isinstance(f, _Binary):
            stack.append(f.left)
            stack.append(f.right)
    return frozenset(out)


def max_variable(a):
    return max(free_variables(a), default=0)


def size(a):
    if isinstance(a, _Binary):
        return 1 + size(a.left) + size(a.right)
    return 1


# ---------------------------------------------------------------- printing

_IMP, _IFF, _OR, _AND, _ATOM = range(5)


def _level(a):
    if isinstance(a, Imp):
        return _ATOM if a.right == BOT else _IMP
    if isinstance(a, Or):
        return _OR
    if isinstance(a, And):
        return _AND
    return _ATOM


def to_text(a):
    """Print so that ``parse_formula(to_text(a)) == a``."""
    if isinstance(a, Var):
        return f"x{a.index}"
    if a == BOT:
        return "false"
    if a == TOP:
        return "true"
    if isinstance(a, Imp) and a.right == BOT:
        return "~" + _wrap(a.left, _ATOM)
    if isinstance(a, Imp):
        return f"{_wrap(a.left, _IMP + 1)} -> {_wrap(a.right, _IMP)}"
    if isinstance(a, Or):
        return f"{_wrap(a.left, _OR)} | {_wrap(a.right, _OR + 1)}"
    return f"{_wrap(a.left, _AND)} & {_wrap(a.right, _AND + 1)}"


def _wrap(a, need):
    s = to_text(a)
    return s if _level(a) >= need else f"({s})"


# ---------------------------------------------------------------- parsing

_VAR = re.compile(r"x(\d+)")


def parse_formula(text):
    sc = Scanner(text)
    a = _parse_imp(sc)
    if not sc.at_end():
        sc.error("unexpected input")
    return a


def _parse_imp(sc):
    left = _parse_iff(sc)
    if sc.accept("->"):
        return Imp(left, _parse_imp(sc))
    return left


def _parse_iff(sc):
    left = _parse_or(sc)
    if sc.accept("<->"):
        return iff(left, _parse_iff(sc))
    return left


def _parse_or(sc):
    a = _parse_and(sc)
    while sc.accept("|"):
        a = Or(a, _parse_and(sc))
    return a


def _parse_and(sc):
    a = _parse_unary(sc)
    while sc.accept("&"):
        a = And(a, _parse_unary(sc))
    return a


def _parse_unary(sc):
    if sc.accept("~"):
        return neg(_parse_unary(sc))
    if sc.accept("("):
        a = _parse_imp(sc)
        sc.expect(")")
        return a
    word = sc.match(r"[A-Za-z_][A-Za-z0-9_]*")
    if word is None:
        sc.error("expected a formula")
    if word == "false":
        return BOT
    if word == "true":
        return TOP
    m = _VAR.fullmatch(word)
    if m is None or int(m.group(1)) < 1:
        sc.pos -= len(word)
        sc.error(f"unknown token {word!r}")
    return Var(int(m.group(1)))


# ---------------------------------------------------------------- substitutions


class TargetMismatch(ValueError):
    pass


class Substitution:
    """Maps x1..xn to formulas in x1..xk; variables past n are left alone."""

    __slots__ = ("n", "k", "images")

    def __init__(self, images, k=None):
        self.images = tuple(images)
        self.n = len(self.images)
        used = max((max_variable(a) for a in self.images), default=0)
        if k is None:
            k = used
        if used > k:
            raise TargetMismatch(f"an image uses x{used} but the target has {k} variables")
        self.k = k

    def __call__(self, a):
        return apply_subst_formula(self, a)

    def __eq__(self, other):
        return isinstance(other, Substitution) and (self.k, self.images) == (other.k, other.images)

    def __hash__(self):
        return hash((self.k, self.images))

    def __repr__(self):
        return f"Substitution({self.to_text()!r})"

    def image(self, i):
        return self.images[i - 1] if i <= self.n else Var(i)

    def to_text(self):
        parts = [f"vars {self.k}"] + [f"x{i} := {to_text(a)}" for i, a in enumerate(self.images, 1)]
        return "; ".join(parts)


def identity(n, k=None):
    return Substitution([Var(i) for i in range(1, n + 1)], n if k is None else k)


def apply_subst_formula(s, a):
    memo = {}

    def go(f):
        if isinstance(f, Var):
            return s.image(f.index)
        if not isinstance(f, _Binary):
            return f
        r = memo.get(f)
        if r is None:
            r = type(f)(go(f.left), go(f.right))
            memo[f] = r
        return r

    return go(a)


def compose(alpha, tau):
    """``alpha o tau``: first tau, then alpha on its images."""
    images = [apply_subst_formula(alpha, a) for a in tau.images]
    k = max([alpha.k] + [max_variable(a) for a in images])
    return Substitution(images, k)


def parse_substitution(text):
    sc = Scanner(text.replace("\n", ";"))
    k = None
    assigned = {}
    while not sc.at_end():
        if sc.accept(";"):
            continue
        if sc.match(r"vars\b"):
            num = sc.match(r"\d+")
            if num is None:
                sc.error("expected the number of target variables")
            k = int(num)
            continue
        start = sc.pos
        name = sc.match(r"x\d+")
        if name is None:
            sc.error("expected 'vars <k>' or 'x<i> := <formula>'")
        i = int(name[1:])
        if i < 1:
            raise ParseError("variable indices start at 1", start)
        sc.expect(":=")
        end = sc.text.find(";", sc.pos)
        end = len(sc.text) if end < 0 else end
        try:
            assigned[i] = parse_formula(sc.text[sc.pos:end])
        except ParseError as e:
            raise ParseError(e.message, None if e.pos is None else sc.pos + e.pos) from None
        sc.pos = end
    n = max(assigned, default=0)
    images = [assigned.get(i, Var(i)) for i in range(1, n + 1)]
    return Substitution(images, k)


# ---------------------------------------------------------------- axioms


class UnknownAxiom(ValueError):
    pass


def _h(n):
    a = Or(Var(1), neg(Var(1)))
    for i in range(2, n + 1):
        a = Or(Var(i), Imp(Var(i), a))
    return a


def _b(n):
    xs = [Var(i) for i in range(1, n + 2)]
    parts = []
    for i, x in enumerate(xs):
        rest = disj(xs[:i] + xs[i + 1:])
        parts.append(Imp(Imp(x, rest), rest))
    return Imp(conj(parts), disj(xs))


def axiom(name, n=None):
    """Named axioms: KC, LC, SL, PWL, and the families H(n), B(n) for n >= 1."""
    m = re.fullmatch(r"([A-Z]+)\s*(?:\(\s*(\d+)\s*\))?", name.strip())
    if m is None:
        raise UnknownAxiom(f"unknown axiom {name!r}")
    head = m.group(1)
    if m.group(2) is not None:
        n = int(m.group(2))
    x1, x2 = Var(1), Var(2)
    wem = Or(neg(x1), neg(neg(x1)))
    if head == "KC":
        return wem
    if head == "LC":
        return Or(Imp(x1, x2), Imp(x2, x1))
    if head == "SL":
        return Imp(Imp(Imp(neg(neg(x1)), x1), wem), wem)
    if head == "PWL":
        return Or(Imp(x2, x1), Imp(Imp(Imp(x1, x2), x1), x1))
    if head in ("H", "B"):
        if n is None or n < 1:
            raise UnknownAxiom(f"{head}(n) needs n >= 1")
        return _h(n) if head == "H" else _b(n)
    raise UnknownAxiom(f"unknown axiom {name!r}")

"""Logics of finite frame families.

A logic is given by finitely many frames and is represented by the closure
of that family under generated subframes and p-morphic images.  For each
number of variables n the closure determines a finite poset of p-irreducible
n-models (``SemanticClass``), and theoremhood, the theory order and
characters are all computed on that poset.
"""
from functools import lru_cache

from ._parsing import ParseError, Scanner
from .formulas import BOT, Var, conj, disj, imp, max_variable
from .frames import (FrameError, _parse_frame_body, bits_of, catalog_lookup, catalog_names, chain,
                     fork, generated_subframe, join, resolve, rhombus)
from .models import (DEFAULT_LIMIT, ExplosionGuard, Model, WidthMismatch, _truth, bits_text,
                     estimate_labelings, labelings)
from .morphisms import canonical_form, digest, frame_images

LATTICE_CAP = 20


# ---------------------------------------------------------------- frame names


@lru_cache(maxsize=None)
def _name_table():
    named = []
    named += [chain(d) for d in range(1, 9)]
    named += [fork(n) for n in range(2, 7)]
    named += [rhombus(n) for n in range(2, 6)]
    named += [catalog_lookup(name) for name in catalog_names()]
    for d in range(1, 4):
        for m in range(2, 5):
            named.append(join(chain(d), fork(m), f"L{d}+F{m}"))
            named.append(join(chain(d), rhombus(m), f"L{d}+R{m}"))
    for s in range(2, 5):
        named.append(join(fork(2), fork(s), f"F2+F{s}"))
    table = {}
    for rank, f in enumerate(named):
        table.setdefault(canonical_form(f), (rank, f.name))
    return table


def frame_name(f):
    """Catalog name of ``f`` up to isomorphism, else ``frame:<digest>``."""
    hit = _name_table().get(canonical_form(f))
    return hit[1] if hit else f"frame:{digest(f)[:8]}"


def frame_sort_key(f):
    hit = _name_table().get(canonical_form(f))
    if hit:
        return (0, hit[0], "")
    return (1, len(f), digest(f))


# ---------------------------------------------------------------- closure


def sm_closure(frames):
    """Closure under generated subframes and p-morphic images, named and sorted."""
    found = {}
    todo = list(frames)
    while todo:
        f = todo.pop()
        key = canonical_form(f)
        if key in found:
            continue
        found[key] = f.renamed(frame_name(f))
        for w in f.nodes[1:]:
            todo.append(generated_subframe(f, w))
        todo.extend(frame_images(f))
    return sorted(found.values(), key=frame_sort_key)


# ---------------------------------------------------------------- semantic classes


class NotOverClosure(ValueError):
    pass


class SemanticClass:
    """The p-irreducible n-models over a closed frame family, ordered by theory inclusion.

    Class ``i`` has root value ``rootval[i]`` and ``upcls[i]`` is the bitmask of
    the classes of its generated submodels (itself included).  Successor
    classes always have smaller indices.
    """

    def __init__(self, frames, n, limit=DEFAULT_LIMIT):
        frames = sorted(frames, key=len)
        estimate = estimate_labelings(frames, n)
        if limit is not None and estimate > limit:
            raise ExplosionGuard(f"about {estimate} labelings exceed the limit of {limit}")
        self.n = n
        self.frames = frames
        self.rootval = []
        self.upcls = []
        self.sub = []
        self.reps = []
        self.sig = {}
        self._memo = {}
        self._chars = {}
        for f in frames:
            stricts = [bits_of(f.up[i] & ~(1 << i)) for i in range(len(f))]
            for val in labelings(f, n):
                cls = self._classify_nodes(val, stricts, grow=True)
                if cls is not None:
                    self._add(f, val, cls)
        self.size = len(self.rootval)
        self.full = (1 << self.size) - 1
        self.up = self.upcls

    def _add(self, f, val, cls):
        i = len(self.rootval)
        cls[0] = i
        T = 0
        for c in cls[1:]:
            T |= 1 << c
        self.rootval.append(val[0])
        self.upcls.append(T | 1 << i)
        self.sub.append(tuple(cls))
        self.reps.append(Model(f, self.n, val))
        self.sig[(val[0], self._cover_mask(T))] = i
        self._memo[(val[0], T)] = i

    def _cover_mask(self, T):
        above = 0
        for c in bits_of(T):
            above |= self.upcls[c] & ~(1 << c)
        return T & ~above

    def classify_root(self, v, T):
        """Class of a model whose root has value v and whose proper submodels have classes T."""
        key = (v, T)
        r = self._memo.get(key)
        if r is not None:
            return r
        r = None
        for c in bits_of(T):
            if self.rootval[c] == v and T & ~self.upcls[c] == 0:
                r = c
                break
        if r is None:
            r = self.sig.get((v, self._cover_mask(T)))
            if r is None:
                return None
        self._memo[key] = r
        return r

    def _classify_nodes(self, val, stricts, grow=False):
        size = len(val)
        cls = [0] * size
        for w in range(size - 1, -1, -1):
            T = 0
            for j in stricts[w]:
                T |= 1 << cls[j]
            c = self.classify_root(val[w], T)
            if c is None:
                if grow and w == 0:
                    if len(set(cls[1:])) != size - 1:
                        raise RuntimeError("reducible labeling with an unseen reduct")
                    cls[0] = -1
                    return cls
                raise NotOverClosure("model is not over the logic's frames")
            cls[w] = c
        # root classified: the labeling is not new
        return None if grow else cls

    def node_classes(self, m):
        """Class of every generated submodel of ``m``, in node order."""
        if m.n != self.n:
            raise WidthMismatch(f"{m.n}-model against {self.n}-variable classes")
        f = m.frame
        stricts = [bits_of(f.up[i] & ~(1 << i)) for i in range(len(f))]
        return self._classify_nodes(m.val, stricts)

    def classify(self, m):
        return self.node_classes(m)[0]

    def strict(self, i):
        return self.upcls[i] & ~(1 << i)

    def covers(self, i):
        return self._cover_mask(self.strict(i))

    def leq(self, i, j):
        """Theory of class i is included in that of class j."""
        return bool(self.upcls[i] >> j & 1)

    def truth(self, a):
        """Bitmask of the classes whose models force ``a``."""
        if max_variable(a) > self.n:
            raise WidthMismatch(f"formula uses x{max_variable(a)} but classes have {self.n} variables")
        return _truth(self, self.rootval, a, {})

    def label(self, i):
        return self.reps[i].label()

    def value_text(self, i):
        return bits_text(self.rootval[i], self.n)

    def image_class(self, i, h, target):
        """Class in ``target`` of the model got from rep ``i`` by revaluing each node through ``h``."""
        sub = self.sub[i]
        f = self.reps[i].frame
        val = [h[c] for c in sub]
        stricts = [bits_of(f.up[w] & ~(1 << w)) for w in range(len(f))]
        return target._classify_nodes(val, stricts)[0]

    def character(self, i):
        """A formula forced exactly by the models whose class lies above class ``i``."""
        return self._character(i)[0]

    def _character(self, i):
        hit = self._chars.get(i)
        if hit is not None:
            return hit
        v = self.rootval[i]
        succ = bits_of(self.covers(i))
        parts = [self._character(c) for c in succ]
        prop = conj([Var(j + 1) for j in range(self.n) if v >> j & 1])
        common = self.n and (1 << self.n) - 1
        for c in succ:
            common &= self.rootval[c]
        new = [Var(j + 1) for j in range(self.n) if common >> j & 1 and not v >> j & 1]
        above = disj([p[0] for p in parts])
        phi = conj([prop, imp(disj(new + [p[1] for p in parts]), above)])
        psi = imp(phi, above)
        self._chars[i] = (phi, psi)
        return phi, psi


_SEMANTIC = {}


def semantic_class(frames, n, limit=DEFAULT_LIMIT):
    key = (frozenset(canonical_form(f) for f in frames), n)
    hit = _SEMANTIC.get(key)
    if hit is None:
        hit = SemanticClass(frames, n, limit)
        _SEMANTIC[key] = hit
    return hit


# ---------------------------------------------------------------- logic specs


class LogicSpec:
    """Logic of a finite family of frames, kept as the closed family."""

    def __init__(self, frames, name=None, _closed=False):
        frames = list(frames)
        if not frames:
            raise ValueError("a logic needs at least one frame")
        self.generators = tuple(frames)
        self.closure = tuple(sorted(frames, key=frame_sort_key) if _closed else sm_closure(frames))
        self.key = frozenset(canonical_form(f) for f in self.closure)
        self.maximal = _maximal(self.closure)
        self.name = name or self.label()

    def __eq__(self, other):
        return isinstance(other, LogicSpec) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"<LogicSpec L({self.label()}): {len(self.closure)} frames>"

    def label(self):
        return ",".join(f.name for f in self.maximal)

    def frame_names(self):
        return [f.name for f in self.closure]

    def semantic(self, n, limit=DEFAULT_LIMIT):
        return semantic_class(self.closure, n, limit)

    def contains_frame(self, g):
        return canonical_form(g) in self.key


_CLOSURE_KEYS = {}


def _closure_keys(f):
    key = canonical_form(f)
    hit = _CLOSURE_KEYS.get(key)
    if hit is None:
        hit = frozenset(canonical_form(g) for g in sm_closure([f]))
        _CLOSURE_KEYS[key] = hit
    return hit


def _maximal(closure):
    subs = {canonical_form(f): _closure_keys(f) for f in closure}
    out = []
    for f in closure:
        k = canonical_form(f)
        if not any(k in subs[canonical_form(g)] and canonical_form(g) != k for g in closure):
            out.append(f)
    return out


def logic(*names, local=None):
    """``logic("R2", "F2")``: the logic of catalog (or locally defined) frames."""
    return LogicSpec([resolve(n, local) for n in names])


def is_theorem(L, a):
    n = max_variable(a)
    U = L.semantic(n)
    return U.truth(a) == U.full


def th_leq(L, m, n):
    if m.n != n.n:
        raise WidthMismatch(f"{m.n}-model against {n.n}-model")
    U = L.semantic(m.n)
    return U.leq(U.classify(m), U.classify(n))


def character(L, m):
    U = L.semantic(m.n)
    return U.character(U.classify(m))


def omits(L, g):
    return not L.contains_frame(g)


def logic_leq(a, b):
    """``a`` is included in ``b`` as a set of formulas."""
    return b.key <= a.key


def logic_equal(a, b):
    return a.key == b.key


def h_complete_extensions(L):
    out = {}
    for f in L.closure:
        spec = LogicSpec([f])
        out.setdefault(spec.key, spec)
    return list(out.values())


def extension_lattice(L, cap=LATTICE_CAP):
    """All consistent extensions of ``L``, one spec per logic."""
    closure = list(L.closure)
    if len(closure) > cap:
        raise ExplosionGuard(f"{len(closure)} frames means 2^{len(closure)} subsets")
    index = {canonical_form(f): i for i, f in enumerate(closure)}
    down = [sum(1 << index[k] for k in _closure_keys(f)) for f in closure]
    seen = {}
    # closed subsets are unions of principal ones; grow them breadth first
    todo = [d for d in down]
    while todo:
        mask = todo.pop()
        if mask in seen:
            continue
        seen[mask] = None
        for d in down:
            if mask | d != mask:
                todo.append(mask | d)
    out = []
    for mask in sorted(seen, key=lambda m: (bin(m).count("1"), m)):
        frames = [closure[i] for i in bits_of(mask)]
        out.append(LogicSpec(frames, _closed=True))
    return out


def hasse_edges(logics):
    """Pairs (a, b) of indices with logic a strictly below b and nothing in between."""
    keys = [L.key for L in logics]
    below = [[j for j in range(len(keys)) if keys[j] < keys[i]] for i in range(len(keys))]
    edges = []
    for i in range(len(keys)):
        for j in below[i]:
            if not any(keys[j] < keys[k] < keys[i] for k in below[i]):
                edges.append((i, j))
    return edges


def lattice_dot(logics, filled=(), name="lattice"):
    filled = set(filled)
    lines = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for i, L in enumerate(logics):
        style = ", style=filled" if i in filled else ""
        lines.append(f'  n{i} [label="{L.label()}"{style}];')
    for a, b in hasse_edges(logics):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def report_lines(logics, nullary):
    """``<logic-id>: frames=[...] nullary=<value>`` for each logic."""
    out = []
    for L, flag in zip(logics, nullary):
        word = flag if isinstance(flag, str) else ("true" if flag else "false")
        out.append(f"L({L.label()}): frames=[{', '.join(L.frame_names())}] nullary={word}")
    return out


# ---------------------------------------------------------------- text format


def parse_logics(text, frames=None):
    """``logic <name> { frames: G3, F2; }`` blocks, with optional ``frame`` blocks."""
    sc = Scanner(text)
    local = dict(frames or {})
    out = {}
    while not sc.at_end():
        if sc.match(r"frame\b"):
            name = sc.ident("frame name")
            local[name] = _parse_frame_body(sc, name)
            continue
        if not sc.match(r"logic\b"):
            sc.error("expected 'logic' or 'frame'")
        name = sc.ident("logic name")
        sc.expect("{")
        if not sc.match(r"frames\b"):
            sc.error("expected 'frames'")
        sc.expect(":")
        names = [sc.ident("frame name")]
        while sc.accept(","):
            names.append(sc.ident("frame name"))
        sc.accept(";")
        sc.expect("}")
        start = sc.pos
        try:
            out[name] = LogicSpec([resolve(n, local) for n in names], name)
        except FrameError as e:
            raise ParseError(str(e), start) from None
    return out

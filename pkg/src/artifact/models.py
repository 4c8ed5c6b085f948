"""n-models: a frame with a monotone valuation of x1..xn, and forcing.

Valuations are stored as one int per node, bit ``i - 1`` standing for
``x_i``.  Printed bit strings put x1 first, so ``"01"`` means x1 false and
x2 true.
"""
from .formulas import BOT, And, Imp, Or, Var, max_variable
from .frames import Frame, _restrict, bits_of, generated_subframe, resolve
from ._parsing import ParseError, Scanner

WIDTH_CAP = 16
DEFAULT_LIMIT = 10 ** 6


class ModelError(Exception):
    pass


class MonotonicityError(ModelError):
    def __init__(self, lower, upper):
        super().__init__(f"valuation shrinks from {lower} to {upper}")
        self.witness = (lower, upper)


class VariableOutOfRange(ModelError):
    pass


class BadWidth(ModelError):
    pass


class WidthMismatch(ModelError):
    pass


class ExplosionGuard(ModelError):
    pass


def bits_text(value, n):
    return "".join("1" if value >> i & 1 else "0" for i in range(n))


def bits_value(text):
    if any(c not in "01" for c in text):
        raise ValueError(f"not a bit string: {text!r}")
    return sum(1 << i for i, c in enumerate(text) if c == "1")


class Model:
    __slots__ = ("frame", "n", "val", "_hash")

    def __init__(self, frame, n, val):
        # trusted: val is a tuple of ints indexed like frame.nodes, already monotone
        self.frame = frame
        self.n = n
        self.val = tuple(val)
        self._hash = None

    def __len__(self):
        return len(self.frame)

    def __eq__(self, other):
        return (isinstance(other, Model) and self.n == other.n and self.val == other.val
                and self.frame == other.frame)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.frame, self.n, self.val))
        return self._hash

    def __repr__(self):
        return f"<Model {self.label()}>"

    def label(self):
        """Compact description such as ``F2(0;0,1)``: node values grouped by depth."""
        f = self.frame
        depths = f.depths()
        groups = []
        for d in sorted(set(depths), reverse=True):
            vals = sorted(bits_text(self.val[i], self.n) for i in range(len(f)) if depths[i] == d)
            groups.append(",".join(vals))
        return f"{f.name or 'frame'}({';'.join(groups)})"

    def value(self, w):
        return self.val[self.frame.idx(w)]

    def bits(self, w):
        return bits_text(self.value(w), self.n)

    def truth_set(self, a):
        """Bitmask of the nodes that force ``a``."""
        if max_variable(a) > self.n:
            raise VariableOutOfRange(f"x{max_variable(a)} is outside a {self.n}-model")
        return _truth(self.frame, self.val, a, {})

    def forces(self, a, w=None):
        i = 0 if w is None else self.frame.idx(w)
        return bool(self.truth_set(a) >> i & 1)

    def to_text(self, name="M", frame_name=None):
        fname = frame_name or self.frame.name or "F"
        body = " ".join(f"{v}: {bits_text(x, self.n)};" for v, x in zip(self.frame.nodes, self.val))
        return f"model {name} over {fname} vars {self.n} {{ {body} }}"

    def to_dot(self, name="M"):
        f = self.frame
        lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
        for i, v in enumerate(f.nodes):
            shape = "doublecircle" if i == 0 else "circle"
            lines.append(f'  "{v}" [shape={shape}, label="{bits_text(self.val[i], self.n) or v}"];')
        for a, b in f.cover_pairs():
            lines.append(f'  "{a}" -> "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _truth(frame, val, a, memo):
    r = memo.get(a)
    if r is not None:
        return r
    if isinstance(a, Var):
        bit = 1 << (a.index - 1)
        r = 0
        for i, v in enumerate(val):
            if v & bit:
                r |= 1 << i
    elif a == BOT:
        r = 0
    elif isinstance(a, And):
        r = _truth(frame, val, a.left, memo) & _truth(frame, val, a.right, memo)
    elif isinstance(a, Or):
        r = _truth(frame, val, a.left, memo) | _truth(frame, val, a.right, memo)
    elif isinstance(a, Imp):
        bad = _truth(frame, val, a.left, memo) & ~_truth(frame, val, a.right, memo)
        r = 0
        for i, up in enumerate(frame.up):
            if not up & bad:
                r |= 1 << i
    else:
        raise TypeError(f"not a formula: {a!r}")
    memo[a] = r
    return r


def truth_set(m, a):
    return m.truth_set(a)


def forces(m, w, a):
    return m.forces(a, w)


def _check_monotone(frame, val):
    for i, j in ((i, j) for i in range(len(frame)) for j in bits_of(frame.covers[i])):
        if val[i] & ~val[j]:
            raise MonotonicityError(frame.nodes[i], frame.nodes[j])


def build_model(f, n, val):
    """``val`` maps nodes to bit strings (x1 first) or ints, or is a list in node order."""
    if n < 0 or n > WIDTH_CAP:
        raise BadWidth(f"width {n} outside 0..{WIDTH_CAP}")
    if isinstance(val, dict):
        missing = [v for v in f.nodes if v not in val]
        if missing:
            raise ModelError(f"no value for {', '.join(missing)}")
        extra = [v for v in val if v not in f.index]
        if extra:
            raise ModelError(f"unknown nodes {', '.join(map(str, extra))}")
        raw = [val[v] for v in f.nodes]
    else:
        raw = list(val)
        if len(raw) != len(f):
            raise ModelError(f"expected {len(f)} values, got {len(raw)}")
    out = []
    for x in raw:
        if isinstance(x, str):
            if len(x) != n:
                raise BadWidth(f"bit string {x!r} does not have width {n}")
            x = bits_value(x)
        if x < 0 or x >> n:
            raise BadWidth(f"value {x} does not fit in {n} bits")
        out.append(x)
    _check_monotone(f, out)
    return Model(f, n, out)


def restrict(m, n):
    if n < 0 or n > m.n:
        raise BadWidth(f"cannot restrict a {m.n}-model to {n} variables")
    mask = (1 << n) - 1
    return Model(m.frame, n, [v & mask for v in m.val])


def generated_submodel(m, w):
    i = m.frame.idx(w)
    keep = bits_of(m.frame.up[i])
    return Model(_restrict(m.frame, keep, m.frame.name if i == 0 else None), m.n, [m.val[j] for j in keep])


def submodel_at(m, i):
    """Generated submodel at node index ``i``."""
    if i == 0:
        return m
    keep = bits_of(m.frame.up[i])
    return Model(_restrict(m.frame, keep), m.n, [m.val[j] for j in keep])


# ---------------------------------------------------------------- enumeration


def count_upsets(f, cap=None):
    """Number of up-closed node sets, stopping early once ``cap`` is passed."""
    memo = {}

    def go(mask):
        if not mask:
            return 1
        r = memo.get(mask)
        if r is not None:
            return r
        x = (mask & -mask).bit_length() - 1
        r = go(mask & ~f.up[x])
        if cap is None or r <= cap:
            r += go(mask & ~f.down[x])
        memo[mask] = r
        return r

    return go(f.full)


def estimate_labelings(frames, n):
    total = 0
    for f in frames:
        total += count_upsets(f, DEFAULT_LIMIT * 10) ** n
    return total


def labelings(f, n):
    """All monotone n-valuations of ``f`` in lexicographic order of printed bits."""
    order = sorted(range(1 << n), key=lambda v: bits_text(v, n))
    size = len(f)
    preds = [[j for j in bits_of(f.down[i]) if j != i] for i in range(size)]
    val = [0] * size

    def go(i):
        if i == size:
            yield tuple(val)
            return
        need = 0
        for j in preds[i]:
            need |= val[j]
        for v in order:
            if v & need == need:
                val[i] = v
                yield from go(i + 1)

    yield from go(0)


def enumerate_models(frames, n, irreducible_only=False, limit=DEFAULT_LIMIT):
    if n < 0 or n > WIDTH_CAP:
        raise BadWidth(f"width {n} outside 0..{WIDTH_CAP}")
    frames = list(frames)
    estimate = estimate_labelings(frames, n)
    if limit is not None and estimate > limit:
        raise ExplosionGuard(f"about {estimate} labelings exceed the limit of {limit}")
    if not irreducible_only:
        for f in frames:
            for val in labelings(f, n):
                yield Model(f, n, val)
        return
    from .morphisms import canonical_form, is_irreducible

    seen = set()
    for f in frames:
        for val in labelings(f, n):
            m = Model(f, n, val)
            if not is_irreducible(m):
                continue
            key = canonical_form(m)
            if key not in seen:
                seen.add(key)
                yield m


# ---------------------------------------------------------------- text format


def parse_models(text, frames=None):
    """Parse ``model <name> over <frame> vars <n> { node: bits; ... }`` blocks."""
    sc = Scanner(text)
    out = {}
    while not sc.at_end():
        if sc.match(r"frame\b"):
            from .frames import _parse_frame_body

            name = sc.ident("frame name")
            frames = dict(frames or {})
            frames[name] = _parse_frame_body(sc, name)
            continue
        if not sc.match(r"model\b"):
            sc.error("expected 'model'")
        name = sc.ident("model name")
        if not sc.match(r"over\b"):
            sc.error("expected 'over'")
        start = sc.pos
        fname = sc.ident("frame name")
        try:
            f = resolve(fname, frames)
        except Exception as e:
            raise ParseError(str(e), start) from None
        if not sc.match(r"vars\b"):
            sc.error("expected 'vars'")
        num = sc.match(r"\d+")
        if num is None:
            sc.error("expected the number of variables")
        n = int(num)
        sc.expect("{")
        val = {}
        while not sc.accept("}"):
            node = sc.ident("node")
            sc.expect(":")
            bits = sc.match(r"[01]*")
            val[node] = bits
            if not sc.accept(";") and not sc.peek("}"):
                sc.error("expected ';'")
        try:
            out[name] = build_model(f, n, val)
        except ModelError as e:
            raise ParseError(f"model {name}: {e}", start) from None
    return out


def parse_model(text, frames=None):
    models = parse_models(text, frames)
    if len(models) != 1:
        raise ParseError(f"expected exactly one model, found {len(models)}")
    return next(iter(models.values()))

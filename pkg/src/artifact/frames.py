"""Finite rooted posets.

A frame keeps its nodes in a fixed linear extension of the order with the
root at index 0.  The reflexive-transitive order is cached as one bitmask per
node (``up[i]`` has bit ``j`` set iff node ``i`` is below or equal to ``j``),
which is why frames are capped at ``NODE_CAP`` nodes.
"""
import re
from functools import lru_cache
from importlib import resources

from ._parsing import ParseError, Scanner

NODE_CAP = 64


class FrameError(Exception):
    pass


class CycleError(FrameError):
    pass


class NotRooted(FrameError):
    pass


class UnknownNode(FrameError):
    pass


class UnknownName(FrameError):
    pass


class SizeCapExceeded(FrameError):
    pass


def bits_of(mask):
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Frame:
    __slots__ = ("name", "nodes", "index", "up", "down", "covers", "_depth")

    def __init__(self, nodes, up, name=None):
        # trusted constructor: nodes topologically ordered, root first, up closed
        self.name = name
        self.nodes = tuple(nodes)
        self.index = {v: i for i, v in enumerate(self.nodes)}
        self.up = tuple(up)
        size = len(self.nodes)
        down = [0] * size
        for i in range(size):
            for j in bits_of(self.up[i]):
                down[j] |= 1 << i
        self.down = tuple(down)
        covers = []
        for i in range(size):
            strict = self.up[i] & ~(1 << i)
            above = 0
            for j in bits_of(strict):
                above |= self.up[j] & ~(1 << j)
            covers.append(strict & ~above)
        self.covers = tuple(covers)
        depth = [1] * size
        for i in reversed(range(size)):
            for j in bits_of(self.covers[i]):
                depth[i] = max(depth[i], depth[j] + 1)
        self._depth = tuple(depth)

    def __len__(self):
        return len(self.nodes)

    def __repr__(self):
        label = self.name or "frame"
        return f"<Frame {label}: {len(self)} nodes>"

    def __eq__(self, other):
        return isinstance(other, Frame) and self.nodes == other.nodes and self.up == other.up

    def __hash__(self):
        return hash((self.nodes, self.up))

    @property
    def root(self):
        return self.nodes[0]

    @property
    def full(self):
        return (1 << len(self.nodes)) - 1

    def idx(self, w):
        try:
            return self.index[w]
        except KeyError:
            raise UnknownNode(f"unknown node {w!r}") from None

    def leq(self, a, b):
        return bool(self.up[self.idx(a)] >> self.idx(b) & 1)

    def successors(self, w, strict=False):
        i = self.idx(w)
        mask = self.up[i] & ~(1 << i) if strict else self.up[i]
        return [self.nodes[j] for j in bits_of(mask)]

    def cover_pairs(self):
        return [(self.nodes[i], self.nodes[j]) for i in range(len(self)) for j in bits_of(self.covers[i])]

    def maximal(self):
        return [self.nodes[i] for i in range(len(self)) if self.up[i] == 1 << i]

    def depth(self, w=None):
        if w is None:
            return self._depth[0]
        return self._depth[self.idx(w)]

    def depths(self):
        return self._depth

    def renamed(self, name):
        f = Frame.__new__(Frame)
        for slot in Frame.__slots__:
            setattr(f, slot, getattr(self, slot))
        f.name = name
        return f

    def to_text(self, name=None):
        label = name or self.name or "F"
        order = ", ".join(f"{a}<{b}" for a, b in self.cover_pairs())
        return f"frame {label} {{ nodes: {', '.join(self.nodes)}; root: {self.root}; order: {order}; }}"

    def to_dot(self, name=None):
        label = name or self.name or "F"
        lines = [f'digraph "{label}" {{', "  rankdir=BT;", "  node [shape=circle];"]
        for i, v in enumerate(self.nodes):
            shape = "doublecircle" if i == 0 else "circle"
            lines.append(f'  "{v}" [shape={shape}];')
        for a, b in self.cover_pairs():
            lines.append(f'  "{a}" -> "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _closure(size, succ):
    up = [succ[i] | (1 << i) for i in range(size)]
    for k in range(size):
        kb = 1 << k
        for i in range(size):
            if up[i] & kb:
                up[i] |= up[k]
    return up


def build_frame(nodes, covers, root, name=None):
    """Build a frame from node names, ``(a, b)`` pairs meaning a < b, and a root."""
    nodes = [str(v) for v in nodes]
    if len(set(nodes)) != len(nodes):
        raise FrameError("duplicate node identifiers")
    if not nodes:
        raise NotRooted("a frame needs at least one node")
    if len(nodes) > NODE_CAP:
        raise SizeCapExceeded(f"{len(nodes)} nodes exceeds the cap of {NODE_CAP}")
    pos = {v: i for i, v in enumerate(nodes)}
    succ = [0] * len(nodes)
    for a, b in covers:
        a, b = str(a), str(b)
        for v in (a, b):
            if v not in pos:
                raise UnknownNode(f"unknown node {v!r}")
        if a == b:
            continue
        succ[pos[a]] |= 1 << pos[b]
    root = str(root)
    if root not in pos:
        raise UnknownNode(f"unknown node {root!r}")
    up = _closure(len(nodes), succ)
    for i in range(len(nodes)):
        for j in bits_of(up[i] & ~(1 << i)):
            if up[j] >> i & 1:
                raise CycleError(f"{nodes[i]} and {nodes[j]} lie on a cycle")
    r = pos[root]
    if up[r] != (1 << len(nodes)) - 1:
        missing = [nodes[j] for j in range(len(nodes)) if not up[r] >> j & 1]
        raise NotRooted(f"{root} is not below {', '.join(missing)}")
    # Kahn's algorithm, ties broken by input order
    order = []
    placed = 0
    preds = [0] * len(nodes)
    for i in range(len(nodes)):
        for j in bits_of(up[i] & ~(1 << i)):
            preds[j] |= 1 << i
    while len(order) < len(nodes):
        for i in range(len(nodes)):
            if not placed >> i & 1 and preds[i] & ~placed == 0:
                order.append(i)
                placed |= 1 << i
                break
    return _reindexed(nodes, up, order, name)


def _reindexed(names, up, order, name=None):
    where = {old: new for new, old in enumerate(order)}
    new_up = []
    for old in order:
        mask = 0
        for j in bits_of(up[old]):
            mask |= 1 << where[j]
        new_up.append(mask)
    return Frame([names[i] for i in order], new_up, name)


def generated_subframe(f, w):
    """The subframe on the nodes above ``w``, rooted at ``w``."""
    i = f.idx(w)
    keep = bits_of(f.up[i])
    return _restrict(f, keep)


def _restrict(f, keep, name=None):
    where = {old: new for new, old in enumerate(keep)}
    up = []
    for old in keep:
        mask = 0
        for j in bits_of(f.up[old]):
            if j in where:
                mask |= 1 << where[j]
        up.append(mask)
    return Frame([f.nodes[i] for i in keep], up, name)


def join(f, g, name=None):
    """Put every node of ``g`` above every node of ``f``; the root is f's root."""
    if len(f) + len(g) > NODE_CAP:
        raise SizeCapExceeded(f"join would have {len(f) + len(g)} nodes")
    taken = set(f.nodes)
    g_names = []
    for v in g.nodes:
        u = v
        while u in taken:
            u = u + "'"
        taken.add(u)
        g_names.append(u)
    shift = len(f)
    g_all = ((1 << len(g)) - 1) << shift
    up = [m | g_all for m in f.up] + [m << shift for m in g.up]
    return Frame(list(f.nodes) + g_names, up, name)


def depth(f, w=None):
    """Depth of ``w`` (maximal nodes have depth 1); the frame's depth if ``w`` is None."""
    return f.depth(w)


# ---------------------------------------------------------------- families


def chain(d):
    if d < 1:
        raise UnknownName("chains have length at least 1")
    return Frame([f"c{i}" for i in range(d)], [((1 << d) - 1) & ~((1 << i) - 1) for i in range(d)], f"L{d}")


def fork(n):
    if n <= 1:
        return chain(n + 1).renamed(f"F{n}")
    up = [(1 << (n + 1)) - 1] + [1 << i for i in range(1, n + 1)]
    return Frame(["r"] + [f"a{i}" for i in range(1, n + 1)], up, f"F{n}")


def rhombus(n):
    if n == 0:
        return chain(1).renamed("R0")
    f = join(fork(n), chain(1))
    return Frame(list(f.nodes[:-1]) + ["t"], f.up, f"R{n}")


def chain_below(d, f):
    """``L_d + f``: a d-chain placed under ``f`` (``d = 0`` leaves f alone)."""
    return f if d == 0 else join(chain(d), f)


# ---------------------------------------------------------------- text format


def parse_frames(text):
    """Parse every ``frame <name> { ... }`` block in ``text`` into a dict."""
    sc = Scanner(text)
    out = {}
    while not sc.at_end():
        if not sc.match(r"frame\b"):
            sc.error("expected 'frame'")
        name = sc.ident("frame name")
        f = _parse_frame_body(sc, name)
        out[name] = f
    return out


def parse_frame(text):
    frames = parse_frames(text)
    if len(frames) != 1:
        raise ParseError(f"expected exactly one frame, found {len(frames)}")
    return next(iter(frames.values()))


def _parse_frame_body(sc, name):
    sc.expect("{")
    nodes, pairs, root = None, [], None
    start = sc.pos
    while not sc.accept("}"):
        key = sc.match(r"nodes|root|order")
        if key is None:
            sc.error("expected 'nodes', 'root', 'order' or '}'")
        sc.expect(":")
        if key == "nodes":
            nodes = _ident_list(sc)
        elif key == "root":
            root = sc.ident("root node")
        else:
            while not sc.peek(";") and not sc.peek("}"):
                seq = [sc.ident("node")]
                while sc.accept("<"):
                    seq.append(sc.ident("node"))
                if len(seq) < 2:
                    sc.error("expected a<b")
                pairs.extend(zip(seq, seq[1:]))
                if not sc.accept(","):
                    break
        if not sc.accept(";") and not sc.peek("}"):
            sc.error("expected ';'")
    if nodes is None:
        raise ParseError(f"frame {name} has no nodes", start)
    if root is None:
        root = nodes[0]
    try:
        return build_frame(nodes, pairs, root, name)
    except FrameError as e:
        raise ParseError(f"frame {name}: {e}", start) from None


def _ident_list(sc):
    items = [sc.ident("node")]
    while sc.accept(","):
        items.append(sc.ident("node"))
    return items


# ---------------------------------------------------------------- catalog


@lru_cache(maxsize=None)
def _catalog_file():
    text = resources.files("artifact.data").joinpath("catalog.frames").read_text(encoding="utf-8")
    return parse_frames(text)


_PARAMETRIC = re.compile(r"^([LFR])(\d+)$")


def catalog_names():
    """Fixed catalog names in file order (parametric families L, F, R excluded)."""
    return list(_catalog_file())


def catalog_lookup(name, size=None):
    """Resolve a catalog name, e.g. ``("F", 2)``, ``"F2"``, ``"G3plus"`` or ``"L2+R3"``."""
    if size is not None:
        name = f"{name}{size}"
    m = _PARAMETRIC.match(name)
    if m:
        family, k = m.group(1), int(m.group(2))
        if family == "L":
            if k == 0:
                raise UnknownName("L0 is not a frame")
            return chain(k)
        return fork(k) if family == "F" else rhombus(k)
    table = _catalog_file()
    if name in table:
        return table[name]
    if "+" in name:
        # "A+B": B placed above A
        lower, _, upper = name.partition("+")
        return join(catalog_lookup(lower), catalog_lookup(upper), name)
    raise UnknownName(f"unknown catalog frame {name!r}")


def resolve(name, local=None):
    """Look a frame up in ``local`` definitions first, then in the catalog."""
    if local and name in local:
        return local[name]
    return catalog_lookup(name)

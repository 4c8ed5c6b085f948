"""p-morphisms, bisimulations, quotients and canonical forms."""
import hashlib
from itertools import permutations

from ._parsing import ParseError, Scanner
from .frames import CycleError, Frame, SizeCapExceeded, _closure, _reindexed, bits_of, build_frame
from .models import Model, WidthMismatch

PARTITION_CAP = 10


class NotABisimulation(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class Partition:
    """Blocks of node identifiers; blocks are kept in order of their first node."""

    __slots__ = ("blocks", "_where")

    def __init__(self, blocks):
        self.blocks = tuple(tuple(b) for b in blocks if b)
        self._where = {}
        for k, b in enumerate(self.blocks):
            for v in b:
                if v in self._where:
                    raise ValueError(f"{v} lies in two blocks")
                self._where[v] = k

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.as_sets() == other.as_sets()

    def __hash__(self):
        return hash(self.as_sets())

    def __repr__(self):
        return "Partition(" + " | ".join(",".join(b) for b in self.blocks) + ")"

    def as_sets(self):
        return frozenset(frozenset(b) for b in self.blocks)

    def block_of(self, v):
        return self._where[v]

    def is_discrete(self):
        return all(len(b) == 1 for b in self.blocks)


class NodeMap:
    __slots__ = ("mapping",)

    def __init__(self, mapping):
        self.mapping = dict(mapping)

    def __getitem__(self, v):
        return self.mapping[v]

    def __eq__(self, other):
        return isinstance(other, NodeMap) and self.mapping == other.mapping

    def __repr__(self):
        return f"NodeMap({self.mapping!r})"

    def items(self):
        return self.mapping.items()

    def is_surjective(self, dst_nodes):
        return set(self.mapping.values()) == set(dst_nodes)

    def then(self, other):
        """Composite map: first self, then ``other``."""
        return NodeMap({v: other[u] for v, u in self.mapping.items()})

    def to_text(self):
        return "map { " + " ".join(f"{a} -> {b};" for a, b in self.mapping.items()) + " }"


def parse_node_map(text):
    sc = Scanner(text)
    if not sc.match(r"map\b"):
        sc.error("expected 'map'")
    sc.expect("{")
    out = {}
    while not sc.accept("}"):
        a = sc.ident("node")
        sc.expect("->")
        b = sc.ident("node")
        if a in out:
            raise ParseError(f"node {a} mapped twice", sc.pos)
        out[a] = b
        if not sc.accept(";") and not sc.peek("}"):
            sc.error("expected ';'")
    if not sc.at_end():
        sc.error("unexpected input after map")
    return NodeMap(out)


def _as_model(x):
    if isinstance(x, Model):
        return x
    return Model(x, 0, [0] * len(x))


# ---------------------------------------------------------------- p-morphisms


def check_p_morphism(src, dst, mapping, level="model"):
    """True iff ``mapping`` is an onto p-morphism (root to root; values too at model level)."""
    if level not in ("frame", "model"):
        raise ValueError("level must be 'frame' or 'model'")
    if level == "model":
        if not isinstance(src, Model) or not isinstance(dst, Model):
            raise TypeError("model level needs two models")
        if src.n != dst.n:
            raise WidthMismatch(f"{src.n}-model against {dst.n}-model")
    sm, dm = _as_model(src), _as_model(dst)
    f, g = sm.frame, dm.frame
    mapping = mapping.mapping if isinstance(mapping, NodeMap) else dict(mapping)
    if set(mapping) != set(f.nodes) or not set(mapping.values()) <= set(g.nodes):
        return False
    p = [g.index[mapping[v]] for v in f.nodes]
    return _is_p_morphism(f, g, p) and (level == "frame" or all(
        sm.val[i] == dm.val[p[i]] for i in range(len(f))))


def _is_p_morphism(f, g, p):
    if p[0] != 0 or len(set(p)) != len(g):
        return False
    for i in range(len(f)):
        image = 0
        for j in bits_of(f.up[i]):
            image |= 1 << p[j]
        # forth: images of successors lie above p(i); back: every node above p(i) is hit
        if image != g.up[p[i]]:
            return False
    return True


def find_p_morphism(m, n):
    """Some onto p-morphism from model ``m`` to model ``n``, or None."""
    if m.n != n.n:
        raise WidthMismatch(f"{m.n}-model against {n.n}-model")
    f, g = m.frame, n.frame
    size = len(f)
    preds = [[j for j in bits_of(f.down[i]) if j != i] for i in range(size)]
    p = [0] * size

    def go(i):
        if i == size:
            return _is_p_morphism(f, g, p)
        need = 0
        for j in preds[i]:
            need |= 1 << p[j]
        cands = [0] if i == 0 else range(len(g))
        for u in cands:
            if m.val[i] != n.val[u]:
                continue
            # every predecessor's image must lie below u
            if any(not g.up[p[j]] >> u & 1 for j in preds[i]):
                continue
            p[i] = u
            if go(i + 1):
                return True
        return False

    if go(0):
        return NodeMap({f.nodes[i]: g.nodes[p[i]] for i in range(size)})
    return None


# ---------------------------------------------------------------- bisimulation


def _refine(frame, colour):
    """Coarsest stable refinement of ``colour`` under up-set back-and-forth."""
    size = len(frame)
    ups = [bits_of(frame.up[i]) for i in range(size)]
    count = len(set(colour))
    while True:
        sigs = [(colour[i], frozenset(colour[j] for j in ups[i])) for i in range(size)]
        ids = {}
        new = [ids.setdefault(s, len(ids)) for s in sigs]
        if len(ids) == count:
            return new
        colour, count = new, len(ids)


def _bisim_colours(m):
    ids = {}
    start = [ids.setdefault(v, len(ids)) for v in m.val]
    return _refine(m.frame, start)


def greatest_bisimulation(m):
    colour = _bisim_colours(m)
    blocks = {}
    for i, c in enumerate(colour):
        blocks.setdefault(c, []).append(m.frame.nodes[i])
    return Partition(blocks.values())


def is_irreducible(m):
    return len(set(_bisim_colours(m))) == len(m.frame)


def is_bisimulation(m, part):
    f = m.frame
    if set(part._where) != set(f.nodes):
        return False
    return _bisimulation_witness(m, part) is None


def _bisimulation_witness(m, part):
    f = m.frame
    blk = [part.block_of(v) for v in f.nodes]
    seen = {}
    for i in range(len(f)):
        key = (m.val[i], frozenset(blk[j] for j in bits_of(f.up[i])))
        other = seen.setdefault(blk[i], (i, key))
        if other[1] != key:
            return (f.nodes[other[0]], f.nodes[i])
    return None


def quotient(m, part):
    """Quotient model and the canonical map onto it; blocks are named by their first node."""
    f = m.frame
    if set(part._where) != set(f.nodes):
        raise NotABisimulation("partition does not cover the nodes")
    bad = _bisimulation_witness(m, part)
    if bad is not None:
        raise NotABisimulation(f"{bad[0]} and {bad[1]} share a block but differ", bad)
    blk = [part.block_of(v) for v in f.nodes]
    rep = {}
    for i, b in enumerate(blk):
        rep.setdefault(b, i)
    reps = sorted(rep.values())
    pos = {blk[i]: k for k, i in enumerate(reps)}
    succ = [0] * len(reps)
    for i in range(len(f)):
        for j in bits_of(f.up[i]):
            succ[pos[blk[i]]] |= 1 << pos[blk[j]]
    up = _closure(len(reps), succ)
    for a in range(len(reps)):
        for b in bits_of(up[a] & ~(1 << a)):
            if up[b] >> a & 1:
                raise CycleError("quotient order has a cluster")
    order = _topological(up, len(reps))
    names = [f.nodes[i] for i in reps]
    frame = _reindexed(names, up, order, f.name if len(reps) == len(f) else None)
    val = [m.val[reps[a]] for a in order]
    q = Model(frame, m.n, val)
    return q, NodeMap({f.nodes[i]: names[pos[blk[i]]] for i in range(len(f))})


def _topological(up, size):
    order, placed = [], 0
    preds = [0] * size
    for i in range(size):
        for j in bits_of(up[i] & ~(1 << i)):
            preds[j] |= 1 << i
    while len(order) < size:
        for i in range(size):
            if not placed >> i & 1 and preds[i] & ~placed == 0:
                order.append(i)
                placed |= 1 << i
                break
    return order


def reduce(m):
    """The p-irreducible reduct of ``m`` and the map onto it."""
    return quotient(m, greatest_bisimulation(m))


# ---------------------------------------------------------------- canonical forms


def _encode(m, order):
    where = {old: new for new, old in enumerate(order)}
    parts = [len(order), m.n]
    for old in order:
        mask = 0
        for j in bits_of(m.frame.up[old]):
            mask |= 1 << where[j]
        parts.append(m.val[old])
        parts.append(mask)
    return tuple(parts)


def _equitable(frame, colour):
    """Refine by counts of up-cover and down-cover colours; colours stay canonical ranks."""
    size = len(frame)
    ups = [bits_of(frame.covers[i]) for i in range(size)]
    downs = [[] for _ in range(size)]
    for i in range(size):
        for j in ups[i]:
            downs[j].append(i)
    while True:
        sigs = [(colour[i], tuple(sorted(colour[j] for j in ups[i])),
                 tuple(sorted(colour[j] for j in downs[i]))) for i in range(size)]
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colour)):
            return new
        colour = new


def _canonical_order(m):
    f = m.frame
    depths = f.depths()
    start = [(-depths[i], m.val[i]) for i in range(len(f))]
    ranks = {s: r for r, s in enumerate(sorted(set(start)))}
    colour = _equitable(f, [ranks[s] for s in start])
    best = [None, None]

    def search(colour):
        cells = {}
        for i, c in enumerate(colour):
            cells.setdefault(c, []).append(i)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            order = sorted(range(len(f)), key=lambda i: colour[i])
            code = _encode(m, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        for v in target:
            split = [2 * c + (1 if c == colour[v] and i != v else 0) for i, c in enumerate(colour)]
            search(_equitable(f, split))

    search(colour)
    return best[0], best[1]


def canonical_form(m):
    """Bytes that are equal exactly for isomorphic models (frames: pass a Frame)."""
    m = _as_model(m)
    code, _ = _canonical_order(m)
    return ",".join(map(str, code)).encode()


def canonical_model(m):
    """An isomorphic copy with nodes renamed 0, 1, ... in canonical order."""
    m = _as_model(m) if not isinstance(m, Model) else m
    code, order = _canonical_order(m)
    where = {old: new for new, old in enumerate(order)}
    up = []
    for old in order:
        mask = 0
        for j in bits_of(m.frame.up[old]):
            mask |= 1 << where[j]
        up.append(mask)
    frame = Frame([str(i) for i in range(len(order))], up, m.frame.name)
    return Model(frame, m.n, [m.val[i] for i in order])


def digest(m):
    return hashlib.sha256(canonical_form(m)).hexdigest()[:12]


def isomorphic(m, n):
    return canonical_form(m) == canonical_form(n)


def equivalent(m, n):
    if m.n != n.n:
        raise WidthMismatch(f"{m.n}-model against {n.n}-model")
    return canonical_form(reduce(m)[0]) == canonical_form(reduce(n)[0])


def brute_canonical_form(m):
    """Minimum encoding over all topological orders; a slow oracle for small models."""
    m = _as_model(m)
    f = m.frame
    best = None
    for perm in permutations(range(1, len(f))):
        order = (0,) + perm
        seen = 0
        ok = True
        for i in order:
            if f.down[i] & ~(seen | 1 << i):
                ok = False
                break
            seen |= 1 << i
        if ok:
            code = _encode(m, order)
            best = code if best is None or code < best else best
    return best


# ---------------------------------------------------------------- frame images


def _set_partitions(size):
    labels = [0] * size

    def go(i, used):
        if i == size:
            yield list(labels)
            return
        for b in range(used + 1):
            labels[i] = b
            yield from go(i + 1, max(used, b + 1))

    if size:
        yield from go(1, 1)


def frame_images(f, cap=PARTITION_CAP):
    """All p-morphic images of frame ``f``, one per isomorphism type."""
    if len(f) > cap:
        raise SizeCapExceeded(f"image search is limited to {cap} nodes")
    out = {}
    for labels in _set_partitions(len(f)):
        ok = True
        seen = {}
        for i in range(len(f)):
            key = frozenset(labels[j] for j in bits_of(f.up[i]))
            if seen.setdefault(labels[i], key) != key:
                ok = False
                break
        if not ok:
            continue
        blocks = {}
        for i, b in enumerate(labels):
            blocks.setdefault(b, []).append(f.nodes[i])
        q, _ = quotient(_as_model(f), Partition(blocks.values()))
        key = canonical_form(q.frame)
        out.setdefault(key, q.frame)
    return list(out.values())


def preorder_quotient(nodes, pairs, root, name=None):
    """Frame from a raw reflexive-transitive relation, collapsing clusters to points."""
    nodes = [str(v) for v in nodes]
    pos = {v: i for i, v in enumerate(nodes)}
    succ = [0] * len(nodes)
    for a, b in pairs:
        succ[pos[str(a)]] |= 1 << pos[str(b)]
    up = _closure(len(nodes), succ)
    cluster = {}
    for i in range(len(nodes)):
        key = frozenset(j for j in bits_of(up[i]) if up[j] >> i & 1)
        cluster.setdefault(key, i)
    rep = {i: cluster[frozenset(j for j in bits_of(up[i]) if up[j] >> i & 1)] for i in range(len(nodes))}
    keep = sorted(set(rep.values()))
    covers = [(nodes[rep[i]], nodes[rep[j]]) for i in range(len(nodes)) for j in bits_of(up[i]) if rep[i] != rep[j]]
    return build_frame([nodes[i] for i in keep], covers, nodes[rep[pos[str(root)]]], name)

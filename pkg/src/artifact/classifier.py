"""Unification-type classification of finitely generated intermediate logics.

Everything here is decided by which frames a logic omits.  A small table of
known results supplies the unification type of specific logics; the
hereditary classes and two closure rules extend it to further logics.
"""
import json
from dataclasses import dataclass, field
from functools import lru_cache

from .frames import catalog_lookup
from .logics import LogicSpec, extension_lattice, h_complete_extensions, hasse_edges, logic, omits

PROJECTIVE = "projective"
HEREDITARY_UNITARY = "hereditary_unitary"
HEREDITARY_PA = "hereditary_projective_approximation"
NULLARY_EXTENSION = "has_nullary_extension"
HEREDITARY = (PROJECTIVE, HEREDITARY_UNITARY, HEREDITARY_PA)

# the logics maximal among those with nullary unification
CONTAINERS = ("R2plus", ("R2", "F2"), "G3", "G3plus")


_frame = catalog_lookup


@lru_cache(maxsize=None)
def _spec(names):
    if isinstance(names, str):
        names = (names,)
    return LogicSpec([_frame(n) for n in names])


@dataclass
class Report:
    logic: str
    contains_kc: bool
    contains_lc: bool
    filtering: bool
    hereditary_class: str
    db_result: str
    db_citation: str = None
    structural: str = "not"
    nullary_containers: list = field(default_factory=list)
    figure_sourced: bool = False
    notes: list = field(default_factory=list)

    def to_dict(self):
        out = {
            "logic": self.logic,
            "contains_kc": self.contains_kc,
            "contains_lc": self.contains_lc,
            "filtering": self.filtering,
            "hereditary_class": self.hereditary_class,
            "db_result": self.db_result,
            "db_citation": self.db_citation,
            "structural": self.structural,
            "notes": list(self.notes),
        }
        if self.nullary_containers:
            out["nullary_containers"] = list(self.nullary_containers)
        if self.figure_sourced:
            out["figure-sourced"] = True
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)


# ---------------------------------------------------------------- known results


def _db_entries():
    """(generating frame names, type, citation key) for each known result."""
    entries = []
    nullary = ["G3", "G3plus", ("R2", "F2"), "R2plus", "Y2", "Y2plus", "Y3", "Y3plus", ("G2", "F3")]
    for names in nullary:
        entries.append((names, "nullary"))
    for s in range(2, 5):
        entries.append(((f"F2+F{s}",), "nullary"))
    for names in ["G2", "C5", "G1", ("G2", "C5")]:
        entries.append((names, "finitary"))
    for m in range(2, 7):
        entries.append(((f"F{m}",), "finitary"))
    for m in range(2, 6):
        entries.append(((f"R{m}",), "unitary"))
    for d in range(1, 4):
        for m in range(2, 5):
            entries.append(((f"L{d}+R{m}",), "unitary"))
    for d in range(1, 9):
        entries.append(((f"L{d}",), "projective"))
    out = []
    for names, kind in entries:
        names = (names,) if isinstance(names, str) else tuple(names)
        out.append((names, kind, f"{kind}/{'+'.join(names) if len(names) == 1 else ','.join(names)}"))
    return out


@lru_cache(maxsize=None)
def known_results():
    """Key of each known logic mapped to (type, citation)."""
    table = {}
    for names, kind, cite in _db_entries():
        spec = LogicSpec([_frame(n) for n in names])
        table.setdefault(spec.key, (kind, cite))
    return table


def db_lookup(L):
    return known_results().get(L.key)


# ---------------------------------------------------------------- classification


def _omits_all(L, names):
    return all(omits(L, _frame(n)) for n in names)


def containers_extending(L):
    """The maximal nullary logics that are extensions of ``L``."""
    out = []
    for names in CONTAINERS:
        c = _spec(names)
        if c.key <= L.key:
            out.append(c.label())
    return out


def hereditary_class(L):
    if _omits_all(L, ["F2", "R2"]):
        return PROJECTIVE
    if _omits_all(L, ["R2plus", "G3plus", "F2"]):
        return HEREDITARY_UNITARY
    if _omits_all(L, ["G3", "R2"]):
        return HEREDITARY_PA
    return NULLARY_EXTENSION


def hereditary_structural_completeness(L):
    return _omits_all(L, ["C1", "C2", "C3", "C4", "C5"])


def _is_chain_logic(L):
    return _omits_all(L, ["F2", "R2"])


def _inferred(L, notes):
    """Unification type from known results and the closure rules, or None."""
    hit = db_lookup(L)
    if hit is not None:
        notes.append(f"known result {hit[1]}")
        return hit
    h = hereditary_class(L)
    if h == PROJECTIVE:
        notes.append("contains LC, so unification is projective")
        return PROJECTIVE, None
    if h == HEREDITARY_UNITARY:
        notes.append("omits R2plus, G3plus and F2, so every extension is unitary")
        return "unitary", None
    if h == HEREDITARY_PA:
        notes.append("omits G3 and R2, so every extension has projective approximation")
        return "finitary", None
    rest = [f for f in L.maximal if not _is_chain_logic(LogicSpec([f]))]
    if len(rest) < len(L.maximal):
        core = LogicSpec(rest)
        sub = []
        kind = _inferred(core, sub)
        if kind is not None and kind[0] in ("finitary", "unitary"):
            notes.append(f"intersection of L({core.label()}) with a logic of chains keeps {kind[0]}")
            return kind[0], kind[1]
    return None


def classify(L, default_type=None):
    """Report for the logic ``L``.  ``default_type`` fills in unknown types."""
    kc = omits(L, _frame("F2"))
    lc = kc and omits(L, _frame("R2"))
    h = hereditary_class(L)
    notes = []
    found = _inferred(L, notes)
    sourced = False
    if found is None:
        if default_type is not None:
            kind, cite = default_type, None
            sourced = True
            notes.append(f"default type {default_type} for this census")
        else:
            kind, cite = "unknown", None
    else:
        kind, cite = found
    return Report(
        logic=f"L({L.label()})",
        contains_kc=kc,
        contains_lc=lc,
        filtering=kc,
        hereditary_class=h,
        db_result=kind,
        db_citation=cite,
        structural="hereditarily_structurally_complete" if hereditary_structural_completeness(L) else "not",
        nullary_containers=containers_extending(L) if h == NULLARY_EXTENSION else [],
        figure_sourced=sourced,
        notes=notes,
    )


# ---------------------------------------------------------------- census


@dataclass
class Census:
    logics: list
    reports: list
    edges: list

    @property
    def total(self):
        return len(self.logics)

    def nullary(self):
        return [i for i, r in enumerate(self.reports) if r.db_result == "nullary"]

    def hereditary(self):
        return [i for i, r in enumerate(self.reports) if r.hereditary_class in HEREDITARY]

    def finitary_non_hereditary(self):
        return [i for i, r in enumerate(self.reports)
                if r.hereditary_class not in HEREDITARY and r.db_result in ("finitary", "unitary")]

    def unknown(self):
        return [i for i, r in enumerate(self.reports) if r.db_result == "unknown"]

    def counts(self):
        return (self.total, len(self.nullary()), len(self.hereditary()),
                [self.logics[i].label() for i in self.finitary_non_hereditary()])

    def lines(self):
        out = []
        for L, r in zip(self.logics, self.reports):
            extra = " figure-sourced" if r.figure_sourced else ""
            out.append(f"L({L.label()}): frames=[{', '.join(L.frame_names())}] "
                       f"type={r.db_result} class={r.hereditary_class}{extra}")
        return out


def census(L, h_complete=False):
    """Classify every extension of ``L`` (or only the single-frame ones)."""
    logics = h_complete_extensions(L) if h_complete else extension_lattice(L)
    logics.sort(key=lambda s: (len(s.closure), s.label()))
    # in the census of L(G1) nodes without a known or inferred type default to nullary
    default = "nullary" if L == _spec("G1") else None
    reports = [classify(s, default) for s in logics]
    return Census(logics, reports, hasse_edges(logics))


__all__ = [
    "Report", "Census", "classify", "census", "db_lookup", "known_results", "hereditary_class",
    "hereditary_structural_completeness", "containers_extending", "logic",
]

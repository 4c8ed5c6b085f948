"""Command-line front end.

Frames are named from the catalog (``G3``, ``F2``, ``L2+R3``) or defined in a
file passed with ``--frames-file``.  Formulas, substitutions and models are
given inline or as ``@path`` to read them from a file.  Yes/no answers are
printed as true, false or inconclusive; the exit code is 0 on success, 2 for
parse and usage errors and 3 when a size guard or search budget is hit.
"""
import argparse
import sys

from . import classifier, scenarios
from ._parsing import ParseError
from .formulas import parse_formula, parse_substitution
from .frames import FrameError, catalog_names, parse_frames, resolve
from .logics import LogicSpec, extension_lattice, lattice_dot, omits
from .models import ExplosionGuard, ModelError, parse_model
from .morphisms import equivalent, reduce
from .unification import (DEFAULT_BUDGET, Inconclusive, NotFiltering, SearchBudgetExceeded,
                          certificate_from_text, certificate_to_text, check_main_certificate,
                          filtering_join, find_retraction, is_projective_formula, is_projective_unifier,
                          is_unifier, more_general, realize, search_certificate, sigma_model)

EXIT_USAGE = 2
EXIT_GUARD = 3


class UsageError(Exception):
    pass


def _read(arg):
    if arg.startswith("@"):
        with open(arg[1:], encoding="utf-8") as fh:
            return fh.read()
    return arg


def _word(flag):
    return "true" if flag else "false"


def _local(args):
    if getattr(args, "frames_file", None):
        return parse_frames(_read("@" + args.frames_file))
    return {}


def _names(values):
    out = []
    for v in values or []:
        out += [n for n in v.replace(",", " ").split() if n]
    return out


def _logic(args):
    names = _names(args.frames)
    if not names:
        raise UsageError("--frames is required")
    local = _local(args)
    return LogicSpec([resolve(n, local) for n in names])


def _model(args, text):
    return parse_model(_read(text), _local(args))


def _model_text(m, name, local):
    """Model text, preceded by its frame when the frame is not a known one with the same nodes."""
    fname = m.frame.name
    try:
        known = fname and resolve(fname, local) == m.frame
    except FrameError:
        known = False
    if known:
        return m.to_text(name)
    fname = f"{name}_frame"
    return m.frame.to_text(fname) + "\n" + m.to_text(name, fname)


# ---------------------------------------------------------------- verbs


def cmd_catalog(args, out):
    names = ["L<d>", "F<n>", "R<n>"] + catalog_names()
    if args.show:
        out.write(resolve(args.show, _local(args)).to_text() + "\n")
        return
    out.write(" ".join(names) + "\n")


def cmd_sm(args, out):
    out.write(" ".join(_logic(args).frame_names()) + "\n")


def cmd_omits(args, out):
    out.write(_word(omits(_logic(args), resolve(args.frame, _local(args)))) + "\n")


def cmd_classify(args, out):
    L = _logic(args)
    if args.structural:
        out.write(_word(classifier.hereditary_structural_completeness(L)) + "\n")
        return
    out.write(classifier.classify(L).to_json() + "\n")


def cmd_census(args, out):
    c = classifier.census(_logic(args), h_complete=args.h_complete)
    for line in c.lines():
        out.write(line + "\n")
    total, nullary, hereditary, finitary = c.counts()
    out.write(f"{total} logics, {nullary} nullary, {hereditary} hereditary, "
              f"finitary non-hereditary: {', '.join(finitary) or 'none'}\n")


def cmd_force(args, out):
    m = _model(args, args.model)
    out.write(_word(m.forces(parse_formula(_read(args.formula)), args.node)) + "\n")


def cmd_reduce(args, out):
    out.write(_model_text(reduce(_model(args, args.model))[0], args.name, _local(args)) + "\n")


def cmd_equiv(args, out):
    out.write(_word(equivalent(_model(args, args.left), _model(args, args.right))) + "\n")


def cmd_sigma(args, out):
    L = _logic(args)
    s = parse_substitution(_read(args.subst))
    out.write(_model_text(sigma_model(L, s, _model(args, args.model)), args.name, _local(args)) + "\n")


def cmd_unifies(args, out):
    L = _logic(args)
    out.write(_word(is_unifier(L, parse_substitution(_read(args.subst)), parse_formula(_read(args.formula)))) + "\n")


def cmd_projective(args, out):
    L = _logic(args)
    a = parse_formula(_read(args.formula))
    if args.subst:
        out.write(_word(is_projective_unifier(L, parse_substitution(_read(args.subst)), a)) + "\n")
    else:
        out.write(_word(is_projective_formula(L, a)) + "\n")


def cmd_more_general(args, out):
    L = _logic(args)
    t = parse_substitution(_read(args.general))
    s = parse_substitution(_read(args.special))
    out.write(_word(more_general(L, t, s, args.budget)) + "\n")


def cmd_filter_join(args, out):
    L = _logic(args)
    e = parse_substitution(_read(args.left))
    s = parse_substitution(_read(args.right))
    out.write(filtering_join(L, e, s, args.y, budget=args.budget).to_text() + "\n")


def cmd_retraction(args, out):
    L = _logic(args)
    r = find_retraction(L, parse_substitution(_read(args.subst)), args.budget)
    out.write("none\n" if r is None else realize(L, r).to_text() + "\n")


def cmd_refute(args, out):
    L = _logic(args)
    s = parse_substitution(_read(args.subst))
    try:
        status, _ = search_certificate(L, s, args.m, args.budget, args.strategy)
    except Inconclusive:
        out.write("inconclusive\n")
        return EXIT_GUARD
    out.write(_word(status == "refuted") + "\n")


def cmd_certificate(args, out):
    L = _logic(args)
    s = parse_substitution(_read(args.subst))
    if args.check:
        cert = certificate_from_text(L, _read(args.check))
        out.write(_word(check_main_certificate(L, s, cert)) + "\n")
        return
    try:
        status, cert = search_certificate(L, s, args.m, args.budget, args.strategy)
    except Inconclusive:
        out.write("inconclusive\n")
        return EXIT_GUARD
    out.write("none\n" if cert is None else certificate_to_text(L, s, cert))


def cmd_verify(args, out):
    fn = scenarios.SCENARIOS[args.scenario]
    kwargs = {"budget": args.budget}
    if args.scenario in ("f6m", "l7"):
        if args.m is not None:
            kwargs["m"] = args.m
        if args.k is not None:
            kwargs["k"] = args.k
        kwargs["strategy"] = args.strategy
    result = fn(**kwargs)
    out.write(result.text())
    if result.passed is None:
        return EXIT_GUARD


def cmd_dot(args, out):
    local = _local(args)
    if args.model:
        out.write(_model(args, args.model).to_dot())
    elif args.lattice:
        L = LogicSpec([resolve(n, local) for n in _names(args.lattice)])
        if args.h_complete:
            c = classifier.census(L, h_complete=True)
            logics, filled = c.logics, c.nullary()
        elif args.census:
            c = classifier.census(L)
            logics, filled = c.logics, c.nullary()
        else:
            logics = extension_lattice(L)
            filled = ()
        out.write(lattice_dot(logics, filled))
    elif args.frame:
        out.write(resolve(args.frame, local).to_dot())
    else:
        raise UsageError("dot needs --frame, --model or --lattice")


# ---------------------------------------------------------------- argument parsing


def _parser():
    p = argparse.ArgumentParser(prog="artifact", description="Finite Kripke frames, logics and unification.")
    p.add_argument("--frames-file", help="file with extra frame definitions")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, logic=False, search=False, **kw):
        q = sub.add_parser(name, **kw)
        q.set_defaults(fn=fn)
        q.add_argument("--frames-file", default=argparse.SUPPRESS, help="file with extra frame definitions")
        if logic:
            q.add_argument("--frames", action="append", help="frames generating the logic, e.g. R2,F2")
        if search:
            q.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search step budget")
            q.add_argument("--threads", type=int, default=1, help="accepted; searches run on one thread")
        return q

    q = verb("catalog", cmd_catalog, help="list catalog frames")
    q.add_argument("--show", help="print the definition of one frame")
    verb("sm", cmd_sm, logic=True, help="closure under generated subframes and p-morphic images")
    q = verb("omits", cmd_omits, logic=True, help="does the logic omit a frame")
    q.add_argument("--frame", required=True)
    q = verb("classify", cmd_classify, logic=True, help="JSON classification report")
    q.add_argument("--structural", action="store_true", help="only hereditary structural completeness")
    q = verb("census", cmd_census, logic=True, help="classify all extensions")
    q.add_argument("--h-complete", action="store_true", help="only logics of single frames")
    q = verb("force", cmd_force, help="does a model force a formula")
    q.add_argument("--model", required=True)
    q.add_argument("--formula", required=True)
    q.add_argument("--node", help="node to evaluate at (default: root)")
    q = verb("reduce", cmd_reduce, help="p-irreducible reduct of a model")
    q.add_argument("--model", required=True)
    q.add_argument("--name", default="M")
    q = verb("equiv", cmd_equiv, help="are two models equivalent")
    q.add_argument("left")
    q.add_argument("right")
    q = verb("sigma", cmd_sigma, logic=True, help="sigma-model of a model")
    q.add_argument("--subst", required=True)
    q.add_argument("--model", required=True)
    q.add_argument("--name", default="M")
    q = verb("unifies", cmd_unifies, logic=True, help="is a substitution a unifier of a formula")
    q.add_argument("--subst", required=True)
    q.add_argument("--formula", required=True)
    q = verb("projective", cmd_projective, logic=True, help="projective formula or projective unifier")
    q.add_argument("--formula", required=True)
    q.add_argument("--subst")
    q = verb("more-general", cmd_more_general, logic=True, search=True, help="is one substitution more general")
    q.add_argument("--general", required=True)
    q.add_argument("--special", required=True)
    q = verb("filter-join", cmd_filter_join, logic=True, search=True, help="common generalization of two unifiers")
    q.add_argument("left")
    q.add_argument("right")
    q.add_argument("--y", type=int, help="index of the selecting variable")
    q = verb("retraction", cmd_retraction, logic=True, search=True, help="retraction onto the sigma-models")
    q.add_argument("--subst", required=True)
    for name, fn, text in (("refute", cmd_refute, "is there no certificate at this m"),
                           ("certificate", cmd_certificate, "search for or check a certificate")):
        q = verb(name, fn, logic=True, search=True, help=text)
        q.add_argument("--subst", required=True)
        q.add_argument("--m", type=int, default=1)
        q.add_argument("--strategy", choices=["auto", "f-first", "g-first"], default="auto")
        if name == "certificate":
            q.add_argument("--check", help="certificate to check instead of searching")
    q = verb("verify", cmd_verify, search=True, help="run a scripted check")
    q.add_argument("scenario", choices=sorted(scenarios.SCENARIOS))
    q.add_argument("--m", type=int)
    q.add_argument("--k", type=int)
    q.add_argument("--strategy", choices=["auto", "f-first", "g-first"], default="auto")
    q = verb("dot", cmd_dot, help="DOT export of a frame, model or lattice")
    q.add_argument("--frame")
    q.add_argument("--model")
    q.add_argument("--lattice", action="append", help="frames generating the logic")
    q.add_argument("--h-complete", action="store_true")
    q.add_argument("--census", action="store_true", help="fill the nullary nodes")
    return p


def run(argv, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    p = _parser()
    try:
        args = p.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else EXIT_USAGE
    try:
        code = args.fn(args, out)
    except (SearchBudgetExceeded, ExplosionGuard) as e:
        err.write(f"error: {e}\n")
        return EXIT_GUARD
    except (ParseError, FrameError, ModelError, UsageError, NotFiltering, ValueError, OSError) as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    return code or 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

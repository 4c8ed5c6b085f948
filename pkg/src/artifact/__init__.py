"""Finite Kripke frames, intermediate logics of finite frames, and unification in them."""
from .formulas import Substitution, parse_formula, parse_substitution
from .frames import Frame, build_frame, catalog_lookup, parse_frame, parse_frames
from .logics import LogicSpec, logic, sm_closure
from .models import Model, build_model, parse_model

__version__ = "0.1.0"

"""Exact computer algebra for GL_{r,s}(2) x GL(1), its dual, its bicovariant
calculus and the Jordanian A_{m,k}."""

from .errors import DomainError, EvaluationError, GlrsError, ParseError, VerificationError
from .ncpoly import Generator, Localization, NCPoly, Presentation, Verdict, confluence_check, ideal_equivalence
from .scalar import Scalar, parse_scalar
from .frt import RMatrix, TPattern, qybe_check, rtt_relations
from .hopf import StructureTables, verify_antipode, verify_bialgebra
from .duality import LTable, derive_rll, functional_rmatrix
from .calculus import build_calculus, verify_calculus
from .presets import PRESETS, Preset, jordanian_checks, load_preset
from .workbench import Report, emit_report, export_spec, parse_spec, run_suite

__version__ = "0.1.0"

__all__ = [
    "DomainError", "EvaluationError", "GlrsError", "ParseError", "VerificationError",
    "Generator", "Localization", "NCPoly", "Presentation", "Verdict", "confluence_check",
    "ideal_equivalence", "Scalar", "parse_scalar", "RMatrix", "TPattern", "qybe_check",
    "rtt_relations", "StructureTables", "verify_antipode", "verify_bialgebra", "LTable",
    "derive_rll", "functional_rmatrix", "build_calculus", "verify_calculus", "PRESETS", "Preset",
    "jordanian_checks", "load_preset", "Report", "emit_report", "export_spec", "parse_spec",
    "run_suite",
]

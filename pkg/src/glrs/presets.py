"""Built-in algebras: A_{r,s}, its dual, and the Jordanian A_{m,k}.

Every preset is stored as a plain spec dictionary (the same format the
workbench reads from disk) and is built from it, so a preset and its exported
file go through one code path.  Printed reference data is kept as printed;
corrections live in the structured `notes`.
"""

from __future__ import annotations

import copy
import functools
import itertools
from dataclasses import dataclass, field
from typing import Mapping

from .duality import LTable
from .errors import DomainError, ParseError
from .frt import RMatrix, TPattern
from .hopf import ActionTable, QDet, StructureTables, automorphism_failures, smash_product
from .ncpoly import Generator, Localization, NCPoly, Presentation, confluence_check
from .parser import parse_poly
from .scalar import Scalar, parse_scalar

SPEC_VERSION = 1
BLOCK_ORDER = [[0, 0], [0, 1], [0, 2], [1, 0], [2, 0], [1, 1], [1, 2], [2, 1], [2, 2]]
PRESETS = ("ars", "ars-dual", "amk")


def default_order(n: int) -> list:
    """Block order for n = 3, row-major otherwise."""
    if n == 3:
        return [list(p) for p in BLOCK_ORDER]
    return [[i, j] for i in range(n) for j in range(n)]


def _sparse(n: int, order, entries: Mapping[tuple, str]) -> list[list[str]]:
    """Full display from {(row pair, column pair): text}, zeros elsewhere."""
    pos = {tuple(p): k for k, p in enumerate(order)}
    out = [["0"] * n for _ in range(n)]
    for (rp, cp), v in entries.items():
        out[pos[rp]][pos[cp]] = v
    return out


LAM = "(r - r^-1)"

# --------------------------------------------------------------------------
# A_{r,s}

_R_DISPLAY = _sparse(9, BLOCK_ORDER, {
    ((0, 0), (0, 0)): "r",
    ((0, 1), (0, 1)): "s^-1", ((0, 2), (0, 2)): "1",
    ((1, 0), (0, 1)): LAM, ((2, 0), (0, 2)): LAM,
    ((1, 0), (1, 0)): "s", ((2, 0), (2, 0)): "1",
    ((1, 1), (1, 1)): "r", ((1, 2), (1, 2)): "1",
    ((2, 1), (1, 2)): LAM, ((2, 1), (2, 1)): "1", ((2, 2), (2, 2)): "r",
})

ARS_SPEC = {
    "version": SPEC_VERSION,
    "name": "ars",
    "kind": "algebra",
    "params": ["r", "s"],
    "generators": [{"name": "a"}, {"name": "b"}, {"name": "c"}, {"name": "d"},
                   {"name": "f", "invertible": True}],
    "relations": [
        "a*b = r^-1*b*a", "b*d = r^-1*d*b",
        "a*c = r^-1*c*a", "c*d = r^-1*d*c",
        "b*c = c*b", "a*d - d*a = (r^-1 - r)*b*c",
        "a*f = f*a", "c*f = s*f*c",
        "b*f = s^-1*f*b", "d*f = f*d",
    ],
    "rmatrix": {"index_order": BLOCK_ORDER, "transpose": True, "labels": [0, 1, 2],
                "entries": _R_DISPLAY},
    "tpattern": [["f", "0", "0"], ["0", "a", "b"], ["0", "c", "d"]],
    "coproduct": {"a": "a@a + b@c", "b": "a@b + b@d", "c": "c@a + d@c",
                  "d": "c@b + d@d", "f": "f@f"},
    "counit": {"a": "1", "b": "0", "c": "0", "d": "1", "f": "1"},
    "localization": {"symbol": "e", "delta": "a*d - r^-1*b*c"},
    "antipode": {"a": "e*d", "b": "-e*r*b", "c": "-e*r^-1*c", "d": "e*a", "f": "f^-1"},
    "qdet": {"delta": "a*d - r^-1*b*c", "big_d": "(a*d - r^-1*b*c)*f", "witness": "b"},
    "action": {"acting": "f", "base": ["a", "b", "c", "d"],
               "images": {"a": "a", "b": "s*b", "c": "s^-1*c", "d": "d"}},
    "pq": {"levels": [1, 2], "p": "r^-1*s^N", "q": "r^-1*s^-N"},
    "checks": ["qybe", "rtt-vs-paper", "coideal", "bialgebra", "antipode", "qdet", "smash",
               "pq-realization"],
    "notes": [],
}

# --------------------------------------------------------------------------
# The dual

_R_PLUS = _sparse(9, BLOCK_ORDER, {
    ((0, 0), (0, 0)): "r",
    ((0, 1), (0, 1)): "s", ((0, 2), (0, 2)): "1",
    ((0, 1), (1, 0)): LAM, ((0, 2), (2, 0)): LAM,
    ((1, 0), (1, 0)): "s^-1", ((2, 0), (2, 0)): "1",
    ((1, 1), (1, 1)): "r", ((1, 2), (1, 2)): "1", ((1, 2), (2, 1)): LAM,
    ((2, 1), (2, 1)): "1", ((2, 2), (2, 2)): "r",
})
_R_MINUS = _sparse(9, BLOCK_ORDER, {
    ((0, 0), (0, 0)): "r^-1",
    ((0, 1), (0, 1)): "s", ((0, 2), (0, 2)): "1",
    ((1, 0), (0, 1)): "-" + LAM, ((2, 0), (0, 2)): "-" + LAM,
    ((1, 0), (1, 0)): "s^-1", ((2, 0), (2, 0)): "1",
    ((1, 1), (1, 1)): "r^-1", ((1, 2), (1, 2)): "1",
    ((2, 1), (1, 2)): "-" + LAM, ((2, 1), (2, 1)): "1", ((2, 2), (2, 2)): "r^-1",
})

_DUAL_RELATIONS = (
    ["%s*%s = %s*%s" % (y, x, x, y) for x, y in itertools.combinations(["g1", "g2", "h1", "h2", "gF", "hF"], 2)]
    + ["%s*%s = %s*%s" % (g, x, x, g) for g in ("g1", "h1", "gF", "hF") for x in "BC"]
    + ["g2*B = r*B*g2", "g2*C = r^-1*C*g2", "h2*B = s*B*h2", "h2*C = s^-1*C*h2",
       "B*C - C*B = (r - r^-1)^-1*hF^-2*(g2^2 - g2^-2)"]
)

_SIGMA_PRINTED = {
    "w0 a": "a*w0", "w0 b": "b*w0", "w0 c": "c*w0", "w0 d": "d*w0", "w0 f": "r^-2*f*w0",
    "w1 a": "r^-2*a*w1", "w1 b": "b*w1", "w1 c": "r^-2*c*w1", "w1 d": "d*w1", "w1 f": "f*w1",
    "wp a": "r^-1*a*wp", "wp b": f"r^-1*b*wp - {LAM}*r^-1*a*w1",
    "wp c": "r^-1*c*wp", "wp d": f"r^-1*d*wp - {LAM}*r^-1*c*w1", "wp f": "s*f*wp",
    "wm a": f"r^-1*a*wm - {LAM}*r^-1*b*w1", "wm b": "r^-1*b*wm",
    "wm c": f"r^-1*c*wm - {LAM}*r^-1*d*w1", "wm d": "r^-1*d*wm", "wm f": "s^-1*f*wm",
    "w2 a": f"a*w2 - {LAM}*b*wp", "w2 b": f"r^-2*b*w2 - {LAM}*r^-1*a*wm + {LAM}^2*b*w1",
    "w2 c": f"c*w2 - {LAM}*d*wp", "w2 d": f"r^-2*d*w2 - {LAM}*r^-1*c*wm + {LAM}^2*d*w1",
    "w2 f": "f*w2",
}
_CHI_NONZERO = {"chi1 a": "r^-2 - 1", "chim b": f"-{LAM}", "chip c": f"-{LAM}",
                "chi1 d": f"{LAM}^2", "chi2 d": "r^-2 - 1", "chi0 f": "r^-2 - 1"}
_CONV_NONZERO = {
    "chi1 a": "(r^-2 - 1)*a", "chip a": f"-{LAM}*b",
    "chi1 b": f"{LAM}^2*b", "chim b": f"-{LAM}*a", "chi2 b": "(r^-2 - 1)*b",
    "chi1 c": "(r^-2 - 1)*c", "chip c": f"-{LAM}*d",
    "chi1 d": f"{LAM}^2*d", "chim d": f"-{LAM}*c", "chi2 d": "(r^-2 - 1)*d",
    "chi0 f": "(r^-2 - 1)*f",
}
_CHIS = ("chi0", "chi1", "chip", "chim", "chi2")


def _full(nonzero: Mapping[str, str]) -> dict:
    return {f"{c} {x}": nonzero.get(f"{c} {x}", "0") for x in "abcdf" for c in _CHIS}


ARS_DUAL_SPEC = {
    "version": SPEC_VERSION,
    "name": "ars-dual",
    "kind": "dual",
    "params": ["r", "s"],
    "base": ARS_SPEC,
    "generators": [{"name": "C"}, {"name": "B"}]
                  + [{"name": g, "invertible": True, "weight": 0} for g in ("g1", "g2", "h1", "h2", "gF", "hF")],
    "relations": _DUAL_RELATIONS,
    "ltable": {"plus": [["J", "0", "0"], ["0", "M", "P"], ["0", "0", "N"]],
               "minus": [["J'", "0", "0"], ["0", "M'", "0"], ["0", "Q", "N'"]]},
    "ansatz": {"J": "h1*h2*gF^-2", "M": "hF^-2*g1^-1*g2^-1", "N": "g1^-1*g2",
               "J'": "h1*h2*gF^2", "M'": "hF^-2*g1*g2", "N'": "g1*g2^-1",
               "P": "-(r - r^-1)*C", "Q": "(r - r^-1)*B"},
    "coalgebra": {
        "generators": [{"name": "Xp"}, {"name": "Xm"}, {"name": "K", "invertible": True},
                       {"name": "Sphi", "invertible": True}, {"name": "H"}, {"name": "xi"},
                       {"name": "phi"}],
        "coproduct": {"Xp": "Xp@K + K^-1*Sphi@Xp", "Xm": "Xm@K^-1 + K*Sphi^-1@Xm",
                      "K": "K@K", "Sphi": "Sphi@Sphi",
                      "H": "H@1 + 1@H", "xi": "xi@1 + 1@xi", "phi": "phi@1 + 1@phi"},
        "counit": {"Xp": "0", "Xm": "0", "K": "1", "Sphi": "1", "H": "0", "xi": "0", "phi": "0"},
        "pairing": {"Xp": {"b": "1"}, "Xm": {"c": "1"},
                    "K": {"a": "r^(1/2)", "d": "r^(-1/2)", "f": "1"},
                    "Sphi": {"a": "1", "d": "1", "f": "s"},
                    "H": {"a": "1", "d": "-1"}, "xi": {"a": "1", "d": "1"}, "phi": {"f": "1"}},
        "coaction": {"Xp": "Sphi@Xp", "Xm": "Sphi^-1@Xm", "H": "1@H", "xi": "1@xi"},
        "block": [["a", "b"], ["c", "d"]],
        "expected": {"coaction_unit": [["0", "1"], ["0", "0"]],
                     "coaction_f": [["0", "s"], ["0", "0"]],
                     "action_f": [["0", "s"], ["0", "0"]]},
    },
    "reference": {
        "r_plus": _R_PLUS,
        "r_minus": _R_MINUS,
        "rll": ["M*J = J*M", "M'*J' = J'*M'", "N*J = J*N", "N'*J' = J'*N'",
                "P*J = s*J*P", "J'*Q = s*Q*J'",
                "Q*M' = r*M'*Q", "N'*Q = r*Q*N'", "N'*M' = M'*N'",
                "P*M = r*M*P", "N*P = r*P*N", "N*M = M*N",
                "N*J' = J'*N", "M*J' = J'*M", "P*J' = s*J'*P",
                "N'*J = J*N'", "M'*J = J*M'", "J*Q = s*Q*J",
                "Q*P - P*Q = -(r - r^-1)*(N'*M - N*M')"],
        "sigma": _SIGMA_PRINTED,
        "chi": _full(_CHI_NONZERO),
        "conv": _full(_CONV_NONZERO),
        "d": {"a": f"(r^-2 - 1)*a*w1 - {LAM}*b*wp",
              "b": f"{LAM}^2*b*w1 - {LAM}*a*wm + (r^-2 - 1)*b*w2",
              "c": f"(r^-2 - 1)*c*w1 - {LAM}*d*wp",
              "d": f"{LAM}^2*d*w1 - {LAM}*c*wm + (r^-2 - 1)*d*w2",
              "f": "(r^-2 - 1)*f*w0"},
        "cross_identities": ["a*f - f*a", "c*f - s*f*c", "b*f - s^-1*f*b", "d*f - f*d"],
        "xm_coproduct_printed": "Xm@K^-1 + K*Sphi^-1@Xp",
    },
    "checks": ["rll", "ansatz-substitution", "dual-coalgebra", "pairing-welldefinedness",
               "calculus-tables", "calculus-verify"],
    "notes": [
        {"id": "xm-coproduct",
         "text": "The printed coproduct of X- ends in (x) X+; the preset uses (x) X-."},
        {"id": "xm-pairing",
         "text": "The printed coproduct of X- puts K^-1 on the right leg and K on the left, the "
                 "reverse of X+.  With <X-, c> = 1 and <K, a> = r^(1/2) it pairs ac - r^-1 ca and "
                 "cd - r^-1 dc to r^(1/2) - r^(-3/2); the dual-coalgebra suite reports this."},
        {"id": "l-displays",
         "text": "The first L+- display carries prefactors c+ r, c- r^-1 and exponents shifted by 1 "
                 "against the J, M, N display; the latter is used, normalized to unital group-likes."},
        {"id": "gamma-sign",
         "text": "The rewrite of [B, C] through r^(gamma F) has the wrong sign in the exponent; "
                 "the s^-F form is canonical."},
        {"id": "x-normalization",
         "text": "The normalization relating X+- to B, C is not stated; the X+- identities are "
                 "checked on their own terms."},
        {"id": "omega2-stray-factor",
         "text": "The printed rules for omega^2 b and omega^2 d carry a factor r^-1 on the "
                 "omega^- term that tau-consistency rules out."},
    ],
}

# --------------------------------------------------------------------------
# A_{m,k}

AMK_SPEC = {
    "version": SPEC_VERSION,
    "name": "amk",
    "kind": "algebra",
    "params": ["m", "k"],
    "generators": [{"name": "c"}, {"name": "a"}, {"name": "d"}, {"name": "b"},
                   {"name": "f", "invertible": True}],
    "definitions": {"delta": "a*d - b*c + m*a*c"},
    "relations": [
        "c*d - d*c = -m*c^2", "c*b - b*c = -m*(a*c + c*d)",
        "c*a - a*c = -m*c^2", "d*a - a*d = -m*(d - a)*c",
        "d*b - b*d = -m*(d^2 - delta)", "b*a - a*b = -m*(delta - a^2)",
        "f*a - a*f = k*c*f", "f*b - b*f = k*(d*f - f*a)",
        "f*c - c*f = 0", "f*d - d*f = -k*c*f",
    ],
    "alternatives": [
        ["-m*(a*c + c*d)", "-m*(c*a + d*c)"],
        ["-m*(d - a)*c", "-m*c*(d - a)"],
        ["a*d - b*c + m*a*c", "a*d - c*b - m*c*d"],
    ],
    "action": {"acting": "f", "base": ["c", "a", "d", "b"],
               "images": {"a": "a + k*c", "b": "b + k*(d - a) - k^2*c", "c": "c", "d": "d - k*c"}},
    "checks": ["smash", "jordanian"],
    "notes": [],
}

_SPECS = {"ars": ARS_SPEC, "ars-dual": ARS_DUAL_SPEC, "amk": AMK_SPEC}


# --------------------------------------------------------------------------
# Building


@dataclass(frozen=True)
class Preset:
    name: str
    kind: str
    params: tuple
    presentation: Presentation
    relations: tuple
    spec: dict = field(repr=False, compare=False)
    structure: StructureTables | None = None
    action: ActionTable | None = None
    action_base: Presentation | None = None
    rmatrix: RMatrix | None = None
    tpattern: TPattern | None = None
    qdet: QDet | None = None
    localization: Localization | None = None
    ltable: LTable | None = None
    ansatz: dict | None = None
    definitions: dict = field(default_factory=dict)
    base: "Preset | None" = None
    notes: tuple = ()

    def poly(self, text: str, extra_letters=()) -> NCPoly:
        return parse_poly(text, self.params, list(self.presentation.letters) + list(extra_letters),
                          self.definitions)

    def note_ids(self) -> list[str]:
        return [n["id"] for n in self.notes]


def spec_for(name: str) -> dict:
    """A deep copy of a built-in spec dictionary."""
    if name not in _SPECS:
        raise DomainError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    return copy.deepcopy(_SPECS[name])


@functools.lru_cache(maxsize=None)
def load_preset(name: str) -> Preset:
    return build_preset(spec_for(name))


def _generators(spec: dict) -> list[Generator]:
    return [Generator(g["name"], bool(g.get("invertible", False)), int(g.get("weight", 1)))
            for g in spec["generators"]]


def _parse(text: str, params, letters, definitions=None, where: str = "") -> NCPoly:
    try:
        return parse_poly(text, params, letters, definitions)
    except ParseError as exc:
        raise ParseError(exc.message, exc.line, exc.column, where or exc.where) from None
    except DomainError as exc:
        raise ParseError(str(exc), where=where) from None


def _scalar(text: str, params, where: str = "") -> Scalar:
    try:
        return parse_scalar(str(text), params)
    except ParseError as exc:
        raise ParseError(exc.message, exc.line, exc.column, where or exc.where) from None


def _letters_with_inverses(gens: list[Generator]) -> list[str]:
    out = []
    for g in gens:
        out.append(g.name)
        if g.invertible:
            out.append(g.name + "^-1")
    return out


def build_preset(spec: dict) -> Preset:
    """Build a Preset from a spec dictionary (validated by the workbench)."""
    kind = spec.get("kind", "algebra")
    if kind == "dual":
        return _build_dual(spec)
    params = tuple(spec["params"])
    gens = _generators(spec)
    names = [g.name for g in gens]
    definitions: dict = {}
    for k, text in spec.get("definitions", {}).items():
        definitions[k] = _parse(text, params, names, definitions, f"definitions.{k}")
    rels = [_parse(t, params, names, definitions, f"relations[{i}]") for i, t in enumerate(spec["relations"])]
    pres = Presentation.from_relations(gens, rels, name=spec["name"])

    rmatrix = tpattern = None
    if "rmatrix" in spec:
        rm = spec["rmatrix"]
        disp = [[_scalar(x, params, f"rmatrix.entries[{i}][{j}]") for j, x in enumerate(row)]
                for i, row in enumerate(rm["entries"])]
        rmatrix = RMatrix.from_display(disp, [tuple(p) for p in rm.get("index_order", default_order(len(spec["tpattern"])))],
                                       transpose=bool(rm.get("transpose", False)),
                                       labels=tuple(rm.get("labels", range(len(spec["tpattern"])))))
    if "tpattern" in spec:
        tpattern = TPattern.of(spec["tpattern"])

    loc = qdet = None
    sym = None
    if "localization" in spec:
        lz = spec["localization"]
        sym = lz.get("symbol", "e")
        loc = Localization(pres, _parse(lz["delta"], params, names, definitions, "localization.delta"), sym)
    structure = None
    if "coproduct" in spec:
        ext = names + ([sym] if sym else [])
        cop = {x: _parse(t, params, ext, definitions, f"coproduct.{x}") for x, t in spec["coproduct"].items()}
        counit = {x: _scalar(t, params, f"counit.{x}") for x, t in spec["counit"].items()}
        anti = None
        if "antipode" in spec:
            anti = {x: _parse(t, params, _letters_with_inverses(gens) + ([sym] if sym else []),
                              definitions, f"antipode.{x}")
                    for x, t in spec["antipode"].items()}
        structure = StructureTables(cop, counit, anti)
    if "qdet" in spec:
        q = spec["qdet"]
        qdet = QDet(_parse(q["delta"], params, names, definitions, "qdet.delta"),
                    _parse(q["big_d"], params, names, definitions, "qdet.big_d"))

    action = action_base = None
    if "action" in spec:
        ac = spec["action"]
        base_names = list(ac["base"])
        images = {x: _parse(t, params, base_names, definitions, f"action.images.{x}")
                  for x, t in ac["images"].items()}
        action = ActionTable(ac["acting"], images)
        base_rels = [r for r in rels if ac["acting"] not in r.letters()]
        action_base = Presentation.from_relations([g for g in gens if g.name in base_names], base_rels,
                                                  name=f"{spec['name']}-base")
    return Preset(spec["name"], kind, params, pres, tuple(rels), spec, structure, action, action_base,
                  rmatrix, tpattern, qdet, loc, definitions=definitions,
                  notes=tuple(spec.get("notes", ())))


def _build_dual(spec: dict) -> Preset:
    base_spec = spec["base"]
    base = build_preset(base_spec) if isinstance(base_spec, dict) else load_preset(base_spec)
    params = tuple(spec["params"])
    gens = _generators(spec)
    names = _letters_with_inverses(gens)
    rels = [_parse(t, params, names, None, f"relations[{i}]") for i, t in enumerate(spec["relations"])]
    pres = Presentation.from_relations(gens, rels, name=spec["name"])
    lt = spec["ltable"]
    ltable = LTable.of(lt["plus"], lt["minus"])
    ansatz = {k: pres.nf(_parse(t, params, names, None, f"ansatz.{k}")) for k, t in spec["ansatz"].items()}
    missing = set(ltable.symbols()) - set(ansatz)
    if missing:
        raise ParseError(f"ansatz misses entries {sorted(missing)}", where="ansatz")
    return Preset(spec["name"], "dual", params, pres, tuple(rels), spec, ltable=ltable,
                  ansatz=ansatz, base=base, notes=tuple(spec.get("notes", ())))


# --------------------------------------------------------------------------
# Parsed reference data


def reference_rll(p: Preset) -> list[NCPoly]:
    syms = p.ltable.symbols()
    return [_parse(t, p.params, syms, None, f"reference.rll[{i}]")
            for i, t in enumerate(p.spec["reference"]["rll"])]


def reference_displays(p: Preset) -> dict[str, list[list[Scalar]]]:
    ref = p.spec["reference"]
    return {k: [[_scalar(x, p.params) for x in row] for row in ref[k]] for k in ("r_plus", "r_minus")}


def reference_calculus(p: Preset) -> dict:
    """Printed calculus tables keyed as in FODCTables."""
    from .calculus import FORMS
    ref = p.spec["reference"]
    letters = [x for x in p.base.presentation.letters] + list(FORMS)
    params = p.params
    out = {"sigma": {}, "chi": {}, "conv": {}, "d": {}}
    for key, t in ref["sigma"].items():
        om, x = key.split()
        out["sigma"][(om, x)] = _parse(t, params, letters, None, f"reference.sigma.{key}")
    for key, t in ref["chi"].items():
        c, x = key.split()
        out["chi"][(c, x)] = _scalar(t, params, f"reference.chi.{key}")
    for key, t in ref["conv"].items():
        c, x = key.split()
        out["conv"][(c, x)] = _parse(t, params, letters, None, f"reference.conv.{key}")
    for x, t in ref["d"].items():
        out["d"][x] = _parse(t, params, letters, None, f"reference.d.{x}")
    return out


# --------------------------------------------------------------------------
# Jordanian checks


@dataclass
class JordanianReport:
    delta_forms_equal: bool
    alternatives: list            # (printed, printed, equal?)
    automorphism_failures: list
    smash_regenerates: bool
    smash_detail: str
    confluence: list              # unresolved overlaps
    delta_invariant: bool
    degenerate_commutative: bool
    degenerate_detail: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.delta_forms_equal and all(e for *_, e in self.alternatives)
                and not self.automorphism_failures and self.smash_regenerates
                and not self.confluence and self.delta_invariant and self.degenerate_commutative)

    def failures(self) -> list[str]:
        out = []
        if not self.delta_forms_equal:
            out.append("the two forms of delta differ")
        out += [f"{a} != {b}" for a, b, e in self.alternatives if not e]
        out += [f"action violates {r}" for r in self.automorphism_failures]
        if not self.smash_regenerates:
            out.append(f"smash product: {self.smash_detail}")
        out += [f"unresolved overlap {o}" for o in self.confluence]
        if not self.delta_invariant:
            out.append("f |> delta != delta")
        if not self.degenerate_commutative:
            out += [f"m=k=0: {x}" for x in self.degenerate_detail] or ["m=k=0 is not commutative"]
        return out


def jordanian_checks(p: Preset, max_degree: int = 4) -> JordanianReport:
    if p.name != "amk" and p.spec.get("name") != "amk":
        raise DomainError("jordanian_checks applies to the amk preset")
    A = p.presentation
    params = p.params
    names = [g.name for g in A.generators]
    alt = []
    for x, y in p.spec.get("alternatives", []):
        px, py = (_parse(t, params, names, p.definitions) for t in (x, y))
        alt.append((x, y, A.equal(px, py)))
    delta_ok = alt[-1][2] if alt else True
    base = p.action_base
    act = p.action
    auto = automorphism_failures(base, act)
    target = [r for r in p.relations if act.acting in r.letters()]
    try:
        smash_product(base, act.acting, act, target=target, max_degree=max_degree)
        smash_ok, detail = True, ""
    except Exception as exc:  # VerificationError or DomainError
        smash_ok, detail = False, str(exc)
    conf = [str(o) for o in confluence_check(A, max_degree)]
    delta = p.definitions["delta"]
    inv = A.equal(act.apply(delta), delta)
    zero = {"m": Scalar.const(0), "k": Scalar.const(0)}
    degenerate = []
    for rel in p.relations:
        q = rel.map_coeffs(lambda c: c.subs(zero))
        if q and not _is_commutator(q):
            degenerate.append(str(q))
    return JordanianReport(delta_ok, alt, auto, smash_ok, detail, conf, inv, not degenerate, degenerate)


def _is_commutator(q: NCPoly) -> bool:
    """q = c*(xy - yx) for letters x != y."""
    if len(q.terms) != 2:
        return False
    (w1, c1), (w2, c2) = q.terms.items()
    return len(w1) == 2 and w2 == w1[::-1] and w1[0] != w1[1] and c1 == -c2

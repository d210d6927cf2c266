"""Spec files, suite orchestration and reports."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import DomainError, GlrsError, ParseError, VerificationError
from .ncpoly import NCPoly, Verdict, ideal_equivalence
from .presets import (PRESETS, SPEC_VERSION, Preset, build_preset, load_preset, reference_calculus,
                      reference_displays, reference_rll, spec_for, default_order, _generators, _parse,
                      _scalar)
from .scalar import Scalar

REPORT_VERSION = 1

SUITES = ("qybe", "rtt-vs-paper", "coideal", "bialgebra", "antipode", "qdet", "smash",
          "pq-realization", "rll", "ansatz-substitution", "dual-coalgebra",
          "pairing-welldefinedness", "calculus-tables", "calculus-verify", "jordanian")

STATUSES = ("pass", "fail", "inconclusive", "error")


class InputError(GlrsError):
    """Bad command-line input or spec file; maps to exit code 2."""


# ---------------------------------------------------------------------------
# Spec files


@dataclass
class SpecFile:
    data: dict
    preset: Preset

    @property
    def name(self) -> str:
        return self.data["name"]


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _locate(text: str, data: dict, where: str | None, column: int | None) -> tuple[int | None, int | None]:
    """Line/column in the file of the string addressed by a path like
    'relations[3]' or 'coproduct.a' (first occurrence of that literal)."""
    if not where:
        return None, None
    node = data
    try:
        for part in where.replace("]", "").replace("[", ".").split("."):
            if part == "":
                continue
            node = node[int(part)] if isinstance(node, list) else node[part]
    except (KeyError, IndexError, ValueError, TypeError):
        return None, None
    if not isinstance(node, str):
        return None, None
    lit = json.dumps(node, ensure_ascii=False)
    at = text.find(lit)
    if at < 0:
        return None, None
    line, col = _position(text, at + 1)
    return line, col + (column - 1 if column else 0)


def _require(cond: bool, msg: str, where: str) -> None:
    if not cond:
        raise ParseError(msg, where=where)


def validate_spec(data: dict) -> None:
    """Structural checks that do not need expression parsing."""
    _require(isinstance(data, dict), "spec must be a JSON object", "")
    _require(data.get("version") == SPEC_VERSION, f"unsupported version {data.get('version')!r}", "version")
    for key in ("name", "params", "generators", "relations"):
        _require(key in data, f"missing field {key!r}", key)
    _require(isinstance(data["params"], list) and all(isinstance(p, str) for p in data["params"]),
             "params must be a list of names", "params")
    names = []
    for i, g in enumerate(data["generators"]):
        _require(isinstance(g, dict) and isinstance(g.get("name"), str), "generator needs a name",
                 f"generators[{i}]")
        names.append(g["name"])
    _require(len(names) == len(set(names)), "duplicate generator", "generators")
    kind = data.get("kind", "algebra")
    _require(kind in ("algebra", "dual"), f"unknown kind {kind!r}", "kind")
    if kind == "dual":
        _require("base" in data and "ltable" in data and "ansatz" in data,
                 "a dual spec needs base, ltable and ansatz", "")
        if isinstance(data["base"], dict):
            validate_spec(data["base"])
        else:
            _require(data["base"] in PRESETS, f"unknown base preset {data['base']!r}", "base")
        return
    if "tpattern" in data:
        tp = data["tpattern"]
        n = len(tp)
        _require(all(isinstance(row, list) and len(row) == n for row in tp), "tpattern must be square",
                 "tpattern")
        for row in tp:
            for x in row:
                _require(x in ("0", 0, None) or x in names, f"undeclared generator {x!r} in tpattern",
                         "tpattern")
        if "rmatrix" in data:
            rm = data["rmatrix"]
            ent = rm.get("entries")
            _require(isinstance(ent, list) and len(ent) == n * n and all(len(r) == n * n for r in ent),
                     f"rmatrix must be {n * n}x{n * n}", "rmatrix.entries")
            order = [tuple(p) for p in rm.get("index_order", default_order(n))]
            _require(sorted(order) == [(i, j) for i in range(n) for j in range(n)],
                     "index_order must list every pair once", "rmatrix.index_order")
    elif "rmatrix" in data:
        raise ParseError("an rmatrix needs a tpattern", where="rmatrix")
    for table in ("coproduct", "counit", "antipode"):
        for x in data.get(table, {}):
            _require(x in names, f"undeclared generator {x!r}", f"{table}.{x}")
    if "coproduct" in data:
        _require(set(data["coproduct"]) == set(names) and set(data.get("counit", {})) == set(names),
                 "coproduct and counit must cover every generator", "coproduct")
    if "action" in data:
        ac = data["action"]
        _require(ac.get("acting") in names, "acting generator not declared", "action.acting")
        for x in ac.get("base", []):
            _require(x in names, f"undeclared generator {x!r}", "action.base")
    for s in data.get("checks", []):
        _require(s in SUITES, f"unknown suite {s!r}", "checks")


def parse_spec(text: str) -> SpecFile:
    """JSON container, scalar/NCPoly grammar inside strings.  Errors carry a
    line/column into `text`."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    try:
        validate_spec(data)
        preset = build_preset(data)
    except ParseError as exc:
        line, col = _locate(text, data, exc.where, exc.column)
        raise ParseError(exc.message, line if line else exc.line, col if col else exc.column,
                         exc.where) from None
    except (DomainError, KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"invalid spec: {exc}") from None
    return SpecFile(data, preset)


def export_spec(name_or_data) -> str:
    data = spec_for(name_or_data) if isinstance(name_or_data, str) else name_or_data
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# Reports


@dataclass
class Record:
    suite: str
    check: str
    target: str
    status: str
    detail: str = ""
    elapsed: float = 0.0


@dataclass
class Report:
    records: list = field(default_factory=list)
    max_degree: int = 4

    def summary(self) -> dict:
        out = {s: 0 for s in STATUSES}
        for r in self.records:
            out[r.status] += 1
        return out

    @property
    def exit_code(self) -> int:
        return 0 if all(r.status == "pass" for r in self.records) else 1

    def to_dict(self, *, timing: bool = True) -> dict:
        recs = []
        for r in self.records:
            d = asdict(r)
            d["elapsed"] = round(d["elapsed"], 4)
            if not timing:
                d.pop("elapsed")
            recs.append(d)
        return {"version": REPORT_VERSION, "max_degree": self.max_degree,
                "records": recs, "summary": self.summary()}


def emit_report(report: Report, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"
    if fmt != "text":
        raise InputError(f"unknown report format {fmt!r}")
    lines = []
    for r in report.records:
        line = f"{r.status.upper():<12} {r.suite}/{r.target}: {r.check}"
        if r.detail:
            line += f" -- {r.detail}"
        lines.append(line + f" [{r.elapsed:.2f}s]")
    s = report.summary()
    lines.append("summary: " + ", ".join(f"{k} {v}" for k, v in s.items()))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Suites


def _mirror_r(x):
    from .calculus import mirror
    return mirror(x)


class Context:
    """Per-target cache of derived objects shared between suites."""

    def __init__(self, preset: Preset, max_degree: int):
        self.p = preset
        self.max_degree = max_degree
        self._cache: dict = {}

    def get(self, key: str, make: Callable):
        if key not in self._cache:
            self._cache[key] = make()
        return self._cache[key]

    @property
    def algebra(self) -> Preset:
        return self.p.base if self.p.kind == "dual" else self.p

    def rl(self):
        from .duality import functional_rmatrix
        return self.get("rl", lambda: functional_rmatrix(self.algebra.rmatrix))

    def rll(self):
        from .duality import amended_r12, derive_rll
        return self.get("rll", lambda: derive_rll(amended_r12(self.rl(), self.algebra.tpattern), self.p.ltable))

    def calculus_data(self):
        from .calculus import CalculusData
        A = self.algebra
        return self.get("cdata", lambda: CalculusData(A.presentation, A.structure, self.rl(), A.tpattern,
                                                      self.p.ltable, A.qdet.delta))

    def calculus(self):
        from .calculus import build_calculus
        return self.get("calc", lambda: build_calculus(self.calculus_data()))

    def l_pairing(self):
        from .duality import Pairing, l_pairing_table, l_representations
        A = self.algebra

        def make():
            reps = l_representations(self.rl(), A.tpattern, A.qdet.delta)
            letters = list(A.presentation.letters)
            return Pairing(l_pairing_table(self.p.ltable, reps, letters), A.structure, letters)
        return self.get("lpair", make)


Check = tuple  # (check id, status, detail)


def _ok(cond: bool, detail_fail: str = "", detail_pass: str = "") -> tuple[str, str]:
    return ("pass", detail_pass) if cond else ("fail", detail_fail)


def _verdict(v: Verdict) -> str:
    return {Verdict.TRUE: "pass", Verdict.FALSE: "fail", Verdict.INCONCLUSIVE: "inconclusive"}[v]


def _short(items: Iterable, limit: int = 6) -> str:
    items = [str(x) for x in items]
    more = f" (+{len(items) - limit} more)" if len(items) > limit else ""
    return "; ".join(items[:limit]) + more


def suite_qybe(ctx: Context):
    from .frt import qybe_mismatches
    bad = qybe_mismatches(ctx.p.rmatrix)
    yield ("qybe", *_ok(not bad, f"{len(bad)} mismatched entries, first at {_short(bad[:3])}",
                        "R12 R13 R23 = R23 R13 R12 (27x27)"))


def suite_rtt(ctx: Context):
    from .frt import rtt_relations
    p = ctx.p
    order = [g.name for g in p.presentation.generators]
    rels = rtt_relations(p.rmatrix, p.tpattern, order=order)
    yield ("relation-count", *_ok(len(rels) == len(p.relations),
                                  f"{len(rels)} RTT relations against {len(p.relations)} printed",
                                  f"{len(rels)} independent relations"))
    v = ideal_equivalence(p.presentation, rels, ctx.max_degree)
    yield ("ideal-equivalence", _verdict(v), f"RTT ideal vs printed relations: {v.value}")


def suite_coideal(ctx: Context):
    from .frt import coideal_witnesses
    T = ctx.p.tpattern
    bad = coideal_witnesses(T.n, T.zeros())
    yield ("zero-pattern", *_ok(not bad, _short(bad), f"zeroed {sorted(T.zeros())}"))


def suite_bialgebra(ctx: Context):
    from .hopf import verify_bialgebra
    rep = verify_bialgebra(ctx.p.presentation, ctx.p.structure)
    fails = _short(rep.failures)
    yield ("algebra-map", *_ok(rep.algebra_map, fails))
    yield ("coassociativity", *_ok(rep.coassociative, fails))
    yield ("counit", *_ok(rep.counit, fails))


def suite_antipode(ctx: Context):
    from .hopf import antipode_antihom_failures, verify_antipode
    p = ctx.p
    ok, fails = verify_antipode(p.presentation, p.structure, p.qdet, p.localization, p.tpattern)
    yield ("antipode-identities", *_ok(ok, _short(fails), "S(t)t = tS(t) = 1 with delta^-1 adjoined"))
    bad = antipode_antihom_failures(p.presentation, p.structure, p.localization)
    yield ("antipode-kills-relations", *_ok(not bad, _short(bad)))


def suite_qdet(ctx: Context):
    from .hopf import qdet_checks
    p = ctx.p
    rep = qdet_checks(p.presentation, p.structure, p.qdet, p.spec.get("qdet", {}).get("witness", "b"))
    yield ("delta-central", *_ok(rep.central, f"fails for {rep.noncentral_letters}"))
    yield ("D-group-like", *_ok(rep.group_like, "Delta(D) != D (x) D"))
    yield ("D-not-central", *_ok(bool(rep.witness), "D commutes with the witness",
                                 f"D b - b D = {p.presentation.to_str(rep.witness)}"))


def suite_smash(ctx: Context):
    from .hopf import automorphism_failures, inverse_action, smash_product
    p = ctx.p
    act = p.action
    bad = automorphism_failures(p.action_base, act)
    yield ("automorphism", *_ok(not bad, _short(bad)))
    target = [r for r in p.relations if act.acting in r.letters()]
    try:
        sp = smash_product(p.action_base, act.acting, act, target=target, max_degree=ctx.max_degree)
        yield ("regenerates-cross-relations", "pass", f"{len(target)} cross relations")
        inv = inverse_action(sp, act.acting)
        back = [x for x, img in inv.items()
                if not p.action_base.equal(act.apply(img), NCPoly.letter(x))]
        yield ("inverse-action", *_ok(not back, f"f^-1 does not invert f on {back}"))
    except VerificationError as exc:
        yield ("regenerates-cross-relations", "fail", str(exc))


def suite_pq(ctx: Context):
    from .hopf import pq_realization
    p = ctx.p
    A = p.presentation
    r, s = Scalar.param("r"), Scalar.param("s")
    for n in p.spec.get("pq", {}).get("levels", [1, 2]):
        rep = pq_realization(A, n)
        yield (f"N={n}-lattice", *_ok(rep.lattice_ok, _short(rep.offending),
                                      f"{len(rep.relations)} relations in p, q"))
        pp, qq = r ** -1 * s ** n, r ** -1 * s ** -n
        fn = NCPoly.letter("f") ** n
        pr = {x: fn * NCPoly.letter(x) for x in "abcd"}
        ab = A.is_zero(pr["a"] * pr["b"] - (pr["b"] * pr["a"]).scale(pp))
        ac = A.is_zero(pr["a"] * pr["c"] - (pr["c"] * pr["a"]).scale(qq))
        yield (f"N={n}-a'b'=pb'a'", *_ok(ab, "a'b' - p b'a' != 0"))
        yield (f"N={n}-a'c'=qc'a'", *_ok(ac, "a'c' - q c'a' != 0"))


def suite_rll(ctx: Context):
    from .duality import compare_rll
    p = ctx.p
    rll = ctx.rll()
    yield ("derived", "pass", f"{len(rll.plus)} (L+,L+), {len(rll.minus)} (L-,L-), {len(rll.mixed)} mixed, "
                              f"{len(rll.combined)} independent")
    printed = [_mirror_r(x) for x in reference_rll(p)]
    cmp = compare_rll(rll, printed, ctx.max_degree)
    yield ("printed-contained", *_ok(not cmp.unexplained, _short(cmp.unexplained),
                                     f"all {len(printed)} printed relations follow (r -> r^-1)"))
    yield ("ideal-equivalence", _verdict(cmp.verdict),
           f"derived relations outside the printed ideal: {_short(cmp.missing, 12)}" if cmp.missing else "")
    bad = rll.swap_mismatches(p.ltable)
    yield ("swap-symmetry", *_ok(not bad, _short(bad)))


def suite_ansatz(ctx: Context):
    from .duality import substitute_ansatz
    p = ctx.p
    rll = ctx.rll()
    qp = [x for x in rll.combined if {"Q", "P", "M", "N'"} <= x.letters()]
    rep = substitute_ansatz(rll.combined, p.presentation, p.ansatz, qp[0] if qp else None)
    yield ("residues", *_ok(not rep.residues, _short(f"{k} -> {v}" for k, v in rep.residues.items()),
                            f"{rep.checked} relations reduce to 0"))
    yield ("qp-implies-bc", *_ok(rep.rll_implies_bc and bool(qp), "QP - PQ does not give the [B, C] rule"))
    yield ("bc-implies-qp", *_ok(rep.bc_implies_rll and bool(qp), "[B, C] rule does not give QP - PQ"))
    from .ncpoly import confluence_check
    bad = confluence_check(p.presentation, ctx.max_degree)
    yield ("dual-confluence", *_ok(not bad, _short(bad)))


def suite_dual_coalgebra(ctx: Context):
    from .duality import Pairing, coalgebra_pairing_table, dual_coalgebra_check
    from .frt import TPattern
    from .hopf import StructureTables
    p = ctx.p
    A = ctx.algebra
    co = p.spec["coalgebra"]
    P = p.params
    gens = _generators(co)
    names = [g.name for g in gens]
    ext = names + [g.name + "^-1" for g in gens if g.invertible]
    cop = {x: _parse(t, P, ext, None, f"coalgebra.coproduct.{x}") for x, t in co["coproduct"].items()}
    cnt = {x: _scalar(t, P) for x, t in co["counit"].items()}
    tab = StructureTables(cop, cnt)
    base = {(u, x): _scalar(v, P) for u, m in co["pairing"].items() for x, v in m.items()}
    pair = Pairing(coalgebra_pairing_table(tab, base, names), A.structure, list(A.presentation.letters))
    coact = {x: _parse(t, P, ext) for x, t in co["coaction"].items()}
    expected = {k: [[_scalar(x, P) for x in row] for row in v] for k, v in co["expected"].items()}
    rep = dual_coalgebra_check(tab, gens, pair, coact, A.action, A.relations, TPattern.of(co["block"]),
                               expected)
    yield ("coassociativity", *_ok(rep.coassociative, _short(rep.failures)))
    yield ("counit", *_ok(rep.counit, _short(rep.failures)))
    for k, (got, want) in rep.pairings.items():
        yield (f"pairing-{k}", *_ok(got == want, f"got {[[str(x) for x in r] for r in got]}",
                                    f"{[[str(x) for x in r] for r in got]}"))
    yield ("relations-annihilated", *_ok(not rep.annihilation, _short(rep.annihilation)))


def suite_pairing(ctx: Context):
    from .duality import (dual_pairing_table, pairing_display, pairing_relation_failures, Pairing,
                          dual_relation_failures, zero_entry_failures, l_values)
    from .presets import BLOCK_ORDER
    p = ctx.p
    A = ctx.algebra
    rl = ctx.rl()
    order = [tuple(x) for x in BLOCK_ORDER]
    printed = reference_displays(p)
    for sign, key in (("+", "r_plus"), ("-", "r_minus")):
        got = pairing_display(rl, sign, order)
        want = [[_mirror_r(x) for x in row] for row in printed[key]]
        bad = [(i, j) for i in range(9) for j in range(9) if got[i][j] != want[i][j]]
        yield (f"<L{sign},T>-display", *_ok(not bad, f"entries differ at {_short(bad)}",
                                            "matches the printed matrix (r -> r^-1, c = 1)"))
    bad = zero_entry_failures(rl, p.ltable, A.tpattern)
    yield ("zeroed-entries", *_ok(not bad, _short(bad)))
    pair = ctx.l_pairing()
    one = NCPoly.const(1)
    eps_bad = []
    for sign in "+-":
        m = p.ltable.matrix(sign)
        for i, row in enumerate(m):
            for j, u in enumerate(row):
                if u is not None and pair(NCPoly.letter(u), one) != (1 if i == j else 0):
                    eps_bad.append(u)
    yield ("counit-normalization", *_ok(not eps_bad, f"<L, 1> wrong for {eps_bad}"))
    syms = p.ltable.symbols()
    deg = min(3, ctx.max_degree)
    words = [()] + [(x,) for x in syms] + [(x, y) for x in syms for y in syms]
    letters = [g.name for g in A.presentation.generators]
    bad = pairing_relation_failures(pair, words, A.relations, letters, deg)
    yield ("algebra-relations", *_ok(not bad, _short(bad), f"dual words <= 2, algebra degree <= {deg}"))
    bad = dual_relation_failures(pair, ctx.rll().combined, letters, syms, deg, deg)
    yield ("dual-relations", *_ok(not bad, _short(bad), f"dual degree <= {deg}, algebra words <= {deg}"))
    # the concrete ansatz pairs like the abstract entries
    table = dual_pairing_table(p.ansatz)
    concrete = Pairing(table, A.structure, list(A.presentation.letters))
    diff = []
    for sign in "+-":
        m = p.ltable.matrix(sign)
        for a, row in enumerate(m):
            for b, u in enumerate(row):
                if u is None:
                    continue
                for x in A.tpattern.generators():
                    c, d = A.tpattern.position(x)
                    if concrete(p.ansatz[u], NCPoly.letter(x)) != l_values(rl, sign, a, b, c, d):
                        diff.append(f"<{u}, {x}>")
    yield ("ansatz-pairing", *_ok(not diff, _short(diff)))


def suite_calc_tables(ctx: Context):
    from .calculus import compare_tables
    F = ctx.calculus()
    ref = reference_calculus(ctx.p)
    # one record per printed cell
    for name in ("sigma", "chi", "conv", "d"):
        for key, printed in ref[name].items():
            cmp = compare_tables(F, {name: {key: printed}})
            label = f"{name}[{','.join(key) if isinstance(key, tuple) else key}]"
            if cmp.ok:
                yield (label, "pass", "")
            else:
                got, want = next(iter(cmp.mismatches.values()))
                yield (label, "fail", f"computed {got} (r -> r^-1), printed {want}")
    yield ("dropped-forms", *_ok(not F.dropped, _short(F.dropped)))


def suite_calc_verify(ctx: Context):
    from .calculus import relation_failures, verify_calculus
    F = ctx.calculus()
    A = ctx.algebra
    rep = verify_calculus(F, A.relations)
    for sec in rep.SECTIONS:
        bad = getattr(rep, sec)
        yield (sec.replace("_", "-"), *_ok(not bad, _short(bad)))
    cross = [A.poly(t) for t in ctx.p.spec["reference"]["cross_identities"]]
    bad = relation_failures(F, cross)
    yield ("cross-identities", *_ok(not bad, _short(bad), "d(af - fa) = d(cf - sfc) = d(bf - s^-1fb) = d(df - fd) = 0"))


def suite_jordanian(ctx: Context):
    from .presets import jordanian_checks
    rep = jordanian_checks(ctx.p, ctx.max_degree)
    yield ("delta-forms", *_ok(rep.delta_forms_equal, "ad - bc + mac != ad - cb - mcd"))
    alt = [f"{a} != {b}" for a, b, e in rep.alternatives if not e]
    yield ("printed-alternatives", *_ok(not alt, _short(alt), f"{len(rep.alternatives)} pairs agree"))
    yield ("automorphism", *_ok(not rep.automorphism_failures, _short(rep.automorphism_failures)))
    yield ("smash-regeneration", *_ok(rep.smash_regenerates, rep.smash_detail))
    yield ("confluence", *_ok(not rep.confluence, _short(rep.confluence), f"degree <= {ctx.max_degree}"))
    yield ("delta-invariant", *_ok(rep.delta_invariant, "f |> delta != delta"))
    yield ("m=k=0-commutative", *_ok(rep.degenerate_commutative, _short(rep.degenerate_detail)))


_RUNNERS = {
    "qybe": suite_qybe, "rtt-vs-paper": suite_rtt, "coideal": suite_coideal,
    "bialgebra": suite_bialgebra, "antipode": suite_antipode, "qdet": suite_qdet,
    "smash": suite_smash, "pq-realization": suite_pq, "rll": suite_rll,
    "ansatz-substitution": suite_ansatz, "dual-coalgebra": suite_dual_coalgebra,
    "pairing-welldefinedness": suite_pairing, "calculus-tables": suite_calc_tables,
    "calculus-verify": suite_calc_verify, "jordanian": suite_jordanian,
}


def applies(suite: str, p: Preset) -> bool:
    if suite in ("qybe", "rtt-vs-paper", "coideal"):
        return p.rmatrix is not None and p.tpattern is not None
    if suite in ("bialgebra",):
        return p.structure is not None
    if suite in ("antipode", "qdet"):
        return p.structure is not None and p.qdet is not None and p.localization is not None
    if suite == "smash":
        return p.action is not None
    if suite == "pq-realization":
        return "pq" in p.spec
    if suite in ("rll", "ansatz-substitution", "pairing-welldefinedness", "calculus-tables",
                 "calculus-verify"):
        return p.kind == "dual" and p.base is not None and p.base.rmatrix is not None
    if suite == "dual-coalgebra":
        return p.kind == "dual" and "coalgebra" in p.spec
    if suite == "jordanian":
        return "alternatives" in p.spec and "delta" in p.definitions
    return False


def expand_suites(names: Sequence[str]) -> list[str]:
    out = []
    for n in names:
        if n == "all":
            out += [s for s in SUITES if s not in out]
        elif n in SUITES:
            if n not in out:
                out.append(n)
        else:
            raise InputError(f"unknown suite {n!r}; choose from all, {', '.join(SUITES)}")
    return [s for s in SUITES if s in out]


def run_suite(targets, suites: Sequence[str], max_degree: int = 4) -> Report:
    """Run the named suites (in dependency order) on each target preset."""
    if max_degree < 2:
        raise InputError("max degree must be at least 2")
    if isinstance(targets, Preset):
        targets = [targets]
    targets = list(targets)
    explicit = [s for s in suites if s != "all"]
    order = expand_suites(suites)
    for s in explicit:
        if not any(applies(s, t) for t in targets):
            raise InputError(f"suite {s!r} does not apply to {', '.join(t.name for t in targets)}")
    report = Report(max_degree=max_degree)
    contexts = {id(t): Context(t, max_degree) for t in targets}
    for suite in order:
        for t in targets:
            if not applies(suite, t):
                continue
            ctx = contexts[id(t)]
            t0 = time.perf_counter()
            try:
                for check, status, detail in _RUNNERS[suite](ctx):
                    now = time.perf_counter()
                    report.records.append(Record(suite, check, t.name, status, detail, now - t0))
                    t0 = now
            except GlrsError as exc:
                report.records.append(Record(suite, "run", t.name, "error", str(exc),
                                             time.perf_counter() - t0))
    return report


def resolve_targets(presets: Sequence[str] = (), spec_path: str | None = None) -> list[Preset]:
    if spec_path is not None:
        try:
            with open(spec_path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {spec_path}: {exc.strerror}") from None
        return [parse_spec(text).preset]
    names = []
    for n in presets or ["all"]:
        for m in (PRESETS if n == "all" else [n]):
            if m not in PRESETS:
                raise InputError(f"unknown preset {m!r}; choose from {', '.join(PRESETS)}")
            if m not in names:
                names.append(m)
    return [load_preset(n) for n in names]

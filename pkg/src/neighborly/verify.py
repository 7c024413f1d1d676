"""Batch comparison of closed forms, recursions and engines over ranges of n."""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from . import formulas
from .errors import CapExceeded
from .graph import graph_square, minimal_dominating_sets, path_graph
from .ideal import check_linear_quotients, complementary_ideal, find_linear_quotients_order, minimal_primes, ni_pn2, path_ideal
from .resolution import DEFAULT_MAX_AMBIENT, SEQCM_MAX_AMBIENT, betti_hochster, is_sequentially_cm
from .simplicial import (
    facet_complex,
    fh_vectors,
    find_shelling,
    has_free_vertex_property,
    is_shelling_order,
    multiplicity_from_sr,
    paper_shelling_order,
)

PASS, FAIL, INDETERMINATE = "pass", "fail", "indeterminate"

MULTIPLICITY_NOTE = (
    "open question: the closed form n-6 is the top-face count of the facet complex; "
    "the Stanley-Reisner multiplicity (minimum dominating sets) is reported alongside, not compared"
)


@dataclass(frozen=True)
class VerifyConfig:
    max_ambient: int | None = None
    field_char: int = 0
    seed: int = 0
    timing: bool = False
    shelling_search_max_facets: int = 10
    prime_enumeration_max_n: int = 20

    @property
    def hochster_cap(self) -> int:
        return self.max_ambient if self.max_ambient is not None else DEFAULT_MAX_AMBIENT

    @property
    def seqcm_cap(self) -> int:
        return self.max_ambient if self.max_ambient is not None else SEQCM_MAX_AMBIENT

    def echo(self) -> dict[str, Any]:
        out = asdict(self)
        out["hochster_cap"] = self.hochster_cap
        out["seqcm_cap"] = self.seqcm_cap
        return out


@dataclass
class CheckResult:
    formula: Any = None
    recursion: Any = None
    engine: Any = None
    verdict: str | None = None
    note: str | None = None


@dataclass(frozen=True)
class Check:
    name: str
    min_n: int
    default_to: int
    run: Callable[[int, VerifyConfig], CheckResult]
    statement: str


def _betti(n: int, cfg: VerifyConfig):
    if n > cfg.hochster_cap:
        return None
    return betti_hochster(ni_pn2(n), cfg.field_char, cfg.hochster_cap)


def _capped(formula: Any, why: str, recursion: Any = None) -> CheckResult:
    return CheckResult(formula=formula, recursion=recursion, verdict=INDETERMINATE, note=why)


def _check_height(n, cfg):
    """Height of NI(P_n^2) is ceil(n/5); it equals the domination number."""
    gamma = minimal_dominating_sets(graph_square(path_graph(n))).gamma
    return CheckResult(
        formula=formulas.height_formula(n),
        engine={"minimal_primes": minimal_primes(ni_pn2(n)).height, "domination": gamma},
    )


def _check_pdreg(n, cfg):
    """pd and reg of S/NI(P_n^2) follow the n = 6p + d case table."""
    formula = list(formulas.pdreg_formula(n))
    recursion = list(formulas.mapping_cone_recursion(n)) if n >= 7 else None
    b = _betti(n, cfg)
    if b is None:
        return _capped(formula, f"n={n} above Hochster cap {cfg.hochster_cap}", recursion)
    return CheckResult(formula=formula, recursion=recursion, engine=[b.pd, b.reg])


def _check_depthreg(n, cfg):
    """depth(S/NI(P_n^2)) = reg(S/NI(P_n^2))."""
    formula = formulas.pdreg_formula(n).reg
    b = _betti(n, cfg)
    if b is None:
        return _capped(formula, f"n={n} above Hochster cap {cfg.hochster_cap}")
    return CheckResult(formula=formula, engine={"depth": n - b.pd, "reg": b.reg})


def _check_cm(n, cfg):
    """NI(P_n^2) is Cohen-Macaulay iff n in {1, 6}."""
    formula = formulas.cm_characterization(n)
    b = _betti(n, cfg)
    if b is None:
        return _capped(formula, f"n={n} above Hochster cap {cfg.hochster_cap}")
    return CheckResult(formula=formula, engine=b.pd == minimal_primes(ni_pn2(n)).height)


def _check_seqcm(n, cfg):
    """S/NI(P_n^2) is sequentially Cohen-Macaulay for n >= 7."""
    result = is_sequentially_cm(ni_pn2(n), cfg.field_char, cfg.seqcm_cap)
    if result is None:
        return _capped(True, f"n={n} above sequential-CM cap {cfg.seqcm_cap}")
    return CheckResult(formula=True, engine=result)


def _check_bight(n, cfg):
    """bight(NI(P_n^2)) = gamma'(P_n^2) = pd(S/NI(P_n^2))."""
    engine = {"minimal_primes": minimal_primes(ni_pn2(n)).bight}
    if n <= cfg.hochster_cap:
        engine["pd"] = _betti(n, cfg).pd
    return CheckResult(
        formula=formulas.bight_formula(n),
        recursion=minimal_dominating_sets(graph_square(path_graph(n))).gamma_prime,
        engine=engine,
    )


def _check_fvector(n, cfg):
    """f-vector of the facet complex is (1, n, 4n-14, 6n-30, 4n-23, n-6)."""
    return CheckResult(formula=list(formulas.fh_formula(n).f), engine=list(fh_vectors(facet_complex(ni_pn2(n))).f))


def _check_hvector(n, cfg):
    """h-vector of the facet complex is (1, n-5, -4, 2, 0, 0)."""
    return CheckResult(formula=list(formulas.fh_formula(n).h), engine=list(fh_vectors(facet_complex(ni_pn2(n))).h))


def _check_euler(n, cfg):
    """Euler characteristic 1 and reduced Euler characteristic 0."""
    fh = fh_vectors(facet_complex(ni_pn2(n)))
    closed = formulas.fh_formula(n)
    return CheckResult(formula=[closed.euler, closed.reduced_euler], engine=[fh.euler, fh.reduced_euler])


def _check_shelling(n, cfg):
    """(F_2, ..., F_{n-5}, F_1, F_{n-4}) shells the facet complex."""
    c = facet_complex(ni_pn2(n))
    engine = {"known_order": is_shelling_order(c, paper_shelling_order(n))}
    if len(c.facets) <= cfg.shelling_search_max_facets:
        try:
            engine["search"] = find_shelling(c) is not None
        except CapExceeded:
            pass
    return CheckResult(formula=True, engine=engine)


def _check_freevertex(n, cfg):
    """The facet complex has the free vertex property."""
    return CheckResult(formula=True, engine=has_free_vertex_property(facet_complex(ni_pn2(n))))


def _check_linquot(n, cfg):
    """The complementary ideal has linear quotients."""
    ic = complementary_ideal(facet_complex(ni_pn2(n)))
    try:
        order = find_linear_quotients_order(ic)
    except CapExceeded as exc:
        return _capped(True, str(exc))
    return CheckResult(formula=True, engine=order is not None and check_linear_quotients(ic, order))


def _check_pdpath(n, cfg):
    """pd and reg of S/I_t(P_n) for every 2 <= t <= n."""
    formula = [[t, *formulas.pdpath_formula(n, t)] for t in range(2, n + 1)]
    if n > cfg.hochster_cap:
        return _capped(formula, f"n={n} above Hochster cap {cfg.hochster_cap}")
    engine = []
    for t in range(2, n + 1):
        b = betti_hochster(path_ideal(n, t), cfg.field_char, cfg.hochster_cap)
        engine.append([t, b.pd, b.reg])
    return CheckResult(formula=formula, engine=engine)


def _check_recursion(n, cfg):
    """The two mapping cones reproduce the pd/reg case table."""
    return CheckResult(formula=list(formulas.pdreg_formula(n)), recursion=list(formulas.mapping_cone_recursion(n)))


def _check_multiplicity(n, cfg):
    """Sum of the h-vector is n - 6; the Stanley-Reisner multiplicity is reported beside it."""
    top = sum(fh_vectors(facet_complex(ni_pn2(n))).h)
    closed = formulas.fh_formula(n).top_faces
    engine = {"top_face_count": top}
    if n <= cfg.prime_enumeration_max_n:
        engine["sr_top_facets"] = multiplicity_from_sr(ni_pn2(n))
    return CheckResult(
        formula=closed,
        engine=engine,
        verdict=PASS if top == closed else FAIL,
        note=MULTIPLICITY_NOTE,
    )


CHECKS: dict[str, Check] = {
    c.name: c
    for c in [
        Check("height", 3, 20, _check_height, "height = ceil(n/5) = gamma"),
        Check("pdreg", 3, 14, _check_pdreg, "pd/reg case table"),
        Check("depthreg", 3, 14, _check_depthreg, "depth = reg"),
        Check("cm", 3, 14, _check_cm, "CM iff n in {1,6}"),
        Check("seqcm", 7, 10, _check_seqcm, "sequentially CM"),
        Check("bight", 7, 14, _check_bight, "bight = gamma' = pd"),
        Check("fvector", 7, 40, _check_fvector, "f-vector"),
        Check("hvector", 7, 40, _check_hvector, "h-vector"),
        Check("euler", 7, 40, _check_euler, "Euler characteristics"),
        Check("shelling", 7, 40, _check_shelling, "shelling order"),
        Check("freevertex", 7, 40, _check_freevertex, "free vertex property"),
        Check("linquot", 7, 12, _check_linquot, "linear quotients"),
        Check("pdpath", 3, 11, _check_pdpath, "path ideal pd/reg"),
        Check("recursion", 7, 500, _check_recursion, "mapping cone recursion"),
        Check("multiplicity", 7, 40, _check_multiplicity, "sum of h-vector"),
    ]
}


def _flatten(value: Any) -> list[Any]:
    if isinstance(value, dict):
        return list(value.values())
    return [value]


def _verdict(res: CheckResult) -> str:
    if res.verdict is not None:
        return res.verdict
    present = [v for v in (res.formula, res.recursion) if v is not None]
    if res.engine is not None:
        present.extend(_flatten(res.engine))
    if not present:
        return INDETERMINATE
    return PASS if all(v == present[0] for v in present) else FAIL


@dataclass
class VerificationReport:
    runs: list[dict[str, Any]] = field(default_factory=list)
    config: dict[str, Any] = field(default_factory=dict)

    @property
    def summary(self) -> dict[str, int]:
        counts = {PASS: 0, FAIL: 0, INDETERMINATE: 0}
        for r in self.runs:
            counts[r["verdict"]] += 1
        return counts

    def to_json(self) -> dict[str, Any]:
        return {"runs": self.runs, "summary": self.summary, "config": self.config}

    def dumps(self, fmt: str = "json") -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["n", "check", "formula", "recursion", "engine", "verdict", "elapsed_ms"])
            for r in self.runs:
                writer.writerow([r["n"], r["check"], *(_cell(r[k]) for k in ("formula", "recursion", "engine")),
                                 r["verdict"], "" if r["elapsed_ms"] is None else r["elapsed_ms"]])
            return buf.getvalue()
        if fmt == "markdown":
            lines = ["| n | check | formula | recursion | engine | verdict |", "|---|---|---|---|---|---|"]
            for r in self.runs:
                cells = [str(r["n"]), r["check"], *(_cell(r[k]) for k in ("formula", "recursion", "engine")), r["verdict"]]
                lines.append("| " + " | ".join(cells) + " |")
            s = self.summary
            lines.append("")
            lines.append(f"pass {s[PASS]}, fail {s[FAIL]}, indeterminate {s[INDETERMINATE]}")
            return "\n".join(lines) + "\n"
        raise ValueError(f"unknown format {fmt!r}")


def _cell(value: Any) -> str:
    if value is None:
        return ""
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def resolve_checks(names: list[str] | None) -> list[str]:
    if not names:
        return list(CHECKS)
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown check(s): {', '.join(unknown)}; known: {', '.join(CHECKS)}")
    return [c for c in CHECKS if c in names]


def planned_pairs(n_from: int | None, n_to: int | None, checks: list[str]) -> list[tuple[int, str]]:
    """(n, check) pairs to run: the range clipped to where each statement applies.

    Without an explicit range each check uses its own default tier.
    """
    if n_from is not None and n_from < 3:
        raise ValueError(f"--from must be >= 3, got {n_from}")
    if n_from is not None and n_to is not None and n_to < n_from:
        raise ValueError(f"empty range {n_from}..{n_to}")
    pairs = []
    for name in checks:
        check = CHECKS[name]
        lo = max(check.min_n, n_from if n_from is not None else 3)
        hi = n_to if n_to is not None else check.default_to
        pairs.extend((n, name) for n in range(lo, hi + 1))
    pairs.sort(key=lambda p: (p[0], list(CHECKS).index(p[1])))
    return pairs


def verify(
    n_from: int | None = None,
    n_to: int | None = None,
    checks: list[str] | None = None,
    config: VerifyConfig | None = None,
) -> VerificationReport:
    config = config or VerifyConfig()
    if config.max_ambient is not None and config.max_ambient < 1:
        raise ValueError("max ambient must be positive")
    names = resolve_checks(checks)
    report = VerificationReport(config={**config.echo(), "from": n_from, "to": n_to, "checks": names})
    for n, name in planned_pairs(n_from, n_to, names):
        start = time.perf_counter()
        try:
            res = CHECKS[name].run(n, config)
            verdict = _verdict(res)
        except CapExceeded as exc:
            res = CheckResult(note=str(exc))
            verdict = INDETERMINATE
        elapsed = round((time.perf_counter() - start) * 1000) if config.timing else None
        row = {
            "n": n,
            "check": name,
            "formula": res.formula,
            "recursion": res.recursion,
            "engine": res.engine,
            "verdict": verdict,
            "elapsed_ms": elapsed,
        }
        if res.note:
            row["note"] = res.note
        report.runs.append(row)
    return report

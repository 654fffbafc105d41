"""Invariant reports and formula-versus-oracle sweeps behind the CLI."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable, Iterator

from .code import GeneratingCode, enumerate_codes, format_code, parse_code
from .errors import BudgetExceeded
from .graph import build_chain, build_threshold, diameter
from .labeling import ChainPartition, lambda_chain, lambda_threshold
from .metric import beta_bounds, beta_chain, beta_threshold, general_bounds
from .oracle import (
    DEFAULT_BUDGET,
    OracleBudget,
    exact_lambda,
    exact_metric_dimension,
    exact_tau,
    exact_tau_r,
)
from .threshold_dim import tau_code, tau_r_code

__all__ = [
    "INVARIANTS",
    "FAMILIES",
    "InvariantValue",
    "Discrepancy",
    "InvariantReport",
    "build_report",
    "sweep",
    "SweepRow",
    "SweepSummary",
]

INVARIANTS = ("beta", "tau", "tau_r", "lambda")
FAMILIES = ("threshold", "chain")
ORACLE_MODES = ("off", "try", "require")


@dataclass
class InvariantValue:
    """One invariant. ``applicable`` refers to the closed form."""

    value: int | None = None
    source: str | None = None  # formula | oracle | both
    applicable: bool = False
    formula: int | None = None
    oracle: int | None = None
    note: str | None = None

    def settle(self) -> "InvariantValue":
        if self.formula is not None and self.oracle is not None:
            self.source, self.value = "both", self.formula
        elif self.formula is not None:
            self.source, self.value = "formula", self.formula
        elif self.oracle is not None:
            self.source, self.value = "oracle", self.oracle
        return self


@dataclass
class Discrepancy:
    invariant: str
    formula_value: int
    oracle_value: int


@dataclass
class InvariantReport:
    code: str
    family: str
    n: int
    m: int
    beta: InvariantValue
    tau: InvariantValue
    tau_r: InvariantValue
    lambda_: InvariantValue
    discrepancies: list[Discrepancy] = field(default_factory=list)
    witness: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["lambda"] = d.pop("lambda_")
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "InvariantReport":
        d = dict(d)
        vals = {k: InvariantValue(**d.pop(k)) for k in INVARIANTS}
        vals["lambda_"] = vals.pop("lambda")
        disc = [Discrepancy(**x) for x in d.pop("discrepancies")]
        return cls(**d, **vals, discrepancies=disc)

    @classmethod
    def from_json(cls, text: str) -> "InvariantReport":
        return cls.from_dict(json.loads(text))


def _coerce(code: GeneratingCode | str) -> GeneratingCode:
    return code if isinstance(code, GeneratingCode) else parse_code(code)


def _build(code: GeneratingCode, family: str):
    if family == "threshold":
        return build_threshold(code)
    if family == "chain":
        return build_chain(code)
    raise ValueError(f"unknown family {family!r}")


def _formula_values(code: GeneratingCode, family: str, literal: bool):
    out = {k: InvariantValue() for k in INVARIANTS}
    witness: dict[str, Any] = {}
    if family == "threshold":
        out["beta"] = InvariantValue(applicable=True, formula=beta_threshold(code).value)
        tau = tau_code(code)
        out["tau"] = InvariantValue(applicable=tau.applicable, formula=tau.value)
        if not tau.applicable:
            out["tau"].note = "; ".join(tau.condition_trace)
        taur = tau_r_code(code)
        out["tau_r"] = InvariantValue(applicable=True, formula=taur.value)
        witness["rewritten_code"] = format_code(taur.rewritten_code)
        out["lambda"] = InvariantValue(applicable=True, formula=lambda_threshold(code).span)
    else:
        out["beta"] = InvariantValue(applicable=True, formula=beta_chain(code, literal=literal).value)
        out["tau"].note = out["tau_r"].note = "closed form covers threshold graphs only"
        res = lambda_chain(ChainPartition.from_code(code))
        out["lambda"] = InvariantValue(applicable=True, formula=res.span)
        witness["labeling"] = {"colors": list(res.labeling.colors), "span": res.labeling.span,
                               "holes": list(res.labeling.holes)}
    return out, witness


def _run_oracle(name: str, g, budget: OracleBudget, witness: dict[str, Any]) -> int:
    if name == "beta":
        val, basis = exact_metric_dimension(g, budget)
        witness["basis"] = list(basis)
        return val
    if name == "lambda":
        val, lab = exact_lambda(g, budget)
        witness["oracle_labeling"] = list(lab.colors)
        return val
    if name == "tau":
        return exact_tau(g, budget)
    return exact_tau_r(g, budget)


def build_report(
    code: GeneratingCode | str,
    family: str = "threshold",
    oracle: str = "off",
    budget: OracleBudget = DEFAULT_BUDGET,
    *,
    invariants: Iterable[str] = INVARIANTS,
    literal: bool = False,
) -> InvariantReport:
    """Formula values for ``code`` plus, depending on ``oracle``, exact values.

    With ``oracle="try"`` a search over budget is skipped and noted; with
    ``"require"`` it raises :class:`BudgetExceeded`.
    """
    if oracle not in ORACLE_MODES:
        raise ValueError(f"oracle mode must be one of {ORACLE_MODES}")
    code = _coerce(code)
    g = _build(code, family)
    vals, witness = _formula_values(code, family, literal)
    wanted = set(invariants)
    if oracle != "off":
        for name in INVARIANTS:
            if name not in wanted:
                continue
            try:
                vals[name].oracle = _run_oracle(name, g, budget, witness)
            except BudgetExceeded as exc:
                if oracle == "require":
                    raise
                vals[name].note = f"oracle skipped: {exc}"
    disc = []
    for name in INVARIANTS:
        v = vals[name].settle()
        if v.formula is not None and v.oracle is not None and v.formula != v.oracle:
            disc.append(Discrepancy(name, v.formula, v.oracle))
    return InvariantReport(
        code=format_code(code),
        family=family,
        n=g.n,
        m=g.m,
        beta=vals["beta"],
        tau=vals["tau"],
        tau_r=vals["tau_r"],
        lambda_=vals["lambda"],
        discrepancies=disc,
        witness=witness,
    )


@dataclass
class SweepRow:
    code: str
    family: str
    n: int
    invariant: str
    formula: int | None
    oracle: int | None
    agree: bool | None
    note: str | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


@dataclass
class SweepSummary:
    codes_tested: int = 0
    rows: int = 0
    agreements: int = 0
    skipped: int = 0
    discrepancies: list[dict[str, Any]] = field(default_factory=list)
    theorem_covered_discrepancies: list[dict[str, Any]] = field(default_factory=list)
    bounds_violations: list[dict[str, Any]] = field(default_factory=list)
    chain_relation_violations: list[dict[str, Any]] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps({"summary": asdict(self)}, sort_keys=True)


def _theorem_covered(code: GeneratingCode) -> bool:
    return all(s > 1 and t > 1 for s, t in code.strings) or all(s == 1 for s in code.s)


def _formula(code: GeneratingCode, family: str, invariant: str, literal: bool) -> int | None:
    if invariant == "beta":
        return (beta_threshold(code) if family == "threshold" else beta_chain(code, literal=literal)).value
    if invariant == "lambda":
        if family == "threshold":
            return lambda_threshold(code).span
        return lambda_chain(ChainPartition.from_code(code)).span
    if family != "threshold":
        return None
    if invariant == "tau":
        return tau_code(code).value
    return tau_r_code(code).value


def _check_budget(max_n: int, invariants: Iterable[str], budget: OracleBudget) -> None:
    for name in invariants:
        cap = budget.max_n_lambda if name == "lambda" else budget.max_n_beta
        if max_n > cap:
            raise BudgetExceeded(f"max_n={max_n} exceeds the {name} oracle budget {cap}")


def sweep(
    max_n: int,
    families: Iterable[str] = ("threshold",),
    invariants: Iterable[str] = ("beta",),
    budget: OracleBudget = DEFAULT_BUDGET,
    *,
    literal: bool = False,
    summary: SweepSummary | None = None,
) -> Iterator[SweepRow]:
    """Yield one row per (code, family, invariant) in canonical code order.

    The running totals land in ``summary`` (pass one in to read them after
    the generator is exhausted). Disagreements are reported, never raised.
    """
    families = tuple(families)
    invariants = tuple(invariants)
    _check_budget(max_n, invariants, budget)
    summ = summary if summary is not None else SweepSummary()
    for code in enumerate_codes(max_n):
        summ.codes_tested += 1
        text = format_code(code)
        oracle_beta: dict[str, int] = {}
        for family in families:
            g = _build(code, family)
            for inv in invariants:
                f = _formula(code, family, inv, literal)
                note = None
                try:
                    o = _run_oracle(inv, g, budget, {})
                except BudgetExceeded as exc:
                    o, note = None, f"oracle skipped: {exc}"
                    summ.skipped += 1
                agree = None if f is None or o is None else f == o
                row = SweepRow(text, family, code.n, inv, f, o, agree, note)
                summ.rows += 1
                if agree:
                    summ.agreements += 1
                elif agree is False:
                    entry = {"code": text, "family": family, "invariant": inv, "formula": f, "oracle": o}
                    summ.discrepancies.append(entry)
                    if inv == "beta" and family == "threshold" and _theorem_covered(code):
                        summ.theorem_covered_discrepancies.append(entry)
                if inv == "beta" and o is not None:
                    oracle_beta[family] = o
                    _audit_bounds(code, family, g, o, summ)
                yield row
        if "chain" in families and "beta" in invariants:
            tb = oracle_beta.get("threshold")
            if tb is None:
                tb = exact_metric_dimension(build_threshold(code), budget)[0]
            cb = oracle_beta.get("chain")
            if cb is not None and cb not in (tb - 1, tb):
                summ.chain_relation_violations.append({"code": text, "threshold": tb, "chain": cb})


def _audit_bounds(code: GeneratingCode, family: str, g, beta: int, summ: SweepSummary) -> None:
    lo, hi = general_bounds(g.n, diameter(g))
    if not lo <= beta <= hi:
        summ.bounds_violations.append(
            {"code": format_code(code), "family": family, "bound": "general", "range": [lo, hi], "oracle": beta}
        )
    if family == "threshold":
        b = beta_bounds(code)
        if not b.contains(beta):
            summ.bounds_violations.append(
                {"code": format_code(code), "family": family, "bound": "code",
                 "range": [b.lower, b.upper], "oracle": beta}
            )

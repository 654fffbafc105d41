"""``codegraph`` command line.

Exit codes: 0 on success, 2 on a code that does not parse (or bad usage),
3 when an oracle is required but over budget.
"""

from __future__ import annotations

import csv
import json
import sys
from dataclasses import asdict

import click

from .code import parse_code
from .errors import BudgetExceeded, CodeError, DisconnectedGraph
from .graph import build_chain, build_threshold, read_edge_list, to_dot, to_edge_list
from .oracle import OracleBudget, exact_lambda, exact_metric_dimension, exact_tau, exact_tau_r
from .report import FAMILIES, INVARIANTS, SweepSummary, build_report, sweep

EXIT_PARSE = 2
EXIT_BUDGET = 3

_family = click.option("--family", type=click.Choice(FAMILIES), default="threshold", show_default=True)


def _budget_options(f):
    f = click.option("--budget-tau", "budget_tau", type=click.IntRange(min=1), default=14,
                     show_default=True, help="Max non-edges for supergraph searches.")(f)
    f = click.option("--budget-lambda", "budget_lambda", type=click.IntRange(min=1), default=12,
                     show_default=True, help="Max vertices for the L(2,1) search.")(f)
    f = click.option("--budget-beta", "budget_beta", type=click.IntRange(min=1), default=15,
                     show_default=True, help="Max vertices for resolving-set searches.")(f)
    return f


def _parse(text: str):
    try:
        return parse_code(text)
    except CodeError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)


@click.group()
def main() -> None:
    """Invariants of threshold and chain graphs given by generating codes."""


@main.command()
@click.argument("code")
@_family
@click.option("--oracle", type=click.Choice(["off", "try", "require"]), default="off", show_default=True)
@_budget_options
@click.option("--literal", is_flag=True, help="Chain metric dimension without the (0 1)-seed refinements.")
def invariants(code, family, oracle, budget_beta, budget_lambda, budget_tau, literal):
    """Compute every invariant of CODE and print one JSON report."""
    parsed = _parse(code)
    budget = OracleBudget(budget_beta, budget_lambda, budget_tau)
    try:
        rep = build_report(parsed, family, oracle, budget, literal=literal)
    except BudgetExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    click.echo(rep.to_json())


@main.command("sweep")
@click.option("--max-n", type=click.IntRange(min=2), required=True)
@click.option("--family", type=click.Choice(FAMILIES + ("both",)), default="threshold", show_default=True)
@click.option("--invariant", "invariant", type=click.Choice(INVARIANTS + ("all",)), multiple=True,
              help="Repeatable; defaults to beta.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@_budget_options
@click.option("--literal", is_flag=True, help="Chain metric dimension without the (0 1)-seed refinements.")
def sweep_cmd(max_n, family, invariant, fmt, budget_beta, budget_lambda, budget_tau, literal):
    """Compare formulas with oracles on every code of length <= MAX_N.

    Prints one line per code and invariant, then a summary. Disagreements
    are reported, not treated as failures.
    """
    invs = INVARIANTS if "all" in invariant else (tuple(dict.fromkeys(invariant)) or ("beta",))
    fams = FAMILIES if family == "both" else (family,)
    budget = OracleBudget(budget_beta, budget_lambda, budget_tau)
    summary = SweepSummary()
    rows = sweep(max_n, fams, invs, budget, literal=literal, summary=summary)
    writer = None
    try:
        for row in rows:
            if fmt == "json":
                click.echo(row.to_json())
                continue
            if writer is None:
                writer = csv.DictWriter(sys.stdout, fieldnames=list(asdict(row)), lineterminator="\n")
                writer.writeheader()
            writer.writerow(asdict(row))
    except BudgetExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    sys.stdout.flush()
    if fmt == "json":
        click.echo(summary.to_json())
    else:
        click.echo(summary.to_json(), err=True)


@main.command("oracle")
@click.argument("edgefile", type=click.File("r"))
@click.option("--invariant", "invariant", type=click.Choice(INVARIANTS), multiple=True,
              help="Repeatable; defaults to beta and lambda.")
@_budget_options
def oracle_cmd(edgefile, invariant, budget_beta, budget_lambda, budget_tau):
    """Exact invariants of an arbitrary graph in edge-list format."""
    try:
        g = read_edge_list(edgefile.read())
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    budget = OracleBudget(budget_beta, budget_lambda, budget_tau)
    out = {"n": g.n, "m": g.m}
    try:
        for name in invariant or ("beta", "lambda"):
            if name == "beta":
                out["beta"], basis = exact_metric_dimension(g, budget)
                out["basis"] = list(basis)
            elif name == "lambda":
                out["lambda"], lab = exact_lambda(g, budget)
                out["labeling"] = list(lab.colors)
            elif name == "tau":
                out["tau"] = exact_tau(g, budget)
            else:
                out["tau_r"] = exact_tau_r(g, budget)
    except BudgetExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    except DisconnectedGraph as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(json.dumps(out, sort_keys=True))


@main.command()
@click.argument("code")
@_family
@click.option("--to", "fmt", type=click.Choice(["edgelist", "dot"]), default="edgelist", show_default=True)
def export(code, family, fmt):
    """Write the graph of CODE as an edge list or DOT text."""
    parsed = _parse(code)
    g = build_threshold(parsed) if family == "threshold" else build_chain(parsed)
    click.echo(to_edge_list(g) if fmt == "edgelist" else to_dot(g), nl=False)


if __name__ == "__main__":  # pragma: no cover
    main()

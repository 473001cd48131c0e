"""Command-line front end.

    ogcoh tables --variety K --format csv
    ogcoh betti --variety M --rules cor1
    ogcoh verify --variety all
    ogcoh facts
    ogcoh local-model

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import sys

import click

from . import data
from .acceptance import run_acceptance
from .bounds import RULESETS
from .report import BUILDERS, FORMATS, csv_text, dumps, render
from .towers import local_model_suite

VARIETY_CHOICES = list(data.VARIETIES) + ["all"]

variety_option = click.option("--variety", "-v", type=click.Choice(VARIETY_CHOICES), default="all",
                              show_default=True, help="M (dim 10), K (dim 6) or both.")
format_option = click.option("--format", "fmt", type=click.Choice(FORMATS), default="md",
                             show_default=True, help="Output format.")


def _varieties(variety: str) -> list[str]:
    return list(data.VARIETIES) if variety == "all" else [variety]


def _emit(kind: str, variety: str, fmt: str, **kw):
    docs = [BUILDERS[kind](v, **kw) for v in _varieties(variety)]
    click.echo(render(docs, fmt, kind), nl=False)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Exact Betti numbers, bounds and Euler characteristics of M and K."""


@main.command()
@variety_option
@format_option
def tables(variety, fmt):
    """Nine-row Betti table of strata, blow-ups and resolution."""
    _emit("tables", variety, fmt)


@main.command()
@variety_option
@format_option
@click.option("--rules", default=None, help="Rule set: cor1, cor2 (M) or cor1, prop2 (K).")
def betti(variety, fmt, rules):
    """Betti numbers as exact values or intervals, with the rules behind them."""
    for v in _varieties(variety):
        if rules is not None and rules not in RULESETS[v]:
            raise click.BadParameter(f"{rules!r} is not a rule set for {v}; choose from "
                                     f"{sorted(RULESETS[v])}", param_hint="--rules")
    _emit("betti", variety, fmt, ruleset=rules)


@main.command()
@variety_option
@format_option
def euler(variety, fmt):
    """Euler characteristic from the alternating E1 sum."""
    _emit("euler", variety, fmt)


@main.command()
@variety_option
@format_option
def facts(variety, fmt):
    """Imported and engine-verified facts with citations."""
    _emit("facts", variety, fmt)


@main.command("local-model")
@format_option
def local_model(fmt):
    """Check the local ring presentations and the comparison isomorphism."""
    rep = local_model_suite()
    if fmt == "json":
        click.echo(dumps({"ok": rep.ok, "checks": [
            {"name": c.name, "ok": c.ok, "detail": c.detail} for c in rep.checks]}), nl=False)
    elif fmt == "csv":
        rows = [["check", "ok", "detail"]] + [[c.name, "yes" if c.ok else "no", c.detail] for c in rep.checks]
        click.echo(csv_text(rows), nl=False)
    else:
        for c in rep.checks:
            click.echo(f"{'OK  ' if c.ok else 'FAIL'} {c.name}" + (f"  [{c.detail}]" if c.detail else ""))
    sys.exit(0 if rep.ok else 1)


@main.command()
@variety_option
def verify(variety):
    """Run the acceptance suite; exit 1 if any criterion fails."""
    results = run_acceptance(_varieties(variety))
    for r in results:
        click.echo(r.line)
    failed = [r for r in results if not r.ok]
    if failed:
        click.echo(f"{len(failed)} of {len(results)} checks failed: "
                   + ", ".join(f"[{r.number}]" for r in failed), err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()

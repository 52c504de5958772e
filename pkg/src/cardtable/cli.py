"""Batch command-line interface.

Each subcommand wraps one library operation, reads the documented JSON
schemas, and writes machine-readable JSON to stdout (``--format table`` or
``--pretty`` for human tables).  Exit codes: 0 success, 1 validation error,
2 infeasible.  The solver's card ceiling can be overridden with the
CARDTABLE_MAX_CARDS environment variable.
"""

from __future__ import annotations

import json
import os
import sys

import click

from . import __version__, solver, table as table_mod
from .errors import CardTableError, EmptyPolytopeError, InfeasibleError
from .project import load_project
from .schema import dumps, load_table, table_to_dict
from .scales import build_interval_scale, interpolate
from .table import Interval, Missing, check_consistency, export_bars, export_graph


def _apply_env_bound():
    bound = os.environ.get("CARDTABLE_MAX_CARDS")
    if bound:
        table_mod.MAX_CARDS = int(bound)


def _emit(doc, fmt: str, renderer=None):
    if fmt == "json" or renderer is None:
        click.echo(dumps(doc), nl=False)
    else:
        click.echo(renderer(doc))


def _table_lines(doc_table: dict) -> str:
    t = doc_table["levels"]["count"]
    labels = doc_table["levels"]["labels"] or [f"l{k}" for k in range(1, t + 1)]
    grid = [["" for _ in range(t)] for _ in range(t)]
    for cell in doc_table["cells"]:
        p, q = cell["p"], cell["q"]
        if cell["kind"] == "exact":
            grid[p - 1][q - 1] = f"{cell['cards']:g}"
        elif cell["kind"] == "interval":
            grid[p - 1][q - 1] = f"[{cell['lo']:g},{cell['hi']:g}]"
        else:
            grid[p - 1][q - 1] = "?"
    width = max(6, max((len(x) for row in grid for x in row), default=1),
                max(len(x) for x in labels))
    header = " " * (width + 2) + "  ".join(x.rjust(width) for x in labels)
    lines = [header]
    for p in range(t):
        row = "  ".join((grid[p][q] if q > p else ("#" if q == p else "")).rjust(width)
                        for q in range(t))
        lines.append(labels[p].rjust(width) + "  " + row)
    return "\n".join(lines)


format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "table"]), default="json",
    help="Machine-readable JSON (default) or human tables.",
)
pretty_option = click.option("--pretty", is_flag=True, help="Shorthand for --format table.")


def _fmt(fmt: str, pretty: bool) -> str:
    return "table" if pretty else fmt


@click.group()
@click.version_option(__version__)
def main():
    """Deck-of-cards comparison tables: check, repair, scale, aggregate."""
    _apply_env_bound()


def _run(fn):
    try:
        fn()
    except (InfeasibleError, EmptyPolytopeError) as exc:
        click.echo(f"infeasible: {exc}", err=True)
        sys.exit(2)
    except (CardTableError, ValueError, OSError, json.JSONDecodeError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


@main.command()
@click.argument("table_file", type=click.Path(exists=True))
@format_option
@pretty_option
def check(table_file, fmt, pretty):
    """Report every violated consistency triple of a precise table."""

    def go():
        tbl = load_table(table_file)
        violations = check_consistency(tbl)
        doc = {
            "consistent": not violations,
            "violations": [
                {"p": v.p, "k": v.k, "q": v.q, "lhs": v.lhs, "rhs": v.rhs} for v in violations
            ],
        }
        _emit(doc, _fmt(fmt, pretty), renderer=lambda d: "consistent" if d["consistent"] else
              "\n".join(f"e{v['p']}{v['k']} + e{v['k']}{v['q']} + 1 = {v['lhs']:g} "
                        f"!= e{v['p']}{v['q']} = {v['rhs']:g}" for v in d["violations"]))

    _run(go)


@main.command()
@click.argument("table_file", type=click.Path(exists=True))
@click.option("--enumerate", "enumerate_all", is_flag=True, help="List every minimal repair set.")
@format_option
@pretty_option
def repair(table_file, enumerate_all, fmt, pretty):
    """Minimal consistency repair of a precise table."""

    def go():
        tbl = load_table(table_file)
        if tbl.is_exact():
            solutions = solver.enumerate_repairs(tbl) if enumerate_all else [solver.repair_min_changes(tbl)]
            doc = {"repairs": [s.to_dict() for s in solutions]}
        else:
            has_missing = any(isinstance(c, Missing) for c in tbl.cells)
            has_interval = any(isinstance(c, Interval) for c in tbl.cells)
            if has_interval:
                result = (solver.mixed_repair if has_missing else solver.interval_repair)(tbl)
                doc = {"repairs": [{
                    "z": result.z,
                    "modified": sorted(list(pq) for pq in result.modified),
                    "new_bounds": {f"{p},{q}": list(b) for (p, q), b in sorted(result.new_bounds.items())},
                    "table": table_to_dict(result.witness),
                }]}
            else:
                result = solver.complete_missing(tbl)
                doc = {"repairs": [{
                    "z": result.z,
                    "modified": sorted(list(pq) for pq in result.flagged),
                    "deltas": {f"{p},{q}": v for (p, q), v in sorted(result.deltas.items())},
                    "table": table_to_dict(result.completion),
                }]}

        def render(d):
            blocks = []
            for i, s in enumerate(d["repairs"]):
                cells = ", ".join(f"({p},{q})" for p, q in s["modified"]) or "none"
                blocks.append(f"repair #{i}: z={s['z']} cells: {cells}\n" + _table_lines(s["table"]))
            return "\n\n".join(blocks)

        _emit(doc, _fmt(fmt, pretty), renderer=render)

    _run(go)


@main.command()
@click.argument("table_file", type=click.Path(exists=True))
@click.option("--enumerate", "enumerate_all", is_flag=True, help="List every compatible completion.")
@click.option("--bound", type=int, default=None, help="Card ceiling when the family is infinite.")
@format_option
@pretty_option
def complete(table_file, enumerate_all, bound, fmt, pretty):
    """Fill the missing judgments of a partially specified table."""

    def go():
        tbl = load_table(table_file)
        if enumerate_all:
            result = solver.enumerate_completions(tbl, domain_bound=bound or table_mod.MAX_CARDS)
            doc = {
                "total": len(result.tables),
                "complete": result.complete,
                "tables": [table_to_dict(x) for x in result.tables],
            }
        else:
            result = solver.complete_missing(tbl)
            doc = {
                "z": result.z,
                "flagged": sorted(list(pq) for pq in result.flagged),
                "deltas": {f"{p},{q}": v for (p, q), v in sorted(result.deltas.items())},
                "table": table_to_dict(result.completion),
            }
        _emit(doc, _fmt(fmt, pretty),
              renderer=lambda d: "\n\n".join(_table_lines(x) for x in d["tables"])
              if enumerate_all else _table_lines(d["table"]))

    _run(go)


@main.command()
@click.argument("table_file", type=click.Path(exists=True))
@click.option("--limit", type=int, default=None, help="Return at most this many tables.")
@format_option
@pretty_option
def extract(table_file, limit, fmt, pretty):
    """Every precise consistent table compatible with interval judgments."""

    def go():
        tbl = load_table(table_file)
        tables = solver.enumerate_precise_extractions(tbl)
        shown = tables[:limit] if limit else tables
        doc = {
            "total": len(tables),
            "grid_size": solver.count_extractable(tbl) if not tbl.has_missing() else None,
            "tables": [table_to_dict(x) for x in shown],
        }
        _emit(doc, _fmt(fmt, pretty),
              renderer=lambda d: f"total: {d['total']}\n\n" +
              "\n\n".join(_table_lines(x) for x in d["tables"]))

    _run(go)


@main.command()
@click.argument("table_file", type=click.Path(exists=True))
@click.option("--n", type=int, required=True, help="Number of samples.")
@click.option("--seed", type=int, required=True, help="Random seed (runs are reproducible).")
@format_option
@pretty_option
def sample(table_file, n, seed, fmt, pretty):
    """Hit-and-run samples of real-valued consistent tables within bounds."""

    def go():
        tbl = load_table(table_file)
        tables = solver.sample_continuous_tables(tbl, n, seed)
        doc = {"n": len(tables), "seed": seed, "tables": [table_to_dict(x) for x in tables]}
        _emit(doc, _fmt(fmt, pretty),
              renderer=lambda d: "\n\n".join(_table_lines(x) for x in d["tables"]))

    _run(go)


def _parse_anchors(text: str) -> tuple[int, float, int, float]:
    try:
        first, second = text.split(",")
        p, u_p = first.split(":")
        q, u_q = second.split(":")
        return int(p), float(u_p), int(q), float(u_q)
    except ValueError:
        raise CardTableError(f"anchors must look like '1:0,5:100', got '{text}'")


@main.command()
@click.argument("table_file", type=click.Path(exists=True))
@click.option("--anchors", default=None, help="Two anchored levels 'p:u,q:u' (default '1:0,t:100').")
@click.option("--at", "points", multiple=True, type=float,
              help="Also interpolate the utility of these numeric performances.")
@format_option
@pretty_option
def scale(table_file, anchors, points, fmt, pretty):
    """Interval value scale of a consistent precise table."""

    def go():
        tbl = load_table(table_file)
        p, u_p, q, u_q = _parse_anchors(anchors) if anchors else (1, 0.0, tbl.t, 100.0)
        vs = build_interval_scale(tbl, p, q, u_p, u_q)
        doc = vs.to_dict()
        if points:
            doc["interpolations"] = {f"{x:g}": interpolate(vs, x) for x in points}
        _emit(doc, _fmt(fmt, pretty), renderer=lambda d: "\n".join(
            [f"alpha = {d['alpha']:.4f}"] +
            [f"u({(d['labels'] or [f'l{k+1}' for k in range(len(d['utilities']))])[k]}) = {u:.4f}"
             for k, u in enumerate(d["utilities"])] +
            [f"u({k}) = {v:.4f}" for k, v in d.get("interpolations", {}).items()]))

    _run(go)


@main.command()
@click.argument("project_file", type=click.Path(exists=True))
@format_option
@pretty_option
def capacity(project_file, fmt, pretty):
    """Elicit the 2-additive capacity from the project's dummy ranking."""

    def go():
        project = load_project(project_file)
        el = project.capacity()
        doc = {
            "capacity": el.capacity.to_dict(),
            "z": project.capacity_spec.z,
            "ell": project.capacity_spec.ell,
            "total_corrected_value": el.total_w_bar,
            "violations": [
                {"criterion": v.criterion, "partners": sorted(v.subset), "value": v.value}
                for v in el.violations
            ],
        }
        _emit(doc, _fmt(fmt, pretty), renderer=lambda d: "\n".join(
            [f"{s['criterion']}: m={s['m']:.4f} mu={s['mu']:.4f}" for s in d["capacity"]["singletons"]] +
            [f"{'+'.join(s['criteria'])}: m={s['m']:.4f} mu={s['mu']:.4f}" for s in d["capacity"]["pairs"]]))

    _run(go)


@main.command()
@click.argument("project_file", type=click.Path(exists=True))
@format_option
@pretty_option
def evaluate(project_file, fmt, pretty):
    """Choquet value of every alternative under the base scales."""

    def go():
        project = load_project(project_file)
        values = project.evaluate()
        ranking = sorted(values, key=lambda a: -values[a])
        doc = {"values": values, "ranking": ranking}
        _emit(doc, _fmt(fmt, pretty), renderer=lambda d: "\n".join(
            f"{a}: {d['values'][a]:.4f}" for a in d["ranking"]))

    _run(go)


@main.command()
@click.argument("project_file", type=click.Path(exists=True))
@click.option("--mode", type=click.Choice(["enum", "sample"]), default="enum")
@click.option("--n", type=int, default=10_000, help="Samples per sampled criterion.")
@click.option("--seed", type=int, default=None, help="Required in sample mode.")
@click.option("--sample-criteria", default="", help="Comma-separated criteria to sample.")
@format_option
@pretty_option
def smaa(project_file, mode, n, seed, sample_criteria, fmt, pretty):
    """Rank-acceptability and pairwise-winning indices over all compatible
    evaluations."""

    def go():
        if mode == "sample" and seed is None:
            raise CardTableError("sampling requires --seed")
        project = load_project(project_file)
        result = project.smaa(
            mode=mode, n_samples=n, seed=seed,
            sample_criteria=[c for c in sample_criteria.split(",") if c],
        )
        doc = {"alternatives": [a.id for a in project.alternatives], **result.to_dict()}

        def render(d):
            alts = d["alternatives"]
            lines = [f"combinations: {d['combination_count']}", "", "rank acceptability b_k(a) [%]:"]
            head = "      " + "  ".join(f"b{k+1}".rjust(6) for k in range(len(alts)))
            lines.append(head)
            for a, row in zip(alts, d["b"]):
                lines.append(a.rjust(6) + "  " + "  ".join(f"{x:6.2f}" for x in row))
            lines += ["", "pairwise winning p(row beats column) [%]:"]
            lines.append("      " + "  ".join(a.rjust(6) for a in alts))
            for a, row in zip(alts, d["p"]):
                lines.append(a.rjust(6) + "  " + "  ".join(f"{x:6.2f}" for x in row))
            return "\n".join(lines)

        _emit(doc, _fmt(fmt, pretty), renderer=render)

    _run(go)


@main.command()
@click.argument("table_file", type=click.Path(exists=True))
@click.option("--graph", "what", flag_value="graph", default=True, help="DOT digraph (default).")
@click.option("--bars", "what", flag_value="bars", help="Bar-segment lengths e+1.")
@format_option
@pretty_option
def export(table_file, what, fmt, pretty):
    """Render a precise table as a valued digraph or as bar segments."""

    def go():
        tbl = load_table(table_file)
        if what == "graph":
            click.echo(export_graph(tbl), nl=False)
        else:
            doc = {"bars": [{"p": p, "q": q, "length": length}
                            for (p, q), length in export_bars(tbl)]}
            _emit(doc, _fmt(fmt, pretty), renderer=lambda d: "\n".join(
                f"({b['p']},{b['q']}) " + "#" * int(b["length"]) + f" {b['length']:g}"
                for b in d["bars"]))

    _run(go)


if __name__ == "__main__":
    main()

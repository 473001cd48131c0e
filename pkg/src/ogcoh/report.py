"""Output documents and their JSON, CSV and Markdown renderings."""

from __future__ import annotations

import csv
import io
import json
import os
import textwrap
from dataclasses import asdict, dataclass, field

from .bounds import RULES, betti_bounds
from .spectral import euler_characteristic
from .towers import betti_tables, fact_ledger

SCHEMA_VERSION = "1"
FORMATS = ("json", "csv", "md")


def output_width() -> int:
    """Wrap width for prose lines, from OGCOH_WIDTH (default 100)."""
    try:
        return max(20, int(os.environ.get("OGCOH_WIDTH", "100")))
    except ValueError:
        return 100


@dataclass
class OutputDocument:
    variety: str
    schema_version: str = SCHEMA_VERSION
    tables: dict[str, list[int]] = field(default_factory=dict)
    betti: list[dict] = field(default_factory=list)
    euler: int | None = None
    facts: list[dict] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "OutputDocument":
        return cls(**d)

    def to_json(self) -> str:
        return dumps(self.to_dict())


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def loads(text: str) -> list[OutputDocument]:
    obj = json.loads(text)
    items = obj if isinstance(obj, list) else [obj]
    return [OutputDocument.from_dict(x) for x in items]


# ------------------------------------------------------------ builders


def tables_document(v: str) -> OutputDocument:
    t = betti_tables(v)
    doc = OutputDocument(v, tables=t.dense(), euler=euler_characteristic(v))
    doc.warnings += t.mismatches
    return doc


def betti_document(v: str, ruleset: str | None = None) -> OutputDocument:
    rep = betti_bounds(v, ruleset)
    rows = []
    for e in rep:
        row = {"degree": e.degree, "rules": e.binding,
               "contributions": [{"rule": r, "direction": d, "value": x, "citation": RULES[r].citation}
                                 for r, d, x in e.contributions]}
        if e.exact:
            row["exact"] = e.value
        else:
            row["lower"], row["upper"] = e.lower, e.upper
        rows.append(row)
    return OutputDocument(v, betti=rows, euler=rep.euler,
                          warnings=rep.warnings + rep.metadata + [f"rule set: {rep.ruleset}"])


def euler_document(v: str) -> OutputDocument:
    return OutputDocument(v, euler=euler_characteristic(v))


def facts_document(v: str) -> OutputDocument:
    facts = [{"id": f.id, "status": f.status, "statement": f.statement, "citation": f.citation,
              "rank_data": [list(p) for p in f.rank_data]} for f in fact_ledger(v)]
    return OutputDocument(v, facts=facts)


BUILDERS = {"tables": tables_document, "betti": betti_document, "euler": euler_document,
            "facts": facts_document}


# ------------------------------------------------------------ renderers


def csv_text(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def _interval(row: dict) -> str:
    if "exact" in row:
        return str(row["exact"])
    hi = "" if row["upper"] is None else row["upper"]
    return f"[{row['lower']}, {hi}]"


def _csv_doc(doc: OutputDocument, kind: str) -> list[list]:
    if kind == "tables":
        n = len(next(iter(doc.tables.values()), []))
        out = [["row"] + [f"b{d}" for d in range(n)]]
        out += [[name] + vals for name, vals in doc.tables.items()]
        return out
    if kind == "betti":
        out = [["degree", "lower", "upper", "exact", "rules"]]
        for r in doc.betti:
            if "exact" in r:
                out.append([r["degree"], r["exact"], r["exact"], "yes", ";".join(r["rules"])])
            else:
                hi = "" if r["upper"] is None else r["upper"]
                out.append([r["degree"], r["lower"], hi, "no", ";".join(r["rules"])])
        return out
    if kind == "euler":
        return [["variety", "euler"], [doc.variety, doc.euler]]
    if kind == "facts":
        return [["id", "status", "citation"]] + [[f["id"], f["status"], f["citation"]] for f in doc.facts]
    raise ValueError(kind)


def _md_table(header: list, rows: list[list]) -> list[str]:
    out = ["| " + " | ".join(str(h) for h in header) + " |",
           "|" + "|".join("---" for _ in header) + "|"]
    out += ["| " + " | ".join(str(c) for c in r) + " |" for r in rows]
    return out


def _md_doc(doc: OutputDocument, kind: str) -> list[str]:
    width = output_width()
    lines = [f"## {doc.variety}", ""]
    if kind == "tables":
        n = len(next(iter(doc.tables.values()), []))
        evens = list(range(0, n, 2))
        rows = [[name] + [vals[d] for d in evens] for name, vals in doc.tables.items()]
        lines += _md_table(["row"] + [f"b{d}" for d in evens], rows)
        lines += ["", f"chi = {doc.euler}"]
    elif kind == "betti":
        rows = [[f"b{r['degree']}", _interval(r), ", ".join(r["rules"])] for r in doc.betti]
        lines += _md_table(["degree", "value", "rules"], rows)
        lines += ["", f"chi = {doc.euler}"]
    elif kind == "euler":
        lines += [f"chi({doc.variety}) = {doc.euler}"]
    elif kind == "facts":
        for f in doc.facts:
            text = f"- `{f['id']}` ({f['status']}): {f['statement']}. [{f['citation']}]"
            lines += textwrap.wrap(text, width, subsequent_indent="  ", break_on_hyphens=False)
    if doc.warnings:
        lines += ["", "Warnings:"]
        for w in doc.warnings:
            lines += textwrap.wrap(f"- {w}", width, subsequent_indent="  ", break_on_hyphens=False)
    return lines


def render(docs: list[OutputDocument], fmt: str, kind: str) -> str:
    if fmt == "json":
        if len(docs) == 1:
            return docs[0].to_json()
        return dumps([d.to_dict() for d in docs])
    if fmt == "csv":
        parts = []
        for d in docs:
            rows = _csv_doc(d, kind)
            if len(docs) > 1 and kind != "euler":
                rows = [["variety", d.variety]] + rows
            parts.append(csv_text(rows))
        if kind == "euler":
            return csv_text([["variety", "euler"]] + [[d.variety, d.euler] for d in docs])
        return "\n".join(parts)
    if fmt == "md":
        lines = []
        for d in docs:
            lines += _md_doc(d, kind) + [""]
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}")


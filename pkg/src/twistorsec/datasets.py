"""Loading block datasets and rendering the energy/degree table."""

from __future__ import annotations

import csv
import io
import json
from importlib import resources

from .report import format_value
from .vhs import VhsBlockData, energy_closed, hyperhol_degree

SHIPPED_DATASET = "data/vhs_samples.json"


def load_vhs_dataset(path: str = None):
    """Entries of a dataset file; the shipped sample collection by default."""
    if path is None:
        text = resources.files("twistorsec").joinpath(SHIPPED_DATASET).read_text(
            encoding="utf-8")
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    doc = json.loads(text)
    if not isinstance(doc, dict) or "entries" not in doc:
        raise ValueError("malformed dataset: expected an object with 'entries'")
    entries = [VhsBlockData.from_json(e) for e in doc["entries"]]
    labels = [e.label for e in entries]
    if len(set(labels)) != len(labels):
        raise ValueError("malformed dataset: duplicate labels")
    return entries


def vhs_energy_table(entries):
    """Rows (label, n, l, energy, paired label, hyperholomorphic degree).

    The pair and degree cells stay empty for entries without a declared
    partner on the other side of the parameter line.
    """
    by_label = {e.label: e for e in entries}
    rows = []
    for e in entries:
        row = {"label": e.label, "n": e.n, "l": e.l,
               "energy": format_value(energy_closed(e)),
               "pair": e.pair or "", "hyperhol_degree": ""}
        if e.pair:
            partner = by_label.get(e.pair)
            if partner is None:
                raise ValueError(f"entry {e.label!r} names unknown pair {e.pair!r}")
            row["hyperhol_degree"] = format_value(hyperhol_degree(e, partner))
        rows.append(row)
    return rows


_TABLE_COLUMNS = ("label", "n", "l", "energy", "pair", "hyperhol_degree")


def render_table(rows, out_format: str) -> str:
    if out_format == "json":
        return json.dumps({"rows": rows}, sort_keys=True, indent=2,
                          ensure_ascii=False) + "\n"
    if out_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_TABLE_COLUMNS)
        for row in rows:
            writer.writerow([row[c] for c in _TABLE_COLUMNS])
        return buf.getvalue()
    raise ValueError(f"unknown table format: {out_format}")

"""Published statistics embedded as named tables.

Each table lives in ``lexigrid/data/<NAME>.json`` with the schema
``{name, kind, provenance, payload}`` (plus optional ``notes``). Numbers are
stored as decimal strings so percentages load exactly. Setting the
``LEXIGRID_TABLES`` environment variable to a directory makes files found
there take precedence over the bundled ones.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from decimal import Decimal
from importlib import resources
from pathlib import Path
from typing import Any

from .corpus_core import Distribution, FrequencyTable, get_alphabet
from .rankstats import RankTable, expand_groups

__all__ = [
    "KINDS",
    "NamedTable",
    "RecordGridEntry",
    "UnknownTable",
    "distribution",
    "get_table",
    "grouped_ranks",
    "letter_table",
    "list_tables",
    "rank_table",
    "ratio_set",
    "record_rows",
    "reported",
    "table_to_csv",
    "table_to_json",
]

ENV_VAR = "LEXIGRID_TABLES"
KINDS = ("rank_list", "letter_freq", "distribution", "record_grids", "ratio_set", "grouped_ranks")
# Rounded tables must add up to 100% within this before renormalization.
SUM_TOLERANCE = Decimal("0.1")


class UnknownTable(KeyError):
    pass


@dataclass(frozen=True)
class NamedTable:
    name: str
    kind: str
    provenance: str
    payload: dict
    notes: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"{self.name}: unknown kind {self.kind!r}")
        if not self.provenance:
            raise ValueError(f"{self.name}: provenance must be non-empty")

    def to_dict(self) -> dict:
        d = {"name": self.name, "kind": self.kind, "provenance": self.provenance, "payload": self.payload}
        if self.notes:
            d["notes"] = list(self.notes)
        return d


@dataclass(frozen=True)
class RecordGridEntry:
    side: int
    min_black: int
    percentage: Decimal
    count_known: int


def _override_dir() -> Path | None:
    value = os.environ.get(ENV_VAR)
    return Path(value) if value else None


def _bundled():
    return resources.files("lexigrid") / "data"


def list_tables() -> list[str]:
    names = {p.name[:-5] for p in _bundled().iterdir() if p.name.endswith(".json")}
    override = _override_dir()
    if override and override.is_dir():
        names |= {p.stem for p in override.glob("*.json")}
    return sorted(names)


def _load_raw(name: str) -> dict:
    override = _override_dir()
    if override is not None:
        path = override / f"{name}.json"
        if path.is_file():
            return json.loads(path.read_text(encoding="utf-8"))
    res = _bundled() / f"{name}.json"
    if not res.is_file():
        raise UnknownTable(name)
    return json.loads(res.read_text(encoding="utf-8"))


def get_table(name: str) -> NamedTable:
    """Load a table by name; raises :class:`UnknownTable` for unregistered names."""
    raw = _load_raw(name)
    if raw.get("name") != name:
        raise ValueError(f"table file for {name!r} declares name {raw.get('name')!r}")
    table = NamedTable(raw["name"], raw["kind"], raw.get("provenance", ""), raw["payload"], tuple(raw.get("notes", ())))
    _check(table)
    return table


def _check(table: NamedTable) -> None:
    p = table.payload
    if table.kind == "letter_freq":
        total = sum(Decimal(r["percent"]) for r in p["rows"])
        if abs(total - 100) > SUM_TOLERANCE:
            raise ValueError(f"{table.name}: percentages sum to {total}")
    elif table.kind == "distribution":
        total = sum(Decimal(v) for v in p["values"].values())
        if abs(total - 100) > SUM_TOLERANCE:
            raise ValueError(f"{table.name}: percentages sum to {total}")
    elif table.kind == "rank_list":
        RankTable(tuple(p["symbols"]))


def _expect(table: NamedTable, kind: str) -> dict:
    if table.kind != kind:
        raise TypeError(f"{table.name} is a {table.kind} table, not {kind}")
    return table.payload


def letter_table(name: str) -> FrequencyTable:
    """A letter_freq table as a :class:`FrequencyTable` whose counts are the percentages."""
    p = _expect(get_table(name), "letter_freq")
    alphabet = get_alphabet(p["alphabet"])
    return FrequencyTable.from_percentages(alphabet, {r["symbol"]: r["percent"] for r in p["rows"]})


def rank_table(name: str) -> RankTable:
    t = get_table(name)
    if t.kind == "grouped_ranks":
        return grouped_ranks(name)
    return RankTable(tuple(_expect(t, "rank_list")["symbols"]))


def grouped_ranks(name: str) -> RankTable:
    """Grouped ranks expanded in listed order, restricted to the table's alphabet."""
    p = _expect(get_table(name), "grouped_ranks")
    keep = get_alphabet(p["alphabet"]).symbols if "alphabet" in p else None
    return expand_groups(p["groups"], keep)


def distribution(name: str) -> Distribution:
    p = _expect(get_table(name), "distribution")
    values = p["values"]
    if p.get("measure") in ("letters", "syllables"):
        return Distribution.from_percentages({int(k): v for k, v in values.items()})
    return Distribution.from_percentages(dict(values))


def ratio_set(name: str) -> dict[str, Decimal]:
    p = _expect(get_table(name), "ratio_set")
    return {item["key"]: Decimal(item["value"]) for item in p["items"]}


def record_rows(name: str = "RECORD_GRIDS") -> list[RecordGridEntry]:
    p = _expect(get_table(name), "record_grids")
    return [
        RecordGridEntry(r["side"], r["min_black"], Decimal(r["percentage"]), r["count_known"])
        for r in p["rows"]
    ]


def reported(name: str) -> dict[str, Decimal]:
    """Summary values published next to a table (means, entropy, écart, ...)."""
    return {k: Decimal(v) for k, v in get_table(name).payload.get("reported", {}).items()}


def table_to_json(table: NamedTable) -> str:
    return json.dumps(table.to_dict(), ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def _rows(table: NamedTable) -> tuple[list[str], list[list[Any]]]:
    p = table.payload
    if table.kind == "letter_freq":
        return ["rank", "symbol", "percent"], [[i, r["symbol"], r["percent"]] for i, r in enumerate(p["rows"], 1)]
    if table.kind == "rank_list":
        return ["rank", "symbol"], [[i, s] for i, s in enumerate(p["symbols"], 1)]
    if table.kind == "grouped_ranks":
        return ["group", "symbols"], [[i, ",".join(g)] for i, g in enumerate(p["groups"], 1)]
    if table.kind == "distribution":
        return ["value", "percent"], [[k, v] for k, v in p["values"].items()]
    if table.kind == "record_grids":
        cols = ["side", "min_black", "percentage", "count_known"]
        return cols, [[r[c] for c in cols] for r in p["rows"]]
    return ["key", "value", "label"], [[i["key"], i["value"], i["label"]] for i in p["items"]]


def table_to_csv(table: NamedTable) -> str:
    header, rows = _rows(table)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()

"""Scenario files (JSON, schema 1) and report rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import groups as G
from .engine import PacketReport, ParameterScenario, PreconditionError
from .extensions import extension_from_subgroup
from .padic import PAdicFieldData

SCHEMA_VERSION = 1


def parse_field(value) -> PAdicFieldData | None:
    if value is None:
        return None
    if isinstance(value, PAdicFieldData):
        return value
    if isinstance(value, str):
        return PAdicFieldData.parse(value)
    if isinstance(value, dict):
        return PAdicFieldData(**{k: int(v) for k, v in value.items()})
    raise PreconditionError(f"cannot read field descriptor {value!r}")


def parse_group_value(value) -> G.FiniteGroup:
    if isinstance(value, str):
        return G.parse_group(value)
    if isinstance(value, dict):
        return G.FiniteGroup.from_dict(value)
    raise PreconditionError(f"group must be a spec string or a table object, got {value!r}")


def scenario_from_dict(rec: dict, shared_field=None) -> ParameterScenario:
    missing = [k for k in ("m", "d", "group") if k not in rec]
    if missing:
        raise PreconditionError(f"scenario {rec.get('label', '?')!r} is missing {missing}")
    group = parse_group_value(rec["group"])
    sub = rec.get("central_subgroup", "center")
    if sub == "center":
        sub = group.center
    ext = extension_from_subgroup(group, sub, rec.get("generator"))
    field = parse_field(rec.get("field", shared_field))
    return ParameterScenario(int(rec["m"]), int(rec["d"]), ext,
                             zeta_exponent=int(rec.get("zeta_exponent", 0)),
                             field=field, label=str(rec.get("label", "")))


def scenario_to_dict(s: ParameterScenario) -> dict:
    out = {
        "label": s.label,
        "m": s.m,
        "d": s.d,
        "group": s.extension.total.to_dict(),
        "central_subgroup": list(s.extension.central_subgroup),
        "generator": s.extension.generator,
        "zeta_exponent": s.zeta_exponent,
    }
    if s.field is not None:
        out["field"] = s.field.to_dict()
    return out


@dataclass
class ScenarioFile:
    records: list[dict]
    field: object = None

    @classmethod
    def load(cls, path: str | Path) -> "ScenarioFile":
        return cls.from_json(json.loads(Path(path).read_text()))

    @classmethod
    def from_json(cls, data) -> "ScenarioFile":
        if isinstance(data, list):
            data = {"schema": SCHEMA_VERSION, "scenarios": data}
        schema = data.get("schema", SCHEMA_VERSION)
        if schema != SCHEMA_VERSION:
            raise PreconditionError(f"unsupported scenario schema {schema}")
        records = data.get("scenarios")
        if not isinstance(records, list):
            raise PreconditionError("scenario file needs a 'scenarios' list")
        labels = [r.get("label", f"#{i}") for i, r in enumerate(records)]
        dupes = sorted({x for x in labels if labels.count(x) > 1})
        if dupes:
            raise PreconditionError(f"duplicate scenario labels: {dupes}")
        for i, r in enumerate(records):
            r.setdefault("label", f"#{i}")
        return cls(records, data.get("field"))


# -- rendering --------------------------------------------------------------

def render_columns(header: str, rows: list[tuple[str, list]]) -> str:
    """Aligned table with one labelled row per quantity and one column per case."""
    cells = [[name] + [str(v) for v in vals] for name, vals in rows]
    if header:
        cells.insert(0, [""] + header.split("\t"))
    width = [max(len(r[c]) for r in cells) for c in range(len(cells[0]))]
    lines = []
    for r in cells:
        lines.append(" | ".join(x.ljust(width[0]) if i == 0 else x.rjust(width[i])
                                for i, x in enumerate(r)))
    return "\n".join(lines)


def render_triples(triples: list[tuple[int, int, int]]) -> str:
    return render_columns("", [
        ("|Pi_phi(G*)|", [t[0] for t in triples]),
        ("|Pi_phi(G)|", [t[1] for t in triples]),
        ("<sigma,pi>_G", [t[2] for t in triples]),
    ])


def render_reports(reports: list[PacketReport]) -> str:
    def audit(r, attr):
        return "-" if r.divisibility is None else getattr(r.divisibility, attr)

    rows = [
        ("|Pi_phi(G*)|", [r.card_star for r in reports]),
        ("|Pi_phi(G)|", [r.card_g for r in reports]),
        ("<sigma,pi>_G", [r.multiplicity for r in reports]),
        ("|S_phi|", [r.s_card for r in reports]),
        ("e(G)", [r.kottwitz_sign for r in reports]),
        ("coefficient", [r.endoscopic_coefficient for r in reports]),
        ("Deg ratio", [r.degree_ratio for r in reports]),
        ("coset", [audit(r, "coset") for r in reports]),
        ("A(G,F)", [audit(r, "bound") for r in reports]),
        ("audit", ["-" if r.divisibility is None else ("pass" if r.divisibility.all_pass else "FAIL")
                   for r in reports]),
    ]
    if any(r.depth_zero_flag is not None for r in reports):
        rows.append(("depth zero", ["-" if r.depth_zero_flag is None else r.depth_zero_flag
                                    for r in reports]))
    table = render_columns("\t".join(r.label or "?" for r in reports), rows)
    notes = [f"[{r.label}] {n}" for r in reports for n in r.notes]
    return table + ("\n" + "\n".join(notes) if notes else "")

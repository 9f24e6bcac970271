"""Per-pair reports and their JSON / text renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .classify import ClassificationRecord, FamilyMatch, classification_record
from .geometry import (
    HomogeneityReport,
    OrbitSide,
    SectionModule,
    ambient_dim,
    homogeneity,
    normal_sections,
)
from .horo import HoroPair, PicardData, embeddings, picard_number
from .roots import SimpleType


@dataclass(frozen=True)
class PicardRow:
    colors: tuple[int, ...]
    data: PicardData


@dataclass(frozen=True)
class Report:
    record: ClassificationRecord
    picard_table: tuple[PicardRow, ...] = ()
    sections: tuple[tuple[str, SectionModule], ...] = ()
    homogeneity: HomogeneityReport | None = None
    ambient_dim: int | None = None

    @property
    def special(self) -> bool:
        return bool(self.record.families)

    @property
    def pair(self) -> HoroPair:
        return self.record.pair


def build_report(p: HoroPair) -> Report:
    rec = classification_record(p)
    if not rec.families:
        return Report(rec)
    table = tuple(
        PicardRow(tuple(sorted(f.colors)), picard_number(f)) for f in embeddings(p)
    )
    sections = tuple((side.value, normal_sections(p, side)) for side in OrbitSide)
    return Report(rec, table, sections, homogeneity(p), ambient_dim(p))


# -- JSON ---------------------------------------------------------------------


def _section_to_dict(s: SectionModule) -> dict:
    if s.is_zero:
        return {"module": "zero"}
    return {"module": "irreducible", "highest_weight": list(s.highest_weight), "dim": s.dim}


def _section_from_dict(d: dict) -> SectionModule:
    if d["module"] == "zero":
        return SectionModule()
    return SectionModule(tuple(d["highest_weight"]), d["dim"])


def report_to_dict(r: Report) -> dict:
    p = r.pair
    out = {
        "type": p.type.family,
        "rank": p.type.rank,
        "alpha": p.alpha,
        "beta": p.beta,
        "special": r.special,
        "canonical": r.record.canonical,
        "dimension": r.record.dimension,
    }
    if not r.special:
        return out
    h = r.homogeneity
    out.update(
        {
            "families": [{"id": f.id, "params": dict(f.params)} for f in r.record.families],
            "picard": [
                {"colors": list(row.colors), "rho": row.data.rho, "r": row.data.r,
                 "colors_used": row.data.colors_used}
                for row in r.picard_table
            ],
            "homogeneous": h.homogeneous,
            "model": h.model,
            "aut": {"description": h.aut_description, "dim": h.aut_dim},
            "orbit_count": h.orbit_count,
            "ambient_dim": r.ambient_dim,
            "sections": {side: _section_to_dict(s) for side, s in r.sections},
        }
    )
    return out


def report_from_dict(d: dict) -> Report:
    pair = HoroPair(SimpleType(d["type"], d["rank"]), d["alpha"], d["beta"])
    families = tuple(FamilyMatch(f["id"], dict(f["params"])) for f in d.get("families", []))
    rec = ClassificationRecord(pair, families, d["dimension"], d["canonical"])
    if not d["special"]:
        return Report(rec)
    table = tuple(
        PicardRow(tuple(row["colors"]), PicardData(row["rho"], row["r"], row["colors_used"]))
        for row in d["picard"]
    )
    sections = tuple((side, _section_from_dict(s)) for side, s in d["sections"].items())
    h = HomogeneityReport(
        d["homogeneous"], d["model"], d["aut"]["description"], d["aut"]["dim"], d["orbit_count"]
    )
    return Report(rec, table, sections, h, d["ambient_dim"])


def render_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def classification_to_dict(max_rank: int, reports: list[Report]) -> dict:
    return {"max_rank": max_rank, "records": [report_to_dict(r) for r in reports]}


# -- text ---------------------------------------------------------------------


def _families_text(families: tuple[FamilyMatch, ...]) -> str:
    parts = []
    for f in families:
        params = ",".join(f"{k}={v}" for k, v in f.params.items())
        parts.append(f"{f.id}({params})" if params else str(f.id))
    return " ".join(parts)


def _section_text(s: SectionModule) -> str:
    if s.is_zero:
        return "0"
    return f"V{list(s.highest_weight)} dim {s.dim}"


TABLE_COLUMNS = ("families", "type", "alpha", "beta", "dim", "homogeneous", "aut_dim", "ambient_dim", "model")


def render_table(reports: list[Report]) -> str:
    rows = [TABLE_COLUMNS]
    for r in reports:
        p, h = r.pair, r.homogeneity
        rows.append(
            (
                _families_text(r.record.families),
                str(p.type),
                str(p.alpha),
                str(p.beta),
                str(r.record.dimension),
                "yes" if h.homogeneous else "no",
                str(h.aut_dim),
                str(r.ambient_dim),
                h.model or "-",
            )
        )
    widths = [max(len(row[k]) for row in rows) for k in range(len(TABLE_COLUMNS))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render_report(r: Report) -> str:
    p = r.pair
    lines = [
        f"pair        {p}",
        f"special     {'yes' if r.special else 'no'}",
        f"canonical   {'yes' if r.record.canonical else 'no'}",
        f"dimension   {r.record.dimension}",
    ]
    if not r.special:
        return "\n".join(lines) + "\n"
    h = r.homogeneity
    lines.append(f"families    {_families_text(r.record.families)}")
    lines.append("picard      colors            rho  r  colors_used")
    for row in r.picard_table:
        names = "{" + ", ".join(f"a{c}" for c in row.colors) + "}"
        lines.append(f"            {names:<17} {row.data.rho:<4} {row.data.r:<2} {row.data.colors_used}")
    for side, s in r.sections:
        lines.append(f"H0(N_{side})     {_section_text(s)}")
    lines.append(f"homogeneous {'yes' if h.homogeneous else 'no'}")
    if h.model:
        lines.append(f"model       {h.model}")
    lines.append(f"Aut^0       {h.aut_description}")
    lines.append(f"dim Aut^0   {h.aut_dim}")
    lines.append(f"orbits      {h.orbit_count}")
    lines.append(f"ambient     P^{r.ambient_dim}")
    return "\n".join(lines) + "\n"

"""Serialization of reports: JSON-ready dicts, CSV rows and plain text."""
from __future__ import annotations

import csv
import io
import json
from importlib import resources

from .fano import AuditReport, ClassificationReport

ENUMERATE_COLUMNS = (
    "word",
    "length",
    "class",
    "condition_I",
    "condition_II",
    "min_degree",
    "coxeter_type",
    "toric",
    "cohomology_vanishing",
    "locally_rigid",
)
AUDIT_COLUMNS = ("word", "length", "class_conditions", "class_degrees", "degrees")
ROW_COLUMNS = ("row", "eta_plus", "eta_minus", "s", "window_minus", "holds_NI", "holds_NII", "degree")


def load_schema(name: str = "report") -> dict:
    text = resources.files("bsdh_fano").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def report_to_dict(rep: ClassificationReport) -> dict:
    word = rep.word
    return {
        "type": str(word.type) if word is not None else None,
        "word": list(word.letters) if word is not None else None,
        "reduced": True if word is not None else None,
        "mode": "formal" if rep.formal else "word",
        "matrix": rep.matrix.as_lists(),
        "profiles": [
            {
                "row": p.row,
                "eta_plus": list(p.eta_plus),
                "eta_minus": list(p.eta_minus),
                "s": p.s,
                "window_minus": list(p.window_minus),
            }
            for p in rep.profiles
        ],
        "verdicts": [v.to_dict() for v in rep.verdicts],
        "degrees": list(rep.degrees),
        "class_conditions": rep.class_by_conditions.tag,
        "class_degrees": rep.class_by_degrees.tag,
        "agreement": rep.agreement,
        "rigidity": rep.rigidity.to_dict() if rep.rigidity is not None else None,
    }


def summary_row(rep: ClassificationReport) -> dict:
    flags = rep.rigidity
    return {
        "word": str(rep.word) if rep.word is not None else "",
        "length": rep.matrix.r,
        "class": rep.class_by_conditions.tag,
        "condition_I": rep.condition_I,
        "condition_II": rep.condition_II,
        "min_degree": rep.min_degree,
        "coxeter_type": flags.coxeter_type if flags else None,
        "toric": flags.toric if flags else None,
        "cohomology_vanishing": flags.cohomology_vanishing if flags else None,
        "locally_rigid": flags.locally_rigid if flags else None,
    }


def audit_to_dict(a: AuditReport) -> dict:
    return {
        "type": str(a.type),
        "max_len": a.max_len,
        "words_checked": a.words_checked,
        "divergences": [
            {
                "word": list(d.word.letters),
                "class_conditions": d.class_by_conditions.tag,
                "class_degrees": d.class_by_degrees.tag,
                "degrees": list(d.degrees),
                "verdicts": [v.to_dict() for v in d.verdicts],
            }
            for d in a.divergences
        ],
    }


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv_value(x):
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return x


def to_csv(rows, columns) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _csv_value(row[k]) for k in columns})
    return buf.getvalue()


def row_table(rep: ClassificationReport) -> list[dict]:
    def fmt(xs):
        return " ".join(map(str, xs))

    return [
        {
            "row": p.row,
            "eta_plus": fmt(p.eta_plus),
            "eta_minus": fmt(p.eta_minus),
            "s": p.s,
            "window_minus": fmt(p.window_minus),
            "holds_NI": v.holds_NI,
            "holds_NII": v.holds_NII,
            "degree": d,
        }
        for p, v, d in zip(rep.profiles, rep.verdicts, rep.degrees)
    ]


def _set(xs) -> str:
    return "{" + ",".join(map(str, xs)) + "}"


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def condition_line(rep: ClassificationReport) -> str:
    def status(rows):
        return "holds" if not rows else "fails (rows " + ",".join(map(str, rows)) + ")"

    fail_I = [v.row for v in rep.verdicts if not v.holds_NI]
    fail_II = [v.row for v in rep.verdicts if not v.holds_NII]
    return f"condition II: {status(fail_II)}; condition I: {status(fail_I)}"


def report_to_text(rep: ClassificationReport) -> str:
    lines = []
    if rep.formal:
        lines.append("mode: formal (raw matrix); nef/ample of -K assuming big")
    else:
        lines.append(f"type: {rep.word.type}")
        lines.append(f"word: {rep.word.pretty()}  ({rep.word})")
        lines.append("reduced: yes")
    if rep.matrix.r == 0:
        lines.append("trivial: empty word, Z is a point")
    else:
        lines.append("beta matrix:")
        lines.extend("  " + ln for ln in rep.matrix.pretty().splitlines())
        lines.append("")
        header = ("row", "eta+", "eta-", "s(i)", "window-", "N^I", "N^II", "degree")
        table = [header] + [
            (
                str(p.row), _set(p.eta_plus), _set(p.eta_minus),
                "-" if p.s is None else str(p.s), _set(p.window_minus),
                _yes(v.holds_NI), _yes(v.holds_NII), str(d),
            )
            for p, v, d in zip(rep.profiles, rep.verdicts, rep.degrees)
        ]
        widths = [max(len(r[k]) for r in table) for k in range(len(header))]
        for r in table:
            lines.append("  " + "  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
        failures = [w for v in rep.verdicts for w in (v.witness_NI, v.witness_NII) if not w.holds]
        if failures:
            lines.append("failed clauses:")
            for w in failures:
                cond = "N^I" if w.condition == "NI" else "N^II"
                ents = " ".join(f"b[{a}][{b}]={x}" for a, b, x in w.entries)
                lines.append(f"  row {w.row} {cond} {w.case}: {w.detail}" + (f" [{ents}]" if ents else ""))
    lines.append(condition_line(rep))
    lines.append("degrees -K.[C~_i]: (" + ", ".join(map(str, rep.degrees)) + ")")
    lines.append(f"class by conditions: {rep.class_by_conditions.label}")
    lines.append(f"class by degrees: {rep.class_by_degrees.label}")
    lines.append(f"agreement: {_yes(rep.agreement)}")
    if rep.rigidity is not None:
        f = rep.rigidity
        lines.append(
            f"rigidity (entailed): coxeter type: {_yes(f.coxeter_type)}; toric: {_yes(f.toric)}; "
            f"H^j(T)=0 for j>0: {'entailed' if f.cohomology_vanishing else 'not entailed'}; "
            f"locally rigid: {'entailed' if f.locally_rigid else 'not entailed'}"
        )
    if rep.agreement:
        cls = f"class: {rep.class_by_conditions.label}"
    else:
        cls = (f"class: conditions say {rep.class_by_conditions.label}, "
               f"degrees say {rep.class_by_degrees.label}")
    lines.append(cls + (" (formal)" if rep.formal else ""))
    return "\n".join(lines) + "\n"


def enumerate_to_text(rows: list[dict]) -> str:
    header = ("word", "len", "class", "I", "II", "min deg", "coxeter", "rigid")
    table = [header] + [
        (
            r["word"] or "e", str(r["length"]), r["class"], _yes(r["condition_I"]),
            _yes(r["condition_II"]), "-" if r["min_degree"] is None else str(r["min_degree"]),
            _yes(r["coxeter_type"]), _yes(r["locally_rigid"]),
        )
        for r in rows
    ]
    widths = [max(len(r[k]) for r in table) for k in range(len(header))]
    out = ["  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip() for r in table]
    out.append(f"{len(rows)} reduced words")
    return "\n".join(out) + "\n"


def audit_to_text(a: AuditReport) -> str:
    lines = [f"audit: type {a.type}, max length {a.max_len}", f"words_checked: {a.words_checked}"]
    if a.ok:
        lines.append("no divergence")
    else:
        lines.append(f"divergences: {len(a.divergences)}")
        for d in a.divergences:
            lines.append(
                f"  {d.word.pretty()}: conditions {d.class_by_conditions.tag}, "
                f"degrees {d.class_by_degrees.tag}, degrees ({', '.join(map(str, d.degrees))})"
            )
            for v in d.verdicts:
                for w in (v.witness_NI, v.witness_NII):
                    if not w.holds:
                        lines.append(f"    row {w.row} {w.condition} {w.case}: {w.detail}")
    return "\n".join(lines) + "\n"


def audit_rows(a: AuditReport) -> list[dict]:
    return [
        {
            "word": str(d.word),
            "length": len(d.word),
            "class_conditions": d.class_by_conditions.tag,
            "class_degrees": d.class_by_degrees.tag,
            "degrees": " ".join(map(str, d.degrees)),
        }
        for d in a.divergences
    ]

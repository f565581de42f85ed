"""Text and line-protocol renderings of check reports."""
from collections import Counter

from .checks import FAIL, id_key

FORMATS = ("text", "machine")


def _clean(value):
    # the line protocol is space separated; canonical forms never contain
    # spaces, free-form notes might
    return str(value).replace(" ", "_")


def machine_line(res):
    parts = ["check", res.id, res.instance, res.status]
    if res.witness is not None:
        parts.append(f"witness={_clean(res.witness)}")
    if res.note is not None:
        parts.append(f"note={_clean(res.note)}")
    return " ".join(parts)


def _ordered(rep):
    return sorted(rep.results, key=lambda r: id_key(r.id))


def emit_machine(reports):
    return "".join(machine_line(r) + "\n" for rep in reports for r in _ordered(rep))


HEADER = (
    "# quotients are taken by Ann(M): I-bar = (I + Ann(M)) / Ann(M) in R/Ann(M)",
    "# basic opens on ring spaces use the principal ideal rR",
    "# ring qp-varieties follow each instance's semantics option (default radical)",
)


def emit_text(reports):
    out = list(HEADER)
    totals = Counter()
    for rep in reports:
        rows = _ordered(rep)
        out.append(f"== {rep.instance}")
        w_id = max((len(r.id) for r in rows), default=4)
        for r in rows:
            totals[r.status] += 1
            line = f"  {r.id:<{w_id}}  {r.status:<7}  {r.seconds * 1000:7.1f} ms"
            if r.witness is not None:
                line += f"  witness {r.witness}"
            if r.note is not None:
                line += f"  [{r.note}]"
            out.append(line)
    summary = ", ".join(f"{totals[s]} {s}" for s in ("PASS", FAIL, "SKIPPED"))
    out.append(f"{len(reports)} instance(s): {summary}")
    return "\n".join(out) + "\n"


def emit_report(reports, fmt="text"):
    if not isinstance(reports, (list, tuple)):
        reports = [reports]
    if fmt == "machine":
        return emit_machine(reports)
    if fmt == "text":
        return emit_text(reports)
    raise ValueError(f"unknown report format {fmt!r}")

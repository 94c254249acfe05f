"""Table rendering: plain text, JSON (round-trippable), and LaTeX."""

from __future__ import annotations

from fractions import Fraction

from .combinatorics import format_multipartition
from .matrices import GradedMatrix
from .scalars import LaurentPoly

_ROW_PREFIX = {"kostka": "L", "cl": "L", "cdelta": "M", "ddelta": "M"}
_TITLE = {
    "kostka": "t,t-Kostka matrix",
    "cdelta": "standard modules in W-irreducibles (C_Delta)",
    "ddelta": "standard modules in simples (D_Delta)",
    "cl": "simple modules in W-irreducibles (C_L)",
}


def laurent_str(p: LaurentPoly) -> str:
    """Descending-power rendering, e.g. ``t^3+t``."""
    return str(p)


def laurent_latex(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e, c in p.sorted_items():
        f = c.as_fraction()
        neg = f < 0
        mag = abs(f)
        body = "" if (mag == 1 and e != 0) else (
            str(mag) if mag.denominator == 1 else rf"\tfrac{{{mag.numerator}}}{{{mag.denominator}}}"
        )
        if e == 1:
            body += "t"
        elif e != 0:
            body += f"t^{{{e}}}"
        sign = "-" if neg else ("+" if parts else "")
        parts.append(sign + body)
    return "".join(parts)


def partition_latex(lam) -> str:
    if not lam:
        return r"\emptyset"
    return "(" + ",".join(str(p) for p in lam) + ")"


def multipartition_latex(mlam) -> str:
    return "(" + ",".join(partition_latex(lam) for lam in mlam) + ")"


def _row_label(kind: str, mp) -> str:
    prefix = _ROW_PREFIX.get(kind)
    label = format_multipartition(mp)
    if kind in ("kostka", "cl"):
        return f"L({label})"
    if kind == "cdelta":
        return f"M({label})"
    return label


def matrix_text(m: GradedMatrix) -> str:
    title = f"{_TITLE.get(m.kind, m.kind)} for ell={m.ell}, n={m.n}"
    header = [""] + [format_multipartition(mp) for mp in m.cols]
    rows = [
        [_row_label(m.kind, mp)] + [laurent_str(e) for e in row]
        for mp, row in zip(m.rows, m.entries)
    ]
    widths = [max(len(r[c]) for r in [header] + rows) for c in range(len(header))]
    lines = [title, ""]
    lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    for r in rows:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def matrix_latex(m: GradedMatrix) -> str:
    cols = "l||" + "|".join("r" for _ in m.cols)
    lines = [rf"\begin{{array}}{{{cols}}}"]
    head = " & ".join([""] + [multipartition_latex(mp) for mp in m.cols])
    lines.append(head + r" \\ \hline\hline")
    for mp, row in zip(m.rows, m.entries):
        prefix = _ROW_PREFIX.get(m.kind)
        label = multipartition_latex(mp)
        if prefix:
            label = f"{prefix}({label})"
        body = " & ".join([label] + [laurent_latex(e) for e in row])
        lines.append(body + r" \\ \hline")
    lines.append(r"\end{array}")
    return "\n".join(lines) + "\n"


def poly_json(p: LaurentPoly) -> dict:
    return {str(e): str(c.as_fraction()) for e, c in sorted(p.coeffs.items())}


def poly_from_json(ell: int, data: dict) -> LaurentPoly:
    return LaurentPoly(ell, {int(e): Fraction(c) for e, c in data.items()})


def matrix_json_dict(m: GradedMatrix) -> dict:
    return {
        "kind": m.kind,
        "ell": m.ell,
        "n": m.n,
        "rows": [[list(p) for p in mp] for mp in m.rows],
        "cols": [[list(p) for p in mp] for mp in m.cols],
        "entries": [[poly_json(e) for e in row] for row in m.entries],
    }


def matrix_from_json_dict(data: dict) -> GradedMatrix:
    ell = int(data["ell"])
    to_mp = lambda raw: tuple(tuple(int(x) for x in p) for p in raw)
    rows = tuple(to_mp(mp) for mp in data["rows"])
    cols = tuple(to_mp(mp) for mp in data["cols"])
    entries = tuple(
        tuple(poly_from_json(ell, e) for e in row) for row in data["entries"]
    )
    return GradedMatrix(data["kind"], ell, int(data["n"]), rows, cols, entries)

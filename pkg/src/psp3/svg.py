"""SVG rendering of thread diagrams.

Layout is fixed so output bytes are stable for fixed inputs: x pixels are
value * scale (default 6), one 18px row per order with order -1 above and
order p+1 below the main band, annotation layers at 40% opacity, marked
values shaded across the full band.
"""

from __future__ import annotations

from .threads import ThreadDiagram

SCALE = 6
ROW_H = 18
PAD = 22
BAR_H = 8
MAIN = "#1f5fa8"
ANNOT = "#7a7a7a"
MARK = "#d94545"


def _esc(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_diagram(dia: ThreadDiagram, scale: int = SCALE) -> str:
    """Deterministic SVG for a thread diagram."""
    lo, hi = dia.x_lo, dia.x_hi
    orders = [-1] + list(range(dia.p + 2))  # row top-down: -1, 0..p, p+1
    rows = {i: idx for idx, i in enumerate(orders)}
    width = (hi - lo + 1) * scale + 2 * PAD
    height = len(orders) * ROW_H + 2 * PAD
    px = lambda v: PAD + (v - lo) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{PAD}" y="14" font-family="monospace" font-size="11">'
        f"{_esc(str(dia.basis))} n={dia.n} p={dia.p} range {lo}..{hi}</text>",
    ]
    for x in dia.marks:
        parts.append(
            f'<rect x="{px(x)}" y="{PAD}" width="{scale}" height="{len(orders) * ROW_H}" '
            f'fill="{MARK}" fill-opacity="0.35"/>'
        )
    for t, color, opacity in [(t, MAIN, "1") for t in dia.threads] + [
        (t, ANNOT, "0.4") for t in dia.annotations
    ]:
        y = PAD + rows[t.i] * ROW_H + (ROW_H - BAR_H) // 2
        x0 = px(max(t.start, lo))
        x1 = px(min(t.end, hi)) + scale
        parts.append(
            f'<rect x="{x0}" y="{y}" width="{x1 - x0}" height="{BAR_H}" '
            f'fill="{color}" fill-opacity="{opacity}"/>'
        )
        parts.append(
            f'<text x="{x0 + 1}" y="{y - 2}" font-family="monospace" font-size="9" '
            f'fill="{color}" fill-opacity="{opacity}">{t.c2}</text>'
        )
    for i in orders:
        y = PAD + rows[i] * ROW_H + ROW_H // 2 + 3
        parts.append(
            f'<text x="4" y="{y}" font-family="monospace" font-size="10">{i}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

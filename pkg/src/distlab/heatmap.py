"""Self-contained SVG heatmap for a (diam G, diam G2) survey table.

Finite cells only: rows are G diameters, columns are 2-distance
diameters, fill uses a log-scaled single-hue ramp with the count printed
in each cell.  Two stepped overlays mark the theoretical window for
rows with d >= 3: the lower boundary ceil(d/2) and the upper d + 2.
"""
from __future__ import annotations

import math

from .enumeration import SurveyTable

CELL = 46
PAD_LEFT = 64
PAD_TOP = 54
PAD_BOTTOM = 40
LOWER_COLOR = "#1d6fb8"
UPPER_COLOR = "#c23b22"


def _ramp(t: float) -> str:
    """White to deep teal, t in [0, 1]."""
    t = min(max(t, 0.0), 1.0)
    r = round(255 + (20 - 255) * t)
    g = round(255 + (98 - 255) * t)
    b = round(255 + (118 - 255) * t)
    return f"#{r:02x}{g:02x}{b:02x}"


def heatmap_svg(table: SurveyTable) -> str:
    finite = {
        (d, int(d2)): c for (d, d2), c in table.cells.items() if not math.isinf(d2)
    }
    if finite:
        ds = sorted({d for d, _ in finite})
        d2s = sorted({d2 for _, d2 in finite})
    else:
        ds, d2s = [0], [0]
    dmin, dmax = ds[0], ds[-1]
    d2min, d2max = d2s[0], d2s[-1]
    nrows = dmax - dmin + 1
    ncols = d2max - d2min + 1
    width = PAD_LEFT + ncols * CELL + 20
    height = PAD_TOP + nrows * CELL + PAD_BOTTOM
    maxc = max(finite.values(), default=1)
    logmax = math.log(maxc + 1)

    def cx(d2: int) -> float:
        return PAD_LEFT + (d2 - d2min) * CELL

    def cy(d: int) -> float:
        return PAD_TOP + (d - dmin) * CELL

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<style>text{font-family:sans-serif}</style>',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.0f}" y="24" font-size="15" text-anchor="middle">'
        f"joint diameter census, n = {table.n}</text>",
        f'<text x="{PAD_LEFT + ncols * CELL / 2:.0f}" y="{height - 8}" font-size="12" '
        'text-anchor="middle">diameter of the 2-distance graph</text>',
        f'<text x="14" y="{PAD_TOP + nrows * CELL / 2:.0f}" font-size="12" '
        f'text-anchor="middle" transform="rotate(-90 14 {PAD_TOP + nrows * CELL / 2:.0f})">'
        "diameter of the graph</text>",
    ]
    for d in range(dmin, dmax + 1):
        parts.append(
            f'<text x="{PAD_LEFT - 10}" y="{cy(d) + CELL / 2 + 4:.0f}" font-size="11" '
            f'text-anchor="end">{d}</text>'
        )
        for d2 in range(d2min, d2max + 1):
            count = finite.get((d, d2), 0)
            fill = _ramp(math.log(count + 1) / logmax) if count else "#ffffff"
            parts.append(
                f'<rect x="{cx(d2):.0f}" y="{cy(d):.0f}" width="{CELL}" height="{CELL}" '
                f'fill="{fill}" stroke="#cccccc" stroke-width="0.5"/>'
            )
            if count:
                dark = math.log(count + 1) / logmax > 0.62
                color = "#ffffff" if dark else "#222222"
                parts.append(
                    f'<text x="{cx(d2) + CELL / 2:.0f}" y="{cy(d) + CELL / 2 + 4:.0f}" '
                    f'font-size="10" text-anchor="middle" fill="{color}">{count}</text>'
                )
    for d2 in range(d2min, d2max + 1):
        parts.append(
            f'<text x="{cx(d2) + CELL / 2:.0f}" y="{PAD_TOP - 8}" font-size="11" '
            f'text-anchor="middle">{d2}</text>'
        )

    def boundary(value_of_d, color: str, label: str) -> None:
        pts = []
        for d in range(max(dmin, 3), dmax + 1):
            v = value_of_d(d)
            x = cx(v) if v >= d2min else cx(d2min)
            x = min(x, PAD_LEFT + ncols * CELL)
            pts.append((x, cy(d)))
            pts.append((x, cy(d) + CELL))
        if not pts:
            return
        path = " ".join(f"{x:.0f},{y:.0f}" for x, y in pts)
        parts.append(
            f'<polyline points="{path}" fill="none" stroke="{color}" '
            f'stroke-width="2.2" opacity="0.85"><title>{label}</title></polyline>'
        )

    if dmax >= 3:
        # lower line sits on the left edge of cell ceil(d/2), upper on the
        # right edge of cell d + 2; both clamp to the grid
        boundary(lambda d: -(-d // 2), LOWER_COLOR, "lower boundary: ceil(d/2)")
        boundary(lambda d: d + 3, UPPER_COLOR, "upper boundary: d + 2")
        ly = PAD_TOP - 34
        parts.append(
            f'<line x1="{PAD_LEFT}" y1="{ly}" x2="{PAD_LEFT + 26}" y2="{ly}" '
            f'stroke="{LOWER_COLOR}" stroke-width="2.2"/>'
        )
        parts.append(
            f'<text x="{PAD_LEFT + 32}" y="{ly + 4}" font-size="11">lower ceil(d/2)</text>'
        )
        parts.append(
            f'<line x1="{PAD_LEFT + 140}" y1="{ly}" x2="{PAD_LEFT + 166}" y2="{ly}" '
            f'stroke="{UPPER_COLOR}" stroke-width="2.2"/>'
        )
        parts.append(
            f'<text x="{PAD_LEFT + 172}" y="{ly + 4}" font-size="11">upper d + 2</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

"""SVG rendering of the Main Graph with parabola overlays, and table export.

Output is plain text assembled by hand so that identical inputs give
identical bytes; every float is written with a fixed number of decimals.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .dvalues import d_of, d_prime_of
from .parabolas import DownParabola, Orientation, UpParabola, anchor_of
from .triples import Region, Triple, enumerate_ppts, plot_points

DEFAULT_COLORS = {
    "below": "red",
    "above": "black",
    "up_curve": "seagreen",
    "down_curve": "orange",
    "left_curve": "darkblue",
}

TABLE_FIELDS = ("a", "b", "c", "d", "d_prime", "a1", "d0", "t")


@dataclass
class PlotConfig:
    max_leg: int
    canvas_px: int = 1000
    point_radius_px: float = 1.0
    overlay_up: Sequence[int] = ()
    overlay_down: Sequence[tuple[int, int]] = ()
    draw_diagonal: bool = True
    colors: dict = field(default_factory=lambda: dict(DEFAULT_COLORS))

    def __post_init__(self):
        if self.max_leg < 4:
            raise ValueError(f"max_leg must be >= 4, got {self.max_leg}")
        if self.canvas_px < 100:
            raise ValueError(f"canvas_px must be >= 100, got {self.canvas_px}")
        self.colors = {**DEFAULT_COLORS, **self.colors}

    @property
    def scale(self) -> float:
        return self.canvas_px / self.max_leg

    def to_pixel(self, x: float, y: float) -> tuple[float, float]:
        s = self.scale
        return x * s, self.canvas_px - y * s


def _num(v: float) -> str:
    out = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if out == "-0" else out


def _axis_samples(cfg: PlotConfig, A: float, C: float) -> list[tuple[float, float]]:
    """Samples (u, v) of v = A u^2 + C for u >= 0 within [0, max_leg]^2.

    One sample per pixel column along u, plus the exact entry and exit
    points where the curve crosses the viewport edge.
    """
    L = cfg.max_leg
    step = L / cfg.canvas_px

    def inside(v):
        return 0.0 <= v <= L

    # u range where 0 <= v <= L, from the monotone branch u >= 0
    bounds = []
    for edge in (0.0, float(L)):
        r = (edge - C) / A
        if r >= 0:
            bounds.append(math.sqrt(r))
    if inside(C):
        bounds.append(0.0)
    if not bounds:
        return []
    lo, hi = min(bounds), min(max(bounds), float(L))
    if lo > L:
        return []
    us = [lo]
    k = math.floor(lo / step) + 1
    while k * step < hi:
        us.append(k * step)
        k += 1
    us.append(hi)
    return [(u, A * u * u + C) for u in us]


def curve_polyline(cfg: PlotConfig, p) -> list[tuple[float, float]]:
    """Pixel-space polyline approximating parabola ``p`` inside the viewport."""
    A, C = (float(q) for q in p.coefficients)
    pts = []
    for u, v in _axis_samples(cfg, A, C):
        x, y = (u, v) if p.orientation.vertical_axis else (v, u)
        pts.append(cfg.to_pixel(x, y))
    return pts


def _polyline_element(points, color: str, kind: str) -> str:
    coords = " ".join(f"{_num(x)},{_num(y)}" for x, y in points)
    return (f'<polyline class="{kind}" points="{coords}" fill="none" '
            f'stroke="{color}" stroke-width="1"/>')


def render_svg(cfg: PlotConfig, triples: Iterable[Triple] | None = None) -> str:
    """The Main Graph for ``cfg`` as an SVG 1.1 document.

    ``triples`` defaults to ``enumerate_ppts(cfg.max_leg)``; passing them in
    lets callers reuse an enumeration.
    """
    if triples is None:
        triples = enumerate_ppts(cfg.max_leg)
    size = cfg.canvas_px
    col = cfg.colors
    r = _num(cfg.point_radius_px)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
    ]
    if cfg.draw_diagonal:
        out.append(f'<line class="diagonal" x1="0" y1="{size}" x2="{size}" y2="0" '
                   f'stroke="gray" stroke-width="0.5"/>')
    for d in cfg.overlay_up:
        for orient in (Orientation.UP, Orientation.RIGHT):
            pts = curve_polyline(cfg, UpParabola(d, orient))
            if len(pts) > 1:
                out.append(_polyline_element(pts, col["up_curve"], f"curve-{orient.value}"))
    for a1, d0 in cfg.overlay_down:
        for orient, key in ((Orientation.DOWN, "down_curve"), (Orientation.LEFT, "left_curve")):
            pts = curve_polyline(cfg, DownParabola(a1, d0, orient))
            if len(pts) > 1:
                out.append(_polyline_element(pts, col[key], f"curve-{orient.value}"))
    for pt in plot_points(triples):
        px, py = cfg.to_pixel(pt.x, pt.y)
        fill = col["below"] if pt.region is Region.BELOW else col["above"]
        out.append(f'<circle class="ppt {pt.region.value}" cx="{_num(px)}" cy="{_num(py)}" '
                   f'r="{r}" fill="{fill}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def table_rows(triples: Iterable[Triple]) -> list[dict]:
    """Classification of each triple's below-diagonal point (a, b)."""
    rows = []
    for t in triples:
        anc = anchor_of((t.a, t.b), t.c)
        rows.append({
            "a": t.a, "b": t.b, "c": t.c,
            "d": d_of(t), "d_prime": d_prime_of(t),
            "a1": anc.a1, "d0": anc.d0, "t": anc.t,
        })
    return rows


def export_table(max_leg: int, format: str = "csv", triples: Iterable[Triple] | None = None) -> str:
    if triples is None:
        triples = enumerate_ppts(max_leg)
    rows = table_rows(sorted(triples))
    if format == "jsonl":
        return "".join(json.dumps(row) + "\n" for row in rows)
    if format != "csv":
        raise ValueError(f"unknown table format {format!r}")
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=TABLE_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()

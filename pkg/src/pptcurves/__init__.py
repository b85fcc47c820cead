"""Exact arithmetic for primitive Pythagorean triples and the parabola
families that organise their plot (the "Main Graph")."""

from .dvalues import (
    ClaimReport,
    allowable_sequence,
    d_of,
    d_prime_of,
    is_allowable,
    verify_d_claim,
)
from .parabolas import (
    Anchor,
    DownParabola,
    Orientation,
    UpParabola,
    anchor_of,
    classify_point,
    down_contains,
    down_parabola_of,
    down_points,
    family_d1,
    family_d2,
    geometry_of,
    slopes_at,
    up_contains,
)
from .plot import PlotConfig, export_table, render_svg
from .triples import (
    DomainError,
    PlotPoint,
    Region,
    Triple,
    enumerate_ppts,
    enumerate_ppts_oracle,
    is_primitive,
    is_pythagorean,
    plot_points,
)

__version__ = "0.1.0"

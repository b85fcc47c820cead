# %% [markdown]
# # The Main Graph
#
# All PPT points with legs below 10,000, red for (a, b) and black for the
# reflection (b, a), with a few parabolas of each family drawn over them.
# Usage: python 06_main_graph.py [OUTPUT_DIR]

# %%
import sys
from pathlib import Path

from pptcurves import PlotConfig, enumerate_ppts, render_svg

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
out_dir.mkdir(parents=True, exist_ok=True)

# %%
cfg = PlotConfig(max_leg=10000, canvas_px=1000, point_radius_px=0.6)
svg = render_svg(cfg)
(out_dir / "main_graph.svg").write_text(svg)
print(len(enumerate_ppts(10000)), "triples,", svg.count("<circle "), "points")

# %% [markdown]
# A zoom into the lower-left corner with the d = 1, 2, 8, 9 curves and the
# downward curves anchored at 13, 20 and 28.

# %%
zoom = PlotConfig(max_leg=300, canvas_px=900, point_radius_px=2.5,
                  overlay_up=[1, 2, 8, 9], overlay_down=[(13, 1), (20, 2), (28, 8)])
(out_dir / "corner.svg").write_text(render_svg(zoom))
print("wrote", out_dir / "main_graph.svg", "and", out_dir / "corner.svg")

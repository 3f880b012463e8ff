"""Render one toy image under every weather category and intensity.

Produces demos/output/weather_grid.png: rows are the 8 degradation
categories (plus clean on top), columns the 3 intensity levels. Rerun it
with a different seed to see how the seeded randomness moves streaks and
flakes around while everything stays reproducible.
"""

from pathlib import Path

import numpy as np

from _toy import toy_image
from wxbench.raster import ImageBuffer, save_png
from wxbench.seeding import derive_seed
from wxbench.synth import degrade
from wxbench.weather import LEVELS, NOISE_CLASSES, WeatherSpec

OUT = Path(__file__).parent / "output"
SEED = 42

image = toy_image(seed=7)
rows = [np.concatenate([image.data] * len(LEVELS), axis=1)]  # clean row
for cls in NOISE_CLASSES:
    tiles = []
    for level in LEVELS:
        spec = WeatherSpec(cls, level, derive_seed(SEED, "demo", cls.value, level))
        tiles.append(degrade(image, spec).data)
    rows.append(np.concatenate(tiles, axis=1))

grid = np.concatenate(rows, axis=0)
save_png(ImageBuffer(grid), OUT / "weather_grid.png")
print(f"wrote {OUT / 'weather_grid.png'}")
print(f"rows: clean + {', '.join(c.value for c in NOISE_CLASSES)}; columns: levels {LEVELS}")

"""Reference values and known misprints, shipped as ``data/errata.json``.

Golden tests read the corrected values from here and assert the printed
variants fail, so every mismatch with the published tables is deliberate.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

__all__ = ["load_errata"]


@lru_cache(maxsize=1)
def load_errata() -> dict:
    text = resources.files("twobridge").joinpath("data/errata.json").read_text(encoding="ascii")
    return json.loads(text)

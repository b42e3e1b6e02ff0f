"""Reference tables of known generator data, loaded from a JSON file.

The data is transcribed ground truth used as golden values by the
verification harness; it is never computed at runtime.  The bundled
file can be overridden through the ORBITLAB_DATA environment variable.
"""

from __future__ import annotations

import json
import os
from functools import lru_cache
from importlib import resources

from .errors import NotTabulated, UnsupportedOrder
from .repring import Character
from .threshold import PipelineConfig

__all__ = [
    "load_reference_data",
    "generator_dimensions",
    "generator_character",
    "tabulated_characters",
    "sextic_generator_column",
    "char_p_quintic_dimensions",
    "char_p_quintic_primes",
    "pipeline_preset",
    "orbit_degree",
    "supported_orders",
]

_ENV_VAR = "ORBITLAB_DATA"


@lru_cache(maxsize=4)
def _load(path_key: str | None) -> dict:
    if path_key:
        with open(path_key, "r", encoding="utf-8") as handle:
            return json.load(handle)
    with resources.files("orbitlab.data").joinpath("reference_data.json").open(
        "r", encoding="utf-8"
    ) as handle:
        return json.load(handle)


def load_reference_data(path: str | None = None) -> dict:
    """Raw reference document; path, then ORBITLAB_DATA, then the bundle."""
    return _load(path or os.environ.get(_ENV_VAR) or None)


def supported_orders() -> list[int]:
    return sorted(int(d) for d in load_reference_data()["generator_tables"])


def _table(d: int) -> dict:
    tables = load_reference_data()["generator_tables"]
    key = str(d)
    if key not in tables:
        raise UnsupportedOrder(f"no tabulated data for order {d}")
    return tables[key]


def generator_dimensions(d: int) -> dict[int, int]:
    """Tabulated generator dimensions m -> beta_m for 4 <= d <= 10."""
    return {int(m): int(b) for m, b in _table(d)["betas"].items()}


def generator_character(d: int, m: int) -> Character:
    """Tabulated generator character in degree m."""
    chars = _table(d)["characters"]
    key = str(m)
    if key not in chars:
        raise NotTabulated(f"no tabulated character for order {d}, degree {m}")
    return Character.from_pairs(chars[key])


def tabulated_characters(d: int) -> dict[int, Character]:
    return {
        int(m): Character.from_pairs(pairs)
        for m, pairs in _table(d)["characters"].items()
    }


def sextic_generator_column() -> dict[int, int]:
    """Generator column of the order-6 resolution table."""
    data = load_reference_data()["sextic_generator_column"]["betas"]
    return {int(m): int(b) for m, b in data.items()}


def char_p_quintic_primes() -> list[int]:
    doc = load_reference_data()["char_p_quintic"]
    return sorted(int(p) for p in doc if p.isdigit())


def char_p_quintic_dimensions(p: int) -> tuple[dict[int, int], int]:
    """Order-5 generator dimensions over F_p, with the listed top degree.

    Primes recorded as matching characteristic zero return the
    characteristic-zero table.
    """
    doc = load_reference_data()["char_p_quintic"]
    key = str(p)
    if key not in doc:
        raise NotTabulated(f"no characteristic-{p} data")
    entry = doc[key]
    if entry == "match_char_zero":
        betas = generator_dimensions(5)
        return betas, max(betas)
    return (
        {int(m): int(b) for m, b in entry["betas"].items()},
        int(entry["top_degree"]),
    )


def pipeline_preset(d: int, max_degree: int | None = None) -> PipelineConfig:
    """Pipeline configuration reproducing the tabulated characters.

    Uses the tabulated betas plus the documented suppression (order 6,
    degree 10) and corrections for the invisible degrees of orders 7
    and 10.
    """
    betas = generator_dimensions(d)
    presets = load_reference_data()["pipeline_presets"].get(str(d), {})
    if not isinstance(presets, dict):
        presets = {}
    return PipelineConfig(
        d=d,
        betas=betas,
        suppressed=frozenset(int(m) for m in presets.get("suppressed", [])),
        corrections={
            int(m): Character.from_pairs(pairs)
            for m, pairs in presets.get("corrections", {}).items()
        },
        max_degree=max_degree,
    )


def orbit_degree(d: int) -> int:
    """Degree of the orbit closure: 6 for quartics, d(d-1)(d-2) above."""
    if d < 4:
        raise UnsupportedOrder("orbit closures of dimension three need d >= 4")
    if d == 4:
        return 6
    return d * (d - 1) * (d - 2)

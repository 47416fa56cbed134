"""Exact Futaki invariants of almost Fano varieties by torus localization."""

from pathlib import Path

from .ci import CISpec, ci_futaki_closed, ci_futaki_direct
from .exactalg import CharForm, FactoredRational, MultiPoly, PrimitiveForm
from .localize import (
    FixedPointDatum,
    UnknownRestriction,
    futaki_from_points,
    residue_sum,
    solve_missing_point,
)
from .polytope import barycenter_cross_check, moment_integral
from .toric import Fan, cone_data, toric_degree, toric_futaki, validate_fan

__version__ = "0.1.0"

DATA_DIR = Path(__file__).parent / "data"


def data_path(*parts: str) -> Path:
    """Path of a bundled input file, e.g. ``data_path("fans", "ex21.json")``."""
    return DATA_DIR.joinpath(*parts)

__all__ = [
    "CISpec", "ci_futaki_closed", "ci_futaki_direct",
    "CharForm", "FactoredRational", "MultiPoly", "PrimitiveForm",
    "FixedPointDatum", "UnknownRestriction", "futaki_from_points", "residue_sum", "solve_missing_point",
    "barycenter_cross_check", "moment_integral",
    "Fan", "cone_data", "toric_degree", "toric_futaki", "validate_fan",
    "DATA_DIR", "data_path",
]

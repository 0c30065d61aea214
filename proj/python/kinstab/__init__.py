"""Exact K-instability certificates for del Pezzo hypersurfaces in weighted P^3.

Thin convenience layer over the C++ extension: rationals cross the boundary
as "p/q" strings and are exposed here as fractions.Fraction; reports cross
as JSON and are exposed as dicts.
"""

import json as _json
import os as _os
from fractions import Fraction

from . import _core
from ._core import EngineError, __version__, h0_count, normalize_quotient, validate_surface

__all__ = [
    "EngineError",
    "Fraction",
    "__version__",
    "antican_square",
    "export_preset",
    "h0_count",
    "hyperplane_square",
    "is_negative_definite",
    "normalize_quotient",
    "run_preset",
    "run_scenario",
    "solve",
    "sweep",
    "validate_surface",
]


def _frac(text):
    return Fraction(text)


def _gram(rows):
    return [[str(x) for x in row] for row in rows]


def hyperplane_square(weights, degree):
    """O(1)^2 = d / (a0 a1 a2 a3) as a Fraction."""
    return _frac(_core.hyperplane_square(list(weights), degree))


def antican_square(weights, degree):
    """(-K)^2 = I^2 d / (a0 a1 a2 a3) as a Fraction."""
    return _frac(_core.antican_square(list(weights), degree))


def solve(gram, rhs):
    """Exact solution of the symmetric system gram @ x = rhs."""
    return [_frac(x) for x in _core.solve(_gram(gram), [str(x) for x in rhs])]


def is_negative_definite(gram):
    return _core.is_negative_definite(_gram(gram))


def run_preset(name, n=-1, m=-1, allow_boundary=False):
    """Full report for a shipped preset, as a dict of exact strings."""
    return _json.loads(_core.run_preset_json(name, n, m, allow_boundary))


def run_scenario(text_or_path):
    """Full report for a scenario given as JSON text or a file path."""
    if _os.path.exists(text_or_path):
        with open(text_or_path, "rb") as handle:
            text = handle.read().decode()
        return _json.loads(_core.run_scenario_json(text, text_or_path))
    return _json.loads(_core.run_scenario_json(text_or_path, "scenario"))


def export_preset(name, n=-1, m=-1, allow_boundary=False):
    """Scenario dict for a shipped preset (what `export-preset` writes)."""
    return _json.loads(_core.preset_scenario_json(name, n, m, allow_boundary))


def sweep(family, n=(0, 10), m=(0, 10), allow_boundary=False):
    """Sweep a family over inclusive parameter ranges; returns a list of rows."""
    n_lo, n_hi = (n, n) if isinstance(n, int) else n
    m_lo, m_hi = (m, m) if isinstance(m, int) else m
    return _json.loads(_core.sweep_json(family, n_lo, n_hi, m_lo, m_hi, allow_boundary))


def beta(report):
    """The exact beta value of a beta-mode report, as a Fraction."""
    return _frac(report["beta"]["beta"])


def delta_upper_bound(report):
    """The exact delta upper bound of an alpha-mode report, as a Fraction."""
    return _frac(report["alpha"]["delta_ub"])

"""Curated problem documents.

Each entry is a problem document (see :mod:`equindex.document`).  The
expected indices are not stored here; tests compute them independently.
"""

from __future__ import annotations

import copy
import json
from pathlib import Path

from .document import problem_from_dict
from .equivariant import IndexProblem


def _trivial_vars(*names):
    return [{"name": n, "weight": []} for n in names]


def smooth_power(m: int) -> dict:
    """Trivial group, one variable, the form ``x^m dx``."""
    return {
        "group": {"orders": []},
        "variables": _trivial_vars("x"),
        "equations": [],
        "profile": [{"character": [], "k": 1, "forms": [{"x": "x" if m == 1 else f"x^{m}"}]}],
    }


def a1_curve(form: dict) -> dict:
    """The node ``x^2 + y^2 = 0`` with one 1-form."""
    return {
        "group": {"orders": []},
        "variables": _trivial_vars("x", "y"),
        "equations": [{"character": [], "poly": "x^2 + y^2"}],
        "profile": [{"character": [], "k": 1, "forms": [form]}],
    }


def _z2_surface(pair: dict) -> dict:
    return {
        "group": {"orders": [2]},
        "variables": [{"name": "x", "weight": [0]}, {"name": "y", "weight": [0]},
                      {"name": "z", "weight": [1]}],
        "equations": [{"character": [0], "poly": "x^2 + y^2 + z^2"}],
        "profile": [pair],
    }


CORPUS: dict[str, dict] = {
    "smooth_x_dx": smooth_power(1),
    "smooth_x2_dx": smooth_power(2),
    "smooth_x3_dx": smooth_power(3),
    "smooth_x5_dx": smooth_power(5),
    "a1_dx": a1_curve({"x": "1"}),
    "a1_xdx_minus_ydy": a1_curve({"x": "x", "y": "-y"}),
    "z2_sign_x_dz": _z2_surface({"character": [1], "k": 1, "forms": [{"z": "x"}]}),
    "z2_trivial_xdx_minus_ydy": _z2_surface({"character": [0], "k": 1, "forms": [{"x": "x", "y": "-y"}]}),
    "z2_smooth_x_dy": {
        "group": {"orders": [2]},
        "variables": [{"name": "x", "weight": [0]}, {"name": "y", "weight": [1]}],
        "equations": [],
        "profile": [{"character": [1], "k": 1, "forms": [{"y": "x"}]}],
    },
    "cusp_dx": {
        "group": {"orders": []},
        "variables": _trivial_vars("x", "y"),
        "equations": [{"character": [], "poly": "x^3 - y^2"}],
        "profile": [{"character": [], "k": 1, "forms": [{"x": "1"}]}],
    },
    # surface A1: a single pair with k = 2 uses one form and 2 x 2 minors of a 3 x 2 matrix
    "a1_surface_k2": {
        "group": {"orders": []},
        "variables": _trivial_vars("x", "y", "z"),
        "equations": [{"character": [], "poly": "x^2 + y^2 + z^2"}],
        "profile": [{"character": [], "k": 2, "forms": [{"x": "x", "y": "2*y", "z": "3*z"}]}],
    },
    # surface A1 with two k = 1 pairs: two 3 x 3 determinants
    "a1_surface_k1k1": {
        "group": {"orders": []},
        "variables": _trivial_vars("x", "y", "z"),
        "equations": [{"character": [], "poly": "x^2 + y^2 + z^2"}],
        "profile": [
            {"character": [], "k": 1, "forms": [{"x": "1"}, {"y": "x", "z": "y"}]},
            {"character": [], "k": 1, "forms": [{"y": "1"}, {"x": "z", "z": "x"}]},
        ],
    },
    "z3_threefold": {
        "group": {"orders": [3]},
        "variables": [{"name": "x", "weight": [0]}, {"name": "y", "weight": [0]},
                      {"name": "u", "weight": [1]}, {"name": "v", "weight": [2]}],
        "equations": [{"character": [0], "poly": "x^2 + y^3 + u*v"}],
        "profile": [{"character": [1], "k": 1, "forms": [{"u": "x + y^2", "v": "v"}]}],
    },
    "z2_sign_equation": {
        "group": {"orders": [2]},
        "variables": [{"name": "x", "weight": [0]}, {"name": "y", "weight": [0]},
                      {"name": "z", "weight": [1]}, {"name": "w", "weight": [1]}],
        "equations": [{"character": [0], "poly": "x^2 - y^2 + z^2 + w^2"},
                      {"character": [1], "poly": "x*z + y*w"}],
        "profile": [{"character": [1], "k": 1, "forms": [{"z": "y", "w": "-x"}]}],
    },
}

# a constant shift of (x, y + x*y^2) picks up a second solution from infinity
ESCAPE_EXAMPLE: dict = {
    "group": {"orders": []},
    "variables": _trivial_vars("x", "y"),
    "equations": [],
    "profile": [{"character": [], "k": 2, "forms": [{"x": "x", "y": "y + x*y^2"}]}],
}

# non-isolated: the form is the differential of the equation itself
DF_EXAMPLE: dict = a1_curve({"x": "2*x", "y": "2*y"})


def document(name: str) -> dict:
    if name == "escape":
        return copy.deepcopy(ESCAPE_EXAMPLE)
    if name == "df":
        return copy.deepcopy(DF_EXAMPLE)
    return copy.deepcopy(CORPUS[name])


def problem(name: str) -> IndexProblem:
    return problem_from_dict(document(name))


def write_documents(directory) -> list[Path]:
    """Write every curated document as ``<name>.json``; returns the paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name in [*CORPUS, "escape", "df"]:
        path = directory / f"{name}.json"
        path.write_text(json.dumps(document(name), indent=2) + "\n")
        paths.append(path)
    return paths

"""Exact DN operators, modular variations and their recovery."""

import json as _json
import os as _os
from pathlib import Path as _Path

_packaged = _Path(__file__).with_name("data")
if _packaged.is_dir():
    _os.environ.setdefault("DNMOD_DATA_DIR", str(_packaged))

from . import _core
from ._core import (
    Error,
    adjoint,
    fit_d3,
    necessary_pairs,
    nilpotence,
    normalize,
    phi_t,
    published_pairs,
    reversion,
)

__all__ = [
    "Error",
    "adjoint",
    "dn_build",
    "fit_d3",
    "necessary_pairs",
    "nilpotence",
    "normalize",
    "phi_t",
    "published_pairs",
    "recover",
    "reversion",
    "verify",
]


def dn_build(matrix):
    """Operator text for a matrix given as {"N": n, "a": {"ij": "p/q", ...}}."""
    return _core.dn_build(_json.dumps(matrix))


def recover(level, index, terms=48):
    """Returns {"matrix": ..., "operator": ...} recovered from the modular data."""
    return _json.loads(_core.recover(level, index, terms))


def verify(pairs=(), terms=48, jobs=1, nilpotence=True):
    """Runs every check on the given pairs, or on all catalog pairs when empty."""
    return _json.loads(_core.verify(list(pairs), terms, jobs, nilpotence))

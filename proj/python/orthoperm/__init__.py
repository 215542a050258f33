"""Submodule structure of orthogonal-group permutation modules over small prime fields."""

import json

from ._orthoperm import (
    FatalInconsistency,
    UnsupportedConfig,
    ell_class,
    expected_factor_dims,
    point_count,
)
from . import _orthoperm

__all__ = [
    "FatalInconsistency",
    "UnsupportedConfig",
    "dims",
    "ell_class",
    "expected_factor_dims",
    "params",
    "point_count",
    "verify",
]


def verify(family, m, ell, kappas=(1, -1), seed=1, order_check=False, lattice_enum=False, rational=True):
    """Run every check for one configuration and return the report as a dict."""
    return json.loads(
        _orthoperm.verify_json(family, m, ell, list(kappas), seed, order_check, lattice_enum, rational)
    )


def params(family, m, seed=1, order_check=False):
    return json.loads(_orthoperm.params_json(family, m, seed, order_check))


def dims(family, m, ell, seed=1):
    return json.loads(_orthoperm.dims_json(family, m, ell, seed))

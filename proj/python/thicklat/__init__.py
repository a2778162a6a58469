"""Noncrossing partition lattices, thick subcategories and Koszul checks.

Lattice-valued functions return decoded JSON documents with ``count``,
``nodes`` and ``edges`` (cover pairs, lower first).
"""

import json

from . import _core
from ._core import DEFAULT_SIZE_GUARD, SCHEMA_VERSION, Error, ParseError, SizeGuardError

__all__ = [
    "DEFAULT_SIZE_GUARD",
    "SCHEMA_VERSION",
    "Error",
    "ParseError",
    "SizeGuardError",
    "koszul",
    "nc_lattice",
    "spec_functions",
    "thick",
    "tree_module",
    "wide_closure",
]


def nc_lattice(type, orientation=""):
    return json.loads(_core.nc_json(type, orientation))


def thick(type, field=2, orientation="", verify=False):
    return json.loads(_core.thick_json(type, field, orientation, verify))


def spec_functions(type, poset, mode="monotone", orientation="", cap=DEFAULT_SIZE_GUARD):
    return json.loads(_core.functions_json(type, poset, mode, orientation, cap))


def koszul(vars, gens, at, module=None, orientation=""):
    """Homology of K(gens) at a rational point.

    ``gens`` is a list of polynomial strings, ``at`` a string like "0,1/2",
    ``module`` an optional (type, dimension vector) pair.
    """
    module_type, module_dim = module if module is not None else (None, None)
    return json.loads(_core.koszul_json(vars, list(gens), at, module_type, module_dim, orientation))


tree_module = _core.tree_module
wide_closure = _core.wide_closure

"""Equivariant K-homology of the 17 wallpaper groups.

Structured results are returned as the JSON documents of the command-line
tool, decoded into dicts: {"schema_version", "kind", "payload"}.
"""

import json

from . import _kcrystal
from ._kcrystal import DomainError, Error, NotFound, ParseError, schema_version

__all__ = [
    "DomainError", "Error", "NotFound", "ParseError", "schema_version",
    "group_names", "group_spec", "validate", "conjugacy_classes",
    "k_homology", "rational_ranks", "verify", "render_svg",
]


def group_names():
    return list(_kcrystal.group_names())


def group_spec(name):
    return json.loads(_kcrystal.group_spec(name))


def validate(name):
    """Problems found by the cocycle validator; empty when the record is sound."""
    return list(_kcrystal.validate(name))


def conjugacy_classes(name, mode="plane"):
    return json.loads(_kcrystal.conjugacy_classes(name, mode))


def k_homology(name, mode="plane", N=12):
    return json.loads(_kcrystal.k_homology(name, mode, N))


def rational_ranks(name, mode="plane"):
    return tuple(_kcrystal.rational_ranks(name, mode))


def verify(name=None):
    return json.loads(_kcrystal.verify(name or ""))


def render_svg(name, cells=3):
    return _kcrystal.render_svg(name, cells)

"""Exact verification workbench for idempotent classes in matrix algebras.

Matrices are passed as nested lists (entries int or "a/b" strings) or as
JSON literals; results come back as plain dicts.
"""

import json

from . import _idemgeo
from ._idemgeo import ConfigError, DomainError, ParseError, PreconditionError

__all__ = [
    "ConfigError",
    "DomainError",
    "ParseError",
    "PreconditionError",
    "delta_sets",
    "enumerate",
    "is_class_two",
    "run",
    "subcommands",
    "theorem_c",
    "witness",
]


def _literal(s):
    return s if isinstance(s, str) else json.dumps(s)


def subcommands():
    return list(_idemgeo.subcommands())


def run(command, domain="fp", p=5, dim=2, mode=None, samples=1000, t_samples=1000, seed=0, s="", kind="", workers=0):
    """Run one suite and return its report (plus wall_seconds)."""
    return json.loads(
        _idemgeo.run(command, domain, p, dim, mode, samples, t_samples, seed, _literal(s) if s else "", kind, workers)
    )


def enumerate(kind, p=5, dim=2):
    return run("enumerate", domain="fp", p=p, dim=dim, kind=kind)["result"]


def is_class_two(s, domain="q", p=5):
    return _idemgeo.is_class_two(_literal(s), domain, p)


def theorem_c(s, domain="q", p=5, mode="structural"):
    return json.loads(_idemgeo.theorem_c(_literal(s), domain, p, mode))


def witness(s, domain="q", p=5):
    return json.loads(_idemgeo.witness(_literal(s), domain, p))


def delta_sets(p=5, dim=2):
    return json.loads(_idemgeo.delta_sets(p, dim))

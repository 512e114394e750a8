"""Riemann-sum probes for functions into metric vector spaces.

Every command returns the same report the ``metrivec`` CLI prints, decoded
into plain dicts and lists.
"""

import json

from . import _core
from ._core import (
    CapabilityError,
    ConstructionError,
    DomainError,
    Error,
    InvariantError,
    StructuralError,
    UsageError,
    function_grammar,
    metric,
    rational_enumeration,
    space_grammar,
)

__version__ = _core.__version__

_DEFAULTS = json.loads(_core.default_config())


def run(command, **options):
    """Run a CLI command with config fields as keyword arguments.

    Returns the wrapped report: ``{"command", "config", "seed", "version", "report"}``.
    """
    config = dict(_DEFAULTS, command=command)
    for key, value in options.items():
        if key not in config:
            raise UsageError(f"unknown option {key!r}")
        config[key] = value
    if isinstance(config["points"], str):
        config["points"] = [p for p in config["points"].split(",") if p]
    report, _ = _core.execute(json.dumps(config))
    return json.loads(report)


def run_csv(command, **options):
    """Like :func:`run` but returns the CSV table instead."""
    config = dict(_DEFAULTS, command=command, **options)
    return _core.execute(json.dumps(config))[1]


def integrate(fn, space="", **options):
    return run("integrate", fn=fn, space=space, **options)["report"]


def oscillate(fn, space="", **options):
    return run("oscillate", fn=fn, space=space, **options)["report"]


def darboux(fn, space="", **options):
    return run("darboux", fn=fn, space=space, **options)["report"]


def adversary(fn, space="", **options):
    return run("adversary", fn=fn, space=space, **options)["report"]


def ftc(fn, space="", **options):
    return run("ftc", fn=fn, space=space, **options)["report"]


def spacecheck(space, **options):
    return run("spacecheck", space=space, **options)["report"]


def atlas(**options):
    return run("atlas", **options)["report"]


__all__ = [
    "CapabilityError",
    "ConstructionError",
    "DomainError",
    "Error",
    "InvariantError",
    "StructuralError",
    "UsageError",
    "adversary",
    "atlas",
    "darboux",
    "ftc",
    "function_grammar",
    "integrate",
    "metric",
    "oscillate",
    "rational_enumeration",
    "run",
    "run_csv",
    "space_grammar",
    "spacecheck",
]

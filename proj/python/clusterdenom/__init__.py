"""Python bindings for the clusterdenom library.

Matrices are lists of rows; every index is 0-based. Reports are the same
JSON documents the command line tool writes, returned as dicts.
"""

import json

from . import _core
from ._core import (
    BudgetExhausted,
    Error,
    InvalidArgument,
    InvalidMatrix,
    is_finite_type,
    mutate,
    mutation_classes,
    run_cli,
    standard_matrix,
    symmetrizer,
    triangulation_count,
    version,
)

__all__ = [
    "BudgetExhausted",
    "Error",
    "InvalidArgument",
    "InvalidMatrix",
    "crosscheck",
    "enumerate",
    "injectivity",
    "is_finite_type",
    "mutate",
    "mutation_classes",
    "run_cli",
    "standard_matrix",
    "symmetrizer",
    "tagged_arcs",
    "triangulation_count",
    "verify",
    "version",
]


def verify(matrix, *, extended=False, jobs=1, max_seconds=None):
    """Run the verifier on a type name such as "F4" or a list of rows."""
    return json.loads(_core.verify_json(matrix, extended, jobs, max_seconds))


def enumerate(matrix, *, extended=False):  # noqa: A001
    return json.loads(_core.enumerate_json(matrix, extended))


def tagged_arcs(n):
    return json.loads(_core.tagged_arcs_json(n))


def injectivity(n, bound, sample=None, seed=0x5EED):
    return json.loads(_core.injectivity_json(n, bound, sample, seed))


def crosscheck(n, bound=2):
    return json.loads(_core.crosscheck_json(n, bound))

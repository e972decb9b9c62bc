"""Decide whether a closed oriented 3-manifold is dominated by a product
Sigma x S^1 or by a non-trivial circle bundle, with witnesses."""

import json

from ._core import (
    ConsistencyError,
    InputError,
    OracleBoundError,
    free_cover_rank,
    normalize,
    rank_oracle,
    run_cli,
)
from . import _core

__all__ = [
    "ConsistencyError",
    "InputError",
    "OracleBoundError",
    "classify",
    "crosscheck",
    "decide",
    "free_cover_rank",
    "normalize",
    "rank_oracle",
    "run_cli",
    "schema",
    "verify",
]


def decide(query, description):
    """Report for one query: "product", "ntbundle", "anybundle" or "presentable"."""
    return json.loads(_core.decide_json(query, description))


def classify(description):
    return json.loads(_core.classify_json(description))


def crosscheck(description):
    return json.loads(_core.crosscheck_json(description))


def schema(kind, n=0):
    return json.loads(_core.schema_json(kind, n))


def verify(schema_doc):
    """Verify a schema given as a dict (as returned by schema()) or JSON text."""
    text = schema_doc if isinstance(schema_doc, str) else json.dumps(schema_doc)
    return json.loads(_core.verify_json(text))

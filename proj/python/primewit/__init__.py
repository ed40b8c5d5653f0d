"""Prime graphs: primality, chains, family generators and witness extraction."""

import json

from ._core import (
    Graph,
    Graph6Error,
    are_isomorphic,
    bounds,
    chain_induces_prime,
    find_chain,
    find_homogeneous_set,
    find_induced_copy,
    generate,
    is_chain,
    is_homogeneous_set,
    is_prime,
    trim_chain_to_prime,
)
from . import _core


def unavoidable_witness(graph, n, fast_path=True):
    """Witness, prime chain, insufficient-size report or non-prime certificate, as a dict."""
    return json.loads(_core._unavoidable_witness_json(graph, n, fast_path))


def validate_witness(graph, witness):
    """Check a witness dict (as returned by unavoidable_witness) against graph."""
    return _core._validate_witness_json(graph, json.dumps(witness))


__all__ = [
    "Graph",
    "Graph6Error",
    "are_isomorphic",
    "bounds",
    "chain_induces_prime",
    "find_chain",
    "find_homogeneous_set",
    "find_induced_copy",
    "generate",
    "is_chain",
    "is_homogeneous_set",
    "is_prime",
    "trim_chain_to_prime",
    "unavoidable_witness",
    "validate_witness",
]

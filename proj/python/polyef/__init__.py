"""Exact extended formulations for subgraph, spanning-forest and count-matroid polytopes."""

import json

from ._polyef import (
    Formulation,
    Graph,
    PolyefError,
    construct,
    forests,
    formulation_names,
    from_json,
    independent_sets,
    maximize,
    spanning_forests,
    suite_names,
)
from ._polyef import run_suite as _run_suite


def verify(suite, graph, m=None, ell=None, seed=0, trials=50):
    """Run a named verification suite and return the report as a dict."""
    return json.loads(_run_suite(suite, graph, m=m, ell=ell, seed=seed, trials=trials))


__all__ = [
    "Formulation",
    "Graph",
    "PolyefError",
    "construct",
    "forests",
    "formulation_names",
    "from_json",
    "independent_sets",
    "maximize",
    "spanning_forests",
    "suite_names",
    "verify",
]

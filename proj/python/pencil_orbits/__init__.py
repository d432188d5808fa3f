"""Pencils of plane conics: exact orbit classification and Schubert calculus.

Thin convenience layer over the C++ extension module. The heavy lifting
(exact rational arithmetic, the Chow ring of G(1,5), the classifier) lives
in :mod:`pencil_orbits._pencils`; this wrapper converts between Python
dicts and the JSON wire format used by the CLI.
"""

from __future__ import annotations

import json
from typing import Any

from pencil_orbits._pencils import (
    chern_principal_parts,
    chern_sym3,
    classify_json,
    expand_class,
    schubert_degree,
    table_json,
    verify_json,
)

__all__ = [
    "chern_principal_parts",
    "chern_sym3",
    "classify",
    "classify_json",
    "expand_class",
    "schubert_degree",
    "table",
    "table_json",
    "verify",
    "verify_json",
]


def classify(pencil: dict[str, Any]) -> dict[str, Any]:
    """Classify a pencil given as a dict in the JSON wire format.

    Example::

        classify({
            "Q": ["1", "0", "0", "0", "0", "0"],
            "Qp": ["0", "1", "0", "0", "0", "0"],
            "field": {"type": "Q"},
        })["orbit"]  # -> "O6"
    """
    return json.loads(classify_json(json.dumps(pencil)))


def table() -> dict[str, Any]:
    """Reproduce the orbit-closure class table as a dict."""
    return json.loads(table_json())


def verify(check: str, trials: int = 0, seed: int = 0) -> dict[str, Any]:
    """Run one randomized exact check; returns the trial report as a dict."""
    return json.loads(verify_json(check, trials, seed))

# SPDX-License-Identifier: MIT
"""Calibrated hypergraph states over Galois rings."""

import json as _json

from ._hgs import (  # noqa: F401
    HgsError,
    Hypergraph,
    Ring,
    catalog_names,
    from_marked,
    from_poly,
    from_weighted,
    run_cli,
)


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def load(doc):
    """Calibrated hypergraph from a dict, a JSON string or a file path."""
    if isinstance(doc, str) and not doc.lstrip().startswith("{"):
        with open(doc, encoding="utf-8") as fh:
            doc = fh.read()
    return Hypergraph.from_json(_text(doc))


def convert(doc, kind, xstar=None):
    """Weighted, marked or polynomial input to a calibrated hypergraph."""
    if kind == "weighted":
        return from_weighted(_text(doc))
    if kind == "marked":
        return from_marked(_text(doc), xstar)
    if kind == "poly":
        return from_poly(_text(doc))
    raise ValueError(f"unknown input kind {kind!r}")

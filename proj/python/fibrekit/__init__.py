"""Hilbert coefficients of fiber cones of monomial and semigroup filtrations."""

import json

from ._core import Error, Ideal, ParseError, Ring, canonical_text, run
from ._core import analyze_document as _analyze_document

__all__ = ["Error", "Ideal", "ParseError", "Ring", "analyze", "canonical_text", "run"]


def analyze(text, n_max=None, n_check=None):
    """Analyze an input document and return the structured report as a dict."""
    return json.loads(_analyze_document(text, n_max, n_check))

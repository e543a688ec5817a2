"""chi18 / Sigma140 theta invariants of the E(d)^3 catalog forms and the
existence of optimal and minimal genus-3 curves over finite fields.

Large integers in results are decimal strings, as in the command line tool.
"""

import json

from . import _core
from ._core import (
    DomainError,
    Error,
    PrecisionError,
    RecognitionError,
    UnsupportedError,
)

__all__ = [
    "Session",
    "compute_chi",
    "compute_sigma",
    "decide",
    "tables",
    "catalog",
    "catalog_text",
    "version",
    "Error",
    "UnsupportedError",
    "PrecisionError",
    "RecognitionError",
    "DomainError",
]

__version__ = _core.version()


class Session:
    """Memoizes recognized values across calls; optionally backed by a JSONL cache."""

    def __init__(self, digits=50, guard=15, normalization="lemma-45-raw",
                 embedding="standard", assume_conjecture=False, cache=None):
        self._s = _core.Session(digits, guard, normalization, embedding,
                                assume_conjecture, None if cache is None else str(cache))

    def chi(self, d, form):
        return json.loads(self._s.chi(d, form))

    def sigma(self, d, form):
        return json.loads(self._s.sigma(d, form))

    def decide(self, q):
        return json.loads(self._s.decide(str(q)))

    def tables(self, keys=None):
        """Recompute catalog chi18 values; `keys` is an iterable of (d, form)."""
        return json.loads(self._s.tables(None if keys is None else [tuple(k) for k in keys]))

    @property
    def config(self):
        return json.loads(self._s.config())


def compute_chi(d, form, **options):
    return Session(**options).chi(d, form)


def compute_sigma(d, form, **options):
    return Session(**options).sigma(d, form)


def decide(q, **options):
    return Session(**options).decide(q)


def tables(keys=None, **options):
    return Session(**options).tables(keys)


def catalog():
    """(d, form) keys of the catalog, in order."""
    return [tuple(k) for k in _core.catalog_keys()]


def catalog_text():
    return _core.catalog_text()


def version():
    return _core.version()

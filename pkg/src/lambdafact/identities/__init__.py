"""Umbral evaluation and the exact identity catalogue."""

from .catalogue import (
    CATALOGUE,
    catalogue_ids,
    describe,
    verify,
    verify_default,
    verify_many,
)
from .inverse import KINDS as INVERSE_KINDS, inverse_relation_roundtrip
from .report import IdentityReport
from .umbral import DERANGEMENT_UMBRA, UmbralMoments, derangement_umbra, umbral_eval

__all__ = [
    "CATALOGUE",
    "catalogue_ids",
    "describe",
    "verify",
    "verify_default",
    "verify_many",
    "INVERSE_KINDS",
    "inverse_relation_roundtrip",
    "IdentityReport",
    "DERANGEMENT_UMBRA",
    "UmbralMoments",
    "derangement_umbra",
    "umbral_eval",
]

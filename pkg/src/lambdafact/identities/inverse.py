"""Inverse pairs of binomial-type sequence transforms.

Two transform pairs are provided: the derangement-kernel pair, and the
tree-count pair (indices starting at 1).  Each function applies the forward
transform and then the inverse, returning the recovered sequence; exact
recovery of the input is the correctness property tests rely on.
"""

from __future__ import annotations

from typing import Sequence

from ..sequences import binomial, derangement

KINDS = ("derangement-4.1", "tree-4.4")


def _derangement_roundtrip(a: Sequence[int]) -> list[int]:
    n_max = len(a) - 1
    b = [
        sum(binomial(n, k) * derangement(n - k) * a[k] for k in range(n + 1))
        for n in range(n_max + 1)
    ]
    return [
        sum(binomial(n, k) * (1 + k - n) * b[k] for k in range(n + 1))
        for n in range(n_max + 1)
    ]


def _tree_roundtrip(a: Sequence[int]) -> list[int]:
    # Sequences are indexed from 1: a[0] corresponds to a_1.
    n_max = len(a)
    av = {k: a[k - 1] for k in range(1, n_max + 1)}
    b = {
        n: sum(binomial(n - 1, k - 1) * n ** (n - k) * av[k] for k in range(1, n + 1))
        for n in range(1, n_max + 1)
    }
    return [
        sum(
            (-1) ** (n - k) * binomial(n, k) * k ** (n - k) * b[k]
            for k in range(1, n + 1)
        )
        for n in range(1, n_max + 1)
    ]


def inverse_relation_roundtrip(kind: str, a: Sequence[int]) -> list[int]:
    """Apply a forward transform and its inverse; returns the recovered list."""
    if kind == "derangement-4.1":
        return _derangement_roundtrip(a)
    if kind == "tree-4.4":
        return _tree_roundtrip(a)
    raise ValueError(f"unknown inverse-relation kind {kind!r}; expected one of {KINDS}")

"""Closed-form extremal bounds, evaluated exactly."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .graphs import erdos_bound, erdos_h

__all__ = ["eg_hypergraph_bound", "eg_graph_bound", "clique_bound", "dense_degree_rhs",
           "erdos_h", "erdos_bound", "exact"]


def exact(x: Fraction) -> int | Fraction:
    """Collapse integral fractions to ``int``."""
    return int(x) if x.denominator == 1 else x


def _check(n: int, k: int) -> None:
    if k < 3 or n < k:
        raise ValueError(f"need n >= k >= 3, got n={n}, k={k}")


def eg_hypergraph_bound(n: int, k: int) -> int | Fraction:
    """Most edges of an n-vertex hypergraph without a Berge cycle of length ``>= k``."""
    _check(n, k)
    return exact(2 + Fraction(n - 1, k - 2) * (2 ** (k - 1) - 2))


def eg_graph_bound(n: int, k: int) -> int | Fraction:
    """Most edges of an n-vertex graph with circumference below ``k``."""
    _check(n, k)
    return exact(Fraction(n - 1, k - 2) * comb(k - 1, 2))


def clique_bound(n: int, k: int, r: int) -> int | Fraction:
    """Most ``r``-cliques in an n-vertex graph with circumference below ``k``."""
    _check(n, k)
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    return exact(Fraction(n - 1, k - 2) * comb(k - 1, r))


def dense_degree_rhs(n: int, d: int) -> int:
    """Upper bound on a vertex degree when the Berge graph has minimum degree ``d``.

    ``2^d - C(d+1, 2) + e(n, d)``; it falls below the dense threshold for
    ``n >= 15`` and ``d < (n-1)//2``.
    """
    return 2 ** d - comb(d + 1, 2) + erdos_bound(n, d)

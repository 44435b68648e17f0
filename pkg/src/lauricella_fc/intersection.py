"""Closed-form intersection numbers of twisted cycles and cocycles.

The 2^m cycles indexed by subsets of {1..m} pair diagonally against their
duals, with explicit diagonal entries in the exponentials (alpha, beta,
gamma). The standard cocycle pairs with itself through a rational sum over
flags: nested chains I^(1) < I^(2) < ... < I^(m-1) of subsets with
|I^(r)| = r, of which there are m!.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .core import ParameterSet, SubsetIndex, exponential_parameters
from .errors import DegenerateParameterError

# exactly-integral exponents leave residues ~1e-16 in the exponentials,
# while validated parameters stay >= 2*pi*tol_int ~ 6e-6 away
_ZERO_GUARD = 1e-12


@dataclass(frozen=True)
class HomologyIntersectionMatrix:
    """2^m x 2^m cycle intersection matrix, indexed by subset rank."""

    m: int
    entries: np.ndarray

    @property
    def determinant(self) -> complex:
        # exact product of the diagonal; the matrix is diagonal by construction
        return complex(np.prod(np.diag(self.entries)))


def ih_self(p: ParameterSet, I: SubsetIndex) -> complex:
    """Self-intersection number of the subset-I cycle against its dual.

    (-1)^r * prod_q gamma_{j_q} * (alpha - prod_p gamma_{i_p})
           * (beta - prod_p gamma_{i_p})
    / (prod_k (gamma_k - 1) * (alpha - prod_k gamma_k) * (beta - 1)),
    with empty products equal to 1.
    """
    ep = exponential_parameters(p)
    comp = I.complement(p.m)
    g_in = 1 + 0j
    for i in I.members:
        g_in *= ep.gamma[i - 1]
    g_out = 1 + 0j
    for j in comp.members:
        g_out *= ep.gamma[j - 1]
    g_all = g_in * g_out

    factors = [(ep.alpha - g_all, "alpha - prod_k gamma_k"),
               (ep.beta - 1, "beta - 1")]
    factors += [(g - 1, f"gamma_{k} - 1") for k, g in enumerate(ep.gamma, start=1)]
    den = 1 + 0j
    for value, label in factors:
        if abs(value) < _ZERO_GUARD:
            raise DegenerateParameterError(
                f"intersection denominator factor {label} vanishes (integral exponent)")
        den *= value
    num = g_out * (ep.alpha - g_in) * (ep.beta - g_in)
    return (-1) ** I.r * num / den


def ih_matrix(p: ParameterSet) -> HomologyIntersectionMatrix:
    """Diagonal matrix of ih_self values over all subsets in rank order."""
    size = 1 << p.m
    entries = np.zeros((size, size), dtype=complex)
    for I in SubsetIndex.all_subsets(p.m):
        entries[I.rank, I.rank] = ih_self(p, I)
    return HomologyIntersectionMatrix(p.m, entries)


def enumerate_flags(m: int) -> list[tuple[SubsetIndex, ...]]:
    """All m! flags: chains I^(1) < ... < I^(m-1) with |I^(r)| = r.

    Each flag corresponds to the order in which elements are added, so the
    enumeration walks injective sequences of length m-1. For m = 1 the
    unique empty flag is returned (its product contributes 1).
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    flags = []
    for order in itertools.permutations(range(1, m + 1), m - 1):
        chain = []
        acc: set[int] = set()
        for element in order:
            acc.add(element)
            chain.append(SubsetIndex(tuple(sorted(acc))))
        flags.append(tuple(chain))
    return flags


def flag_denominator_sum(p: ParameterSet) -> complex:
    """sum over flags of prod_{r=1}^{m-1} 1 / (b + r - sum_{i in I^(r)} c_i)."""
    total = 0j
    for flag in enumerate_flags(p.m):
        prod = 1 + 0j
        for r, subset in enumerate(flag, start=1):
            den = p.b + r - sum((p.c[i - 1] for i in subset.members), 0j)
            if abs(den) < _ZERO_GUARD:
                raise DegenerateParameterError(
                    f"flag denominator b + {r} - sum(c_i, i in {subset.members}) vanishes")
            prod /= den
        total += prod
    return total


def ic_phi_phi(p: ParameterSet) -> complex:
    """Self-intersection number of the standard cocycle.

    (2 pi i)^m * (1/(sum c_k - a - m + 1) + 1/(b + m - sum c_k)) times the
    flag denominator sum.
    """
    d1 = p.c_sum() - p.a - p.m + 1
    d2 = p.b + p.m - p.c_sum()
    if abs(d1) < _ZERO_GUARD or abs(d2) < _ZERO_GUARD:
        raise DegenerateParameterError("cocycle intersection denominator vanishes")
    return (2j * math.pi) ** p.m * (1 / d1 + 1 / d2) * flag_denominator_sum(p)


def ic_phi_phiprime() -> complex:
    """Intersection of the standard cocycle with its x-dependent companion.

    Exactly zero: for m >= 2 the two pole divisors share too few components
    to meet in an m-fold crossing. (For m = 1 the true pairing is nonzero;
    the single-variable correction enters the second period relation, see
    relations.tpr2_reduced.)
    """
    return 0j

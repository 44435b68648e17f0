"""Apply the rank-2^m differential operators to truncated series.

The k-th operator of the system is

    x_k (1 - x_k) D_k^2  -  x_k sum_{i != k} x_i D_i D_k
      -  sum_{i != k, 1 <= j <= m} x_i x_j D_i D_j
      +  (c_k - (a+b+1) x_k) D_k  -  (a+b+1) sum_{i != k} x_i D_i  -  a b,

where D_k is the partial derivative along x_k and the double sum includes
j = i and j = k (only i is constrained). The operators act here as formal
operations on coefficient dictionaries, so annihilation is checked exactly
up to rounding, with no finite-difference step to tune. Each operator
raises total degree by at most one and consumes data one degree above, so
only the top two layers of a degree-N truncation are contaminated; output
is reported to degree N-1 and residuals are inspected to degree N-2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ParameterSet
from .series import term_ratio


@dataclass(frozen=True)
class TruncatedPolynomial:
    """Multi-index -> coefficient map, with all stored |n| <= degree."""

    m: int
    degree: int
    coefficients: dict[tuple[int, ...], complex]


def fc_truncation(p: ParameterSet, N: int) -> TruncatedPolynomial:
    """Coefficients A_n of the series for |n| <= N, x powers factored out."""
    if p.m > 3:
        raise ValueError("truncation supports m <= 3 only")
    if N > 60:
        raise ValueError("truncation supports N <= 60 only")
    m = p.m
    coeffs: dict[tuple[int, ...], complex] = {(0,) * m: 1 + 0j}
    prev = [(0,) * m]
    for _ in range(N):
        cur = []
        for n in prev:
            first = next((i for i, v in enumerate(n) if v > 0), m - 1)
            for k in range(first + 1):
                succ = n[:k] + (n[k] + 1,) + n[k + 1:]
                coeffs[succ] = coeffs[n] * term_ratio(p, n, k + 1, 1.0)
                cur.append(succ)
        prev = cur
    return TruncatedPolynomial(m, N, coeffs)


def _diff(coeffs: dict, k0: int) -> dict:
    out: dict[tuple[int, ...], complex] = {}
    for n, v in coeffs.items():
        if n[k0] > 0:
            out[n[:k0] + (n[k0] - 1,) + n[k0 + 1:]] = n[k0] * v
    return out


def _accumulate(dst: dict, src: dict, scale: complex, shift: tuple[int, ...]) -> None:
    for n, v in src.items():
        key = tuple(a + b for a, b in zip(n, shift))
        dst[key] = dst.get(key, 0j) + scale * v


def apply_ec_operator(p: ParameterSet, k: int, f: TruncatedPolynomial) -> TruncatedPolynomial:
    """Apply the k-th operator (1-based axis) to f; output degree f.degree - 1."""
    if f.degree < 2:
        raise ValueError("input degree must be at least 2")
    m = f.m
    k0 = k - 1
    zero = (0,) * m

    def unit(i0: int, amount: int = 1) -> tuple[int, ...]:
        return zero[:i0] + (amount,) + zero[i0 + 1:]

    ck = p.c[k0]
    abp1 = p.a + p.b + 1

    d_k = _diff(f.coefficients, k0)
    d_kk = _diff(d_k, k0)
    out: dict[tuple[int, ...], complex] = {}

    # x_k (1 - x_k) D_k^2
    _accumulate(out, d_kk, 1, unit(k0))
    _accumulate(out, d_kk, -1, unit(k0, 2))
    # - x_k sum_{i != k} x_i D_i D_k
    for i0 in range(m):
        if i0 == k0:
            continue
        d_ik = _diff(d_k, i0)
        _accumulate(out, d_ik, -1, tuple(a + b for a, b in zip(unit(i0), unit(k0))))
    # - sum_{i != k} sum_j x_i x_j D_i D_j
    for i0 in range(m):
        if i0 == k0:
            continue
        d_i = _diff(f.coefficients, i0)
        for j0 in range(m):
            d_ij = _diff(d_i, j0)
            _accumulate(out, d_ij, -1, tuple(a + b for a, b in zip(unit(i0), unit(j0))))
    # (c_k - (a+b+1) x_k) D_k
    _accumulate(out, d_k, ck, zero)
    _accumulate(out, d_k, -abp1, unit(k0))
    # - (a+b+1) sum_{i != k} x_i D_i
    for i0 in range(m):
        if i0 == k0:
            continue
        _accumulate(out, _diff(f.coefficients, i0), -abp1, unit(i0))
    # - a b
    _accumulate(out, f.coefficients, -p.a * p.b, zero)

    reliable = f.degree - 1
    trimmed = {n: v for n, v in out.items() if sum(n) <= reliable}
    return TruncatedPolynomial(m, reliable, trimmed)


def pde_residual(p: ParameterSet, N: int) -> float:
    """Largest normalized residual coefficient after applying all m operators.

    The truncation at degree N is fed through each operator; among output
    degrees d <= N-2 the residual magnitude is normalized by the largest
    input coefficient magnitude at the same degree.
    """
    if N < 3:
        raise ValueError("N must be at least 3")
    f = fc_truncation(p, N)

    input_scale: dict[int, float] = {}
    for n, v in f.coefficients.items():
        d = sum(n)
        input_scale[d] = max(input_scale.get(d, 0.0), abs(v))

    worst = 0.0
    for k in range(1, p.m + 1):
        result = apply_ec_operator(p, k, f)
        for n, v in result.coefficients.items():
            d = sum(n)
            if d <= N - 2 and input_scale.get(d, 0.0) > 0.0:
                worst = max(worst, abs(v) / input_scale[d])
    return worst

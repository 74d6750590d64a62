"""Sylvester resultants eliminating ``y`` and the ``y``-discriminant.

The determinant is taken by fraction-free (Bareiss) elimination over the ring
of univariate polynomials in ``x``, so exact inputs give exact resultants.
"""

from __future__ import annotations

from ..errors import DegenerateInput
from .poly import Poly, UniPoly


def sylvester_matrix(p: list[UniPoly], q: list[UniPoly]) -> list[list[UniPoly]]:
    """Sylvester matrix of ``sum p[j] y^j`` and ``sum q[j] y^j``.

    The first ``deg q`` rows hold the shifted coefficients of ``p`` from the
    leading coefficient down, followed by ``deg p`` rows for ``q``.
    """
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    zero = UniPoly([], p[-1].var)
    rows = []
    for shift in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(p)):
            row[shift + k] = c
        rows.append(row)
    for shift in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(q)):
            row[shift + k] = c
        rows.append(row)
    return rows


def bareiss_det(mat: list[list[UniPoly]]) -> UniPoly:
    """Determinant of a square matrix with UniPoly entries."""
    a = [list(r) for r in mat]
    n = len(a)
    if n == 0:
        return UniPoly([1])
    var = a[0][0].var
    sign = 1
    prev = UniPoly([1], var)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return UniPoly([], var)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def resultant_y(P: Poly, Q: Poly) -> UniPoly:
    """Resultant of ``P`` and ``Q`` with respect to ``y`` (Sylvester determinant)."""
    if P.is_zero() or Q.is_zero():
        return UniPoly([], P.vars[0])
    m, n = P.degree_y, Q.degree_y
    if m < 1 and n < 1:
        raise DegenerateInput("resultant needs positive y-degree in some argument")
    p, q = P.coeffs_in(1), Q.coeffs_in(1)
    if n == 0:
        return q[0] ** m
    if m == 0:
        return p[0] ** n
    return bareiss_det(sylvester_matrix(p, q))


def discriminant_y(P: Poly) -> UniPoly:
    """``(-1)^(n(n-1)/2) Res_y(P, P_y) / lc_y(P)`` with ``n = deg_y P``."""
    n = P.degree_y
    if n < 1:
        raise DegenerateInput("discriminant needs positive y-degree")
    res = resultant_y(P, P.diff(1))
    lc = P.coeffs_in(1)[-1]
    disc = res.exact_div(lc)
    return -disc if (n * (n - 1) // 2) % 2 else disc

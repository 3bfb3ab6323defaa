"""Sylvester resultants and iterated elimination.

Determinants of polynomial matrices are computed fraction-free (Bareiss).
Larger matrices with several remaining variables go through an exact
evaluation/interpolation path that agrees with Bareiss and is much faster;
both paths are cross-checked in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    Polynomial,
    pure_variable_content,
    squarefree_part,
    univariate_from_polynomial,
)
from .errors import DegenerateEliminantError, SylvesterSizeError

MAX_SYLVESTER_SIZE = 64

_DIRECT_BAREISS_LIMIT = 6


@dataclass(frozen=True)
class SylvesterMatrix:
    """Sylvester matrix of two polynomials with respect to one variable.

    entries[r][c] are polynomials in the remaining variables; the
    determinant is the resultant.
    """

    entries: tuple[tuple[Polynomial, ...], ...]
    eliminated: str
    deg_f: int
    deg_g: int

    @property
    def size(self) -> int:
        return self.deg_f + self.deg_g


def sylvester_matrix(f: Polynomial, g: Polynomial, var: str) -> SylvesterMatrix:
    m = f.degree_in(var)
    n = g.degree_in(var)
    if f.is_zero or g.is_zero:
        raise ValueError("Sylvester matrix requires nonzero polynomials")
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError(f"total degree in {var!r} must be at least 1")
    size = m + n
    if size > MAX_SYLVESTER_SIZE:
        raise SylvesterSizeError(
            f"Sylvester matrix {size}x{size} exceeds the supported {MAX_SYLVESTER_SIZE}x{MAX_SYLVESTER_SIZE}"
        )
    fc = list(reversed(f.coeffs_in(var)))  # descending
    gc = list(reversed(g.coeffs_in(var)))
    rest_vars = tuple(dict.fromkeys(list(f.vars) + list(g.vars)))
    rest_vars = tuple(v for v in rest_vars if v != var)
    zero = Polynomial.zero(rest_vars)
    rows: list[tuple[Polynomial, ...]] = []
    for shift in range(n):
        row = [zero] * shift + [c.with_vars(rest_vars) for c in fc]
        row += [zero] * (size - len(row))
        rows.append(tuple(row))
    for shift in range(m):
        row = [zero] * shift + [c.with_vars(rest_vars) for c in gc]
        row += [zero] * (size - len(row))
        rows.append(tuple(row))
    return SylvesterMatrix(tuple(rows), var, m, n)


# -- determinants ------------------------------------------------------


def det_cofactor(rows) -> Polynomial:
    """Naive cofactor expansion; the small-matrix oracle."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        a = rows[0][j]
        if a.is_zero if isinstance(a, Polynomial) else not a:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        piece = a * det_cofactor(minor)
        if j % 2:
            piece = -piece
        total = piece if total is None else total + piece
    if total is None:
        zero_like = rows[0][0]
        return zero_like * 0
    return total


def det_bareiss(rows) -> Polynomial:
    """Fraction-free Bareiss determinant over the polynomial ring.

    Every division performed is exact; row swaps flip the sign.
    """
    m = [list(row) for row in rows]
    n = len(m)
    sign = 1
    prev = None
    for k in range(n - 1):
        if m[k][k].is_zero:
            pivot_row = next((r for r in range(k + 1, n) if not m[r][k].is_zero), None)
            if pivot_row is None:
                return m[0][0] * 0  # zero column below the diagonal
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num if prev is None else num.exact_div(prev)
            m[i][k] = m[i][k] * 0
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return result if sign > 0 else -result


def _det_scalar(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant of a rational matrix via integer Bareiss."""
    n = len(rows)
    scale = Fraction(1)
    m: list[list[int]] = []
    for row in rows:
        lcm = 1
        for c in row:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        scale *= lcm
        m.append([int(c * lcm) for c in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot_row = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if pivot_row is None:
                return Fraction(0)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1]) / scale


def _degree_bounds(rows, variables: tuple[str, ...]) -> dict[str, int]:
    bounds = {}
    for v in variables:
        total = 0
        for row in rows:
            row_max = 0
            for entry in row:
                d = entry.degree_in(v)
                if d > row_max:
                    row_max = d
            total += row_max
        bounds[v] = total
    return bounds


def _sample_values(count: int) -> list[Fraction]:
    # Small centered integers keep the scalar determinants compact.
    values = [Fraction(0)]
    k = 1
    while len(values) < count:
        values.append(Fraction(k))
        if len(values) < count:
            values.append(Fraction(-k))
        k += 1
    return values[:count]


def _specialize(rows, var: str, value: Fraction):
    return [[entry.subs(var, value) for entry in row] for row in rows]


def det_interpolated(rows, variables: tuple[str, ...] | None = None) -> Polynomial:
    """Exact determinant by grid evaluation and Newton interpolation.

    Specializing entries commutes with taking determinants, so sampling the
    remaining variables on an integer grid of size (degree bound + 1) per
    variable determines the determinant uniquely.
    """
    if variables is None:
        seen: dict[str, None] = {}
        for row in rows:
            for entry in row:
                for v in entry.used_vars():
                    seen[v] = None
        variables = tuple(seen)
    if not variables:
        scalar = _det_scalar([[e.constant_term() for e in row] for row in rows])
        return Polynomial.constant(scalar)
    var = variables[0]
    rest = variables[1:]
    bound = _degree_bounds(rows, (var,))[var]
    samples = _sample_values(bound + 1)
    values = [det_interpolated(_specialize(rows, var, s), rest) for s in samples]
    # Newton divided differences with polynomial-valued nodes.
    dd = list(values)
    for j in range(1, len(samples)):
        for i in range(len(samples) - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) * (1 / (samples[i] - samples[i - j]))
    result = dd[-1]
    vpoly = Polynomial.variable(var)
    for i in range(len(samples) - 2, -1, -1):
        result = result * (vpoly - samples[i]) + dd[i]
    return result


def _det_auto(matrix: SylvesterMatrix) -> Polynomial:
    rows = matrix.entries
    remaining = set()
    for row in rows:
        for entry in row:
            remaining |= entry.used_vars()
    if not remaining:
        value = _det_scalar([[e.constant_term() for e in row] for row in rows])
        return Polynomial.constant(value)
    if matrix.size <= _DIRECT_BAREISS_LIMIT:
        return det_bareiss(rows)
    return det_interpolated(rows)


def resultant(f: Polynomial, g: Polynomial, var: str, strict: bool = True) -> Polynomial:
    """Resultant of f and g with respect to var (raw, unnormalized).

    An identically zero resultant means a common factor of positive degree
    in var; with strict=True that raises DegenerateEliminantError, with
    strict=False the zero polynomial is returned.
    """
    matrix = sylvester_matrix(f, g, var)
    det = _det_auto(matrix)
    if det.is_zero and strict:
        raise DegenerateEliminantError(
            f"resultant in {var!r} vanished identically: the inputs share a factor"
        )
    return det


def _strip_pure_factor(p: Polynomial, var: str) -> Polynomial:
    content = pure_variable_content(p, var)
    if content.degree() < 1:
        return p
    return p.exact_div(content.to_polynomial().with_vars(p.vars))


def eliminate_two(
    e1: Polynomial,
    e2: Polynomial,
    e3: Polynomial,
    v1: str,
    v2: str,
) -> Polynomial:
    """Eliminate v1 and then v2 from three polynomials by iterated resultants.

    The pairing adapts to which inputs actually contain v1; an identically
    zero intermediate is retried once after removing the pure-v factor of
    the inputs, then reported as degenerate.
    """

    def res(a: Polynomial, b: Polynomial, v: str) -> Polynomial:
        try:
            return resultant(a, b, v)
        except DegenerateEliminantError:
            a2, b2 = _strip_pure_factor(a, v), _strip_pure_factor(b, v)
            return resultant(a2, b2, v)

    inputs = [e1, e2, e3]
    with_v1 = [p for p in inputs if p.degree_in(v1) > 0]
    without_v1 = [p for p in inputs if p.degree_in(v1) <= 0]
    if len(with_v1) < 2:
        raise DegenerateEliminantError(
            f"elimination requires {v1!r} to appear in at least two inputs"
        )
    if len(with_v1) == 2:
        first = res(with_v1[0], with_v1[1], v1)
        second = without_v1[0]
    else:
        first = res(e1, e2, v1)
        second = res(e1, e3, v1)
    for p in (first, second):
        if p.degree_in(v2) <= 0:
            raise DegenerateEliminantError(
                f"variable {v2!r} was lost before the second elimination"
            )
    return res(first, second, v2)


def primitive_squarefree(p: Polynomial, var: str) -> Polynomial:
    """Normalize an eliminant: remove rational content, fix the leading sign,
    and (when p is univariate) divide out repeated factors."""
    if p.is_zero:
        raise ValueError("cannot normalize the zero polynomial")
    used = p.used_vars()
    if len(used) <= 1:
        u = univariate_from_polynomial(p, next(iter(used)) if used else var)
        if u.degree() >= 1:
            u = squarefree_part(u)
        poly = u.to_polynomial()
        if u.var in p.vars:
            poly = poly.with_vars(p.vars)
        return poly.primitive_normalized()[0]
    return p.primitive_normalized()[0]

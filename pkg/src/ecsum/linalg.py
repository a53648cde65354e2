"""Exact determinants over Q and F_p."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from . import kernel
from .errors import DescriptorMismatch
from .fields import FieldDescriptor, FieldValue

Matrix = Sequence[Sequence[FieldValue]]


def _field_of(rows: Matrix) -> FieldDescriptor:
    field = None
    for row in rows:
        for v in row:
            if field is None:
                field = v.field
            elif v.field != field:
                raise DescriptorMismatch(f"matrix mixes {field} and {v.field}")
    return field


def _cofactor_det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            term = m[0][j] * _cofactor_det(minor)
            total = total + term if j % 2 == 0 else total - term
    return total


def bareiss(m: list[list[int]]) -> int:
    """Fraction-free elimination on an integer matrix; every division is exact."""
    m = [list(row) for row in m]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            a = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - a * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_exact(rows: Matrix) -> FieldValue:
    """Exact determinant of a square matrix of field elements.

    Prime fields go through the mod-p kernel. Over Q, matrices up to 4x4
    use cofactor expansion; larger ones are scaled to integers row by row
    and reduced with Bareiss elimination.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    field = _field_of(rows)
    if field is None:
        raise ValueError("determinant of an empty matrix needs a field")
    if field.is_prime_field:
        return FieldValue._make(field, kernel.det_mod([[v.value for v in r] for r in rows], field.modulus))
    vals = [[v.value for v in r] for r in rows]
    if n <= 4:
        return field(_cofactor_det(vals))
    scale = 1
    ints = []
    for row in vals:
        den = lcm(*(Fraction(v).denominator for v in row))
        scale *= den
        ints.append([int(v * den) for v in row])
    return field(Fraction(bareiss(ints), scale))


def signed_minors(rows: Matrix) -> list[FieldValue]:
    """For an ``n x (n+1)`` matrix, ``(-1)**l * det`` of the matrix with
    column ``l`` deleted, for ``l = 0..n``."""
    field = _field_of(rows)
    if field.is_prime_field:
        ints = [[v.value for v in r] for r in rows]
        return [FieldValue._make(field, c) for c in kernel.minors_mod(ints, field.modulus)]
    out = []
    for l in range(len(rows[0])):
        d = det_exact([list(r[:l]) + list(r[l + 1:]) for r in rows])
        out.append(d if l % 2 == 0 else -d)
    return out

"""Pure-Python mod-p kernels.

Same signatures as the compiled ``_ckernel`` module; used when the extension
is not built or when ``ECSUM_PURE_PYTHON`` is set. All inputs are expected to
be canonical residues in ``[0, p)``.
"""

CASE_CHORD = 1
CASE_TANGENT = 2
CASE_VERTICAL = 3


def inv_mod(a, p):
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of 0 mod %d" % p)
    return pow(a, -1, p)


def ec_add(x1, y1, x2, y2, a, p):
    """Add two affine points on y^2 = x^3 + a*x + b over F_p.

    Returns ``(case, x3, y3)``; for the vertical case the coordinates are 0
    and the caller maps the result to the point at infinity.
    """
    if x1 != x2:
        case = CASE_CHORD
        alpha = (y2 - y1) * pow(x2 - x1, -1, p) % p
    elif (y1 + y2) % p == 0:
        return CASE_VERTICAL, 0, 0
    else:
        case = CASE_TANGENT
        alpha = (3 * x1 * x1 + a) * pow(2 * y1, -1, p) % p
    x3 = (alpha * alpha - x1 - x2) % p
    y3 = (-y1 - alpha * (x3 - x1)) % p
    return case, x3, y3


def det_mod(rows, p):
    """Determinant of a square matrix of residues by Gaussian elimination."""
    m = [[v % p for v in row] for row in rows]
    n = len(m)
    det = 1
    for i in range(n):
        pivot = i
        while pivot < n and m[pivot][i] == 0:
            pivot += 1
        if pivot == n:
            return 0
        if pivot != i:
            m[i], m[pivot] = m[pivot], m[i]
            det = -det
        row_i = m[i]
        det = det * row_i[i] % p
        inv = pow(row_i[i], -1, p)
        for k in range(i + 1, n):
            row_k = m[k]
            f = row_k[i] * inv % p
            if f:
                for j in range(i + 1, n):
                    row_k[j] = (row_k[j] - f * row_i[j]) % p
    return det % p


def minors_mod(rows, p):
    """Signed last-row cofactor coefficients ``(-1)**l * det(M_l)``.

    ``rows`` is an ``n x (n+1)`` matrix; ``M_l`` deletes column ``l``.
    """
    ncols = len(rows[0])
    out = []
    for l in range(ncols):
        d = det_mod([r[:l] + r[l + 1:] for r in rows], p)
        out.append(d if l % 2 == 0 else (-d) % p)
    return out

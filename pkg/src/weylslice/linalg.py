"""Dense exact matrices over a field-ops object.

Matrices are immutable tuples of tuples.  Elimination over the rationals
uses fraction-free Bareiss pivoting on cleared integer rows; over finite
fields plain Gaussian elimination.  Characteristic polynomials use the
division-free Berkowitz algorithm so they are valid over any field,
including small characteristic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .fields import QQ, Rationals

Matrix = tuple[tuple[object, ...], ...]


def mat(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def identity(field, n: int) -> Matrix:
    return tuple(
        tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)
    )


def zero_matrix(field, n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return tuple(tuple(field.zero for _ in range(m)) for _ in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def mat_add(field, a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(field.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )

def mat_sub(field, a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(field.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_scale(field, c, a: Matrix) -> Matrix:
    return tuple(tuple(field.mul(c, x) for x in row) for row in a)


def mat_mul(field, a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    add, mul, zero = field.add, field.mul, field.zero
    out = []
    for ra in a:
        row = []
        for cb in bt:
            acc = zero
            for x, y in zip(ra, cb):
                if not field.is_zero(x) and not field.is_zero(y):
                    acc = add(acc, mul(x, y))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def fsum(field, items) -> object:
    """Fold with field.add (plain sum() would skip modular reduction)."""
    acc = field.zero
    for x in items:
        acc = field.add(acc, x)
    return acc


def mat_vec(field, a: Matrix, v: Sequence) -> tuple:
    add, mul, zero = field.add, field.mul, field.zero
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            acc = add(acc, mul(x, y))
        out.append(acc)
    return tuple(out)


def mat_pow(field, a: Matrix, k: int) -> Matrix:
    out = identity(field, len(a))
    base = a
    while k:
        if k & 1:
            out = mat_mul(field, out, base)
        base = mat_mul(field, base, base)
        k >>= 1
    return out


def scalar_shift(field, a: Matrix, c) -> Matrix:
    """a - c * I."""
    n = len(a)
    return tuple(
        tuple(field.sub(a[i][j], c) if i == j else a[i][j] for j in range(n))
        for i in range(n)
    )


def _clear_denominators(row):
    from math import lcm

    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    return [int(x * den) if isinstance(x, Fraction) else int(x) * den for x in row]


def rank(field, a: Matrix) -> int:
    """Exact rank: Bareiss over the rationals, Gaussian over F_q."""
    if not a or not a[0]:
        return 0
    if isinstance(field, Rationals):
        return _rank_bareiss([_clear_denominators(r) for r in a])
    return _rank_gauss(field, [list(r) for r in a])


def _rank_bareiss(m: list[list[int]]) -> int:
    rows, cols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == rows:
            break
    return r


def _rank_gauss(field, m: list[list]) -> int:
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if not field.is_zero(m[i][c]):
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(rows):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def inverse(field, a: Matrix) -> Matrix:
    n = len(a)
    m = [list(row) + [field.one if i == j else field.zero for j in range(n)]
         for i, row in enumerate(a)]
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, n):
            if not field.is_zero(m[i][c]):
                piv = i
                break
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(n):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        r += 1
    return tuple(tuple(row[n:]) for row in m)


def det(field, a: Matrix):
    """Determinant by ordinary elimination (exact over a field)."""
    n = len(a)
    m = [list(r) for r in a]
    out = field.one
    for c in range(n):
        piv = None
        for i in range(c, n):
            if not field.is_zero(m[i][c]):
                piv = i
                break
        if piv is None:
            return field.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            out = field.neg(out)
        out = field.mul(out, m[c][c])
        inv = field.inv(m[c][c])
        for i in range(c + 1, n):
            if not field.is_zero(m[i][c]):
                f = field.mul(inv, m[i][c])
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[c])]
    return out


def charpoly(field, a: Matrix) -> tuple:
    """Coefficients of det(xI - a), low degree first, by Berkowitz.

    Division-free, hence valid over any commutative base including
    small prime fields where Leverrier-style traces break down.
    """
    n = len(a)
    if n == 0:
        return (field.one,)
    # Berkowitz: iteratively build the characteristic polynomial vector.
    # poly holds coefficients of det(xI - leading principal minor), highest
    # degree first.
    poly = [field.one, field.neg(a[0][0])]
    for k in range(1, n):
        akk = a[k][k]
        row = a[k][:k]          # R: 1 x k
        col = [a[i][k] for i in range(k)]  # C: k x 1
        sub = [r[:k] for r in a[:k]]       # A_k: k x k
        # Toeplitz column: [1, -akk, -R C, -R A C, -R A^2 C, ...]
        toep = [field.one, field.neg(akk)]
        vec = col
        for _ in range(k):
            acc = field.zero
            for x, y in zip(row, vec):
                acc = field.add(acc, field.mul(x, y))
            toep.append(field.neg(acc))
            nxt = []
            for i in range(k):
                s = field.zero
                for j in range(k):
                    s = field.add(s, field.mul(sub[i][j], vec[j]))
                nxt.append(s)
            vec = nxt
        new = [field.zero] * (k + 2)
        for i, t in enumerate(toep[: k + 2]):
            if field.is_zero(t):
                continue
            for j, c in enumerate(poly):
                if i + j < k + 2:
                    new[i + j] = field.add(new[i + j], field.mul(t, c))
        poly = new
    return tuple(reversed(poly))


def poly_eval(field, coeffs: Sequence, x):
    """Evaluate a low-first coefficient list at x."""
    acc = field.zero
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_trim(field, coeffs):
    out = list(coeffs)
    while out and field.is_zero(out[-1]):
        out.pop()
    return tuple(out)


def poly_divmod(field, num, den):
    num = list(poly_trim(field, num))
    den = poly_trim(field, den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [field.zero] * max(0, len(num) - len(den) + 1)
    inv_lead = field.inv(den[-1])
    while len(num) >= len(den) and any(not field.is_zero(c) for c in num):
        shift = len(num) - len(den)
        factor = field.mul(num[-1], inv_lead)
        quot[shift] = factor
        for i, d in enumerate(den):
            num[shift + i] = field.sub(num[shift + i], field.mul(factor, d))
        num = list(poly_trim(field, num))
        if not num:
            break
    return tuple(quot), poly_trim(field, num)


def poly_gcd(field, a, b):
    a, b = poly_trim(field, a), poly_trim(field, b)
    while b:
        _, r = poly_divmod(field, a, b)
        a, b = b, r
    if a:
        inv = field.inv(a[-1])
        a = tuple(field.mul(inv, c) for c in a)
    return a


def poly_derivative(field, coeffs):
    return poly_trim(field, tuple(
        field.mul(field.of(i), c) for i, c in enumerate(coeffs) if i >= 1))


def squarefree_part(field, coeffs):
    """The radical of a polynomial (inseparable factors handled by gcd loop)."""
    coeffs = poly_trim(field, coeffs)
    d = poly_derivative(field, coeffs)
    if not d:
        return coeffs  # p-th power or constant; callers only need a divisor
    g = poly_gcd(field, coeffs, d)
    q, r = poly_divmod(field, coeffs, g)
    if r:
        raise AssertionError("gcd does not divide")
    return poly_trim(field, q)


def poly_eval_matrix(field, coeffs, a: Matrix) -> Matrix:
    n = len(a)
    acc = zero_matrix(field, n)
    for c in reversed(coeffs):
        acc = mat_mul(field, acc, a)
        acc = tuple(
            tuple(field.add(acc[i][j], c) if i == j else acc[i][j]
                  for j in range(n)) for i in range(n))
    return acc


def eigenvalues_in_field(field, a: Matrix) -> list:
    """Roots in the base field of the characteristic polynomial (with
    multiplicity ignored), by scanning.  Finite fields only."""
    if field.order is None:
        raise TypeError("root scan requires a finite field")
    cp = charpoly(field, a)
    return [x for x in field.elements() if field.is_zero(poly_eval(field, cp, x))]


def kernel_dimension(field, a: Matrix) -> int:
    if not a:
        return 0
    return len(a[0]) - rank(field, a)


def is_unipotent(field, a: Matrix) -> bool:
    n = len(a)
    return rank(field, mat_pow(field, scalar_shift(field, a, field.one), n)) == 0


def unipotent_partition(field, u: Matrix) -> tuple[int, ...]:
    """Jordan partition of a unipotent matrix from ranks of (u-1)^k."""
    n = len(u)
    nil = scalar_shift(field, u, field.one)
    if rank(field, mat_pow(field, nil, n)) != 0:
        raise ValueError("matrix is not unipotent")
    ranks = [n]
    power = identity(field, n)
    while ranks[-1] > 0:
        power = mat_mul(field, power, nil)
        ranks.append(rank(field, power))
    # conjugate partition parts: lambda'_k = r_{k-1} - r_k
    conj = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    parts: list[int] = []
    for k, c in enumerate(conj):
        width = c - (conj[k + 1] if k + 1 < len(conj) else 0)
        parts.extend([k + 1] * width)
    return tuple(sorted(parts, reverse=True))


def bruhat_permutation(field, g: Matrix) -> tuple[int, ...]:
    """The permutation w with g in B w B, B upper triangular in GL_n.

    Returns w as a tuple: column j of the permutation matrix has its 1 in
    row w[j].  Decoded by the rank-pattern sweep: for each column, pivot
    on the lowest surviving nonzero entry, then clear its row and column
    with upper-triangular row/column operations.
    """
    n = len(g)
    m = [list(r) for r in g]
    perm = [-1] * n
    used_rows: set[int] = set()
    for j in range(n):
        piv = None
        for i in range(n - 1, -1, -1):
            if i not in used_rows and not field.is_zero(m[i][j]):
                piv = i
                break
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        perm[j] = piv
        used_rows.add(piv)
        inv = field.inv(m[piv][j])
        # clear the pivot column upward (row ops from above are upper-tri B)
        for i in range(piv):
            if i not in used_rows and not field.is_zero(m[i][j]):
                f = field.mul(inv, m[i][j])
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[piv])]
        # clear the pivot row rightward (column ops to the right)
        for jj in range(j + 1, n):
            if not field.is_zero(m[piv][jj]):
                f = field.mul(inv, m[piv][jj])
                for i in range(n):
                    m[i][jj] = field.sub(m[i][jj], field.mul(f, m[i][j]))
    return tuple(perm)


def parse_matrix(field, text: str) -> Matrix:
    """Parse a plain structured-text matrix literal.

    One row per line, entries whitespace-separated; rationals accept
    "p/q", finite-field entries are integers reduced mod q.
    """
    rows = []
    for line in text.strip().splitlines():
        entries = []
        for tok in line.split():
            if "/" in tok:
                num, den = tok.split("/")
                entries.append(field.of(Fraction(int(num), int(den))))
            else:
                entries.append(field.of(int(tok)))
        rows.append(tuple(entries))
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix literal")
    return tuple(rows)


def format_matrix(a: Matrix) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in a)

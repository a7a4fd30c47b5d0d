"""Cocharacter-lattice algebra for maximal tori.

For an involution w acting on the cocharacter lattice of a chosen isogeny
type this computes the fixed subtorus T^w, the anti-fixed S_w = T_w n T^w
and the finite 2-group G_w = {t in (T_w)deg : t^2 in T^w}, all as exact
integer-lattice invariants via Smith normal form.

Torsion points are (cocharacter, root-of-unity order) pairs; no field
extensions are ever materialised here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .rootsys import RootSystem, WeylElement, dot

IntMatrix = list[list[int]]


def smith_normal_form(a: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors d1 | d2 | ... (with trailing zeros for corank)."""
    d, _, _ = smith_with_transforms(a)
    n = min(len(d), len(d[0]) if d else 0)
    diag = [abs(d[i][i]) for i in range(n)]
    return _divisor_chain(diag)


def _divisor_chain(diag: list[int]) -> list[int]:
    """Reassemble a diagonal multiset into invariant-factor order.

    Any integer diagonalisation determines the group; redistribute the
    prime powers so the chain condition holds.
    """
    zeros = sum(1 for d in diag if d == 0)
    nonzero = [d for d in diag if d != 0]
    primes: set[int] = set()
    for d in nonzero:
        n, p = d, 2
        while p * p <= n:
            if n % p == 0:
                primes.add(p)
                while n % p == 0:
                    n //= p
            p += 1
        if n > 1:
            primes.add(n)
    k = len(nonzero)
    vals = {p: sorted(_valuation(d, p) for d in nonzero) for p in primes}
    out = []
    for i in range(k):
        f = 1
        for p in primes:
            f *= p ** vals[p][i]
        out.append(f)
    return out + [0] * zeros


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def smith_with_transforms(a: Sequence[Sequence[int]]):
    """(D, U, V) with U*A*V = D diagonal, U and V unimodular.

    D's diagonal is not forced into chain order; use smith_normal_form for
    invariant factors.
    """
    d = [list(map(int, row)) for row in a]
    rows = len(d)
    cols = len(d[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def row_op(i, j, f):  # row_i -= f*row_j
        d[i] = [x - f * y for x, y in zip(d[i], d[j])]
        u[i] = [x - f * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, f):  # col_i -= f*col_j
        for r in range(rows):
            d[r][i] -= f * d[r][j]
        for r in range(cols):
            v[r][i] -= f * v[r][j]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(rows):
            d[r][i], d[r][j] = d[r][j], d[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    t = 0
    while t < min(rows, cols):
        # locate a minimal-magnitude nonzero pivot in the trailing block
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] != 0 and (best is None or abs(d[i][j]) < best):
                    best, piv = abs(d[i][j]), (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        dirty = False
        for i in range(t + 1, rows):
            if d[i][t]:
                f = d[i][t] // d[t][t]
                row_op(i, t, f)
                if d[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            if d[t][j]:
                f = d[t][j] // d[t][t]
                col_op(j, t, f)
                if d[t][j]:
                    dirty = True
        if dirty:
            continue  # remainders became new smaller pivots; redo this step
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return d, u, v


def integer_kernel_basis(a: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of the saturated integer kernel {x in Z^n : A x = 0}."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    d, _, v = smith_with_transforms(a)
    n = min(rows, cols)
    ker_cols = [j for j in range(cols) if j >= n or d[j][j] == 0]
    return [[v[i][j] for i in range(cols)] for j in ker_cols]


@dataclass(frozen=True)
class FiniteAbelianGroupShape:
    """Invariant-factor description d1 | d2 | ... of a finite abelian group."""

    divisors: tuple[int, ...]

    def __post_init__(self):
        if any(d < 2 for d in self.divisors):
            raise ValueError("invariant factors must be >= 2")
        for a, b in zip(self.divisors, self.divisors[1:]):
            if b % a != 0:
                raise ValueError("invariant factors must form a divisor chain")

    @property
    def order(self) -> int:
        out = 1
        for d in self.divisors:
            out *= d
        return out

    def __str__(self):
        if not self.divisors:
            return "1"
        return " x ".join(f"Z/{d}" for d in self.divisors)


def _shape_from_divisors(divs: Sequence[int]) -> FiniteAbelianGroupShape:
    return FiniteAbelianGroupShape(tuple(sorted(d for d in divs if d >= 2)))


@dataclass(frozen=True)
class TorsionPoint:
    """The torus point lambda(zeta_order) for a cocharacter lambda."""

    lattice_coords: tuple[int, ...]
    cocharacter: tuple[Fraction, ...]
    order: int


class TorusData:
    """A cocharacter lattice with the action of one Weyl involution."""

    ISOGENIES = ("sc", "ad", "matrix")

    def __init__(self, system: RootSystem, w: WeylElement, isogeny: str = "sc"):
        if isogeny not in self.ISOGENIES:
            raise ValueError(f"unknown isogeny label {isogeny!r}")
        self.system = system
        self.w = w
        self.isogeny = isogeny
        self.basis = _cocharacter_basis(system, isogeny)  # list of ambient vectors
        self.n = len(self.basis)
        self.action = self._action_matrix()
        # involution on the lattice: (1-w)(1+w) = 0
        prod = _int_mat_mul(
            _int_mat_sub(_identity(self.n), self.action),
            _int_mat_add(_identity(self.n), self.action),
        )
        if any(any(x != 0 for x in row) for row in prod):
            raise ValueError("Weyl element does not act as a lattice involution")

    def _action_matrix(self) -> IntMatrix:
        cols = []
        for b in self.basis:
            img = self.w.apply_vector(b)
            cols.append(_solve_in_basis(self.basis, img))
        return [[cols[j][i] for j in range(self.n)] for i in range(self.n)]

    def to_ambient(self, coords: Sequence[int]) -> tuple[Fraction, ...]:
        out = tuple(Fraction(0) for _ in range(self.system.dim))
        for c, b in zip(coords, self.basis):
            out = tuple(x + Fraction(c) * y for x, y in zip(out, b))
        return out

    def __repr__(self):
        return (f"TorusData({self.system.label}{self.system.rank}, "
                f"isogeny={self.isogeny})")


def _identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _int_mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _int_mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _int_mat_mul(a, b):
    n, m = len(a), len(b[0])
    k = len(b)
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def _solve_in_basis(basis, target) -> list[int]:
    """Integer coordinates of `target` in `basis` (exact; rejects non-lattice)."""
    g = [[dot(a, b) for b in basis] for a in basis]
    rhs = [dot(target, a) for a in basis]
    n = len(basis)
    aug = [list(map(Fraction, g[i])) + [rhs[i]] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    coords = [aug[i][-1] for i in range(n)]
    if any(x.denominator != 1 for x in coords):
        raise ValueError("vector is not in the lattice")
    return [int(x) for x in coords]


def _cocharacter_basis(system: RootSystem, isogeny: str):
    if isogeny == "sc":
        return [
            tuple(2 * x / dot(a, a) for x in a) for a in system.simple_roots
        ]
    if isogeny == "ad":
        # fundamental coweights: (alpha_i, pi_j) = delta_ij within the span
        n = system.rank
        out = []
        for j in range(n):
            g = [[dot(a, b) for b in system.simple_roots] for a in system.simple_roots]
            rhs = [Fraction(int(i == j)) for i in range(n)]
            aug = [list(map(Fraction, g[i])) + [rhs[i]] for i in range(n)]
            for c in range(n):
                piv = next(i for i in range(c, n) if aug[i][c] != 0)
                aug[c], aug[piv] = aug[piv], aug[c]
                pv = aug[c][c]
                aug[c] = [x / pv for x in aug[c]]
                for i in range(n):
                    if i != c and aug[i][c] != 0:
                        f = aug[i][c]
                        aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
            coeffs = [aug[i][-1] for i in range(n)]
            out.append(system.from_coefficients(coeffs))
        return out
    # natural diagonal lattice of the standard matrix group
    if system.label in ("B", "C", "D"):
        n = system.rank
        return [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)]
    if system.label == "A":
        dim = system.rank + 1
        return [tuple(Fraction(int(i == j)) for i in range(dim)) for j in range(dim)]
    raise ValueError(f"no natural matrix lattice for type {system.label}")


def _require_involution(torus: TorusData):
    m2 = _int_mat_mul(torus.action, torus.action)
    if m2 != _identity(torus.n):
        raise ValueError("torus computation requires an involution")


def fixed_part(torus: TorusData) -> tuple[int, FiniteAbelianGroupShape]:
    """(dim (T^w)deg, component group of T^w) from the normal form of 1-w."""
    _require_involution(torus)
    one_minus = _int_mat_sub(_identity(torus.n), torus.action)
    divs = smith_normal_form(one_minus)
    torus_rank = torus.n - sum(1 for d in divs if d != 0)
    return torus_rank, _shape_from_divisors(divs)


def anti_fixed_rank(torus: TorusData) -> int:
    """dim (T_w)deg = corank of 1 + w on the lattice."""
    one_plus = _int_mat_add(_identity(torus.n), torus.action)
    divs = smith_normal_form(one_plus)
    return torus.n - sum(1 for d in divs if d != 0)


def s_w_group(torus: TorusData) -> FiniteAbelianGroupShape:
    """Shape of S_w = T_w n T^w; always elementary abelian of exponent 2."""
    _require_involution(torus)
    stacked = (
        _int_mat_sub(_identity(torus.n), torus.action)
        + _int_mat_add(_identity(torus.n), torus.action)
    )
    divs = smith_normal_form(stacked)
    if any(d == 0 for d in divs):
        raise AssertionError("S_w came out infinite")
    shape = _shape_from_divisors(divs)
    if any(d != 2 for d in shape.divisors):
        raise AssertionError(f"S_w not elementary abelian: {shape}")
    return shape


def gamma_w(
    torus: TorusData, characteristic: int = 0
) -> tuple[FiniteAbelianGroupShape, list[TorsionPoint]]:
    """The group G_w = {t in (T_w)deg : t^2 in T^w} and generating torsion points.

    Computed as the preimage of S_w n (T_w)deg under squaring on (T_w)deg:
    order 2^r * |S_w n (T_w)deg| with r = dim (T_w)deg.  Generators come out
    as cocharacter/root-of-unity pairs.
    """
    if characteristic == 2:
        raise ValueError("squaring is inseparable in characteristic 2")
    _require_involution(torus)
    one_plus = _int_mat_add(_identity(torus.n), torus.action)
    kernel = integer_kernel_basis(one_plus)
    r = len(kernel)
    # S_w n (T_w)deg: 2-torsion points lambda(-1), lambda over F_2-span of the
    # kernel basis, that land in T^w; membership is (1-w)*lambda = 0 mod 2.
    one_minus = _int_mat_sub(_identity(torus.n), torus.action)
    count2 = 0
    for mask in range(1 << r):
        lam = [0] * torus.n
        for b in range(r):
            if mask >> b & 1:
                lam = [x + y for x, y in zip(lam, kernel[b])]
        img = [sum(one_minus[i][j] * lam[j] for j in range(torus.n)) % 2
               for i in range(torus.n)]
        if all(x == 0 for x in img):
            count2 += 1
    order = (2**r) * count2
    generators = [
        TorsionPoint(tuple(k), torus.to_ambient(k), 4) for k in kernel
    ]
    # preimage of an elementary 2-group under squaring on (k*)^r: every
    # invariant factor doubles, so the shape is r copies of Z/4 exactly when
    # the 2-torsion filled up; assemble from the verified counts.
    if count2 != 2**r:
        raise AssertionError("2-torsion of (T_w)deg escaped S_w")
    shape = FiniteAbelianGroupShape(tuple([4] * r))
    return shape, generators

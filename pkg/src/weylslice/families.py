"""Parametrized slice families wdot_S T^{w_S} U^{w_S} per catalog sheet.

Each family builds exact matrices in the catalog's coordinates, carries
the claimed solution components of the sheet intersection, and decides
membership by rank and minimal-polynomial conditions only (never by
root-finding in extension fields: eigenvalue pairs l, 1/l enter through
their trace mu = l + 1/l, which lives in the base field).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .linalg import (
    Matrix,
    fsum,
    identity,
    inverse,
    mat_mul,
    mat_pow,
    rank as mat_rank,
    scalar_shift,
)
from .matgroups import GroupContext
from .sheetcat import SheetDescriptor, catalog_w_S, sheet_catalog


class ExtensionRequired(ValueError):
    """The base field lacks a needed constant (square root / 4th root of 1)."""


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    reason: str
    member_type: Optional[str] = None

    def __bool__(self):
        return self.member


@dataclass(frozen=True)
class Component:
    """One claimed irreducible component of the slice intersection."""

    label: str
    coordinate: str            # human description of the parametrization
    point: Callable            # point(field, coord) -> Matrix or tuple
    coord_arity: int = 1


def _fourth_root(field):
    w = field.fourth_root_of_unity() if hasattr(field, "fourth_root_of_unity") else None
    if w is None:
        raise ExtensionRequired(
            "a primitive 4th root of unity is required; extend the field")
    return w


def _sqrt_sign(field, e: int):
    """zeta with zeta^2 = e for e in {1,-1}."""
    if e == 1:
        return field.one
    return _fourth_root(field)


def _rank_pow(field, m, k):
    return mat_rank(field, mat_pow(field, m, k))


def _solve_mu_quadratic(field, g):
    """mu with g^2 - mu*g + 1 = 0, else None."""
    try:
        ginv = inverse(field, g)
    except ZeroDivisionError:
        return None
    n = len(g)
    s = [[field.add(g[i][j], ginv[i][j]) for j in range(n)] for i in range(n)]
    mu = s[0][0]
    ok = all(s[i][j] == (mu if i == j else field.zero)
             for i in range(n) for j in range(n))
    return mu if ok else None


def _solve_mu_cubic(field, g):
    """mu with (g - 1)(g^2 - mu*g + 1) = 0, else None."""
    n = len(g)
    k = scalar_shift(field, g, field.one)
    gsq = mat_mul(field, g, g)
    lhs = mat_mul(field, k, scalar_shift(field, gsq, field.neg(field.one)))
    kg = mat_mul(field, k, g)
    mu = None
    for i in range(n):
        for j in range(n):
            if not field.is_zero(kg[i][j]):
                mu = field.div(lhs[i][j], kg[i][j])
                break
        if mu is not None:
            break
    if mu is None:
        return None
    if lhs == tuple(tuple(field.mul(mu, x) for x in row) for row in kg):
        return mu
    return None


# ---------------------------------------------------------------------------
# type B, sheet S (w_S = w0)
# ---------------------------------------------------------------------------

class BFamilyS:
    """SO_{2n+1} slice family X(E, M, Q, v) over the big cell."""

    def __init__(self, n: int):
        self.n = n
        self.ctx = GroupContext("SO-odd", n)
        self.w = catalog_w_S("B", n, "S")
        self.sign = -1 if n % 2 else 1  # (-1)^n

    def representative(self, field) -> Matrix:
        n, N = self.n, 2 * self.n + 1
        m = [[field.zero] * N for _ in range(N)]
        m[0][0] = field.of(self.sign)
        for i in range(n):
            m[1 + i][1 + n + i] = field.one
            m[1 + n + i][1 + i] = field.one
        return tuple(tuple(r) for r in m)

    def point(self, field, e: Sequence[int], v: Sequence, q_upper, a_upper) -> Matrix:
        """X from sign vector e, vector v, strict-upper Q and skew A data."""
        n = self.n
        one, zero = field.one, field.zero
        Q = [[one if i == j else (q_upper.get((i, j), zero) if i < j else zero)
              for j in range(n)] for i in range(n)]
        A = [[zero] * n for _ in range(n)]
        for (i, j), val in a_upper.items():
            A[i][j] = val
            A[j][i] = field.neg(val)
        half = field.inv(field.of(2))
        M = [[field.sub(A[i][j],
                        field.mul(half, field.mul(v[i], v[j])))
              for j in range(n)] for i in range(n)]
        Q = tuple(tuple(r) for r in Q)
        Qt_inv = inverse(field, tuple(zip(*Q)))
        E = [field.of(x) for x in e]
        u0 = field.of(self.sign)
        N = 2 * n + 1
        X = [[zero] * N for _ in range(N)]
        X[0][0] = u0
        for j in range(n):
            X[0][1 + n + j] = field.mul(u0, v[j])
        EQ = [[field.mul(E[i], Q[i][j]) for j in range(n)] for i in range(n)]
        EQv = [fsum(field, (field.mul(EQ[i][j], v[j]) for j in range(n)))
               for i in range(n)]
        EQM = [[fsum(field, (field.mul(EQ[i][k], M[k][j]) for k in range(n)))
                for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                X[1 + i][1 + n + j] = field.mul(E[i], Qt_inv[i][j])
                X[1 + n + i][1 + j] = EQ[i][j]
                X[1 + n + i][1 + n + j] = EQM[i][j]
            X[1 + n + i][0] = field.neg(EQv[i])
        return tuple(tuple(r) for r in X)

    def components(self):
        out = []
        n = self.n
        for e in _sign_vectors(n):
            for eta in _sign_vectors(n - 1):
                eta_full = (1,) + eta
                out.append(Component(
                    label=f"e={e} eta={eta_full}",
                    coordinate="a in k (mu = 2(-1)^n - a^2/2)",
                    point=_b_component_point(self, e, eta_full),
                ))
        return out

    def membership(self, field, X) -> MembershipResult:
        n = self.n
        u0 = field.of(self.sign)
        for lam, tag_pos in ((field.one, True), (field.neg(field.one), False)):
            shifted = scalar_shift(field, X, lam)
            if _rank_pow(field, shifted, 2) == 1:
                if lam == u0:
                    t = ("unipotent (3,2^(n-2),1^2) member" if self.sign == 1
                         else "rho-twisted unipotent member")
                else:
                    t = ("unipotent (3,2^(n-1)) member" if lam == field.one
                         else "rho-twisted unipotent member")
                return MembershipResult(True, f"rk((X-{lam})^2)=1", t)
        mu = _solve_mu_cubic(field, X)
        if mu is not None and mu != field.of(2) and mu != field.of(-2):
            if mat_rank(field, scalar_shift(field, X, field.one)) == 2 * n:
                return MembershipResult(
                    True, "semisimple with eigenvalue trace mu",
                    "semisimple O_lambda member")
        return MembershipResult(False, "no sheet membership condition holds")


def _b_component_point(fam: BFamilyS, e, eta):
    def point(field, a):
        n = fam.n
        zeta = [_sqrt_sign(field, ei) for ei in e]
        zinv = [field.inv(z) for z in zeta]
        u0 = field.of(fam.sign)
        half = field.inv(field.of(2))
        mu = field.sub(field.mul(field.of(2), u0),
                       field.mul(half, field.mul(a, a)))
        v = [field.mul(a, field.mul(field.of(eta[i]), zinv[i]))
             for i in range(n)]
        qinv = [[field.one if i == j else field.zero for j in range(n)]
                for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                qinv[i][j] = field.mul(
                    field.of(2 * eta[i] * eta[j]), field.mul(zinv[i], zeta[j]))
        Q = inverse(field, tuple(tuple(r) for r in qinv))
        a_upper = {}
        for i in range(n):
            for j in range(i + 1, n):
                a_upper[(i, j)] = field.mul(
                    mu, field.mul(field.of(eta[i] * eta[j]),
                                  field.mul(zinv[i], zinv[j])))
        q_upper = {(i, j): Q[i][j] for i in range(n) for j in range(i + 1, n)}
        return fam.point(field, e, v, q_upper, a_upper)

    return point


def _sign_vectors(k: int):
    out = [()]
    for _ in range(k):
        out = [t + (s,) for t in out for s in (1, -1)]
    return out


# ---------------------------------------------------------------------------
# rank-two-support sheets: B Sprime, C S1, D Sprime  (w flips eps_1, eps_2)
# ---------------------------------------------------------------------------

class TwoFlipFamily:
    """wdot * t(eps,eta,c) * prod of the four (two for D) flip-root subgroups.

    Covers B_n Sprime, C_n S1/-S1 and D_n Sprime; membership in each case
    is rk(X - zI) = 2 for the sheet's central twist z.
    """

    def __init__(self, group_type: str, n: int, label: str):
        self.group_type = group_type
        self.n = n
        self.label = label
        if group_type == "B":
            self.ctx = GroupContext("SO-odd", n)
        elif group_type == "C":
            self.ctx = GroupContext("Sp", n)
        else:
            self.ctx = GroupContext("SO-even", n)
        self.w = catalog_w_S(group_type, n, label)
        self.central = -1 if label == "-S1" else 1
        sys = self.ctx.system
        from fractions import Fraction

        def eps(i, j=None, sj=1):
            v = [Fraction(0)] * sys.dim
            v[i] = Fraction(1)
            if j is not None:
                v[j] += Fraction(sj)
            return tuple(v)

        if group_type == "C":
            self.roots = [eps(0, 1, -1), eps(0, 1, 1), eps(0, 0, 1), eps(1, 1, 1)]
        elif group_type == "B":
            self.roots = [eps(0, 1, -1), eps(0, 1, 1), eps(0), eps(1)]
        else:
            self.roots = [eps(0, 1, -1), eps(0, 1, 1)]
        self.n_unip = len(self.roots)

    def representative(self, field) -> Matrix:
        """The displayed block-swap representative on the (1,2)-coordinates."""
        n, N = self.n, self.ctx.size
        m = [list(r) for r in identity(field, N)]
        off = 1 if self.group_type == "B" else 0
        for i in range(2):
            ui = off + i
            wi = off + n + i
            m[ui][ui] = field.zero
            m[wi][wi] = field.zero
            m[ui][wi] = field.one
            m[wi][ui] = (field.neg(field.one) if self.group_type == "C"
                         else field.one)
        return tuple(tuple(r) for r in m)

    def point(self, field, eps: int, eta: int, c, coeffs: Sequence) -> Matrix:
        if len(coeffs) != self.n_unip:
            raise ValueError(f"need {self.n_unip} unipotent coefficients")
        n = self.n
        tvals = [field.of(eps), field.of(eta)] + [c] * (n - 2)
        t = self.ctx.torus(field, tvals)
        out = mat_mul(field, self.representative(field), t)
        if self.central < 0:
            out = tuple(tuple(field.neg(x) for x in row) for row in out)
        for r, cf in zip(self.roots, coeffs):
            if not field.is_zero(cf):
                out = mat_mul(field, out, self.ctx.root_element(field, r, cf))
        return out

    def components(self):
        out = []
        for eps in (1, -1):
            for eta in (1, -1):
                out.append(Component(
                    label=f"eps={eps} eta={eta}",
                    coordinate="x in k",
                    point=self._component_point(eps, eta),
                ))
        return out

    def _component_point(self, eps, eta):
        def point(field, x):
            p = x
            if self.group_type == "C":
                # coefficients (p, eta*p, -2eps, -2eta) on the solution line
                coeffs = [p, field.mul(field.of(eta), x),
                          field.of(-2 * eps), field.of(-2 * eta)]
            else:
                # q = -eta*p, short-root coefficients vanish
                q = field.mul(field.of(-eta), x)
                coeffs = [p, q] + [field.zero] * (self.n_unip - 2)
            return self.point(field, eps, eta, field.one, coeffs)

        return point

    def display_point(self, field, eps, eta, c, a, b, x, m) -> Matrix:
        """Point from the catalog's display coordinates (a, b, x, m).

        The fifth display letter l is pinned by the group condition to
        l = -a^2/2 - x*q with q = m + a*b + x*b^2/2.
        """
        if self.group_type == "D":
            p, q = x, m
            return self.point(field, eps, eta, c, [p, q])
        r = field.neg(a)
        s = field.neg(b)
        half = field.inv(field.of(2))
        q = field.add(m, field.add(
            field.mul(a, b), field.mul(x, field.mul(half, field.mul(b, b)))))
        return self.point(field, eps, eta, c, [x, q, r, s])

    def display_l(self, field, a, b, x, m):
        """The determined value of the display coordinate l."""
        half = field.inv(field.of(2))
        q = field.add(m, field.add(
            field.mul(a, b), field.mul(x, field.mul(half, field.mul(b, b)))))
        return field.neg(field.add(
            field.mul(half, field.mul(a, a)), field.mul(x, q)))

    def membership(self, field, X) -> MembershipResult:
        z = field.of(self.central)
        shifted = scalar_shift(field, X, z)
        if mat_rank(field, shifted) == 2:
            if _rank_pow(field, shifted, 2) == 0:
                t = "unipotent member" + (" (times -1)" if self.central < 0 else "")
            else:
                t = "semisimple or mixed member"
            return MembershipResult(True, f"rk(X - ({self.central}))=2", t)
        return MembershipResult(
            False, f"rk(X - ({self.central})) != 2")


# ---------------------------------------------------------------------------
# type C, sheet S2 (w = w0)
# ---------------------------------------------------------------------------

class CFamilyS2:
    """Sp_2n family x(E, V, X) = [[0, E V^-T], [-EV, -EVX]]."""

    def __init__(self, n: int):
        self.n = n
        self.ctx = GroupContext("Sp", n)
        self.w = catalog_w_S("C", n, "S2")

    def representative(self, field) -> Matrix:
        n, N = self.n, 2 * self.n
        m = [[field.zero] * N for _ in range(N)]
        for i in range(n):
            m[i][n + i] = field.one
            m[n + i][i] = field.neg(field.one)
        return tuple(tuple(r) for r in m)

    def point(self, field, e: Sequence[int], v_upper, x_sym) -> Matrix:
        n = self.n
        one, zero = field.one, field.zero
        V = [[one if i == j else (v_upper.get((i, j), zero) if i < j else zero)
              for j in range(n)] for i in range(n)]
        Xs = [[zero] * n for _ in range(n)]
        for (i, j), val in x_sym.items():
            Xs[i][j] = val
            if i != j:
                Xs[j][i] = val
        V = tuple(tuple(r) for r in V)
        Vt_inv = inverse(field, tuple(zip(*V)))
        E = [field.of(x) for x in e]
        N = 2 * n
        out = [[zero] * N for _ in range(N)]
        EV = [[field.mul(E[i], V[i][j]) for j in range(n)] for i in range(n)]
        EVX = [[fsum(field, (field.mul(EV[i][k], Xs[k][j]) for k in range(n)))
                for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                out[i][n + j] = field.mul(E[i], Vt_inv[i][j])
                out[n + i][j] = field.neg(EV[i][j])
                out[n + i][n + j] = field.neg(EVX[i][j])
        return tuple(tuple(r) for r in out)

    def components(self):
        out = []
        for e in _sign_vectors(self.n):
            out.append(Component(
                label=f"e={e}",
                coordinate="mu = l + 1/l in k",
                point=self._component_point(e),
            ))
        return out

    def _component_point(self, e):
        def point(field, mu):
            x_sym = {(i, i): field.neg(field.mul(mu, field.of(e[i])))
                     for i in range(self.n)}
            return self.point(field, e, {}, x_sym)

        return point

    def membership(self, field, X) -> MembershipResult:
        n = self.n
        for lam in (field.one, field.neg(field.one)):
            sh = scalar_shift(field, X, lam)
            if mat_rank(field, sh) == n and _rank_pow(field, sh, 2) == 0:
                return MembershipResult(
                    True, f"rk(X-({lam}))=n and square zero",
                    "unipotent (2^n) member up to sign")
        mu = _solve_mu_quadratic(field, X)
        if mu is not None and mu != field.of(2) and mu != field.of(-2):
            return MembershipResult(
                True, "X + X^-1 = mu with mu != +-2",
                "semisimple O_lambda member")
        return MembershipResult(False, "no S2 membership condition holds")


# ---------------------------------------------------------------------------
# type D, sheets S (n even) and R (n odd)
# ---------------------------------------------------------------------------

class DFamilyS:
    """SO_2n family x(E, D) = [[0, E],[E, D]] in 2x2 sign blocks, n = 2h."""

    def __init__(self, n: int, label: str = "S"):
        if n % 2:
            raise ValueError("DFamilyS needs even rank")
        self.n = n
        self.h = n // 2
        self.label = label
        self.ctx = GroupContext("SO-even", n)
        self.w = catalog_w_S("D", n, label)

    def representative(self, field) -> Matrix:
        n, N = self.n, 2 * self.n
        m = [[field.zero] * N for _ in range(N)]
        for b in range(self.h):
            i, j = 2 * b, 2 * b + 1
            # block J = [[0,1],[-1,0]] in both off-diagonal positions
            m[i][n + j] = field.one
            m[j][n + i] = field.neg(field.one)
            m[n + i][j] = field.one
            m[n + j][i] = field.neg(field.one)
        out = tuple(tuple(r) for r in m)
        if self.label == "thetaS":
            out = _theta_swap(field, out, self.n)
        return out

    def point(self, field, e: Sequence[int], x: Sequence) -> Matrix:
        if len(e) != self.h or len(x) != self.h:
            raise ValueError("need h signs and h coordinates")
        n, N = self.n, 2 * self.n
        m = [[field.zero] * N for _ in range(N)]
        for b in range(self.h):
            i, j = 2 * b, 2 * b + 1
            eb = field.of(e[b])
            m[i][n + j] = eb
            m[j][n + i] = field.neg(eb)
            m[n + i][j] = eb
            m[n + j][i] = field.neg(eb)
            d = field.neg(field.mul(eb, x[b]))
            m[n + i][n + i] = d
            m[n + j][n + j] = d
        out = tuple(tuple(r) for r in m)
        if self.label == "thetaS":
            out = _theta_swap(field, out, self.n)
        return out

    def components(self):
        out = []
        for e in _sign_vectors(self.h):
            out.append(Component(
                label=f"e={e}",
                coordinate="mu = l + 1/l in k",
                point=self._component_point(e),
            ))
        return out

    def _component_point(self, e):
        def point(field, mu):
            # D = mu * I on the solution line: x_b = -e_b * mu
            return self.point(
                field, e, [field.neg(field.mul(field.of(e[b]), mu))
                           for b in range(self.h)])

        return point

    def on_claimed_component(self, field, e, x) -> bool:
        vals = {field.mul(field.of(e[b]), x[b]) for b in range(self.h)}
        return len(vals) == 1

    def membership(self, field, X) -> MembershipResult:
        n = self.n
        for lam in (field.one, field.neg(field.one)):
            sh = scalar_shift(field, X, lam)
            if mat_rank(field, sh) == n and _rank_pow(field, sh, 2) == 0:
                return MembershipResult(
                    True, f"rk(X-({lam}))=n and square zero",
                    "very even unipotent (2^n) member up to sign")
        mu = _solve_mu_quadratic(field, X)
        if mu is not None and mu != field.of(2) and mu != field.of(-2):
            return MembershipResult(
                True, "X + X^-1 = mu with mu != +-2",
                "semisimple member")
        return MembershipResult(False, "no S membership condition holds")


def _theta_swap(field, m: Matrix, n: int) -> Matrix:
    """Conjugate by the coordinate swap u_n <-> w_n (the graph twist)."""
    N = 2 * n
    perm = list(range(N))
    perm[n - 1], perm[N - 1] = perm[N - 1], perm[n - 1]
    return tuple(
        tuple(m[perm[i]][perm[j]] for j in range(N)) for i in range(N)
    )


class DFamilyR:
    """SO_2n family for odd n: the even-rank family plus a (zeta, 1/zeta) leg."""

    def __init__(self, n: int, label: str = "R"):
        if n % 2 == 0:
            raise ValueError("DFamilyR needs odd rank")
        self.n = n
        self.h = (n - 1) // 2
        self.label = label
        self.ctx = GroupContext("SO-even", n)
        self.w = catalog_w_S("D", n, label)

    def representative(self, field) -> Matrix:
        n, N = self.n, 2 * self.n
        m = [[field.zero] * N for _ in range(N)]
        for b in range(self.h):
            i, j = 2 * b, 2 * b + 1
            m[i][n + j] = field.one
            m[j][n + i] = field.neg(field.one)
            m[n + i][j] = field.one
            m[n + j][i] = field.neg(field.one)
        m[n - 1][n - 1] = field.one
        m[N - 1][N - 1] = field.one
        return tuple(tuple(r) for r in m)

    def point(self, field, e: Sequence[int], x: Sequence, zeta) -> Matrix:
        n, N = self.n, 2 * self.n
        m = [[field.zero] * N for _ in range(N)]
        for b in range(self.h):
            i, j = 2 * b, 2 * b + 1
            eb = field.of(e[b])
            m[i][n + j] = eb
            m[j][n + i] = field.neg(eb)
            m[n + i][j] = eb
            m[n + j][i] = field.neg(eb)
            d = field.neg(field.mul(eb, x[b]))
            m[n + i][n + i] = d
            m[n + j][n + j] = d
        m[n - 1][n - 1] = zeta
        m[N - 1][N - 1] = field.inv(zeta)
        out = tuple(tuple(r) for r in m)
        if self.label == "thetaR":
            out = _theta_swap(field, out, self.n)
        return out

    def components(self):
        out = []
        for e in _sign_vectors(self.h):
            out.append(Component(
                label=f"e={e}",
                coordinate="zeta in k^* (mu = zeta + 1/zeta)",
                point=self._component_point(e),
            ))
        return out

    def _component_point(self, e):
        def point(field, zeta):
            mu = field.add(zeta, field.inv(zeta))
            return self.point(
                field, e,
                [field.neg(field.mul(field.of(e[b]), mu)) for b in range(self.h)],
                zeta)

        return point

    def membership(self, field, X) -> MembershipResult:
        n = self.n
        for lam in (field.one, field.neg(field.one)):
            sh = scalar_shift(field, X, lam)
            if mat_rank(field, sh) == n - 1 and _rank_pow(field, sh, 2) == 0:
                return MembershipResult(
                    True, f"rk(X-({lam}))=n-1 and square zero",
                    "unipotent (2^(n-1),1^2) member up to sign")
        mu = _solve_mu_quadratic(field, X)
        if mu is not None and mu != field.of(2) and mu != field.of(-2):
            return MembershipResult(
                True, "X + X^-1 = mu with mu != +-2",
                "semisimple member")
        return MembershipResult(False, "no R membership condition holds")


# ---------------------------------------------------------------------------
# type A (GL / SL)
# ---------------------------------------------------------------------------

class AFamily:
    """GL_{n+1} family over the m-th sheet, in the 3-block antidiagonal shape."""

    def __init__(self, n: int, m: int):
        if not 1 <= m <= (n + 1) // 2:
            raise ValueError("need 1 <= m <= (n+1)/2")
        self.n = n
        self.m = m
        self.ctx = GroupContext("GL", n)
        self.w = catalog_w_S("A", n, f"S_{m}")

    def representative(self, field) -> Matrix:
        n1, m = self.n + 1, self.m
        out = [[field.zero] * n1 for _ in range(n1)]
        for c in range(m):
            out[c][n1 - 1 - c] = field.one                 # J_m block, top right
            out[n1 - 1 - c][c] = field.neg(field.one)      # -J_m, bottom left
        for i in range(m, n1 - m):
            out[i][i] = field.one
        return tuple(tuple(r) for r in out)

    def point(self, field, a: Sequence, b, zeta: Sequence) -> Matrix:
        """wdot * diag(a_1..a_m, b,..,b, a_m..a_1) * prod x_{e_c - e_{n+2-c}}(z_c)."""
        n1, m = self.n + 1, self.m
        t = [field.zero] * n1
        for c in range(m):
            t[c] = a[c]
            t[n1 - 1 - c] = a[c]
        for i in range(m, n1 - m):
            t[i] = b
        tu = [[field.zero] * n1 for _ in range(n1)]
        for i in range(n1):
            tu[i][i] = t[i]
        for c in range(m):
            tu[c][n1 - 1 - c] = field.mul(t[c], zeta[c])
        wd = self.representative(field)
        return mat_mul(field, wd, tuple(tuple(r) for r in tu))

    def components(self):
        out = []
        for signs in _sign_vectors(self.m - 1):
            out.append(Component(
                label=f"signs={(1,) + signs}",
                coordinate="(a, b) in k^* x k^*",
                point=self._component_point((1,) + signs),
                coord_arity=2,
            ))
        return out

    def _component_point(self, signs):
        def point(field, ab):
            a, b = ab
            if field.is_zero(a) or field.is_zero(b):
                raise ValueError("component coordinates live in k^* x k^*")
            # zeta_1 from b^2 + a*zeta_1*b + a^2 = 0
            z1 = field.neg(field.div(
                field.add(field.mul(a, a), field.mul(b, b)), field.mul(a, b)))
            avec = [field.mul(field.of(s), a) for s in signs]
            zvec = [field.mul(field.of(s), z1) for s in signs]
            return self.point(field, avec, b, zvec)

        return point

    def on_claimed_component(self, field, a, b, zeta) -> bool:
        m = self.m
        base = field.mul(a[0], zeta[0])
        for c in range(m):
            if field.mul(a[c], a[c]) != field.mul(a[0], a[0]):
                return False
            if field.mul(a[c], zeta[c]) != base:
                return False
        lhs = field.add(field.mul(b, b), field.add(
            field.mul(field.mul(a[0], zeta[0]), b), field.mul(a[0], a[0])))
        return field.is_zero(lhs)

    def membership(self, field, X) -> MembershipResult:
        n1, m = self.n + 1, self.m
        # unipotent-up-to-scalar branch
        p = field.char
        cands = []
        if p == 0 or n1 % p != 0:
            tr = fsum(field, (X[i][i] for i in range(n1)))
            cands.append(field.div(tr, field.of(n1)))
        else:
            from .linalg import charpoly, poly_eval

            cp = charpoly(field, X)
            cands.extend(z for z in field.elements()
                         if field.is_zero(poly_eval(field, cp, z)))
        for z in cands:
            if field.is_zero(z):
                continue
            sh = scalar_shift(field, X, z)
            if mat_rank(field, sh) == m and _rank_pow(field, sh, 2) == 0:
                return MembershipResult(
                    True, f"X = z*(unipotent (2^{m},1^{n1 - 2 * m}))",
                    "unipotent member up to scalar")
        # semisimple branch: minimal polynomial x^2 - s*x + p0
        got = _solve_deg2(field, X)
        if got is not None:
            s, p0 = got
            disc = field.sub(field.mul(s, s),
                             field.mul(field.of(4), p0))
            if not field.is_zero(disc) and not field.is_zero(p0):
                sq = field.sqrt(disc)
                if sq is None:
                    # conjugate eigenvalue pair: multiplicities match, need n1 = 2m
                    if n1 == 2 * m:
                        return MembershipResult(
                            True, "semisimple, conjugate eigenvalue pair",
                            "semisimple member (non-split)")
                    return MembershipResult(
                        False, "conjugate pair forces equal multiplicities")
                half = field.inv(field.of(2))
                lam = field.mul(half, field.add(s, sq))
                mult = n1 - mat_rank(field, scalar_shift(field, X, lam))
                if mult in (m, n1 - m):
                    return MembershipResult(
                        True, "semisimple, multiplicities (n+1-m, m)",
                        "semisimple member")
                return MembershipResult(
                    False, f"semisimple but multiplicity {mult} not in "
                           f"{{{m}, {n1 - m}}}")
        return MembershipResult(False, "no S_m membership condition holds")


def _solve_deg2(field, g):
    """(s, p) with g^2 - s*g + p*I = 0, else None; g must be non-scalar."""
    n = len(g)
    gsq = mat_mul(field, g, g)
    s = None
    for i in range(n):
        for j in range(n):
            if i != j and not field.is_zero(g[i][j]):
                s = field.div(gsq[i][j], g[i][j])
                break
        if s is not None:
            break
    if s is None:
        # g diagonal but not scalar: s, p from two distinct diagonal entries
        for i in range(n):
            for j in range(n):
                if i != j and g[i][i] != g[j][j]:
                    s = field.add(g[i][i], g[j][j])
                    break
            if s is not None:
                break
    if s is None:
        return None
    p = field.sub(field.mul(s, g[0][0]), gsq[0][0])
    # compare g^2 with s*g - p*I
    want = [[field.sub(field.mul(s, g[i][j]), (p if i == j else field.zero))
             for j in range(n)] for i in range(n)]
    if all(gsq[i][j] == want[i][j] for i in range(n) for j in range(n)):
        return s, p
    return None


# ---------------------------------------------------------------------------
# E6 / E7 at the root-datum level
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ETuplePoint:
    """A slice point recorded by torus coordinates and unipotent coefficients."""

    torus: tuple
    unipotent: tuple


class E6Family:
    """Root-datum family: torus coordinates (h1,h3,h4,h5,h6) and (c_beta, c_gamma)."""

    rank = 6

    def components(self):
        return [
            Component(
                label=f"eps={eps}",
                coordinate="(a, d) with d^2 = a^3, a != 0",
                point=self._component_point(eps),
                coord_arity=2,
            )
            for eps in (1, -1)
        ]

    def _component_point(self, eps):
        def point(field, ad):
            a, d = ad
            if field.mul(d, d) != field.mul(a, field.mul(a, a)):
                raise ValueError("need d^2 = a^3")
            e = field.of(eps)
            ainv = field.inv(a)
            dinv = field.inv(d)
            a2 = field.mul(a, a)
            coeff = field.add(field.mul(field.mul(ainv, ainv), ainv), field.one)
            return ETuplePoint(
                torus=(
                    field.mul(e, field.mul(a2, field.mul(dinv, dinv))),  # h1
                    field.mul(e, field.mul(a, dinv)),                    # h3
                    e,                                                   # h4
                    field.mul(e, field.mul(a2, dinv)),                   # h5
                    field.mul(e, a),                                     # h6
                ),
                unipotent=(
                    field.neg(field.mul(d, coeff)),                      # x_beta
                    field.neg(field.mul(e, field.mul(d, coeff))),        # x_gamma
                ),
            )

        return point

    def membership(self, field, pt: ETuplePoint) -> MembershipResult:
        h1, h3, h4, h5, h6 = pt.torus
        cb, cg = pt.unipotent
        eps = h4
        if field.mul(eps, eps) != field.one:
            return MembershipResult(False, "h4 is not a sign")
        a = field.mul(eps, h6)
        if field.is_zero(a):
            return MembershipResult(False, "a = 0")
        if field.is_zero(h3):
            return MembershipResult(False, "h3 = 0")
        d = field.div(field.mul(eps, a), h3)
        if field.mul(d, d) != field.mul(a, field.mul(a, a)):
            return MembershipResult(False, "curve relation d^2 = a^3 fails")
        probe = self._component_point(1 if eps == field.one else -1)(
            field, (a, d))
        if probe.torus == pt.torus and probe.unipotent == pt.unipotent:
            return MembershipResult(True, "matches the curve parametrization",
                                    "curve component point")
        return MembershipResult(False, "tuple off the curve parametrization")


class E7Family:
    """Root-datum family: torus coordinates (h2,h3,h5,h7) and three coefficients."""

    rank = 7

    def components(self):
        out = []
        for signs in _sign_vectors(3):
            out.append(Component(
                label=f"(eps,eta,theta)={signs}",
                coordinate="mu = a + 1/a in k",
                point=self._component_point(signs),
            ))
        return out

    def _component_point(self, signs):
        eps, eta, theta = signs

        def point(field, mu):
            e, h, t = field.of(eps), field.of(eta), field.of(theta)
            return ETuplePoint(
                torus=(h, field.mul(e, h), e, field.mul(field.mul(e, h), t)),
                unipotent=(
                    field.neg(field.mul(e, mu)),
                    field.neg(field.mul(h, mu)),
                    field.neg(field.mul(t, mu)),
                ),
            )

        return point

    def membership(self, field, pt: ETuplePoint) -> MembershipResult:
        h2, h3, h5, h7 = pt.torus
        cb, cg, c7 = pt.unipotent
        eps, eta = h5, h2
        for s in (eps, eta):
            if field.mul(s, s) != field.one:
                return MembershipResult(False, "torus coordinate is not a sign")
        if h3 != field.mul(eps, eta):
            return MembershipResult(False, "h3 != h5*h2")
        theta = field.div(h7, h3)
        if field.mul(theta, theta) != field.one:
            return MembershipResult(False, "h7/h3 is not a sign")
        mu = field.neg(field.mul(eps, cb))
        if cg != field.neg(field.mul(eta, mu)):
            return MembershipResult(False, "x_gamma coefficient off the line")
        if c7 != field.neg(field.mul(theta, mu)):
            return MembershipResult(False, "x_alpha7 coefficient off the line")
        return MembershipResult(True, "matches the sign-line parametrization",
                                "line component point")


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

def build_family(descriptor: SheetDescriptor):
    t, n, label = descriptor.group_type, descriptor.rank, descriptor.label
    if t == "B" and label == "S":
        return BFamilyS(n)
    if t == "B" and label == "Sprime":
        return TwoFlipFamily("B", n, label)
    if t == "C" and label in ("S1", "-S1"):
        return TwoFlipFamily("C", n, label)
    if t == "C" and label == "S2":
        return CFamilyS2(n)
    if t == "D" and label in ("S", "thetaS"):
        return DFamilyS(n, label)
    if t == "D" and label in ("R", "thetaR"):
        return DFamilyR(n, label)
    if t == "D" and label == "Sprime":
        return TwoFlipFamily("D", n, label)
    if t == "A":
        return AFamily(n, int(label.split("_")[1]))
    if t == "E" and n == 6:
        return E6Family()
    if t == "E" and n == 7:
        return E7Family()
    raise ValueError(f"no slice family for {t}{n} {label}")


def family_for(group_type: str, rank: int, label: str):
    for d in sheet_catalog(group_type, rank):
        if d.label == label:
            return build_family(d)
    raise ValueError(f"no catalog sheet {label} in {group_type}{rank}")

"""Classical matrix groups in the coordinates the slice catalog uses.

SL_{n+1} acts on k^{n+1}; Sp_2n preserves [[0,I],[-I,0]] on coordinates
(u_1..u_n, w_1..w_n); SO_2n+1 preserves [[1,0,0],[0,0,I],[0,I,0]] on
(z, u, w); SO_2n preserves [[0,I],[I,0]].  The diagonal torus carries the
epsilon-characters, root subgroups are explicit one-parameter matrices,
and monomial Weyl representatives come from reduced words.

Bruhat decoding runs against the upper-triangular Borel of the standard
positive system after the fixed flag reordering of coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .linalg import (
    Matrix,
    bruhat_permutation,
    det,
    identity,
    kernel_dimension,
    mat_mul,
    transpose,
)
from .rootsys import Vector, WeylElement, build_root_system

Coord = tuple[str, int]  # ("z",0) | ("u",i) | ("w",i), i zero-based


class GroupContext:
    """One classical group: coordinates, form, roots, torus, Weyl lift."""

    def __init__(self, label: str, rank: int):
        if label not in ("SL", "GL", "Sp", "SO-odd", "SO-even"):
            raise ValueError(f"unknown group label {label!r}")
        self.label = label
        self.rank = rank
        if label in ("SL", "GL"):
            self.system = build_root_system("A", rank)
            self.size = rank + 1
            self.coords: list[Coord] = [("u", i) for i in range(rank + 1)]
        elif label == "Sp":
            self.system = build_root_system("C", rank)
            self.size = 2 * rank
            self.coords = [("u", i) for i in range(rank)] + [
                ("w", i) for i in range(rank)
            ]
        elif label == "SO-odd":
            self.system = build_root_system("B", rank)
            self.size = 2 * rank + 1
            self.coords = [("z", 0)] + [("u", i) for i in range(rank)] + [
                ("w", i) for i in range(rank)
            ]
        else:
            self.system = build_root_system("D", rank)
            self.size = 2 * rank
            self.coords = [("u", i) for i in range(rank)] + [
                ("w", i) for i in range(rank)
            ]
        self._pos = {c: i for i, c in enumerate(self.coords)}
        self.flag_order = self._flag_order()

    # -- structure -------------------------------------------------------

    def form(self, field) -> Optional[Matrix]:
        """The invariant bilinear form, or None for SL/GL."""
        if self.label in ("SL", "GL"):
            return None
        n, N = self.rank, self.size
        j = [[field.zero] * N for _ in range(N)]
        if self.label == "Sp":
            for i in range(n):
                j[i][n + i] = field.one
                j[n + i][i] = field.neg(field.one)
        elif self.label == "SO-odd":
            j[0][0] = field.one
            for i in range(n):
                j[1 + i][1 + n + i] = field.one
                j[1 + n + i][1 + i] = field.one
        else:
            for i in range(n):
                j[i][n + i] = field.one
                j[n + i][i] = field.one
        return tuple(tuple(row) for row in j)

    def dimension(self) -> int:
        n, N = self.rank, self.size
        if self.label == "SL":
            return N * N - 1
        if self.label == "GL":
            return N * N
        if self.label == "Sp":
            return n * (2 * n + 1)
        return N * (N - 1) // 2

    def weight_of(self, coord: Coord) -> Vector:
        """Torus character of a defining-representation coordinate."""
        dim = self.system.dim
        kind, i = coord
        if kind == "z":
            return tuple(Fraction(0) for _ in range(dim))
        sign = 1 if kind == "u" else -1
        return tuple(Fraction(sign if j == i else 0) for j in range(dim))

    def _flag_order(self) -> tuple[int, ...]:
        """Coordinate order making the standard Borel upper triangular."""
        rho = tuple(Fraction(0) for _ in range(self.system.dim))
        for r in self.system.positive_roots:
            rho = tuple(a + b for a, b in zip(rho, r))
        if self.label in ("SL", "GL"):
            # epsilon-weights already sorted by the rho-functional
            keyed = []
            for idx, c in enumerate(self.coords):
                w = self.weight_of(c)
                keyed.append((-sum(a * b for a, b in zip(w, rho)), idx))
            return tuple(idx for _, idx in sorted(keyed))
        keyed = []
        for idx, c in enumerate(self.coords):
            w = self.weight_of(c)
            keyed.append((-sum(a * b for a, b in zip(w, rho)), idx))
        return tuple(idx for _, idx in sorted(keyed))

    # -- element constructors ---------------------------------------------

    def torus(self, field, values: Sequence) -> Matrix:
        """Diagonal torus element with epsilon_i(t) = values[i].

        For SL/GL, values has length rank+1 (all diagonal entries).
        """
        N = self.size
        m = [[field.zero] * N for _ in range(N)]
        if self.label in ("SL", "GL"):
            if len(values) != N:
                raise ValueError("need one value per diagonal entry")
            for i, v in enumerate(values):
                m[i][i] = v
        else:
            if len(values) != self.rank:
                raise ValueError("need one value per epsilon coordinate")
            for i, v in enumerate(values):
                m[self._pos[("u", i)]][self._pos[("u", i)]] = v
                m[self._pos[("w", i)]][self._pos[("w", i)]] = field.inv(v)
            if self.label == "SO-odd":
                m[self._pos[("z", 0)]][self._pos[("z", 0)]] = field.one
        return tuple(tuple(row) for row in m)

    def root_element(self, field, root: Vector, c) -> Matrix:
        """The one-parameter root subgroup element x_root(c)."""
        nz = [(i, x) for i, x in enumerate(root) if x != 0]
        m = [list(row) for row in identity(field, self.size)]
        p = self._pos
        if self.label in ("SL", "GL"):
            (i, xi), (j, xj) = nz
            if xi == 1 and xj == -1:
                m[p[("u", i)]][p[("u", j)]] = c
            elif xi == -1 and xj == 1:
                m[p[("u", j)]][p[("u", i)]] = c
            else:
                raise ValueError(f"{root} is not an A-type root")
            return tuple(tuple(r) for r in m)
        if len(nz) == 2:
            (i, xi), (j, xj) = nz
            if (xi, xj) == (1, -1):
                m[p[("u", i)]][p[("u", j)]] = c
                m[p[("w", j)]][p[("w", i)]] = field.neg(c)
            elif (xi, xj) == (-1, 1):
                m[p[("u", j)]][p[("u", i)]] = c
                m[p[("w", i)]][p[("w", j)]] = field.neg(c)
            elif (xi, xj) == (1, 1):
                m[p[("u", i)]][p[("w", j)]] = c
                other = field.neg(c) if self.label.startswith("SO") else c
                m[p[("u", j)]][p[("w", i)]] = other
            elif (xi, xj) == (-1, -1):
                m[p[("w", i)]][p[("u", j)]] = c
                other = field.neg(c) if self.label.startswith("SO") else c
                m[p[("w", j)]][p[("u", i)]] = other
            else:
                raise ValueError(f"{root} is not a root of {self.label}")
            return tuple(tuple(r) for r in m)
        (i, xi) = nz[0]
        if self.label == "Sp":
            if xi == 2:
                m[p[("u", i)]][p[("w", i)]] = c
            elif xi == -2:
                m[p[("w", i)]][p[("u", i)]] = c
            else:
                raise ValueError(f"{root} is not a C-type root")
            return tuple(tuple(r) for r in m)
        if self.label == "SO-odd":
            half = field.inv(field.of(2))
            cc = field.mul(field.mul(c, c), half)
            if xi == 1:
                m[p[("u", i)]][p[("z", 0)]] = c
                m[p[("z", 0)]][p[("w", i)]] = field.neg(c)
                m[p[("u", i)]][p[("w", i)]] = field.neg(cc)
            elif xi == -1:
                m[p[("w", i)]][p[("z", 0)]] = c
                m[p[("z", 0)]][p[("u", i)]] = field.neg(c)
                m[p[("w", i)]][p[("u", i)]] = field.neg(cc)
            else:
                raise ValueError(f"{root} is not a B-type root")
            return tuple(tuple(r) for r in m)
        raise ValueError(f"{root} is not a root of {self.label}")

    def weyl_representative(self, field, w: WeylElement) -> Matrix:
        """Monomial lift of w: product of x_a(1)x_{-a}(-1)x_a(1) over a word."""
        out = identity(field, self.size)
        for i in w.reduced_word():
            a = self.system.simple_roots[i]
            na = tuple(-x for x in a)
            s = mat_mul(
                field,
                mat_mul(
                    field,
                    self.root_element(field, a, field.one),
                    self.root_element(field, na, field.neg(field.one)),
                ),
                self.root_element(field, a, field.one),
            )
            out = mat_mul(field, out, s)
        return out

    # -- predicates --------------------------------------------------------

    def in_group(self, field, g: Matrix) -> bool:
        j = self.form(field)
        if j is not None:
            lhs = mat_mul(field, mat_mul(field, transpose(g), j), g)
            if lhs != j:
                return False
        if self.label in ("SL", "SO-odd", "SO-even"):
            return det(field, g) == field.one
        if self.label == "GL":
            return not field.is_zero(det(field, g))
        return True  # Sp: form preservation forces det 1

    # -- Bruhat decoding ----------------------------------------------------

    def bruhat_word(self, field, g: Matrix) -> WeylElement:
        """The Weyl element w with g in BwB for the standard Borel."""
        if self.label not in ("SL", "GL") and not self.in_group(field, g):
            raise ValueError("matrix does not preserve the tagged form")
        if field.is_zero(det(field, g)):
            raise ValueError("matrix is singular")
        order = self.flag_order
        flagged = tuple(
            tuple(g[order[i]][order[j]] for j in range(self.size))
            for i in range(self.size)
        )
        perm = bruhat_permutation(field, flagged)
        # perm[j] = i means the cell permutation sends flag coord j to i,
        # i.e. the Weyl element maps weight mu_j to mu_{perm[j]}
        images: dict[int, Vector] = {}
        zero = tuple(Fraction(0) for _ in range(self.system.dim))
        for jj in range(self.size):
            mu = self.weight_of(self.coords[order[jj]])
            nu = self.weight_of(self.coords[order[perm[jj]]])
            if mu == zero:
                if nu != zero:
                    raise AssertionError("cell permutation moved the null weight")
                continue
            images[self._weight_key(mu)] = nu
        w = self._weyl_from_eps_images(images)
        return w

    def _weight_key(self, mu: Vector) -> tuple:
        return tuple(mu)

    def _weyl_from_eps_images(self, images: dict) -> WeylElement:
        sys = self.system
        dim = sys.dim
        cols = []
        for a in sys.simple_roots:
            img = tuple(Fraction(0) for _ in range(dim))
            for i, coef in enumerate(a):
                if coef:
                    e = tuple(Fraction(int(k == i)) for k in range(dim))
                    target = images[self._weight_key(e)]
                    img = tuple(x + coef * y for x, y in zip(img, target))
            try:
                cols.append(sys.coefficients(img))
            except KeyError as exc:
                raise AssertionError(
                    "cell permutation does not normalise the root system"
                ) from exc
        n = sys.rank
        matrix = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        w = WeylElement(sys, matrix)
        if self.label == "SO-even":
            flips = sum(1 for _, s in w.signed_permutation() if s < 0)
            if flips % 2:
                raise AssertionError("decoded permutation lies outside W(D_n)")
        return w

    # -- slice building blocks ----------------------------------------------

    def inverted_positive_roots(self, w: WeylElement) -> list[Vector]:
        """{a > 0 : w(a) < 0}, in a fixed deterministic order."""
        sys = self.system
        out = [
            r for r in sys.positive_roots
            if not sys.is_positive_root(w.apply_root(r))
        ]
        return sorted(out, key=lambda r: (sys.height(r), r))

    def negated_positive_roots(self, w: WeylElement) -> list[Vector]:
        """{a > 0 : w(a) = -a}; the slice's unipotent directions."""
        return [
            r for r in self.system.positive_roots
            if w.apply_root(r) == tuple(-x for x in r)
        ]

    def torus_fixed_points(self, field, w: WeylElement) -> list[Matrix]:
        """All F_q-points of T^w = {t : w(t) = t}."""
        if field.order is None:
            raise TypeError("enumeration needs a finite field")
        sp = w.signed_permutation()
        n = self.rank if self.label not in ("SL", "GL") else self.rank + 1
        units = [x for x in field.elements() if not field.is_zero(x)]
        out = []
        for combo in _tuples(units, n):
            if self.label == "SL" and _prod(field, combo) != field.one:
                continue
            ok = True
            for i in range(n):
                j, s = sp[i]
                target = combo[j] if s > 0 else field.inv(combo[j])
                if combo[i] != target:
                    ok = False
                    break
            if ok:
                out.append(self.torus(field, combo))
        return out

    def unipotent_points(self, field, roots: Sequence[Vector]):
        """Iterate products of x_a(c_a) over all F_q coefficient tuples."""
        if field.order is None:
            raise TypeError("enumeration needs a finite field")
        elems = list(field.elements())

        def rec(i, acc):
            if i == len(roots):
                yield acc
                return
            for c in elems:
                nxt = acc if field.is_zero(c) else mat_mul(
                    field, acc, self.root_element(field, roots[i], c))
                yield from rec(i + 1, nxt)

        yield from rec(0, identity(field, self.size))

    # -- invariants -----------------------------------------------------------

    def class_dimension(self, field, g: Matrix) -> int:
        """dim of the conjugacy class: dim G minus the Lie centralizer."""
        N = self.size
        rows = []
        # [X, g] = 0: for each (a, b): sum_k X[a][k] g[k][b] - g[a][k] X[k][b] = 0
        for a in range(N):
            for b in range(N):
                row = [field.zero] * (N * N)
                for k in range(N):
                    row[a * N + k] = field.add(row[a * N + k], g[k][b])
                    row[k * N + b] = field.sub(row[k * N + b], g[a][k])
                rows.append(row)
        j = self.form(field)
        if j is None:
            # gl centralizer; sl correction cancels in the dimension count
            d_matrix = kernel_dimension(field, tuple(tuple(r) for r in rows))
            return N * N - d_matrix
        # X^T J + J X = 0
        for a in range(N):
            for b in range(N):
                row = [field.zero] * (N * N)
                for k in range(N):
                    row[k * N + a] = field.add(row[k * N + a], j[k][b])
                    row[k * N + b] = field.add(row[k * N + b], j[a][k])
                rows.append(row)
        d = kernel_dimension(field, tuple(tuple(r) for r in rows))
        return self.dimension() - d


def _tuples(values, n):
    if n == 0:
        yield ()
        return
    for rest in _tuples(values, n - 1):
        for v in values:
            yield rest + (v,)


def _prod(field, values):
    out = field.one
    for v in values:
        out = field.mul(out, v)
    return out


def group_context(label: str, rank: int) -> GroupContext:
    return GroupContext(label, rank)


def sl_class_dimension(field, g: Matrix) -> int:
    """Class dimension inside SL via the GL centralizer (char-robust)."""
    N = len(g)
    ctx = GroupContext("SL", N - 1)
    return ctx.class_dimension(field, g)

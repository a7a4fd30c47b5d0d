"""Root systems of all simple types and their Weyl groups.

Roots live in the standard orthonormal coordinate models, as tuples of
``Fraction``; Weyl elements are exact integer matrices on the root
lattice (basis: the simple roots).  Lengths, reduced words, Bruhat order
and parabolic longest elements are all computed combinatorially.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .linalg import rank as _rank
from .fields import QQ

Vector = tuple[Fraction, ...]

#: number of roots per type, used as a construction invariant
ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": {6: 72, 7: 126, 8: 240},
    "F": {4: 48},
    "G": {2: 12},
}

#: degrees of the fundamental invariants; |W| is their product
WEYL_DEGREES = {
    "A": lambda n: list(range(2, n + 2)),
    "B": lambda n: list(range(2, 2 * n + 1, 2)),
    "C": lambda n: list(range(2, 2 * n + 1, 2)),
    "D": lambda n: list(range(2, 2 * n - 1, 2)) + [n],
    "E": {6: [2, 5, 6, 8, 9, 12], 7: [2, 6, 8, 10, 12, 14, 18],
          8: [2, 8, 12, 14, 18, 20, 24, 30]},
    "F": {4: [2, 6, 8, 12]},
    "G": {2: [2, 6]},
}

_VALID = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def _frac_vec(entries) -> Vector:
    return tuple(Fraction(x) for x in entries)


def _unit(dim: int, i: int, c=1) -> Vector:
    return _frac_vec([c if j == i else 0 for j in range(dim)])


def _add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def _sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def _scale(c, v: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _simple_roots(label: str, n: int) -> tuple[list[Vector], int]:
    if label == "A":
        dim = n + 1
        simples = [_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(n)]
    elif label == "B":
        dim = n
        simples = [_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(n - 1)]
        simples.append(_unit(dim, n - 1))
    elif label == "C":
        dim = n
        simples = [_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(n - 1)]
        simples.append(_unit(dim, n - 1, 2))
    elif label == "D":
        dim = n
        simples = [_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(n - 1)]
        simples.append(_add(_unit(dim, n - 2), _unit(dim, n - 1)))
    elif label == "E":
        dim = 8
        half = Fraction(1, 2)
        a1 = tuple(
            half if i in (0, 7) else -half for i in range(8)
        )
        e8 = [
            a1,
            _add(_unit(8, 0), _unit(8, 1)),
            _sub(_unit(8, 1), _unit(8, 0)),
            _sub(_unit(8, 2), _unit(8, 1)),
            _sub(_unit(8, 3), _unit(8, 2)),
            _sub(_unit(8, 4), _unit(8, 3)),
            _sub(_unit(8, 5), _unit(8, 4)),
            _sub(_unit(8, 6), _unit(8, 5)),
        ]
        simples = e8[:n]
    elif label == "F":
        dim = 4
        half = Fraction(1, 2)
        simples = [
            _sub(_unit(4, 1), _unit(4, 2)),
            _sub(_unit(4, 2), _unit(4, 3)),
            _unit(4, 3),
            (half, -half, -half, -half),
        ]
    elif label == "G":
        dim = 3
        simples = [
            _sub(_unit(3, 0), _unit(3, 1)),
            _add(_scale(-2, _unit(3, 0)), _add(_unit(3, 1), _unit(3, 2))),
        ]
    else:
        raise ValueError(f"unknown type {label!r}")
    return simples, dim


class RootSystem:
    """An irreducible root system in its standard coordinate model."""

    def __init__(self, label: str, rank: int):
        label = label.upper()
        if label not in _VALID or not _VALID[label](rank):
            raise ValueError(f"({label}, {rank}) is not a valid simple type")
        self.label = label
        self.rank = rank
        simples, dim = _simple_roots(label, rank)
        self.dim = dim
        self.simple_roots: tuple[Vector, ...] = tuple(simples)
        self.roots: tuple[Vector, ...] = self._generate_roots()
        self._index = {r: i for i, r in enumerate(self.roots)}
        self._coeffs = tuple(self._expand(r) for r in self.roots)
        self.positive_roots: tuple[Vector, ...] = tuple(
            r for r, c in zip(self.roots, self._coeffs) if all(x >= 0 for x in c)
        )
        expected = ROOT_COUNTS[label]
        expected = expected(rank) if callable(expected) else expected[rank]
        if len(self.roots) != expected:
            raise AssertionError(
                f"{label}{rank}: generated {len(self.roots)} roots, expected {expected}"
            )
        self.cartan = tuple(
            tuple(self.pair(a, b) for b in self.simple_roots)
            for a in self.simple_roots
        )
        self._simple_refl_mats = tuple(
            self._simple_reflection_matrix(i) for i in range(rank)
        )
        self._gram_inv = self._span_projector()

    # -- construction helpers -------------------------------------------

    def pair(self, a: Vector, b: Vector) -> int:
        """Cartan pairing <a, b^vee> = 2(a,b)/(b,b)."""
        val = 2 * dot(a, b) / dot(b, b)
        if val.denominator != 1:
            raise ValueError("non-integral pairing")
        return int(val)

    def reflect(self, v: Vector, root: Vector) -> Vector:
        return _sub(v, _scale(2 * dot(v, root) / dot(root, root), root))

    def _generate_roots(self) -> tuple[Vector, ...]:
        found = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            nxt = []
            for r in frontier:
                for s in self.simple_roots:
                    img = self.reflect(r, s)
                    if img not in found:
                        found.add(img)
                        nxt.append(img)
            frontier = nxt
        return tuple(sorted(found))

    def _expand(self, root: Vector) -> tuple[int, ...]:
        """Integer coefficients of a root in the simple-root basis."""
        cols = list(self.simple_roots)
        aug = [[cols[j][i] for j in range(self.rank)] + [root[i]]
               for i in range(self.dim)]
        # Gaussian elimination over Q; the system is consistent by construction.
        r = 0
        pivots = []
        for c in range(self.rank):
            piv = next((i for i in range(r, self.dim) if aug[i][c] != 0), None)
            if piv is None:
                continue
            aug[r], aug[piv] = aug[piv], aug[r]
            pv = aug[r][c]
            aug[r] = [x / pv for x in aug[r]]
            for i in range(self.dim):
                if i != r and aug[i][c] != 0:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
            pivots.append(c)
            r += 1
        coeffs = [Fraction(0)] * self.rank
        for row, c in enumerate(pivots):
            coeffs[c] = aug[row][-1]
        if any(x.denominator != 1 for x in coeffs):
            raise AssertionError("root with non-integer simple-root expansion")
        return tuple(int(x) for x in coeffs)

    def _simple_reflection_matrix(self, i: int) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        m = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
        for j in range(n):
            m[i][j] -= self.cartan[j][i]  # s_i(a_j) = a_j - <a_j, a_i^vee> a_i
        return tuple(tuple(row) for row in m)

    def _span_projector(self):
        """Data for exact projection of ambient vectors onto the root span."""
        g = [[dot(a, b) for b in self.simple_roots] for a in self.simple_roots]
        n = self.rank
        aug = [list(map(Fraction, g[i])) + [Fraction(int(i == j)) for j in range(n)]
               for i in range(n)]
        for c in range(n):
            piv = next(i for i in range(c, n) if aug[i][c] != 0)
            aug[c], aug[piv] = aug[piv], aug[c]
            pv = aug[c][c]
            aug[c] = [x / pv for x in aug[c]]
            for i in range(n):
                if i != c and aug[i][c] != 0:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
        return tuple(tuple(row[n:]) for row in aug)

    # -- basic queries ---------------------------------------------------

    def root_index(self, root: Vector) -> int:
        return self._index[root]

    def coefficients(self, root: Vector) -> tuple[int, ...]:
        return self._coeffs[self._index[root]]

    def is_positive_root(self, root: Vector) -> bool:
        return all(c >= 0 for c in self.coefficients(root))

    def height(self, root: Vector) -> int:
        return sum(self.coefficients(root))

    def highest_root(self) -> Vector:
        return max(self.positive_roots, key=self.height)

    def span_coefficients(self, v: Vector) -> tuple[Fraction, ...]:
        """Rational coordinates of the span-component of v in the simple basis."""
        rhs = [dot(v, a) for a in self.simple_roots]
        return tuple(
            sum((self._gram_inv[i][j] * rhs[j] for j in range(self.rank)),
                Fraction(0))
            for i in range(self.rank)
        )

    def from_coefficients(self, coeffs: Sequence) -> Vector:
        v = tuple(Fraction(0) for _ in range(self.dim))
        for c, a in zip(coeffs, self.simple_roots):
            v = _add(v, _scale(c, a))
        return v

    # -- Weyl elements ---------------------------------------------------

    def identity_element(self) -> "WeylElement":
        n = self.rank
        return WeylElement(self, tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def simple_reflection(self, i: int) -> "WeylElement":
        return WeylElement(self, self._simple_refl_mats[i])

    def reflection(self, root: Vector) -> "WeylElement":
        cols = []
        for a in self.simple_roots:
            img = self.reflect(a, root)
            cols.append(self.coefficients(img))
        n = self.rank
        matrix = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        return WeylElement(self, matrix)

    def weyl_order(self) -> int:
        degs = WEYL_DEGREES[self.label]
        degs = degs(self.rank) if callable(degs) else degs[self.rank]
        out = 1
        for d in degs:
            out *= d
        return out

    def weyl_order_by_orbit(self) -> int:
        """|W| as the size of the orbit of a regular dominant vector.

        Independent of the degree table; exponential in rank, use <= E6.
        """
        rho = tuple(Fraction(0) for _ in range(self.dim))
        for r in self.positive_roots:
            rho = _add(rho, r)
        seen = {rho}
        frontier = [rho]
        while frontier:
            nxt = []
            for v in frontier:
                for a in self.simple_roots:
                    img = self.reflect(v, a)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return len(seen)

    def all_elements(self) -> list["WeylElement"]:
        """Every Weyl group element, by closure (small ranks only)."""
        e = self.identity_element()
        seen = {e.matrix: e}
        frontier = [e]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    ws = w.mul(self.simple_reflection(i))
                    if ws.matrix not in seen:
                        seen[ws.matrix] = ws
                        nxt.append(ws)
            frontier = nxt
        return list(seen.values())

    def debug_dump(self) -> str:
        """Root list in coordinate form, one root per line."""
        lines = [f"{self.label}{self.rank} roots ({len(self.roots)})"]
        for r in self.roots:
            tag = "+" if self.is_positive_root(r) else "-"
            lines.append(tag + " " + " ".join(str(x) for x in r))
        return "\n".join(lines)

    def __repr__(self):
        return f"RootSystem({self.label}{self.rank})"


class WeylElement:
    """An orthogonal root-lattice automorphism with cached length data."""

    __slots__ = ("system", "matrix", "_length", "_word")

    def __init__(self, system: RootSystem, matrix):
        self.system = system
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        self._length: Optional[int] = None
        self._word: Optional[tuple[int, ...]] = None

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.system is other.system
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash(self.matrix)

    def mul(self, other: "WeylElement") -> "WeylElement":
        n = self.system.rank
        a, b = self.matrix, other.matrix
        out = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )
        return WeylElement(self.system, out)

    def inv(self) -> "WeylElement":
        from .linalg import inverse

        frac = tuple(tuple(Fraction(x) for x in row) for row in self.matrix)
        return WeylElement(self.system, tuple(
            tuple(int(x) for x in row) for row in inverse(QQ, frac)))

    def is_identity(self) -> bool:
        n = self.system.rank
        return all(
            self.matrix[i][j] == (1 if i == j else 0)
            for i in range(n) for j in range(n)
        )

    def is_involution(self) -> bool:
        return self.mul(self).is_identity()

    def apply_coeffs(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        n = self.system.rank
        return tuple(
            sum(self.matrix[i][j] * coeffs[j] for j in range(n)) for i in range(n)
        )

    def apply_root(self, root: Vector) -> Vector:
        return self.system.from_coefficients(
            self.apply_coeffs(self.system.coefficients(root)))

    def apply_vector(self, v: Vector) -> Vector:
        """Action on an ambient vector (identity on the span-orthogonal part)."""
        sys = self.system
        c = sys.span_coefficients(v)
        span_part = sys.from_coefficients(c)
        perp = _sub(v, span_part)
        return _add(sys.from_coefficients(self.apply_coeffs(c)), perp)

    def sends_simple_negative(self, i: int) -> bool:
        """True iff w(alpha_i) < 0, i.e. i is a right descent."""
        col = [self.matrix[a][i] for a in range(self.system.rank)]
        for x in col:
            if x > 0:
                return False
            if x < 0:
                return True
        raise AssertionError("zero column in a Weyl matrix")

    def length(self) -> int:
        """l(w) = #{positive roots sent to negative roots}."""
        if self._length is None:
            sys = self.system
            count = 0
            for r in sys.positive_roots:
                img = self.apply_coeffs(sys.coefficients(r))
                if any(x < 0 for x in img):
                    count += 1
            self._length = count
        return self._length

    def reduced_word(self) -> tuple[int, ...]:
        """A reduced word (left-to-right product order), by greedy descent."""
        if self._word is None:
            collected = []
            w = self
            while not w.is_identity():
                i = next(
                    i for i in range(self.system.rank) if w.sends_simple_negative(i))
                collected.append(i)
                w = w.mul(self.system.simple_reflection(i))
            self._word = tuple(reversed(collected))
        return self._word

    def signed_permutation(self) -> tuple[tuple[int, int], ...]:
        """For coordinate-model types: (j, sign) with w(e_i) = sign * e_j."""
        sys = self.system
        out = []
        for i in range(sys.dim):
            img = self.apply_vector(_unit(sys.dim, i))
            nz = [(j, x) for j, x in enumerate(img) if x != 0]
            if len(nz) != 1 or abs(nz[0][1]) != 1:
                raise ValueError("element is not a signed permutation in this model")
            out.append((nz[0][0], 1 if nz[0][1] > 0 else -1))
        return tuple(out)

    def fixed_simples(self) -> tuple[int, ...]:
        sys = self.system
        out = []
        for i, a in enumerate(sys.simple_roots):
            if self.apply_coeffs(sys.coefficients(a)) == sys.coefficients(a):
                out.append(i)
        return tuple(out)

    def __repr__(self):
        return f"WeylElement({self.system.label}{self.system.rank}, len={self.length()})"


# -- module-level operations ----------------------------------------------

@lru_cache(maxsize=None)
def build_root_system(label: str, rank: int) -> RootSystem:
    return RootSystem(label, rank)


def length(w: WeylElement) -> int:
    return w.length()


def longest_element(system: RootSystem, pi: Iterable[int]) -> WeylElement:
    """Longest element of the parabolic subgroup generated by {s_i : i in pi}."""
    pi = tuple(sorted(set(pi)))
    for i in pi:
        if not 0 <= i < system.rank:
            raise ValueError(f"simple-root index {i} out of range")
    w = system.identity_element()
    while True:
        i = next(
            (i for i in pi if not w.sends_simple_negative(i)), None)
        if i is None:
            return w
        w = w.mul(system.simple_reflection(i))


def w0_wPi(system: RootSystem, pi: Iterable[int]) -> WeylElement:
    """The involution w0 * w_Pi, for Pi stable under the w0 diagram symmetry.

    Rejects subsets Pi with -w0(Pi) != Pi, where the product fails to be
    the involution used downstream.
    """
    pi = tuple(sorted(set(pi)))
    w0 = longest_element(system, range(system.rank))
    pi_roots = {system.simple_roots[i] for i in pi}
    image = {_scale(-1, w0.apply_root(a)) for a in pi_roots}
    if image != pi_roots:
        raise ValueError(
            f"Pi={pi} is not stable under the longest-element symmetry")
    w = w0.mul(longest_element(system, pi))
    if not w.is_involution():
        raise ValueError(f"w0*w_Pi is not an involution for Pi={pi}")
    return w


def minus_one_rank(w: WeylElement) -> int:
    """rank(1 - w) on the reflection representation, exactly."""
    n = w.system.rank
    frac = tuple(
        tuple(Fraction((1 if i == j else 0) - w.matrix[i][j]) for j in range(n))
        for i in range(n)
    )
    return _rank(QQ, frac)


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """Bruhat comparison via the subword test on one reduced word of v."""
    if u.system is not v.system:
        raise ValueError("elements from different Weyl groups")
    if u.length() > v.length():
        return False
    x = u
    for i in reversed(v.reduced_word()):
        if x.sends_simple_negative(i):
            x = x.mul(x.system.simple_reflection(i))
    return x.is_identity()


_CLASS_CACHE: dict[tuple, tuple] = {}


def conjugacy_class(w: WeylElement) -> tuple[WeylElement, ...]:
    """The W-conjugacy class of w, by closure under simple conjugations."""
    key = (w.system.label, w.system.rank, w.matrix)
    if key in _CLASS_CACHE:
        return _CLASS_CACHE[key]
    sys = w.system
    refl = [sys.simple_reflection(i) for i in range(sys.rank)]
    seen = {w.matrix: w}
    frontier = [w]
    while frontier:
        nxt = []
        for x in frontier:
            for s in refl:
                y = s.mul(x).mul(s)
                if y.matrix not in seen:
                    seen[y.matrix] = y
                    nxt.append(y)
        frontier = nxt
    out = tuple(seen.values())
    _CLASS_CACHE[key] = out
    return out


def is_bruhat_max_in_class(w: WeylElement) -> bool:
    if not w.is_involution():
        raise ValueError("Bruhat-maximality check is defined for involutions here")
    cls = conjugacy_class(w)
    lw = w.length()
    for x in cls:
        if x.length() > lw:
            return False
    return all(bruhat_leq(x, w) for x in cls)


def involution_conjugacy_classes(system: RootSystem) -> list[tuple[WeylElement, ...]]:
    """All involution classes (small-rank systems; full enumeration)."""
    classes = []
    seen: set = set()
    for w in system.all_elements():
        if w.matrix in seen or w.is_identity() or not w.is_involution():
            continue
        cls = conjugacy_class(w)
        for x in cls:
            seen.add(x.matrix)
        classes.append(cls)
    return classes


def subsystem_positive(system: RootSystem, roots: Iterable[Vector]) -> list[Vector]:
    return [r for r in roots if system.is_positive_root(r)]


def subsystem_simples(system: RootSystem, roots: Iterable[Vector]) -> list[Vector]:
    """Indecomposable positive elements of a root subsystem."""
    pos = subsystem_positive(system, roots)
    pos_set = set(pos)
    simples = []
    for r in pos:
        if not any(_sub(r, s) in pos_set for s in pos if s != r):
            simples.append(r)
    return simples


def subsystem_highest_root(system: RootSystem, roots: Iterable[Vector]) -> Vector:
    """Highest root of an irreducible root subsystem of `system`."""
    roots = list(roots)
    simples = subsystem_simples(system, roots)
    best = None
    best_ht = None
    for r in subsystem_positive(system, roots):
        # height within the subsystem
        coeffs = _sub_expand(r, simples)
        ht = sum(coeffs)
        if best_ht is None or ht > best_ht:
            best, best_ht = r, ht
    assert best is not None
    return best


def _sub_expand(root: Vector, simples: list[Vector]) -> list[Fraction]:
    g = [[dot(a, b) for b in simples] for a in simples]
    rhs = [dot(root, a) for a in simples]
    n = len(simples)
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
    return [aug[i][-1] for i in range(n)]


def orthogonal_subsystem(system: RootSystem, v: Vector) -> list[Vector]:
    return [r for r in system.roots if dot(r, v) == 0]

"""Exact scalar arithmetic: big rationals and small finite fields.

Field elements are plain Python values (``Fraction`` for the rationals,
ints in ``range(q)`` for F_q) and every field is an ops object passed to
the matrix routines.  Nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional


class Rationals:
    """Field operations on arbitrary-precision rationals."""

    char = 0
    order = None

    zero = Fraction(0)
    one = Fraction(1)

    def of(self, n) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def is_zero(self, a) -> bool:
        return a == 0

    def elements(self) -> Iterable:
        raise TypeError("the rational field is infinite")

    def sqrt(self, a) -> Optional[Fraction]:
        a = Fraction(a)
        if a < 0:
            return None
        from math import isqrt

        rn, rd = isqrt(a.numerator), isqrt(a.denominator)
        if rn * rn == a.numerator and rd * rd == a.denominator:
            return Fraction(rn, rd)
        return None

    def __repr__(self):
        return "QQ"


QQ = Rationals()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """F_p with elements represented as ints in range(p)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.order = p
        self.zero = 0
        self.one = 1 % p

    def of(self, n) -> int:
        if isinstance(n, Fraction):
            if n.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return n.numerator * pow(n.denominator, -1, self.p) % self.p
        return int(n) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def elements(self):
        return range(self.p)

    def units(self):
        return range(1, self.p)

    def sqrt(self, a) -> Optional[int]:
        a %= self.p
        if a == 0:
            return 0
        if self.p == 2:
            return a
        if pow(a, (self.p - 1) // 2, self.p) != 1:
            return None
        # p is tiny throughout; scan.
        for r in range(1, self.p):
            if r * r % self.p == a:
                return r
        return None

    def fourth_root_of_unity(self) -> Optional[int]:
        """A primitive 4th root of 1, when q = 1 mod 4."""
        return self.sqrt(self.p - 1) if self.p % 4 == 1 else None

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


def _find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible of degree k over F_p.

    Returned as low-to-high coefficients of the non-leading part, i.e. the
    polynomial is x^k + sum(c[i] x^i).
    """

    def is_irreducible(coeffs):
        # Degree <= 3: irreducible over F_p iff no roots in F_p.
        if k > 3:
            raise ValueError("extension degree > 3 not supported")
        for x in range(p):
            val = pow(x, k, p)
            for i, c in enumerate(coeffs):
                val = (val + c * pow(x, i, p)) % p
            if val == 0:
                return False
        return True

    total = p**k
    for code in range(total):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        if is_irreducible(tuple(coeffs)):
            return tuple(coeffs)
    raise RuntimeError("no irreducible polynomial found")


class ExtField:
    """F_{p^k} via multiplication tables; elements are ints in range(p^k).

    The int encodes a polynomial in the generator with base-p digits.
    Table-driven so the oracle's inner loops stay cheap; only built for
    the tiny orders the group enumerations need.
    """

    def __init__(self, p: int, k: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 2:
            raise ValueError("use PrimeField for k = 1")
        q = p**k
        if q > 128:
            raise ValueError(f"extension field of order {q} exceeds table budget")
        self.p = p
        self.k = k
        self.char = p
        self.order = q
        self.zero = 0
        self.one = 1
        self.modulus = _find_irreducible(p, k)
        self._mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(q):
                self._mul[a][b] = self._poly_mul(a, b)
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, ds) -> int:
        out = 0
        for d in reversed(ds):
            out = out * self.p + d
        return out

    def _poly_mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce modulo x^k + modulus
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for i, m in enumerate(self.modulus):
                    prod[deg - k + i] = (prod[deg - k + i] - c * m) % p
        return self._undigits(prod[:k])

    def of(self, n) -> int:
        if isinstance(n, Fraction):
            num = self.of(n.numerator)
            den = self.of(n.denominator)
            return self.div(num, den)
        return int(n) % self.p

    def add(self, a, b):
        p = self.p
        da, db = self._digits(a), self._digits(b)
        return self._undigits([(x + y) % p for x, y in zip(da, db)])

    def sub(self, a, b):
        p = self.p
        da, db = self._digits(a), self._digits(b)
        return self._undigits([(x - y) % p for x, y in zip(da, db)])

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return self.sub(0, a)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def div(self, a, b):
        return self._mul[a][self.inv(b)]

    def is_zero(self, a) -> bool:
        return a == 0

    def elements(self):
        return range(self.order)

    def units(self):
        return range(1, self.order)

    def sqrt(self, a) -> Optional[int]:
        for r in range(self.order):
            if self._mul[r][r] == a:
                return r
        return None

    def fourth_root_of_unity(self) -> Optional[int]:
        if self.char == 2:
            return None
        return self.sqrt(self.of(-1)) if (self.order - 1) % 4 == 0 else None

    def embed(self, base_elt: int) -> int:
        """Image of an F_p element under F_p -> F_{p^k}."""
        return base_elt % self.p

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other):
        return isinstance(other, ExtField) and (other.p, other.k) == (self.p, self.k)

    def __hash__(self):
        return hash(("GF", self.p, self.k))


_FIELD_CACHE: dict[int, object] = {}


def gf(q: int):
    """The finite field with q elements (q = p or p^2, p^3 for small q)."""
    if q in _FIELD_CACHE:
        return _FIELD_CACHE[q]
    if _is_prime(q):
        fld = PrimeField(q)
    else:
        for p in range(2, q):
            if _is_prime(p):
                k, n = 0, q
                while n % p == 0:
                    n //= p
                    k += 1
                if n == 1 and k >= 2:
                    fld = ExtField(p, k)
                    break
        else:
            raise ValueError(f"{q} is not a prime power")
    _FIELD_CACHE[q] = fld
    return fld


def quadratic_extension(field):
    """F_{q^2} over F_q together with the embedding map."""
    if isinstance(field, PrimeField):
        ext = gf(field.p**2)
        return ext, ext.embed
    if isinstance(field, ExtField):
        ext = gf(field.p ** (2 * field.k))
        raise NotImplementedError("compatible embedding beyond prime base not required")
    raise TypeError(f"no quadratic extension for {field!r}")


def default_verification_prime(minimum: int = 1000) -> int:
    """Smallest prime p > minimum with p = 1 mod 4 (so i exists in F_p)."""
    p = minimum + 1
    while not (_is_prime(p) and p % 4 == 1):
        p += 1
    return p

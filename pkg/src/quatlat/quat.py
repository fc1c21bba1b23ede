"""Exact arithmetic in rational definite quaternion algebras.

An algebra is determined by a pair (a, b) of nonzero rationals with
i*i = a, j*j = b and k = i*j = -j*i. Elements carry exact Fraction
coefficients with respect to the basis 1, i, j, k. Ramification is
computed through Hilbert symbols, and the definite algebra ramified at
exactly one finite prime is constructed by a certified recipe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import isprime, primefactors, nextprime

Rational = int | Fraction


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class QuaternionAlgebra:
    """Quaternion algebra (a, b) over the rationals."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))
        if self.a == 0 or self.b == 0:
            raise ValueError("algebra parameters must be nonzero")

    def quat(self, t: Rational = 0, x: Rational = 0, y: Rational = 0, z: Rational = 0) -> "Quat":
        return Quat(self, (_frac(t), _frac(x), _frac(y), _frac(z)))

    @property
    def one(self) -> "Quat":
        return self.quat(1)

    @property
    def i(self) -> "Quat":
        return self.quat(0, 1)

    @property
    def j(self) -> "Quat":
        return self.quat(0, 0, 1)

    @property
    def k(self) -> "Quat":
        return self.quat(0, 0, 0, 1)

    def is_definite(self) -> bool:
        return self.a < 0 and self.b < 0

    def inner_gram(self) -> list[list[Fraction]]:
        """Gram matrix of the bilinear form (x, y) -> Tr(x * conj(y)) / 2
        in coordinates (t, x, y, z); diagonal since 1, i, j, k are orthogonal."""
        a, b = self.a, self.b
        zero = Fraction(0)
        return [
            [Fraction(1), zero, zero, zero],
            [zero, -a, zero, zero],
            [zero, zero, -b, zero],
            [zero, zero, zero, a * b],
        ]


@dataclass(frozen=True)
class Quat:
    """Quaternion with exact rational coefficients (t, x, y, z)."""

    alg: QuaternionAlgebra
    co: tuple[Fraction, Fraction, Fraction, Fraction]

    def _check(self, other: "Quat"):
        if self.alg != other.alg:
            raise ValueError("operands live in different quaternion algebras")

    def __add__(self, other: "Quat") -> "Quat":
        self._check(other)
        return Quat(self.alg, tuple(p + q for p, q in zip(self.co, other.co)))

    def __sub__(self, other: "Quat") -> "Quat":
        self._check(other)
        return Quat(self.alg, tuple(p - q for p, q in zip(self.co, other.co)))

    def __neg__(self) -> "Quat":
        return Quat(self.alg, tuple(-p for p in self.co))

    def scale(self, c: Rational) -> "Quat":
        c = _frac(c)
        return Quat(self.alg, tuple(c * p for p in self.co))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        a, b = self.alg.a, self.alg.b
        t1, x1, y1, z1 = self.co
        t2, x2, y2, z2 = other.co
        return Quat(
            self.alg,
            (
                t1 * t2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
                t1 * x2 + x1 * t2 - b * (y1 * z2 - z1 * y2),
                t1 * y2 + y1 * t2 + a * (x1 * z2 - z1 * x2),
                t1 * z2 + z1 * t2 + (x1 * y2 - y1 * x2),
            ),
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def conj(self) -> "Quat":
        t, x, y, z = self.co
        return Quat(self.alg, (t, -x, -y, -z))

    def trace(self) -> Fraction:
        return 2 * self.co[0]

    def norm(self) -> Fraction:
        a, b = self.alg.a, self.alg.b
        t, x, y, z = self.co
        return t * t - a * x * x - b * y * y + a * b * z * z

    def inner(self, other: "Quat") -> Fraction:
        """Tr(self * conj(other)) / 2; positive definite when a, b < 0."""
        self._check(other)
        a, b = self.alg.a, self.alg.b
        t1, x1, y1, z1 = self.co
        t2, x2, y2, z2 = other.co
        return t1 * t2 - a * x1 * x2 - b * y1 * y2 + a * b * z1 * z2

    def gross_image(self) -> "Quat":
        """2*x - Tr(x): twice the trace-zero part."""
        _, x, y, z = self.co
        return Quat(self.alg, (Fraction(0), 2 * x, 2 * y, 2 * z))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.co)

    def __repr__(self):
        return f"Quat({self.co[0]}, {self.co[1]}i, {self.co[2]}j, {self.co[3]}k)"


def conj_trace_norm(x: Quat) -> tuple[Quat, Fraction, Fraction]:
    return x.conj(), x.trace(), x.norm()


def _odd_legendre(a: int, ell: int) -> int:
    """Legendre symbol (a / ell) for odd prime ell and a coprime to ell."""
    r = pow(a % ell, (ell - 1) // 2, ell)
    return -1 if r == ell - 1 else 1


def _split_val(a: int, ell: int) -> tuple[int, int]:
    v = 0
    while a % ell == 0:
        a //= ell
        v += 1
    return v, a


def hilbert_symbol(a: int, b: int, ell: int) -> int:
    """Hilbert symbol (a, b) at the prime ell; a, b nonzero integers."""
    if a == 0 or b == 0:
        raise ValueError("arguments must be nonzero")
    alpha, u = _split_val(a, ell)
    beta, v = _split_val(b, ell)
    if ell == 2:
        eps_u = ((u - 1) // 2) % 2
        eps_v = ((v - 1) // 2) % 2
        om_u = ((u * u - 1) // 8) % 2
        om_v = ((v * v - 1) // 8) % 2
        e = eps_u * eps_v + alpha * om_v + beta * om_u
        return -1 if e % 2 else 1
    e = 0
    if alpha % 2 and beta % 2 and (ell - 1) // 2 % 2:
        e += 1
    if beta % 2 and _odd_legendre(u, ell) == -1:
        e += 1
    if alpha % 2 and _odd_legendre(v, ell) == -1:
        e += 1
    return -1 if e % 2 else 1


def solvable_mod(a: int, b: int, ell: int, k: int) -> bool:
    """Exhaustive test: does a*x^2 + b*y^2 = z^2 (mod ell^k) admit a
    solution with at least one unit coordinate? Oracle-grade but only
    feasible for small ell^k; the production path is hilbert_symbol."""
    m = ell**k
    squares = [x * x % m for x in range(m)]
    for x in range(m):
        ax2 = a * squares[x] % m
        for y in range(m):
            w = (ax2 + b * squares[y]) % m
            for z in range(m):
                if squares[z] == w and (x % ell or y % ell or z % ell):
                    return True
    return False


def _integerize(a: Rational) -> int:
    a = _frac(a)
    return a.numerator * a.denominator


def ramified_primes(a: Rational, b: Rational) -> frozenset[int]:
    """Finite primes at which the algebra (a, b) is non-split."""
    ai, bi = _integerize(a), _integerize(b)
    if ai == 0 or bi == 0:
        raise ValueError("algebra parameters must be nonzero")
    candidates = {2} | set(primefactors(abs(ai))) | set(primefactors(abs(bi)))
    ram = frozenset(ell for ell in candidates if hilbert_symbol(ai, bi, ell) == -1)
    infinite = 1 if (ai < 0 and bi < 0) else 0
    assert (len(ram) + infinite) % 2 == 0, "Hilbert reciprocity violated"
    return ram


@lru_cache(maxsize=None)
def ramified_algebra(p: int) -> QuaternionAlgebra:
    """The definite quaternion algebra ramified at exactly p (and infinity).

    Recipe by residue class of p, always certified through ramified_primes;
    raises ArithmeticError if the certified search fails.
    """
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        alg = QuaternionAlgebra(Fraction(-1), Fraction(-1))
    elif p % 4 == 3:
        alg = QuaternionAlgebra(Fraction(-1), Fraction(-p))
    elif p % 8 == 5:
        alg = QuaternionAlgebra(Fraction(-2), Fraction(-p))
    else:
        alg = None
        q = 3
        while q < 10_000:
            if q % 4 == 3:
                cand = QuaternionAlgebra(Fraction(-q), Fraction(-p))
                if ramified_primes(-q, -p) == {p}:
                    alg = cand
                    break
            q = int(nextprime(q))
        if alg is None:
            raise ArithmeticError(f"no auxiliary prime below 10000 for p={p}")
    if ramified_primes(alg.a, alg.b) != {p}:
        raise ArithmeticError(f"recipe for p={p} failed certification")
    return alg

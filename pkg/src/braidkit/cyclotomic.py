"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Scalars are represented canonically as residues of Q[x] modulo the n-th
cyclotomic polynomial, so equality is coefficient-wise and every nonzero
element is invertible.  All coefficients are `fractions.Fraction`; there is
no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm

__all__ = [
    "CycScalar",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity",
    "one",
    "zero",
    "rational",
    "parse_scalar",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj != 0:
                out[i + j] += ai * bj
    return _trim(out)


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [_ZERO] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b):
        c = a[-1] * inv_lead
        d = len(a) - len(b)
        q[d] = c
        for i, bi in enumerate(b):
            a[d + i] -= c * bi
        _trim(a)
        if not a:
            break
    return _trim(q), a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients of Phi_n, low degree first, computed by dividing
    x^n - 1 by Phi_d for every proper divisor d of n."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {n}")
    if n == 1:
        return (Fraction(-1), _ONE)
    num: list[Fraction] = [Fraction(-1)] + [_ZERO] * (n - 1) + [_ONE]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not rem, f"Phi_{d} must divide x^{n}-1 exactly"
    return tuple(num)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce(coeffs: list[Fraction], order: int) -> tuple[Fraction, ...]:
    phi = list(cyclotomic_polynomial(order))
    _, rem = _poly_divmod(_trim(list(coeffs)), phi)
    k = euler_phi(order)
    rem = rem + [_ZERO] * (k - len(rem))
    return tuple(rem)


class CycScalar:
    """An element of Q(zeta_n) in canonical reduced form.

    `coeffs` has length euler_phi(order); two scalars of the same order are
    equal iff their coefficient tuples are identical.  Binary operations on
    mixed orders embed both operands into Q(zeta_lcm) first.
    """

    __slots__ = ("order", "coeffs")
    __hash__ = None  # semantic cross-order equality is incompatible with hashing

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        coeffs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        self.order = order
        self.coeffs = _reduce(coeffs, order)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(value, order: int = 1) -> "CycScalar":
        return CycScalar(order, [Fraction(value)])

    @staticmethod
    def zero(order: int = 1) -> "CycScalar":
        return CycScalar(order, [])

    @staticmethod
    def one(order: int = 1) -> "CycScalar":
        return CycScalar(order, [_ONE])

    # -- order handling ----------------------------------------------------

    def embed_to(self, order: int) -> "CycScalar":
        """Embed into Q(zeta_order); requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order != 0:
            raise ValueError(
                f"cannot embed Q(zeta_{self.order}) into Q(zeta_{order}): "
                f"{self.order} does not divide {order}"
            )
        step = order // self.order
        out = [_ZERO] * (euler_phi(self.order) * step + 1)
        for i, c in enumerate(self.coeffs):
            out[i * step] += c
        return CycScalar(order, out)

    @staticmethod
    def _common(a: "CycScalar", b: "CycScalar") -> tuple["CycScalar", "CycScalar"]:
        if a.order == b.order:
            return a, b
        n = lcm(a.order, b.order)
        return a.embed_to(n), b.embed_to(n)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _promote(x) -> "CycScalar":
        if isinstance(x, CycScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return CycScalar.rational(x)
        return NotImplemented

    def __add__(self, other):
        other = CycScalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = CycScalar._common(self, other)
        return CycScalar(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "CycScalar":
        return CycScalar(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = CycScalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = CycScalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = CycScalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = CycScalar._common(self, other)
        return CycScalar(a.order, _poly_mul(list(a.coeffs), list(b.coeffs)))

    __rmul__ = __mul__

    def inv(self) -> "CycScalar":
        """Multiplicative inverse via extended Euclid against Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        phi = list(cyclotomic_polynomial(self.order))
        r0, r1 = _trim(list(self.coeffs)), phi
        s0: list[Fraction] = [_ONE]
        s1: list[Fraction] = []
        while r1:
            q, r = _poly_divmod(r0, r1)
            qs1 = _poly_mul(q, s1)
            s = [
                (s0[i] if i < len(s0) else _ZERO) - (qs1[i] if i < len(qs1) else _ZERO)
                for i in range(max(len(s0), len(qs1)))
            ]
            r0, r1 = r1, r
            s0, s1 = s1, _trim(s)
        assert len(r0) == 1 and r0[0] != 0, "gcd with Phi_n must be a nonzero constant"
        c = 1 / r0[0]
        return CycScalar(self.order, [x * c for x in s0])

    def __truediv__(self, other):
        other = CycScalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = CycScalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k: int) -> "CycScalar":
        if k < 0:
            return self.inv() ** (-k)
        out = CycScalar.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        other = CycScalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = CycScalar._common(self, other)
        return a.coeffs == b.coeffs

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{k}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"CycScalar(order={self.order}, {self})"


def root_of_unity(n: int, k: int = 1) -> CycScalar:
    """zeta_n^k in canonical form; depends only on k mod n."""
    if n < 1:
        raise ValueError(f"root order must be >= 1, got {n}")
    k %= n
    return CycScalar(n, [_ZERO] * k + [_ONE])


def zero(order: int = 1) -> CycScalar:
    return CycScalar.zero(order)


def one(order: int = 1) -> CycScalar:
    return CycScalar.one(order)


def rational(value, order: int = 1) -> CycScalar:
    return CycScalar.rational(value, order)


def parse_scalar(text: str, order: int) -> CycScalar:
    """Parse the serialization "c0 + c1*z + c2*z^2 + ..." (rational c's)."""
    text = text.strip()
    if not text:
        raise ValueError("empty scalar string")
    coeffs: dict[int, Fraction] = {}
    for term in text.split("+"):
        term = term.strip()
        if not term:
            raise ValueError(f"bad scalar string {text!r}")
        if "*" in term:
            c, _, zpart = term.partition("*")
            zpart = zpart.strip()
            if zpart == "z":
                k = 1
            elif zpart.startswith("z^"):
                k = int(zpart[2:])
            else:
                raise ValueError(f"bad scalar term {term!r}")
            coeff = Fraction(c.strip())
        elif term == "z":
            k, coeff = 1, _ONE
        elif term.startswith("z^"):
            k, coeff = int(term[2:]), _ONE
        else:
            k, coeff = 0, Fraction(term)
        coeffs[k] = coeffs.get(k, _ZERO) + coeff
    top = max(coeffs) if coeffs else 0
    out = [_ZERO] * (top + 1)
    for k, c in coeffs.items():
        out[k] = c
    return CycScalar(order, out)

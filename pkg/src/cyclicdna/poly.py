"""Polynomials over F2, R1, Rw and R.

A :class:`Poly` is an immutable tuple of coefficients in ascending degree,
trimmed so the last coefficient is nonzero.  Binary polynomials also have a
fast integer form (bit i = coefficient of x^i) used by the factorization and
divisibility routines.
"""

from __future__ import annotations

import random
from collections import Counter
from typing import Iterable, Sequence

from .ring import F2Elem, RingElem, RingMismatchError, ring_type, units

__all__ = [
    "Poly",
    "p_add",
    "p_mul",
    "p_mul_mod",
    "p_mod_xn1",
    "p_scale",
    "p_shift",
    "reciprocal",
    "is_self_reciprocal",
    "divides_f2",
    "divides",
    "factor_xn1_f2",
    "divisors_xn1_f2",
    "format_factors",
    "xn1",
    "f2_mul",
    "f2_divmod",
    "f2_gcd",
    "f2_deg",
    "is_irreducible_f2",
    "is_irreducible_trial",
]


class Poly:
    """Polynomial with coefficients in one of the rings F2, R1, Rw, R."""

    __slots__ = ("ring", "coeffs")

    ring: str
    coeffs: tuple[RingElem, ...]

    def __init__(self, ring: str, coeffs: Iterable[RingElem] = ()):
        cls = ring_type(ring)
        cs = list(coeffs)
        for c in cs:
            if type(c) is not cls:
                raise RingMismatchError(f"coefficient {c!r} is not in {ring}")
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ring: str) -> "Poly":
        return cls(ring)

    @classmethod
    def const(cls, c: RingElem) -> "Poly":
        return cls(c.RING, [c])

    @classmethod
    def monomial(cls, ring: str, k: int, c: RingElem | None = None) -> "Poly":
        rt = ring_type(ring)
        return cls(ring, [rt.zero()] * k + [c if c is not None else rt.one()])

    @classmethod
    def from_int(cls, value: int) -> "Poly":
        """Binary polynomial from its bitmask (bit i = coefficient of x^i)."""
        if value < 0:
            raise ValueError("negative bitmask")
        return cls("F2", [F2Elem.from_code((value >> i) & 1) for i in range(value.bit_length())])

    @classmethod
    def from_bits(cls, text: str) -> "Poly":
        """Binary polynomial from an ascending bit string: ``"1101"`` is 1+x+x^3."""
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"bad binary polynomial {text!r}")
        return cls("F2", [F2Elem.from_code(int(ch)) for ch in text])

    @classmethod
    def parse(cls, ring: str, text: str) -> "Poly":
        """Comma-separated ascending coefficients in the ring's element syntax.

        For F2 the comma-free bit-string shorthand is also accepted.
        """
        text = text.strip()
        if ring == "F2" and "," not in text:
            return cls.from_bits(text)
        rt = ring_type(ring)
        if text in ("", "0") and ring != "F2":
            return cls.zero(ring)
        return cls(ring, [rt.parse(tok) for tok in text.split(",")])

    def lift(self, ring: str) -> "Poly":
        """View a binary polynomial as a polynomial over a larger ring."""
        if self.ring != "F2":
            raise RingMismatchError("only binary polynomials can be lifted")
        rt = ring_type(ring)
        return Poly(ring, [rt.from_code(c.code) for c in self.coeffs])

    # -- queries ----------------------------------------------------------

    @property
    def deg(self) -> float | int:
        """Degree; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> RingElem:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ring_type(self.ring).zero()

    def lead(self) -> RingElem:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def to_int(self) -> int:
        if self.ring != "F2":
            raise RingMismatchError("bitmask form exists only for binary polynomials")
        return sum(c.code << i for i, c in enumerate(self.coeffs))

    def to_vector(self, n: int) -> tuple[RingElem, ...]:
        """Coefficient vector of length n (the polynomial must have degree < n)."""
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.deg} does not fit length {n}")
        zero = ring_type(self.ring).zero()
        return self.coeffs + (zero,) * (n - len(self.coeffs))

    def to_str(self) -> str:
        """Serialized form: comma-separated coefficient strings (bit string for F2)."""
        if self.ring == "F2":
            return "".join(str(c.code) for c in self.coeffs) or "0"
        return ",".join(c.to_str() for c in self.coeffs) or "0"

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        return p_add(self, other)

    __sub__ = __add__

    def __mul__(self, other: "Poly") -> "Poly":
        return p_mul(self, other)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            xs = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            cs = str(c)
            if not xs:
                multi = "+" in cs and any(not d.is_zero() for d in self.coeffs[1:])
                terms.append(f"({cs})" if multi else cs)
            elif cs == "1":
                terms.append(xs)
            elif "+" in cs:
                terms.append(f"({cs}){xs}")
            else:
                terms.append(f"{cs}{xs}")
        return "+".join(terms)

    def __repr__(self):
        return f"Poly[{self.ring}]({self})"


def _same_ring(f: Poly, g: Poly) -> None:
    if f.ring != g.ring:
        raise RingMismatchError(f"polynomials over {f.ring} and {g.ring}")


def p_add(f: Poly, g: Poly) -> Poly:
    _same_ring(f, g)
    m = max(len(f.coeffs), len(g.coeffs))
    return Poly(f.ring, [f.coeff(k) + g.coeff(k) for k in range(m)])


def p_scale(c: RingElem, f: Poly) -> Poly:
    if c.RING != f.ring:
        raise RingMismatchError(f"scalar in {c.RING}, polynomial over {f.ring}")
    return Poly(f.ring, [c * a for a in f.coeffs])


def p_shift(f: Poly, k: int) -> Poly:
    """Multiply by x^k."""
    if f.is_zero():
        return f
    return Poly(f.ring, [ring_type(f.ring).zero()] * k + list(f.coeffs))


def p_mul(f: Poly, g: Poly) -> Poly:
    _same_ring(f, g)
    if f.is_zero() or g.is_zero():
        return Poly.zero(f.ring)
    out = [ring_type(f.ring).zero()] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a.is_zero():
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] = out[i + j] + a * b
    return Poly(f.ring, out)


def p_mod_xn1(f: Poly, n: int) -> Poly:
    """Reduce modulo x^n - 1, i.e. fold exponents mod n."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    out = [ring_type(f.ring).zero()] * n
    for k, c in enumerate(f.coeffs):
        out[k % n] = out[k % n] + c
    return Poly(f.ring, out)


def p_mul_mod(f: Poly, g: Poly, n: int) -> Poly:
    if n < 1:
        raise ValueError("n must be a positive integer")
    return p_mod_xn1(p_mul(f, g), n)


def reciprocal(f: Poly) -> Poly:
    """x^deg(f) f(1/x): the coefficient list reversed."""
    if f.is_zero():
        raise ValueError("reciprocal of the zero polynomial is undefined")
    return Poly(f.ring, reversed(f.coeffs))


def is_self_reciprocal(f: Poly) -> bool:
    """True iff reciprocal(f) = m f for some unit m of the coefficient ring."""
    fs = reciprocal(f)
    if f.ring == "F2":
        return fs == f
    return any(p_scale(m, f) == fs for m in units(ring_type(f.ring)))


def xn1(n: int, ring: str = "F2") -> Poly:
    """x^n - 1 (= x^n + 1 in characteristic 2)."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    f = Poly.from_int((1 << n) | 1)
    return f if ring == "F2" else f.lift(ring)


# -- binary polynomials as bitmasks ------------------------------------------


def f2_deg(a: int) -> int:
    return a.bit_length() - 1


def f2_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def f2_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q = 0
    db = f2_deg(b)
    while a and f2_deg(a) >= db:
        s = f2_deg(a) - db
        q ^= 1 << s
        a ^= b << s
    return q, a


def f2_mod(a: int, b: int) -> int:
    return f2_divmod(a, b)[1]


def f2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, f2_mod(a, b)
    return a


def f2_mulmod(a: int, b: int, m: int) -> int:
    return f2_mod(f2_mul(a, b), m)


def _as_f2(f: Poly | int) -> int:
    if isinstance(f, int):
        return f
    if f.ring != "F2":
        raise RingMismatchError(f"expected a binary polynomial, got one over {f.ring}")
    return f.to_int()


def divides_f2(a: Poly | int, b: Poly | int) -> bool:
    """True iff a divides b over F2."""
    ai, bi = _as_f2(a), _as_f2(b)
    if ai == 0:
        raise ZeroDivisionError("the zero polynomial divides nothing")
    return f2_mod(bi, ai) == 0


def divides(d: Poly, f: Poly) -> bool:
    """Exact divisibility d | f in S[x] for a divisor with unit leading coefficient."""
    _same_ring(d, f)
    if d.is_zero():
        raise ZeroDivisionError("the zero polynomial divides nothing")
    rt = ring_type(d.ring)
    lead = d.lead()
    inv = next((m for m in rt.all() if m * lead == rt.one()), None)
    if inv is None:
        raise ValueError(f"leading coefficient {lead} of {d} is not a unit")
    rem = list(f.coeffs)
    dd = len(d.coeffs) - 1
    for top in range(len(rem) - 1, dd - 1, -1):
        c = rem[top] * inv
        if c.is_zero():
            continue
        for j, a in enumerate(d.coeffs):
            rem[top - dd + j] = rem[top - dd + j] - c * a
    return all(c.is_zero() for c in rem)


def is_irreducible_trial(f: int) -> bool:
    """Irreducibility by trial division with every polynomial of degree <= deg/2."""
    d = f2_deg(f)
    if d < 1:
        return False
    for g in range(2, 1 << (d // 2 + 1)):
        if f2_mod(f, g) == 0:
            return False
    return True


def is_irreducible_f2(f: int) -> bool:
    """Ben-Or test: gcd(f, x^(2^i) - x) = 1 for 1 <= i <= deg/2."""
    d = f2_deg(f)
    if d < 1:
        return False
    h = 2  # x
    for _ in range(d // 2):
        h = f2_mulmod(h, h, f)
        if f2_gcd(f, h ^ 2) != 1:
            return False
    return True


def _ddf(f: int) -> list[tuple[int, int]]:
    """Distinct-degree factorization of a squarefree binary polynomial."""
    out = []
    h = 2
    d = 0
    while f2_deg(f) >= 2 * (d + 1):
        d += 1
        h = f2_mulmod(h, h, f)
        g = f2_gcd(f, h ^ 2)
        if g != 1:
            out.append((g, d))
            f = f2_divmod(f, g)[0]
            h = f2_mod(h, f) if f2_deg(f) > 0 else 0
    if f2_deg(f) > 0:
        out.append((f, f2_deg(f)))
    return out


def _edf(f: int, d: int, rng: random.Random) -> list[int]:
    """Split a product of degree-d irreducibles (characteristic-2 trace splitting)."""
    if f2_deg(f) == d:
        return [f]
    n = f2_deg(f)
    while True:
        a = rng.getrandbits(n) | 2
        t, s = a, a
        for _ in range(d - 1):
            s = f2_mulmod(s, s, f)
            t ^= s
        g = f2_gcd(f, t)
        if 0 < f2_deg(g) < n:
            return _edf(g, d, rng) + _edf(f2_divmod(f, g)[0], d, rng)


def factor_xn1_f2(n: int) -> Counter[int]:
    """Irreducible factorization of x^n - 1 over F2 as a multiset of bitmasks."""
    if not 1 <= n <= 64:
        raise ValueError(f"n={n} outside the supported range 1..64")
    m, e = n, 0
    while m % 2 == 0:
        m //= 2
        e += 1
    rng = random.Random(n)
    factors: Counter[int] = Counter()
    for g, d in _ddf((1 << m) | 1):
        for h in _edf(g, d, rng):
            factors[h] += 1 << e
    return factors


def _factor_key(f: int) -> tuple[int, int]:
    return (f2_deg(f), f)


def divisors_xn1_f2(n: int) -> list[int]:
    """All monic divisors of x^n - 1 over F2, sorted by (degree, bitmask)."""
    divs = {1}
    for f, mult in factor_xn1_f2(n).items():
        powers = [1]
        for _ in range(mult):
            powers.append(f2_mul(powers[-1], f))
        divs = {f2_mul(d, p) for d in divs for p in powers}
    return sorted(divs, key=_factor_key)


def _descending(f: int) -> str:
    terms = []
    for k in range(f2_deg(f), -1, -1):
        if (f >> k) & 1:
            terms.append("1" if k == 0 else ("x" if k == 1 else f"x^{k}"))
    return "+".join(terms)


def format_factors(factors: Counter[int] | dict[int, int]) -> str:
    """``(x+1)(x^2+x+1)`` style, factors by increasing degree."""
    out = []
    for f in sorted(factors, key=_factor_key):
        mult = factors[f]
        out.append(f"({_descending(f)})" + (f"^{mult}" if mult > 1 else ""))
    return "".join(out)


def product_f2(polys: Sequence[int]) -> int:
    out = 1
    for p in polys:
        out = f2_mul(out, p)
    return out

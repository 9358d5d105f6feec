"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) reduced modulo
the N-th cyclotomic polynomial, as an integer numerator vector over a single
positive denominator.  Conductors congruent to 2 mod 4 are folded onto N/2
because Q(zeta_2m) = Q(zeta_m) for odd m.
"""

from __future__ import annotations

import math
import os
import re
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath.ctx_iv import MPIntervalContext

DEFAULT_MAX_CONDUCTOR = 840


def max_conductor() -> int:
    return int(os.environ.get("HOPF_MAX_CONDUCTOR", DEFAULT_MAX_CONDUCTOR))


class ConductorOverflow(ArithmeticError):
    pass


def normalize_conductor(n: int) -> int:
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    if n % 4 == 2:
        n //= 2
    return n


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    # coefficient lists, lowest degree first; b monic
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1]
        out[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    assert not any(a), "inexact division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _poly_divexact(p, list(cyclotomic_poly(d)))
    return tuple(p)


class _Field:
    __slots__ = ("n", "phi", "poly", "powers")

    def __init__(self, n: int):
        self.n = n
        self.poly = cyclotomic_poly(n)
        self.phi = len(self.poly) - 1
        phi = self.phi
        powers = []
        v = [0] * phi
        v[0] = 1
        for _ in range(n):
            powers.append(tuple(v))
            # multiply by zeta: shift up, fold the top coefficient
            top = v[-1]
            v = [0] + v[:-1]
            if top:
                for i in range(phi):
                    v[i] -= top * self.poly[i]
        self.powers = tuple(powers)


@lru_cache(maxsize=None)
def field(n: int) -> _Field:
    return _Field(n)


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    g = den
    for c in num:
        if c:
            g = math.gcd(g, c)
            if g == 1:
                break
    if den < 0:
        g = -g
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CycScalar:
    """An element of Q(zeta_N), immutable."""

    __slots__ = ("conductor", "num", "den", "_canon")

    def __init__(self, conductor: int, num, den: int = 1, *, _raw: bool = False):
        if _raw:
            self.conductor = conductor
            self.num = num
            self.den = den
            self._canon = None
            return
        conductor = normalize_conductor(conductor)
        if conductor > max_conductor():
            raise ConductorOverflow(f"conductor {conductor} exceeds bound {max_conductor()}")
        F = field(conductor)
        num = list(num)
        if len(num) != F.phi:
            raise ValueError(f"expected {F.phi} coefficients for conductor {conductor}")
        nn, dd = _normalize(num, den)
        self.conductor, self.num, self.den = _shrink(conductor, nn, dd)
        self._canon = None

    # construction helpers ----------------------------------------------
    @classmethod
    def rational(cls, q) -> CycScalar:
        q = Fraction(q)
        return cls(1, (q.numerator,), q.denominator, _raw=True)

    @classmethod
    def from_terms(cls, conductor: int, terms) -> CycScalar:
        """Build sum of q * zeta_N^k from (k, q) pairs; k may be any integer."""
        n0 = conductor
        n = normalize_conductor(n0)
        F = field(n)
        den = 1
        qs = []
        for k, q in terms:
            q = Fraction(q)
            den = den * q.denominator // math.gcd(den, q.denominator)
            qs.append((k, q))
        num = [0] * F.phi
        for k, q in qs:
            c = q.numerator * (den // q.denominator)
            k %= n0
            if n != n0:
                # zeta_{2m} = -zeta_m^((m+1)/2)
                c = -c if k % 2 else c
                k = (k * ((n + 1) // 2)) % n
            for i, p in enumerate(F.powers[k]):
                if p:
                    num[i] += c * p
        return cls(n, num, den)

    # basic predicates ---------------------------------------------------
    def __bool__(self) -> bool:
        return any(self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return self.conductor == 1

    def to_fraction(self) -> Fraction:
        if self.conductor != 1:
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    # conversion between conductors ----------------------------------------
    def lift(self, n: int) -> CycScalar:
        """Same element, written in Q(zeta_n); conductor must divide n."""
        if n == self.conductor:
            return self
        if n % self.conductor:
            raise ValueError(f"cannot lift conductor {self.conductor} to {n}")
        F = field(n)
        step = n // self.conductor
        num = [0] * F.phi
        for k, c in enumerate(self.num):
            if c:
                for i, p in enumerate(F.powers[(k * step) % n]):
                    if p:
                        num[i] += c * p
        return CycScalar(n, tuple(num), self.den, _raw=True)

    def conj(self, k: int) -> CycScalar:
        """Galois automorphism zeta -> zeta^k (k coprime to the conductor)."""
        n = self.conductor
        if math.gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit mod {n}")
        F = field(n)
        num = [0] * F.phi
        for i, c in enumerate(self.num):
            if c:
                for j, p in enumerate(F.powers[(i * k) % n]):
                    if p:
                        num[j] += c * p
        return CycScalar(n, num, self.den)

    def complex_conj(self) -> CycScalar:
        return self.conj(-1 % self.conductor) if self.conductor > 1 else self

    def canonical(self) -> CycScalar:
        """The same element at its minimal conductor."""
        if self._canon is None:
            self._canon = _minimal(self)
        return self._canon

    # arithmetic ----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CycScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = _common(self, o)
        if a.den == b.den:
            num = [x + y for x, y in zip(a.num, b.num)]
            den = a.den
        else:
            num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
            den = a.den * b.den
        return _make(a.conductor, num, den)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.conductor, tuple(-c for c in self.num), self.den, _raw=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = _common(self, o)
        n = a.conductor
        if n == 1:
            return _make(1, [a.num[0] * b.num[0]], a.den * b.den)
        F = field(n)
        phi = F.phi
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        num = conv[:phi]
        for e in range(phi, 2 * phi - 1):
            c = conv[e]
            if c:
                for i, p in enumerate(F.powers[e % n]):
                    if p:
                        num[i] += c * p
        return _make(n, num, a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> CycScalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        n = self.conductor
        if n == 1:
            return CycScalar.rational(Fraction(self.den, self.num[0]))
        # extended gcd of a(x) with Phi_n(x) over Q
        a = [Fraction(c) for c in self.num]
        m = [Fraction(c) for c in cyclotomic_poly(n)]
        s = _poly_xgcd_inverse(a, m)
        phi = field(n).phi
        s = s + [Fraction(0)] * (phi - len(s))
        den = 1
        for q in s:
            den = den * q.denominator // math.gcd(den, q.denominator)
        num = [int(q * den) * self.den for q in s]
        return CycScalar(n, num, den)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison ----------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.conductor == o.conductor:
            return self.den == o.den and self.num == o.num
        a, b = _common(self, o)
        return a.den == b.den and a.num == b.num

    def __hash__(self):
        c = self.canonical()
        if c.conductor == 1:
            return hash(Fraction(c.num[0], c.den))
        return hash((c.conductor, c.num, c.den))

    def sort_key(self):
        c = self.canonical()
        return (c.conductor, c.coeffs())

    # text ----------------------------------------------------------------
    def literal(self) -> str:
        c = self.canonical()
        terms = [f"{k}:{Fraction(x, c.den).numerator}/{Fraction(x, c.den).denominator}"
                 for k, x in enumerate(c.num) if x]
        return f"zeta({c.conductor})[{', '.join(terms)}]"

    def compact(self) -> str:
        """Plain "p/q" for rationals, the full literal otherwise; both parse back."""
        c = self.canonical()
        if c.conductor == 1:
            return str(Fraction(c.num[0], c.den))
        return c.literal()

    def __repr__(self):
        return self.literal()

    def __str__(self):
        c = self.canonical()
        if c.conductor == 1:
            return str(Fraction(c.num[0], c.den))
        parts = []
        for k, x in enumerate(c.num):
            if not x:
                continue
            q = Fraction(x, c.den)
            mono = "" if k == 0 else (f"z{c.conductor}" if k == 1 else f"z{c.conductor}^{k}")
            if k == 0:
                parts.append(str(q))
            elif q == 1:
                parts.append(mono)
            elif q == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{q}*{mono}")
        s = "+".join(parts).replace("+-", "-")
        return s or "0"

    # numerics ------------------------------------------------------------
    def to_complex(self, dps: int = 30):
        with mpmath.workdps(dps):
            n = self.conductor
            z = mpmath.mpf(0)
            for k, c in enumerate(self.num):
                if c:
                    z += c * mpmath.expjpi(mpmath.mpf(2 * k) / n)
            return z / self.den


def _make(n, num, den):
    num, den = _normalize(num, den)
    n, num, den = _shrink(n, num, den)
    return CycScalar(n, num, den, _raw=True)


def _shrink(n, num, den):
    if n != 1 and not any(num[1:]):
        return 1, (num[0],), den
    return n, num, den


def _common(a: CycScalar, b: CycScalar):
    if a.conductor == b.conductor:
        return a, b
    if a.conductor == 1:
        return a.lift(b.conductor), b
    if b.conductor == 1:
        return a, b.lift(a.conductor)
    n = math.lcm(a.conductor, b.conductor)
    if n > max_conductor():
        raise ConductorOverflow(f"conductor {n} exceeds bound {max_conductor()}")
    return a.lift(n), b.lift(n)


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _poly_trim(q), _poly_trim(a[: len(b) - 1])


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _poly_trim(out)


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_xgcd_inverse(a, m):
    """s with s*a = 1 mod m, for coprime a and m."""
    r0, r1 = _poly_trim(list(m)), _poly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    s = [x / c for x in s1]
    _, s = _poly_divmod(s, _poly_trim(list(m))) if len(s) >= len(m) else (None, s)
    return s


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _minimal(a: CycScalar) -> CycScalar:
    n = a.conductor
    if n == 1:
        return a
    units = [k for k in range(1, n) if math.gcd(k, n) == 1]
    for m in _divisors(n):
        if m == n:
            break
        if normalize_conductor(m) != m:
            continue
        if all(a.conj(k) == a for k in units if (k - 1) % m == 0):
            b = _descend(a, m)
            if b is not None:
                return b
    return a


def _descend(a: CycScalar, m: int) -> CycScalar:
    # solve for coordinates in the power basis of Q(zeta_m)
    from .linalg import solve_dense

    n = a.conductor
    Fm = field(m)
    Fn = field(n)
    step = n // m
    cols = [Fn.powers[(k * step) % n] for k in range(Fm.phi)]
    A = [[CycScalar.rational(cols[k][i]) for k in range(Fm.phi)] for i in range(Fn.phi)]
    b = [CycScalar.rational(Fraction(c, a.den)) for c in a.num]
    x = solve_dense(A, b)
    if x is None:
        return None
    return CycScalar.from_terms(m, [(k, xi.to_fraction()) for k, xi in enumerate(x)])


ZERO = CycScalar(1, (0,), 1, _raw=True)
ONE = CycScalar(1, (1,), 1, _raw=True)


def cyc(x) -> CycScalar:
    if isinstance(x, CycScalar):
        return x
    if isinstance(x, str):
        return parse_literal(x)
    return CycScalar.rational(x)


def zeta(n: int, k: int = 1) -> CycScalar:
    return CycScalar.from_terms(n, [(k, 1)])


# literal format ----------------------------------------------------------

_LITERAL = re.compile(r"^\s*zeta\(\s*(\d+)\s*\)\s*\[(.*)\]\s*$")
_TERM = re.compile(r"^\s*(-?\d+)\s*:\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


class LiteralError(ValueError):
    pass


def parse_literal(text: str) -> CycScalar:
    """Parse ``zeta(N)[k:p/q, ...]``; plain rationals like ``-3/4`` are accepted too."""
    m = _LITERAL.match(text)
    if not m:
        try:
            return CycScalar.rational(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError):
            raise LiteralError(f"malformed scalar literal {text!r}") from None
    n = int(m.group(1))
    if n < 1:
        raise LiteralError(f"malformed scalar literal {text!r}: conductor must be positive")
    body = m.group(2).strip()
    terms = []
    if body:
        for part in body.split(","):
            t = _TERM.match(part)
            if not t:
                raise LiteralError(f"malformed term {part.strip()!r} in {text!r}")
            den = int(t.group(3) or 1)
            if den == 0:
                raise LiteralError(f"zero denominator in term {part.strip()!r} of {text!r}")
            terms.append((int(t.group(1)), Fraction(int(t.group(2)), den)))
    return CycScalar.from_terms(n, terms)


# embedding and reconstruction ---------------------------------------------

def _iv_context(precision: int) -> MPIntervalContext:
    ctx = MPIntervalContext()
    ctx.prec = precision
    return ctx


def embed(a: CycScalar, precision: int = 128):
    """Certified complex interval containing a under zeta_N -> exp(2 pi i/N)."""
    if precision < 64:
        raise ValueError("precision must be at least 64 bits")
    ctx = _iv_context(precision + 16)
    n = a.conductor
    re_, im_ = ctx.mpf(0), ctx.mpf(0)
    for k, c in enumerate(a.num):
        if c:
            ang = 2 * ctx.pi * k / n
            re_ += c * ctx.cos(ang)
            im_ += c * ctx.sin(ang)
    return ctx.mpc(re_ / a.den, im_ / a.den)


def embeddings(a: CycScalar, precision: int = 128):
    """Intervals for every complex embedding of Q(zeta_N)."""
    n = a.conductor
    return [embed(a.conj(k), precision) for k in range(1, max(n, 2)) if math.gcd(k, n) == 1]


def abs_upper(z) -> mpmath.mpf:
    """Upper endpoint of |z| for a complex interval."""
    return mpmath.mpf(abs(z).b)


def reconstruct(z, n: int, denom_bound: int, precision: int | None = None):
    """Find the element of Q(zeta_n) with denominators <= denom_bound near z.

    ``z`` is a complex interval (or an mpc).  Returns None when no candidate
    fits; callers verify the returned value exactly.
    """
    n = normalize_conductor(n)
    F = field(n)
    zr, zi = _mid_parts(z)
    if precision is None:
        precision = _interval_bits(z)
    with mpmath.workprec(precision):
        zr, zi = mpmath.mpf(zr), mpmath.mpf(zi)
        alpha = mpmath.sqrt(2) * mpmath.pi / 3
        xs = []
        for k in range(F.phi):
            ang = 2 * mpmath.pi * k / n
            xs.append(mpmath.cos(ang) + alpha * mpmath.sin(ang))
        target = zr + alpha * zi
        tol = mpmath.mpf(2) ** (-(precision // 2))
        if abs(zr) < tol and abs(zi) < tol:
            return ZERO
        if F.phi == 1:
            q = Fraction(str(mpmath.nstr(target, precision // 4))).limit_denominator(denom_bound)
            cand = CycScalar.rational(q)
        else:
            try:
                rel = mpmath.pslq([target] + xs, maxcoeff=10**12 * denom_bound,
                                  maxsteps=20000, tol=mpmath.mpf(2) ** (-(precision * 3 // 4)))
            except ValueError:
                return None
            if rel is None or rel[0] == 0 or abs(rel[0]) > denom_bound:
                return None
            d = rel[0]
            cand = CycScalar.from_terms(n, [(k, Fraction(-rel[k + 1], d)) for k in range(F.phi)])
        w = cand.to_complex(dps=int(precision * 0.30103) + 5)
        if abs(w.real - zr) > tol or abs(w.imag - zi) > tol:
            return None
        return cand


def _interval_bits(z) -> int:
    re_, im_ = z.real, z.imag
    widths = [x.delta for x in (re_, im_) if hasattr(x, "delta")]
    w = max((mpmath.mpf(d) for d in widths), default=mpmath.mpf(0))
    if not w:
        return int(mpmath.mp.prec)
    return max(64, int(-mpmath.log(w, 2)) - 4)


def _mid_parts(z):
    re_, im_ = z.real, z.imag
    if hasattr(re_, "mid"):
        re_ = re_.mid
    if hasattr(im_, "mid"):
        im_ = im_.mid
    return re_, im_

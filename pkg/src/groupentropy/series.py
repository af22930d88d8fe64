"""Exact truncated power series over the rationals.

Two value types live here:

``TruncatedSeries``
    a one-variable series ``c_0 + c_1 t + ... + c_M t^M``;
``MultivarPoly``
    a polynomial in two or three variables truncated at total degree ``M``.

Both are immutable. Every operation is closed at the truncation order and
coefficients beyond it are discarded, never approximated.  On top of that
kernel the module builds formal group laws ``G(G^-1(x) + G^-1(y))`` and ring
products ``G(G^-1(x) G^-1(y))`` from a generator series and checks the formal
group and formal ring identities coefficient by coefficient.
"""

from __future__ import annotations

import ast
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian
from numbers import Rational
from typing import Iterable, Mapping, Sequence

DEFAULT_ORDER = 12

_ZERO = Fraction(0)
_ONE = Fraction(1)


class SeriesError(ValueError):
    """Raised for operations that are undefined in the truncated ring."""


def _q(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(
        f"coefficients must be exact (int, Fraction or decimal string), got {type(c).__name__}"
    )


# ---------------------------------------------------------------------------
# one variable
# ---------------------------------------------------------------------------


class TruncatedSeries:
    """Power series in one variable with exact rational coefficients.

    >>> t = TruncatedSeries.variable(4)
    >>> (t + t * t).coeffs
    (Fraction(0, 1), Fraction(1, 1), Fraction(1, 1), Fraction(0, 1), Fraction(0, 1))
    """

    __slots__ = ("_c", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_q(c) for c in coeffs]
        if order is None:
            order = max(len(cs) - 1, 1)
        if order < 1:
            raise SeriesError("truncation order must be a positive integer")
        cs = cs[: order + 1]
        cs.extend([_ZERO] * (order + 1 - len(cs)))
        self._c = tuple(cs)
        self.order = order

    @classmethod
    def _raw(cls, coeffs: tuple, order: int) -> "TruncatedSeries":
        obj = cls.__new__(cls)
        obj._c = coeffs
        obj.order = order
        return obj

    @classmethod
    def variable(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([0, 1], order)

    @classmethod
    def constant(cls, c, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([c], order)

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __getitem__(self, k: int) -> Fraction:
        return self._c[k]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self._c))

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self._c):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            terms.append(f"{c}" if not mono else (mono if c == 1 else f"({c})*{mono}"))
        body = " + ".join(terms) if terms else "0"
        return f"TruncatedSeries({body} + O(t^{self.order + 1}))"

    def _check(self, other: "TruncatedSeries"):
        if other.order != self.order:
            raise SeriesError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return TruncatedSeries._raw(
                tuple(a + b for a, b in zip(self._c, other._c)), self.order
            )
        try:
            c = _q(other)
        except TypeError:
            return NotImplemented
        return TruncatedSeries._raw((self._c[0] + c,) + self._c[1:], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw(tuple(-a for a in self._c), self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            M = self.order
            a, b = self._c, other._c
            out = [_ZERO] * (M + 1)
            for i, ai in enumerate(a):
                if ai == 0:
                    continue
                for j in range(M + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
            return TruncatedSeries._raw(tuple(out), M)
        if isinstance(other, MultivarPoly):
            return NotImplemented
        try:
            c = _q(other)
        except TypeError:
            return NotImplemented
        return TruncatedSeries._raw(tuple(a * c for a in self._c), self.order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        return self * (_ONE / _q(other))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise SeriesError("only non-negative integer powers are supported")
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse; needs a nonzero constant term."""
        a = self._c
        if a[0] == 0:
            raise SeriesError("series with zero constant term has no reciprocal")
        M = self.order
        inv0 = _ONE / a[0]
        r = [inv0] + [_ZERO] * M
        for k in range(1, M + 1):
            s = sum((a[j] * r[k - j] for j in range(1, k + 1)), _ZERO)
            r[k] = -s * inv0
        return TruncatedSeries._raw(tuple(r), M)

    def __call__(self, arg):
        """Substitute ``arg`` for the variable.

        ``arg`` may be another series (composition), a ``MultivarPoly`` with
        zero constant term, or an exact number (polynomial evaluation of the
        truncation).
        """
        if isinstance(arg, TruncatedSeries):
            return compose(self, arg)
        if isinstance(arg, MultivarPoly):
            return arg._apply_series(self)
        x = arg
        acc = self._c[-1]
        for c in reversed(self._c[:-1]):
            acc = acc * x + c
        return acc

    def to_records(self) -> list:
        return [[[k], c.numerator, c.denominator] for k, c in enumerate(self._c) if c]

    @classmethod
    def from_records(cls, records: Iterable, order: int) -> "TruncatedSeries":
        cs = [_ZERO] * (order + 1)
        for exps, num, den in records:
            (k,) = exps
            if k > order:
                continue
            cs[k] += Fraction(int(num), int(den))
        return cls(cs, order)


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """Coefficients of ``outer(inner(t))`` up to the shared order."""
    if outer.order != inner.order:
        raise SeriesError(f"order mismatch: {outer.order} vs {inner.order}")
    if inner[0] != 0:
        raise SeriesError("inner series must have zero constant term")
    acc = TruncatedSeries.constant(outer[outer.order], outer.order)
    for c in reversed(outer.coeffs[:-1]):
        acc = acc * inner + c
    return acc


def compositional_inverse(s: TruncatedSeries) -> TruncatedSeries:
    """Series ``r`` with ``s(r(t)) = t`` to the order of ``s``.

    Solved one coefficient at a time: once ``r`` is right through degree
    ``k-1`` the degree-``k`` coefficient of ``s(r)`` is off by exactly
    ``a_1 * delta``.
    """
    if s[0] != 0:
        raise SeriesError("series with nonzero constant term is not invertible")
    a1 = s[1]
    if a1 == 0:
        raise SeriesError("series with zero linear coefficient is not invertible")
    M = s.order
    r = [_ZERO, _ONE / a1] + [_ZERO] * (M - 1)
    for k in range(2, M + 1):
        err = compose(s, TruncatedSeries._raw(tuple(r), M))[k]
        r[k] = -err / a1
    return TruncatedSeries._raw(tuple(r), M)


def exp_generator(sigma=1, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``(exp(sigma t) - 1) / sigma``; the plain variable when ``sigma == 0``."""
    sigma = _q(sigma)
    cs = [_ZERO]
    fact = 1
    for k in range(1, order + 1):
        fact *= k
        cs.append(sigma ** (k - 1) / fact)
    return TruncatedSeries(cs, order)


def log_generator(sigma=1, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``ln(1 + sigma t) / sigma``."""
    sigma = _q(sigma)
    cs = [_ZERO] + [(-1) ** (k + 1) * sigma ** (k - 1) / k for k in range(1, order + 1)]
    return TruncatedSeries(cs, order)


def rational_generator(a, b, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Generator of the law ``(x + y + a x y) / (1 + b x y)``, as a series.

    This is ``2 (e^{rt}-1) / (-a (e^{rt}-1) + sqrt(a^2+4b) (e^{rt}+1))`` with
    the rate fixed at ``r = sqrt(a^2 + 4b)``.  That choice gives ``G'(0) = 1``
    and rational coefficients: with ``S = tanh(r t / 2) / r`` the generator
    is ``2 S / (1 - a S)``, and ``S`` only involves even powers of ``r``.
    """
    a, b = _q(a), _q(b)
    disc = a * a + 4 * b
    if disc <= 0:
        raise SeriesError("requires a^2 + 4b > 0")
    sinh_part = [_ZERO] * (order + 1)
    cosh_part = [_ZERO] * (order + 1)
    fact = 1
    for n in range(order + 1):
        if n:
            fact *= n
        k, odd = divmod(n, 2)
        term = disc**k * Fraction(1, 2**n) / fact
        if odd:
            sinh_part[n] = term
        else:
            cosh_part[n] = term
    S = TruncatedSeries(sinh_part, order) / TruncatedSeries(cosh_part, order)
    return 2 * S * (1 - a * S).reciprocal()


def random_generator(rng, order: int = 8, max_num: int = 5, max_den: int = 5) -> TruncatedSeries:
    """Random invertible series ``c_1 t + c_2 t^2 + ...`` with small rational coefficients.

    ``rng`` is a ``random.Random`` or ``numpy.random.Generator``.
    """
    def draw(lo, hi):
        return int(rng.integers(lo, hi + 1)) if hasattr(rng, "integers") else rng.randint(lo, hi)

    cs = [_ZERO]
    lead = 0
    while lead == 0:
        lead = draw(-max_num, max_num)
    cs.append(Fraction(lead, draw(1, max_den)))
    for _ in range(2, order + 1):
        cs.append(Fraction(draw(-max_num, max_num), draw(1, max_den)))
    return TruncatedSeries(cs, order)


# ---------------------------------------------------------------------------
# several variables
# ---------------------------------------------------------------------------
#
# Monomials are packed into one int: exponent e_i goes in base-(M+1) digit i.
# Products of monomials of total degree <= M never carry, so multiplying
# monomials is integer addition of their keys.


@lru_cache(maxsize=None)
def _layout(nvars: int, order: int):
    base = order + 1
    size = base**nvars
    degree = [0] * size
    exps = [None] * size
    for e in _cartesian(range(base), repeat=nvars):
        key = sum(ei * base**i for i, ei in enumerate(e))
        degree[key] = sum(e)
        exps[key] = e
    return base, degree, exps


def _pack(e: Sequence[int], base: int) -> int:
    return sum(ei * base**i for i, ei in enumerate(e))


def _graded_key(e: tuple):
    return (sum(e), tuple(-x for x in e))


class MultivarPoly:
    """Polynomial in ``nvars`` variables truncated at total degree ``order``.

    Coefficients are given as a mapping from exponent tuples to exact
    rationals; monomials above the truncation order are dropped.

    >>> x, y = MultivarPoly.variables(2, 4)
    >>> sorted((x + y + x * y).coefficients().items())
    [((0, 1), Fraction(1, 1)), ((1, 0), Fraction(1, 1)), ((1, 1), Fraction(1, 1))]
    """

    __slots__ = ("nvars", "order", "_t")

    def __init__(self, coeffs: Mapping, nvars: int, order: int = DEFAULT_ORDER):
        if nvars < 1:
            raise SeriesError("nvars must be positive")
        if order < 1:
            raise SeriesError("truncation order must be a positive integer")
        base = order + 1
        terms: dict = {}
        for e, c in coeffs.items():
            e = tuple(int(v) for v in e)
            if len(e) != nvars or min(e) < 0:
                raise SeriesError(f"bad exponent tuple {e} for {nvars} variables")
            if sum(e) > order:
                continue
            k = _pack(e, base)
            terms[k] = terms.get(k, _ZERO) + _q(c)
        self.nvars = nvars
        self.order = order
        self._t = {k: c for k, c in terms.items() if c}

    @classmethod
    def _raw(cls, terms: dict, nvars: int, order: int) -> "MultivarPoly":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.order = order
        obj._t = terms
        return obj

    @classmethod
    def variables(cls, nvars: int, order: int = DEFAULT_ORDER) -> tuple:
        base = order + 1
        return tuple(cls._raw({base**i: _ONE}, nvars, order) for i in range(nvars))

    @classmethod
    def constant(cls, c, nvars: int, order: int = DEFAULT_ORDER) -> "MultivarPoly":
        c = _q(c)
        return cls._raw({0: c} if c else {}, nvars, order)

    def coefficients(self) -> dict:
        _, _, exps = _layout(self.nvars, self.order)
        return {exps[k]: c for k, c in self._t.items()}

    def coeff(self, *exps: int) -> Fraction:
        if len(exps) != self.nvars:
            raise SeriesError("wrong number of exponents")
        if sum(exps) > self.order:
            return _ZERO
        return self._t.get(_pack(exps, self.order + 1), _ZERO)

    def constant_term(self) -> Fraction:
        return self._t.get(0, _ZERO)

    def is_zero(self) -> bool:
        return not self._t

    def __len__(self) -> int:
        return len(self._t)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultivarPoly):
            return (self.nvars, self.order, self._t) == (other.nvars, other.order, other._t)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, self.order, frozenset(self._t.items())))

    def __repr__(self) -> str:
        names = "xyz" if self.nvars <= 3 else None
        parts = []
        for e, c in sorted(self.coefficients().items(), key=lambda kv: _graded_key(kv[0])):
            mono = []
            for i, ei in enumerate(e):
                if ei:
                    v = names[i] if names else f"x{i}"
                    mono.append(v if ei == 1 else f"{v}^{ei}")
            m = "*".join(mono)
            if not m:
                parts.append(str(c))
            elif c == 1:
                parts.append(m)
            else:
                parts.append(f"({c})*{m}")
        body = " + ".join(parts) if parts else "0"
        return f"MultivarPoly({body}, order={self.order})"

    def _check(self, other: "MultivarPoly"):
        if (other.nvars, other.order) != (self.nvars, self.order):
            raise SeriesError(
                f"ring mismatch: ({self.nvars} vars, order {self.order}) vs "
                f"({other.nvars} vars, order {other.order})"
            )

    def __add__(self, other):
        if isinstance(other, MultivarPoly):
            self._check(other)
            out = dict(self._t)
            _axpy(out, _ONE, other._t)
            return MultivarPoly._raw(out, self.nvars, self.order)
        try:
            c = _q(other)
        except TypeError:
            return NotImplemented
        out = dict(self._t)
        _axpy(out, _ONE, {0: c})
        return MultivarPoly._raw(out, self.nvars, self.order)

    __radd__ = __add__

    def __neg__(self):
        return MultivarPoly._raw({k: -c for k, c in self._t.items()}, self.nvars, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, MultivarPoly):
            self._check(other)
            return MultivarPoly._raw(
                _mul_terms(self._t, other._t, self.nvars, self.order), self.nvars, self.order
            )
        try:
            c = _q(other)
        except TypeError:
            return NotImplemented
        if c == 0:
            return MultivarPoly._raw({}, self.nvars, self.order)
        return MultivarPoly._raw({k: v * c for k, v in self._t.items()}, self.nvars, self.order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultivarPoly):
            return self * other.reciprocal()
        return self * (_ONE / _q(other))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise SeriesError("only integer powers are supported")
        if n < 0:
            return self.reciprocal() ** (-n)
        result = MultivarPoly.constant(1, self.nvars, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def reciprocal(self) -> "MultivarPoly":
        """``1/P`` expanded as a geometric series; needs a nonzero constant term."""
        c0 = self.constant_term()
        if c0 == 0:
            raise SeriesError("polynomial with zero constant term has no reciprocal")
        inv0 = _ONE / c0
        u = (self - c0) * inv0  # zero constant term
        acc = MultivarPoly.constant(1, self.nvars, self.order)
        for _ in range(self.order):
            acc = 1 - u * acc
        return acc * inv0

    def swap(self, i: int = 0, j: int = 1) -> "MultivarPoly":
        """Exchange variables ``i`` and ``j``."""
        out = {}
        for e, c in self.coefficients().items():
            e = list(e)
            e[i], e[j] = e[j], e[i]
            out[tuple(e)] = c
        return MultivarPoly(out, self.nvars, self.order)

    def substitute(self, args: Sequence["MultivarPoly"]) -> "MultivarPoly":
        """Replace variable ``i`` by ``args[i]``.

        All ``args`` must live in one ring of the same order and have zero
        constant term, which keeps the result exact through total degree
        ``order``.
        """
        if len(args) != self.nvars:
            raise SeriesError(f"expected {self.nvars} arguments, got {len(args)}")
        tn, M = args[0].nvars, args[0].order
        for a in args:
            if (a.nvars, a.order) != (tn, M):
                raise SeriesError("substituted polynomials must share one ring")
            if a.constant_term() != 0:
                raise SeriesError("substituted polynomial must have zero constant term")
        if M != self.order:
            raise SeriesError(f"order mismatch: {self.order} vs {M}")
        _, _, exps = _layout(self.nvars, self.order)
        # group by the exponent of the first variable, Horner in args[0]
        rows: dict = {}
        for k, c in self._t.items():
            e = exps[k]
            rows.setdefault(e[0], {})[e[1:]] = c
        powcache: dict = {}

        def rest_power(e_rest: tuple) -> dict:
            if e_rest in powcache:
                return powcache[e_rest]
            nz = [(i, v) for i, v in enumerate(e_rest) if v]
            if not nz:
                val = {0: _ONE}
            elif len(nz) == 1 and nz[0][1] == 1:
                val = args[1 + nz[0][0]]._t
            else:
                i, v = nz[-1]
                lower = list(e_rest)
                lower[i] -= 1
                val = _mul_terms(rest_power(tuple(lower)), args[1 + i]._t, tn, M)
            powcache[e_rest] = val
            return val

        def row_value(i: int) -> dict:
            out: dict = {}
            for e_rest, c in rows.get(i, {}).items():
                _axpy(out, c, rest_power(e_rest))
            return out

        top = max(rows) if rows else 0
        acc = row_value(top)
        first = args[0]._t
        for i in range(top - 1, -1, -1):
            acc = _mul_terms(acc, first, tn, M) if acc else {}
            _axpy(acc, _ONE, row_value(i))
        return MultivarPoly._raw({k: c for k, c in acc.items() if c}, tn, M)

    def __call__(self, *args: "MultivarPoly") -> "MultivarPoly":
        return self.substitute(args)

    def _apply_series(self, s: TruncatedSeries) -> "MultivarPoly":
        if s.order != self.order:
            raise SeriesError(f"order mismatch: {s.order} vs {self.order}")
        if self.constant_term() != 0:
            raise SeriesError("substituted polynomial must have zero constant term")
        cs = s.coeffs
        acc: dict = {0: cs[-1]} if cs[-1] else {}
        for c in reversed(cs[:-1]):
            acc = _mul_terms(acc, self._t, self.nvars, self.order) if acc else {}
            if c:
                _axpy(acc, _ONE, {0: c})
        return MultivarPoly._raw({k: c for k, c in acc.items() if c}, self.nvars, self.order)

    def to_records(self) -> list:
        items = sorted(self.coefficients().items(), key=lambda kv: _graded_key(kv[0]))
        return [[list(e), c.numerator, c.denominator] for e, c in items]

    @classmethod
    def from_records(cls, records: Iterable, nvars: int, order: int) -> "MultivarPoly":
        acc: dict = {}
        for exps, num, den in records:
            e = tuple(int(v) for v in exps)
            acc[e] = acc.get(e, _ZERO) + Fraction(int(num), int(den))
        return cls(acc, nvars, order)

    def to_json(self) -> str:
        return json.dumps({"nvars": self.nvars, "order": self.order, "terms": self.to_records()})

    @classmethod
    def from_json(cls, text: str) -> "MultivarPoly":
        d = json.loads(text)
        return cls.from_records(d["terms"], d["nvars"], d["order"])


def _axpy(out: dict, c: Fraction, terms: dict) -> None:
    """``out += c * terms`` in place, dropping cancelled monomials."""
    for k, v in terms.items():
        s = out.get(k, _ZERO) + c * v
        if s:
            out[k] = s
        elif k in out:
            del out[k]


def _mul_terms(a: dict, b: dict, nvars: int, order: int) -> dict:
    _, degree, _ = _layout(nvars, order)
    if len(a) > len(b):
        a, b = b, a
    bb = sorted(((degree[k], k, c) for k, c in b.items()))
    out: dict = {}
    get = out.get
    for ka, ca in a.items():
        room = order - degree[ka]
        for db, kb, cb in bb:
            if db > room:
                break
            k = ka + kb
            out[k] = get(k, _ZERO) + ca * cb
    return {k: c for k, c in out.items() if c}


def _embed(s: TruncatedSeries, var: int, nvars: int) -> MultivarPoly:
    base = s.order + 1
    return MultivarPoly._raw(
        {base**var * k: c for k, c in enumerate(s.coeffs) if c}, nvars, s.order
    )


# ---------------------------------------------------------------------------
# group laws, ring products and their axioms
# ---------------------------------------------------------------------------


def construct_group_law(G: TruncatedSeries) -> MultivarPoly:
    """``G(G^-1(x) + G^-1(y))`` truncated at the order of ``G``."""
    Ginv = compositional_inverse(G)
    u = _embed(Ginv, 0, 2) + _embed(Ginv, 1, 2)
    return G(u)


def construct_ring_product(G: TruncatedSeries) -> MultivarPoly:
    """``G(G^-1(x) * G^-1(y))`` truncated at the order of ``G``."""
    Ginv = compositional_inverse(G)
    u = _embed(Ginv, 0, 2) * _embed(Ginv, 1, 2)
    return G(u)


def rational_law(a, b, order: int = DEFAULT_ORDER) -> MultivarPoly:
    """``(x + y + a x y) / (1 + b x y)`` expanded to total degree ``order``."""
    a, b = _q(a), _q(b)
    x, y = MultivarPoly.variables(2, order)
    return (x + y + a * x * y) * (1 + b * x * y).reciprocal()


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of one coefficient identity; on failure, the first offending monomial."""

    name: str
    passed: bool
    monomial: tuple | None = None
    lhs: Fraction | None = None
    rhs: Fraction | None = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if not self.passed:
            d["monomial"] = list(self.monomial)
            d["lhs"] = str(self.lhs)
            d["rhs"] = str(self.rhs)
        return d


@dataclass(frozen=True)
class AxiomReport:
    order: int
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failed(self) -> list:
        return [name for name, c in self.checks.items() if not c.passed]

    def __getitem__(self, name: str) -> AxiomCheck:
        return self.checks[name]

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "passed": self.passed,
            "checks": {name: c.to_dict() for name, c in self.checks.items()},
        }


def _compare(name: str, lhs: MultivarPoly, rhs: MultivarPoly) -> AxiomCheck:
    diff = lhs - rhs
    if diff.is_zero():
        return AxiomCheck(name, True)
    e = min(diff.coefficients(), key=_graded_key)
    return AxiomCheck(name, False, e, lhs.coeff(*e), rhs.coeff(*e))


def _require_bivariate(P: MultivarPoly, label: str):
    if P.nvars != 2:
        raise SeriesError(f"{label} must be bivariate, got {P.nvars} variables")


def verify_group_axioms(phi: MultivarPoly) -> AxiomReport:
    """Check symmetry, null-composability and associativity of ``phi`` exactly.

    Associativity is tested in the trivariate ring truncated at the same
    total degree.
    """
    _require_bivariate(phi, "phi")
    M = phi.order
    if M < 2:
        raise SeriesError("order must be at least 2")
    checks = {}
    checks["symmetry"] = _compare("symmetry", phi, phi.swap())

    x, y = MultivarPoly.variables(2, M)
    zero = MultivarPoly.constant(0, 2, M)
    left = _compare("null_composability", phi.substitute([x, zero]), x)
    right = _compare("null_composability", phi.substitute([zero, y]), y)
    checks["null_composability"] = left if not left.passed else right

    X, Y, Z = MultivarPoly.variables(3, M)
    lhs = phi.substitute([phi.substitute([X, Y]), Z])
    rhs = phi.substitute([X, phi.substitute([Y, Z])])
    checks["associativity"] = _compare("associativity", lhs, rhs)
    return AxiomReport(M, checks)


def verify_ring_axioms(phi: MultivarPoly, psi: MultivarPoly) -> AxiomReport:
    """Check the formal ring identities for the pair ``(phi, psi)``.

    Reports ``phi_group_law`` (all group axioms of ``phi``), associativity
    and commutativity of ``psi``, and distributivity of ``psi`` over ``phi``
    from both sides.
    """
    _require_bivariate(phi, "phi")
    _require_bivariate(psi, "psi")
    if phi.order != psi.order:
        raise SeriesError(f"order mismatch: {phi.order} vs {psi.order}")
    M = phi.order
    checks = {}
    group = verify_group_axioms(phi)
    bad = group.failed()
    if bad:
        first = group[bad[0]]
        checks["phi_group_law"] = AxiomCheck(
            "phi_group_law", False, first.monomial, first.lhs, first.rhs
        )
    else:
        checks["phi_group_law"] = AxiomCheck("phi_group_law", True)

    X, Y, Z = MultivarPoly.variables(3, M)
    psi_xy = psi.substitute([X, Y])
    psi_xz = psi.substitute([X, Z])
    checks["psi_associativity"] = _compare(
        "psi_associativity",
        psi.substitute([psi_xy, Z]),
        psi.substitute([X, psi.substitute([Y, Z])]),
    )
    checks["left_distributivity"] = _compare(
        "left_distributivity",
        psi.substitute([X, phi.substitute([Y, Z])]),
        phi.substitute([psi_xy, psi_xz]),
    )
    checks["right_distributivity"] = _compare(
        "right_distributivity",
        psi.substitute([phi.substitute([X, Y]), Z]),
        phi.substitute([psi_xz, psi.substitute([Y, Z])]),
    )
    checks["psi_commutativity"] = _compare("psi_commutativity", psi, psi.swap())
    return AxiomReport(M, checks)


# ---------------------------------------------------------------------------
# law strings
# ---------------------------------------------------------------------------

_VARS = ("x", "y", "z")


def parse_poly(expr: str, nvars: int | None = None, order: int = DEFAULT_ORDER) -> MultivarPoly:
    """Parse an arithmetic expression in ``x, y, z`` into a truncated polynomial.

    Supports ``+ - * / ^`` (``**`` too), parentheses and exact decimal or
    integer constants.  Division expands the denominator as a geometric
    series, so it must have a nonzero constant term.

    >>> parse_poly("x+y+x^2*y", order=4).coeff(2, 1)
    Fraction(1, 1)
    """
    src = expr.replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise SeriesError(f"cannot parse law {expr!r}: {exc.msg}") from None
    used = {n.id for n in ast.walk(tree) if isinstance(n, ast.Name)}
    unknown = used - set(_VARS)
    if unknown:
        raise SeriesError(f"unknown symbols {sorted(unknown)}; allowed: x, y, z")
    if nvars is None:
        nvars = 3 if "z" in used else 2
    if nvars < 1 or nvars > 3:
        raise SeriesError("nvars must be 1, 2 or 3")
    gens = MultivarPoly.variables(nvars, order)

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
            return MultivarPoly.constant(Fraction(repr(node.value)), nvars, order)
        if isinstance(node, ast.Name):
            idx = _VARS.index(node.id)
            if idx >= nvars:
                raise SeriesError(f"variable {node.id} not available with {nvars} variables")
            return gens[idx]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                n = _int_exponent(node.right)
                return ev(node.left) ** n
            lhs, rhs = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return lhs + rhs
            if isinstance(node.op, ast.Sub):
                return lhs - rhs
            if isinstance(node.op, ast.Mult):
                return lhs * rhs
            if isinstance(node.op, ast.Div):
                return lhs / rhs
        raise SeriesError(f"unsupported construct in law {expr!r}: {ast.dump(node)}")

    return ev(tree)


def _int_exponent(node) -> int:
    sign = 1
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        sign, node = -1, node.operand
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return sign * node.value
    raise SeriesError("exponents must be integer constants")

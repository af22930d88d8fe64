"""Scalar special functions and invertible generator maps.

The principal real branch of the Lambert W function, the group logarithm
``x -> chi(ln x)`` and a small catalog of strictly increasing generators
(``chi``, ``G``, ``g`` and their inverses) used by the entropy catalog.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import brentq

_INV_E = math.exp(-1.0)


class DomainError(ValueError):
    """Argument outside the domain of a function."""


class RangeError(ValueError):
    """A value could not be bracketed inside the range of a map."""


# ---------------------------------------------------------------------------
# Lambert W
# ---------------------------------------------------------------------------


def _halley(x: float, w: float, max_iter: int = 50) -> float:
    for _ in range(max_iter):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        if wp1 == 0.0:
            break
        denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1)
        step = f / denom
        w -= step
        if abs(step) <= 1e-15 * max(1.0, abs(w)):
            break
    return w


def lambert_w0(x: float) -> float:
    """Principal branch ``W0`` of the Lambert function: the ``w >= -1`` with ``w e^w = x``.

    Halley iteration, started from the branch-point expansion near ``-1/e``,
    from ``x (1 - x)`` near zero, from ``log1p(x)`` on the middle range and
    from ``ln x - ln ln x`` once ``x >= e``.
    """
    x = float(x)
    if math.isnan(x):
        raise DomainError("lambert_w0 of NaN")
    if x < -_INV_E:
        # tolerate rounding of -1/e itself
        if x < -_INV_E * (1 + 4e-16):
            raise DomainError(f"lambert_w0 requires x >= -1/e, got {x!r}")
        return -1.0
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return math.inf
    if x < -0.25:
        p = math.sqrt(max(0.0, 2.0 * (math.e * x + 1.0)))
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p**3
    elif abs(x) < 0.25:
        w = x * (1.0 - x)
    elif x < math.e:
        w = math.log1p(x) * 0.75
    else:
        lx = math.log(x)
        w = lx - math.log(lx)
    if x > 1e300:
        return lambert_w0_log(math.log(x))
    return _halley(x, w)


def lambert_w0_log(u: float) -> float:
    """``W0(exp(u))`` without forming ``exp(u)``.

    For large ``u`` this solves ``w + ln w = u`` by Newton's method from
    ``u - ln u``; small ``u`` defers to :func:`lambert_w0`.
    """
    u = float(u)
    if math.isnan(u):
        raise DomainError("lambert_w0_log of NaN")
    if u == math.inf:
        return math.inf
    if u < 1.0:
        return lambert_w0(math.exp(u))
    w = u - math.log(u) if u > 1.0 else 1.0
    for _ in range(50):
        step = (w + math.log(w) - u) / (1.0 + 1.0 / w)
        w -= step
        if abs(step) <= 1e-16 * w:
            break
    return w


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Generator:
    """A strictly increasing scalar map with its inverse.

    ``inverse`` may be ``None``, in which case :meth:`inv` inverts
    ``forward`` numerically by bracketing.  ``domain`` is the closed or
    open interval on which ``forward`` is defined; ``normalized`` marks maps
    satisfying ``f(0) = 0`` and ``f'(0) = 1``.
    """

    forward: Callable[[float], float]
    inverse: Callable[[float], float] | None = None
    domain: tuple = (-math.inf, math.inf)
    kind: str = "user"
    params: dict = field(default_factory=dict)
    normalized: bool = False

    def __call__(self, x: float) -> float:
        return self.forward(x)

    def inv(self, y: float) -> float:
        if self.inverse is not None:
            return self.inverse(y)
        return invert_numeric(self, y)

    def inverted(self) -> "Generator":
        """The inverse map as a generator in its own right."""
        lo, hi = self.domain
        f_lo = self.forward(lo) if math.isfinite(lo) else -math.inf
        f_hi = self.forward(hi) if math.isfinite(hi) else math.inf
        return Generator(self.inv, self.forward, (f_lo, f_hi), f"inverse:{self.kind}", dict(self.params))

    def compose(self, inner: "Generator", kind: str | None = None) -> "Generator":
        """``self(inner(x))``, with inverse ``inner^-1(self^-1(y))``."""
        return Generator(
            lambda x: self.forward(inner.forward(x)),
            lambda y: inner.inv(self.inv(y)),
            inner.domain,
            kind or f"{self.kind}o{inner.kind}",
            {"outer": self.params, "inner": inner.params},
            self.normalized and inner.normalized,
        )

    def check_monotone(self, lo: float, hi: float, samples: int = 1000) -> bool:
        xs = np.linspace(lo, hi, samples)
        ys = [self.forward(float(x)) for x in xs]
        return all(b > a for a, b in zip(ys, ys[1:]))

    def check_normalized(self, h: float = 1e-6, tol: float = 1e-6) -> bool:
        f0 = self.forward(0.0)
        slope = (self.forward(h) - self.forward(-h)) / (2 * h) if self.domain[0] < 0 else (
            self.forward(h) - f0
        ) / h
        return abs(f0) <= 1e-15 and abs(slope - 1.0) <= tol


def identity() -> Generator:
    return Generator(lambda x: x, lambda y: y, kind="identity", normalized=True)


def linear(nu: float) -> Generator:
    """``g(x) = nu x``."""
    if nu <= 0:
        raise DomainError(f"nu must be positive, got {nu}")
    return Generator(lambda x: nu * x, lambda y: y / nu, kind="linear", params={"nu": nu},
                     normalized=(nu == 1))


def tsallis_exp(sigma: float) -> Generator:
    """Group exponential ``(e^{sigma t} - 1) / sigma``; the identity at ``sigma = 0``."""
    if sigma == 0:
        g = identity()
        return Generator(g.forward, g.inverse, kind="tsallis", params={"sigma": 0.0}, normalized=True)

    def fwd(t):
        return math.expm1(sigma * t) / sigma

    def inv(s):
        return math.log1p(sigma * s) / sigma

    return Generator(fwd, inv, kind="tsallis", params={"sigma": sigma}, normalized=True)


def lambert_exp() -> Generator:
    """``g(x) = exp(W0(x)) - 1`` with inverse ``(1 + u) ln(1 + u)``."""

    def fwd(x):
        return math.expm1(lambert_w0(x))

    def inv(u):
        return (1.0 + u) * math.log1p(u)

    return Generator(fwd, inv, domain=(0.0, math.inf), kind="lambert-exp", normalized=True)


def rational(a: float, b: float, r: float = 1.0) -> Generator:
    """``2 (e^{rx}-1) / (-a (e^{rx}-1) + sqrt(a^2+4b) (e^{rx}+1))``.

    Generates the rational law ``(x + y + a x y) / (1 + b x y)``.
    """
    disc = a * a + 4.0 * b
    if disc <= 0:
        raise DomainError(f"requires a^2 + 4b > 0, got {disc}")
    if r == 0:
        raise DomainError("rate r must be nonzero")
    root = math.sqrt(disc)

    def fwd(x):
        rx = r * x
        if rx > 0:
            # 1 - e^{-rx}, so large rx cannot overflow
            v = -math.expm1(-rx)
            return 2.0 * v / (-a * v + root * (2.0 - v))
        em1 = math.expm1(rx)
        return 2.0 * em1 / (-a * em1 + root * (em1 + 2.0))

    def inv(s):
        # e^{rx} - 1 from s * ((root - a) em1 + 2 root) = 2 em1
        em1 = 2.0 * root * s / (2.0 - (root - a) * s)
        return math.log1p(em1) / r

    return Generator(fwd, inv, kind="rational", params={"a": a, "b": b, "r": r},
                     normalized=math.isclose(r, root))


def rational_multiplicative(a: float, b: float, r: float = 1.0) -> Generator:
    """``2 (x^r - 1) / (-a (x^r - 1) + sqrt(a^2+4b) (x^r + 1))`` for ``x > 0``."""
    base = rational(a, b, r)

    def fwd(x):
        if x <= 0:
            raise DomainError("defined for x > 0 only")
        return base.forward(math.log(x))

    return Generator(fwd, lambda s: math.exp(base.inverse(s)), domain=(0.0, math.inf),
                     kind="rational-mult", params=dict(base.params))


def rapid_log(k1: float) -> Generator:
    """``chi(t) = k1 ln(t / k1 + 1)``."""
    if k1 <= 0:
        raise DomainError(f"k1 must be positive, got {k1}")
    return Generator(lambda t: k1 * math.log1p(t / k1), lambda s: k1 * math.expm1(s / k1),
                     domain=(-k1, math.inf), kind="rapid", params={"k1": k1}, normalized=True)


def stretched(rate: float, beta: float) -> Generator:
    """``chi(t) = (t / rate)^(1/beta)`` on ``t >= 0``."""
    if rate <= 0 or beta <= 0:
        raise DomainError("rate and beta must be positive")

    def fwd(t):
        if t < 0:
            raise DomainError("defined for t >= 0 only")
        return (t / rate) ** (1.0 / beta)

    return Generator(fwd, lambda s: rate * s**beta, domain=(0.0, math.inf), kind="stretched",
                     params={"rate": rate, "beta": beta})


def superexp_chi(g: Generator) -> Generator:
    """``chi(t) = exp(W0(gamma(t))) - 1`` where ``gamma`` is the inverse of ``g``."""

    def fwd(t):
        return math.expm1(lambert_w0(g.inv(t)))

    def inv(s):
        return g.forward((1.0 + s) * math.log1p(s))

    return Generator(fwd, inv, domain=(0.0, math.inf), kind="superexp", params={"g": g.kind, **g.params})


def chi_from_G(G: Generator, alpha: float) -> Generator:
    """``chi(t) = G((1 - alpha) t) / (1 - alpha)``, turning a Z-entropy generator into an MZE one."""
    if alpha == 1:
        raise DomainError("alpha = 1 is excluded")
    c = 1.0 - alpha
    return Generator(lambda t: G.forward(c * t) / c, lambda s: G.inv(c * s) / c,
                     kind=f"chi[{G.kind}]", params={"alpha": alpha, **G.params},
                     normalized=G.normalized)


GENERATORS: dict = {
    "identity": identity,
    "linear": linear,
    "tsallis": tsallis_exp,
    "lambert-exp": lambert_exp,
    "rational": rational,
    "rapid": rapid_log,
    "stretched": stretched,
}


def make_generator(name: str, **params) -> Generator:
    """Build a catalog generator by name, e.g. ``make_generator("tsallis", sigma=0.5)``."""
    try:
        factory = GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown generator {name!r}; valid names: {', '.join(sorted(GENERATORS))}") from None
    try:
        return factory(**params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for generator {name!r}: {exc}") from None


# ---------------------------------------------------------------------------
# group logarithm and numeric inversion
# ---------------------------------------------------------------------------


def group_log(chi: Generator, x: float) -> float:
    """``chi(ln x)``, a deformation of the natural logarithm."""
    if not x > 0:
        raise DomainError(f"group_log requires x > 0, got {x!r}")
    return chi.forward(math.log(x))


def invert_numeric(g: Generator, y: float, max_doublings: int = 1100) -> float:
    """Solve ``g(x) = y`` for strictly increasing ``g``.

    A bracket is grown by doubling outward from 0 (or the nearest domain
    end), halving towards a finite domain end instead of crossing it, and is
    then refined with Brent's method to full double precision.
    """
    lo_dom, hi_dom = g.domain
    anchor = min(max(0.0, lo_dom), hi_dom)

    def val(x):
        try:
            v = g.forward(x)
        except OverflowError:
            v = math.inf if x > anchor else -math.inf
        if math.isnan(v):
            raise RangeError(f"generator returned NaN at {x!r}")
        return v - y

    fa = val(anchor)
    if fa == 0:
        return anchor
    up = fa < 0
    bound = hi_dom if up else lo_dom
    inner, step = anchor, 1.0
    for _ in range(max_doublings):
        outer = anchor + step if up else anchor - step
        if math.isfinite(bound) and (outer >= bound if up else outer <= bound):
            outer = 0.5 * (inner + bound)
            if outer == inner:
                break
        fo = val(outer)
        if (fo >= 0) if up else (fo <= 0):
            lo, hi = (inner, outer) if up else (outer, inner)
            if fo == 0:
                return outer
            return brentq(val, lo, hi, xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=500)
        inner = outer
        step *= 2.0
    side = "above" if up else "below"
    raise RangeError(f"could not bracket {y!r}: it appears to lie {side} the range of the generator")

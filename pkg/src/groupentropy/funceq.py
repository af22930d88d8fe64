"""Functional equations generated by a formal ring and their lattice versions.

For a ring pair ``Phi(x, y) = G(G^-1 x + G^-1 y)`` and
``Psi(x, y) = G(G^-1 x * G^-1 y)`` the four master equations

=================  =========================  ==================
kind               equation                   solution
=================  =========================  ==================
additive-phi       f(x + y) = Phi(f(x), f(y))  G(x)
additive-psi       f(x + y) = Psi(f(x), f(y))  G(exp x)
multiplicative-phi f(x y) = Phi(f(x), f(y))    G(ln x), x > 0
multiplicative-psi f(x y) = Psi(f(x), f(y))    G(x)
=================  =========================  ==================

have the closed-form solutions in the last column; only existence is
claimed, not uniqueness.  Restricting ``x`` to the integers gives the
discrete systems DE1 to DE4.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from groupentropy.laws import (
    CompositionLaw,
    conjugate_law,
    conjugate_product,
    multiplicative_law,
    tsallis_product,
)
from groupentropy.special import DomainError, Generator, rational, rational_multiplicative, tsallis_exp

DEFAULT_GRID = tuple(np.linspace(0.1, 3.0, 20).tolist())


class EquationKind(str, enum.Enum):
    ADDITIVE_PHI = "additive-phi"
    ADDITIVE_PSI = "additive-psi"
    MULTIPLICATIVE_PHI = "multiplicative-phi"
    MULTIPLICATIVE_PSI = "multiplicative-psi"

    @property
    def multiplicative(self) -> bool:
        return self in (EquationKind.MULTIPLICATIVE_PHI, EquationKind.MULTIPLICATIVE_PSI)

    @property
    def uses_psi(self) -> bool:
        return self in (EquationKind.ADDITIVE_PSI, EquationKind.MULTIPLICATIVE_PSI)

    @classmethod
    def parse(cls, name) -> "EquationKind":
        if isinstance(name, EquationKind):
            return name
        try:
            return cls(name)
        except ValueError:
            valid = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown equation kind {name!r}; valid kinds: {valid}") from None


@dataclass(frozen=True)
class FunctionalEquation:
    """``f(x op y) = law(f(x), f(y))`` with ``op`` addition or multiplication."""

    kind: EquationKind
    law: CompositionLaw
    generator: Generator | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", EquationKind.parse(self.kind))

    @classmethod
    def from_generator(cls, kind, G: Generator, law: CompositionLaw | None = None) -> "FunctionalEquation":
        kind = EquationKind.parse(kind)
        if law is None:
            law = conjugate_product(G) if kind.uses_psi else conjugate_law(G)
        return cls(kind, law, G)

    def residual(self, f, x: float, y: float) -> float:
        arg = x * y if self.kind.multiplicative else x + y
        lhs = f(arg)
        rhs = self.law(f(x), f(y))
        return abs(lhs - rhs) / max(1.0, abs(lhs))


def lemma_solution(kind, G: Generator) -> Generator:
    """The closed-form solution ``f`` of the master equation ``kind`` built on ``G``."""
    kind = EquationKind.parse(kind)
    if kind in (EquationKind.ADDITIVE_PHI, EquationKind.MULTIPLICATIVE_PSI):
        return G
    if kind is EquationKind.ADDITIVE_PSI:
        return Generator(lambda x: G(math.exp(x)), lambda s: math.log(G.inv(s)),
                         kind=f"{G.kind}oexp", params=dict(G.params))

    def fwd(x):
        if not x > 0:
            raise DomainError("the multiplicative equation is posed for x > 0")
        return G(math.log(x))

    return Generator(fwd, lambda s: math.exp(G.inv(s)), domain=(0.0, math.inf),
                     kind=f"{G.kind}olog", params=dict(G.params))


@dataclass(frozen=True)
class GridResidual:
    """Largest scaled residual ``|lhs - rhs| / max(1, |lhs|)`` and where it occurred."""

    max_residual: float
    x: float
    y: float

    def passed(self, tol: float = 1e-10) -> bool:
        return self.max_residual <= tol

    def to_dict(self) -> dict:
        return {"max_residual": self.max_residual, "x": self.x, "y": self.y}


def verify_on_grid(eq: FunctionalEquation, f, grid: Sequence[float] | None = None) -> GridResidual:
    """Evaluate the equation at every pair of grid points."""
    pts = [float(v) for v in (DEFAULT_GRID if grid is None else grid)]
    if eq.kind.multiplicative and min(pts) <= 0:
        raise DomainError("multiplicative equations need positive grid points")
    worst = GridResidual(-1.0, math.nan, math.nan)
    for x in pts:
        for y in pts:
            r = eq.residual(f, x, y)
            if not r <= worst.max_residual:
                worst = GridResidual(r, x, y)
    return worst


def rational_solution(a: float, b: float, r: float = 1.0, multiplicative: bool = False) -> Generator:
    """Solution of ``f(x + y) = (f(x) + f(y) + a f f) / (1 + b f f)``.

    ``f(x) = 2 (e^{rx} - 1) / (-a (e^{rx} - 1) + sqrt(a^2 + 4b) (e^{rx} + 1))``;
    with ``multiplicative=True``, ``e^{rx}`` becomes ``x^r`` and the
    equation reads ``f(x y) = ...`` for ``x > 0``.
    """
    if a * a + 4 * b < 0:
        raise DomainError(f"requires a^2 + 4b >= 0, got {a * a + 4 * b}")
    return rational_multiplicative(a, b, r) if multiplicative else rational(a, b, r)


# ---------------------------------------------------------------------------
# discrete systems
# ---------------------------------------------------------------------------

_DE_EQUATION = {
    "DE1": EquationKind.ADDITIVE_PHI,
    "DE2": EquationKind.ADDITIVE_PSI,
    "DE3": EquationKind.MULTIPLICATIVE_PHI,
    "DE4": EquationKind.MULTIPLICATIVE_PSI,
}


def _de_name(kind) -> str:
    name = f"DE{kind}" if isinstance(kind, int) else str(kind).upper()
    if name not in _DE_EQUATION:
        raise ValueError(f"unknown discrete system {kind!r}; valid: DE1, DE2, DE3, DE4")
    return name


@dataclass(frozen=True)
class DiscreteSystem:
    """``z_{n op m} = law(z_n, z_m)`` on the integer lattice.

    Terms come from ``solution`` when given (an int or ``Fraction`` valued
    map makes the sequence exact), otherwise from the continuous solution of
    the matching master equation applied to ``generator``.
    """

    kind: str
    law: CompositionLaw
    generator: Generator | None = None
    params: dict = field(default_factory=dict)
    solution: object = None

    def __post_init__(self):
        object.__setattr__(self, "kind", _de_name(self.kind))

    @property
    def multiplicative(self) -> bool:
        return self.kind in ("DE3", "DE4")

    @property
    def equation(self) -> EquationKind:
        return _DE_EQUATION[self.kind]

    @classmethod
    def from_generator(cls, kind, G: Generator) -> "DiscreteSystem":
        name = _de_name(kind)
        eq = FunctionalEquation.from_generator(_DE_EQUATION[name], G)
        return cls(name, eq.law, G, dict(G.params))

    @classmethod
    def tsallis(cls, kind, p, rescaled: bool = False) -> "DiscreteSystem":
        """Systems of the Tsallis ring with ``sigma = p``.

        DE1 is solved by ``z_n = (e^{pn} - 1) / p`` and DE3 by
        ``w_n = (n^p - 1) / p``.  ``rescaled`` multiplies by ``p``, e.g.
        ``q_n = n^p - 1`` with ``q_{nm} = q_n + q_m + q_n q_m``.  For integer
        ``p`` the DE3 terms are exact integers or fractions, and the closed
        form also covers ``n <= 0``.
        """
        name = _de_name(kind)
        if p == 0:
            raise DomainError("p = 0 divides by zero; use the additive (Cauchy) system instead")
        integral = float(p).is_integer()
        pe = int(p) if integral else float(p)
        pf = float(p)
        G = tsallis_exp(pf)
        params = {"p": pe, "rescaled": rescaled}
        if name in ("DE2", "DE4"):
            if rescaled:
                raise ValueError("rescaling applies to the Phi systems DE1 and DE3 only")
            return cls(name, tsallis_product(pf), G, params)
        scale = pe if rescaled else 1
        law = multiplicative_law(1 if rescaled else pe, origin="tsallis-q" if rescaled else "tsallis")
        if name == "DE1":
            def solution(n):
                return math.expm1(pf * n) / pf * scale
        elif integral:
            def solution(n):
                v = Fraction(n**pe - 1, pe) * scale
                return v.numerator if v.denominator == 1 and rescaled else v
        else:
            def solution(n):
                if n <= 0:
                    raise DomainError("n^p needs n > 0 for non-integer p")
                return (float(n) ** pf - 1.0) / pf * scale
        return cls(name, law, G, params, solution)

    def term(self, n: int):
        if self.solution is not None:
            return self.solution(n)
        if self.generator is None:
            raise ValueError("system has neither a closed-form solution nor a generator")
        return lemma_solution(self.equation, self.generator)(float(n))


def parse_range(spec: str) -> range:
    """``"a..b"`` (inclusive) to a range."""
    try:
        lo, hi = spec.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise ValueError(f"range must look like a..b, got {spec!r}") from None
    if hi < lo:
        raise ValueError(f"empty range {spec!r}")
    return range(lo, hi + 1)


def gen_sequence(sys: DiscreteSystem, n_range: Iterable[int]) -> dict:
    """Terms ``z_n`` for ``n`` in ``n_range``, keyed by ``n``."""
    return {int(n): sys.term(int(n)) for n in n_range}


@dataclass(frozen=True)
class RecurrenceReport:
    passed: bool
    checked: int
    max_residual: float
    first_failure: tuple | None = None  # (n, m, lhs, rhs)

    def to_dict(self) -> dict:
        d = {"passed": self.passed, "checked": self.checked, "max_residual": self.max_residual}
        if self.first_failure is not None:
            n, m, lhs, rhs = self.first_failure
            d["first_failure"] = {"n": n, "m": m, "lhs": str(lhs), "rhs": str(rhs)}
        return d


def _is_exact(v) -> bool:
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


def check_recurrence(seq: Mapping[int, object], sys: DiscreteSystem,
                     pairs: Iterable[tuple] | None = None, tol: float = 1e-10) -> RecurrenceReport:
    """Check ``z_{n op m} = law(z_n, z_m)`` on ``pairs`` (default: every pair whose target is stored).

    Exact terms are compared for equality; floats by scaled residual.
    """
    op = (lambda n, m: n * m) if sys.multiplicative else (lambda n, m: n + m)
    if pairs is None:
        keys = sorted(seq)
        pairs = [(n, m) for n in keys for m in keys if op(n, m) in seq]
        strict = False
    else:
        strict = True
    checked, worst, failure = 0, 0.0, None
    for n, m in pairs:
        t = op(n, m)
        missing = [k for k in (n, m, t) if k not in seq]
        if missing:
            if strict:
                raise IndexError(f"index {missing[0]} is outside the stored range")
            continue
        lhs = seq[t]
        rhs = sys.law(seq[n], seq[m])
        checked += 1
        if _is_exact(lhs) and _is_exact(rhs):
            ok = lhs == rhs
            res = 0.0 if ok else math.inf
        else:
            res = abs(float(lhs) - float(rhs)) / max(1.0, abs(float(lhs)))
            ok = res <= tol
        worst = max(worst, res)
        if not ok and failure is None:
            failure = (n, m, lhs, rhs)
    return RecurrenceReport(failure is None, checked, worst, failure)

"""Composition laws of the catalog entropies and the checks built on them.

* :func:`law_for` pairs every catalog entropy with its closed-form law.
* :func:`check_composability` measures ``|S(A x B) - Phi(S(A), S(B))|`` on
  random independent pairs.
* :class:`GrowthFunction` describes how the number of states grows with the
  system size ``N``, always through ``ln W(N)``, since ``W(N)`` itself
  overflows a double long before ``N = 100`` in the super-exponential
  classes.
* :func:`law_from_growth` and :func:`extensivity_scan` turn a growth
  function into a composition law and test ``S(N)/N -> c``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from groupentropy.entropy import (
    Distribution,
    EntropyFunctional,
    Kind,
    catalog_eval,
    product,
    uniform_eval,
)
from groupentropy.special import (
    DomainError,
    Generator,
    chi_from_G,
    lambert_w0,
    linear,
)


@dataclass(frozen=True)
class CompositionLaw:
    """A closed-form bivariate map ``Phi(x, y)`` with a tag for the entropy it composes."""

    fn: Callable[[float, float], float]
    name: str
    params: dict = field(default_factory=dict)
    origin: str = ""

    def __call__(self, x, y):
        return self.fn(x, y)


# -- closed forms ---------------------------------------------------------------


def additive_law(origin: str = "") -> CompositionLaw:
    return CompositionLaw(lambda x, y: x + y, "additive", {}, origin)


def multiplicative_law(sigma: float, origin: str = "") -> CompositionLaw:
    """``x + y + sigma x y``."""
    return CompositionLaw(lambda x, y: x + y + sigma * x * y, "multiplicative", {"sigma": sigma}, origin)


def ordinary_product() -> CompositionLaw:
    return CompositionLaw(lambda x, y: x * y, "product")


def tsallis_product(sigma: float) -> CompositionLaw:
    """``(exp(ln(1 + sigma x) ln(1 + sigma y) / sigma) - 1) / sigma``."""
    if sigma == 0:
        return ordinary_product()

    def fn(x, y):
        return math.expm1(math.log1p(sigma * x) * math.log1p(sigma * y) / sigma) / sigma

    return CompositionLaw(fn, "tsallis-product", {"sigma": sigma})


def rational_law(a: float, b: float) -> CompositionLaw:
    """``(x + y + a x y) / (1 + b x y)``."""
    return CompositionLaw(lambda x, y: (x + y + a * x * y) / (1.0 + b * x * y), "rational", {"a": a, "b": b})


def conjugate_law(chi: Generator, origin: str = "") -> CompositionLaw:
    """``chi(chi^-1(x) + chi^-1(y))``."""
    return CompositionLaw(lambda x, y: chi(chi.inv(x) + chi.inv(y)), "conjugate-sum",
                          {"generator": chi.kind, **chi.params}, origin)


def conjugate_product(G: Generator) -> CompositionLaw:
    """``G(G^-1(x) G^-1(y))``."""
    return CompositionLaw(lambda x, y: G(G.inv(x) * G.inv(y)), "conjugate-product",
                          {"generator": G.kind, **G.params})


def stretched_law(beta: float, origin: str = "") -> CompositionLaw:
    """``(x^beta + y^beta)^(1/beta)``."""
    return CompositionLaw(lambda x, y: (x**beta + y**beta) ** (1.0 / beta), "stretched", {"beta": beta}, origin)


def rapid_growth_law(k1: float, origin: str = "") -> CompositionLaw:
    """``k1 ln(e^{x/k1} + e^{y/k1} - 1)``."""
    return CompositionLaw(lambda x, y: k1 * math.log1p(math.expm1(x / k1) + math.expm1(y / k1)),
                          "rapid-growth", {"k1": k1}, origin)


def superexp_law(g: Generator, origin: str = "") -> CompositionLaw:
    """``exp(W0(phi((x+1) ln(x+1), (y+1) ln(y+1)))) - 1`` with ``phi(u, v) = g^-1(g(u) + g(v))``."""

    def fn(x, y):
        u = (1.0 + x) * math.log1p(x)
        v = (1.0 + y) * math.log1p(y)
        return math.expm1(lambert_w0(g.inv(g(u) + g(v))))

    return CompositionLaw(fn, "superexp", {"g": g.kind, **g.params}, origin)


def law_for(S: EntropyFunctional) -> CompositionLaw:
    """The composition law satisfied by the catalog entropy ``S``."""
    k = S.kind
    origin = k.value
    if k in (Kind.SHANNON, Kind.RENYI, Kind.LINEAR_RENYI):
        return additive_law(origin)
    if k is Kind.TSALLIS:
        return multiplicative_law(1.0 - S.alphas[0], origin)
    if k is Kind.Z:
        return conjugate_law(chi_from_G(S.generator, S.alphas[0]), origin)
    if k is Kind.MZE:
        return conjugate_law(S.generator, origin)
    if k is Kind.STRETCHED:
        return stretched_law(S.params["beta"], origin)
    if k is Kind.RAPID_GROWTH:
        return rapid_growth_law(S.params["k1"], origin)
    if k in (Kind.SUPEREXP, Kind.SUPEREXP_MULTI):
        return superexp_law(S.generator, origin)
    raise ValueError(f"no composition law known for kind {k!r}")


# -- sampled axiom checks ---------------------------------------------------------


def _scaled(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


@dataclass(frozen=True)
class LawAxiomReport:
    """Largest scaled residual ``|lhs - rhs| / max(1, |lhs|, |rhs|)`` per axiom."""

    symmetry: float
    associativity: float
    null_composability: float
    samples: int

    def passed(self, tol: float = 1e-10) -> bool:
        return max(self.symmetry, self.associativity, self.null_composability) <= tol

    def to_dict(self) -> dict:
        return {
            "symmetry": self.symmetry,
            "associativity": self.associativity,
            "null_composability": self.null_composability,
            "samples": self.samples,
        }


def sample_entropy_values(S: EntropyFunctional, rng: np.random.Generator, n: int,
                          max_logW: float = 3.0) -> np.ndarray:
    """Points of the range of ``S``: values on uniform states with ``ln W`` drawn from ``[0, max_logW]``."""
    return np.array([uniform_eval(S, float(t)) for t in rng.uniform(0.0, max_logW, n)])


def check_law_axioms(law: CompositionLaw, points: Sequence[float]) -> LawAxiomReport:
    """Symmetry, associativity and null-composability of ``law`` on consecutive triples of ``points``."""
    pts = [float(v) for v in points]
    if len(pts) < 3:
        raise ValueError("need at least three sample points")
    sym = assoc = null = 0.0
    for i in range(len(pts) - 2):
        x, y, z = pts[i], pts[i + 1], pts[i + 2]
        sym = max(sym, _scaled(law(x, y), law(y, x)))
        assoc = max(assoc, _scaled(law(x, law(y, z)), law(law(x, y), z)))
        null = max(null, _scaled(law(x, 0.0), x), _scaled(law(0.0, x), x))
    return LawAxiomReport(sym, assoc, null, len(pts) - 2)


# -- composability ----------------------------------------------------------------


@dataclass(frozen=True)
class ComposabilityReport:
    kind: str
    max_residual: float
    trials: int
    seed: int
    worst: tuple | None = None  # (A, B) achieving the maximum

    def passed(self, tol: float = 1e-10) -> bool:
        return self.max_residual <= tol

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "max_residual": self.max_residual, "trials": self.trials, "seed": self.seed}
        if self.worst is not None:
            d["worst_pair"] = [self.worst[0].probs.tolist(), self.worst[1].probs.tolist()]
        return d


def random_pair(seed: int, trial: int, sizes: tuple = (2, 6)) -> tuple:
    """Independent random distributions for one trial; reproducible from ``(seed, trial)``."""
    rng = np.random.default_rng([seed, trial])
    lo, hi = sizes
    WA, WB = (int(w) for w in rng.integers(lo, hi + 1, size=2))
    A = Distribution.random(WA, rng, float(rng.choice([0.3, 1.0, 3.0])))
    B = Distribution.random(WB, rng, float(rng.choice([0.3, 1.0, 3.0])))
    return A, B


def check_composability(S: EntropyFunctional, trials: int = 1000, sizes: tuple = (2, 6),
                        seed: int = 0, law: CompositionLaw | None = None) -> ComposabilityReport:
    """Largest ``|S(A x B) - Phi(S(A), S(B))|`` over random independent ``A``, ``B``."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    law = law or law_for(S)
    worst, worst_pair = -1.0, None
    for t in range(trials):
        A, B = random_pair(seed, t, sizes)
        res = abs(catalog_eval(S, product(A, B)) - law(catalog_eval(S, A), catalog_eval(S, B)))
        if not res <= worst:  # NaN counts as worst
            worst, worst_pair = res, (A, B)
            if math.isnan(res):
                break
    return ComposabilityReport(S.kind.value, worst, trials, seed, worst_pair)


# -- growth functions -------------------------------------------------------------


@dataclass(frozen=True)
class GrowthFunction:
    """State-space growth ``N -> W(N)``, held as ``N -> ln W(N)`` and its inverse."""

    kind: str
    log_w: Callable[[float], float]
    inverse: Callable[[float], float]  # ln W -> N
    params: dict = field(default_factory=dict)
    inv_slope: float | None = None  # (W^-1)'(1) when known in closed form

    def W_inv_at_one(self) -> float:
        return self.inverse(0.0)

    def W_inv_slope(self, h: float = 1e-6) -> float:
        """``(W^-1)'(1)``, which equals the derivative of ``ln W -> N`` at ``ln W = 0``."""
        if self.inv_slope is not None:
            return self.inv_slope
        try:
            return (self.inverse(h) - self.inverse(-h)) / (2 * h)
        except (ValueError, ZeroDivisionError):
            return (self.inverse(h) - self.inverse(0.0)) / h

    def natural_lambda(self) -> float:
        slope = self.W_inv_slope()
        if not math.isfinite(slope) or abs(slope) < 1e-14:
            raise DomainError(f"(W^-1)'(1) = {slope!r}; the growth function admits no natural lambda")
        return 1.0 / slope

    def entropy_chi(self, lam: float | None = None) -> Generator:
        """``chi(t) = lam (W^-1(e^t) - W^-1(1))``, the MZE generator extensive for this growth."""
        lam = self.natural_lambda() if lam is None else lam
        n0 = self.W_inv_at_one()
        return Generator(lambda t: lam * (self.inverse(t) - n0), lambda s: self.log_w(s / lam + n0),
                         kind=f"growth:{self.kind}", params={"lambda": lam, **self.params})


def exponential_growth() -> GrowthFunction:
    """``W(N) = e^N``."""
    return GrowthFunction("exponential", lambda N: float(N), lambda L: float(L), inv_slope=1.0)


def power_growth(a: float) -> GrowthFunction:
    """``W(N) = N^a``."""
    if a <= 0:
        raise DomainError("exponent must be positive")
    return GrowthFunction("power", lambda N: a * math.log(N), lambda L: math.exp(L / a), {"a": a},
                          inv_slope=1.0 / a)


def stretched_growth(rate: float, beta: float) -> GrowthFunction:
    """``W(N) = exp(rate N^beta)``."""
    if rate <= 0 or beta <= 0:
        raise DomainError("rate and beta must be positive")

    def inv(L):
        if L < 0:
            raise DomainError("ln W must be non-negative")
        return (L / rate) ** (1.0 / beta)

    # d/dL (L/rate)^(1/beta) at L = 0
    slope = 1.0 / rate if beta == 1 else (0.0 if beta < 1 else math.inf)
    return GrowthFunction("stretched", lambda N: rate * N**beta, inv, {"rate": rate, "beta": beta},
                          inv_slope=slope)


def double_exponential_growth(k1: float, k2: float, k3: float) -> GrowthFunction:
    """``W(N) = exp(k2 e^{k3 N} - k1)``."""
    if min(k1, k2, k3) <= 0:
        raise DomainError("k1, k2, k3 must be positive")
    return GrowthFunction(
        "double-exponential",
        lambda N: k2 * math.exp(k3 * N) - k1,
        lambda L: math.log((L + k1) / k2) / k3,
        {"k1": k1, "k2": k2, "k3": k3},
        inv_slope=1.0 / (k1 * k3),
    )


def super_exponential_growth(g: Generator | None = None, nu: float | None = None) -> GrowthFunction:
    """``W(N) = exp(g(N ln N))``; ``nu`` selects ``g(x) = nu x``, i.e. ``W(N) = N^(nu N)``."""
    if g is None:
        g = linear(1.0 if nu is None else nu)
    elif nu is not None:
        raise ValueError("give either g or nu, not both")

    def inv(L):
        # N ln N = gamma(L)  <=>  ln N = W0(gamma(L))
        return math.exp(lambert_w0(g.inv(L)))

    slope = 1.0 / g.params["nu"] if g.kind == "linear" else None
    return GrowthFunction("super-exponential", lambda N: g(N * math.log(N)), inv,
                          {"g": g.kind, **g.params}, inv_slope=slope)


GROWTH_FUNCTIONS = {
    "exponential": exponential_growth,
    "power": power_growth,
    "stretched": stretched_growth,
    "double-exponential": double_exponential_growth,
    "super-exponential": super_exponential_growth,
}


def make_growth(name: str, **params) -> GrowthFunction:
    try:
        factory = GROWTH_FUNCTIONS[name]
    except KeyError:
        raise ValueError(f"unknown growth function {name!r}; valid names: {', '.join(GROWTH_FUNCTIONS)}") from None
    try:
        return factory(**params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for growth function {name!r}: {exc}") from None


def law_from_growth(W: GrowthFunction, x: float, y: float, lam: float | None = None) -> float:
    """``lam (W^-1[W(x/lam + W^-1(1)) W(y/lam + W^-1(1))] - W^-1(1))``.

    The product of state counts is a sum of logarithms, so nothing is ever
    exponentiated.  ``lam`` defaults to ``1 / (W^-1)'(1)``.
    """
    lam = W.natural_lambda() if lam is None else lam
    if lam == 0:
        raise DomainError("lambda must be nonzero")
    n0 = W.W_inv_at_one()
    return lam * (W.inverse(W.log_w(x / lam + n0) + W.log_w(y / lam + n0)) - n0)


def growth_law(W: GrowthFunction, lam: float | None = None) -> CompositionLaw:
    lam = W.natural_lambda() if lam is None else lam
    return CompositionLaw(lambda x, y: law_from_growth(W, x, y, lam), f"growth:{W.kind}",
                          {"lambda": lam, **W.params})


# -- extensivity ------------------------------------------------------------------


@dataclass(frozen=True)
class ExtensivityTable:
    """``S(N)/N`` on uniform states over a list of sizes.

    ``c`` extrapolates the limit from the last two rows, assuming
    ``S(N) = c N + a``.  ``slope`` is ``d ln S / d ln N`` there; ``status``
    is ``extensive`` when it is within ``10/N`` of one, otherwise
    ``divergent`` (super-linear) or ``degenerate`` (sub-linear).
    """

    rows: tuple  # (N, S, S/N)
    c: float
    slope: float
    status: str

    def to_dict(self) -> dict:
        return {
            "rows": [{"N": N, "S": S, "S_over_N": r} for N, S, r in self.rows],
            "c": self.c,
            "slope": self.slope,
            "status": self.status,
        }


def extensivity_scan(S: EntropyFunctional, W: GrowthFunction, N_list: Sequence[float],
                     tol_factor: float = 10.0) -> ExtensivityTable:
    Ns = [float(N) for N in N_list]
    if len(Ns) < 2:
        raise ValueError("need at least two sizes")
    if any(b <= a for a, b in zip(Ns, Ns[1:])) or Ns[0] <= 0:
        raise ValueError("sizes must be positive and strictly increasing")
    rows = []
    for N in Ns:
        val = uniform_eval(S, W.log_w(N))
        rows.append((N, val, val / N))
    (N1, S1, _), (N2, S2, _) = rows[-2], rows[-1]
    c = (S2 - S1) / (N2 - N1)
    if S1 > 0 and S2 > 0:
        slope = (math.log(S2) - math.log(S1)) / (math.log(N2) - math.log(N1))
    else:
        slope = 0.0
    if abs(slope - 1.0) <= tol_factor / N2 and c > 0:
        status = "extensive"
    elif slope > 1.0:
        status = "divergent"
    else:
        status = "degenerate"
    return ExtensivityTable(tuple(rows), c, slope, status)

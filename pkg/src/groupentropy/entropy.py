"""Probability distributions and the catalog of group entropies.

Every functional in the catalog is a function of the power sums
``sum_i p_i^alpha``.  On a uniform distribution with ``W`` states those
are ``W^(1 - alpha)``, so each entropy also has a closed form in ``ln W``
alone (:func:`uniform_eval`), which is how states far too large to
enumerate are handled.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from groupentropy.special import (
    DomainError,
    Generator,
    identity,
    lambert_w0,
    linear,
)

SUM_TOL = 1e-12
ZERO_CUTOFF = 1e-300


class InvalidDistribution(ValueError):
    def __init__(self, message: str, measured_sum: float | None = None):
        super().__init__(message)
        self.measured_sum = measured_sum


class Distribution:
    """Finite probability vector; immutable.

    >>> Distribution([0.5, 0.5]).W
    2
    """

    __slots__ = ("probs",)

    def __init__(self, probs: Sequence[float], tol: float = SUM_TOL):
        arr = np.array(probs, dtype=float).ravel() if not isinstance(probs, Distribution) else probs.probs.copy()
        if arr.size == 0:
            raise InvalidDistribution("a distribution needs at least one state")
        if not np.all(np.isfinite(arr)):
            raise InvalidDistribution("probabilities must be finite")
        if np.any(arr < 0) or np.any(arr > 1):
            raise InvalidDistribution("probabilities must lie in [0, 1]")
        total = math.fsum(arr)
        if abs(total - 1.0) > tol:
            raise InvalidDistribution(f"probabilities sum to {total!r}, not 1", total)
        arr.setflags(write=False)
        self.probs = arr

    @classmethod
    def _trusted(cls, arr: np.ndarray) -> "Distribution":
        obj = cls.__new__(cls)
        arr.setflags(write=False)
        obj.probs = arr
        return obj

    @classmethod
    def uniform(cls, W: int) -> "Distribution":
        if W < 1:
            raise ValueError("W must be at least 1")
        return cls._trusted(np.full(W, 1.0 / W))

    @classmethod
    def deterministic(cls, W: int = 1, index: int = 0) -> "Distribution":
        arr = np.zeros(W)
        arr[index] = 1.0
        return cls._trusted(arr)

    @classmethod
    def random(cls, W: int, rng: np.random.Generator, concentration: float = 1.0) -> "Distribution":
        """Dirichlet draw with equal concentration parameters."""
        arr = rng.dirichlet(np.full(W, concentration))
        arr = arr / math.fsum(arr)
        return cls._trusted(arr)

    @property
    def W(self) -> int:
        return int(self.probs.size)

    def __len__(self) -> int:
        return self.W

    def __iter__(self):
        return iter(self.probs.tolist())

    def __eq__(self, other) -> bool:
        if isinstance(other, Distribution):
            return np.array_equal(self.probs, other.probs)
        return NotImplemented

    def __hash__(self):
        return hash(self.probs.tobytes())

    def __repr__(self) -> str:
        return f"Distribution({self.probs.tolist()!r})"

    def to_json(self) -> str:
        return "[" + ",".join("%.17g" % v for v in self.probs) + "]"

    @classmethod
    def from_json(cls, text: str, tol: float = SUM_TOL) -> "Distribution":
        data = json.loads(text)
        if not isinstance(data, list):
            raise InvalidDistribution("expected a JSON array of probabilities")
        return cls(data, tol)


def product(A: Distribution, B: Distribution) -> Distribution:
    """Joint distribution ``p_ij = p_i q_j`` of two independent systems."""
    return Distribution._trusted(np.outer(A.probs, B.probs).ravel())


def expand_zero(p: Distribution) -> Distribution:
    """Append an event of probability zero."""
    return Distribution._trusted(np.append(p.probs, 0.0))


def power_sum(p: Distribution, alpha: float) -> float:
    """``sum_i p_i^alpha`` with ``0^alpha = 0``, summed without rounding drift."""
    nz = p.probs[p.probs > ZERO_CUTOFF]
    return math.fsum(np.power(nz, alpha))


def _check_alpha(alpha: float):
    if not alpha > 0:
        raise DomainError(f"entropic parameter must be positive, got {alpha!r}")
    if alpha == 1:
        raise DomainError("alpha = 1 is excluded; use the Shannon entropy")


def shannon(p: Distribution) -> float:
    nz = p.probs[p.probs > ZERO_CUTOFF]
    return -math.fsum(nz * np.log(nz))


def renyi(p: Distribution, alpha: float) -> float:
    """``ln(sum p_i^alpha) / (1 - alpha)``."""
    _check_alpha(alpha)
    return math.log(power_sum(p, alpha)) / (1.0 - alpha)


def tsallis(p: Distribution, q: float) -> float:
    """``(1 - sum p_i^q) / (q - 1)``."""
    _check_alpha(q)
    return (1.0 - power_sum(p, q)) / (q - 1.0)


def mze(p: Distribution, chi: Generator, alphas: Sequence[float]) -> float:
    """Multivariate Z-entropy: ``chi`` applied to the sum of the Renyi entropies.

    ``ln_chi`` of the product of the factors ``(sum p^a_k)^(1/(1-a_k))`` is
    ``chi`` of the sum of their logarithms, which never overflows.
    """
    if not alphas:
        raise ValueError("at least one entropic parameter is required")
    return chi(math.fsum(renyi(p, a) for a in alphas))


def z_univariate(p: Distribution, G: Generator, alpha: float) -> float:
    """Univariate Z-entropy ``G(ln sum p_i^alpha) / (1 - alpha)``."""
    _check_alpha(alpha)
    return G(math.log(power_sum(p, alpha))) / (1.0 - alpha)


class Kind(str, enum.Enum):
    SHANNON = "shannon"
    RENYI = "renyi"
    TSALLIS = "tsallis"
    Z = "z"
    MZE = "mze"
    LINEAR_RENYI = "linear-renyi"
    STRETCHED = "stretched"
    RAPID_GROWTH = "rapid-growth"
    SUPEREXP = "superexp"
    SUPEREXP_MULTI = "superexp-multi"

    @classmethod
    def parse(cls, name) -> "Kind":
        if isinstance(name, Kind):
            return name
        try:
            return cls(name)
        except ValueError:
            valid = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown entropy kind {name!r}; valid kinds: {valid}") from None


_SINGLE_ALPHA = {Kind.RENYI, Kind.TSALLIS, Kind.Z, Kind.SUPEREXP}
_NEEDS_GENERATOR = {Kind.Z, Kind.MZE}


@dataclass(frozen=True)
class EntropyFunctional:
    """A catalog entry: kind, entropic parameters, kind-specific parameters, generator.

    Parameters by kind: ``linear-renyi`` takes ``lambdas`` (one weight per
    alpha); ``stretched`` takes ``rate`` and ``beta``; ``rapid-growth`` takes
    ``k1``; the super-exponential kinds take the interpolation function
    ``g`` as ``generator`` (identity when omitted).
    """

    kind: Kind
    alphas: tuple = ()
    params: dict = field(default_factory=dict)
    generator: Generator | None = None

    def __post_init__(self):
        kind = Kind.parse(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        if kind is Kind.SHANNON:
            if self.alphas:
                raise ValueError("the Shannon entropy takes no entropic parameter")
        else:
            if not self.alphas:
                raise ValueError(f"{kind.value} needs at least one entropic parameter")
            for a in self.alphas:
                _check_alpha(a)
            if kind in _SINGLE_ALPHA and len(self.alphas) != 1:
                raise ValueError(f"{kind.value} takes exactly one entropic parameter")
        if kind in _NEEDS_GENERATOR and self.generator is None:
            raise ValueError(f"{kind.value} needs a generator")
        pr = self.params
        if kind is Kind.LINEAR_RENYI:
            lam = tuple(pr.get("lambdas", (1.0,) * len(self.alphas)))
            if len(lam) != len(self.alphas):
                raise ValueError("linear-renyi needs one weight per entropic parameter")
            if any(not v > 0 for v in lam):
                raise DomainError("linear-renyi weights must be positive")
        if kind is Kind.STRETCHED:
            for key in ("rate", "beta"):
                if not pr.get(key, 0) > 0:
                    raise DomainError(f"stretched entropy needs {key} > 0")
        if kind is Kind.RAPID_GROWTH and not pr.get("k1", 0) > 0:
            raise DomainError("rapid-growth entropy needs k1 > 0")

    # -- convenience constructors -------------------------------------------------

    @classmethod
    def shannon(cls):
        return cls(Kind.SHANNON)

    @classmethod
    def renyi(cls, alpha: float):
        return cls(Kind.RENYI, (alpha,))

    @classmethod
    def tsallis(cls, q: float):
        return cls(Kind.TSALLIS, (q,))

    @classmethod
    def z(cls, G: Generator, alpha: float):
        return cls(Kind.Z, (alpha,), generator=G)

    @classmethod
    def mze(cls, chi: Generator, alphas: Sequence[float]):
        return cls(Kind.MZE, tuple(alphas), generator=chi)

    @classmethod
    def linear_renyi(cls, alphas: Sequence[float], lambdas: Sequence[float]):
        return cls(Kind.LINEAR_RENYI, tuple(alphas), {"lambdas": tuple(lambdas)})

    @classmethod
    def stretched(cls, rate: float, beta: float, alphas: Sequence[float]):
        return cls(Kind.STRETCHED, tuple(alphas), {"rate": rate, "beta": beta})

    @classmethod
    def rapid_growth(cls, k1: float, alphas: Sequence[float]):
        return cls(Kind.RAPID_GROWTH, tuple(alphas), {"k1": k1})

    @classmethod
    def superexp(cls, alpha: float, g: Generator | None = None, nu: float | None = None):
        return cls(Kind.SUPEREXP, (alpha,), generator=_interp(g, nu))

    @classmethod
    def superexp_multi(cls, alphas: Sequence[float], g: Generator | None = None, nu: float | None = None):
        return cls(Kind.SUPEREXP_MULTI, tuple(alphas), generator=_interp(g, nu))

    @property
    def n(self) -> int:
        return len(self.alphas)

    def __call__(self, p: Distribution) -> float:
        return catalog_eval(self, p)


def _interp(g: Generator | None, nu: float | None) -> Generator:
    if g is not None and nu is not None:
        raise ValueError("give either g or nu, not both")
    if nu is not None:
        return linear(nu)
    return g if g is not None else identity()


def _superexp_value(g: Generator, total: float) -> float:
    return math.expm1(lambert_w0(g.inv(total)))


def _from_renyi_total(S: EntropyFunctional, total: float) -> float:
    """Value of the kinds that depend on ``p`` only through the sum of Renyi entropies."""
    k = S.kind
    if k is Kind.MZE:
        return S.generator(total)
    if k is Kind.STRETCHED:
        return (total / S.params["rate"]) ** (1.0 / S.params["beta"])
    if k is Kind.RAPID_GROWTH:
        k1 = S.params["k1"]
        return k1 * math.log1p(total / k1)
    if k in (Kind.SUPEREXP, Kind.SUPEREXP_MULTI):
        return _superexp_value(S.generator, total)
    raise AssertionError(k)


def catalog_eval(S: EntropyFunctional, p: Distribution) -> float:
    """Evaluate the catalog entropy ``S`` on the distribution ``p``."""
    k = S.kind
    if k is Kind.SHANNON:
        return shannon(p)
    if k is Kind.RENYI:
        return renyi(p, S.alphas[0])
    if k is Kind.TSALLIS:
        return tsallis(p, S.alphas[0])
    if k is Kind.Z:
        return z_univariate(p, S.generator, S.alphas[0])
    if k is Kind.LINEAR_RENYI:
        lam = S.params.get("lambdas", (1.0,) * S.n)
        return math.fsum(w * renyi(p, a) for w, a in zip(lam, S.alphas))
    total = math.fsum(renyi(p, a) for a in S.alphas)
    return _from_renyi_total(S, total)


def uniform_eval(S: EntropyFunctional, logW: float) -> float:
    """Value of ``S`` on the uniform distribution over ``W = exp(logW)`` states.

    Uses ``sum p^alpha = W^(1 - alpha)``, so every Renyi entropy equals
    ``logW``.
    """
    if logW < 0:
        raise DomainError(f"logW must be non-negative, got {logW!r}")
    logW = float(logW)
    k = S.kind
    if k in (Kind.SHANNON, Kind.RENYI):
        return logW
    if k is Kind.TSALLIS:
        c = 1.0 - S.alphas[0]
        return math.expm1(c * logW) / c
    if k is Kind.Z:
        c = 1.0 - S.alphas[0]
        return S.generator(c * logW) / c
    if k is Kind.LINEAR_RENYI:
        lam = S.params.get("lambdas", (1.0,) * S.n)
        return math.fsum(lam) * logW
    return _from_renyi_total(S, S.n * logW)


ENTROPY_KINDS = tuple(k.value for k in Kind)

"""Schur-concave entropy functionals evaluated on spectra.

All logarithms are natural.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import spectrum as sp
from .spectrum import Finite, Geometric, MajorboundError, Spectrum


class InvalidAlpha(MajorboundError):
    pass


class NegativeInput(MajorboundError):
    pass


@dataclass(frozen=True)
class VonNeumann:
    def __str__(self):
        return "vn"


@dataclass(frozen=True)
class Renyi:
    alpha: float

    def __post_init__(self):
        _check_alpha(self.alpha)

    def __str__(self):
        return f"renyi:{self.alpha:g}"


@dataclass(frozen=True)
class Tsallis:
    alpha: float

    def __post_init__(self):
        _check_alpha(self.alpha)

    def __str__(self):
        return f"tsallis:{self.alpha:g}"


EntropyFunctional = Union[VonNeumann, Renyi, Tsallis]


def _check_alpha(alpha: float) -> None:
    if not alpha > 0 or abs(alpha - 1) <= sp.TOL or not math.isfinite(alpha):
        raise InvalidAlpha(f"alpha must be positive, finite and != 1, got {alpha}")


def parse_functional(text: str) -> EntropyFunctional:
    """Parse ``vn``, ``renyi:<alpha>`` or ``tsallis:<alpha>``."""
    name, _, arg = text.strip().lower().partition(":")
    if name in ("vn", "vonneumann", "von-neumann") and not arg:
        return VonNeumann()
    if name in ("renyi", "tsallis") and arg:
        try:
            alpha = float(arg)
        except ValueError:
            raise InvalidAlpha(f"bad alpha {arg!r}") from None
        return Renyi(alpha) if name == "renyi" else Tsallis(alpha)
    raise MajorboundError(f"unknown functional {text!r}; use vn, renyi:<a> or tsallis:<a>")


@dataclass(frozen=True, eq=False)
class SubnormalizedSpectrum:
    """Non-negative weights of total mass at most one (a tail ``rho^[m]``)."""

    w: np.ndarray

    def __post_init__(self):
        w = np.array(self.w, dtype=float).ravel()
        if np.any(w < -sp.TOL):
            raise NegativeInput("weights must be non-negative")
        w = np.where(w < 0, 0.0, w)
        w.flags.writeable = False
        object.__setattr__(self, "w", w)
        if self.trace > 1 + sp.TOL:
            raise MajorboundError(f"total weight {self.trace:.12g} exceeds 1")

    @property
    def trace(self) -> float:
        return float(self.w.sum())


@dataclass(frozen=True)
class GeometricTail:
    """The tail ``rho^[m]`` of ``Geometric(q)``: weights ``scale (1-q) q^(i-1)``, ``scale = q^m``."""

    q: float
    scale: float

    @property
    def trace(self) -> float:
        return self.scale


def eta(x):
    """``-x ln x`` with ``eta(0) = 0``; works elementwise on arrays."""
    if np.ndim(x) == 0:
        x = float(x)
        if x < -sp.TOL:
            raise NegativeInput(f"eta is undefined at {x}")
        return -x * math.log(x) if x > 0 else 0.0
    x = np.asarray(x, dtype=float)
    if np.any(x < -sp.TOL):
        raise NegativeInput("eta is undefined for negative input")
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = -x[pos] * np.log(x[pos])
    return out


def binary_entropy(q: float) -> float:
    """Natural-log binary entropy ``eta(q) + eta(1-q)``."""
    if not 0 < q < 1:
        raise MajorboundError(f"binary entropy needs 0 < q < 1, got {q}")
    return eta(q) + eta(1 - q)


def _power_sum(s: Spectrum, alpha: float) -> float:
    if isinstance(s, Geometric):
        return (1 - s.q) ** alpha / (1 - s.q**alpha)
    p = s.p[s.p > 0]
    return float(np.sum(p**alpha))


def geometric_entropy(q: float) -> float:
    """``S`` of the geometric spectrum, ``h(q)/(1-q)``."""
    return binary_entropy(q) / (1 - q)


def evaluate(f: EntropyFunctional, s: Spectrum) -> float:
    """Value of the entropy functional `f` on the spectrum `s`."""
    if isinstance(f, VonNeumann):
        if isinstance(s, Geometric):
            return geometric_entropy(s.q)
        return float(eta(s.p).sum())
    if isinstance(f, Renyi):
        return math.log(_power_sum(s, f.alpha)) / (1 - f.alpha)
    if isinstance(f, Tsallis):
        return (_power_sum(s, f.alpha) - 1) / (1 - f.alpha)
    raise TypeError(f"not an entropy functional: {f!r}")


def s_hat(w: SubnormalizedSpectrum | GeometricTail) -> float:
    """Homogeneous extension of the von Neumann entropy, ``Tr eta(w) - eta(Tr w)``."""
    if isinstance(w, GeometricTail):
        return w.scale * geometric_entropy(w.q)
    if w.w.size == 0:
        return 0.0
    t = w.trace
    if t <= 0:
        return 0.0
    return max(0.0, float(eta(w.w).sum()) - eta(t))


def tail_entropy(s: Spectrum, m: int) -> float:
    """``S_hat`` of the tail obtained by deleting the `m` largest eigenvalues."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if isinstance(s, Geometric):
        return s_hat(GeometricTail(s.q, s.q**m))
    if m >= s.p.size:
        return 0.0
    w = s.p[m:]
    t = float(s._tails[m])
    if t <= 0:
        return 0.0
    return max(0.0, float(eta(w).sum()) - eta(t))

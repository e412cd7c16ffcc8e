"""Majorization predicates and the extremal state constructions.

* :func:`head_truncation` keeps the `m` largest eigenvalues and lumps the
  remaining mass into one eigenvalue.
* :func:`rho_m_eps` builds the state that majorizes every state agreeing
  with the base on its first `m` eigenvalues, not decreasing the next one,
  and lying within trace distance `eps`.
* :func:`minimal_majorizer` moves a state into the eigenbasis of a base
  state without losing majorization or increasing the distance.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import spectrum as sp
from .entropy import GeometricTail, SubnormalizedSpectrum
from .spectrum import AlignedState, Finite, Geometric, MajorboundError, Spectrum


class InvalidEpsilon(MajorboundError):
    pass


class PreconditionViolated(MajorboundError):
    pass


@dataclass(frozen=True)
class MmEpsCase:
    """Which branch built the extremal state; `ell` is set for ``F3`` only."""

    kind: str
    ell: int | None = None

    def __str__(self):
        if self.kind == "identity":
            return "Identity"
        return f"Case{self.kind}"


IDENTITY = MmEpsCase("identity")
CASE_F1 = MmEpsCase("F1")
CASE_F2 = MmEpsCase("F2")


def _vector(s: Spectrum, length: int = 0) -> np.ndarray:
    v = s.p if isinstance(s, Finite) else s.materialize()
    if v.size < length:
        v = np.concatenate([v, np.zeros(length - v.size)])
    return v


def _prefix_pair(a: Spectrum, b: Spectrum) -> tuple[np.ndarray, np.ndarray]:
    va, vb = _vector(a), _vector(b)
    n = max(va.size, vb.size)
    return np.cumsum(_vector(a, n)), np.cumsum(_vector(b, n))


def majorizes(a: Spectrum, b: Spectrum, tol: float | None = None) -> bool:
    """True if every prefix sum of `a` dominates the matching one of `b`."""
    tol = sp._tol(tol)
    ca, cb = _prefix_pair(a, b)
    return bool(np.all(ca >= cb - tol))


def partially_majorizes(a: Spectrum, b: Spectrum, m: int, tol: float | None = None) -> bool:
    """Prefix-sum dominance for ``k = 1..m`` only; vacuous at ``m = 0``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return True
    tol = sp._tol(tol)
    ca = np.cumsum(a.head(m))
    cb = np.cumsum(b.head(m))
    return bool(np.all(ca >= cb - tol))


def head_truncation(s: Spectrum, m: int) -> Finite:
    """``(p_1, ..., p_m, d_m)`` in canonical order."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if isinstance(s, Finite) and m >= s.support - 1:
        return s
    v = np.concatenate([s.head(m), [s.tail(m)]])
    return Finite(np.sort(v)[::-1])


def tail_operator(s: Spectrum, m: int) -> SubnormalizedSpectrum | GeometricTail:
    """The spectrum with its `m` largest eigenvalues removed."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if isinstance(s, Geometric):
        return GeometricTail(s.q, s.q**m)
    if m >= s.support:
        return SubnormalizedSpectrum(np.zeros(0))
    return SubnormalizedSpectrum(s.p[m : s.support])


def rho_m_eps(s: Spectrum, m: int, eps: float, tol: float | None = None) -> tuple[AlignedState, MmEpsCase]:
    """The extremal state for `m`-partial majorization within trace distance `eps`.

    Returns the state as coefficients aligned with the eigenbasis of `s`
    (not necessarily sorted) together with the branch that produced it.
    Ties go to the earlier branch: identity, then F1 (``eps >= d_{m+1}``),
    then F2 (finite support ``n`` and ``eps <= p_n``), then F3.
    """
    tol = sp._tol(tol)
    if m < 0:
        raise ValueError("m must be non-negative")
    if not -tol <= eps <= 1 + tol:
        raise InvalidEpsilon(f"eps must lie in [0, 1], got {eps}")
    eps = min(max(eps, 0.0), 1.0)
    finite = isinstance(s, Finite)
    n = s.support if finite else None

    if eps == 0 or (finite and m >= n - 1):
        return AlignedState(s, _vector(s)), IDENTITY

    if eps >= s.tail(m + 1) - tol:
        coeffs = np.concatenate([s.head(m), [s.tail(m)]])
        return AlignedState(s, coeffs), CASE_F1

    if finite and eps <= s.p[n - 1] + tol:
        coeffs = s.p[:n].copy()
        coeffs[m] += eps
        coeffs[n - 1] = max(coeffs[n - 1] - eps, 0.0)
        return AlignedState(s, coeffs), CASE_F2

    ell = sp.ell_epsilon(s, eps, tol)
    coeffs = s.head(ell)
    coeffs[m] += eps
    coeffs[ell - 1] = max(s.eigen(ell) - eps + s.tail(ell), 0.0)
    return AlignedState(s, coeffs), MmEpsCase("F3", ell)


def _drain(v: np.ndarray, amount: float, lo: int) -> float:
    """Remove `amount` from ``v[lo:]`` starting at the last entry; returns the shortfall."""
    i = v.size - 1
    while amount > 0 and i >= lo:
        take = min(v[i], amount)
        v[i] -= take
        amount -= take
        i -= 1
    return amount


def minimal_majorizer(p: Spectrum, q: Spectrum, m: int, tol: float | None = None) -> AlignedState:
    """A state in the eigenbasis of `p` that majorizes `q` and is no farther from `p`.

    The result copies ``p_1..p_m``, has ``(m+1)``-th coefficient at least
    ``p_{m+1}`` and satisfies ``sum |sigma_i - p_i| <= sum |p_i - q_i|``
    (both sides on sorted spectra). For ``m >= 1`` `q` must be `m`-partially
    majorized by `p`.

    Built greedily from sorted `q`: the first `m` entries are overwritten with
    those of `p` and the extra mass is drained from the smallest entries,
    then entry ``m+1`` is topped up to ``p_{m+1}`` the same way. Each step
    only moves mass toward larger entries (keeping ``sigma > q``) and repairs
    at least as much distance as it spends.
    """
    tol = sp._tol(tol)
    if m < 0:
        raise ValueError("m must be non-negative")
    if m >= 1 and not partially_majorizes(p, q, m, tol):
        raise PreconditionViolated(f"q is not {m}-partially majorized by p")
    n = max(_vector(p).size, _vector(q).size, m + 1)
    P = _vector(p, n)
    sigma = _vector(q, n).copy()

    excess = float(P[:m].sum() - sigma[:m].sum())
    sigma[:m] = P[:m]
    if excess >= 0:
        short = _drain(sigma, excess, m)
    else:
        sigma[m] -= excess
        short = 0.0
    need = P[m] - sigma[m]
    if need > 0:
        short += _drain(sigma, need, m + 1)
        sigma[m] += need
    if short > tol:
        raise PreconditionViolated("not enough tail mass to build the majorizer")
    return AlignedState(p, sigma)

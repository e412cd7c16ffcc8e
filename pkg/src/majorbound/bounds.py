"""Upper bounds on ``f(rho) - f(sigma)`` for states `m`-partially majorized by `rho`.

The generic bound for any Schur-concave `f` is ``f(rho) - f(rho_{m,eps})``
(:func:`gap_bound`). For the von Neumann entropy it has the closed form
computed by :func:`vn_bound_closed` from tail weights and tail entropies
alone, without building the extremal state.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import spectrum as sp
from .entropy import EntropyFunctional, VonNeumann, _check_alpha, eta, evaluate, tail_entropy
from .majorization import MmEpsCase, rho_m_eps
from .spectrum import AlignedState, Finite, Geometric, MajorboundError, Spectrum


class BranchViolation(MajorboundError):
    pass


class PureState(MajorboundError):
    pass


@dataclass(frozen=True)
class BoundResult:
    value: float
    case: MmEpsCase
    extremal: AlignedState


def _clip_eps(eps: float, tol: float) -> float:
    if not -tol <= eps <= 1 + tol:
        raise MajorboundError(f"eps must lie in [0, 1], got {eps}")
    return min(max(eps, 0.0), 1.0)


def gap_bound(f: EntropyFunctional, s: Spectrum, m: int, eps: float, tol: float | None = None) -> BoundResult:
    """``f(s) - f(rho_{m,eps})``, the least upper bound on the entropy drop."""
    ext, case = rho_m_eps(s, m, eps, tol)
    if case.kind == "identity":
        return BoundResult(0.0, case, ext)
    value = evaluate(f, s) - evaluate(f, ext.sorted())
    return BoundResult(max(value, 0.0), case, ext)


def min_f_lower_bound(f: EntropyFunctional, s: Spectrum, m: int, eps: float, tol: float | None = None) -> float:
    """``f(rho_{m,eps})``: no admissible state has a smaller value of `f`."""
    ext, case = rho_m_eps(s, m, eps, tol)
    if case.kind == "identity":
        return evaluate(f, s)
    return evaluate(f, ext.sorted())


def _eta0(x: float) -> float:
    return eta(max(x, 0.0))


def _delta_ell(s: Spectrum, eps: float, tol: float) -> int:
    # the F2 branch is the F3 formula with ell = n
    if isinstance(s, Finite) and eps <= s.eigen(s.support) + tol:
        return s.support
    return sp.ell_epsilon(s, eps, tol)


def _delta(s: Spectrum, m: int, eps: float, ell: int) -> float:
    p = s.eigen(m + 1)
    d = s.tail(ell - 1)
    return eta(p) + eta(d) - eta(p + eps) - _eta0(d - eps)


def delta(s: Spectrum, m: int, eps: float, tol: float | None = None) -> float:
    """``eta(p_{m+1}) + eta(d_{l-1}) - eta(p_{m+1}+eps) - eta(d_{l-1}-eps)`` with ``l = ell_eps``.

    Only defined below the saturation threshold ``eps < d_{m+1}``.
    """
    tol = sp._tol(tol)
    if eps >= s.tail(m + 1) + tol:
        raise BranchViolation(f"eps={eps} is not below d_{m + 1}={s.tail(m + 1)}")
    if eps <= 0:
        return 0.0
    return _delta(s, m, eps, _delta_ell(s, eps, tol))


def vn_bound_closed(s: Spectrum, m: int, eps: float, tol: float | None = None) -> float:
    """Closed-form von Neumann bound ``B(rho, m, eps)``.

    ``S_hat(rho^[m])`` once ``eps >= d_{m+1}``, otherwise
    ``Delta(rho, m, eps) + S_hat(rho^[l-1])`` with ``l = ell_eps``.
    """
    tol = sp._tol(tol)
    eps = _clip_eps(eps, tol)
    if m < 0:
        raise ValueError("m must be non-negative")
    if eps == 0 or (isinstance(s, Finite) and m >= s.support - 1):
        return 0.0
    if eps >= s.tail(m + 1) - tol:
        return tail_entropy(s, m)
    ell = _delta_ell(s, eps, tol)
    return _delta(s, m, eps, ell) + tail_entropy(s, ell - 1)


def vn_m_bound(s: Spectrum, m: int) -> float:
    """Bound for `m`-partial majorization with no distance constraint: ``S_hat(rho^[m])``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return tail_entropy(s, m)


def _power_parts(s: Spectrum, m: int, alpha: float) -> tuple[float, float]:
    """(sum of the first m powers, sum of the remaining powers)."""
    if isinstance(s, Geometric):
        q = s.q
        total = (1 - q) ** alpha / (1 - q**alpha)
        tail = total * q ** (m * alpha)
        return total - tail, tail
    p = s.p[s.p > 0]
    return float((p[:m] ** alpha).sum()), float((p[m:] ** alpha).sum())


def renyi_gap(s: Spectrum, m: int, alpha: float) -> tuple[float, float]:
    """Exact Renyi drop ``R_a(rho) - R_a(rho_m)`` and its ``ln(1+x) <= x`` relaxation."""
    _check_alpha(alpha)
    if m < 1:
        raise ValueError("m must be at least 1")
    head, tail = _power_parts(s, m, alpha)
    lump = s.tail(m) ** alpha
    if alpha < 1:
        x = (tail - lump) / (head + lump)
        scale = 1 / (1 - alpha)
    else:
        x = (lump - tail) / (head + tail)
        scale = 1 / (alpha - 1)
    x = max(x, 0.0)
    return scale * math.log1p(x), scale * x


def tightness_holds(s: Spectrum, m: int, tol: float | None = None) -> bool:
    """``p_1 + ... + p_m >= 1 - p_m``: the head truncation is then attainable."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return s.tail(m) <= s.eigen(m) + sp._tol(tol)


def mr_hat(s: Spectrum, eps: float, tol: float | None = None) -> float:
    """Upper bound on the eps-sufficient majorization rank.

    ``min{m >= 1 : S_hat(rho^[m]) <= eps S(rho)} + 1``; equals the rank at
    ``eps = 0`` (``math.inf`` for a geometric spectrum).
    """
    tol = sp._tol(tol)
    if eps < 0:
        raise MajorboundError("eps must be non-negative")
    if isinstance(s, Finite) and s.support < 2:
        raise PureState("the rank bound is defined for mixed states only")
    if eps == 0:
        return sp.rank(s, tol)
    threshold = eps * evaluate(VonNeumann(), s) + tol
    m = 1
    while tail_entropy(s, m) > threshold:
        m += 1
    return m + 1


"""Closed forms for the Gibbs state of a quantum oscillator.

The Gibbs state with mean number of quanta ``N`` has the geometric spectrum
with ratio ``q = N/(N+1)``, so ``d_k = q^k`` and every tail is a scaled copy
of the whole state. The bound and the rank estimate then reduce to
expressions in ``log_q(eps)``.
"""
from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np

from . import spectrum as sp
from .entropy import eta, geometric_entropy
from .spectrum import Geometric, MajorboundError

FIG_MS = (0, 1, 2, 3, 10, 20)
FIG_NS = {"fig1": 2.0, "fig2": 10.0}
FIG3_NS = (1.0, 10.0, 100.0)
_SNAP = 1e-12


class OutOfRange(MajorboundError):
    pass


def _q(N: float) -> float:
    if not N > 0 or not math.isfinite(N):
        raise OutOfRange(f"mean number of quanta must be positive, got {N}")
    return N / (N + 1)


def gibbs_spectrum(N: float) -> Geometric:
    return Geometric(_q(N))


def gibbs_entropy(N: float) -> float:
    """``(N+1) ln(N+1) - N ln N``."""
    _q(N)
    return (N + 1) * math.log(N + 1) - N * math.log(N)


def _log_q(eps: float, q: float) -> tuple[int, float]:
    """Integer and fractional part of ``log_q eps``, snapping exact powers of `q`."""
    L = math.log(eps) / math.log(q)
    k = round(L)
    if abs(L - k) <= _SNAP * max(1.0, abs(L)):
        return k, 0.0
    k = math.floor(L)
    return k, L - k


def gibbs_vn_bound(N: float, m: int, eps: float, tol: float | None = None) -> float:
    """``B(rho_N, m, eps)``.

    ``q^m S(rho_N)`` when ``eps >= q^(m+1)``; otherwise
    ``Delta + eps q^(-frac) S(rho_N)`` where ``frac`` is the fractional part
    of ``log_q eps``.
    """
    q = _q(N)
    tol = sp._tol(tol)
    if not 0 < eps <= 1 + tol:
        raise OutOfRange(f"eps must lie in (0, 1], got {eps}")
    if m < 0:
        raise OutOfRange("m must be non-negative")
    S = geometric_entropy(q)
    if eps >= q ** (m + 1) - tol:
        return q**m * S
    _, frac = _log_q(eps, q)
    lifted = eps * q ** (-frac)
    head = q**m * (1 - q)
    delta = eta(head) + eta(lifted) - eta(head + eps) - eta(max(lifted - eps, 0.0))
    return delta + lifted * S


def gibbs_mr_hat(N: float, eps: float) -> int:
    """``min{m >= 1 : q^m <= eps} + 1``, i.e. ``[log_q eps] + 2`` off exact powers of `q`."""
    q = _q(N)
    if not 0 < eps < 1:
        raise OutOfRange(f"eps must lie in (0, 1), got {eps}")
    k, frac = _log_q(eps, q)
    if frac == 0.0:
        return max(k, 1) + 1
    return k + 2


@dataclass(frozen=True)
class Grid:
    """Sample points for eps: `points` values between `lo` and `hi`."""

    lo: float
    hi: float
    points: int
    log: bool = False

    def values(self) -> np.ndarray:
        if self.points < 2 or not 0 < self.lo < self.hi:
            raise MajorboundError("grid needs 0 < lo < hi and at least 2 points")
        if self.log:
            return np.geomspace(self.lo, self.hi, self.points)
        return np.linspace(self.lo, self.hi, self.points)


DEFAULT_GRIDS = {
    "fig1": Grid(0.001, 1.0, 400),
    "fig2": Grid(0.001, 1.0, 400),
    "fig3": Grid(1e-4, 0.99, 200, log=True),
}


def figure_data(which: str, grid: Grid | None = None) -> tuple[list[str], np.ndarray]:
    """Columns and rows of the requested figure table.

    ``fig1``/``fig2``: ``B(rho_N, m, eps)`` for ``N = 2``/``N = 10`` and
    ``m`` in 0, 1, 2, 3, 10, 20. ``fig3``: the rank estimate for
    ``N`` in 1, 10, 100 on a log-spaced grid.
    """
    if which not in DEFAULT_GRIDS:
        raise MajorboundError(f"unknown figure {which!r}; choose fig1, fig2 or fig3")
    eps = (grid or DEFAULT_GRIDS[which]).values()
    if which == "fig3":
        header = ["eps"] + [f"N{N:g}" for N in FIG3_NS]
        cols = [[gibbs_mr_hat(N, e) for e in eps] for N in FIG3_NS]
    else:
        N = FIG_NS[which]
        header = ["eps"] + [f"m{m}" for m in FIG_MS]
        cols = [[gibbs_vn_bound(N, m, e) for e in eps] for m in FIG_MS]
    return header, np.column_stack([eps] + cols)


def figure_csv(which: str, grid: Grid | None = None) -> str:
    header, rows = figure_data(which, grid)
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    integer = which == "fig3"
    for row in rows:
        cells = [sp.format_number(row[0])]
        cells += [str(int(v)) if integer else sp.format_number(v) for v in row[1:]]
        buf.write(",".join(cells) + "\n")
    return buf.getvalue()

"""Spectra of quantum states (equivalently, probability distributions).

A spectrum is kept in canonical form: entries sorted non-increasingly and
summing to one. Two variants exist, a finite vector and the geometric
family ``(1-q) q^(i-1)`` that describes the Gibbs state of an oscillator.
Indices follow the mathematical convention and start at 1.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

DEFAULT_TOL = 1e-9
MATERIALIZE_CAP = 10_000_000


def _tol_from_env() -> float:
    raw = os.environ.get("MAJORBOUND_TOL")
    if raw is None:
        return DEFAULT_TOL
    value = float(raw)
    if not 0 < value < 1e-3:
        raise ValueError(f"MAJORBOUND_TOL must lie in (0, 1e-3), got {raw!r}")
    return value


TOL = _tol_from_env()


def set_tolerance(tol: float | None = None) -> float:
    """Set the global comparison tolerance (re-reads ``MAJORBOUND_TOL`` when `tol` is None)."""
    global TOL
    if tol is None:
        tol = _tol_from_env()
    if not 0 < tol < 1e-3:
        raise ValueError(f"tolerance must lie in (0, 1e-3), got {tol}")
    TOL = float(tol)
    return TOL


def _tol(tol: float | None) -> float:
    return TOL if tol is None else tol


class MajorboundError(ValueError):
    """Base class for input errors raised by this package."""


class NotNormalized(MajorboundError):
    pass


class NegativeEntry(MajorboundError):
    pass


class Unbounded(MajorboundError):
    pass


class Spectrum:
    """Common interface of :class:`Finite` and :class:`Geometric`."""

    def eigen(self, i: int) -> float:
        raise NotImplementedError

    def tail(self, k: int) -> float:
        raise NotImplementedError

    def head(self, k: int) -> np.ndarray:
        """The first `k` eigenvalues, zero padded."""
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class Finite(Spectrum):
    """Finitely supported spectrum ``p_1 >= p_2 >= ... >= p_n``."""

    p: np.ndarray
    _tails: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        p = np.array(self.p, dtype=float)
        if p.ndim != 1 or p.size == 0:
            raise MajorboundError("a finite spectrum needs at least one entry")
        p.flags.writeable = False
        # suffix sums: tails[k] = p_{k+1} + ... + p_n, exact zero at k = n
        tails = np.concatenate([np.cumsum(p[::-1])[::-1], [0.0]])
        tails.flags.writeable = False
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "_tails", tails)

    def __len__(self):
        return self.p.size

    def __eq__(self, other):
        return isinstance(other, Finite) and np.array_equal(self.p, other.p)

    def __hash__(self):
        return hash(self.p.tobytes())

    def __repr__(self):
        return f"Finite({', '.join(format(x, '.12g') for x in self.p)})"

    @property
    def support(self) -> int:
        """Number of strictly positive entries."""
        return int(np.count_nonzero(self.p > 0))

    def eigen(self, i):
        return float(self.p[i - 1]) if i <= self.p.size else 0.0

    def tail(self, k):
        if k <= 0:
            return 1.0
        if k >= self.p.size:
            return 0.0
        return float(min(max(self._tails[k], 0.0), 1.0))

    def head(self, k):
        out = np.zeros(k)
        n = min(k, self.p.size)
        out[:n] = self.p[:n]
        return out


@dataclass(frozen=True)
class Geometric(Spectrum):
    """Geometric spectrum ``p_i = (1-q) q^(i-1)``, ``0 < q < 1``."""

    q: float

    def __post_init__(self):
        q = float(self.q)
        if not 0 < q < 1:
            raise MajorboundError(f"geometric ratio must lie in (0, 1), got {q}")
        object.__setattr__(self, "q", q)

    @property
    def mean_quanta(self) -> float:
        return self.q / (1 - self.q)

    def eigen(self, i):
        return (1 - self.q) * self.q ** (i - 1)

    def tail(self, k):
        return 1.0 if k <= 0 else self.q**k

    def head(self, k):
        return (1 - self.q) * self.q ** np.arange(k)

    def materialize_length(self, tol: float | None = None) -> int:
        """Smallest K with ``q^K < tol``."""
        tol = _tol(tol)
        K = max(1, math.ceil(math.log(tol) / math.log(self.q)))
        while self.q**K >= tol:
            K += 1
        while K > 1 and self.q ** (K - 1) < tol:
            K -= 1
        if K > MATERIALIZE_CAP:
            raise Unbounded(f"geometric spectrum q={self.q} needs {K} terms")
        return K

    def materialize(self, tol: float | None = None) -> np.ndarray:
        return self.head(self.materialize_length(tol))


SpectrumLike = Union[Spectrum, Sequence[float], np.ndarray]


@dataclass(frozen=True, eq=False)
class AlignedState:
    """Coefficients of a state diagonal in the eigenbasis of `base`.

    ``coeffs[i-1]`` is the weight on the i-th eigenvector of the base, so the
    entries need not be sorted. ``raw_l1`` is the alignment-wise l1 distance
    to the base, i.e. the trace distance ``||rho - sigma||_1`` of the
    commuting pair (including the base's mass beyond ``len(coeffs)``).
    """

    base: Spectrum
    coeffs: np.ndarray
    raw_l1: float = field(init=False)

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float)
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "raw_l1", aligned_l1(c, self.base))

    def __len__(self):
        return self.coeffs.size

    def sorted(self) -> Finite:
        return Finite(np.sort(self.coeffs)[::-1])

    @property
    def trace_distance(self) -> float:
        """Half the raw alignment distance."""
        return 0.5 * self.raw_l1


def aligned_l1(coeffs: np.ndarray, base: Spectrum) -> float:
    L = coeffs.size
    if isinstance(base, Finite):
        n = max(L, base.p.size)
        a = np.zeros(n)
        a[:L] = coeffs
        b = np.zeros(n)
        b[: base.p.size] = base.p
        return float(np.abs(a - b).sum())
    return float(np.abs(coeffs - base.head(L)).sum() + base.tail(L))


def canonicalize(raw: Iterable[float], tol: float | None = None) -> Finite:
    """Sort non-negative weights into a :class:`Finite` spectrum.

    Entries in ``[-tol, 0)`` are clamped to zero. The weights must already
    sum to one within `tol`; nothing is renormalized.
    """
    tol = _tol(tol)
    arr = np.asarray(list(raw) if not isinstance(raw, np.ndarray) else raw, dtype=float).ravel()
    if arr.size == 0:
        raise MajorboundError("empty spectrum")
    if not np.all(np.isfinite(arr)):
        raise MajorboundError("spectrum entries must be finite numbers")
    if np.any(arr < -tol):
        raise NegativeEntry(f"negative entry {arr.min():.12g}")
    total = arr.sum()
    if abs(total - 1) > tol:
        raise NotNormalized(f"entries sum to {total:.12g}, not 1")
    arr = np.where(arr < 0, 0.0, arr)
    return Finite(np.sort(arr)[::-1])


def as_spectrum(s: SpectrumLike, tol: float | None = None) -> Spectrum:
    if isinstance(s, Spectrum):
        return s
    return canonicalize(s, tol)


def eigen_at(s: Spectrum, i: int) -> float:
    """The i-th largest eigenvalue (1-based); zero past the support."""
    if i < 1:
        raise ValueError("eigenvalue index starts at 1")
    return s.eigen(i)


def tail_weight(s: Spectrum, k: int) -> float:
    """``d_k = 1 - (p_1 + ... + p_k)``, with ``d_0 = 1``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return s.tail(k)


def ell_epsilon(s: Spectrum, eps: float, tol: float | None = None) -> int:
    """Smallest ``k >= 1`` with ``d_k <= eps`` (up to `tol`)."""
    tol = _tol(tol)
    if isinstance(s, Geometric):
        if eps <= 0:
            raise Unbounded("d_k never reaches 0 for a geometric spectrum")
        q = s.q
        k = max(1, math.ceil(math.log(eps) / math.log(q)))
        while k > 1 and q ** (k - 1) <= eps + tol:
            k -= 1
        while q**k > eps + tol:
            k += 1
        return k
    tails = s._tails
    hits = np.nonzero(tails[1:] <= eps + tol)[0]
    # tails[n] == 0, so there is always a hit
    return int(hits[0]) + 1


def _sorted_padded(a: Spectrum, b: Spectrum, tol: float | None) -> tuple[np.ndarray, np.ndarray]:
    va = a.p if isinstance(a, Finite) else a.materialize(tol)
    vb = b.p if isinstance(b, Finite) else b.materialize(tol)
    n = max(va.size, vb.size)
    x = np.zeros(n)
    y = np.zeros(n)
    x[: va.size] = va
    y[: vb.size] = vb
    return x, y


def total_variation(a: Spectrum | AlignedState, b: Spectrum, tol: float | None = None) -> float:
    """Total variation distance ``1/2 sum |a_i - b_i|``.

    Two spectra are compared as sorted sequences. An aligned state measured
    against its own base uses the raw alignment instead.
    """
    if isinstance(a, AlignedState):
        if a.base == b:
            return 0.5 * a.raw_l1
        a = a.sorted()
    if isinstance(a, Geometric) and isinstance(b, Geometric) and a.q == b.q:
        return 0.0
    x, y = _sorted_padded(a, b, tol)
    return float(min(1.0, 0.5 * np.abs(x - y).sum()))


def rank(s: Spectrum, tol: float | None = None) -> float:
    """Number of eigenvalues above `tol`; ``math.inf`` for geometric spectra."""
    if isinstance(s, Geometric):
        return math.inf
    return int(np.count_nonzero(s.p > _tol(tol)))


# ---------------------------------------------------------------- text formats


def format_number(x: float) -> str:
    return format(float(x), ".12g")


def format_spectrum(s: Spectrum, style: str = "inline") -> str:
    """Serialize a spectrum.

    ``style`` is ``"inline"`` (comma separated), ``"lines"`` (one value per
    line) or ``"csv"`` (``index,probability`` rows with a header).
    Geometric spectra always serialize as ``geometric q=<value>``.
    """
    if isinstance(s, Geometric):
        return f"geometric q={s.q!r}"
    if style == "inline":
        return ",".join(repr(float(x)) for x in s.p)
    if style == "lines":
        return "\n".join(repr(float(x)) for x in s.p) + "\n"
    if style == "csv":
        rows = ["index,probability"]
        rows += [f"{i},{float(x)!r}" for i, x in enumerate(s.p, start=1)]
        return "\n".join(rows) + "\n"
    raise ValueError(f"unknown style {style!r}")


def _parse_family(text: str) -> Spectrum | None:
    parts = text.replace("=", " = ").split()
    if not parts or parts[0].lower() not in ("geometric", "gibbs"):
        return None
    kind = parts[0].lower()
    try:
        key, eq, value = parts[1:4]
    except ValueError:
        raise MajorboundError(f"expected '{kind} <param>=<value>', got {text!r}") from None
    if eq != "=" or len(parts) != 4:
        raise MajorboundError(f"cannot parse {text!r}")
    try:
        x = float(value)
    except ValueError:
        raise MajorboundError(f"bad number {value!r}") from None
    if kind == "geometric" and key.lower() == "q":
        return Geometric(x)
    if kind == "gibbs" and key == "N":
        if not x > 0:
            raise MajorboundError(f"mean number of quanta must be positive, got {x}")
        return Geometric(x / (x + 1))
    raise MajorboundError(f"unknown parameter {key!r} for {kind}")


def parse_spectrum(text: str, tol: float | None = None) -> Spectrum:
    """Parse any of the text formats produced by :func:`format_spectrum`.

    Also accepts ``gibbs N=<value>``. CSV rows may come in any order; rows
    that do not start with an integer index (headers) are skipped.
    """
    text = text.strip()
    fam = _parse_family(text)
    if fam is not None:
        return fam
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise MajorboundError("empty spectrum")
    values: list[float] = []
    try:
        if len(lines) > 1 and all("," in ln for ln in lines[1:]):
            rows = {}
            for ln in lines:
                idx, val = (x.strip() for x in ln.split(",", 1))
                if not idx.lstrip("+").isdigit():
                    continue
                rows[int(idx)] = float(val)
            values = [rows[k] for k in sorted(rows)]
        elif len(lines) == 1:
            values = [float(x) for x in lines[0].split(",") if x.strip()]
        else:
            values = [float(x) for x in lines]
    except ValueError as exc:
        raise MajorboundError(f"cannot parse spectrum: {exc}") from None
    return canonicalize(values, tol)

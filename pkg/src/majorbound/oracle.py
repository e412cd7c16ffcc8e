"""Brute-force verification of the bounds on small instances.

The oracle never trusts the analytic construction it is checking. It
enumerates diagonal candidate states from two sets around a base spectrum
``p``:

``tset``
    coefficients aligned with ``p`` that copy ``p_1..p_m``, do not lower
    the ``(m+1)``-th coefficient and stay within trace distance `eps`.
``pset``
    sorted spectra that are `m`-partially majorized by ``p`` and within
    total variation `eps` of it.

Every candidate passes the set's defining predicates before it is scored.
Families of candidates:

* a lattice on the free block of the simplex, pulled radially into the
  distance ball (also at half radius);
* straight-line transfers of mass between every ordered pair of entries;
* concentrating moves that feed one entry from all others, draining either
  the smallest or the largest entries first;
* Dirichlet samples pulled into the ball (random mode);
* hill climbing by pairwise transfers from the worst candidates (refine mode);
* the known analytic states ``p``, ``rho_m`` and ``rho_{m,eps}`` unless
  ``include_analytic`` is off.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import kernels
from . import spectrum as sp
from .bounds import gap_bound, tightness_holds
from .entropy import EntropyFunctional, Renyi, Tsallis, VonNeumann, evaluate
from .majorization import head_truncation, majorizes, minimal_majorizer, partially_majorizes, rho_m_eps
from .spectrum import AlignedState, Finite, Geometric, MajorboundError, Spectrum

DESK_RANK = 12
MAX_RESOLUTION = 400
SETS = ("tset", "pset")
# Candidates must satisfy the set constraints up to rounding only. Admitting
# states that overshoot a constraint by the comparison tolerance lets entropies
# with unbounded slope at zero (Renyi with alpha < 1) exceed the bound.
MEMBERSHIP_TOL = 1e-13


class TooLarge(MajorboundError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    """How hard the oracle searches.

    ``mode`` is ``"grid"`` (deterministic families at `resolution` steps),
    ``"random"`` (`samples` Dirichlet draws from `seed`) or ``"refine"``
    (both, followed by `passes` rounds of hill climbing).
    """

    mode: str = "grid"
    resolution: int = 50
    samples: int = 2000
    seed: int = 0
    passes: int = 3
    max_support: int | None = None
    lattice_cap: int = 10_000
    include_analytic: bool = True

    def __post_init__(self):
        if self.mode not in ("grid", "random", "refine"):
            raise MajorboundError(f"unknown search mode {self.mode!r}")
        if not 2 <= self.resolution <= MAX_RESOLUTION:
            raise MajorboundError(f"resolution must lie in [2, {MAX_RESOLUTION}]")
        if self.samples < 1 or self.passes < 0:
            raise MajorboundError("samples must be positive and passes non-negative")
        if not 0 <= self.seed < 2**64:
            raise MajorboundError("seed must be an unsigned 64-bit integer")
        if self.max_support is not None and not 1 <= self.max_support <= DESK_RANK:
            raise MajorboundError(f"max_support must lie in [1, {DESK_RANK}]")


@dataclass
class Check:
    name: str
    passed: bool
    counterexample: dict | None = None

    def __post_init__(self):
        self.passed = bool(self.passed)

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "counterexample": self.counterexample}


@dataclass
class VerificationReport:
    kind: str
    worst_gap: float
    bound: float
    witness: AlignedState | None
    checks: list[Check] = field(default_factory=list)
    candidates_tested: int = 0
    params: dict = field(default_factory=dict)

    @property
    def margin(self) -> float:
        return self.bound - self.worst_gap

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "passed": self.passed,
            "worst_gap": self.worst_gap,
            "bound": self.bound,
            "margin": self.margin,
            "witness": None if self.witness is None else [float(x) for x in self.witness.coeffs],
            "candidates_tested": self.candidates_tested,
            "params": self.params,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        failed = [c.name for c in self.checks if not c.passed]
        tail = f" failed={','.join(failed)}" if failed else ""
        return (
            f"{status} {self.kind} worst={sp.format_number(self.worst_gap)} "
            f"bound={sp.format_number(self.bound)} margin={sp.format_number(self.margin)} "
            f"candidates={self.candidates_tested}{tail}"
        )


# ------------------------------------------------------------ set membership


def _base_vector(s: Spectrum, K: int) -> tuple[np.ndarray, float]:
    """First K eigenvalues and the mass beyond them."""
    return s.head(K), (s.tail(K) if isinstance(s, Geometric) else float(s.p[K:].sum()))


def _mtol(tol: float | None) -> float:
    return min(sp._tol(tol), MEMBERSHIP_TOL)


def _mass(s: Spectrum) -> float:
    # inputs are normalized only up to the global tolerance
    return 1.0 if isinstance(s, Geometric) else float(s.p.sum())


def in_tset(coeffs, s: Spectrum, m: int, eps: float, tol: float | None = None) -> bool:
    """Membership of an aligned coefficient vector in ``T_m(p) & U_eps(p)``.

    `tol` defaults to rounding level (:data:`MEMBERSHIP_TOL`).
    """
    tol = MEMBERSHIP_TOL if tol is None else tol
    c = np.asarray(coeffs, dtype=float)
    if np.any(c < -tol) or abs(c.sum() - _mass(s)) > tol:
        return False
    K = max(c.size, m + 1)
    c = np.concatenate([c, np.zeros(K - c.size)])
    base, rest = _base_vector(s, K)
    if np.any(np.abs(c[:m] - base[:m]) > tol) or c[m] < base[m] - tol:
        return False
    return bool(0.5 * (np.abs(c - base).sum() + rest) <= eps + tol)


def in_pset(coeffs, s: Spectrum, m: int, eps: float, tol: float | None = None) -> bool:
    """Membership of a diagonal state in ``{sigma : sigma m-partially below p, TV <= eps}``.

    `tol` defaults to rounding level (:data:`MEMBERSHIP_TOL`).
    """
    tol = MEMBERSHIP_TOL if tol is None else tol
    c = np.asarray(coeffs, dtype=float)
    if np.any(c < -tol) or abs(c.sum() - _mass(s)) > tol:
        return False
    sigma = Finite(np.sort(np.clip(c, 0, None))[::-1])
    if not partially_majorizes(s, sigma, m, tol):
        return False
    base, rest = _base_vector(s, sigma.p.size)
    return bool(0.5 * (np.abs(sigma.p - base).sum() + rest) <= eps + tol)


# -------------------------------------------------------- candidate families


def _radial(anchor: np.ndarray, X: np.ndarray, radius: float) -> np.ndarray:
    tv = 0.5 * np.abs(X - anchor).sum(axis=1)
    lam = np.where(tv > radius, radius / np.maximum(tv, 1e-300), 1.0)
    return anchor + lam[:, None] * (X - anchor)


def _lattice_points(anchor: np.ndarray, resolution: int, cap: int) -> np.ndarray:
    F = anchor.size
    r = 1
    while r < resolution and math.comb(r + F, F - 1) <= cap:
        r += 1
    return kernels.simplex_lattice(F, r).astype(float) / r * anchor.sum()


def _pair_lines(anchor: np.ndarray, radius: float, R: int) -> np.ndarray:
    F = anchor.size
    steps = np.arange(1, R + 1) / R
    out = []
    for i in range(F):
        for j in range(F):
            if i == j or anchor[j] <= 0:
                continue
            t = steps * min(radius, anchor[j])
            rows = np.tile(anchor, (R, 1))
            rows[:, i] += t
            rows[:, j] -= t
            out.append(rows)
    return np.vstack(out) if out else np.zeros((0, F))


def _concentrate(anchor: np.ndarray, radius: float, R: int) -> np.ndarray:
    F = anchor.size
    M = anchor.sum()
    steps = np.arange(1, R + 1) / R
    out = []
    for i in range(F):
        donors = [j for j in range(F) if j != i]
        for order in (donors[::-1], donors):
            if not order:
                continue
            t = steps * min(radius, M - anchor[i])
            caps = anchor[order]
            before = np.concatenate([[0.0], np.cumsum(caps)[:-1]])
            taken = np.clip(t[:, None] - before[None, :], 0, caps[None, :])
            rows = np.tile(anchor, (R, 1))
            rows[:, order] -= taken
            rows[:, i] += taken.sum(axis=1)
            out.append(np.clip(rows, 0, None))
    return np.vstack(out) if out else np.zeros((0, F))


def _dirichlet(anchor: np.ndarray, radius: float, n: int, rng: np.random.Generator) -> np.ndarray:
    F = anchor.size
    conc = rng.choice([0.2, 1.0, 5.0], size=n)
    X = rng.gamma(np.repeat(conc[:, None], F, axis=1))
    X /= X.sum(axis=1, keepdims=True)
    X *= anchor.sum()
    pulled = _radial(anchor, X, radius)
    shrink = np.where(np.arange(n) % 2 == 0, 1.0, rng.random(n) ** (1 / max(F, 1)))
    return anchor + shrink[:, None] * (pulled - anchor)


@dataclass
class CandidateSet:
    """Candidate states of one set as rows aligned to ``base[:width]``."""

    which: str
    s: Spectrum
    m: int
    eps: float
    rows: np.ndarray
    base: np.ndarray
    rest: float

    def __len__(self):
        return len(self.rows)

    def states(self) -> Iterator[AlignedState]:
        for row in self.rows:
            yield AlignedState(self.s, row)


def _support_width(s: Spectrum, m: int, eps: float, budget: SearchBudget) -> int:
    if isinstance(s, Finite):
        n = s.support
        if n > DESK_RANK:
            raise TooLarge(f"rank {n} exceeds the desk-scale cap {DESK_RANK}")
        return max(n, budget.max_support or n, m + 1)
    ext, _ = rho_m_eps(s, m, eps)
    need = max(m + 2, ext.coeffs.size if eps > 0 else 1)
    if budget.max_support is not None:
        K = max(need, budget.max_support)
    else:
        K = need
        while K < DESK_RANK and s.tail(K) > 0.05 * eps:
            K += 1
    if K > DESK_RANK:
        raise TooLarge(f"geometric state needs support {K} > {DESK_RANK}")
    return K


def _families(anchor: np.ndarray, radius: float, budget: SearchBudget, rng: np.random.Generator | None) -> list[np.ndarray]:
    F = anchor.size
    if F <= 1 or radius <= 0:
        return [anchor[None, :]]
    fams = [anchor[None, :]]
    if budget.mode in ("grid", "refine"):
        R = budget.resolution
        X = _lattice_points(anchor, R, budget.lattice_cap)
        fams.append(_radial(anchor, X, radius))
        fams.append(_radial(anchor, X, 0.5 * radius))
        fams.append(_pair_lines(anchor, radius, R))
        fams.append(_concentrate(anchor, radius, R))
    if budget.mode in ("random", "refine"):
        fams.append(_dirichlet(anchor, radius, budget.samples, rng))
    return fams


def _dedupe(rows: np.ndarray) -> np.ndarray:
    if len(rows) < 2:
        return rows
    _, idx = np.unique(np.round(rows, 13), axis=0, return_index=True)
    return rows[np.sort(idx)]


def _tset_mask(rows, base, rest, m, eps, tol):
    ok = np.all(rows >= -tol, axis=1) & (np.abs(rows.sum(axis=1) - base.sum() - rest) <= tol)
    if m > 0:
        ok &= np.all(np.abs(rows[:, :m] - base[:m]) <= tol, axis=1)
    ok &= rows[:, m] >= base[m] - tol
    ok &= 0.5 * (kernels.l1_rows(rows, base) + rest) <= eps + tol
    return ok


def _pset_mask(rows_sorted, base, rest, m, eps, tol):
    ok = np.all(rows_sorted >= -tol, axis=1) & (np.abs(rows_sorted.sum(axis=1) - base.sum() - rest) <= tol)
    if m > 0:
        ok &= kernels.prefix_violation(base, rows_sorted, tol, m) == 0
    ok &= 0.5 * (kernels.l1_rows(rows_sorted, base) + rest) <= eps + tol
    return ok


def _analytic_rows(s: Spectrum, m: int, eps: float, K: int) -> list[np.ndarray]:
    rows = []
    cands = [rho_m_eps(s, m, eps)[0].coeffs]
    if m >= 1:
        cands.append(head_truncation(s, m).p)
    if isinstance(s, Finite):
        cands.append(s.p)
    for c in cands:
        c = np.trim_zeros(c, "b") if c.size > K else c
        if c.size <= K:
            rows.append(np.concatenate([c, np.zeros(K - c.size)]))
    return rows


def _rng(budget: SearchBudget, salt: int) -> np.random.Generator:
    return np.random.default_rng([budget.seed, salt])


def candidates(s: Spectrum, m: int, eps: float, budget: SearchBudget, which: str, tol: float | None = None) -> CandidateSet:
    """All candidates of one set (``"tset"`` or ``"pset"``) that pass its membership test."""
    tol = sp._tol(tol)
    if which not in SETS:
        raise MajorboundError(f"unknown set {which!r}")
    if m < 0 or not 0 <= eps <= 1:
        raise MajorboundError("need m >= 0 and eps in [0, 1]")
    K = _support_width(s, m, eps, budget)
    base, rest = _base_vector(s, K)
    anchor = base.copy()
    anchor[-1] += rest
    radius = eps - rest
    rng = _rng(budget, 0 if which == "tset" else 1)

    if which == "tset":
        lo = min(m, K)
        blocks = _families(anchor[lo:], radius, budget, rng)
        rows = np.vstack([np.hstack([np.tile(anchor[:lo], (len(b), 1)), b]) for b in blocks])
    else:
        rows = np.vstack(_families(anchor, radius, budget, rng))
    if budget.include_analytic:
        extra = _analytic_rows(s, m, eps, K)
        if extra:
            rows = np.vstack([rows] + [r[None, :] for r in extra])
    rows = np.ascontiguousarray(rows, dtype=float)
    if which == "pset":
        rows = kernels.sort_rows_desc(rows)
        mask = _pset_mask(rows, base, rest, m, eps, _mtol(tol))
    else:
        mask = _tset_mask(rows, base, rest, m, eps, _mtol(tol))
    rows = _dedupe(rows[mask])
    return CandidateSet(which, s, m, eps, np.ascontiguousarray(rows), base, rest)


def sample_constrained(s: Spectrum, m: int, eps: float, budget: SearchBudget, which: str = "tset") -> Iterator[AlignedState]:
    """Stream the candidate states of a set; deterministic for a fixed budget."""
    yield from candidates(s, m, eps, budget, which).states()


# ------------------------------------------------------------------- scoring


def _values(f: EntropyFunctional, rows: np.ndarray) -> np.ndarray:
    if isinstance(f, VonNeumann):
        return kernels.vn_entropy_rows(rows)
    ps = kernels.power_sum_rows(rows, f.alpha)
    if isinstance(f, Renyi):
        return np.log(ps) / (1 - f.alpha)
    if isinstance(f, Tsallis):
        return (ps - 1) / (1 - f.alpha)
    raise TypeError(f"not an entropy functional: {f!r}")


def _pair_moves(width: int, lo: int) -> np.ndarray:
    moves = []
    for i in range(lo, width):
        for j in range(lo, width):
            if i != j:
                v = np.zeros(width)
                v[i], v[j] = 1.0, -1.0
                moves.append(v)
    return np.array(moves).reshape(-1, width)


def _hill_climb(cs: CandidateSet, score: Callable[[np.ndarray], np.ndarray], passes: int, tol: float) -> np.ndarray:
    """Greedy pairwise transfers from the eight best rows; returns every visited point."""
    if len(cs) == 0 or passes == 0:
        return np.zeros((0, cs.rows.shape[1]))
    width = cs.rows.shape[1]
    lo = min(cs.m, width) if cs.which == "tset" else 0
    moves = _pair_moves(width, lo)
    if len(moves) == 0:
        return np.zeros((0, width))
    sc = score(cs.rows)
    pts = cs.rows[np.argsort(-sc, kind="stable")[:8]].copy()
    visited = []
    h = max(cs.eps, 1e-3) / 8
    for _ in range(passes):
        for _ in range(25):
            trial = (pts[:, None, :] + h * moves[None, :, :]).reshape(-1, width)
            trial = np.ascontiguousarray(trial)
            if cs.which == "pset":
                trial = kernels.sort_rows_desc(trial)
                ok = _pset_mask(trial, cs.base, cs.rest, cs.m, cs.eps, _mtol(tol))
            else:
                ok = _tset_mask(trial, cs.base, cs.rest, cs.m, cs.eps, _mtol(tol))
            ts = np.where(ok, score(trial), -np.inf).reshape(len(pts), len(moves))
            best = ts.argmax(axis=1)
            gain = ts[np.arange(len(pts)), best] > score(pts)
            if not gain.any():
                break
            new = trial.reshape(len(pts), len(moves), width)[np.arange(len(pts)), best]
            pts[gain] = new[gain]
            visited.append(pts[gain].copy())
        h /= 4
    return np.vstack(visited) if visited else np.zeros((0, width))


def _with_refinement(cs: CandidateSet, score, budget: SearchBudget, tol: float) -> CandidateSet:
    if budget.mode != "refine":
        return cs
    extra = _hill_climb(cs, score, budget.passes, tol)
    if len(extra) == 0:
        return cs
    rows = np.ascontiguousarray(np.vstack([cs.rows, extra]))
    return CandidateSet(cs.which, cs.s, cs.m, cs.eps, rows, cs.base, cs.rest)


def _params(s, m, eps, budget, which, f=None):
    out = {
        "spectrum": sp.format_spectrum(s),
        "m": m,
        "eps": eps,
        "set": which,
        "mode": budget.mode,
        "resolution": budget.resolution,
        "samples": budget.samples,
        "seed": budget.seed,
        "passes": budget.passes,
        "backend": kernels.BACKEND,
    }
    if f is not None:
        out["f"] = str(f)
    return out


def worst_gap(
    f: EntropyFunctional,
    s: Spectrum,
    m: int,
    eps: float,
    budget: SearchBudget,
    which: str = "tset",
    cands: CandidateSet | None = None,
    tol: float | None = None,
) -> VerificationReport:
    """Largest ``f(s) - f(sigma)`` found in the set, checked against :func:`gap_bound`.

    Pass `cands` to reuse one candidate set for several functionals.
    """
    tol = sp._tol(tol)
    cs = cands if cands is not None else candidates(s, m, eps, budget, which, tol)
    f_s = evaluate(f, s)
    cs = _with_refinement(cs, lambda r: f_s - _values(f, r), budget, tol)
    bound = gap_bound(f, s, m, eps, tol).value
    report = VerificationReport("worst_gap", -math.inf, bound, None, params=_params(s, m, eps, budget, which, f))
    report.candidates_tested = len(cs)
    if len(cs) == 0:
        report.worst_gap = 0.0
        report.checks.append(Check("nonempty", False, {"reason": "no candidate passed membership"}))
        return report
    gaps = f_s - _values(f, cs.rows)
    i = int(np.argmax(gaps))
    report.worst_gap = float(gaps[i])
    report.witness = AlignedState(s, cs.rows[i])
    member = in_tset if which == "tset" else in_pset
    report.checks.append(Check("witness_membership", member(cs.rows[i], s, m, eps, _mtol(tol))))
    sound = report.worst_gap <= bound + 10 * tol
    report.checks.append(
        Check(
            "soundness",
            sound,
            None if sound else {"sigma": cs.rows[i].tolist(), "gap": report.worst_gap, "bound": bound},
        )
    )
    if m >= 1 and eps >= s.tail(m + 1) - tol and tightness_holds(s, m, tol):
        attained = bound - report.worst_gap <= 1e-6
        report.checks.append(Check("attainment", attained, None if attained else {"slack": bound - report.worst_gap}))
    return report


def _prefix_excess(ref: np.ndarray, rows_sorted: np.ndarray) -> np.ndarray:
    w = rows_sorted.shape[1]
    r = np.zeros(w)
    r[: min(w, ref.size)] = ref[:w]
    return (np.cumsum(rows_sorted, axis=1) - np.cumsum(r)).max(axis=1)


def verify_dominance(
    s: Spectrum,
    m: int,
    eps: float,
    budget: SearchBudget,
    sets: tuple[str, ...] = SETS,
    cands: dict[str, CandidateSet] | None = None,
    tol: float | None = None,
) -> VerificationReport:
    """Check that ``rho_{m,eps}`` majorizes every candidate in each requested set."""
    tol = sp._tol(tol)
    ext, case = rho_m_eps(s, m, eps, tol)
    top = ext.sorted()
    report = VerificationReport("dominance", -math.inf, 0.0, None, params=_params(s, m, eps, budget, "+".join(sets)))
    report.params["case"] = str(case)
    report.checks.append(Check("extremal_majorizes_base", majorizes(top, s, tol)))
    for which in sets:
        cs = (cands or {}).get(which)
        if cs is None:
            cs = candidates(s, m, eps, budget, which, tol)
        width = cs.rows.shape[1]
        ref = np.zeros(max(width, top.p.size))
        ref[: top.p.size] = top.p
        cs = _with_refinement(cs, lambda r: _prefix_excess(ref, kernels.sort_rows_desc(r)), budget, tol)
        report.candidates_tested += len(cs)
        if len(cs) == 0:
            continue
        rows_sorted = kernels.sort_rows_desc(cs.rows)
        excess = _prefix_excess(ref, rows_sorted)
        i = int(np.argmax(excess))
        if excess[i] > report.worst_gap:
            report.worst_gap = float(excess[i])
            report.witness = AlignedState(s, cs.rows[i])
        bad = kernels.prefix_violation(np.ascontiguousarray(ref), rows_sorted, tol)
        nbad = int(np.count_nonzero(bad))
        ce = None
        if nbad:
            j = int(np.nonzero(bad)[0][0])
            ce = {"sigma": cs.rows[j].tolist(), "prefix_index": int(bad[j]), "violations": nbad}
        report.checks.append(Check(f"dominance[{which}]", nbad == 0, ce))
    if report.worst_gap == -math.inf:
        report.worst_gap = 0.0
    return report


def _random_spectrum(rng: np.random.Generator, n: int) -> Finite:
    conc = rng.choice([0.3, 1.0, 3.0])
    x = rng.gamma(conc, size=n)
    if rng.random() < 0.2 and n > 1:
        x[rng.integers(n)] = 0.0
    if x.sum() <= 0:
        x[0] = 1.0
    x /= x.sum()
    return sp.canonicalize(x)


def verify_sigma_star(budget: SearchBudget, max_n: int = 8, ms: tuple[int, ...] = (0, 1, 2), tol: float | None = None) -> VerificationReport:
    """Check the three properties of :func:`minimal_majorizer` on random triples.

    ``budget.samples`` triples ``(p, q, m)`` are drawn from ``budget.seed``;
    for ``m >= 1``, `q` is redrawn until `p` `m`-partially majorizes it.
    """
    tol = sp._tol(tol)
    rng = _rng(budget, 2)
    report = VerificationReport(
        "sigma_star", -math.inf, 0.0, None, params={"samples": budget.samples, "seed": budget.seed, "max_n": max_n}
    )
    fails = {"membership": None, "dominance": None, "distance": None}
    counts = dict.fromkeys(fails, 0)
    for t in range(budget.samples):
        m = ms[t % len(ms)]
        p = _random_spectrum(rng, int(rng.integers(1, max_n + 1)))
        if t % 50 == 0:
            q = p
        elif t % 50 == 1:
            q = Finite(np.full(max_n, 1.0 / max_n))
        else:
            for _ in range(1000):
                q = _random_spectrum(rng, int(rng.integers(1, max_n + 1)))
                if partially_majorizes(p, q, m, tol):
                    break
            else:
                q = Finite(np.full(max_n, 1.0 / max_n))
        sig = minimal_majorizer(p, q, m, tol)
        c = sig.coeffs
        n = max(p.p.size, q.p.size)
        P = np.concatenate([p.p, np.zeros(n - p.p.size)])
        Q = np.concatenate([q.p, np.zeros(n - q.p.size)])
        slack = sig.raw_l1 - float(np.abs(P - Q).sum())
        if slack > report.worst_gap:
            report.worst_gap = slack
            report.witness = sig
        checks = {
            "membership": bool(
                np.all(c >= -tol)
                and abs(c.sum() - 1) <= tol
                and np.all(np.abs(c[:m] - p.head(m)) <= tol)
                and c[m] >= p.eigen(m + 1) - tol
            ),
            "dominance": majorizes(sig.sorted(), q, tol),
            "distance": slack <= tol,
        }
        for name, ok in checks.items():
            if not ok:
                counts[name] += 1
                if fails[name] is None:
                    fails[name] = {"p": p.p.tolist(), "q": q.p.tolist(), "m": m, "sigma": c.tolist()}
    report.candidates_tested = budget.samples
    for name in fails:
        ce = fails[name]
        if ce is not None:
            ce["violations"] = counts[name]
        report.checks.append(Check(name, counts[name] == 0, ce))
    return report

import math

import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from majorbound import canonicalize

settings.register_profile("default", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def ref_eta(x):
    """Plain -x ln x, kept separate from the library implementation."""
    return -x * math.log(x) if x > 0 else 0.0


def ref_entropy(v):
    return math.fsum(ref_eta(x) for x in v)


@st.composite
def spectra(draw, min_n=1, max_n=8, zeros=True):
    """Random normalized finite spectra, sometimes with zero entries."""
    n = draw(st.integers(min_n, max_n))
    w = draw(st.lists(st.floats(0.0 if zeros else 0.01, 1.0), min_size=n, max_size=n))
    x = np.asarray(w, dtype=float)
    if x.sum() <= 1e-6:
        x = np.ones(n)
    return canonicalize(x / x.sum())


def random_spectrum(rng, n, zero_prob=0.2):
    x = rng.gamma(rng.choice([0.3, 1.0, 3.0]), size=n)
    if n > 1 and rng.random() < zero_prob:
        x[rng.integers(n)] = 0.0
    if x.sum() <= 0:
        x[0] = 1.0
    return canonicalize(x / x.sum())


# one summary line per acceptance criterion, printed after the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])

import numpy as np
import pytest

from mmseq.corr import random_sequence_set

# Acceptance lines collected during the run and echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def record_acceptance(label: str, ok: bool, detail: str) -> bool:
    line = f"{'PASS' if ok else 'FAIL':<5} {label}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def rand_set(rng, n, m):
    return random_sequence_set(n, m, rng)


def rand_hermitian_toeplitz_col(rng, l):
    t = rng.standard_normal(l) + 1j * rng.standard_normal(l)
    t[0] = t[0].real
    return t


def hermitian_toeplitz(t):
    """Dense Hermitian Toeplitz with ``T[a, 0] = t_a``."""
    l = t.size
    d = np.arange(l)[:, None] - np.arange(l)[None, :]
    return np.where(d >= 0, t[np.abs(d)], np.conj(t[np.abs(d)]))

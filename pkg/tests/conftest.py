import math

import numpy as np
import pytest

from nonnormal.numrange import matrix_from_angle

FIG1 = dict(lambda1=-0.1 + 0.9j, lambda2=-0.4 - 0.5j, theta=2 * math.pi / 7)


@pytest.fixture
def fig1():
    return matrix_from_angle(FIG1["lambda1"], FIG1["lambda2"], FIG1["theta"], 0.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def assert_close(a, b, tol):
    a, b = np.asarray(a), np.asarray(b)
    err = np.max(np.abs(a - b)) if a.size else 0.0
    assert err <= tol, f"max abs error {err:.3e} > {tol:.1e}"


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

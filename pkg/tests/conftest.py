import sys

import numpy as np
import pytest

from knotrep import fixtures
from knotrep.exact import ROOTS, QOmega

X = QOmega.x()


@pytest.fixture(params=fixtures.NAMES)
def name(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def shadow(name, root=None):
    """Exact fixture shadow, or floating with ``root`` substituted for x."""
    return fixtures.shadow_coloring(name, x=None if root is None else ROOTS[root])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)

import os
import sys

import pytest

from hopfsc.exactla import GF, QQ

sys.path.insert(0, os.path.dirname(__file__))

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
ZOO_DIR = os.path.join(ROOT, "zoo")

# acceptance lines, filled in by test_acceptance and printed at the end
ACCEPTANCE = {}


@pytest.fixture(params=[QQ, GF(3), GF(2)], ids=["Q", "F3", "F2"])
def field(request):
    return request.param


@pytest.fixture(params=[QQ, GF(3)], ids=["Q", "F3"])
def odd_field(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])

import sys

import pytest

from gzariski.corpus import builtin_corpus
from gzariski.instance import build, parse_instance


@pytest.fixture(scope="session")
def corpus():
    """name -> (desc, ring, module) for every built-in instance."""
    out = {}
    for desc in builtin_corpus():
        R, M = build(desc)
        out[desc.name] = (desc, R, M)
    return out


def make(text):
    desc = parse_instance(text)
    R, M = build(desc)
    return desc, R, M


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(lines):
        terminalreporter.write_line(lines[n])

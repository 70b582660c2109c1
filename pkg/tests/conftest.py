import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ksymplectic import Subspace  # noqa: E402


def span(n, *indices):
    """span{e_i} with 1-based indices."""
    return Subspace.span_units(n, [i - 1 for i in indices])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

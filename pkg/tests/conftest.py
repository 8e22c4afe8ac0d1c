import json
from pathlib import Path

from dyndeg.numeric import IntPoly
from dyndeg.picard import build_symmetric
from dyndeg.picard.export import rows_from_text

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_lines(name):
    text = (FIXTURES / name).read_text()
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]


def fixture_columns(name, q):
    """Column images transcribed in a fixture, keyed by the builder's basis."""
    m = build_symmetric(q)
    return m, rows_from_text(fixture_lines(name), m.basis)


def printed_poly(key):
    data = json.loads((FIXTURES / "printed_polys.json").read_text())
    return IntPoly(int(c) for c in data[key])


ACCEPTANCE_LINES = {}


def record_criterion(number, passed, detail):
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'} | {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    return passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])

from fractions import Fraction

from hypothesis import strategies as st

from orthocolor.exact import Vec

rationals = st.builds(Fraction, st.integers(-99, 99), st.integers(1, 50))
nonzero_rationals = st.builds(
    Fraction, st.integers(1, 99).flatmap(lambda n: st.sampled_from([n, -n])), st.integers(1, 50)
)
vectors = st.builds(Vec, rationals, rationals, rationals)


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, msg = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {msg}")

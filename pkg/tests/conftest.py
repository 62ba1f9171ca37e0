import pytest

# Sphere sizes |S_n(r)|, r = 0..9.  Computed by breadth-first search in the
# faithful affine representation a: x -> x + 1, t: x -> n x over exact
# fractions, then frozen.
SPHERES = {
    2: [1, 4, 12, 26, 50, 98, 184, 336, 606, 1086],
    3: [1, 4, 12, 30, 70, 158, 346, 742, 1566, 3270],
    4: [1, 4, 12, 36, 88, 220, 524, 1228, 2838, 6464],
    5: [1, 4, 12, 36, 94, 238, 594, 1438, 3434, 8118],
}


@pytest.fixture(scope="session")
def spheres():
    return SPHERES


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from vknot.gauss import GaussDiagram, Token

settings.register_profile(
    "default",
    deadline=None,
    max_examples=150,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def random_knot(rng: random.Random, n: int) -> GaussDiagram:
    """Uniform labelled single-circle diagram with ``n`` arrows."""
    slots = list(range(2 * n))
    rng.shuffle(slots)
    word = [None] * (2 * n)
    for lab in range(1, n + 1):
        sign = rng.choice((1, -1))
        word[slots[2 * lab - 2]] = Token(True, lab, sign)
        word[slots[2 * lab - 1]] = Token(False, lab, sign)
    return GaussDiagram((tuple(word),)).relabeled()


def random_link(rng: random.Random, n: int, k: int) -> GaussDiagram:
    """Random ``k``-circle diagram with ``n`` arrows; some circles may be empty."""
    ends = [(lab, over) for lab in range(1, n + 1) for over in (True, False)]
    rng.shuffle(ends)
    circles = [[] for _ in range(k)]
    for lab, over in ends:
        circles[rng.randrange(k)].append((lab, over))
    signs = {lab: rng.choice((1, -1)) for lab in range(1, n + 1)}
    return GaussDiagram(tuple(tuple(Token(over, lab, signs[lab]) for lab, over in c) for c in circles)).relabeled()


@st.composite
def knots(draw, max_arrows=8, min_arrows=0):
    n = draw(st.integers(min_arrows, max_arrows))
    return random_knot(random.Random(draw(st.integers(0, 2**32 - 1))), n)


@st.composite
def links(draw, max_arrows=6, max_circles=3):
    n = draw(st.integers(0, max_arrows))
    k = draw(st.integers(1, max_circles))
    return random_link(random.Random(draw(st.integers(0, 2**32 - 1))), n, k)


@st.composite
def diagrams(draw, max_arrows=6):
    if draw(st.booleans()):
        return draw(knots(max_arrows=max_arrows))
    return draw(links(max_arrows=max_arrows))


# -- acceptance report -------------------------------------------------------------

ACCEPTANCE_LINES = []


def report(number: int, ok: bool, detail: str) -> None:
    """Record one acceptance line; it is printed again in the terminal summary."""
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

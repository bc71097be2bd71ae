from fractions import Fraction

from hypothesis import strategies as st

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=30)


@st.composite
def parameters(draw, max_den=30, bound=10):
    """Rationals that are not nonpositive integers."""
    x = draw(st.fractions(min_value=-bound, max_value=bound, max_denominator=max_den))
    if x.denominator == 1 and x <= 0:
        x += 1 - x.numerator  # move to a positive integer
    return Fraction(x)


@st.composite
def rational_systems(draw, max_len=3, max_den=6, bound=3):
    from hyperint.rational_criterion import RationalSystem

    r = draw(st.integers(1, max_len))
    s = draw(st.integers(1, max_len))
    alpha = tuple(draw(parameters(max_den=max_den, bound=bound)) for _ in range(r))
    beta = tuple(draw(parameters(max_den=max_den, bound=bound)) for _ in range(s))
    return RationalSystem(alpha, beta)


@st.composite
def quadratic_systems(draw, max_len=3):
    from hyperint.exact import QuadraticNumber
    from hyperint.quadratic_criterion import decompose

    D = draw(st.sampled_from([2, 3, 5, -1, -2, -3, 6, 7]))

    def entry():
        r1 = draw(st.fractions(min_value=-2, max_value=2, max_denominator=4))
        r2 = draw(st.sampled_from([0, 0, 1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2)]))
        if r2 == 0 and r1.denominator == 1 and r1 <= 0:
            r1 += 1 - r1.numerator
        return QuadraticNumber(r1, r2, D)

    alpha = [entry() for _ in range(draw(st.integers(1, max_len)))]
    beta = [entry() for _ in range(draw(st.integers(1, max_len)))]
    return decompose(alpha, beta, D)


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

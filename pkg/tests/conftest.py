import pytest

import u4codes as u


@pytest.fixture(scope="session")
def F2():
    return u.field_make(2, 1)


@pytest.fixture(scope="session")
def F3():
    return u.field_make(3, 1)


@pytest.fixture(scope="session")
def F4():
    return u.field_make(2, 2)


@pytest.fixture(scope="session")
def F5():
    return u.field_make(5, 1)


@pytest.fixture(scope="session")
def F25():
    return u.field_make(5, 2)


# --- the five golden example codes -------------------------------------------


def golden_g1_f4(F4):
    """F_4, n=8: <u(x-1)^6 + u^2(x-1)(1+(x-1)) + u^3 a (x-1)^2>."""
    p4 = u.SPoly.from_ints(F4, 8, [1, 1])
    p5 = u.SPoly.from_ints(F4, 8, [F4.gen()])
    return u.validate_canonical(F4, 3, u.GeneratorForm(r1=6, k4=1, p4=p4, k5=2, p5=p5))


def golden_g1_g2_f4(F4):
    """The code above with u^2(x-1)^4 + u^3(1 + a(x-1) + (x-1)^2) adjoined."""
    p4 = u.SPoly.from_ints(F4, 8, [1, 1])
    p5 = u.SPoly.from_ints(F4, 8, [F4.gen()])
    p6 = u.SPoly.from_ints(F4, 8, [1, F4.gen(), 1])
    return u.validate_canonical(
        F4, 3, u.GeneratorForm(r1=6, k4=1, p4=p4, k5=2, p5=p5, r2=4, k6=0, p6=p6)
    )


def golden_g0_g1_f2(F2):
    """F_2, n=4: <(x-1)^3 + u(x-1) + u^2 + u^3(1+(x-1)),
    u(x-1)^2 + u^2 + u^3(x-1)>."""
    one = u.SPoly.from_ints(F2, 4, [1])
    return u.validate_canonical(
        F2,
        2,
        u.GeneratorForm(
            r=3, k1=1, p1=one, k2=0, p2=one, k3=0,
            p3=u.SPoly.from_ints(F2, 4, [1, 1]),
            r1=2, k4=0, p4=one, k5=1, p5=one,
        ),
    )


def golden_g0_f3(F3):
    """F_3, n=9: <(x-1)^5 + u(x-1)^2(1+2(x-1)) + u^3(x-1)^2>.

    The u^3 correction reduces to a bare power of (x-1) over F_3, so the
    canonical form has k3=2, p3=1.
    """
    p1 = u.SPoly.from_ints(F3, 9, [1, 2])
    return u.validate_canonical(
        F3, 2, u.GeneratorForm(r=5, k1=2, p1=p1, k3=2, p3=u.SPoly.from_ints(F3, 9, [1]))
    )


def golden_g2_f25(F25):
    """F_25, n=125: <u^2(x-1)^51 + u^3(x-1)^67 h(x)> for a unit h."""
    h = u.SPoly.from_ints(F25, 125, [1, 2, F25.gen()])
    return u.validate_canonical(F25, 3, u.GeneratorForm(r2=51, k6=67, p6=h))

import pytest

from artmod import Ideal, MonomialAlgebra, cyclic


@pytest.fixture(scope="session")
def R5():
    """k[x,y]/(x^2, y^3, x*y^2): length 5, basis {1, x, y, xy, y^2}."""
    return MonomialAlgebra(2, [(2, 0), (0, 3), (1, 2)], p=101)


@pytest.fixture(scope="session")
def I_xy2(R5):
    """I = (x, y^2)."""
    return Ideal(R5, [R5.monomial((1, 0)), R5.monomial((0, 2))])


@pytest.fixture(scope="session")
def M_mod_y2(R5):
    """M = R/(y^2), length 4."""
    return cyclic(R5, Ideal(R5, [R5.monomial((0, 2))]))


@pytest.fixture(scope="session")
def N_mod_x(R5):
    """N = R/(x), length 3."""
    return cyclic(R5, Ideal(R5, [R5.monomial((1, 0))]))


@pytest.fixture(scope="session")
def R4():
    """k[x,y]/(x^2, y^2): length 4, a rich source of Tor vanishing."""
    return MonomialAlgebra(2, [(2, 0), (0, 2)], p=101)


@pytest.fixture(scope="session")
def chain3():
    """k[x]/(x^3)."""
    return MonomialAlgebra(1, [(3,)], p=101)

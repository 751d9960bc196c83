import pytest

from alcove_kl.rootsys import ModularContext, build_root_system
from alcove_kl.weylext import from_word


@pytest.fixture(scope="session")
def a1():
    return build_root_system("A", 1)


@pytest.fixture(scope="session")
def a2():
    return build_root_system("A", 2)


@pytest.fixture(scope="session")
def ctx_a1(a1):
    return ModularContext(a1, 5)


@pytest.fixture(scope="session")
def ctx_a2(a2):
    return ModularContext(a2, 5)


def dihedral_element(sys, n):
    """The W_aff element whose alcove is the interval (n, n+1) on the line."""
    word = []
    k = n
    while k > 0:
        word.append(0 if len(word) % 2 == 0 else 1)
        k -= 1
    while k < 0:
        word.append(1 if len(word) % 2 == 0 else 0)
        k += 1
    return from_word(sys, word)

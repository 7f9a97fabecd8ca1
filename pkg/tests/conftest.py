import pytest

from subqec import LinearCode, ShorCode, SubsystemCode, hamming_7_4, repetition


@pytest.fixture(scope="session")
def rep2() -> LinearCode:
    return repetition(2)


@pytest.fixture(scope="session")
def rep3() -> LinearCode:
    return repetition(3)


@pytest.fixture(scope="session")
def ham() -> LinearCode:
    return hamming_7_4()


@pytest.fixture(scope="session")
def code9(rep3) -> SubsystemCode:
    """The [[9,1,3]] grid built from two repetition-3 codes."""
    return SubsystemCode(rep3, rep3)


@pytest.fixture(scope="session")
def code49(ham) -> SubsystemCode:
    """The [[49,16,3]] grid built from two Hamming [7,4] codes."""
    return SubsystemCode(ham, ham)


@pytest.fixture(scope="session")
def shor9(rep3) -> ShorCode:
    return ShorCode(rep3, rep3)

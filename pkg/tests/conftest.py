from functools import lru_cache

import pytest

from nilchain import RootSystemSpec, build_root_system


@lru_cache(maxsize=None)
def system(family: str, rank: int):
    return build_root_system(RootSystemSpec(family, rank))


# Every system the acceptance criteria quantify over.
ACCEPTANCE_SYSTEMS = [
    ("A", 1),
    ("A", 2),
    ("A", 3),
    ("B", 2),
    ("B", 3),
    ("C", 3),
    ("G", 2),
    ("D", 4),
]


@pytest.fixture
def a2():
    return system("A", 2)


@pytest.fixture
def b2():
    return system("B", 2)


@pytest.fixture
def g2():
    return system("G", 2)

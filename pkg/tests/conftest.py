import pytest

from services.cartan_service import load_cartan_datum
from services.hecke_service import HeckeAlgebra
from services.weyl_service import WeylGroup

FAST_TYPES = ["A1~", "A2~", "B2~", "C2~", "G2~"]
RANK_THREE_TYPES = ["A3~", "B3~", "C3~"]
P_NOT_ONE_TYPES = ["B2~", "C2~", "G2~"]


@pytest.fixture(scope="session")
def algebra_for():
    """Session-wide algebras, one per type, so rewriting caches are shared between tests."""
    cache = {}

    def get(label):
        if label not in cache:
            cache[label] = HeckeAlgebra(load_cartan_datum(label))
        return cache[label]

    return get


@pytest.fixture(scope="session")
def weyl_for(algebra_for):
    def get(label) -> WeylGroup:
        return algebra_for(label).weyl

    return get


@pytest.fixture
def g2(weyl_for):
    return weyl_for("G2~")

import random

import pytest
from hypothesis import HealthCheck, settings

from canrel.core import get_settings
from canrel.dbl.examples import dinertia, dmain
from canrel.grpd.groups import cyclic, symmetric
from canrel.grpd.standard import group_action_groupoid, group_groupoid, pair_groupoid, trivial_groupoid
from canrel.relcat.sets import FinSet

settings.register_profile(
    "canrel",
    max_examples=40,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("canrel")


@pytest.fixture(scope="session")
def Z2():
    return cyclic(2)


@pytest.fixture(scope="session")
def Z3():
    return cyclic(3)


@pytest.fixture(scope="session")
def S3():
    return symmetric(3)


@pytest.fixture(scope="session")
def z2_groupoid(Z2):
    return group_groupoid(Z2)


@pytest.fixture(scope="session")
def z3_groupoid(Z3):
    return group_groupoid(Z3)


@pytest.fixture(scope="session")
def s3_groupoid(S3):
    return group_groupoid(S3)


@pytest.fixture(scope="session")
def pair2():
    return pair_groupoid(FinSet("M", (1, 2)))


@pytest.fixture(scope="session")
def pair3():
    return pair_groupoid(FinSet("M", (1, 2, 3)))


@pytest.fixture(scope="session")
def trivial_ab():
    return trivial_groupoid(FinSet("M", ("a", "b")))


@pytest.fixture(scope="session")
def swap_groupoid(Z2):
    """Z2 swapping x and y."""
    act = {("0", "x"): "x", ("0", "y"): "y", ("1", "x"): "y", ("1", "y"): "x"}
    return group_action_groupoid(Z2, FinSet("N", ("x", "y")), act)


@pytest.fixture(scope="session")
def fix_groupoid(Z2):
    """Z2 fixing x and y."""
    act = {(k, p): p for k in ("0", "1") for p in ("x", "y")}
    return group_action_groupoid(Z2, FinSet("N", ("x", "y")), act)


@pytest.fixture(scope="session")
def dmain_z2(z2_groupoid):
    return dmain(z2_groupoid)


@pytest.fixture(scope="session")
def dmain_z3(z3_groupoid):
    return dmain(z3_groupoid)


@pytest.fixture(scope="session")
def dinertia_z2(z2_groupoid):
    return dinertia(z2_groupoid)


@pytest.fixture(scope="session")
def dinertia_z3(z3_groupoid):
    return dinertia(z3_groupoid)


@pytest.fixture(scope="session")
def dinertia_pair2(pair2):
    return dinertia(pair2)


@pytest.fixture
def rng():
    return random.Random(get_settings().random_seed)

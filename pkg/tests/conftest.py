import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hopfq import corpus  # noqa: E402
from hopfq.comodules import regular  # noqa: E402
from hopfq.galois import make_galois  # noqa: E402


@lru_cache(maxsize=None)
def hopf(name):
    return corpus.BUNDLED[name]()


@lru_cache(maxsize=None)
def loop_hopfs():
    return tuple(corpus.loop_algebras())


@lru_cache(maxsize=None)
def galois_of(name):
    """Galois object by corpus name; bare Hopf names mean the regular comodule."""
    obj = hopf(name)
    return make_galois(regular(obj) if hasattr(obj, "lam") else obj)


@lru_cache(maxsize=None)
def loop_galois(k=0, field_index=0):
    return make_galois(regular(loop_hopfs()[2 * k + field_index]))


@pytest.fixture
def qz2():
    return hopf("qz2")


@pytest.fixture
def qz3():
    return hopf("qz3")


@pytest.fixture
def f7z3():
    return hopf("f7z3")

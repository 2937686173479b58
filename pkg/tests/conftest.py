import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).resolve().parent))

from gorenstein import FieldSpec, Quiver, build_monomial_algebra, cyclic_nakayama  # noqa: E402
from gorenstein.rep import random_representation  # noqa: E402


@pytest.fixture(scope="session")
def c3():
    return cyclic_nakayama(3)


@pytest.fixture(scope="session")
def c3_p3():
    return cyclic_nakayama(3, FieldSpec(3))


@pytest.fixture(scope="session")
def a2():
    """Path algebra of 1 -> 2: hereditary, not self-injective."""
    return build_monomial_algebra(FieldSpec(2), Quiver(2, [("a", 1, 2)]), [], name="A2")


@pytest.fixture(scope="session")
def kite():
    """Arrows a: 1 -> 2 and b: 2 -> 1 with the path ``a b`` zero; not self-injective."""
    return build_monomial_algebra(FieldSpec(2), Quiver(2, [("a", 1, 2), ("b", 2, 1)]), [("a", "b")], name="kite")


@st.composite
def modules(draw, algebra, max_total=5):
    """Random module over ``algebra`` of total dimension at most ``max_total``."""
    k = algebra.vertex_count
    dims = [draw(st.integers(0, 2)) for _ in range(k)]
    while sum(dims) > max_total:
        dims[dims.index(max(dims))] -= 1
    seed = draw(st.integers(0, 2**32 - 1))
    return random_representation(algebra, dims, np.random.default_rng(seed))


@pytest.fixture(scope="session")
def golden():
    import json

    return json.loads((Path(__file__).resolve().parent / "golden" / "derived_values.json").read_text())

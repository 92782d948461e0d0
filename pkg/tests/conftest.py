import numpy as np
import pytest
from hypothesis import strategies as st

from stadirac.sta_core import Multivector


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


small_ints = st.integers(min_value=-4, max_value=4)
int_multivectors = st.lists(small_ints, min_size=16, max_size=16).map(Multivector)
unit_floats = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)
float_multivectors = st.lists(unit_floats, min_size=16, max_size=16).map(Multivector)
field_arrays = st.lists(st.floats(min_value=-3.0, max_value=3.0, allow_nan=False),
                        min_size=8, max_size=8).map(np.array)

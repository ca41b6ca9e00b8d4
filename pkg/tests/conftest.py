import numpy as np
import pytest
from hypothesis import settings

from loret.dataset import from_arrays
from loret.schema import parse_schema

settings.register_profile("suite", deadline=None, max_examples=50)
settings.load_profile("suite")

SMALL_SCHEMA = """
id numeric identifier none
vote binary response none
gen00 binary regressor s
gen01 binary regressor s
age numeric regressor s
partyMix categorical partitioning e unknown allD allR onlyRorD
attendance numeric partitioning e
hhRank ordinal partitioning e 1 2 3+
derive ageSq regressor s square(age)
"""


@pytest.fixture
def small_schema():
    return parse_schema(SMALL_SCHEMA)


@pytest.fixture
def small_dataset(small_schema):
    rng = np.random.default_rng(11)
    n = 240
    return from_arrays(
        small_schema,
        {
            "id": np.arange(n),
            "vote": rng.integers(0, 2, n),
            "gen00": rng.integers(0, 2, n),
            "gen01": rng.integers(0, 2, n),
            "age": rng.uniform(18, 90, n),
            "partyMix": rng.integers(0, 4, n),
            "attendance": rng.uniform(0, 1, n),
            "hhRank": rng.integers(0, 3, n),
        },
    )


def make_dataset(schema_text, columns):
    return from_arrays(parse_schema(schema_text), columns)

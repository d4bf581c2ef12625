import pytest
from hypothesis import HealthCheck, settings, strategies as st

from symkron.partitions import partitions_of

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def partitions(min_weight=0, max_weight=8):
    return st.integers(min_weight, max_weight).flatmap(lambda w: st.sampled_from(partitions_of(w)))


def same_weight_pair(min_weight=1, max_weight=8):
    return st.integers(min_weight, max_weight).flatmap(
        lambda w: st.tuples(st.sampled_from(partitions_of(w)), st.sampled_from(partitions_of(w)))
    )


@pytest.fixture
def fresh_config():
    from symkron.config import config

    saved = (config.max_weight, config.threads)
    yield config
    config.max_weight, config.threads = saved

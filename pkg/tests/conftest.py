import os

import hypothesis
import pytest

from algorithms import config as sacpat_config

hypothesis.settings.register_profile("fast", max_examples=15, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=200, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "fast"))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: sweeps over many generated instances")


@pytest.fixture(autouse=True)
def default_settings():
    """Every test starts from the default settings; the CLI and some tests override them."""
    sacpat_config._settings = sacpat_config.Settings()
    yield
    sacpat_config._settings = None

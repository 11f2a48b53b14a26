import pytest

from pinchrelay import SystemConfig, UePosition


@pytest.fixture
def cfg() -> SystemConfig:
    return SystemConfig()


@pytest.fixture
def ue_mid() -> UePosition:
    return UePosition(15.0, 5.0)

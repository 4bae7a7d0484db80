import pytest
from hypothesis import settings

from colour_vertex.config import EngineConfig
from colour_vertex.controller.engine_controller import EngineController

settings.register_profile("engine", max_examples=25, deadline=None)
settings.load_profile("engine")


@pytest.fixture
def config() -> EngineConfig:
    return EngineConfig(precision_bits=256, seed=7)


@pytest.fixture
def controller(config) -> EngineController:
    return EngineController(config)

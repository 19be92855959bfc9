from pathlib import Path

import pytest

from laq.builders import trivial_algebroid
from laq.liealg import LieFiberBundle
from laq.liealg.catalog import abelian, heisenberg, sl2
from laq.utils.config import load_settings

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch):
    for name in ("LAQ_LOG_LEVEL", "LAQ_WORKERS", "LAQ_DEFAULT_WINDOW", "LAQ_SELFTEST_SEED"):
        monkeypatch.delenv(name, raising=False)
    load_settings.cache_clear()
    yield
    load_settings.cache_clear()


@pytest.fixture
def fixture_path():
    def resolve(name: str) -> Path:
        return FIXTURES / name

    return resolve


@pytest.fixture(params=["abelian2", "sl2", "heisenberg"])
def named_algebra(request):
    algebras = {"abelian2": abelian(2), "sl2": sl2(), "heisenberg": heisenberg()}
    return request.param, algebras[request.param]


@pytest.fixture
def trivial_sl2():
    return trivial_algebroid(LieFiberBundle.constant(["pt"], sl2()))

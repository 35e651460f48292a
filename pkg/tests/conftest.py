import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from sqmv.config import get_settings
from sqmv.corpus.loader import lemma_scripts, lift_corpus, registry_for
from sqmv.main import app


@pytest.fixture(scope="session")
def fixtures_path():
    return get_settings().fixtures_dir


@pytest.fixture(scope="session")
def registry():
    """Every certified lemma"""
    return registry_for()


@pytest.fixture(scope="session")
def lemmas():
    return lemma_scripts()


@pytest.fixture(scope="session")
def lstar_scripts():
    return lift_corpus()


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(scope="session")
def client():
    return TestClient(app)

from pathlib import Path

import pytest

from dmagic.cli import main
from dmagic.config.settings import Config, TestingConfig

GOLDEN_DIR = Path(__file__).resolve().parent / "golden"
BUNDLED_BFILE = Config.DATA_DIR / "b003418.txt"


@pytest.fixture
def golden():
    def read(name):
        return (GOLDEN_DIR / name).read_text(encoding="utf-8")
    return read


@pytest.fixture
def bundled_bfile():
    return BUNDLED_BFILE


@pytest.fixture
def cache_path(tmp_path):
    return tmp_path / "lcm_cache.tsv"


@pytest.fixture
def testing_config(monkeypatch, cache_path):
    monkeypatch.setenv("DMAGIC_CACHE", str(cache_path))
    monkeypatch.setenv("DMAGIC_OEIS_URL", "http://oeis.invalid/{sequence_id}/b{number}.txt")
    monkeypatch.setenv("OEIS_RETRY_BACKOFF", "0")
    monkeypatch.setenv("LOG_LEVEL", "WARNING")
    return TestingConfig()


@pytest.fixture
def run_cli(capsys, testing_config):
    def run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return run

import logging
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

ORACLE_HARD_LIMIT = 10 ** 7


class Config:
    APP_NAME = "D-magic Number Toolkit"
    APP_VERSION = "1.0.0"

    BASE_DIR = Path(__file__).resolve().parent.parent.parent
    DATA_DIR = BASE_DIR / "data"

    LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

    def __init__(self):
        # Read at construction so a changed environment is picked up by get_config()
        self.CACHE_PATH = Path(os.getenv("DMAGIC_CACHE", str(self.DATA_DIR / "lcm_cache.tsv")))
        self.BFILE_PATH = Path(os.getenv("DMAGIC_BFILE", str(self.DATA_DIR / "b003418.txt")))
        self.OEIS_URL = os.getenv("DMAGIC_OEIS_URL", "https://oeis.org/{sequence_id}/b{number}.txt")

        self.OEIS_TIMEOUT = float(os.getenv("OEIS_TIMEOUT", "30"))
        self.OEIS_MAX_BYTES = int(os.getenv("OEIS_MAX_BYTES", str(8 * 1024 * 1024)))
        self.OEIS_RETRY_BACKOFF = float(os.getenv("OEIS_RETRY_BACKOFF", "1.0"))

        self.ORACLE_MAX_BOUND = int(os.getenv("ORACLE_MAX_BOUND", str(ORACLE_HARD_LIMIT)))

        self.LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()

    def validate_config(self):
        problems = []

        if self.OEIS_TIMEOUT <= 0:
            problems.append(f"OEIS_TIMEOUT must be positive, got {self.OEIS_TIMEOUT}")
        if self.OEIS_MAX_BYTES <= 0:
            problems.append(f"OEIS_MAX_BYTES must be positive, got {self.OEIS_MAX_BYTES}")
        if self.OEIS_RETRY_BACKOFF < 0:
            problems.append(f"OEIS_RETRY_BACKOFF must not be negative, got {self.OEIS_RETRY_BACKOFF}")
        if not (1 <= self.ORACLE_MAX_BOUND <= ORACLE_HARD_LIMIT):
            problems.append(f"ORACLE_MAX_BOUND must be between 1 and {ORACLE_HARD_LIMIT}, got {self.ORACLE_MAX_BOUND}")
        if not isinstance(logging.getLevelName(self.LOG_LEVEL), int):
            problems.append(f"Unknown LOG_LEVEL: {self.LOG_LEVEL}")

        if problems:
            raise ValueError(f"Invalid configuration: {'; '.join(problems)}")

        return True

    def print_config_summary(self):
        print("=== Configuration Summary ===")
        print(f"App Name: {self.APP_NAME}")
        print(f"App Version: {self.APP_VERSION}")
        print(f"LCM Cache: {self.CACHE_PATH}")
        print(f"Bundled b-file: {self.BFILE_PATH}")
        print(f"OEIS Endpoint: {self.OEIS_URL}")
        print(f"OEIS Timeout: {self.OEIS_TIMEOUT}s, cap {self.OEIS_MAX_BYTES} bytes")
        print(f"Oracle Bound: {self.ORACLE_MAX_BOUND}")
        print(f"Log Level: {self.LOG_LEVEL}")
        print("===========================")


class DevelopmentConfig(Config):
    DEBUG = True
    TESTING = False


class ProductionConfig(Config):
    DEBUG = False
    TESTING = False


class TestingConfig(Config):
    DEBUG = False
    TESTING = True


config_map = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': ProductionConfig
}


def get_config():
    env = os.getenv('DMAGIC_ENV', 'default')
    config_class = config_map.get(env, ProductionConfig)
    return config_class()

"""
Configuration Module
Application configuration and settings
"""

import os
from pathlib import Path


class Config:
    """Application configuration"""

    # Application info
    APP_NAME = "Quest Graph"
    APP_VERSION = "1.0.0"

    # Paths
    HOME_DIR = Path(os.environ.get("QUEST_GRAPH_HOME", Path.home()))
    APP_DIR = HOME_DIR / ".quest_graph"
    DATABASE_PATH = APP_DIR / "bench_results.db"
    LOG_DIR = APP_DIR / "logs"

    # Ensure directories exist
    @classmethod
    def ensure_directories(cls):
        """Create necessary directories"""
        try:
            cls.APP_DIR.mkdir(parents=True, exist_ok=True)
            cls.LOG_DIR.mkdir(exist_ok=True)
        except OSError:
            # Read-only home: file logging and the default database are unavailable
            pass

    # Run settings
    DEFAULT_BUDGET = int(os.environ.get("QUEST_GRAPH_BUDGET", "100000"))
    DEFAULT_EXPLORATION_BUDGET = 512  # max contexts when deriving a DPDA from an agent
    DEFAULT_FSM_STATE_BUDGET = 4096

    # Benchmark settings
    DEFAULT_FQDP_CAP = 16
    DEFAULT_BENCH_C = 4
    MIN_FIT_POINTS = 5
    BENCH_WORKERS = 1

    # Database settings
    DB_ECHO = False  # Set to True for SQL debugging

    # Logging settings
    LOG_LEVEL = os.environ.get("QUEST_GRAPH_LOG_LEVEL", "INFO")
    LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


# Ensure directories are created on import
Config.ensure_directories()

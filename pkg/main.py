#!/usr/bin/env python3
"""
Quest Graph - Main Entry Point
Runs constructions, benchmarks and graph transforms from the command line
"""

import sys
import logging

from quest_graph.cli import main as cli_main
from quest_graph.utils import Config


def setup_logging():
    """Configure logging for the application"""
    handlers = [logging.StreamHandler(sys.stderr)]
    log_file = Config.LOG_DIR / "quest_graph.log"
    if Config.LOG_DIR.exists():
        handlers.insert(0, logging.FileHandler(log_file))

    logging.basicConfig(
        level=getattr(logging, Config.LOG_LEVEL),
        format=Config.LOG_FORMAT,
        handlers=handlers
    )

    logger = logging.getLogger(__name__)
    logger.info(f"Starting {Config.APP_NAME} v{Config.APP_VERSION}")
    logger.info(f"Log file: {log_file}")


def main():
    """Main application entry point"""
    # Setup logging
    setup_logging()

    # Run the requested subcommand
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == '__main__':
    main()

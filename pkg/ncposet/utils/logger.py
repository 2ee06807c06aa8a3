"""
Module provides access to logger.

This needs to be used sparingly, prefer to raise specific exceptions instead.
Artifacts go to stdout, so every sink here writes to stderr or a file.
"""
import sys
from typing import Any, Dict, List, Optional

from loguru import logger

import ncposet.constants as const

FORMAT = "<level>{level: <8}</level> <blue>{name}:L{line} {function}(...)</blue> - <level>{message}</level>"


def configure(level: str = const.DEFAULT_LOG_LEVEL, log_file: Optional[str] = None) -> None:
    handlers: List[Dict[str, Any]] = [
        {"sink": sys.stderr, "format": FORMAT, "level": level, "colorize": True},
    ]
    if log_file:
        handlers.append(
            {
                "sink": log_file,
                "rotation": "50MB",
                "retention": "10 days",
                "level": level,
                "format": "{time} {level} {name}:L{line} -\n{message}\n--------------------\n",
            }
        )
    logger.configure(handlers=handlers)


configure()
logger.enable("ncposet")

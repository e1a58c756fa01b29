#!/usr/bin/env python3
"""
monitoring/structured_logger.py - Structured logging for symcone.

- get_logger() returns a logger with a stderr handler and, when configured,
  a file handler.
- configure_logging(level, log_file) applies the settings loaded by the CLI.
- log_event(event, payload) records a dotted event name with its payload.

Both call styles are accepted:

    log_event("genfunc.build.completed", {"terms": 48})
    log_event(get_logger("oracle"), "oracle.series.completed", {...})

stdout is reserved for emitted documents; every handler here writes to
stderr or to the configured log file.
"""

from __future__ import annotations

import datetime
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

ROOT_LOGGER_NAME = "symcone"

_state: Dict[str, Any] = {"level": logging.WARNING, "log_file": None}


def _console_handler() -> logging.Handler:
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    return handler


def _file_handler(path: Path) -> logging.Handler:
    path.parent.mkdir(parents=True, exist_ok=True)
    handler = logging.FileHandler(path, encoding="utf-8")
    handler.setFormatter(
        logging.Formatter("%(asctime)s - %(levelname)s - %(message)s")
    )
    return handler


def get_logger(name: str = ROOT_LOGGER_NAME) -> logging.Logger:
    """Create or return a logger under the symcone hierarchy."""
    if name != ROOT_LOGGER_NAME and not name.startswith(ROOT_LOGGER_NAME + "."):
        name = f"{ROOT_LOGGER_NAME}.{name}"
    root = logging.getLogger(ROOT_LOGGER_NAME)
    if not root.handlers:
        root.setLevel(_state["level"])
        root.addHandler(_console_handler())
        root.propagate = False
    return logging.getLogger(name)


def configure_logging(
    level: Union[int, str] = logging.WARNING,
    log_file: Optional[Union[str, Path]] = None,
) -> logging.Logger:
    """
    Apply level and optional log file to the symcone root logger.

    Calling it again replaces the previous file handler, so repeated CLI
    invocations inside one process (tests) do not stack handlers.
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    root = get_logger(ROOT_LOGGER_NAME)
    root.setLevel(level)
    _state["level"] = level

    for handler in list(root.handlers):
        if isinstance(handler, logging.FileHandler):
            root.removeHandler(handler)
            handler.close()
    if log_file:
        root.addHandler(_file_handler(Path(log_file)))
    _state["log_file"] = log_file
    return root


_default_logger = get_logger("events")


def _format_event(event: str, data: Optional[Dict[str, Any]] = None) -> str:
    ts = datetime.datetime.now(datetime.timezone.utc).isoformat()
    msg = f"[{ts}] EVENT: {event}"
    if data:
        msg += f" | data={data}"
    return msg


def log_event(
    arg1: Union[str, logging.Logger],
    arg2: Optional[Union[str, Dict[str, Any]]] = None,
    arg3: Optional[Dict[str, Any]] = None,
) -> None:
    """
    Record a structured event at INFO level.

    Args:
        arg1:
            - If str: the event name; arg2 is the payload.
            - If Logger: the logger to use; arg2 is the event name and arg3
              the payload.
    """
    if isinstance(arg1, str):
        event = arg1
        data = arg2 if isinstance(arg2, dict) else None
        logger = _default_logger
    else:
        logger = arg1
        event = arg2 if isinstance(arg2, str) else "<unknown_event>"
        data = arg3 if isinstance(arg3, dict) else None

    logger.info(_format_event(event, data))


# End of monitoring/structured_logger.py

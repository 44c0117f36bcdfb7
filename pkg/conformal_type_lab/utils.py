import logging
import math
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

INFINITY_TOKEN = "inf"

_NATURAL_SPLIT = re.compile(r"(\d+)")


def create_logger(
    name: str, log_level: int = logging.INFO, log_file: Optional[str] = None
) -> logging.Logger:
    """Create a configured logger instance.

    Console output goes to stderr so that stdout stays reserved for reports.

    Args:
        name (str): The name for the logger, typically __name__ of the
            calling module.
        log_level (int): The minimum logging level to be processed (e.g.,
            logging.INFO).
        log_file (Optional[str]): Path to the log file. If provided, logs
            will also be written to this file.

    Returns:
        logging.Logger: The configured logger instance.
    """
    logger = logging.getLogger(name)
    logger.setLevel(log_level)
    logger.handlers.clear()
    logger.propagate = False

    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def set_log_level(log_level: int) -> None:
    """Apply a log level to every logger created by this package."""
    for name, logger in logging.root.manager.loggerDict.items():
        if name.startswith("conformal_type_lab") and isinstance(logger, logging.Logger):
            logger.setLevel(log_level)


def natural_key(identifier: str) -> List[Union[int, str]]:
    """Sort key that orders ``v2`` before ``v10``.

    Integer chunks compare numerically; text chunks compare lexically. Every id maps to a
    list alternating text and integers, so keys of different ids are always comparable.
    """
    parts = _NATURAL_SPLIT.split(identifier)
    return [int(part) if index % 2 else part for index, part in enumerate(parts)]


def sorted_ids(ids) -> List[str]:
    return sorted(ids, key=natural_key)


def parse_half_perimeter(token: str) -> Union[int, float]:
    """Parse a half-perimeter token: a positive integer or ``inf`` (returned as math.inf)."""
    if token == INFINITY_TOKEN or token == "∞":
        return math.inf
    value = int(token)
    if value < 1:
        raise ValueError(f"half-perimeter must be >= 1 or 'inf', got {token!r}")
    return value


def format_half_perimeter(value: Union[int, float]) -> str:
    return INFINITY_TOKEN if math.isinf(value) else str(int(value))


def fraction_to_dict(value: Optional[Fraction]) -> Optional[Dict[str, int]]:
    """Serialize an exact rational as a num/den pair."""
    if value is None:
        return None
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def to_fraction(value: Any) -> Fraction:
    """Convert CLI or config input to an exact rational.

    Strings such as ``"1/3"`` or ``"0.25"`` are read exactly; floats are taken at their
    exact binary value.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)

"""
Base class for the line-oriented text formats.

A format parses text into a library object and serializes it back. Lines are split into
whitespace-separated tokens; ``#`` starts a comment and blank lines are skipped. Parse
errors carry the 1-based line and column of the offending token.
"""

import math
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Generic, Iterator, List, NamedTuple, Optional, TypeVar, Union

from conformal_type_lab.config import config
from conformal_type_lab.errors import ParseError
from conformal_type_lab.utils import INFINITY_TOKEN, create_logger

T = TypeVar('T')


class Token(NamedTuple):
    text: str
    column: int


class Line(NamedTuple):
    number: int
    tokens: List[Token]

    @property
    def keyword(self) -> str:
        return self.tokens[0].text


def tokenize(text: str) -> Iterator[Line]:
    """Non-empty lines with comments removed, as positioned tokens."""
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = []
        position = 0
        for word in content.split():
            position = content.index(word, position)
            tokens.append(Token(word, position + 1))
            position += len(word)
        if tokens:
            yield Line(number, tokens)


def format_float(value: float) -> str:
    """Shortest round-tripping decimal, ``inf`` for infinity."""
    if math.isinf(value) and value > 0:
        return INFINITY_TOKEN
    return repr(float(value))


class TextFormat(ABC, Generic[T]):
    """
    Abstract base class for the text formats.

    Subclasses implement :meth:`parse` and :meth:`serialize`; reading and writing files is
    shared.
    """

    #: File suffix, with the dot
    suffix: str = ""

    def __init__(self):
        self.logger = create_logger(
            name=f"{self.__class__.__module__}.{self.__class__.__name__}",
            log_level=config.log_level,
            log_file=config.log_file,
        )

    @abstractmethod
    def parse(self, text: str, path: str = "<string>") -> T:
        """
        Parse the text of a file.

        Args:
            text (str): File content.
            path (str): Name used in error messages.

        Raises:
            ParseError: On malformed input.
        """

    @abstractmethod
    def serialize(self, value: T) -> str:
        """Canonical text of ``value``; parsing it gives back an equal object."""

    def read(self, path: Union[str, Path]) -> T:
        path = Path(path)
        value = self.parse(path.read_text(), str(path))
        self.logger.info(f"Read {path}")
        return value

    def write(self, value: T, path: Union[str, Path]) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.serialize(value))
        self.logger.info(f"Wrote {path}")

    # ------------------------------------------------------------------
    # Token helpers shared by the formats
    # ------------------------------------------------------------------
    @staticmethod
    def error(path: str, line: Line, index: int, message: str) -> ParseError:
        tokens = line.tokens
        column = tokens[index].column if index < len(tokens) else \
            tokens[-1].column + len(tokens[-1].text)
        return ParseError(path, line.number, column, message)

    @staticmethod
    def empty(path: str, expected: str) -> ParseError:
        return ParseError(path, 1, 1, f"empty file, expected {expected}")

    def expect_count(self, path: str, line: Line, minimum: int,
                     maximum: Optional[int] = None) -> None:
        count = len(line.tokens)
        if count < minimum:
            raise self.error(path, line, count, f"'{line.keyword}' needs {minimum - 1} fields")
        if maximum is not None and count > maximum:
            raise self.error(path, line, maximum, f"unexpected field after '{line.keyword}'")

    def integer(self, path: str, line: Line, index: int) -> int:
        text = line.tokens[index].text
        try:
            return int(text)
        except ValueError:
            raise self.error(path, line, index, f"expected an integer, got {text!r}") from None

    def number(self, path: str, line: Line, index: int, allow_inf: bool = False) -> float:
        text = line.tokens[index].text
        if text == INFINITY_TOKEN:
            if allow_inf:
                return math.inf
            raise self.error(path, line, index, "infinity is not allowed here")
        try:
            value = float(text)
        except ValueError:
            raise self.error(path, line, index, f"expected a number, got {text!r}") from None
        if not math.isfinite(value):
            raise self.error(path, line, index, f"expected a finite number, got {text!r}")
        return value

    def keyed_number(self, path: str, line: Line, index: int, key: str) -> float:
        text = line.tokens[index].text
        prefix = f"{key}="
        if not text.startswith(prefix):
            raise self.error(path, line, index, f"expected {prefix}<number>, got {text!r}")
        try:
            value = float(text[len(prefix):])
        except ValueError:
            raise self.error(path, line, index, f"bad number in {text!r}") from None
        if not math.isfinite(value):
            raise self.error(path, line, index, f"expected a finite number in {text!r}")
        return value

"""Plain-text configuration files and exact JSON encoding.

File format::

    # comment
    points 2 5        # or: vectors <rank> <n>
    0 0
    4 0
    5 3
    2 5
    -1 3

Entries are integers or ``a/b`` rationals.  A row of width zero (rank-0
vectors) is written as a single ``-``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction

from .config import ConfigurationError, PointConfiguration, VectorConfiguration


class ConfigFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class ConfigFile:
    kind: str
    dim: int
    rows: tuple

    @property
    def n(self) -> int:
        return len(self.rows)


def parse_rational(token: str) -> Fraction:
    if token.count("/") > 1 or "." in token or "e" in token.lower():
        raise ValueError(f"not an exact rational: {token!r}")
    num, _, den = token.partition("/")
    q = Fraction(int(num), int(den)) if den else Fraction(int(num))
    return q


def format_rational(q) -> str:
    """Integers as ``3``, everything else as ``a/b`` (file format)."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_config(text: str) -> ConfigFile:
    header = None
    rows = []
    expected = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 3 or tokens[0] not in ("points", "vectors"):
                raise ConfigFileError("header must be 'points <d> <n>' or 'vectors <r> <n>'", lineno)
            try:
                dim, n = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ConfigFileError("header sizes must be integers", lineno) from None
            if dim < 0 or n < 0:
                raise ConfigFileError("header sizes must be nonnegative", lineno)
            header, expected = (tokens[0], dim), n
            continue
        kind, dim = header
        if len(rows) == expected:
            raise ConfigFileError(f"more than the declared {expected} rows", lineno)
        if dim == 0:
            if tokens != ["-"]:
                raise ConfigFileError("rows of width 0 are written as '-'", lineno)
            rows.append(())
            continue
        if len(tokens) != dim:
            raise ConfigFileError(f"expected {dim} entries, found {len(tokens)}", lineno)
        try:
            rows.append(tuple(parse_rational(t) for t in tokens))
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigFileError(str(exc), lineno) from None
    if header is None:
        raise ConfigFileError("empty file: missing header")
    if len(rows) != expected:
        raise ConfigFileError(f"declared {expected} rows, found {len(rows)}")
    return ConfigFile(header[0], header[1], tuple(rows))


def to_configuration(cf: ConfigFile):
    """Build the configuration object; raises ConfigurationError if degenerate."""
    if cf.kind == "points":
        return PointConfiguration(cf.dim, cf.rows)
    return VectorConfiguration(cf.dim, cf.rows)


def load(text: str):
    return to_configuration(parse_config(text))


def format_config(C) -> str:
    if isinstance(C, PointConfiguration):
        head, rows, dim = "points", C.points, C.dim
    elif isinstance(C, VectorConfiguration):
        head, rows, dim = "vectors", C.vectors, C.rank
    else:
        raise TypeError(f"cannot write {type(C).__name__}")
    out = [f"{head} {dim} {len(rows)}"]
    for r in rows:
        out.append(" ".join(format_rational(x) for x in r) if dim else "-")
    return "\n".join(out) + "\n"


def sha256(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


# ---------------------------------------------------------------------------
# JSON: every rational becomes an exact "a/b" string

def q(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def unq(s: str) -> Fraction:
    return parse_rational(s)


def qvec(v) -> list[str]:
    return [q(x) for x in v]


def unqvec(v) -> tuple:
    return tuple(unq(x) for x in v)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


__all__ = [
    "ConfigFile", "ConfigFileError", "ConfigurationError", "parse_config",
    "to_configuration", "load", "format_config", "format_rational",
    "parse_rational", "sha256", "q", "unq", "qvec", "unqvec", "dumps",
]

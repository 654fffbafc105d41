"""Binary generating codes ``0^{s_1} 1^{t_1} ... 0^{s_k} 1^{t_k}``.

A code is stored as its maximal run-length pairs ``(s_i, t_i)``. Text input
comes either as raw bits (``"0101"``) or in exponent notation
(``"(0^3 1^2)(0 1)"``); the two are told apart by the presence of ``^``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    EmptyInput,
    IllegalCharacter,
    LeadingOne,
    TrailingZero,
    ZeroExponent,
)

__all__ = [
    "GeneratingCode",
    "parse_code",
    "expand_code",
    "format_code",
    "enumerate_codes",
]

_SKIP = set(" \t\r\n()")


@dataclass(frozen=True)
class GeneratingCode:
    """Normalized generating code: a tuple of ``(s, t)`` exponent pairs."""

    strings: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple((int(s), int(t)) for s, t in self.strings)
        if not pairs:
            raise EmptyInput("a generating code needs at least one string")
        for i, (s, t) in enumerate(pairs):
            if s < 1 or t < 1:
                raise ZeroExponent(f"string {i + 1} has exponents ({s}, {t}); both must be >= 1")
        object.__setattr__(self, "strings", pairs)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "GeneratingCode":
        return cls(tuple(pairs))

    @classmethod
    def from_bits(cls, bits: str) -> "GeneratingCode":
        """Build from a raw ``0``/``1`` string, merging runs."""
        if not bits:
            raise EmptyInput("empty bit string")
        if bits[0] != "0":
            raise LeadingOne("code must start with 0" + (" and end with 1" if bits[-1] != "1" else ""), 0)
        if bits[-1] != "1":
            raise TrailingZero("code must end with 1", len(bits) - 1)
        pairs = []
        for bit, grp in itertools.groupby(bits):
            size = sum(1 for _ in grp)
            if bit == "0":
                pairs.append([size, 0])
            else:
                pairs[-1][1] = size
        return cls(tuple((s, t) for s, t in pairs))

    @property
    def k(self) -> int:
        return len(self.strings)

    @property
    def n(self) -> int:
        return sum(s + t for s, t in self.strings)

    @property
    def s(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.strings)

    @property
    def t(self) -> tuple[int, ...]:
        return tuple(t for _, t in self.strings)

    @property
    def bits(self) -> str:
        return "".join("0" * s + "1" * t for s, t in self.strings)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.strings)

    def __len__(self) -> int:
        return len(self.strings)

    def __str__(self) -> str:
        return format_code(self)


def _token(bit: str, exp: int) -> str:
    return bit if exp == 1 else f"{bit}^{exp}"


def format_code(code: GeneratingCode) -> str:
    """Compressed text form, e.g. ``(0^3 1^2)(0 1)``."""
    return "".join(f"({_token('0', s)} {_token('1', t)})" for s, t in code.strings)


def parse_code(text: str) -> GeneratingCode:
    """Parse raw or exponent-notation text into a normalized code.

    >>> parse_code("(0^3 1^2)(0^8 1^2)").strings
    ((3, 2), (8, 2))
    >>> parse_code("0101").strings
    ((1, 1), (1, 1))
    """
    if text is None or not text.strip():
        raise EmptyInput("empty code text")
    runs: list[tuple[str, int, int]] = []  # (bit, count, position)
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in _SKIP:
            i += 1
            continue
        if ch not in "01":
            raise IllegalCharacter(f"unexpected character {ch!r}", i)
        start = i
        i += 1
        count = 1
        if i < n and text[i] == "^":
            i += 1
            j = i
            while i < n and text[i].isdigit():
                i += 1
            if j == i:
                raise IllegalCharacter("expected an exponent after '^'", j)
            count = int(text[j:i])
            if count == 0:
                raise ZeroExponent("exponent must be positive", j)
        runs.append((ch, count, start))
    if not runs:
        raise EmptyInput("code text contains no bits")
    bits = "".join(bit * count for bit, count, _ in runs)
    if bits[0] != "0":
        raise LeadingOne(
            "code must start with 0" + (" and end with 1" if bits[-1] != "1" else ""),
            runs[0][2],
        )
    if bits[-1] != "1":
        raise TrailingZero("code must end with 1", runs[-1][2])
    return GeneratingCode.from_bits(bits)


def expand_code(code: GeneratingCode) -> str:
    """Return the length-n bit string of ``code``."""
    return code.bits


def enumerate_codes(max_n: int, min_n: int = 2) -> Iterator[GeneratingCode]:
    """All valid codes with expanded length in ``[min_n, max_n]``.

    Ordered by length, then lexicographically by bit string.
    """
    for n in range(max(min_n, 2), max_n + 1):
        for mid in itertools.product("01", repeat=n - 2):
            yield GeneratingCode.from_bits("0" + "".join(mid) + "1")

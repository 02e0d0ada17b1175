"""Integers written as a block of one digit followed by a block of another."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["InvalidPattern", "ConcatPattern", "concat_value", "decompose", "repdigit_value"]


class InvalidPattern(ValueError):
    pass


@dataclass(frozen=True)
class ConcatPattern:
    """``ell`` copies of ``d1`` followed by ``m`` copies of ``d2``."""

    d1: int
    d2: int
    ell: int
    m: int

    def __post_init__(self):
        if not (1 <= self.d1 <= 9 and 0 <= self.d2 <= 9):
            raise InvalidPattern(f"digits out of range: {self.d1}, {self.d2}")
        if self.d1 == self.d2:
            raise InvalidPattern("d1 == d2 is a plain repdigit, not a concatenation")
        if self.ell < 1 or self.m < 1:
            raise InvalidPattern("block lengths must be positive")

    def as_string(self) -> str:
        return str(self.d1) * self.ell + str(self.d2) * self.m


def repdigit_value(d: int, k: int) -> int:
    if not 0 <= d <= 9 or k < 1:
        raise ValueError("need 0 <= d <= 9 and k >= 1")
    return d * (10 ** k - 1) // 9


def concat_value(p: ConcatPattern) -> int:
    # 9 N = d1 10^(ell+m) - (d1 - d2) 10^m - d2
    nine_n = p.d1 * 10 ** (p.ell + p.m) - (p.d1 - p.d2) * 10 ** p.m - p.d2
    n, r = divmod(nine_n, 9)
    assert r == 0
    return n


def decompose(N: int) -> ConcatPattern | None:
    """The pattern whose value is N, if N's decimal string has exactly two runs."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    s = str(N)
    i = 1
    while i < len(s) and s[i] == s[0]:
        i += 1
    if i == len(s) or s[i:] != s[i] * (len(s) - i):
        return None
    return ConcatPattern(int(s[0]), int(s[i]), i, len(s) - i)

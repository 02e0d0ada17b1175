"""Exhaustive search for Perrin numbers made of two distinct repdigit blocks."""

from __future__ import annotations

from dataclasses import dataclass

from .repdigits import ConcatPattern, concat_value, decompose
from .sequences import SequenceCache, default_cache, term

__all__ = ["SolutionRecord", "brute_search", "verify_candidate", "excluded_repdigits"]


@dataclass(frozen=True)
class SolutionRecord:
    n: int
    value: int
    pattern: ConcatPattern

    def __post_init__(self):
        if concat_value(self.pattern) != self.value:
            raise ValueError("pattern does not encode value")

    def as_dict(self) -> dict:
        p = self.pattern
        return {"n": self.n, "value": str(self.value), "d1": p.d1, "d2": p.d2, "ell": p.ell, "m": p.m}


def verify_candidate(n: int, cache: SequenceCache | None = None) -> SolutionRecord | None:
    value = term(cache or default_cache(), n)
    pattern = decompose(value)
    return None if pattern is None else SolutionRecord(n, value, pattern)


def brute_search(n_min: int, n_max: int, cache: SequenceCache | None = None) -> list[SolutionRecord]:
    """All n in [n_min, n_max] with P_n a concatenation of two distinct repdigits."""
    if not 0 <= n_min <= n_max:
        raise ValueError("need 0 <= n_min <= n_max")
    cache = cache or default_cache()
    cache.extend_to(n_max)
    found = []
    for n in range(n_min, n_max + 1):
        rec = verify_candidate(n, cache)
        if rec is not None:
            found.append(rec)
    return found


def excluded_repdigits(n_min: int, n_max: int, cache: SequenceCache | None = None) -> list[tuple[int, int]]:
    """(n, P_n) where P_n is a repdigit with at least two digits (the d1 == d2 case)."""
    cache = cache or default_cache()
    out = []
    for n in range(n_min, n_max + 1):
        s = str(term(cache, n))
        if len(s) > 1 and s == s[0] * len(s):
            out.append((n, int(s)))
    return out

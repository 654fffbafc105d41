"""Metric dimension of threshold and chain graphs straight from the code.

Both engines are linear in the number of strings. The threshold engine adds
one increment per appended string ``(s, t)``:

========================  ==================  ====================
case                      plain prefix        star-like prefix
========================  ==================  ====================
``s > 1, t > 1``  (i)     ``s + t - 2``       ``s + t - 1``
``s > 1, t = 1``  (ii)    ``s - 1``           ``s``
``s = 1, t > 1``  (iii)   ``t``               ``t``
``s = t = 1``     (iv)    ``1``               ``1``
========================  ==================  ====================

A prefix is star-like when some earlier string has ``s_i > 1, t_i = 1``
and every string after it is ``(1, 1)``. For the second string this is the
plain star ``0^s 1`` case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .code import GeneratingCode

__all__ = [
    "Step",
    "BetaResult",
    "BetaBounds",
    "beta_string",
    "beta_threshold",
    "beta_chain",
    "beta_bounds",
    "general_bounds",
]


@dataclass(frozen=True)
class Step:
    string: int  # 1-based string index
    case: str
    increment: int


@dataclass(frozen=True)
class BetaResult:
    value: int
    trace: tuple[Step, ...]
    family: str

    def cases(self) -> list[str]:
        return [st.case for st in self.trace]


@dataclass(frozen=True)
class BetaBounds:
    lower: int
    upper: int
    lower_attained: bool
    upper_attained: bool

    def __iter__(self):
        return iter((self.lower, self.upper))

    def contains(self, value: int) -> bool:
        return self.lower <= value <= self.upper


def beta_string(s: int, t: int) -> int:
    """Metric dimension of the threshold graph of ``0^s 1^t``.

    ``s = 1`` realizes the complete graph ``K_{t+1}``.
    """
    if s < 1 or t < 1:
        raise ValueError("s and t must be positive")
    return s + t - 2 if s > 1 else t


def _star_like(strings, j: int) -> int | None:
    """Index of the string that makes the prefix before ``j`` star-like."""
    for i in range(j - 1, -1, -1):
        s, t = strings[i]
        if s > 1 and t == 1:
            return i
        if (s, t) != (1, 1):
            return None
    return None


def _increment(s: int, t: int, starlike: bool) -> tuple[str, int]:
    if s > 1 and t > 1:
        return ("i", s + t - 1) if starlike else ("i", s + t - 2)
    if s > 1:
        return ("ii", s) if starlike else ("ii", s - 1)
    if t > 1:
        return "iii", t
    return "iv", 1


def beta_threshold(code: GeneratingCode) -> BetaResult:
    strings = code.strings
    s1, t1 = strings[0]
    trace = [Step(1, "lemma" if s1 > 1 else "complete", beta_string(s1, t1))]
    for j in range(1, len(strings)):
        s, t = strings[j]
        anchor = _star_like(strings, j) if s > 1 else None
        case, inc = _increment(s, t, anchor is not None)
        if anchor is not None:
            case += "/star" if j == 1 else "/step"
        trace.append(Step(j + 1, case, inc))
    return BetaResult(sum(st.increment for st in trace), tuple(trace), "threshold")


def beta_chain(code: GeneratingCode, *, literal: bool = False) -> BetaResult:
    """Metric dimension of the chain graph realized by ``code``.

    The first two strings follow the two-string chain rules, later strings
    the threshold increments. By default two refinements are applied that
    exhaustive search shows are needed when the code starts with ``(1, 1)``
    (a lone edge): case (iii) on that seed adds ``t - 1``, and a prefix made
    only of ``(1, 1)`` strings (a path) counts as star-like for later strings.
    ``literal=True`` turns both off.
    """
    strings = code.strings
    s1, t1 = strings[0]
    k2_seed = (s1, t1) == (1, 1)
    if len(strings) == 1:
        base = 1 if k2_seed else s1 + t1 - 2
        return BetaResult(base, (Step(1, "K2" if k2_seed else "lemma", base),), "chain")

    trace = [Step(1, "K2" if k2_seed else "lemma", 1 if k2_seed else s1 + t1 - 2)]
    s, t = strings[1]
    star = s1 > 1 and t1 == 1
    if s == 1 and t == 1:
        # (1,1)(1,1) is the path P4
        trace.append(Step(2, "iv/P4", 0) if k2_seed else Step(2, "iv", 1))
    elif s == 1 and k2_seed and not literal:
        trace.append(Step(2, "iii/K2", t - 1))
    else:
        case, inc = _increment(s, t, star and s > 1)
        if star and s > 1:
            case += "/star"
        trace.append(Step(2, case, inc))

    for j in range(2, len(strings)):
        s, t = strings[j]
        anchor = _star_like(strings, j) if s > 1 else None
        path_prefix = (
            not literal and s > 1 and anchor is None and all(x == (1, 1) for x in strings[:j])
        )
        case, inc = _increment(s, t, anchor is not None or path_prefix)
        if anchor is not None:
            case += "/step"
        elif path_prefix:
            case += "/path"
        trace.append(Step(j + 1, case, inc))
    return BetaResult(sum(st.increment for st in trace), tuple(trace), "chain")


def beta_bounds(code: GeneratingCode) -> BetaBounds:
    """Code-level bounds ``sum(s+t-2) <= beta <= sum(s+t-1)``."""
    lower = sum(s + t - 2 for s, t in code.strings)
    return BetaBounds(
        lower=lower,
        upper=lower + code.k,
        lower_attained=all(s > 1 and t > 1 for s, t in code.strings),
        upper_attained=all(s == 1 for s in code.s),
    )


def general_bounds(n: int, d: int) -> tuple[int, int]:
    """Bounds for any connected graph of order n and diameter d.

    The lower bound is the least positive k with ``k + d**k >= n``.
    """
    if n < 2:
        raise ValueError("order must be at least 2")
    if not 1 <= d <= n - 1:
        raise ValueError(f"diameter {d} impossible for order {n}")
    k = 1
    while k + d**k < n:
        k += 1
    return k, n - d

"""L(2,1) labelings: closed form for threshold graphs, explicit coloring for chain graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .code import GeneratingCode
from .errors import SizeMismatch
from .graph import Graph, distance_matrix

__all__ = [
    "Labeling",
    "ChainPartition",
    "ThresholdLambda",
    "ChainLambda",
    "ChainBounds",
    "Stage",
    "lambda_threshold",
    "extend_diameter_two",
    "lambda_chain",
    "lambda_chain_bounds",
    "verify_labeling",
]


@dataclass(frozen=True)
class Labeling:
    colors: tuple[int, ...]
    span: int
    holes: tuple[int, ...]

    @classmethod
    def from_colors(cls, colors: Sequence[int]) -> "Labeling":
        cols = tuple(int(c) for c in colors)
        if not cols:
            return cls((), 0, ())
        if min(cols) < 0:
            raise ValueError("colors must be non-negative")
        lo, hi = min(cols), max(cols)
        used = set(cols)
        return cls(cols, hi - lo, tuple(c for c in range(lo + 1, hi) if c not in used))


@dataclass(frozen=True)
class ChainPartition:
    """``U_i`` (size ``m[i]``) is joined to ``V_1 .. V_{l+1-i}`` (sizes ``nn``)."""

    m: tuple[int, ...]
    nn: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        object.__setattr__(self, "nn", tuple(int(x) for x in self.nn))
        if not self.m or len(self.m) != len(self.nn):
            raise ValueError("m and nn must be non-empty and of equal length")
        if min(self.m + self.nn) < 1:
            raise ValueError("all cell sizes must be positive")

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.m)

    @classmethod
    def from_code(cls, code: GeneratingCode) -> "ChainPartition":
        # the 1-cell of the last string sees every 0-cell, so it is V_1
        return cls(code.s, tuple(reversed(code.t)))

    def to_code(self) -> GeneratingCode:
        return GeneratingCode(tuple(zip(self.m, reversed(self.nn))))


@dataclass(frozen=True)
class ThresholdLambda:
    span: int
    holes_per_stage: tuple[int, ...]  # h_1 .. h_k

    def __iter__(self):
        return iter((self.span, list(self.holes_per_stage)))


@dataclass(frozen=True)
class Stage:
    index: int  # i of V_i
    pooled: int  # colors released by U_{l+2-i} (plus the hole at stage 2)
    reused: int
    fresh: int
    credit: int  # reusable colors left after the stage


@dataclass(frozen=True)
class ChainLambda:
    span: int
    labeling: Labeling
    stages: tuple[Stage, ...]

    def __iter__(self):
        return iter((self.span, self.labeling))


@dataclass(frozen=True)
class ChainBounds:
    lower: int
    upper: int
    min_attained: bool
    max_attained: bool

    def __iter__(self):
        return iter((self.lower, self.upper))


def lambda_threshold(code: GeneratingCode) -> ThresholdLambda:
    """Closed form ``2*sum(t) + s_1 - 1 + sum(max(s_{i+1} - h_i, 0))``.

    ``h_i = t_i + max(t_{i-1} - s_i, 0)`` with ``t_0 = 0`` counts the holes
    available for the next independent cell.

    >>> lambda_threshold(GeneratingCode(((3, 2),))).span
    6
    """
    strings = code.strings
    h = []
    t_prev = 0
    for s, t in strings:
        h.append(t + max(t_prev - s, 0))
        t_prev = t
    span = 2 * sum(code.t) + strings[0][0] - 1
    span += sum(max(strings[i + 1][0] - h[i], 0) for i in range(len(strings) - 1))
    return ThresholdLambda(span, tuple(h))


def extend_diameter_two(s: int, k: int, m: int, n: int) -> int:
    """Span after adding ``m`` isolated then ``n`` dominating vertices to a
    diameter-two graph of span ``s`` whose optimal coloring has ``k`` holes."""
    if min(s, k, m, n) < 0:
        raise ValueError("arguments must be non-negative")
    return s + max(m - k, 0) + 2 * n


def lambda_chain(p: ChainPartition) -> ChainLambda:
    """Explicit L(2,1) coloring of the chain graph of ``p``.

    The U cells take ``0 .. M-1`` in order, ``M`` is left as a hole and
    ``V_1`` continues at ``M+1``. ``V_i`` is at distance three from the cells
    ``U_{l+2-i} ..``, so their colors above ``P_{l+1-i}`` become reusable;
    each V vertex takes the largest reusable color and otherwise a fresh one
    above the current maximum. The labeling is in construction order of
    ``p.to_code()``.
    """
    l, m, nn = p.l, p.m, p.nn
    pref = np.concatenate(([0], np.cumsum(m))).tolist()
    total = pref[-1]
    u_cols = [list(range(pref[i], pref[i + 1])) for i in range(l)]
    v_cols: list[list[int]] = [list(range(total + 1, total + 1 + nn[0]))]
    top = total + nn[0]
    pool: list[int] = []
    stages = [Stage(1, 0, 0, nn[0], 0)]
    for i in range(2, l + 1):
        # V_i misses U_{l+2-i}; colors in (P_{l+1-i}, P_{l+2-i}] are clear of its neighbors
        released = list(range(pref[l + 1 - i] + 1, pref[l + 2 - i] + 1))
        pool.extend(released)
        pool.sort()
        cols = []
        reused = fresh = 0
        for _ in range(nn[i - 1]):
            if pool:
                cols.append(pool.pop())
                reused += 1
            else:
                top += 1
                cols.append(top)
                fresh += 1
        v_cols.append(cols)
        stages.append(Stage(i, len(released), reused, fresh, len(pool)))

    colors: list[int] = []
    for j in range(l):
        colors.extend(u_cols[j])
        colors.extend(v_cols[l - 1 - j])  # the 1-cell of string j+1 is V_{l-j}
    lab = Labeling.from_colors(colors)
    return ChainLambda(max(colors), lab, tuple(stages))


def lambda_chain_bounds(p: ChainPartition) -> ChainBounds:
    """``sum(m) + n_1 <= lambda <= sum(m) + n_1 + sum(n_{i+1} - m_{l+1-i})``.

    The correction sum can be negative, so the upper value may fall below
    the lower one; it is returned as computed.
    """
    l, m, nn = p.l, p.m, p.nn
    lower = sum(m) + nn[0]
    gaps = [nn[i] - m[l - i] for i in range(1, l)]
    return ChainBounds(
        lower=lower,
        upper=lower + sum(gaps),
        min_attained=all(g <= 0 for g in gaps),
        max_attained=all(g > 0 for g in gaps),
    )


def verify_labeling(g: Graph, lab: Labeling) -> bool:
    if len(lab.colors) != g.n:
        raise SizeMismatch(f"labeling has {len(lab.colors)} colors for {g.n} vertices")
    if g.n == 0:
        return True
    if Labeling.from_colors(lab.colors) != lab:
        return False
    c = np.asarray(lab.colors, dtype=np.int64)
    gap = np.abs(c[:, None] - c[None, :])
    dist = distance_matrix(g)
    return bool(np.all(gap[dist == 1] >= 2) and np.all(gap[dist == 2] >= 1))

"""Threshold dimension and restricted threshold dimension from the code.

``tau`` is the least metric dimension over all spanning supergraphs;
``tau_r`` restricts the supergraphs to threshold graphs. The ``tau_r``
engine also returns the supergraph it used, as a code whose bits dominate
the input's bits position by position (so it is an edge-superset under the
construction-order identification).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .code import GeneratingCode
from .errors import InapplicableInput
from .metric import beta_threshold

__all__ = [
    "TauResult",
    "TauRResult",
    "tau_string",
    "tau_code",
    "tau_r_string",
    "tau_r_code",
    "rewrite_string",
    "alternate_substitution",
]


@dataclass(frozen=True)
class TauResult:
    value: int | None
    witness_k: int | None
    applicable: bool
    clause: str | None = None
    condition_trace: tuple[str, ...] = field(default=())


@dataclass(frozen=True)
class TauRResult:
    value: int
    rewritten_code: GeneratingCode


def _least_k(start: int, stop: int | None, feasible) -> int | None:
    """Least integer k in [start, stop] with feasible(k); stop=None is unbounded.

    Only used with predicates that become true once k is large enough.
    """
    k = start
    while stop is None or k <= stop:
        if feasible(k):
            return k
        k += 1
    return None


def tau_string(s: int, t: int) -> TauResult:
    """Threshold dimension of ``0^s 1^t`` for ``s >= 3``.

    >>> tau_string(2359, 15).value, tau_string(2359, 15).witness_k
    (25, 11)
    """
    if s < 3:
        raise InapplicableInput(f"needs s >= 3, got s={s}")
    if t < 1:
        raise ValueError("t must be positive")
    # k = s satisfies the inequality, so the scan always ends
    k = _least_k(2, s, lambda k: s - k <= (1 << k) - 1)
    return TauResult(t - 1 + k, k, True, "lemma", (f"lemma: k={k}",))


def _clause_i(code: GeneratingCode):
    """k1 vertices chosen inside the last independent cell."""
    n, (sk, tk) = code.n, code.strings[-1]
    outside = n - tk
    k1 = _least_k(2, sk - 1, lambda k: outside - k <= (1 << k) - 1)
    if k1 is None:
        return None
    return (tk - 1) + k1, k1


def _two_strings(code: GeneratingCode, trace: list[str]):
    (s1, t1), (s2, t2) = code.strings
    cap = (1 << s2) - 1
    hit = _clause_i(code)
    if hit:
        trace.append(f"i: k1={hit[1]}")
        return "i", hit
    trace.append("i: no k1 in [2, s2-1]")
    if t1 >= cap:
        m1 = t1 - (1 << s2) + 1
        k2 = _least_k(1, None, lambda k: s1 - k <= (1 << (s2 + k)) - (1 << s2))
        trace.append(f"ii: m1={m1}, k2={k2}")
        return "ii", ((t2 - 1) + s2 + m1 + k2, k2)
    trace.append("ii: t1 < 2^s2 - 1")
    m2 = cap - t1
    k2 = _least_k(1, None, lambda k: s1 - m2 - k <= (1 << (s2 + k)) - (1 << s2))
    trace.append(f"iii: m2={m2}, k2={k2}")
    return "iii", ((t2 - 1) + s2 + k2, k2)


def _three_strings(code: GeneratingCode, trace: list[str]):
    (s1, t1), (s2, t2), (s3, t3) = code.strings
    cap = (1 << s3) - 1
    grow = lambda rest: (lambda k: rest - k <= (1 << (s3 + k)) - (1 << s3))  # noqa: E731
    hit = _clause_i(code)
    if hit:
        trace.append(f"i: k1={hit[1]}")
        return "i", hit
    trace.append("i: no k1 in [2, s3-1]")
    if t2 >= cap:
        k2 = _least_k(1, None, grow(s1 + t1 + s2))
        trace.append(f"ii: k2={k2}")
        return "ii", ((t3 - 1) + s3 + (t2 - cap) + k2, k2)
    trace.append("ii: t2 < 2^s3 - 1")
    if t1 - (cap - t2) >= (1 << (s2 + s3)) - (1 << s3):
        k3 = _least_k(1, None, grow(s1 + s2))
        trace.append(f"iii: k3={k3}")
        return "iii", ((t3 - 1) + s3 + (t1 + t2 + 1 - (1 << (s2 + s3))) + k3, k3)
    trace.append("iii: hypothesis fails")
    head = s1 + t1 + s2 + t2
    if t1 + t2 < cap and head >= cap:
        k3 = _least_k(1, None, grow(head))
        trace.append(f"iv: k3={k3}")
        return "iv", ((t3 - 1) + s3 + k3, k3)
    trace.append("iv: hypothesis fails")
    return None


def _many_strings(code: GeneratingCode, trace: list[str]):
    strings = code.strings
    sk, tk = strings[-1]
    if all(s >= t for s, t in strings):
        hit = _clause_i(code)
        if hit:
            trace.append(f"i: k1={hit[1]}")
            return "i", hit
        trace.append("i: no k1 in [2, s_k-1]")
    else:
        trace.append("i: needs s_i >= t_i for every string")
    cap = (1 << sk) - 1
    head = sum(s + t for s, t in strings[:-1])
    if sum(t for _, t in strings[:-1]) < cap and head >= cap:
        r = _least_k(1, None, lambda k: head - k <= (1 << (sk + k)) - (1 << sk))
        trace.append(f"iv: r={r}")
        return "iv", ((tk - 1) + sk + r, r)
    trace.append("iv: hypothesis fails")
    return None


def tau_code(code: GeneratingCode) -> TauResult:
    """Threshold dimension by the first clause whose hypothesis holds.

    Clauses are tried in textual order with the least admissible integer
    parameter. ``applicable`` is False when no clause applies.
    """
    if code.k == 1:
        s, t = code.strings[0]
        if s < 3:
            return TauResult(None, None, False, None, (f"lemma: needs s >= 3, got {s}",))
        return tau_string(s, t)
    trace: list[str] = []
    solver = {2: _two_strings, 3: _three_strings}.get(code.k, _many_strings)
    hit = solver(code, trace)
    if hit is None:
        return TauResult(None, None, False, None, tuple(trace))
    clause, (value, param) = hit
    return TauResult(value, param, True, clause, tuple(trace))


def rewrite_string(s: int, t: int) -> list[tuple[int, int]]:
    """Threshold supergraph code for one string ``0^s 1^t``.

    Even ``s >= 4`` gives ``0^2 1 (0 1)^{s/2-2} 0 1^t``; odd ``s >= 5`` gives
    ``0^2 1 (0 1)^{(s-1)/2-2} 0 1^{t+1}``; ``s = 3`` gives ``0 1 0 1^t``.
    Shorter strings are kept.
    """
    if s <= 2:
        return [(s, t)]
    if s == 3:
        return [(1, 1), (1, t)]
    if s % 2 == 0:
        return [(2, 1)] + [(1, 1)] * (s // 2 - 2) + [(1, t)]
    return [(2, 1)] + [(1, 1)] * ((s - 1) // 2 - 2) + [(1, t + 1)]


def alternate_substitution(strings: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Replace every second ``0^2 1`` by ``0 1^2``.

    Counting restarts after each string with ``t >= 2``.
    """
    out = []
    seen = 0
    for s, t in strings:
        if t >= 2:
            seen = 0
        if (s, t) == (2, 1):
            seen += 1
            if seen % 2 == 0:
                out.append((1, 2))
                continue
        out.append((s, t))
    return out


def tau_r_string(s: int, t: int) -> TauRResult:
    """Restricted threshold dimension of ``0^s 1^t`` for ``s >= 4``."""
    if s < 4:
        raise InapplicableInput(f"needs s >= 4, got s={s}")
    return TauRResult(math.ceil(s / 2) + t - 1, GeneratingCode(tuple(rewrite_string(s, t))))


def tau_r_code(code: GeneratingCode) -> TauRResult:
    """Rewrite every string, apply the alternate substitution, take beta."""
    pieces = [p for s, t in code.strings for p in rewrite_string(s, t)]
    rewritten = GeneratingCode(tuple(alternate_substitution(pieces)))
    return TauRResult(beta_threshold(rewritten).value, rewritten)

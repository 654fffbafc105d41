import pytest
from hypothesis import given
from hypothesis import strategies as st

from codegraph import (
    GeneratingCode,
    beta_threshold,
    build_threshold,
    exact_tau,
    parse_code,
    recognize_threshold,
    tau_code,
    tau_r_code,
    tau_r_string,
    tau_string,
)
from codegraph.code import enumerate_codes, format_code
from codegraph.errors import InapplicableInput
from codegraph.oracle import OracleBudget
from codegraph.threshold_dim import alternate_substitution, rewrite_string

from .conftest import codes


def C(*pairs):
    return GeneratingCode(tuple(pairs))


def test_tau_string_small():
    r = tau_string(3, 2)
    assert (r.value, r.witness_k, r.applicable) == (3, 2, True)
    assert tau_string(5, 2).value == 3
    assert tau_string(7, 1).witness_k == 3


def test_tau_string_large():
    # 2^11 - 1 + 11 = 2058 < 2359, so eleven isolated vertices are not enough
    r = tau_string(2359, 15)
    assert r.witness_k == 12 and r.value == 26
    assert 2359 - 11 > 2**11 - 1
    assert 2359 - 12 <= 2**12 - 1


def test_tau_string_rejects():
    with pytest.raises(InapplicableInput):
        tau_string(2, 5)


@given(st.integers(3, 5000), st.integers(3, 5000), st.integers(1, 9))
def test_tau_string_monotone(a, b, t):
    lo, hi = sorted((a, b))
    assert tau_string(lo, t).value <= tau_string(hi, t).value


def test_tau_string_vs_oracle():
    budget = OracleBudget(max_nonedges_tau=21)
    for s in range(3, 8):
        for t in range(1, 9 - s):
            assert tau_string(s, t).value == exact_tau(build_threshold(C((s, t))), budget), (s, t)


def test_tau_code_single_string():
    assert tau_code(C((2359, 15))).value == tau_string(2359, 15).value
    assert tau_code(C((3, 2))).value == 3
    r = tau_code(C((2, 2)))
    assert not r.applicable and r.value is None


@pytest.mark.parametrize(
    "code, clause",
    [
        (C((3, 1), (2, 2)), "iii"),
        (C((3, 3), (2, 2)), "ii"),
        (C((1, 1), (4, 1)), "i"),
        (C((2, 1), (2, 1)), "iii"),
        (C((2, 1), (1, 1), (4, 2)), "i"),
        (C((1, 1), (1, 3), (2, 1)), "ii"),
        (C((1, 7), (1, 1), (2, 1)), "iii"),
    ],
)
def test_tau_code_clause(code, clause):
    r = tau_code(code)
    assert r.applicable and r.clause == clause
    assert r.condition_trace[-1].startswith(clause + ":")


def test_tau_code_many_strings():
    r = tau_code(C((3, 1), (3, 1), (3, 1), (5, 2)))
    assert r.applicable and r.clause == "i"
    r = tau_code(C((1, 2), (3, 1), (3, 1), (2, 2)))
    assert r.condition_trace[0] == "i: needs s_i >= t_i for every string"
    r = tau_code(C((1, 2), (1, 1), (2, 1)))
    assert not r.applicable and r.value is None and len(r.condition_trace) == 4


def test_tau_code_oracle_value():
    c = C((3, 1), (2, 2))
    assert exact_tau(build_threshold(c)) == 4
    assert tau_code(c).value is not None


@pytest.mark.parametrize(
    "s, t, value, rewritten",
    [(4, 2, 3, [(2, 1), (1, 2)]), (5, 2, 4, [(2, 1), (1, 3)]), (8, 1, 4, [(2, 1), (1, 1), (1, 1), (1, 1)])],
)
def test_tau_r_string(s, t, value, rewritten):
    r = tau_r_string(s, t)
    assert r.value == value and list(r.rewritten_code) == rewritten


def test_tau_r_string_rejects():
    with pytest.raises(InapplicableInput):
        tau_r_string(3, 2)


def test_rewrite_string_shapes():
    assert rewrite_string(2, 3) == [(2, 3)]
    assert rewrite_string(3, 2) == [(1, 1), (1, 2)]
    assert rewrite_string(7, 2) == [(2, 1), (1, 1), (1, 3)]


def test_alternate_substitution_resets():
    seq = [(2, 1), (2, 1), (2, 1), (1, 2), (2, 1), (2, 1)]
    assert alternate_substitution(seq) == [(2, 1), (1, 2), (2, 1), (1, 2), (2, 1), (1, 2)]


def test_tau_r_examples():
    r = tau_r_code(parse_code("0^3 1^2 0^8 1^2 0^5 1 0^6 1^4 0^7 1^2"))
    assert r.value == 22
    assert format_code(r.rewritten_code).startswith("(0 1)(0 1^2)(0^2 1)(0 1)(0 1)(0 1^2)")
    assert tau_r_code(parse_code("0^2 1 0^4 1 0^6 1 0^8 1")).value == 12
    assert tau_r_code(C((2, 2))).value == 2


@given(codes(max_k=4, max_exp=9))
def test_tau_r_is_beta_of_witness(c):
    r = tau_r_code(c)
    assert r.value == beta_threshold(r.rewritten_code).value
    assert r.value <= beta_threshold(c).value


def test_witness_is_threshold_superset():
    for c in enumerate_codes(9):
        h = build_threshold(tau_r_code(c).rewritten_code)
        g = build_threshold(c)
        assert h.n == g.n and recognize_threshold(h)
        assert (h.adjacency | ~g.adjacency).all(), c

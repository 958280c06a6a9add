import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gnum import (
    DomainError,
    InvalidPrimeMeasureError,
    LogGridMeasure,
    NonInvertibleError,
    NotNormalizedError,
    SpacingMismatchError,
    conv,
    cumulative,
    delta,
    exp_conv,
    inv_conv,
    log_conv,
    mellin,
)

# ---------------------------------------------------------------------------
# construction


def test_invariants_enforced():
    with pytest.raises(DomainError):
        LogGridMeasure(0.0, [1.0])
    with pytest.raises(DomainError):
        LogGridMeasure(1.0, [])
    with pytest.raises(DomainError):
        LogGridMeasure(1.0, [1.0, float("nan")])
    with pytest.raises(DomainError):
        LogGridMeasure(1.0, [1.0, -1.0], signed=False)
    LogGridMeasure(1.0, [1.0, -1.0], signed=True)  # fine


def test_masses_immutable():
    m = LogGridMeasure(1.0, [1.0, 2.0])
    with pytest.raises(ValueError):
        m.masses[0] = 5.0


# ---------------------------------------------------------------------------
# conv


def test_conv_identity_element():
    b = LogGridMeasure(0.5, [0.0, 1.0, 2.0, 0.5])
    out = conv(delta(0.5, 1), b, max_len=b.n)
    assert np.allclose(out.masses, b.masses)


def test_conv_atom_product():
    a = LogGridMeasure(1.0, [0.0, 0.0, 1.0])  # atom at node 2
    b = LogGridMeasure(1.0, [0.0, 0.0, 0.0, 1.0])  # atom at node 3
    out = conv(a, b)
    expect = np.zeros(6)
    expect[5] = 1.0
    assert np.array_equal(out.masses, expect)


def test_conv_single_term_cauchy():
    a = LogGridMeasure(1.0, [0.0, 1.0, 0.0])
    b = LogGridMeasure(1.0, [0.0, 0.0, 2.0])
    out = conv(a, b)
    assert np.array_equal(out.masses, [0.0, 0.0, 0.0, 2.0, 0.0])


def test_conv_spacing_mismatch():
    with pytest.raises(SpacingMismatchError):
        conv(LogGridMeasure(1.0, [1.0]), LogGridMeasure(0.5, [1.0]))


small_masses = st.lists(
    st.floats(min_value=-1.0, max_value=1.0, allow_nan=False, allow_infinity=False),
    min_size=1,
    max_size=24,
)


@settings(max_examples=60, deadline=None)
@given(small_masses, small_masses, small_masses)
def test_conv_associative_commutative(xs, ys, zs):
    A = LogGridMeasure(0.25, np.array(xs), signed=True)
    B = LogGridMeasure(0.25, np.array(ys), signed=True)
    C = LogGridMeasure(0.25, np.array(zs), signed=True)
    ab = conv(A, B)
    ba = conv(B, A)
    assert np.allclose(ab.masses, ba.masses, atol=1e-12)
    left = conv(ab, C)
    right = conv(A, conv(B, C))
    assert np.allclose(left.masses, right.masses, atol=1e-12)


# ---------------------------------------------------------------------------
# exp / log / inv


def test_exp_of_zero_measure():
    out = exp_conv(LogGridMeasure(1.0, np.zeros(5)))
    assert np.array_equal(out.masses, [1.0, 0.0, 0.0, 0.0, 0.0])


def test_exp_single_atom_gives_factorials():
    out = exp_conv(LogGridMeasure(1.0, [0.0, 1.0, 0.0, 0.0, 0.0]))
    # oracle: coefficients of e^z are 1/j!
    expect = np.array([1.0 / math.factorial(j) for j in range(5)])
    assert np.allclose(out.masses, expect, atol=1e-15)


def test_exp_prime_two_gives_unit_masses():
    # B: masses 1/m at nodes m*q (prime 2 on grid h = ln2/q); exp gives the
    # powers of two with unit mass.  Oracle: exp(sum z^m / m) = 1/(1-z),
    # verified here by brute-force series multiplication.
    q = 4
    n = 5 * q + 1
    b = np.zeros(n)
    for m in range(1, 6):
        if m * q < n:
            b[m * q] = 1.0 / m
    out = exp_conv(LogGridMeasure(math.log(2.0) / q, b))
    # brute force: sum_k (B^{*k}) / k!
    brute = np.zeros(n)
    brute[0] = 1.0
    term = np.zeros(n)
    term[0] = 1.0
    for k in range(1, 8):
        term = np.convolve(term, b)[:n] / k
        brute += term
    assert np.allclose(out.masses, brute, atol=1e-12)
    for k in range(6):
        assert out.masses[k * q] == pytest.approx(1.0, abs=1e-12)


def test_exp_requires_zero_node0():
    with pytest.raises(InvalidPrimeMeasureError):
        exp_conv(LogGridMeasure(1.0, [0.5, 1.0]))


def test_log_of_identity():
    out = log_conv(delta(1.0, 4))
    assert np.array_equal(out.masses, np.zeros(4))


def test_log_inverts_exp_example():
    out = log_conv(LogGridMeasure(1.0, [1.0, 1.0, 0.5, 1.0 / 6.0]))
    assert np.allclose(out.masses, [0.0, 1.0, 0.0, 0.0], atol=1e-12)


def test_log_of_geometric_is_harmonic():
    # oracle: -log(1 - z) = sum z^m / m
    n = 12
    out = log_conv(LogGridMeasure(1.0, np.ones(n)))
    expect = np.array([0.0] + [1.0 / m for m in range(1, n)])
    assert np.allclose(out.masses, expect, atol=1e-12)


def test_log_requires_unit_node0():
    with pytest.raises(NotNormalizedError):
        log_conv(LogGridMeasure(1.0, [2.0, 1.0]))


def test_inv_of_delta():
    out = inv_conv(delta(1.0, 4))
    assert np.array_equal(out.masses, [1.0, 0.0, 0.0, 0.0])


def test_inv_of_geometric():
    out = inv_conv(LogGridMeasure(1.0, np.ones(6)))
    assert np.allclose(out.masses, [1.0, -1.0, 0.0, 0.0, 0.0, 0.0], atol=1e-15)


def test_inv_requires_nonzero_node0():
    with pytest.raises(NonInvertibleError):
        inv_conv(LogGridMeasure(1.0, [0.0, 1.0]))


def test_inv_of_single_prime_dN_matches_moebius(sys2):
    # dN of {2} has unit mass at nodes k*q; its inverse is the Moebius
    # pattern 1, -1, 0, 0, ... on the prime-power lattice (brute-force
    # Moebius on the {2}-semigroup).
    from gnum import to_grid

    q = 8
    g = to_grid(sys2, math.log(2.0) / q, 4 * math.log(2.0))
    dN = exp_conv(g)
    dM = inv_conv(dN)
    expect = np.zeros(dN.n)
    expect[0] = 1.0
    expect[q] = -1.0
    assert np.allclose(dM.masses, expect, atol=1e-12)


prime_measures = st.lists(
    st.floats(min_value=0.0, max_value=0.2, allow_nan=False), min_size=2, max_size=48
).map(lambda xs: [0.0] + xs[1:])


@settings(max_examples=60, deadline=None)
@given(prime_measures)
def test_exp_log_roundtrip(xs):
    B = LogGridMeasure(0.125, np.array(xs))
    back = log_conv(exp_conv(B))
    assert float(np.max(np.abs(back.masses - B.masses))) < 1e-9


@settings(max_examples=60, deadline=None)
@given(prime_measures)
def test_log_exp_roundtrip(xs):
    A = exp_conv(LogGridMeasure(0.125, np.array(xs)))
    again = exp_conv(log_conv(A))
    assert float(np.max(np.abs(again.masses - A.masses))) < 1e-9


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.floats(min_value=-0.05, max_value=0.05, allow_nan=False), min_size=1, max_size=48),
    st.sampled_from([-1.2, -0.7, 0.5, 1.0, 1.5]),
)
def test_conv_inv_roundtrip(tail, a0):
    a = np.array([a0] + tail[1:])
    A = LogGridMeasure(0.125, a, signed=True)
    M = inv_conv(A)
    prod = conv(A, M, max_len=A.n)
    expect = np.zeros(A.n)
    expect[0] = 1.0
    assert float(np.max(np.abs(prod.masses - expect))) < 1e-10


@settings(max_examples=40, deadline=None)
@given(prime_measures)
def test_inv_exp_homomorphism(xs):
    B = LogGridMeasure(0.125, np.array(xs))
    left = inv_conv(exp_conv(B))
    right = exp_conv(-B)
    assert float(np.max(np.abs(left.masses - right.masses))) < 1e-9


@settings(max_examples=40, deadline=None)
@given(prime_measures)
def test_exp_positivity(xs):
    out = exp_conv(LogGridMeasure(0.125, np.array(xs)))
    assert np.all(out.masses >= 0.0)


# ---------------------------------------------------------------------------
# mellin


def test_mellin_single_atom():
    m = LogGridMeasure(0.5, [0.0, 0.0, 0.0, 3.0])
    s = 1.5 + 2.0j
    assert mellin(m, s) == pytest.approx(3.0 * np.exp(-s * 1.5), abs=1e-14)


def test_mellin_of_discretized_pi0_is_log2():
    # Mellin transform of dPi0 at s = 2 equals log(2/(2-1)) = log 2
    from gnum import builtin, to_grid

    g = to_grid(builtin("pi0"), 1e-3, 30.0)
    assert mellin(g, 2.0).real == pytest.approx(math.log(2.0), abs=1e-4)


def test_mellin_dN_of_23_euler_product(sys23):
    from gnum import to_grid

    h = math.log(2.0) / 306.0  # makes log 3 land within h/4 of a node
    g = to_grid(sys23, h, 14.0)
    dN = exp_conv(g)
    assert mellin(dN, 2.0).real == pytest.approx(1.5, abs=1e-3)


@settings(max_examples=40, deadline=None)
@given(small_masses, small_masses)
def test_mellin_multiplicative_on_full_conv(xs, ys):
    # without truncation the identity is exact up to rounding
    A = LogGridMeasure(0.25, np.array(xs), signed=True)
    B = LogGridMeasure(0.25, np.array(ys), signed=True)
    s = 1.7 + 0.9j
    lhs = mellin(conv(A, B), s)
    rhs = mellin(A, s) * mellin(B, s)
    assert abs(lhs - rhs) < 1e-10 * max(1.0, abs(rhs))


# ---------------------------------------------------------------------------
# cumulative


def test_cumulative_delta():
    assert cumulative(delta(1.0, 3), 0.0) == 1.0


def test_cumulative_requires_nonnegative_u():
    with pytest.raises(DomainError):
        cumulative(delta(1.0, 3), -0.5)


def test_cumulative_counts_powers_of_two(sys2):
    from gnum import to_grid

    h = math.log(2.0) / 8.0
    dN = exp_conv(to_grid(sys2, h, 6 * math.log(2.0)))
    # brute force: 1, 2, 4, 8 are <= e^(3 ln 2 + h/2)
    assert cumulative(dN, 3 * math.log(2.0) + h / 2.0) == pytest.approx(4.0, abs=1e-9)


def test_cumulative_pi0_reconstructs_x(pi0_system):
    from gnum import to_grid

    dN = exp_conv(to_grid(pi0_system, 1e-3, 10.5))
    val = cumulative(dN, 10.0)
    assert val == pytest.approx(math.exp(10.0), rel=0.01)

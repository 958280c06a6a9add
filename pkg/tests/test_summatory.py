import math

import numpy as np
import pytest

from gnum import builtin, to_grid, validate
from gnum.grid import LogGridMeasure, conv, delta, exp_conv, mellin
from gnum.semigroup import iter_value_omega_mu
from gnum.summatory import (
    ell_ladder,
    ell_value,
    liouville_measure,
    m_ladder,
    m_value,
    mobius_measure,
    weighted_cumsum,
)
from gnum.systems import LOG2

H23 = LOG2 / 306.0  # commensurable-ish grid for {2,3}


def test_m_at_one(sys23):
    assert m_value(sys23, 1.0) == 1.0


def test_m_23_exact(sys23):
    # 1 - 1/2 - 1/3 + 1/6
    assert m_value(sys23, 10.0) == pytest.approx(1.0 / 3.0, abs=1e-12)


def test_ell_23_exact(sys23):
    # 1 - 1/2 - 1/3 + 1/4 + 1/6 - 1/8 + 1/9 = 41/72
    assert ell_value(sys23, 10.0) == pytest.approx(41.0 / 72.0, abs=1e-12)


def test_ell_at_one(sys23):
    assert ell_value(sys23, 1.0) == 1.0


def test_mobius_measure_single_prime(sys2):
    h = LOG2 / 8.0
    dM = mobius_measure(sys2, h, 5 * LOG2)
    expect = np.zeros(dM.n)
    expect[0] = 1.0
    expect[8] = -1.0
    assert np.allclose(dM.masses, expect, atol=1e-12)


def test_mobius_measure_pi0_mellin(pi0_system):
    dM = mobius_measure(pi0_system, 1e-3, 20.0)
    # 1/zeta(2) = (s-1)/s at s=2
    assert mellin(dM, 2.0).real == pytest.approx(0.5, abs=1e-3)


def test_mobius_convolved_with_dN_is_delta(sys23, pi0_system):
    for sysd, h, umax in ((sys23, H23, 10.0), (pi0_system, 2e-3, 10.0)):
        dpi = to_grid(sysd, h, umax)
        dN = exp_conv(dpi)
        dM = mobius_measure(sysd, h, umax)
        prod = conv(dN, dM, max_len=dN.n)
        expect = np.zeros(dN.n)
        expect[0] = 1.0
        assert float(np.max(np.abs(prod.masses - expect))) < 1e-10


def test_mobius_routes_agree_all_builtins():
    # inv_conv(exp_conv(dPi)) vs exp_conv(-dPi), checked inside the call
    for name in ("pi0", "ex42", "ex43", "ex51", "ex52"):
        mobius_measure(builtin(name), 5e-3, 8.0, cross_check=True)
    mobius_measure(builtin("rational", limit=500), 1e-3, 6.0, cross_check=True)


def test_liouville_mellin_23(sys23):
    dL = liouville_measure(sys23, H23, 14.0)
    assert mellin(dL, 2.0).real == pytest.approx(0.72, abs=1e-3)


def test_liouville_alternates_single_prime(sys2):
    h = LOG2 / 4.0
    dL = liouville_measure(sys2, h, 6 * LOG2)
    nodes = [k * 4 for k in range(7)]
    signs = [dL.masses[j] for j in nodes]
    assert np.allclose(signs, [(-1.0) ** k for k in range(7)], atol=1e-12)


def test_liouville_empty_system_is_delta():
    empty = validate(
        {"kind": "continuous", "density": {"u": [0.0, 1.0], "rho_x": [0.0, 0.0]}}
    )
    dL = liouville_measure(empty, 0.25, 3.0)
    expect = np.zeros(dL.n)
    expect[0] = 1.0
    assert np.allclose(dL.masses, expect, atol=1e-14)


def test_liouville_discarded_mass_reported(sys2):
    dL = liouville_measure(sys2, LOG2 / 4.0, 6 * LOG2)
    assert getattr(dL, "discarded_mass") > 0.0


def test_liouville_mellin_identity(sys23):
    # mellin(dL, s) * mellin(dN, s) = mellin(S, s) = mellin(dN, 2s)
    h = H23
    dN = exp_conv(to_grid(sys23, h, 14.0))
    dL = liouville_measure(sys23, h, 14.0)
    for s in (2.0, 3.0):
        lhs = mellin(dL, s) * mellin(dN, s)
        rhs = mellin(dN, 2.0 * s)
        assert abs(lhs - rhs) < 2e-3, s


def test_ell_rational_decays():
    rat = builtin("rational", limit=200_000)
    vals = ell_ladder(rat, np.log([10.0, 1e3, 2e5])).values
    assert abs(vals[-1]) < 0.02
    assert abs(vals[-1]) < abs(vals[0])


def test_grid_m_converges_to_exact(sys23):
    # grid m approaches the exact enumeration value as h shrinks
    x = 50.0
    exact = m_value(sys23, x)
    errs = []
    for div in (32, 64, 128):
        h = LOG2 / div
        dM = mobius_measure(sys23, h, math.log(x) + h)
        cums = weighted_cumsum(dM)
        j = min(int(math.log(x) / h + 1e-9), dM.n - 1)
        errs.append(abs(cums[j] - exact))
    assert errs[2] < errs[0]
    assert errs[2] < 0.02


def test_m_ladder_triangle_bound(sys23):
    # |m(x)| <= sum_{n_k <= x} 1/n_k (harmonic sum of the system)
    us = np.log(np.array([2.0, 5.0, 20.0, 100.0, 1000.0]))
    mv = m_ladder(sys23, us).values
    for u, m in zip(us, mv):
        harm = sum(1.0 / v for v, _, _ in iter_value_omega_mu(sys23, math.exp(u) * (1 + 1e-12)))
        assert abs(m) <= harm + 1e-12


def test_slow_oscillation_inequality(sys23):
    # |m(cx) - m(x)| <= N(cx)/cx - N(x)/x + int_x^cx N(u)/u^2 du
    from gnum.semigroup import enumerate_up_to

    values = np.array([g.value for g in enumerate_up_to(sys23, 4000.0)])

    def N(x):
        return float(np.searchsorted(values, x * (1 + 1e-12), side="right"))

    def exact_integral(x, cx):
        # N is a step function: integrate 1/u^2 exactly on each flat piece
        cuts = [x] + [float(v) for v in values if x < v <= cx] + [cx]
        total = 0.0
        for a, b in zip(cuts[:-1], cuts[1:]):
            total += N(a) * (1.0 / a - 1.0 / b)
        return total

    for x in (5.0, 17.0, 100.0, 700.0):
        for c in (1.3, 2.0, 3.7):
            lhs = abs(m_value(sys23, c * x) - m_value(sys23, x))
            rhs = N(c * x) / (c * x) - N(x) / x + exact_integral(x, c * x)
            assert lhs <= rhs + 1e-9


def test_m_and_ell_decay_agree_rational():
    # the m <=> ell equivalence, checked as matching decay verdicts
    rat = builtin("rational", limit=100_000)
    us = np.log(np.geomspace(10.0, 1e5, 12))
    mv = np.abs(m_ladder(rat, us).values)
    lv = np.abs(ell_ladder(rat, us).values)
    m_decays = mv[-3:].max() < 0.5 * mv[:3].max()
    l_decays = lv[-3:].max() < 0.5 * lv[:3].max()
    assert m_decays == l_decays == True  # noqa: E712


def test_ex43_m_and_ell_both_nondecaying():
    e43 = builtin("ex43")
    h = LOG2 / 64.0
    us = np.arange(10.0, 30.0, h)
    mv = np.abs(m_ladder(e43, us, h=h, u_max=30.0).values)
    lv = np.abs(ell_ladder(e43, us, h=h, u_max=30.0).values)
    half = len(us) // 2
    assert mv[half:].max() >= 0.5 * mv[:half].max()
    assert lv[half:].max() >= 0.5 * lv[:half].max()


def test_weighted_cumsum_is_compensated():
    # alternating large terms: plain cumsum loses more than the Kahan loop
    n = 20001
    masses = np.ones(n)
    masses[1::2] = -1.0
    meas = LogGridMeasure(1e-6, masses, signed=True)  # e^{-u} ~ 1, alternating sum
    out = weighted_cumsum(meas)
    assert out[-1] == pytest.approx(np.sum(masses * np.exp(-meas.u_nodes)), abs=1e-12)

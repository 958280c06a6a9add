import math

import numpy as np
import pytest
from scipy.special import expi

from gnum import (
    DomainError,
    GridPlacementWarning,
    Pi0_value,
    Pi_value,
    StepFunction,
    UnsupportedOperationError,
    ValidationError,
    builtin,
    builtin_names,
    pi_count,
    to_grid,
    validate,
)
from gnum.grid import exp_conv, mellin
from gnum.systems import BumpSpline, LOG2, Pi0_values, Pi_values, sieve_primes

EULER_GAMMA = 0.5772156649015329


def pi0_closed_form(x: float) -> float:
    # independent oracle: Pi0(x) = Ei(log x) - gamma - log log x for x > 1
    w = math.log(x)
    return float(expi(w)) - EULER_GAMMA - math.log(w)


# ---------------------------------------------------------------------------
# validation


def test_validate_discrete_ok():
    sysd = validate({"kind": "discrete", "primes": [2, 3, 5]})
    assert sysd.is_discrete and sysd.primes.tolist() == [2.0, 3.0, 5.0]


def test_validate_first_prime_must_exceed_one():
    with pytest.raises(ValidationError, match="exceed 1"):
        validate({"kind": "discrete", "primes": [1.0, 2.0]})


def test_validate_collects_all_issues():
    with pytest.raises(ValidationError) as err:
        validate({"kind": "discrete", "primes": [0.5, 0.4]})
    assert len(err.value.issues) == 2


def test_validate_negative_density_sample():
    with pytest.raises(ValidationError, match="negative density"):
        validate(
            {
                "kind": "continuous",
                "density": {"u": [0.0, 1.0, 2.0], "rho_x": [0.1, -1.0, 0.1]},
            }
        )


def test_validate_bad_atoms():
    with pytest.raises(ValidationError) as err:
        validate(
            {
                "kind": "continuous",
                "density": {"u": [0.0, 1.0], "rho_x": [0.1, 0.1]},
                "atoms": [[-1.0, 2.0], [1.0, 0.0]],
            }
        )
    assert len(err.value.issues) == 2


def test_validate_unknown_kind():
    with pytest.raises(ValidationError, match="unknown system kind"):
        validate({"kind": "weird"})


def test_tabulated_density_interpolates():
    sysd = validate(
        {"kind": "continuous", "density": {"u": [0.0, 2.0], "rho_x": [1.0, 1.0]}}
    )
    assert float(sysd.density_u(np.array([1.0]))[0]) == pytest.approx(math.e, rel=1e-12)


# ---------------------------------------------------------------------------
# counting functions


def test_pi_count_examples(rational_small, sys22):
    assert pi_count(rational_small, 10.0) == 4.0
    assert pi_count(sys22, 2.0) == 2.0  # multiplicity counted
    assert pi_count(rational_small, 1.5) == 0.0


def test_pi_rejects_continuous(pi0_system):
    with pytest.raises(UnsupportedOperationError):
        pi_count(pi0_system, 10.0)


def test_Pi_rational_example(rational_small):
    # 4 + pi(sqrt 10)/2 + pi(10^(1/3))/3 = 4 + 1 + 1/3
    assert Pi_value(rational_small, 10.0) == pytest.approx(4 + 1 + 1 / 3, abs=1e-12)


def test_Pi_counts_exact_prime_powers(sys2):
    # x = 8 includes 2^3 despite floating-point cube roots
    assert Pi_value(sys2, 8.0) == pytest.approx(1 + 1 / 2 + 1 / 3, abs=1e-12)


def test_Pi_ex43_atoms():
    e43 = builtin("ex43")
    assert Pi_value(e43, 3.0) == pytest.approx(2 ** 1.5, abs=1e-9)
    assert Pi_value(e43, 2.0 ** 2.5) == pytest.approx(2 ** 1.5 + 2 ** 2.5 / 2, abs=1e-9)


def test_Pi_monotone_on_all_builtins():
    xs = np.exp(np.linspace(0.0, 8.0, 160))
    for name in builtin_names():
        sysd = builtin(name) if name != "rational" else builtin("rational", limit=3000)
        vals = Pi_values(sysd, np.log(xs))
        assert np.all(np.diff(vals) >= -1e-9), name


def test_Pi_pi_consistency(rational_small):
    # Pi - pi = sum_{k>=2} pi(x^(1/k))/k >= 0
    for x in (10.0, 100.0, 1234.0):
        diff = Pi_value(rational_small, x) - pi_count(rational_small, x)
        expected = sum(
            pi_count(rational_small, x ** (1.0 / k)) / k
            for k in range(2, int(math.log2(x)) + 1)
        )
        assert diff >= 0.0
        assert diff == pytest.approx(expected, abs=1e-12)


def _moebius_int(n: int) -> int:
    out, m = 1, n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


def test_moebius_inversion_recovers_pi(rational_small):
    # pi(x) = sum_k mu(k)/k * Pi(x^(1/k)) with the classical Moebius function
    for x in (10.0, 50.0, 500.0, 5000.0):
        total = 0.0
        for k in range(1, int(math.log2(x)) + 1):
            total += _moebius_int(k) / k * Pi_value(rational_small, x ** (1.0 / k))
        assert round(total) == pi_count(rational_small, x)
        assert total == pytest.approx(pi_count(rational_small, x), abs=1e-9)


def test_Pi0_examples():
    assert Pi0_value(1.0) == 0.0
    # two-term Taylor oracle: integrand ~ 1 - (u-1)/2 near u = 1
    eps = 1e-3
    taylor = eps - eps**2 / 4.0
    assert Pi0_value(1.0 + eps) == pytest.approx(taylor * (1 + eps / 2), rel=2e-3)
    assert Pi0_value(1.001) == pytest.approx(0.0009995, abs=1e-6)


@pytest.mark.parametrize("x", [1.5, 2.0, 10.0, 1e4, 1e10])
def test_Pi0_matches_closed_form(x):
    assert Pi0_value(x) == pytest.approx(pi0_closed_form(x), rel=1e-9, abs=1e-12)


# ---------------------------------------------------------------------------
# discretization


def test_to_grid_single_prime(sys2):
    h = LOG2 / 8.0
    g = to_grid(sys2, h, 4 * LOG2)
    nz = np.nonzero(g.masses)[0]
    assert nz.tolist() == [8, 16, 24, 32]
    assert np.allclose(g.masses[nz], [1.0, 0.5, 1 / 3, 0.25])


def test_to_grid_exp_gives_powers_of_two(sys2):
    h = LOG2 / 8.0
    dN = exp_conv(to_grid(sys2, h, 4 * LOG2))
    expect = np.zeros(dN.n)
    expect[[0, 8, 16, 24, 32]] = 1.0
    assert np.allclose(dN.masses, expect, atol=1e-12)


def test_to_grid_total_mass_matches_Pi(pi0_system):
    h = 1e-3
    u_max = 5.0
    g = to_grid(pi0_system, h, u_max)
    # total grid mass equals Pi(e^u_max) within one cell's density mass
    cell = float(pi0_system.density_u(np.array([u_max]))[0]) * h
    assert abs(g.total_mass() - Pi_value(pi0_system, math.exp(u_max))) <= cell


def test_to_grid_pi0_cumulative_cross_check(pi0_system):
    g = to_grid(pi0_system, 1e-3, 5.0)
    total = float(np.sum(g.masses))
    assert total == pytest.approx(Pi0_value(math.exp(5.0)), abs=1e-3)


def test_to_grid_warns_on_misaligned_atom():
    sysd = validate(
        {
            "kind": "continuous",
            "density": {"u": [0.0, 1.0], "rho_x": [0.0, 0.0]},
            "atoms": [[0.517, 1.0]],
        }
    )
    with pytest.warns(GridPlacementWarning):
        to_grid(sysd, 1.0, 3.0)


def test_to_grid_rejects_bad_params(sys2):
    with pytest.raises(DomainError):
        to_grid(sys2, -1.0, 3.0)


# ---------------------------------------------------------------------------
# builtins


def test_builtin_names_cover_examples():
    assert {"rational", "pi0", "ex41", "ex42", "ex43", "ex51", "ex52"} <= set(builtin_names())


def test_builtin_unknown():
    with pytest.raises(ValidationError):
        builtin("nope")


def test_rational_builtin():
    sysd = builtin("rational", limit=100)
    assert sysd.primes.tolist() == sieve_primes(100).tolist()
    assert len(sysd.primes) == 25


def test_ex41_requires_k_at_least_2():
    with pytest.raises(ValidationError):
        builtin("ex41", k=1)


def test_ex41_density_nonnegative():
    e41 = builtin("ex41", k=2)
    u = np.linspace(0.0, 30.0, 30001)
    dens = e41.density_x(u)
    assert float(dens.min()) >= 0.0


def test_ex41_grid_nonnegative():
    e41 = builtin("ex41", k=3)
    g = to_grid(e41, 5e-3, 12.0)
    assert float(g.masses.min()) >= 0.0


def test_ex41_bump_matches_Pi_minus_Pi0():
    # Pi(x) - Pi0(x) = x * sum_n phi^(k-1)(beta_n (u - n)) / (n beta_n);
    # reconstruct the right side from an independently built spline
    k = 2
    e41 = builtin("ex41", k=k)
    phi = BumpSpline(k)
    for u in (3.3, 4.07, 5.5, 7.25):
        n = math.floor(u)
        beta = math.log(n) ** (1.0 / k)
        t = beta * (u - n)
        bump = phi.deriv(k - 1, np.array([t]))[0] / (n * beta) if 0 < t < 1 else 0.0
        lhs = Pi_values(e41, np.array([u]))[0] - Pi0_values(np.array([u]))[0]
        assert lhs == pytest.approx(math.exp(u) * bump, rel=1e-6, abs=1e-9)


def test_bump_spline_scaled_to_target():
    phi = BumpSpline(2, target=1.0 / 16.0)
    t = np.linspace(0.0, 1.0, 20001)
    sup_k = float(np.max(np.abs(phi.deriv(2, t))))
    assert sup_k == pytest.approx(1.0 / 16.0, rel=1e-4)
    # support really is (0, 1)
    assert phi(np.array([0.0]))[0] == 0.0 and phi(np.array([1.0]))[0] == pytest.approx(0.0, abs=1e-15)
    assert float(np.max(phi(t))) > 0.0


def test_ex42_density():
    e42 = builtin("ex42")
    u = np.array([0.5, LOG2, 2.0])
    d = e42.density_x(u)
    assert d[0] == 0.0
    assert d[1] == pytest.approx((1 + math.cos(LOG2)) / LOG2, rel=1e-12)
    assert d[2] == pytest.approx((1 + math.cos(2.0)) / 2.0, rel=1e-12)


def test_ex43_atoms():
    e43 = builtin("ex43")
    atoms = e43.atoms(5 * LOG2)
    # k = 1..4: positions (k + 1/2) ln 2, weights 2^(k+1/2)/k
    assert atoms.shape == (4, 2)
    for row, k in zip(atoms, range(1, 5)):
        assert row[0] == pytest.approx((k + 0.5) * LOG2, rel=1e-15)
        assert row[1] == pytest.approx(2.0 ** (k + 0.5) / k, rel=1e-15)


def test_ex52_sequence_constraints():
    e52 = builtin("ex52")
    pairs = []
    a_base, a_ratio = e52.params["a_base"], e52.params["a_ratio"]
    b_scale, b_power = e52.params["b_scale"], e52.params["b_power"]
    a_j = a_base
    for j in range(1, 12):
        pairs.append((a_j, b_scale * j**b_power))
        a_j *= a_ratio
    # b_j < a_{j+1} - a_j, b increasing, sum b_j^2/a_j converges (ratio test)
    for (a1, b1), (a2, b2) in zip(pairs, pairs[1:]):
        assert b1 < a2 - a1
        assert b2 > b1
        assert (b2**2 / a2) < 0.5 * (b1**2 / a1)


def test_ex52_gap_density_is_zero():
    e52 = builtin("ex52")
    a1 = e52.params["a_base"]
    inside = a1 + 0.3 * e52.params["b_scale"]
    vals = e52.density_x(np.array([inside, a1 - 0.01, 40.0]))
    assert vals[0] == 0.0
    assert vals[1] > 0.0 and vals[2] > 0.0


def test_ex51_density_form():
    e51 = builtin("ex51")
    u = 10.0
    t = (1 - math.exp(-u)) / u
    expect = t + t * t / math.log(u)
    assert float(e51.density_x(np.array([u]))[0]) == pytest.approx(expect, rel=1e-12)


# ---------------------------------------------------------------------------
# step functions


def test_step_function_merges_and_evaluates():
    f = StepFunction([(2.0, 1.0), (2.0, 1.0), (4.0, 3.0)])
    assert f.jumps == [(2.0, 2.0), (4.0, 3.0)]
    assert f(1.9) == 0.0
    assert f(2.0) == 2.0
    assert f(4.0) == 5.0


def test_step_function_rejects_nonpositive_jumps():
    with pytest.raises(DomainError):
        StepFunction([(2.0, 0.0)])


def test_step_function_from_values():
    f = StepFunction.from_values([1.0, 2.0, 2.0, 4.0])
    assert f(2.0) == 3.0
    assert f(3.9) == 3.0

import cmath
import math

import _malmquist as mq


def test_weighted_norm_pinned_values():
    assert mq.weighted_norm([1.0]) == 1.0
    # single z term with weight (1+1)^(2 * -1/2) = 1/2
    assert abs(mq.weighted_norm([0.0, 1.0], 2.0, -0.5) - 2 ** -0.5) < 1e-14
    # unit-norm weighted Dirichlet polynomial
    n, p, alpha = 5, 2.0, -0.5
    coef = [n ** (-1 / p) * (k + 1) ** (-alpha) for k in range(n)]
    assert abs(mq.weighted_norm(coef, p, alpha) - 1.0) < 1e-12


def test_eval_functional_norm():
    assert abs(mq.eval_functional_norm(0.5, 2.0, 0.0) - 1 / math.sqrt(0.75)) < 1e-10
    assert abs(mq.eval_functional_norm(0.5, 2.0, -0.5) - 4 / 3) < 1e-10


def test_kernels_and_conversions():
    k = mq.reproducing_kernel(0.4 + 0.1j, -0.5, 6)
    for j, c in enumerate(k):
        assert abs(c - (j + 1) * (0.4 - 0.1j) ** j) < 1e-13
    assert mq.alpha_to_beta(-0.5) == 0.0
    assert mq.beta_to_alpha(2.0) == -1.5


def test_phi_and_interpolant_report():
    coords = mq.phi([1.0, 2.0, 3.0], "0^1")
    assert len(coords) == 1
    assert abs(coords[0] - 1.0) < 1e-14

    rep = mq.interpolant_report([0.0, 1.0], "0.5^1")
    assert rep["trace_defect"] < 1e-12

    rep2 = mq.interpolant_report([0.0, 0.0, 1.0], "0.5^2")
    assert rep2["trace_defect"] < 1e-8


def test_blaschke_and_shift():
    assert abs(mq.blaschke_product("0^3", 0.5 + 0j) - (-0.5) ** 3) < 1e-14
    m = mq.compressed_shift("0^2")
    assert abs(m[0][0]) < 1e-10 and abs(m[0][1]) < 1e-10
    assert abs(m[1][0] + 1.0) < 1e-10 and abs(m[1][1]) < 1e-10


def test_oracles_agree():
    sigma = [(0.3 + 0.2j, 1), (-0.4 + 0.0j, 1), (0.1 - 0.5j, 1)]
    values = [0.7 + 0.1j, -0.2 + 0.4j, 0.3 + 0.0j]
    a = mq.min_norm(sigma, values)
    b = mq.pick_min_norm(sigma, values)
    assert abs(a - b) <= 1e-7 * (1 + a)
    # double point needs the shift route
    assert abs(mq.min_norm("0^2", [0.0, 1.0]) - 1.0) < 1e-9


def test_bounds_sandwich():
    n, r, alpha = 4, 0.0, 0.0
    lower = mq.lower_lp(n, 2.0, alpha)
    upper = mq.upper_hilbert(n, r, alpha)
    est = mq.interp_constant("0^4", 2.0, alpha, 8, 1)["value"]
    assert lower <= est + 1e-6 <= upper + 1e-6
    assert abs(upper - 2.0 * math.sqrt(n)) < 1e-12

    rep = mq.bound_report(2, 0.5, 2.0, -0.5, with_oracle=True, seed=3)
    assert rep["lower"] <= rep["oracle"] + 1e-6
    assert rep["oracle"] <= rep["upper"] + 1e-6


def test_lower_onepoint_rotation_invariance():
    a = mq.lower_onepoint_hilbert(4, 0.6 + 0j, 2)
    b = mq.lower_onepoint_hilbert(4, 0.6j, 2)
    assert abs(a - b) < 1e-12
    assert a > 0


def test_bernstein_ratio():
    ratio, bound, ok = mq.bernstein_ratio("0.9^1", [1.0 + 0j], 1)
    assert ok
    assert abs(ratio - 0.9 * math.sqrt(1.81) / 0.19) < 1e-6
    assert abs(bound - 30.0) < 1e-12


def test_von_neumann():
    rep = mq.von_neumann_check("0.5^1;-0.2+0.3i^1", [0.3, 1.0, -0.2], trials=10, seed=5)
    assert rep["pass"]
    assert rep["max_excess"] <= 1e-8


def test_upper_p_endpoints():
    assert abs(mq.upper_p(3, 0.4, 2.0, -0.3) - mq.upper_hilbert(3, 0.4, -0.3)) < 1e-12
    assert abs(mq.upper_p(1, 0.0, 1.0, 0.0) - 2 * math.sqrt(2)) < 1e-12

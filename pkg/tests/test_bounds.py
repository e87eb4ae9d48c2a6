import math

import numpy as np
import pytest

from framepcm import (
    I_constant,
    I_constant_sine_product,
    M1_constant,
    M2_constant,
    QuantScheme,
    limiting_error,
    lower_bound,
    sandwich_check,
    scaling_slope_fit,
    zeta_tail,
)
from framepcm.bounds import BOUND_CSV_FIELDS, DEFAULT_R_MIN


def test_zeta_tails_against_known_values():
    assert zeta_tail(2.0) == pytest.approx(math.pi ** 2 / 6 - 1, abs=1e-11)
    assert zeta_tail(2.5) == pytest.approx(0.3414872572509171, abs=1e-12)
    assert zeta_tail(3.0) == pytest.approx(1.2020569031595943 - 1, abs=1e-12)
    with pytest.raises(ValueError):
        zeta_tail(1.0)


def test_M1_values():
    assert M1_constant(3.0 / 8.0, 2) == pytest.approx(0.3731409284, abs=1e-9)
    assert M1_constant(0.25, 2) == pytest.approx(0.1388263534, abs=1e-9)
    # |cos| symmetry of the window endpoints
    assert M1_constant(0.5, 2) == pytest.approx(M1_constant(0.25, 2), abs=1e-12)


def test_M2_values():
    assert M2_constant(1.0 / 6.0, 1) == pytest.approx(0.0207047233, abs=1e-9)
    assert M2_constant(0.25, 1) == pytest.approx(0.875 - (8 / 7) * (math.pi ** 2 / 6 - 1), abs=1e-11)
    assert M2_constant(0.0, 1) < 0  # cosine term vanishes outside the window
    assert M2_constant(1.0 / 3.0, 1) == pytest.approx(M2_constant(1.0 / 6.0, 1), abs=1e-12)


def test_M_symmetry_and_monotonicity():
    for e in np.linspace(0.0, 0.125, 7):
        assert M1_constant(0.375 - e, 2) == pytest.approx(M1_constant(0.375 + e, 2), abs=1e-12)
    for e in np.linspace(0.0, 1.0 / 12.0, 7):
        assert M2_constant(0.25 - e, 1) == pytest.approx(M2_constant(0.25 + e, 1), abs=1e-12)
    # tails shrink with n
    assert M1_constant(0.3, 3) > M1_constant(0.3, 2)
    assert M2_constant(0.3, 2) > M2_constant(0.3, 1)


def test_M_validation():
    with pytest.raises(ValueError):
        M1_constant(0.3, 1)
    with pytest.raises(ValueError):
        M2_constant(0.3, 0)


def test_I_constant_readings():
    assert I_constant(3) == pytest.approx(1.5)
    assert I_constant(4) == pytest.approx(8.0 / math.pi)
    assert I_constant_sine_product(3) == pytest.approx(3.0)
    assert I_constant_sine_product(4) == pytest.approx(16.0)  # one factor int |sin| = 4
    for d in range(3, 9):
        assert I_constant(d) > 0 and I_constant_sine_product(d) > 0
    with pytest.raises(ValueError):
        I_constant(2)


def test_lower_bound_outside_window():
    rep = lower_bound(4, 100.1, 1.0)  # eps = 0.1 outside [1/4, 1/2]
    assert not rep.window_ok and rep.lower == 0.0


def test_lower_bound_homogeneity():
    a = lower_bound(5, 100.25, 1.0)
    b = lower_bound(5, 2 * 100.25, 2.0)
    assert b.lower == pytest.approx(2 * a.lower, rel=1e-12)
    assert b.eps == pytest.approx(a.eps)


@pytest.mark.parametrize("d,r", [(4, 100.25), (5, 100.25), (6, 100.3)])
def test_lower_bound_below_computed_limit(d, r):
    rep = lower_bound(d, r, 1.0)
    assert rep.window_ok
    val = limiting_error(np.concatenate(([r], np.zeros(d - 1))), QuantScheme(1.0)).value
    assert rep.lower <= val <= rep.upper_scaling


def test_bound_report_serialization():
    rep = lower_bound(4, 100.25, 1.0)
    d = rep.to_dict()
    assert list(d.keys()) == BOUND_CSV_FIELDS


def test_sandwich_good_cells():
    assert sandwich_check(100.25, 1.0, 2, "even").holds
    assert sandwich_check(1000.25, 1.0, 3, "even").holds
    assert sandwich_check(50.25, 1.0, 1, "odd").holds


def test_sandwich_hypothesis_unmet_states():
    out = sandwich_check(100.1, 1.0, 2, "even")  # eps outside window
    assert out.holds is None and "window" in out.status
    out = sandwich_check(10.25, 1.0, 2, "even")  # R below threshold
    assert out.holds is None and "threshold" in out.status
    assert DEFAULT_R_MIN == 50.0
    with pytest.raises(ValueError):
        sandwich_check(100.25, 1.0, 1, "even")
    with pytest.raises(ValueError):
        sandwich_check(100.25, 1.0, 1, "sideways")


def test_sandwich_fixed_phase_defect_is_reported_not_patched():
    # the fixed-phase lower bound over-claims for n = 2 at eps = 3/8: the
    # leading Bessel term's true phase is (2n+1)pi/4, which kills the k=1
    # contribution there.  The check must fail honestly...
    for r in (100.375, 1000.375):
        out = sandwich_check(r, 1.0, 2, "even")
        assert out.status == "ok" and out.holds is False
        assert out.lower > out.integral_abs
    # ...while the order-matched variant never over-claims (the kernel goes
    # negative there, so the lower bound degrades to the trivial 0)
    for r in (100.375, 1000.375):
        out = sandwich_check(r, 1.0, 2, "even", order_matched_phase=True)
        assert out.status == "ok" and out.holds is True


def test_slope_fit_validation():
    with pytest.raises(ValueError):
        scaling_slope_fit(3, 1.0, 0.25, [100, 200, 300])
    with pytest.raises(ValueError):
        scaling_slope_fit(3, 1.0, 0.05, [100, 200, 300, 400])


def test_slope_fit_quick():
    slope = scaling_slope_fit(3, 1.0, 0.25, [60, 90, 140, 210, 320])
    assert slope == pytest.approx(2.0, abs=0.05)

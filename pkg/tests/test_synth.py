from datetime import date, timedelta

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entrovol.errors import InvalidSpec
from entrovol.series import log_returns
from entrovol.synth import (
    SynthSpec,
    gaussian_returns,
    regime_switch_returns,
    regime_switch_series,
    switch_date,
    to_prices,
    trading_days,
)


def gauss(seed=1, n=100, mu=0.0, sigma=0.02):
    return SynthSpec(kind="gaussian", seed=seed, n=n, mu=mu, sigma=sigma)


class TestGaussianReturns:
    def test_seed_determinism(self):
        a = gaussian_returns(gauss())
        b = gaussian_returns(gauss())
        assert (a == b).all()

    def test_different_seeds_differ(self):
        assert not (gaussian_returns(gauss(seed=1)) == gaussian_returns(gauss(seed=2))).all()

    def test_large_sample_std(self):
        r = gaussian_returns(gauss(n=10 ** 5, sigma=0.02))
        assert 0.0198 <= np.std(r, ddof=1) <= 0.0202

    def test_sigma_scaling_exact(self):
        r1 = gaussian_returns(gauss(sigma=1.0, mu=0.0))
        r3 = gaussian_returns(gauss(sigma=3.0, mu=0.0))
        assert (r3 == 3 * r1).all()

    def test_sigma_scaling_with_drift(self):
        r1 = gaussian_returns(gauss(sigma=0.01, mu=0.001))
        r3 = gaussian_returns(gauss(sigma=0.03, mu=0.001))
        assert np.allclose(r3 - 0.001, 3 * (r1 - 0.001), rtol=0, atol=1e-15)

    @pytest.mark.parametrize("bad", [
        dict(n=None), dict(n=1), dict(sigma=None), dict(sigma=0.0), dict(sigma=-1.0),
    ])
    def test_invalid_spec(self, bad):
        spec = SynthSpec(kind="gaussian", seed=0, **{"n": 100, "sigma": 0.02, **bad})
        with pytest.raises(InvalidSpec):
            gaussian_returns(spec)

    def test_unknown_kind(self):
        with pytest.raises(InvalidSpec):
            SynthSpec(kind="levy", seed=0, n=10, sigma=0.1).validate()


class TestRegimeSwitch:
    def spec(self, **kw):
        base = dict(kind="regime_switch", seed=5, n1=50, n2=50, sigma1=0.01, sigma2=0.02)
        base.update(kw)
        return SynthSpec(**base)

    def test_zero_sigma_rejected(self):
        with pytest.raises(InvalidSpec):
            regime_switch_returns(self.spec(sigma2=0.0))

    def test_degenerate_switch_equals_gaussian(self):
        r = regime_switch_returns(self.spec(sigma2=0.01))
        g = gaussian_returns(SynthSpec(kind="gaussian", seed=5, n=100, sigma=0.01))
        assert np.allclose(r, g, rtol=0, atol=0)

    def test_series_invariants(self):
        s = regime_switch_series(self.spec())
        assert all(c > 0 for c in s.closes)
        assert all(d.weekday() < 5 for d in s.dates)
        assert len(s) == 101

    def test_switch_date_isolates_regimes(self):
        spec = self.spec()
        s = regime_switch_series(spec)
        event = switch_date(spec)
        r = regime_switch_returns(spec)
        before = [c for d, c in zip(s.dates, s.closes) if d < event]
        # the before window holds p0 plus the n1 sigma1-regime prices
        assert len(before) == spec.n1 + 1
        assert np.allclose(np.diff(np.log(before)), r[: spec.n1], rtol=0, atol=1e-12)

    def test_std_ratio_tracks_sigma_ratio(self):
        hits = 0
        for seed in range(30):
            r = regime_switch_returns(self.spec(seed=seed, n1=252, n2=252))
            ratio = np.std(r[252:], ddof=1) / np.std(r[:252], ddof=1)
            if 1.7 <= ratio <= 2.3:
                hits += 1
        assert hits >= 28


class TestToPrices:
    def test_zero_returns(self):
        s = to_prices([0.0, 0.0, 0.0], 100.0, date(2021, 1, 4))
        assert s.closes == (100.0, 100.0, 100.0, 100.0)

    def test_exact_doubling(self):
        s = to_prices([np.log(2.0)], 100.0, date(2021, 1, 4))
        assert s.closes[0] == pytest.approx(100.0)
        assert s.closes[1] == pytest.approx(200.0, rel=1e-14)

    def test_invalid_p0(self):
        with pytest.raises(InvalidSpec):
            to_prices([0.1], -1.0, date(2021, 1, 4))

    def test_weekend_start_rolls_forward(self):
        s = to_prices([0.1], 100.0, date(2021, 1, 2))  # a Saturday
        assert s.dates[0] == date(2021, 1, 4)

    @given(st.lists(st.floats(min_value=-0.2, max_value=0.2), min_size=1, max_size=50))
    @settings(max_examples=100)
    def test_roundtrip_through_log_returns(self, returns):
        s = to_prices(returns, 100.0, date(2021, 1, 4))
        back = log_returns(s).values
        assert np.allclose(back, returns, rtol=0, atol=1e-10)


def test_trading_days_weekdays_only():
    days = trading_days(date(2021, 1, 4), 10)
    assert len(days) == 10
    assert all(d.weekday() < 5 for d in days)
    assert days == tuple(sorted(days))


def test_seeded_series_byte_identical():
    spec = SynthSpec(kind="regime_switch", seed=77, n1=20, n2=20, sigma1=0.01, sigma2=0.03)
    assert regime_switch_series(spec) == regime_switch_series(spec)

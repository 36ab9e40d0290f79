import sys
from datetime import date
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))  # table1_fixture, tools imports
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tools"))

from entrovol.series import PriceSeries
from entrovol.synth import trading_days


def make_prices(closes, symbol="TST", start=date(2021, 1, 4)):
    """PriceSeries on consecutive weekdays starting at start."""
    return PriceSeries(symbol, trading_days(start, len(closes)), tuple(float(c) for c in closes))


@pytest.fixture
def simple_prices():
    return make_prices([100.0, 105.0, 100.0, 110.0, 99.0])

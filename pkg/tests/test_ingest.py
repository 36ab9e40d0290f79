import threading
from datetime import date
from http.server import BaseHTTPRequestHandler, HTTPServer

import pytest

from entrovol.errors import (
    DuplicateDate,
    DuplicateSymbol,
    EmptySeries,
    HttpStatusError,
    MalformedRow,
    ParseError,
    TemplateError,
)
from entrovol.ingest import (
    default_universe,
    fetch_history,
    load_universe,
    parse_date,
    parse_price_csv,
    slice_by_dates,
)


class TestParsePriceCsv:
    def test_minimal(self):
        s = parse_price_csv("Date,Close\n2022-01-03,100.0\n2022-01-04,105.0", "TST")
        assert len(s) == 2
        assert s.dates == (date(2022, 1, 3), date(2022, 1, 4))
        assert s.closes == (100.0, 105.0)

    def test_reverse_order_normalized(self):
        fwd = parse_price_csv("Date,Close\n2022-01-03,100.0\n2022-01-04,105.0", "TST")
        rev = parse_price_csv("Date,Close\n2022-01-04,105.0\n2022-01-03,100.0", "TST")
        assert fwd == rev

    def test_negative_close_rejected_with_row_number(self):
        rows = ["Date,Close"] + [f"2022-01-{3 + i:02d},10{i}" for i in range(10)]
        rows[3] = "2022-01-05,-3"
        with pytest.raises(MalformedRow) as err:
            parse_price_csv("\n".join(rows), "TST")
        assert err.value.line_number == 4

    def test_unparseable_close_rejected(self):
        with pytest.raises(MalformedRow):
            parse_price_csv("Date,Close\n2022-01-03,abc", "TST")

    def test_duplicate_date(self):
        with pytest.raises(DuplicateDate):
            parse_price_csv("Date,Close\n2022-01-03,100\n2022-01-03,101", "TST")

    def test_empty(self):
        with pytest.raises(EmptySeries):
            parse_price_csv("", "TST")
        with pytest.raises(EmptySeries):
            parse_price_csv("Date,Close\n", "TST")

    def test_extra_columns_ignored(self):
        text = "Date,Open,High,Low,Close,Volume\n2022-01-03,99,101,98,100.5,1000\n2022-01-04,100,106,99,105.5,900"
        s = parse_price_csv(text, "TST")
        assert s.closes == (100.5, 105.5)

    def test_headerless_positional_fallback(self):
        s = parse_price_csv("2022-01-03,100.0\n2022-01-04,105.0", "TST")
        assert s.closes == (100.0, 105.0)

    def test_us_dates_accepted(self):
        s = parse_price_csv("Date,Close\n02/24/2022,100.0\n02/25/2022,101.0", "TST")
        assert s.start == date(2022, 2, 24)

    def test_roundtrip_identity(self, simple_prices):
        assert parse_price_csv(simple_prices.to_csv(), simple_prices.symbol) == simple_prices


def test_parse_date_formats():
    assert parse_date("2022-02-24") == parse_date("02/24/2022") == date(2022, 2, 24)
    with pytest.raises(ValueError):
        parse_date("24.02.2022")


def test_slice_by_dates_partial_coverage(simple_prices):
    early = date(2020, 1, 1)
    sliced = slice_by_dates(simple_prices, early, simple_prices.dates[2])
    assert sliced.start == simple_prices.start
    assert len(sliced) == 3


class TestUniverse:
    def test_bundled_default(self):
        u = default_universe()
        assert len(u) == 24
        assert u.index_symbol == "WIG20"
        groups = [a.group for a in u.assets]
        assert groups.count("constant") == 16
        assert groups.count("introduced") == 4
        assert groups.count("removed") == 4
        pco = next(a for a in u.assets if a.symbol == "PCO")
        assert pco.membership_events == ((date(2022, 3, 18), "joined"),)

    def test_empty_asset_list(self):
        u = load_universe("index_symbol,WIG20\n")
        assert len(u) == 0 and u.index_symbol == "WIG20"

    def test_duplicate_symbol(self):
        text = "index_symbol,X\nPKO,Bank PKO,constant\nPKO,Bank PKO,constant\n"
        with pytest.raises(DuplicateSymbol):
            load_universe(text)

    def test_missing_index_symbol(self):
        with pytest.raises(ParseError):
            load_universe("PKO,Bank PKO,constant\n")

    def test_bad_group(self):
        with pytest.raises(ParseError):
            load_universe("index_symbol,X\nPKO,Bank PKO,sometimes\n")


class _StubHandler(BaseHTTPRequestHandler):
    body = "Date,Close\n2022-01-03,100\n2022-01-04,101\n"

    def do_GET(self):
        if self.path.startswith("/missing"):
            self.send_response(404)
            self.end_headers()
            return
        self.send_response(200)
        self.send_header("Content-Type", "text/csv")
        self.end_headers()
        self.wfile.write(self.body.encode())

    def log_message(self, *args):
        pass


@pytest.fixture(scope="module")
def stub_server():
    server = HTTPServer(("127.0.0.1", 0), _StubHandler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_port}"
    server.shutdown()


class TestFetchHistory:
    def test_template_validation(self):
        with pytest.raises(TemplateError):
            fetch_history("http://x/{start}/{end}", "PKO", date(2022, 1, 1), date(2022, 2, 1))

    def test_fetch_ok(self, stub_server):
        body = fetch_history(
            stub_server + "/hist?s={symbol}&a={start}&b={end}",
            "PKO", date(2022, 1, 1), date(2022, 2, 1),
        )
        assert body == _StubHandler.body

    def test_404(self, stub_server):
        with pytest.raises(HttpStatusError) as err:
            fetch_history(
                stub_server + "/missing/{symbol}/{start}/{end}",
                "PKO", date(2022, 1, 1), date(2022, 2, 1),
            )
        assert err.value.code == 404

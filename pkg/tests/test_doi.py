import json

import pytest

from lame.charstream import record_to_dict
from lame.doi import DoiClient, DoiClientConfig, fetch_metadata
from lame.errors import InvalidDoi, NotFound, Upstream


class FakeResponse:
    def __init__(self, status_code=200, payload=None, body=None):
        self.status_code = status_code
        self._payload = payload
        self._body = body

    def json(self):
        if self._payload is None:
            raise ValueError(f"not json: {self._body!r}")
        return self._payload


class FakeHttp:
    def __init__(self, response):
        self.response = response
        self.calls = []

    def __call__(self, url, timeout=None):
        self.calls.append(url)
        return self.response


WORKS = {
    "message": {
        "title": ["Sample Title"],
        "abstract": "<jats:p>Deep abstract text.</jats:p>",
        "subject": ["layout", "parsing"],
        "author": [
            {"given": "Ada", "family": "Lovelace"},
            {"given": "Alan", "family": "Turing"},
        ],
    }
}


def _config(tmp_path, mode="online"):
    return DoiClientConfig(
        base_url="http://resolver.test",
        cache_dir=tmp_path,
        mode=mode,
        min_request_interval=0.0,
    )


def test_invalid_doi(tmp_path):
    with pytest.raises(InvalidDoi):
        fetch_metadata("not-a-doi", _config(tmp_path, mode="fixture"))


def test_fixture_passthrough(tmp_path):
    fixture = {"doc_id": "10.5555/test", "title_en": "Sample", "doi": "10.5555/test"}
    (tmp_path / "10.5555%2Ftest.json").write_text(json.dumps(fixture), encoding="utf-8")
    record = fetch_metadata("10.5555/test", _config(tmp_path, mode="fixture"))
    assert record.title_en == "Sample"


def test_fixture_missing(tmp_path):
    with pytest.raises(NotFound) as err:
        fetch_metadata("10.5555/absent", _config(tmp_path, mode="fixture"))
    assert "10.5555/absent" in str(err.value)


def test_online_maps_and_caches(tmp_path):
    http = FakeHttp(FakeResponse(payload=WORKS))
    client = DoiClient(_config(tmp_path), http_get=http)
    record = client.fetch_metadata("10.5555/test")
    assert record.title_en == "Sample Title"
    assert record.abstract_en == "Deep abstract text."
    assert record.keywords_en == ("layout", "parsing")
    assert record.author_names_en == ("Ada Lovelace", "Alan Turing")
    assert record.doi == "10.5555/test"
    assert http.calls == ["http://resolver.test/works/10.5555%2Ftest"]

    # second call comes from the cache: no further requests
    again = client.fetch_metadata("10.5555/test")
    assert http.calls == ["http://resolver.test/works/10.5555%2Ftest"]
    assert record_to_dict(again) == record_to_dict(record)

    # a fresh client in fixture mode reads the same cache
    offline = DoiClient(_config(tmp_path, mode="fixture"))
    assert offline.fetch_metadata("10.5555/test").title_en == "Sample Title"


def test_online_404(tmp_path):
    client = DoiClient(_config(tmp_path), http_get=FakeHttp(FakeResponse(status_code=404)))
    with pytest.raises(NotFound):
        client.fetch_metadata("10.5555/missing")


def test_online_upstream_errors(tmp_path):
    client = DoiClient(_config(tmp_path), http_get=FakeHttp(FakeResponse(status_code=500)))
    with pytest.raises(Upstream):
        client.fetch_metadata("10.5555/boom")

    client = DoiClient(
        _config(tmp_path), http_get=FakeHttp(FakeResponse(status_code=200, body="<html>"))
    )
    with pytest.raises(Upstream):
        client.fetch_metadata("10.5555/badbody")

    def explode(url, timeout=None):
        raise OSError("connection refused")

    client = DoiClient(_config(tmp_path), http_get=explode)
    with pytest.raises(Upstream) as err:
        client.fetch_metadata("10.5555/refused")
    assert "10.5555/refused" in str(err.value)


def test_base_url_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("LAME_DOI_BASE_URL", "http://other.test/api/")
    http = FakeHttp(FakeResponse(payload=WORKS))
    DoiClient(_config(tmp_path), http_get=http).fetch_metadata("10.1/x")
    assert http.calls == ["http://other.test/api/works/10.1%2Fx"]


def test_request_spacing(tmp_path, monkeypatch):
    times = []

    import lame.doi as doi_mod

    clock = {"now": 0.0}
    monkeypatch.setattr(doi_mod.time, "monotonic", lambda: clock["now"])

    def fake_sleep(seconds):
        times.append(seconds)
        clock["now"] += seconds

    monkeypatch.setattr(doi_mod.time, "sleep", fake_sleep)
    config = DoiClientConfig(
        base_url="http://resolver.test", cache_dir=tmp_path, mode="online",
        min_request_interval=1.5,
    )
    client = DoiClient(config, http_get=FakeHttp(FakeResponse(payload=WORKS)))
    client.fetch_metadata("10.1/a")
    client.fetch_metadata("10.1/b")
    assert times and times[0] == pytest.approx(1.5)

"""DOI resolution client with an on-disk cache and an offline fixture mode.

Fetched responses are mapped onto MetadataRecord (English fields only;
DOI registries do not serve the Korean side) and cached as record JSON,
so fixture mode is simply a cache that is never allowed to miss to the
network.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .charstream import MetadataRecord, record_from_dict, record_to_dict
from .errors import InvalidDoi, NotFound, SchemaError, Upstream
from urllib.parse import quote

_DOI_PATTERN = re.compile(r"^10\.[^/\s]+/\S+$")
_MARKUP_TAG = re.compile(r"<[^<>]*>")

BASE_URL_ENV = "LAME_DOI_BASE_URL"
DEFAULT_BASE_URL = "https://api.crossref.org"


@dataclass(frozen=True)
class DoiClientConfig:
    base_url: str = DEFAULT_BASE_URL
    cache_dir: str | Path = "doi-cache"
    mode: str = "online"
    min_request_interval: float = 1.0
    timeout: float = 10.0

    def __post_init__(self):
        if self.mode not in ("online", "fixture"):
            raise ValueError(f"mode must be 'online' or 'fixture', got {self.mode!r}")
        if self.min_request_interval < 0:
            raise ValueError("min_request_interval must be >= 0")
        if self.mode == "online" and not self.base_url:
            raise ValueError("base_url required in online mode")


def _strip_markup(text: str) -> str:
    return " ".join(_MARKUP_TAG.sub(" ", text).split())


def map_works_response(doi: str, payload: dict) -> MetadataRecord:
    """Map a works-style resolver document onto a MetadataRecord."""
    message = payload.get("message", payload)
    if not isinstance(message, dict):
        raise Upstream(f"{doi}: response has no usable message object")

    kwargs = {}
    titles = message.get("title")
    if isinstance(titles, list) and titles and isinstance(titles[0], str):
        kwargs["title_en"] = titles[0]
    elif isinstance(titles, str) and titles:
        kwargs["title_en"] = titles
    abstract = message.get("abstract")
    if isinstance(abstract, str) and abstract:
        stripped = _strip_markup(abstract)
        if stripped:
            kwargs["abstract_en"] = stripped
    subjects = message.get("subject")
    if isinstance(subjects, list):
        keywords = tuple(s for s in subjects if isinstance(s, str) and s)
        if keywords:
            kwargs["keywords_en"] = keywords
    authors = message.get("author")
    if isinstance(authors, list):
        names = []
        for a in authors:
            if not isinstance(a, dict):
                continue
            name = " ".join(p for p in (a.get("given"), a.get("family")) if isinstance(p, str))
            if name:
                names.append(name)
        if names:
            kwargs["author_names_en"] = tuple(names)

    if not kwargs:
        raise Upstream(f"{doi}: response carries no mappable metadata fields")
    return MetadataRecord(doc_id=doi, doi=doi, **kwargs)


class DoiClient:
    """Serialized DOI lookups with caching and polite request spacing."""

    def __init__(self, config: DoiClientConfig, http_get: Callable | None = None):
        self.config = config
        self._http_get = http_get
        self._last_request: float | None = None

    def _cache_path(self, doi: str) -> Path:
        return Path(self.config.cache_dir) / (quote(doi, safe="") + ".json")

    def _read_cache(self, doi: str) -> MetadataRecord | None:
        path = self._cache_path(doi)
        if not path.is_file():
            return None
        try:
            obj = json.loads(path.read_text(encoding="utf-8"))
            return record_from_dict(obj)
        except (json.JSONDecodeError, SchemaError) as exc:
            raise Upstream(f"{doi}: unreadable cache entry {path.name}: {exc}") from exc

    def _write_cache(self, doi: str, record: MetadataRecord) -> None:
        path = self._cache_path(doi)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(record_to_dict(record), fh, ensure_ascii=False)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def _throttle(self) -> None:
        if self._last_request is not None:
            wait = self.config.min_request_interval - (time.monotonic() - self._last_request)
            if wait > 0:
                time.sleep(wait)
        self._last_request = time.monotonic()

    def fetch_metadata(self, doi: str) -> MetadataRecord:
        if not _DOI_PATTERN.match(doi):
            raise InvalidDoi(f"not a DOI: {doi!r}")

        cached = self._read_cache(doi)
        if cached is not None:
            return cached
        if self.config.mode == "fixture":
            raise NotFound(f"{doi}: no fixture at {self._cache_path(doi)}")

        get = self._http_get
        if get is None:
            import requests

            get = requests.get
        base = os.environ.get(BASE_URL_ENV, self.config.base_url).rstrip("/")
        url = f"{base}/works/{quote(doi, safe='')}"
        self._throttle()
        try:
            response = get(url, timeout=self.config.timeout)
        except Exception as exc:
            raise Upstream(f"{doi}: request failed: {exc}") from exc

        status = getattr(response, "status_code", None)
        if status == 404:
            raise NotFound(f"{doi}: resolver returned 404")
        if status is None or not 200 <= status < 300:
            raise Upstream(f"{doi}: resolver returned status {status}")
        try:
            payload = response.json()
        except Exception as exc:
            raise Upstream(f"{doi}: unparseable response body: {exc}") from exc

        record = map_works_response(doi, payload)
        self._write_cache(doi, record)
        return record


def fetch_metadata(
    doi: str, config: DoiClientConfig, http_get: Callable | None = None
) -> MetadataRecord:
    return DoiClient(config, http_get=http_get).fetch_metadata(doi)

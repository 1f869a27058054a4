import json
import xml.etree.ElementTree as ET

import pytest
from fastapi.testclient import TestClient

from histevents.service import create_app


@pytest.fixture()
def client(populated_store):
    return TestClient(create_app(populated_store))


class TestSearch:
    def test_default_format_is_xml(self, client):
        resp = client.get("/search")
        assert resp.status_code == 200
        assert resp.headers["content-type"].startswith("application/xml")
        assert ET.fromstring(resp.text).tag == "events"

    def test_json_format(self, client):
        resp = client.get("/search", params={"format": "json"})
        assert resp.headers["content-type"].startswith("application/json")
        assert "events" in resp.json()

    def test_n3_format(self, client):
        resp = client.get("/search", params={"format": "n3"})
        assert resp.headers["content-type"].startswith("text/n3")
        assert "@prefix lode:" in resp.text

    def test_date_window(self, client):
        resp = client.get("/search", params={
            "begin_date": "20100101", "end_date": "20101231", "format": "json"})
        events = resp.json()["events"]
        assert events
        assert all(e["date"]["year"] == 2010 for e in events)

    def test_bce_date_window(self, client):
        resp = client.get("/search", params={
            "begin_date": "-00500000", "end_date": "-00400000", "format": "json"})
        events = resp.json()["events"]
        assert events
        assert all(e["date"]["year"] == -44 for e in events)

    def test_language_filter(self, client):
        resp = client.get("/search", params={"language": "it", "format": "json"})
        events = resp.json()["events"]
        assert events
        assert all(e["lang"] == "it" for e in events)

    def test_keyword_filter(self, client):
        resp = client.get("/search", params={"query": "earthquake", "format": "json"})
        events = resp.json()["events"]
        assert events
        assert all("earthquake" in e["description_plain"].lower() for e in events)

    def test_category_filter(self, client):
        resp = client.get("/search", params={
            "category": "Wissenschaft und Technik", "format": "json"})
        events = resp.json()["events"]
        assert events
        assert all("science_technology" in e["category_path"] for e in events)

    def test_links_and_html_flags(self, client):
        plain = client.get("/search", params={"format": "json", "limit": 1}).json()
        rich = client.get("/search", params={
            "format": "json", "limit": 1, "links": "true", "html": "true"}).json()
        assert "links" not in plain["events"][0]
        assert "links" in rich["events"][0]
        assert "description_html" in rich["events"][0]

    def test_pagination(self, client):
        all_ev = client.get("/search", params={"format": "json"}).json()["events"]
        page = client.get("/search", params={
            "format": "json", "limit": 5, "offset": 5}).json()["events"]
        assert page == all_ev[5:10]

    def test_search_php_alias(self, client):
        a = client.get("/search", params={"format": "json"}).text
        b = client.get("/search.php", params={"format": "json"}).text
        assert a == b

    def test_cors_header_present(self, client):
        resp = client.get("/search", headers={"Origin": "http://localhost:5173"})
        assert resp.headers.get("access-control-allow-origin") == "*"


class TestErrors:
    def test_unknown_format_400(self, client):
        resp = client.get("/search", params={"format": "yaml"})
        assert resp.status_code == 400
        assert "format" in resp.json()["error"]

    @pytest.mark.parametrize("bad", ["2010-01-01", "notadate", "999"])
    def test_malformed_date_400(self, client, bad):
        resp = client.get("/search", params={"begin_date": bad})
        assert resp.status_code == 400
        assert "error" in resp.json()

    def test_bad_order_400(self, client):
        resp = client.get("/search", params={"order": "sideways"})
        assert resp.status_code == 400

    def test_inverted_window_400(self, client):
        resp = client.get("/search", params={
            "begin_date": "20110101", "end_date": "20100101"})
        assert resp.status_code == 400

    def test_store_failure_500(self, populated_store):
        client = TestClient(create_app(populated_store))
        populated_store.close()  # force the store to fail mid-flight
        resp = client.get("/search")
        assert resp.status_code == 500
        assert "store failure" in resp.json()["error"]


class TestHealth:
    def test_healthz(self, client, populated_store):
        resp = client.get("/healthz")
        assert resp.status_code == 200
        body = resp.json()
        assert body["status"] == "ok"
        assert body["events"] == populated_store.count()

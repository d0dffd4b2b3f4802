"""Shared fixtures: synthetic corpora, built indexes, a live HTTP server.

Tests marked ``criterion(n)`` get a ``[acceptance] criterion n: PASS/FAIL``
line on the terminal so the acceptance run reads as a checklist.
"""

from __future__ import annotations

import datetime
import json
import socket
import threading
import time

import pytest

import levex
from levex.config import Config
from levex.fixtures import GeneratorSpec, generate
from levex.query import Filters

PAPER_QUERY = (
    "am*etami* OR wekami* OR benzedri* OR perviti* OR perveti* "
    "OR me*ylam*etami* OR neo-pharmedri* OR isophan OR neopharmedri"
)
PAPER_PATTERNS = [
    "am*etami*", "wekami*", "benzedri*", "perviti*", "perveti*",
    "me*ylam*etami*", "neo-pharmedri*", "isophan", "neopharmedri",
]
FULL_RANGE = Filters(datetime.date(1945, 1, 1), datetime.date(1969, 12, 31))


def build_corpus(spec: GeneratorSpec):
    corpus, report = levex.ingest(json.dumps(r) for r in generate(spec))
    assert report.rejected == 0, report.rejections
    return corpus


@pytest.fixture(scope="session")
def corpus_1000():
    """1,000-doc corpus for oracle cross-checks."""
    return build_corpus(GeneratorSpec(seed=42, docs_per_year=40))


@pytest.fixture(scope="session")
def index_1000(corpus_1000):
    return levex.build_index(corpus_1000)


@pytest.fixture(scope="session")
def default_corpus():
    """The 2,500-doc default fixture (seed 1969, 1945-1969, onset 1967)."""
    return build_corpus(GeneratorSpec())


@pytest.fixture(scope="session")
def default_index(default_corpus):
    return levex.build_index(default_corpus)


@pytest.fixture()
def tiny_corpus():
    records = [
        {"id": "a1", "date": "1946-03-10", "title": "Benzedrine in de kliniek",
         "body": "De arts schreef benzedrine voor aan de patiënt.",
         "source": "De Krant"},
        {"id": "a2", "date": "1947-07-01", "title": "Wekamine handel",
         "body": "wekamine wekamine prijzen stijgen in de handel",
         "source": "De Krant"},
        {"id": "a3", "date": "1955-01-02", "title": "Sport",
         "body": "De wedstrijd eindigde gelijk.", "source": "Ander Blad"},
        {"id": "a4", "date": "1968-11-30", "title": "Verslaving neemt toe",
         "body": "Misbruik van amfetamine leidt tot verslaving zegt de arts.",
         "source": "Ander Blad"},
    ]
    corpus, report = levex.ingest(json.dumps(r) for r in records)
    assert report.rejected == 0
    return corpus


@pytest.fixture()
def tiny_index(tiny_corpus):
    return levex.build_index(tiny_corpus)


# --- live HTTP server --------------------------------------------------------


class LiveServer:
    def __init__(self, corpus, index, session_dir: str):
        import uvicorn

        from levex.service import create_app
        from levex.session import SessionStore

        sock = socket.socket()
        sock.bind(("127.0.0.1", 0))
        self.port = sock.getsockname()[1]
        sock.close()
        self.base = f"http://127.0.0.1:{self.port}"
        app = create_app(corpus, index, SessionStore(session_dir),
                         Config(session_dir=session_dir))
        uv_config = uvicorn.Config(app, host="127.0.0.1", port=self.port,
                                   log_level="warning", access_log=False)
        self.server = uvicorn.Server(uv_config)
        self.thread = threading.Thread(target=self.server.run, daemon=True)

    def start(self):
        import httpx

        self.thread.start()
        deadline = time.time() + 15
        while time.time() < deadline:
            try:
                if httpx.get(self.base + "/api/v1/health", timeout=1).status_code == 200:
                    return self
            except Exception:
                time.sleep(0.05)
        raise RuntimeError("server did not come up")

    def stop(self):
        self.server.should_exit = True
        self.thread.join(timeout=10)


@pytest.fixture(scope="session")
def live_server(default_corpus, default_index, tmp_path_factory):
    server = LiveServer(default_corpus, default_index,
                        str(tmp_path_factory.mktemp("live-session")))
    server.start()
    yield server
    server.stop()


# --- acceptance checklist output ----------------------------------------------


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        verdict = "PASS" if report.passed else "FAIL"
        line = f"[acceptance] criterion {marker.args[0]}: {verdict}"
        terminal = item.config.pluginmanager.get_plugin("terminalreporter")
        if terminal is not None:
            terminal.write_line("")
            terminal.write_line(line)
        else:
            print(line)

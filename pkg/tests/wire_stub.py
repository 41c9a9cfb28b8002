"""In-process HTTP stub speaking the provider wire protocol, for client tests
and remote-mode pipeline runs. Backed by the reference providers unless a
behavior override is installed."""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from candle.providers import reference_providers


class WireStub:
    def __init__(self):
        self.providers = reference_providers()
        self.overrides = {}  # path -> callable(payload) -> (status, body)
        self.fail_next = {}  # path -> count of 503s to serve first
        self.request_log = []

        stub = self

        class Handler(BaseHTTPRequestHandler):
            def log_message(self, *args):
                pass

            def _send(self, status, body):
                data = json.dumps(body).encode("utf-8")
                self.send_response(status)
                self.send_header("Content-Type", "application/json")
                self.send_header("Content-Length", str(len(data)))
                self.end_headers()
                self.wfile.write(data)

            def do_GET(self):
                if self.path == "/v1/health":
                    self._send(
                        200,
                        {
                            "status": "ok",
                            "models": {
                                "annotator": "reference-annotator",
                                "embedder": "reference-hash-64",
                                "nli": "reference-cue-lexicon",
                                "summarizer": "reference-medoid",
                            },
                            "embedding_dim": stub.providers.embedder.dim,
                            "max_batch": 64,
                        },
                    )
                else:
                    self._send(404, {"error": "not found"})

            def do_POST(self):
                length = int(self.headers.get("Content-Length", 0))
                payload = json.loads(self.rfile.read(length) or b"{}")
                stub.request_log.append((self.path, payload))
                if stub.fail_next.get(self.path, 0) > 0:
                    stub.fail_next[self.path] -= 1
                    self._send(503, {"error": "transient"})
                    return
                if self.path in stub.overrides:
                    status, body = stub.overrides[self.path](payload)
                    self._send(status, body)
                    return
                try:
                    self._send(200, stub._handle(self.path, payload))
                except KeyError:
                    self._send(404, {"error": "not found"})

        self.server = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
        self.thread = threading.Thread(
            target=lambda: self.server.serve_forever(poll_interval=0.02), daemon=True
        )

    def _handle(self, path, payload):
        if path == "/v1/annotate":
            return {"documents": [{"sentences": self.providers.annotator.annotate(t)} for t in payload["texts"]]}
        if path == "/v1/embed":
            vectors = self.providers.embedder.embed(payload["texts"])
            return {"vectors": [list(map(float, row)) for row in vectors], "dim": self.providers.embedder.dim}
        if path == "/v1/nli":
            return {"entail_probs": self.providers.nli.entail(payload["premise"], payload["hypotheses"])}
        if path == "/v1/summarize":
            return {"summary": self.providers.summarizer.summarize(payload["sentences"])}
        raise KeyError(path)

    @property
    def base_url(self) -> str:
        host, port = self.server.server_address
        return f"http://{host}:{port}"

    def __enter__(self):
        self.thread.start()
        return self

    def __exit__(self, *exc):
        self.server.shutdown()
        self.server.server_close()

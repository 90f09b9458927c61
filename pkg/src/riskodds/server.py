"""JSON-over-HTTP endpoint, plus optional static hosting of the web UI.

Every handler is stateless and the core is pure, so concurrent requests
are safe without locking. Responses reuse the same payload builders and
serializer as the CLI's json format.
"""

from __future__ import annotations

import json
import mimetypes
import os
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import api
from .errors import DomainError
from .simulate import SimConfig

_MAX_BODY = 1 << 20


def _odds(body):
    return api.odds_payload(api.parse_plan_body(body))


def _dist(body):
    return api.dist_payload(api.parse_plan_body(body))


def _expect(body):
    return api.expect_payload(api.parse_plan_body(body))


def _survivors(body):
    return api.survivors_payload(api.parse_plan_body(body))


def _threshold(body):
    attack = api._require_int_list(body, "attack")
    limit = api._optional_int(body, "limit", 30)
    from .combat import RuleSet

    rules = RuleSet().with_bonus(
        attacker=api._optional_bool(body, "bonus_attack_die"),
        defender=api._optional_bool(body, "bonus_defense_die"),
    )
    return api.threshold_payload(attack, rules=rules, search_limit=limit)


def _simulate(body):
    plan = api.parse_plan_body(body)
    trials = api._optional_int(body, "trials", 100_000)
    seed = api._optional_int(body, "seed", 0)
    partitions = api._optional_int(body, "partitions", 1)
    return api.simulate_payload(SimConfig(plan=plan, trials=trials, seed=seed),
                                partitions=partitions)


_POST_ROUTES = {
    "/api/odds": _odds,
    "/api/dist": _dist,
    "/api/expect": _expect,
    "/api/survivors": _survivors,
    "/api/threshold": _threshold,
    "/api/simulate": _simulate,
}


class ApiHandler(BaseHTTPRequestHandler):
    ui_dir: str | None = None
    protocol_version = "HTTP/1.1"

    def log_message(self, format, *args):
        pass

    def _send_json(self, status: int, payload: dict) -> None:
        body = api.to_json(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _send_error_json(self, status: int, field: str | None, message: str) -> None:
        self._send_json(status, {"field": field, "message": message})

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_POST(self):
        handler = _POST_ROUTES.get(self.path)
        if handler is None:
            if self.path == "/api/rules":
                self._send_error_json(405, "path", "use GET for /api/rules")
            else:
                self._send_error_json(404, "path", f"unknown endpoint {self.path}")
            return
        try:
            length = int(self.headers.get("Content-Length", 0))
        except ValueError:
            self._send_error_json(400, "Content-Length", "invalid Content-Length header")
            return
        if length > _MAX_BODY:
            self._send_error_json(413, "body", "request body too large")
            return
        raw = self.rfile.read(length) if length else b""
        try:
            body = json.loads(raw) if raw else {}
        except json.JSONDecodeError as err:
            self._send_error_json(400, "body", f"request body is not valid JSON: {err}")
            return
        if not isinstance(body, dict):
            self._send_error_json(400, "body", "request body must be a JSON object")
            return
        try:
            payload = handler(body)
        except DomainError as err:
            self._send_error_json(400, err.field, str(err))
            return
        except Exception as err:  # invariant breach, not user error
            self._send_error_json(500, None, f"internal error: {err}")
            return
        self._send_json(200, payload)

    def do_GET(self):
        if self.path == "/api/rules":
            self._send_json(200, api.default_rules_payload())
            return
        if self.path.startswith("/api/"):
            self._send_error_json(404, "path", f"unknown endpoint {self.path}")
            return
        self._serve_static()

    def _serve_static(self):
        if self.ui_dir is None:
            self._send_error_json(404, "path", "no UI assets configured; API lives under /api/")
            return
        root = os.path.realpath(self.ui_dir)
        rel = self.path.split("?", 1)[0].lstrip("/")
        if rel == "":
            rel = "index.html"
        target = os.path.realpath(os.path.join(root, rel))
        if os.path.commonpath([root, target]) != root:
            self._send_error_json(404, "path", "not found")
            return
        if not os.path.isfile(target):
            self._send_error_json(404, "path", "not found")
            return
        ctype = mimetypes.guess_type(target)[0] or "application/octet-stream"
        with open(target, "rb") as fh:
            data = fh.read()
        self.send_response(200)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)


def make_server(host: str, port: int, ui_dir: str | None = None) -> ThreadingHTTPServer:
    """Build (but do not start) the HTTP server; port 0 picks a free port."""
    handler = type("BoundApiHandler", (ApiHandler,), {"ui_dir": ui_dir})
    return ThreadingHTTPServer((host, port), handler)


def serve(host: str, port: int, ui_dir: str | None = None) -> None:
    """Run the API server until interrupted."""
    httpd = make_server(host, port, ui_dir=ui_dir)
    location = f"http://{host}:{httpd.server_address[1]}"
    extra = f", hosting UI from {ui_dir}" if ui_dir else ""
    print(f"serving {location}/api/*{extra}")
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()

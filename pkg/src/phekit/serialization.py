"""Canonical text formats for keys and ciphertext payloads.

Documents are JSON with sorted keys, no insignificant whitespace, and a
trailing newline; every arbitrary-precision integer is a decimal string so no
JSON reader mangles it. Parsing a canonical document and re-serializing it is
byte-identical. The key fingerprint is the SHA-256 of the canonical
public-only key document.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any, Optional

from .capabilities import ALGORITHMS
from .ec import CurvePoint
from .errors import ParseError
from .schemes import SCHEME_CLASSES, KeyPair, Payload

FORMAT_VERSION = 1

# params entries that hold integers; everything else stays a string
_INT_PARAMS = {"s", "dlp_bound", "block_size", "prime_count", "plaintext_bits"}


def canonical_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _require(condition: bool, field: str, detail: str) -> None:
    if not condition:
        raise ParseError(f"field {field!r}: {detail}")


def _parse_natural(value: Any, field: str) -> int:
    _require(isinstance(value, str), field, "expected a decimal string")
    _require(value.isdigit(), field, f"not a decimal integer: {value!r}")
    return int(value)


def _params_doc(params: dict[str, Any]) -> dict[str, Any]:
    doc = {}
    for key, value in params.items():
        doc[key] = str(value) if isinstance(value, int) else value
    return doc


def _params_from_doc(doc: Any) -> dict[str, Any]:
    _require(isinstance(doc, dict), "params", "expected an object")
    params: dict[str, Any] = {}
    for key, value in doc.items():
        if key in _INT_PARAMS:
            params[key] = _parse_natural(value, f"params.{key}")
        else:
            _require(isinstance(value, str), f"params.{key}", "expected a string")
            params[key] = value
    return params


def key_document(keys: KeyPair, include_private: bool = True) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "algorithm": keys.algorithm,
        "security_bits": keys.security_bits,
        "params": _params_doc(keys.params),
        "public": {k: str(v) for k, v in keys.public.items()},
    }
    if include_private and keys.has_private:
        doc["private"] = {k: str(v) for k, v in keys.private.items()}
    return doc


def serialize_key(keys: KeyPair, include_private: bool = True) -> str:
    return canonical_json(key_document(keys, include_private))


def parse_key(text: str) -> KeyPair:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"key document is not valid JSON: {exc}") from None
    _require(isinstance(doc, dict), "(document)", "expected a JSON object")
    version = doc.get("format_version")
    _require(version == FORMAT_VERSION, "format_version",
             f"unknown version {version!r} (expected {FORMAT_VERSION})")
    algorithm = doc.get("algorithm")
    _require(algorithm in ALGORITHMS, "algorithm", f"unknown algorithm {algorithm!r}")
    bits = doc.get("security_bits")
    _require(isinstance(bits, int) and not isinstance(bits, bool),
             "security_bits", "expected an integer")
    public_doc = doc.get("public")
    _require(isinstance(public_doc, dict), "public", "expected an object")
    public = {k: _parse_natural(v, f"public.{k}") for k, v in public_doc.items()}
    private: Optional[dict[str, int]] = None
    if "private" in doc:
        private_doc = doc["private"]
        _require(isinstance(private_doc, dict), "private", "expected an object")
        private = {k: _parse_natural(v, f"private.{k}") for k, v in private_doc.items()}
    return KeyPair(
        algorithm=algorithm,
        security_bits=bits,
        public=public,
        private=private,
        params=_params_from_doc(doc.get("params", {})),
    )


def key_fingerprint(keys: KeyPair) -> str:
    public_text = serialize_key(keys, include_private=False)
    return hashlib.sha256(public_text.encode()).hexdigest()


# -- ciphertext payloads ------------------------------------------------------


def _point_doc(point: CurvePoint) -> Optional[list[str]]:
    if point.is_identity:
        return None
    return [str(point.x), str(point.y)]


def _point_from_doc(doc: Any, field: str) -> CurvePoint:
    if doc is None:
        return CurvePoint(None, None)
    _require(isinstance(doc, list) and len(doc) == 2, field,
             "expected null or a two-element coordinate list")
    return CurvePoint(
        _parse_natural(doc[0], f"{field}[0]"), _parse_natural(doc[1], f"{field}[1]")
    )


def payload_to_doc(payload: Payload) -> dict[str, Any]:
    if isinstance(payload, int) and not isinstance(payload, bool):
        return {"kind": "single", "data": str(payload)}
    if isinstance(payload, list):
        return {"kind": "bits", "data": [str(v) for v in payload]}
    if isinstance(payload, tuple) and len(payload) == 2:
        a, b = payload
        if isinstance(a, CurvePoint):
            return {"kind": "point_pair", "data": [_point_doc(a), _point_doc(b)]}
        return {"kind": "pair", "data": [str(a), str(b)]}
    raise ParseError(f"field 'payload': unserializable value {payload!r}")


def payload_from_doc(doc: Any, algorithm: str) -> Payload:
    _require(isinstance(doc, dict), "payload", "expected an object")
    kind = doc.get("kind")
    expected = SCHEME_CLASSES[algorithm].payload_variant
    _require(
        kind == expected, "payload.kind",
        f"algorithm {algorithm} carries a {expected} payload, document says {kind!r}",
    )
    data = doc.get("data")
    if kind == "single":
        return _parse_natural(data, "payload.data")
    if kind == "pair":
        _require(isinstance(data, list) and len(data) == 2, "payload.data",
                 "expected a two-element list")
        return (
            _parse_natural(data[0], "payload.data[0]"),
            _parse_natural(data[1], "payload.data[1]"),
        )
    if kind == "bits":
        _require(isinstance(data, list) and len(data) >= 1, "payload.data",
                 "expected a non-empty list")
        return [
            _parse_natural(v, f"payload.data[{i}]") for i, v in enumerate(data)
        ]
    # point_pair
    _require(isinstance(data, list) and len(data) == 2, "payload.data",
             "expected a two-element list")
    return (
        _point_from_doc(data[0], "payload.data[0]"),
        _point_from_doc(data[1], "payload.data[1]"),
    )

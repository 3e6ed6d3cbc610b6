"""Versioned JSON document format for pipelines, scenarios, and authority.

Capacities, factors, and assist bounds are written as exact text — "3",
"3.25", or "13/4" — and parsed back to the identical rational, so a
document round-trips losslessly.  Schema (format_version "1"):

    {
      "format_version": "1",
      "pipeline": {
        "name": "example",
        "stages": [{"id": "a", "capacity": "3"}, ...]
      },
      "authority": {                      # optional
        "human_stages": ["a"],
        "assist_bounds": {"a": "2"}       # optional
      },
      "scenarios": {                      # optional
        "boost": {"b": "2"}               # stages omitted default to 1
      }
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .ceiling import AuthoritySpec, ConfigurationError
from .model import (
    Multiplier,
    Pipeline,
    ValidationReport,
    validate_pipeline,
)

FORMAT_VERSION = "1"


class DocumentError(ValueError):
    """A document fails to parse or violates the schema."""


@dataclass(frozen=True)
class PipelineDocument:
    format_version: str
    name: str
    pipeline: Pipeline
    authority: Optional[AuthoritySpec]
    scenarios: Mapping[str, Multiplier]

    def scenario(self, name: Optional[str]) -> Multiplier:
        """Named scenario, or the identity when name is None."""
        if name is None:
            return Multiplier.identity(self.pipeline)
        if name not in self.scenarios:
            raise DocumentError(
                f"no scenario named {name!r}; have {sorted(self.scenarios)}"
            )
        return self.scenarios[name]


def _exact(text, what: str) -> Fraction:
    if isinstance(text, bool) or isinstance(text, float):
        raise DocumentError(
            f"{what} must be exact text or an integer, got {text!r}"
        )
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise DocumentError(f"{what} is not an exact rational: {exc}") from None


def parse_document(text: str) -> PipelineDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise DocumentError("document root must be an object")

    version = raw.get("format_version")
    if version != FORMAT_VERSION:
        raise DocumentError(
            f"unsupported format_version {version!r} (expected {FORMAT_VERSION!r})"
        )

    pipe_raw = raw.get("pipeline")
    if not isinstance(pipe_raw, dict) or "stages" not in pipe_raw:
        raise DocumentError("missing pipeline.stages")
    name = pipe_raw.get("name", "")
    stage_records = pipe_raw["stages"]
    if not isinstance(stage_records, list):
        raise DocumentError("pipeline.stages must be a list of stage records")
    stages = []
    capacity = {}
    for rec in stage_records:
        if not isinstance(rec, dict) or "id" not in rec or "capacity" not in rec:
            raise DocumentError(f"stage record {rec!r} needs 'id' and 'capacity'")
        sid = rec["id"]
        stages.append(sid)
        capacity[sid] = _exact(rec["capacity"], f"capacity of stage {sid!r}")

    result = validate_pipeline(stages, capacity)
    if isinstance(result, ValidationReport):
        raise DocumentError(
            "invalid pipeline: " + "; ".join(result.violations)
        )
    pipeline = result

    authority = None
    if "authority" in raw:
        auth_raw = raw["authority"]
        if not isinstance(auth_raw, dict) or "human_stages" not in auth_raw:
            raise DocumentError("authority must carry human_stages")
        human = auth_raw["human_stages"]
        unknown = sorted(set(human) - set(pipeline.stages))
        if unknown:
            raise DocumentError(f"authority names unknown stages {unknown}")
        bounds = None
        if "assist_bounds" in auth_raw:
            bounds = {
                s: _exact(v, f"assist bound of stage {s!r}")
                for s, v in auth_raw["assist_bounds"].items()
            }
        try:
            authority = AuthoritySpec(human, bounds)
        except ConfigurationError as exc:
            raise DocumentError(f"invalid authority: {exc}") from None

    scenarios = {}
    for scen_name, factors_raw in raw.get("scenarios", {}).items():
        if not isinstance(factors_raw, dict):
            raise DocumentError(f"scenario {scen_name!r} must map stages to factors")
        unknown = sorted(set(factors_raw) - set(pipeline.stages))
        if unknown:
            raise DocumentError(
                f"scenario {scen_name!r} names unknown stages {unknown}"
            )
        factors = {s: Fraction(1) for s in pipeline.stages}
        for s, v in factors_raw.items():
            factors[s] = _exact(v, f"factor of stage {s!r} in {scen_name!r}")
        try:
            scenarios[scen_name] = Multiplier(factors)
        except ValueError as exc:
            raise DocumentError(f"scenario {scen_name!r}: {exc}") from None

    return PipelineDocument(
        format_version=version,
        name=name,
        pipeline=pipeline,
        authority=authority,
        scenarios=scenarios,
    )


def document_dict(doc: PipelineDocument) -> dict:
    out: dict = {
        "format_version": doc.format_version,
        "pipeline": {
            "name": doc.name,
            "stages": [
                {"id": s, "capacity": str(doc.pipeline.capacity[s])}
                for s in doc.pipeline.stages
            ],
        },
    }
    if doc.authority is not None:
        auth: dict = {
            "human_stages": sorted(doc.authority.human_stages),
        }
        if doc.authority.assist_bound is not None:
            auth["assist_bounds"] = {
                s: str(b) for s, b in sorted(doc.authority.assist_bound.items())
            }
        out["authority"] = auth
    if doc.scenarios:
        out["scenarios"] = {
            name: {s: str(f) for s, f in sorted(mult.factor.items())}
            for name, mult in sorted(doc.scenarios.items())
        }
    return out


def serialize_document(doc: PipelineDocument) -> str:
    return json.dumps(document_dict(doc), indent=2, sort_keys=True) + "\n"


def document_for_pipeline(pipeline: Pipeline, name: str = "") -> PipelineDocument:
    return PipelineDocument(
        format_version=FORMAT_VERSION,
        name=name,
        pipeline=pipeline,
        authority=None,
        scenarios={},
    )


def load_document(path) -> PipelineDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_document(fh.read())
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None

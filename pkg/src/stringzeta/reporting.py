"""Uniform verification-report records.

Every check in the package reports through this schema so the CLI can
stream JSON lines with a stable layout:
{schema, check, params, route_a, route_b, max_abs_diff | "exact", pass}.
"""

from __future__ import annotations

SCHEMA_VERSION = 1


def report(check: str, params: dict, route_a: str, route_b: str,
           diff, passed: bool, detail=None) -> dict:
    rec = {
        "schema": SCHEMA_VERSION,
        "check": check,
        "params": params,
        "route_a": route_a,
        "route_b": route_b,
        "max_abs_diff": diff,
        "pass": bool(passed),
    }
    if detail is not None:
        rec["detail"] = detail
    return rec

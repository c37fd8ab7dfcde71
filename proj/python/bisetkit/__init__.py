"""Exact computations in double Burnside algebras of small finite groups."""

import json as _json

from _bisetkit import (  # noqa: F401
    a5_report_json,
    basis,
    dim_delta,
    dim_simple,
    group_name,
    group_order,
    nv,
    qh_verdict,
    report_json,
    subgroup_class_count,
    subquotients,
)


def report(group):
    """Full structural report (vanishing table, matrices, certificate) as a dict."""
    return _json.loads(report_json(group))


def a5_report():
    """The alternating-group-of-degree-5 analysis as a dict."""
    return _json.loads(a5_report_json())

"""Scenario reports as pandas frames, written as CSV or JSON."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from collections import OrderedDict
import json

import numpy as np
import pandas

COLUMNS = ["scenario", "sample_index", "I_coords", "u", "v", "residual", "tolerance", "pass"]
FLOAT_FORMAT = "%.12g"
JSON_PRECISION = 15


class Sample(object):
    """One checked quantity: where it was sampled, its residual and tolerance."""

    __slots__ = ("I", "u", "v", "residual", "tolerance")

    def __init__(self, I, u, v, residual, tolerance):
        self.I = I
        self.u = u
        self.v = v
        self.residual = float(residual)
        self.tolerance = float(tolerance)

    def __repr__(self):
        return "Sample(u={!r}, v={!r}, residual={!r}, tolerance={!r})".format(
            self.u, self.v, self.residual, self.tolerance
        )


def _nan(value):
    return np.nan if value is None else float(value)


class ScenarioReport(object):
    """Per-sample residual records of one scenario run.

    Args:
        scenario: Registry name.
        config: Echo of the run configuration.
        samples: Sequence of Sample, in sample order.
        wall_time: Seconds spent; kept out of the serialized report.
        error: Message of the error that stopped the scenario, if any. Such a
            report holds a single failing row with no residual.
    """

    def __init__(self, scenario, config, samples, wall_time=None, error=None):
        self.scenario = scenario
        self.config = OrderedDict(config)
        self.wall_time = wall_time
        self.error = error
        rows = [
            [
                scenario,
                index,
                "" if sample.I is None else sample.I.label(),
                _nan(sample.u),
                _nan(sample.v),
                sample.residual,
                sample.tolerance,
                bool(sample.residual <= sample.tolerance),
            ]
            for index, sample in enumerate(samples)
        ]
        if error is not None:
            rows = [[scenario, 0, "", np.nan, np.nan, np.nan, np.nan, False]]
        self.frame = pandas.DataFrame(rows, columns=COLUMNS)

    @property
    def max_residual(self):
        if self.frame.empty:
            return 0.0
        return float(self.frame["residual"].max())

    @property
    def verdict(self):
        return self.error is None and bool(self.frame["pass"].all())

    @property
    def failures(self):
        return int((~self.frame["pass"]).sum())

    def to_csv(self, path_or_buf=None):
        return self.frame.to_csv(path_or_buf, index=False, float_format=FLOAT_FORMAT)

    def to_dict(self):
        return OrderedDict(
            [
                ("scenario", self.scenario),
                ("config", self.config),
                ("max_residual", self.max_residual),
                ("verdict", self.verdict),
                ("error", self.error),
                (
                    "records",
                    json.loads(self.frame.to_json(orient="records", double_precision=JSON_PRECISION)),
                ),
            ]
        )

    def to_json(self, path=None):
        return _dump(self.to_dict(), path)

    def __repr__(self):
        return "ScenarioReport({!r}, samples={}, max_residual={:.3e}, verdict={})".format(
            self.scenario, len(self.frame), self.max_residual, self.verdict
        )


def _dump(payload, path):
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if path is None:
        return text
    with open(path, "w") as handle:
        handle.write(text)


def summary(reports):
    """One row per scenario: samples, failures, max residual and verdict."""
    return pandas.DataFrame(
        [
            [
                report.scenario,
                len(report.frame),
                report.failures,
                report.max_residual,
                report.verdict,
                report.error or "",
            ]
            for report in reports
        ],
        columns=["scenario", "samples", "failures", "max_residual", "pass", "error"],
    )


def combined_csv(reports, path_or_buf=None):
    frame = pandas.concat([report.frame for report in reports], ignore_index=True)
    return frame.to_csv(path_or_buf, index=False, float_format=FLOAT_FORMAT)


def combined_json(reports, path=None):
    payload = OrderedDict(
        [
            ("reports", [report.to_dict() for report in reports]),
            ("verdict", all(report.verdict for report in reports)),
        ]
    )
    return _dump(payload, path)

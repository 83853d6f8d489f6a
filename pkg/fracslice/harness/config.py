"""Run configuration of the scenario harness.

A configuration file is a flat list of ``key = value`` lines with ``#``
comments and no sections. Unknown keys, unparsable values and invalid
combinations raise ConfigError before anything is computed.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from collections import OrderedDict
import configparser
import logging
import os

from fracslice.calculus.differentiation import FDPolicy
from fracslice.calculus.quadrature import SCHEMES, QuadratureSpec
from fracslice.calculus.weights import weight_from_family
from fracslice.error_message import ConfigError
from fracslice.monogenic.domain import AxialBox
from fracslice.operators.config import FracSliceConfig, MembershipGrid

logger = logging.getLogger(__name__)

SECTION = "fracslice"
TOLERANCE_PREFIX = "tolerance."
DEFAULT_CONFIG = os.path.join(os.path.dirname(os.path.abspath(__file__)), "default.cfg")
FAMILIES = ("affine", "exp")
FORMATS = ("csv", "json")

# key -> (parser, default)
KEYS = OrderedDict(
    [
        ("n", (int, 3)),
        ("a", (float, 0.0)),
        ("b", (float, 1.0)),
        ("c", (float, 1.0)),
        ("alpha", (float, 0.5)),
        ("beta", (float, 0.5)),
        ("lambda", (float, 0.0)),
        ("g_family", (str, "affine")),
        ("g_delta1", (float, 1.0)),
        ("g_delta2", (float, 0.0)),
        ("h_family", (str, "affine")),
        ("h_rho1", (float, 1.0)),
        ("h_rho2", (float, 0.0)),
        ("exp_lambda", (float, 0.4)),
        ("exp_delta1", (float, -1.0)),
        ("exp_delta2", (float, 1.0)),
        ("exp_rho1", (float, -1.0)),
        ("exp_rho2", (float, 1.0)),
        ("r", (float, 0.5)),
        ("s", (float, 0.5)),
        ("quad_scheme", (str, "gauss-jacobi")),
        ("quad_order", (int, 16)),
        ("fd_step", (float, 1e-3)),
        ("fd_levels", (int, 2)),
        ("grid_u", (int, 4)),
        ("grid_v", (int, 4)),
        ("slices", (int, 3)),
        ("points", (int, 50)),
        ("seed", (int, 42)),
        ("perturbation", (float, 0.0)),
        ("out", (str, "")),
        ("format", (str, "csv")),
    ]
)


def _parse(key, raw):
    parser = KEYS[key][0]
    try:
        return parser(raw.strip())
    except ValueError:
        raise ConfigError("Cannot parse {} = {!r} as {}".format(key, raw, parser.__name__))


def read_config_file(path):
    """Read a flat key = value file into a dict of raw strings."""
    if not os.path.exists(path):
        raise ConfigError("Config file {} does not exist".format(path))
    parser = configparser.ConfigParser(
        inline_comment_prefixes=("#",), interpolation=None, delimiters=("=",)
    )
    parser.optionxform = str
    with open(path) as handle:
        text = handle.read()
    try:
        parser.read_string("[{}]\n{}".format(SECTION, text), source=path)
    except configparser.Error as err:
        raise ConfigError("Malformed config file {}: {}".format(path, err))
    return OrderedDict(parser.items(SECTION))


class RunConfig(object):
    """Validated settings of one harness run.

    Args:
        values: Mapping of config keys to raw strings or parsed values.
            Missing keys take their defaults.
    """

    def __init__(self, values=None):
        settings = OrderedDict((key, default) for key, (_, default) in KEYS.items())
        tolerances = OrderedDict()
        for key, value in (values or {}).items():
            if key.startswith(TOLERANCE_PREFIX):
                name = key[len(TOLERANCE_PREFIX):]
                try:
                    tolerances[name] = float(value)
                except ValueError:
                    raise ConfigError("Cannot parse tolerance {} = {!r}".format(name, value))
                continue
            if key not in KEYS:
                raise ConfigError("Unknown config key {!r}".format(key))
            settings[key] = _parse(key, value) if isinstance(value, str) else value
        self.settings = settings
        self.tolerances = tolerances
        self._validate()

    @classmethod
    def from_file(cls, path=None, overrides=None):
        """Load path (the shipped default when None) and apply overrides on top."""
        values = read_config_file(path or DEFAULT_CONFIG)
        values.update(overrides or {})
        logger.debug("Config %s with overrides %s", path or DEFAULT_CONFIG, sorted(overrides or {}))
        return cls(values)

    def __getitem__(self, key):
        return self.settings[key]

    def _validate(self):
        get = self.settings.get
        if not 1 <= get("n") <= 6:
            raise ConfigError("n must be in [1, 6], got {}".format(get("n")))
        for key in ("g_family", "h_family"):
            if get(key) not in FAMILIES:
                raise ConfigError("{} must be one of {}, got {!r}".format(key, FAMILIES, get(key)))
        if get("quad_scheme") not in SCHEMES:
            raise ConfigError("quad_scheme must be one of {}".format(SCHEMES))
        if get("format") not in FORMATS:
            raise ConfigError("format must be one of {}, got {!r}".format(FORMATS, get("format")))
        for key in ("grid_u", "grid_v", "slices", "points"):
            if get(key) < 1:
                raise ConfigError("{} must be positive".format(key))
        for name, value in self.tolerances.items():
            if not value > 0:
                raise ConfigError("Tolerance for {} must be positive".format(name))
        # Building every derived object runs the remaining checks.
        try:
            self.box = AxialBox(get("a"), get("b"), get("c"))
            self.quad = QuadratureSpec(
                get("quad_scheme"), get("quad_order"), FDPolicy(get("fd_step"), get("fd_levels"))
            )
            self.grid = MembershipGrid(get("grid_u"), get("grid_v"), get("slices"), get("seed"))
            self.primary = self._fracslice_config(
                get("lambda"),
                (get("g_family"), get("g_delta1"), get("g_delta2")),
                (get("h_family"), get("h_rho1"), get("h_rho2")),
            )
            self.exponential = self._fracslice_config(
                get("exp_lambda"),
                ("exp", get("exp_delta1"), get("exp_delta2")),
                ("exp", get("exp_rho1"), get("exp_rho2")),
            )
        except ConfigError:
            raise
        except ValueError as err:
            raise ConfigError(str(err))

    def _fracslice_config(self, lam, g_spec, h_spec):
        box = self.box
        g = weight_from_family(g_spec[0], g_spec[1], g_spec[2], lam, (box.a, box.b))
        h = weight_from_family(h_spec[0], h_spec[1], h_spec[2], lam, (0.0, box.c))
        return FracSliceConfig(
            box,
            self["alpha"],
            self["beta"],
            lam,
            g,
            h,
            (self["r"], self["s"]),
            self.quad,
        )

    @property
    def kernel(self):
        """Configuration of the kernel scenarios: the primary one when lambda = 0,
        else identity weights on the same box."""
        if self.primary.lam == 0.0:
            return self.primary
        return self._fracslice_config(0.0, ("affine", 1.0, 0.0), ("affine", 1.0, 0.0))

    @property
    def families(self):
        """The (label, FracSliceConfig) pairs swept by two-family scenarios."""
        return [("primary", self.primary), ("exp", self.exponential)]

    def tolerance(self, scenario, default):
        return self.tolerances.get(scenario, default)

    def echo(self):
        """Flat dict of every setting, for reports."""
        echo = OrderedDict(self.settings)
        for name, value in self.tolerances.items():
            echo[TOLERANCE_PREFIX + name] = value
        return echo

    def __repr__(self):
        return "RunConfig({})".format(
            ", ".join("{}={!r}".format(key, value) for key, value in self.echo().items())
        )

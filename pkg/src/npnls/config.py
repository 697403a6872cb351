"""Run configuration: a single JSON file with nested sections.

Schema (defaults in parentheses):

    {
      "grid":    {"a": -150.0, "b": 50.0, "n": 1000},
      "physics": {"kappa": 1e-4, "beta": 0.5},
      "model":   {"tag": "power_law", "params": {"q": 2}},
      "initial": {"kind": "soliton", "eta": 1.0, "vel": 1.0}
               | {"kind": "plane_wave", "amplitude": 1.0, "mode": 3}
               | {"kind": "file", "path": "state.json"},
      "stepper": {"dt": 0.1, "fp_tol": (1e-13), "fp_max_iters": (200)},
      "t_end":   100.0,
      "sample_every": (round(1/(10*dt)), min 1),
      "outputs": {"directory": (".")},
      "dispersion": {"xi_min": (-3.0), "xi_max": (3.0),
                     "omega_min": (-3.0), "omega_max": (3.0),
                     "resolution": (41)}
    }

Every violation is reported at parse/validate time with the offending key
path.  t_end must be an integer multiple of dt (relative 1e-9): the midpoint
map is kept uniform, no partial last step.
"""

import json
import math
import os

import numpy as np

from .errors import ConfigError
from .grid import make_grid
from .models import ModelParams, model_from_tag


def _require(mapping, key, path, types=None):
    if key not in mapping:
        raise ConfigError(f"missing required key {path}.{key}")
    val = mapping[key]
    if types is not None and not isinstance(val, types):
        raise ConfigError(f"{path}.{key} has wrong type {type(val).__name__}")
    return val


def _real(mapping, key, path, default=None):
    if key not in mapping:
        if default is None:
            raise ConfigError(f"missing required key {path}.{key}")
        return default
    val = mapping[key]
    if isinstance(val, bool) or not isinstance(val, (int, float)):
        raise ConfigError(f"{path}.{key} must be a number, got {val!r}")
    return float(val)


class RunConfig:
    """Validated run configuration; construction performs all checks."""

    def __init__(self, data, base_dir="."):
        if not isinstance(data, dict):
            raise ConfigError("config root must be an object")
        self.base_dir = base_dir

        g = _require(data, "grid", "$", dict)
        self.grid = make_grid(_real(g, "a", "grid"), _real(g, "b", "grid"),
                              int(_require(g, "n", "grid", (int,))))

        ph = _require(data, "physics", "$", dict)
        kappa = _real(ph, "kappa", "physics")
        beta = _real(ph, "beta", "physics")

        mo = _require(data, "model", "$", dict)
        tag = _require(mo, "tag", "model", str)
        mparams = mo.get("params", {})
        if not isinstance(mparams, dict):
            raise ConfigError("model.params must be an object")
        self.model = model_from_tag(tag, mparams)
        self.params = ModelParams(kappa, beta, self.model)

        st = _require(data, "stepper", "$", dict)
        self.dt = _real(st, "dt", "stepper")
        self.fp_tol = _real(st, "fp_tol", "stepper", default=1e-13)
        self.fp_max_iters = int(st.get("fp_max_iters", 200))
        if self.dt <= 0:
            raise ConfigError(f"stepper.dt must be > 0, got {self.dt}")

        self.t_end = _real(data, "t_end", "$")
        if self.t_end < 0:
            raise ConfigError(f"t_end must be >= 0, got {self.t_end}")
        ratio = self.t_end / self.dt
        if abs(ratio - round(ratio)) > 1e-9 * max(1.0, abs(ratio)):
            raise ConfigError(
                f"t_end={self.t_end} is not an integer multiple of dt={self.dt}")

        default_sample = max(1, round(1.0 / (10.0 * self.dt)))
        se = data.get("sample_every", default_sample)
        if isinstance(se, bool) or not isinstance(se, int) or se < 1:
            raise ConfigError(f"sample_every must be a positive integer, got {se!r}")
        self.sample_every = se

        ini = _require(data, "initial", "$", dict)
        self.initial_kind = _require(ini, "kind", "initial", str)
        if self.initial_kind == "soliton":
            self.initial_eta = _real(ini, "eta", "initial")
            self.initial_vel = _real(ini, "vel", "initial")
            if not math.isclose(beta, 0.5, rel_tol=1e-12):
                raise ConfigError("soliton initial data requires beta = 1/2")
            if not (tag == "power_law" and math.isclose(self.model.q, 2.0, rel_tol=1e-12)):
                raise ConfigError("soliton initial data requires the cubic model "
                                  "(power_law with q = 2)")
        elif self.initial_kind == "plane_wave":
            self.initial_amplitude = _real(ini, "amplitude", "initial")
            if self.initial_amplitude < 0:
                raise ConfigError("initial.amplitude must be >= 0")
            mode = _require(ini, "mode", "initial", (int,))
            if abs(mode) >= self.grid.n // 2:
                raise ConfigError(f"initial.mode {mode} not resolvable on n={self.grid.n}")
            self.initial_mode = mode
        elif self.initial_kind == "file":
            path = _require(ini, "path", "initial", str)
            if not os.path.isabs(path):
                path = os.path.join(base_dir, path)
            if not os.path.exists(path):
                raise ConfigError(f"initial.path does not exist: {path}")
            self.initial_path = path
        else:
            raise ConfigError(f"unknown initial.kind {self.initial_kind!r}")

        out = data.get("outputs", {})
        if not isinstance(out, dict):
            raise ConfigError("outputs must be an object")
        self.output_directory = out.get("directory", ".")

        disp = data.get("dispersion", {})
        if not isinstance(disp, dict):
            raise ConfigError("dispersion must be an object")
        self.xi_min = _real(disp, "xi_min", "dispersion", default=-3.0)
        self.xi_max = _real(disp, "xi_max", "dispersion", default=3.0)
        self.omega_min = _real(disp, "omega_min", "dispersion", default=-3.0)
        self.omega_max = _real(disp, "omega_max", "dispersion", default=3.0)
        self.resolution = int(disp.get("resolution", 41))
        for name, val in (("xi_min", self.xi_min), ("xi_max", self.xi_max),
                          ("omega_min", self.omega_min), ("omega_max", self.omega_max)):
            if not -math.pi < val < math.pi:
                raise ConfigError(f"dispersion.{name} must lie in (-pi, pi), got {val}")
        if self.resolution < 2:
            raise ConfigError("dispersion.resolution must be >= 2")

        self._data = data

    def to_dict(self):
        """Semantically idempotent serialization (parse(serialize(c)) == c)."""
        out = {
            "grid": {"a": self.grid.a, "b": self.grid.b, "n": self.grid.n},
            "physics": {"kappa": self.params.kappa, "beta": self.params.beta},
            "model": {"tag": self.model.tag, "params": self.model.params()},
            "stepper": {"dt": self.dt, "fp_tol": self.fp_tol,
                        "fp_max_iters": self.fp_max_iters},
            "t_end": self.t_end,
            "sample_every": self.sample_every,
            "outputs": {"directory": self.output_directory},
            "dispersion": {"xi_min": self.xi_min, "xi_max": self.xi_max,
                           "omega_min": self.omega_min, "omega_max": self.omega_max,
                           "resolution": self.resolution},
        }
        if self.initial_kind == "soliton":
            out["initial"] = {"kind": "soliton", "eta": self.initial_eta,
                              "vel": self.initial_vel}
        elif self.initial_kind == "plane_wave":
            out["initial"] = {"kind": "plane_wave", "amplitude": self.initial_amplitude,
                              "mode": self.initial_mode}
        else:
            out["initial"] = {"kind": "file", "path": self.initial_path}
        return out


def parse_config_text(text, base_dir="."):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"config is not valid JSON: {e.msg} "
                          f"(line {e.lineno}, column {e.colno})") from None
    return RunConfig(data, base_dir=base_dir)


def load_config(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}") from None
    try:
        return parse_config_text(text, base_dir=os.path.dirname(os.path.abspath(path)))
    except ConfigError as e:
        raise ConfigError(f"{path}: {e}") from None


def save_state_json(path, state, grid):
    """Snapshot format: grid metadata plus u, v as [re, im] pair arrays."""
    doc = {
        "t": state.t,
        "grid": {"a": grid.a, "b": grid.b, "n": grid.n},
        "u": [[float(z.real), float(z.imag)] for z in state.u],
        "v": [[float(z.real), float(z.imag)] for z in state.v],
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_state_json(path, grid=None):
    from .stepping import FieldState

    with open(path) as fh:
        doc = json.load(fh)
    for key in ("grid", "u", "v", "t"):
        if key not in doc:
            raise ConfigError(f"state file {path} missing key {key!r}")
    gmeta = doc["grid"]
    if grid is not None:
        if (gmeta.get("n") != grid.n or gmeta.get("a") != grid.a
                or gmeta.get("b") != grid.b):
            raise ConfigError(
                f"state file grid {gmeta} does not match configured grid "
                f"(a={grid.a}, b={grid.b}, n={grid.n})")
    u = np.array([complex(re, im) for re, im in doc["u"]])
    v = np.array([complex(re, im) for re, im in doc["v"]])
    return FieldState(u, v, float(doc["t"]))

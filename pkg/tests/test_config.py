import json

import numpy as np
import pytest

from npnls import (ConfigError, FieldState, RunConfig, load_config,
                   load_state_json, make_grid, parse_config_text,
                   save_state_json)


def base_config(**overrides):
    data = {
        "grid": {"a": -150.0, "b": 50.0, "n": 1000},
        "physics": {"kappa": 1e-4, "beta": 0.5},
        "model": {"tag": "power_law", "params": {"q": 2}},
        "initial": {"kind": "soliton", "eta": 1.0, "vel": 1.0},
        "stepper": {"dt": 0.1},
        "t_end": 1.0,
    }
    data.update(overrides)
    return data


def test_parse_valid_config():
    cfg = RunConfig(base_config())
    assert cfg.grid.n == 1000
    assert cfg.params.kappa == 1e-4
    assert cfg.model.tag == "power_law"
    assert cfg.dt == 0.1
    assert cfg.fp_tol == 1e-13
    assert cfg.fp_max_iters == 200
    assert cfg.sample_every == 1
    assert cfg.initial_kind == "soliton"
    assert cfg.output_directory == "."
    assert cfg.xi_min == -3.0 and cfg.resolution == 41


def test_sample_every_default_scales_with_dt():
    cfg = RunConfig(base_config(stepper={"dt": 0.02}))
    assert cfg.sample_every == 5
    cfg = RunConfig(base_config(stepper={"dt": 0.5}, t_end=2.0))
    assert cfg.sample_every == 1


def test_config_json_error_has_location():
    with pytest.raises(ConfigError, match=r"line 4"):
        parse_config_text('{\n "grid": {},\n "oops"\n}')


def test_missing_and_mistyped_keys():
    with pytest.raises(ConfigError, match="grid"):
        RunConfig({k: v for k, v in base_config().items() if k != "grid"})
    with pytest.raises(ConfigError, match="physics.kappa"):
        RunConfig(base_config(physics={"beta": 0.5}))
    with pytest.raises(ConfigError, match="must be a number"):
        RunConfig(base_config(physics={"kappa": "small", "beta": 0.5}))
    with pytest.raises(ConfigError, match="model"):
        RunConfig(base_config(model={"params": {}}))
    with pytest.raises(ConfigError):
        RunConfig(base_config(model={"tag": "no_such_model"}))
    with pytest.raises(ConfigError, match="root"):
        RunConfig([1, 2, 3])


def test_t_end_multiple_of_dt_enforced():
    with pytest.raises(ConfigError, match="integer multiple"):
        RunConfig(base_config(t_end=1.05))
    with pytest.raises(ConfigError, match="t_end"):
        RunConfig(base_config(t_end=-1.0))
    RunConfig(base_config(t_end=0.0))  # resolves to no steps, still valid


def test_soliton_initial_requires_cubic():
    with pytest.raises(ConfigError, match="beta"):
        RunConfig(base_config(physics={"kappa": 1e-4, "beta": 0.7}))
    with pytest.raises(ConfigError, match="cubic"):
        RunConfig(base_config(model={"tag": "power_law", "params": {"q": 1.5}}))
    with pytest.raises(ConfigError, match="cubic"):
        RunConfig(base_config(model={"tag": "saturable", "params": {"gamma": 1.0}}))


def test_plane_wave_initial_validation():
    cfg = RunConfig(base_config(
        model={"tag": "saturable", "params": {"gamma": 1.0}},
        physics={"kappa": 0.3, "beta": 0.7},
        initial={"kind": "plane_wave", "amplitude": 0.5, "mode": 3}))
    assert cfg.initial_amplitude == 0.5
    assert cfg.initial_mode == 3
    with pytest.raises(ConfigError, match="amplitude"):
        RunConfig(base_config(initial={"kind": "plane_wave", "amplitude": -1.0, "mode": 1}))
    with pytest.raises(ConfigError, match="not resolvable"):
        RunConfig(base_config(grid={"a": 0.0, "b": 1.0, "n": 8},
                              initial={"kind": "plane_wave", "amplitude": 1.0, "mode": 4}))
    with pytest.raises(ConfigError, match="initial.kind"):
        RunConfig(base_config(initial={"kind": "gaussian"}))


def test_file_initial_resolved_relative_to_config(tmp_path):
    grid = make_grid(0.0, 1.0, 8)
    state = FieldState(np.ones(8, complex), np.zeros(8, complex), t=2.5)
    save_state_json(tmp_path / "state.json", state, grid)
    doc = base_config(grid={"a": 0.0, "b": 1.0, "n": 8},
                      initial={"kind": "file", "path": "state.json"},
                      t_end=0.0)
    cfg_path = tmp_path / "run.json"
    cfg_path.write_text(json.dumps(doc))
    cfg = load_config(str(cfg_path))
    assert cfg.initial_path == str(tmp_path / "state.json")
    with pytest.raises(ConfigError, match="does not exist"):
        RunConfig(base_config(initial={"kind": "file", "path": "nowhere.json"}),
                  base_dir=str(tmp_path))


def test_load_config_prefixes_path(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{")
    with pytest.raises(ConfigError, match="bad.json"):
        load_config(str(p))
    with pytest.raises(ConfigError, match="cannot read"):
        load_config(str(tmp_path / "absent.json"))


def test_dispersion_window_validation():
    cfg = RunConfig(base_config(dispersion={"xi_min": -1.0, "xi_max": 1.0,
                                            "resolution": 11}))
    assert cfg.xi_max == 1.0 and cfg.resolution == 11
    with pytest.raises(ConfigError, match="xi_max"):
        RunConfig(base_config(dispersion={"xi_max": 3.5}))
    with pytest.raises(ConfigError, match="resolution"):
        RunConfig(base_config(dispersion={"resolution": 1}))


def test_sample_every_validation():
    with pytest.raises(ConfigError, match="sample_every"):
        RunConfig(base_config(sample_every=0))
    with pytest.raises(ConfigError, match="sample_every"):
        RunConfig(base_config(sample_every=2.5))


def test_round_trip_idempotent():
    data = base_config(
        stepper={"dt": 0.05, "fp_tol": 1e-12, "fp_max_iters": 50},
        sample_every=7,
        outputs={"directory": "out"},
        dispersion={"xi_min": -2.0, "xi_max": 2.0, "omega_min": -1.0,
                    "omega_max": 1.0, "resolution": 21})
    c1 = RunConfig(data)
    c2 = RunConfig(c1.to_dict())
    assert c1.to_dict() == c2.to_dict()


def test_state_json_round_trip(tmp_path):
    grid = make_grid(-2.0, 2.0, 16)
    rng = np.random.default_rng(70)
    st = FieldState(rng.standard_normal(16) + 1j * rng.standard_normal(16),
                    rng.standard_normal(16) + 1j * rng.standard_normal(16),
                    t=3.25)
    path = tmp_path / "snap.json"
    save_state_json(path, st, grid)
    back = load_state_json(path, grid)
    assert back.t == 3.25
    assert np.array_equal(back.u, st.u)
    assert np.array_equal(back.v, st.v)


def test_state_json_grid_mismatch(tmp_path):
    grid = make_grid(-2.0, 2.0, 16)
    st = FieldState(np.zeros(16, complex), np.zeros(16, complex))
    path = tmp_path / "snap.json"
    save_state_json(path, st, grid)
    with pytest.raises(ConfigError, match="does not match"):
        load_state_json(path, make_grid(-2.0, 2.0, 32))
    doc = json.loads(path.read_text())
    del doc["v"]
    path.write_text(json.dumps(doc))
    with pytest.raises(ConfigError, match="missing key"):
        load_state_json(path, grid)

"""
cli_workflow.py
---------------
End-to-end run through the command line interface: write a config file,
call `npnls simulate` and `npnls converge` as subprocesses, then read the
CSV outputs back.  Outputs are deterministic, so re-running the same config
reproduces the files byte for byte.
"""
import csv
import json
import os
import subprocess
import tempfile

workdir = tempfile.mkdtemp(prefix="npnls_demo_")
config = {
    "grid": {"a": -150.0, "b": 50.0, "n": 1000},
    "physics": {"kappa": 1e-4, "beta": 0.5},
    "model": {"tag": "power_law", "params": {"q": 2}},
    "initial": {"kind": "soliton", "eta": 1.0, "vel": 1.0},
    "stepper": {"dt": 0.1},
    "t_end": 10.0,
    "outputs": {"directory": workdir},
}
cfg_path = os.path.join(workdir, "run.json")
with open(cfg_path, "w") as fh:
    json.dump(config, fh, indent=2)
print(f"config written to {cfg_path}")

print("\n$ npnls simulate run.json")
res = subprocess.run(["npnls", "simulate", cfg_path],
                     capture_output=True, text=True)
print(res.stdout.strip())
assert res.returncode == 0, res.stderr

with open(os.path.join(workdir, "timeseries.csv")) as fh:
    rows = list(csv.DictReader(fh))
print(f"\ntimeseries.csv: {len(rows)} samples, columns {list(rows[0])}")
first, last = rows[0], rows[-1]
dH = abs(float(last["H"]) - float(first["H"]))
dI1 = abs(float(last["I1"]) - float(first["I1"]))
print(f"  |H({last['t']}) - H({first['t']})|   = {dH:.3e}")
print(f"  |I1({last['t']}) - I1({first['t']})| = {dI1:.3e}")

print("\n$ npnls converge run.json --dts 0.2,0.1,0.05")
res = subprocess.run(["npnls", "converge", cfg_path, "--dts", "0.2,0.1,0.05"],
                     capture_output=True, text=True)
print(res.stdout.strip())
assert res.returncode == 0, res.stderr

with open(os.path.join(workdir, "convergence.json")) as fh:
    summary = json.load(fh)
print("\nconvergence.json observed orders (u):",
      [round(p, 3) for p in summary["observed_orders"]])
print(f"\nall outputs under {workdir}")

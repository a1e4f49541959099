"""Command-line front end emitting CSV datasets.

Subcommands: density, trajectory, jumps, classical.  Shared physics flags
default to the reference parameter set (omega=1, alpha=0.75*pi, J=1, q=-0.7,
p=0.2); every default can be overridden by a flag or a key=value config file
(flags win over the file).  Output is deterministic: the same configuration
produces byte-identical CSV, full double precision, '\\n' line endings.

Exit codes: 0 success, 2 argument errors, 1 numeric failures.
"""

import argparse
import math
import sys

import numpy as np

from . import classical, jumps, states
from .errors import CutoffTooSmallError, NonConvergentError, TruncationOverflowError
from .theta import Tolerance

DEFAULTS = {
    "omega": 1.0,
    "alpha": 0.75 * math.pi,
    "J": 1.0,
    "q": -0.7,
    "p": 0.2,
    "tol": 1e-13,
    "t": math.pi,
    "t_max": 4.0 * math.pi,
    "dt": 0.01,
    "k_min": 0,
    "k_max": 999,
    "eps": 1e-6,
    "grid_phi": 200,
    "grid_l": 200,
    "l_min": None,
    "l_max": None,
    "out": "-",
}

_INT_KEYS = {"k_min", "k_max", "grid_phi", "grid_l"}


def _fmt(x):
    return format(float(x), ".17g")


def _parse_config_file(path):
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.rstrip()!r}")
            key, _, value = line.partition("=")
            key = key.strip().replace("-", "_")
            value = value.strip()
            if key not in DEFAULTS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            if key == "out":
                values[key] = value
            elif key in _INT_KEYS:
                values[key] = int(value)
            else:
                values[key] = float(value)
    return values


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qcylinder",
        description="Harmonic oscillator on a cylinder: coherent-state dynamics as CSV datasets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="key=value file overriding defaults; flags win")
        p.add_argument("--omega", type=float, help="meridian oscillator frequency")
        p.add_argument("--alpha", type=float, help="classical angle (radians)")
        p.add_argument("--J", type=float, dest="J", help="classical angular momentum")
        p.add_argument("--q", type=float, help="meridian wave-packet center")
        p.add_argument("--p", type=float, help="meridian wave-packet momentum")
        p.add_argument("--tol", type=float, help="absolute theta truncation tolerance")
        p.add_argument("--out", help="output CSV path, '-' for stdout")

    p_density = sub.add_parser("density", help="probability density on a (phi, l) grid")
    add_common(p_density)
    p_density.add_argument("--t", type=float, help="evaluation time")
    p_density.add_argument("--grid-phi", type=int, dest="grid_phi", help="number of phi samples")
    p_density.add_argument("--grid-l", type=int, dest="grid_l", help="number of l samples")
    p_density.add_argument("--l-min", type=float, dest="l_min", help="lower meridian bound")
    p_density.add_argument("--l-max", type=float, dest="l_max", help="upper meridian bound")

    p_traj = sub.add_parser("trajectory", help="quantum mean trajectory over time")
    add_common(p_traj)
    p_traj.add_argument("--t-max", type=float, dest="t_max", help="end time")
    p_traj.add_argument("--dt", type=float, help="time step")

    p_jumps = sub.add_parser("jumps", help="phase-jump points at t*=(2k+1)*pi")
    add_common(p_jumps)
    p_jumps.add_argument("--k-min", type=int, dest="k_min", help="first jump index")
    p_jumps.add_argument("--k-max", type=int, dest="k_max", help="last jump index")
    p_jumps.add_argument("--eps", type=float, help="two-sided limit offset")

    p_classical = sub.add_parser("classical", help="closed-form classical trajectory")
    add_common(p_classical)
    p_classical.add_argument("--t-max", type=float, dest="t_max", help="end time")
    p_classical.add_argument("--dt", type=float, help="time step")

    return parser


def _resolve(args, parser):
    """Merge precedence: flags > config file > defaults."""
    config = {}
    if getattr(args, "config", None):
        try:
            config = _parse_config_file(args.config)
        except (OSError, ValueError) as exc:
            parser.error(str(exc))
    merged = {}
    for key, default in DEFAULTS.items():
        flag = getattr(args, key, None)
        if flag is not None:
            merged[key] = flag
        elif key in config:
            merged[key] = config[key]
        else:
            merged[key] = default
    return merged


def _validate(cfg, parser):
    if cfg["omega"] < 1e-6:
        parser.error(f"--omega must be >= 1e-6, got {cfg['omega']}")
    if cfg["tol"] <= 0:
        parser.error(f"--tol must be positive, got {cfg['tol']}")
    if cfg["dt"] <= 0:
        parser.error(f"--dt must be positive, got {cfg['dt']}")
    if cfg["eps"] <= 0:
        parser.error(f"--eps must be positive, got {cfg['eps']}")
    if cfg["grid_phi"] < 2 or cfg["grid_l"] < 2:
        parser.error("grid sizes must be >= 2")
    if cfg["k_max"] < cfg["k_min"]:
        parser.error("--k-max must be >= --k-min")


def _physics(cfg):
    params = states.CoherentParams(J=cfg["J"], alpha=cfg["alpha"], q_pos=cfg["q"], p_mom=cfg["p"])
    osc = states.OscillatorConfig(omega=cfg["omega"])
    tol = Tolerance(abs_tol=cfg["tol"])
    return params, osc, tol


def _default_l_range(cfg):
    amplitude = math.sqrt(cfg["q"] ** 2 + (cfg["p"] / cfg["omega"]) ** 2)
    margin = 8.0 / math.sqrt(cfg["omega"])
    return -amplitude - margin, amplitude + margin


def _write_rows(out_path, header, rows):
    def emit(fh):
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")

    if out_path == "-":
        emit(sys.stdout)
    else:
        with open(out_path, "w", newline="") as fh:
            emit(fh)


def cmd_density(cfg):
    params, osc, tol = _physics(cfg)
    l_min, l_max = cfg["l_min"], cfg["l_max"]
    if l_min is None or l_max is None:
        lo, hi = _default_l_range(cfg)
        l_min = lo if l_min is None else l_min
        l_max = hi if l_max is None else l_max
    phi = np.linspace(0.0, 2.0 * math.pi, cfg["grid_phi"], endpoint=False)
    ls = np.linspace(l_min, l_max, cfg["grid_l"])
    grid = states.density_grid(params, osc, phi, ls, cfg["t"], tol)
    t_str = _fmt(cfg["t"])
    rows = (
        (t_str, _fmt(phi[i]), _fmt(ls[j]), _fmt(grid.density[i, j]))
        for i in range(len(phi))
        for j in range(len(ls))
    )
    _write_rows(cfg["out"], "t,phi,l,p", rows)


def cmd_trajectory(cfg):
    params, osc, tol = _physics(cfg)
    n_steps = int(math.floor(cfg["t_max"] / cfg["dt"] + 1e-9))
    t_grid = [i * cfg["dt"] for i in range(n_steps + 1)]
    samples = states.mean_trajectory(params, osc, t_grid, tol)
    rows = ((_fmt(s.t), _fmt(s.phi), _fmt(s.l), _fmt(s.abs_u)) for s in samples)
    _write_rows(cfg["out"], "t,phi,l,absU", rows)


def cmd_jumps(cfg):
    params, osc, tol = _physics(cfg)
    cloud = jumps.jump_points(params, osc, cfg["k_min"], cfg["k_max"], cfg["eps"], tol)
    rows = (
        (str(p.k), _fmt(p.t_star), _fmt(p.phi_minus), _fmt(p.phi_plus), _fmt(p.l), _fmt(p.delta_phi))
        for p in cloud.points
    )
    _write_rows(cfg["out"], "k,t_star,phi_minus,phi_plus,l,delta_phi", rows)


def cmd_classical(cfg):
    init = classical.ClassicalInitial(phi0=cfg["alpha"], J=cfg["J"], l0=cfg["q"], p_l0=cfg["p"])
    osc = states.OscillatorConfig(omega=cfg["omega"])
    n_steps = int(math.floor(cfg["t_max"] / cfg["dt"] + 1e-9))
    rows = []
    for i in range(n_steps + 1):
        s = classical.classical_solution(init, osc, i * cfg["dt"])
        rows.append((_fmt(s.t), _fmt(s.phi), _fmt(s.l), _fmt(s.p_l), _fmt(s.energy)))
    _write_rows(cfg["out"], "t,phi,l,p_l,energy", rows)


_COMMANDS = {
    "density": cmd_density,
    "trajectory": cmd_trajectory,
    "jumps": cmd_jumps,
    "classical": cmd_classical,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _resolve(args, parser)
    _validate(cfg, parser)
    try:
        _COMMANDS[args.command](cfg)
    except (NonConvergentError, TruncationOverflowError, CutoffTooSmallError, ValueError) as exc:
        print(f"qcylinder: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"qcylinder: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: grids, graphs, SCF, FCI, training, experiments.

Every subcommand accepts `--config FILE` (a JSON object of defaults) plus
flag overrides; the resolved configuration is embedded in every output
artifact. With a fixed seed all outputs are byte-identical across reruns.
The environment variable EXC_SEED provides a global seed fallback.
"""

import argparse
import csv
import dataclasses
import io
import json
import os
import sys

import numpy as np

from . import fci, geometry as geo, graph as gg, grids, nn, scf, train
from .errors import ConfigurationError


# -- plumbing --------------------------------------------------------------

def _default_seed():
    return int(os.environ.get("EXC_SEED", "0"))


def _load_config(path):
    if not path:
        return {}
    with open(path) as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise ConfigurationError("config file must hold a JSON object")
    return data


def _resolve(args, keys):
    """Merge config-file defaults with CLI overrides for `keys`.

    Priority: explicit CLI flag > config file > argparse default.
    """
    cfg = _load_config(getattr(args, "config", None))
    given = getattr(args, "_given_flags", set())
    resolved = {}
    for key in keys:
        if key in given or key not in cfg:
            resolved[key] = getattr(args, key)
        else:
            resolved[key] = cfg[key]
    return resolved


def _flag_given(argv, key):
    flag = "--" + key.replace("_", "-")
    return any(a == flag or a.startswith(flag + "=") for a in argv)


def _jsonable(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return _jsonable(dataclasses.asdict(obj))
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _emit_json(payload, out):
    text = json.dumps(_jsonable(payload), sort_keys=True, indent=2) + "\n"
    _write(text, out)


def _emit_jsonl(records, out):
    lines = [json.dumps(_jsonable(r), sort_keys=True) for r in records]
    _write("\n".join(lines) + "\n", out)


def _emit_csv(rows, fieldnames, out):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row.get(k, "") for k in fieldnames})
    _write(buf.getvalue(), out)


def _write(text, out):
    if out and out != "-":
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _geometry_from(args):
    """Geometry selection: --h2 S, --h4 THETA, or --geometry FILE."""
    given = [k for k in ("h2", "h4", "geometry")
             if getattr(args, k, None) is not None]
    if len(given) != 1:
        raise ConfigurationError(
            "give exactly one of --h2 S, --h4 THETA, --geometry FILE")
    if args.h2 is not None:
        return geo.h2_scaled(float(args.h2)), {"h2_s": float(args.h2)}
    if args.h4 is not None:
        return geo.h4_planar(float(args.h4)), {"h4_theta": float(args.h4)}
    atoms = np.loadtxt(args.geometry, ndmin=2)
    if atoms.shape[1] != 3:
        raise ConfigurationError(
            "geometry file must hold one 'x y z' row per atom (Bohr)")
    return atoms, {"geometry_file": os.fspath(args.geometry)}


def _add_geometry_flags(p):
    p.add_argument("--h2", type=float, default=None,
                   help="H2 at separation S (bond length 1.4*S Bohr)")
    p.add_argument("--h4", type=float, default=None,
                   help="planar H4 rectangle at angle THETA (degrees)")
    p.add_argument("--geometry", default=None,
                   help="text file of 'x y z' rows in Bohr (hydrogens)")


def _add_common(p):
    p.add_argument("--config", default=None,
                   help="JSON file of defaults; flags override")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--out", default="-", help="output path or - for stdout")


# -- subcommands -----------------------------------------------------------

def cmd_grid_build(args):
    keys = ("preset", "seed")
    r = _resolve(args, keys)
    atoms, meta = _geometry_from(args)
    grid = grids.build_grid(atoms, preset=r["preset"])
    payload = {
        "config": {**r, **meta, "command": "grid build"},
        "n_points": int(grid.n_points),
        "n_atoms": len(atoms),
        "weight_sum": float(np.sum(grid.weights)),
        "points_per_atom": int(grid.n_points // len(atoms)),
    }
    if args.full:
        payload["points"] = grid.points
        payload["weights"] = grid.weights
    _emit_json(payload, args.out)
    return 0


def cmd_graph_build(args):
    keys = ("preset", "alpha", "expander_degree", "n_global", "seed")
    r = _resolve(args, keys)
    atoms, meta = _geometry_from(args)
    grid = grids.build_grid(atoms, preset=r["preset"])
    graph = gg.assemble(grid, alpha=r["alpha"],
                        expander_degree=r["expander_degree"],
                        n_global=r["n_global"], seed=r["seed"])
    counts = {int(t): int(np.sum(graph.etype == t))
              for t in (gg.LOCAL, gg.EXPANDER, gg.GLOBAL)}
    payload = {
        "config": {**r, **meta, "command": "graph build"},
        "n_grid": int(graph.n_grid),
        "n_global": int(graph.n_global),
        "n_edges": int(len(graph.src)),
        "edges_local": counts[int(gg.LOCAL)],
        "edges_expander": counts[int(gg.EXPANDER)],
        "edges_global": counts[int(gg.GLOBAL)],
    }
    if args.full:
        payload["src"] = graph.src
        payload["dst"] = graph.dst
        payload["etype"] = graph.etype
        payload["dist"] = graph.dist
    _emit_json(payload, args.out)
    return 0


def cmd_graph_validate(args):
    keys = ("n_vertices", "expander_degree", "seed")
    r = _resolve(args, keys)
    edges = gg.expander_edges(r["n_vertices"], r["expander_degree"],
                              r["seed"])
    report = gg.spectral_gap(edges, r["n_vertices"], r["expander_degree"])
    payload = {"config": {**r, "command": "graph validate"},
               "report": report}
    _emit_json(payload, args.out)
    return 0 if report.passed else 1


def cmd_scf_run(args):
    keys = ("xc", "preset", "mode", "threshold", "max_iterations",
            "breaking_angle", "level_shift", "seed")
    r = _resolve(args, keys)
    atoms, meta = _geometry_from(args)
    grid = grids.build_grid(atoms, preset=r["preset"])
    functional = scf.make_functional(r["xc"], seed=r["seed"])
    graph = None
    if functional.net is not None:
        graph = train.build_graph("exphormer-full", grid, seed=r["seed"])
    system = scf.build_system(atoms, grid, graph=graph)
    mode = {"rks": "restricted", "uks": "unrestricted"}.get(
        r["mode"], r["mode"])
    cfg = scf.SCFConfig(mode=mode, threshold=r["threshold"],
                        max_iterations=r["max_iterations"],
                        breaking_angle=r["breaking_angle"],
                        level_shift=r["level_shift"])
    state = scf.scf_solve(system, functional, cfg)
    payload = {
        "config": {**r, **meta, "command": "scf run"},
        "e_total": state.e_total,
        "components": state.components,
        "converged": bool(state.converged),
        "iterations": len(state.residuals),
        "final_residual": float(state.residuals[-1]),
        "orbital_energies_up": state.eps_up,
        "orbital_energies_dn": state.eps_dn,
        "n_up": state.n_up,
        "n_dn": state.n_dn,
    }
    _emit_json(payload, args.out)
    return 0


def cmd_fci_run(args):
    keys = ("basis", "n_roots", "seed")
    r = _resolve(args, keys)
    atoms, meta = _geometry_from(args)
    n = len(atoms)
    result = fci.fci_solve(fci.integrals_for(atoms, r["basis"]),
                           (n + 1) // 2, n // 2, n_roots=r["n_roots"])
    payload = {
        "config": {**r, **meta, "command": "fci run"},
        "energies": result.energies,
        "s_squared": result.s_squared,
        "e_total": float(result.energies[0]),
    }
    _emit_json(payload, args.out)
    return 0


def cmd_fci_sweep(args):
    keys = ("basis", "n_roots", "seed")
    r = _resolve(args, keys)
    if args.h4_thetas:
        values = [float(x) for x in args.h4_thetas.split(",")]
        records = fci.h4_dataset(values, basis_name=r["basis"],
                                 n_roots=max(r["n_roots"], 6))
        sweep = {"h4_thetas": values}
    else:
        if not args.s_values:
            raise ConfigurationError(
                "give --s-values or --h4-thetas for the sweep")
        values = [float(x) for x in args.s_values.split(",")]
        records = fci.dissociation_dataset(values, basis_name=r["basis"],
                                           n_roots=r["n_roots"])
        sweep = {"s_values": values}
    header = {"config": {**r, **sweep, "command": "fci sweep"}}
    _emit_jsonl([header] + list(records), args.out)
    return 0


_TRAIN_KEYS = ("variant", "base", "learning_rate", "weight_decay",
               "w_total", "w_atomization", "w_aux", "patience",
               "max_epochs", "unroll", "grid_preset", "scf_threshold",
               "refresh_every", "mae_target", "seed")


def _train_config(args):
    r = _resolve(args, _TRAIN_KEYS)
    return train.TrainConfig(**r), r


def cmd_train(args):
    cfg, _ = _train_config(args)
    log = None
    if args.verbose:
        log = lambda msg: print(msg, file=sys.stderr, flush=True)
    record = train.train(cfg, checkpoint_path=args.checkpoint, log=log)
    _write(train.run_record_to_json(record) + "\n", args.out)
    return 0


def cmd_eval_dissociation(args):
    cfg, r = _train_config(args)
    functional = _functional_for_eval(cfg, args)
    s_grid = [float(x) for x in args.s_grid.split(",")]
    rows = train.dissociation_experiment(functional, cfg, s_grid)
    r = {**r, "s_grid": s_grid, "checkpoint": args.checkpoint,
         "command": "eval dissociation"}
    if args.csv:
        out_rows = [{"x_value": row["S"], "method": "model",
                     "energy": repr(row["e_model"]),
                     "error": repr(row["error_kcal"])} for row in rows]
        out_rows += [{"x_value": row["S"], "method": "fci",
                      "energy": repr(row["e_fci"]), "error": "0.0"}
                     for row in rows]
        _emit_csv(out_rows, ["x_value", "method", "energy", "error"],
                  args.out)
    else:
        _emit_json({"config": r, "rows": rows}, args.out)
    return 0


def cmd_eval_h4(args):
    cfg, r = _train_config(args)
    functional = _functional_for_eval(cfg, args)
    thetas = [float(x) for x in args.thetas.split(",")]
    rows = train.h4_experiment(functional, cfg, thetas,
                               repeats=args.repeats,
                               level_shift=args.level_shift)
    r = {**r, "thetas": thetas, "repeats": args.repeats,
         "level_shift": args.level_shift, "checkpoint": args.checkpoint,
         "command": "eval h4"}
    if args.csv:
        out_rows = []
        for row in rows:
            for method, key in (("restricted", "e_restricted"),
                                ("pbe", "e_pbe"),
                                ("fci-singlet", "e_fci_singlet"),
                                ("unrestricted-mean", "unrestricted_mean")):
                e = row[key]
                err = "" if e is None or method == "fci-singlet" else repr(
                    (e - row["e_fci_singlet"]) * train.HARTREE_TO_KCAL)
                out_rows.append({"x_value": row["theta"], "method": method,
                                 "energy": "" if e is None else repr(e),
                                 "error": err})
        _emit_csv(out_rows, ["x_value", "method", "energy", "error"],
                  args.out)
    else:
        _emit_json({"config": r, "rows": rows}, args.out)
    return 0


def _functional_for_eval(cfg, args):
    if args.checkpoint:
        return train.load_functional(cfg, args.checkpoint)
    return train.make_functional_for(cfg)


def cmd_ablate(args):
    cfg, r = _train_config(args)
    variants = args.variants.split(",") if args.variants else None
    rows = train.ablation_matrix(cfg, variants=variants,
                                 out_dir=args.checkpoint_dir)
    if args.csv:
        fields = ["variant", "epochs_to_threshold", "final_train_mae",
                  "final_val_mae", "best_epoch", "diverged_epochs",
                  "stop_reason", "error"]
        out_rows = []
        for row in rows:
            fmt = dict(row)
            for k in ("final_train_mae", "final_val_mae"):
                if k in fmt and fmt[k] is not None:
                    fmt[k] = repr(fmt[k])
            out_rows.append(fmt)
        _emit_csv(out_rows, fields, args.out)
    else:
        _emit_json({"config": {**r, "command": "ablate"}, "rows": rows},
                   args.out)
    return 0


# -- parser ----------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="graphxc",
        description="Graph-transformer XC functionals for hydrogen "
                    "systems: grids, SCF, FCI references, training, and "
                    "experiment drivers.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("grid", help="quadrature grids")
    gsub = g.add_subparsers(dest="subcommand", required=True)
    gb = gsub.add_parser("build", help="build a molecular grid")
    _add_common(gb)
    _add_geometry_flags(gb)
    gb.add_argument("--preset", default="coarse")
    gb.add_argument("--full", action="store_true",
                    help="include point coordinates and weights")
    gb.set_defaults(func=cmd_grid_build)

    gr = sub.add_parser("graph", help="electron graphs")
    grsub = gr.add_subparsers(dest="subcommand", required=True)
    grb = grsub.add_parser("build", help="assemble the electron graph")
    _add_common(grb)
    _add_geometry_flags(grb)
    grb.add_argument("--preset", default="coarse")
    grb.add_argument("--alpha", type=float, default=0.5)
    grb.add_argument("--expander-degree", type=int, default=6)
    grb.add_argument("--n-global", type=int, default=10)
    grb.add_argument("--full", action="store_true",
                     help="include edge lists")
    grb.set_defaults(func=cmd_graph_build)
    grv = grsub.add_parser("validate",
                           help="spectral check of an expander instance")
    _add_common(grv)
    grv.add_argument("--n-vertices", type=int, default=7094)
    grv.add_argument("--expander-degree", type=int, default=6)
    grv.set_defaults(func=cmd_graph_validate)

    s = sub.add_parser("scf", help="Kohn-Sham SCF")
    ssub = s.add_subparsers(dest="subcommand", required=True)
    sr = ssub.add_parser("run", help="run one SCF calculation")
    _add_common(sr)
    _add_geometry_flags(sr)
    sr.add_argument("--xc", default="pw92",
                    help="pw92 | pbe | exphormer-pw92 | exphormer-pbe")
    sr.add_argument("--preset", default="coarse", help="grid preset")
    sr.add_argument("--mode", default="rks", help="rks | uks")
    sr.add_argument("--threshold", type=float, default=1e-7)
    sr.add_argument("--max-iterations", type=int, default=150)
    sr.add_argument("--breaking-angle", type=float, default=0.0)
    sr.add_argument("--level-shift", type=float, default=0.0)
    sr.set_defaults(func=cmd_scf_run)

    f = sub.add_parser("fci", help="full configuration interaction")
    fsub = f.add_subparsers(dest="subcommand", required=True)
    fr = fsub.add_parser("run", help="solve one geometry")
    _add_common(fr)
    _add_geometry_flags(fr)
    fr.add_argument("--basis", default="6-31g")
    fr.add_argument("--n-roots", type=int, default=1)
    fr.set_defaults(func=cmd_fci_run)
    fs = fsub.add_parser("sweep", help="H2 S-sweep or H4 theta-sweep")
    _add_common(fs)
    fs.add_argument("--s-values", default=None,
                    help="comma-separated H2 separations S")
    fs.add_argument("--h4-thetas", default=None,
                    help="comma-separated H4 angles (degrees)")
    fs.add_argument("--basis", default="6-31g")
    fs.add_argument("--n-roots", type=int, default=1)
    fs.set_defaults(func=cmd_fci_sweep)

    def add_train_flags(tp):
        _add_common(tp)
        tp.add_argument("--variant", default="exphormer-full")
        tp.add_argument("--base", default="pw92")
        tp.add_argument("--learning-rate", type=float, default=5e-4)
        tp.add_argument("--weight-decay", type=float, default=5e-5)
        tp.add_argument("--w-total", type=float, default=1.0)
        tp.add_argument("--w-atomization", type=float, default=1.0)
        tp.add_argument("--w-aux", type=float, default=0.0)
        tp.add_argument("--patience", type=int, default=500)
        tp.add_argument("--max-epochs", type=int, default=2000)
        tp.add_argument("--unroll", type=int, default=1)
        tp.add_argument("--grid-preset", default="coarse")
        tp.add_argument("--scf-threshold", type=float, default=1e-5)
        tp.add_argument("--refresh-every", type=int, default=50)
        tp.add_argument("--mae-target", type=float,
                        default=train.MAE_TARGET)

    t = sub.add_parser("train", help="train a variant")
    add_train_flags(t)
    t.add_argument("--checkpoint", default=None,
                   help="path for the best-validation checkpoint")
    t.add_argument("--verbose", action="store_true")
    t.set_defaults(func=cmd_train)

    e = sub.add_parser("eval", help="experiment drivers")
    esub = e.add_subparsers(dest="subcommand", required=True)
    ed = esub.add_parser("dissociation", help="H2 curve vs FCI")
    add_train_flags(ed)
    ed.add_argument("--checkpoint", default=None)
    ed.add_argument("--s-grid",
                    default="0.5,1.0,1.35,1.7,2.4,2.75,3.1,3.8,4.15,4.5,"
                            "5.0")
    ed.add_argument("--csv", action="store_true")
    ed.set_defaults(func=cmd_eval_dissociation)
    eh = esub.add_parser("h4", help="H4 barrier sweep")
    add_train_flags(eh)
    eh.add_argument("--checkpoint", default=None)
    eh.add_argument("--thetas", default="40,42,43,44,45,46,47,48,50")
    eh.add_argument("--repeats", type=int, default=10)
    eh.add_argument("--level-shift", type=float, default=0.3)
    eh.set_defaults(func=cmd_eval_h4)

    a = sub.add_parser("ablate", help="train every variant")
    add_train_flags(a)
    a.add_argument("--variants", default=None,
                   help="comma-separated subset of variant tags")
    a.add_argument("--checkpoint-dir", default=None)
    a.add_argument("--csv", action="store_true")
    a.set_defaults(func=cmd_ablate)

    return p


def main(argv=None):
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(argv)
    args._given_flags = {
        key for key in vars(args) if _flag_given(argv, key)}
    try:
        return args.func(args)
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

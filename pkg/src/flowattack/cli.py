"""Command-line entry point: ``flowattack {generate,attack,batch,plot,convert}``.

Data goes to files or standard output; progress and diagnostics go to
standard error.
"""

import argparse
import csv
import logging
import sys
from pathlib import Path

from .attack import NORMALIZATIONS, LowestId, SeededRandom, run_attack, score_trace
from .centrality import DISTANCE_MODES, CentralityKind
from .edgelist import EdgeListError, convert_grid_csv, load_edge_list, write_edge_list, write_labels
from .experiment import PRESETS, ConfigError, ExperimentConfig, ResultTable, run_batch
from .generators import GeneratorSpec, InfeasibleSpec, assign_random_integer_weights, generate
from .plotting import plot_results
from .robustness import DegenerateBaseline, MetricKind

log = logging.getLogger("flowattack")

KIND_NAMES = [k.value for k in CentralityKind]
METRIC_NAMES = [m.value for m in MetricKind]


def _cmd_generate(args):
    spec = GeneratorSpec(args.model, args.n, args.m, args.seed, args.ws_rewire_p, connected=args.connected)
    g = generate(spec)
    g = assign_random_integer_weights(g, args.weights[0], args.weights[1], args.weight_seed)
    write_edge_list(g, args.output)
    log.info("wrote %s (n=%d, m=%d)", args.output, g.number_of_nodes(), g.number_of_edges())
    return 0


def _cmd_attack(args):
    g, labels = load_edge_list(args.graph)
    policy = LowestId() if args.tie_break == "lowest-id" else SeededRandom(args.seed)
    metrics = [MetricKind(m) for m in args.metric]
    trace = run_attack(g, args.centrality, policy, None if args.full_snapshots else metrics,
                       args.distance_mode, args.normalization)
    if args.trace:
        with open(args.trace, "w", newline="") as fh:
            trace.write_csv(fh)
    if args.labels:
        write_labels(labels, args.labels)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["metric", "score"])
    for m in metrics:
        w.writerow([m.value, repr(score_trace(trace, m))])
    log.info("%d of %d rounds had tied top scores", trace.tie_rounds, trace.n)
    return 0


def _batch_config(args):
    if args.config:
        cfg = ExperimentConfig.load(args.config)
    else:
        cfg = ExperimentConfig()
    settings = list(cfg.settings)
    if args.preset:
        settings += PRESETS[args.preset]
    if args.n:
        if args.m_per_n is not None:
            settings += [(model, n, int(round(args.m_per_n * n))) for model in args.model for n in args.n]
        else:
            if not args.m:
                raise ConfigError("--n needs --m or --m-per-n")
            settings += [(model, n, m) for model in args.model for n in args.n for m in args.m]
    overrides = {
        "settings": settings,
        "dataset": args.dataset or cfg.dataset,
        "kinds": args.centrality or cfg.kinds,
        "metrics": args.metric or cfg.metrics,
        "trials": args.trials if args.trials is not None else cfg.trials,
        "master_seed": args.master_seed if args.master_seed is not None else cfg.master_seed,
        "distance_mode": args.distance_mode or cfg.distance_mode,
        "normalization": args.normalization or cfg.normalization,
        "output_dir": args.output_dir or cfg.output_dir,
        "ws_rewire_p": args.ws_rewire_p if args.ws_rewire_p is not None else cfg.ws_rewire_p,
        "tie_break": args.tie_break or cfg.tie_break,
        "jobs": args.jobs if args.jobs is not None else cfg.jobs,
        "weight_lo": cfg.weight_lo,
        "weight_hi": cfg.weight_hi,
    }
    cfg = ExperimentConfig(**overrides)
    if not cfg.output_dir:
        raise ConfigError("--output-dir is required")
    return cfg


def _cmd_batch(args):
    cfg = _batch_config(args)
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)

    def progress(done, total):
        if done == total or done % max(1, total // 20) == 0:
            log.info("batch: %d/%d attacks", done, total)

    table = run_batch(cfg, progress)
    table.save(out / "results.csv")
    log.info("wrote %s (%d rows)", out / "results.csv", len(table.rows))
    if table.rows and not args.no_plots:
        for path in plot_results(table, out / "figures", allow_single_point=True):
            log.info("wrote %s", path)
    if table.errors:
        with open(out / "errors.txt", "w") as fh:
            fh.write("\n".join(table.errors) + "\n")
        log.error("%d attack(s) failed; see %s", len(table.errors), out / "errors.txt")
        return 1
    return 0


def _cmd_plot(args):
    table = ResultTable.read_csv(args.results)
    for path in plot_results(table, args.output_dir, allow_single_point=args.allow_single_point):
        print(path)
    return 0


def _cmd_convert(args):
    written, skipped = convert_grid_csv(args.raw, args.output, args.from_col, args.to_col,
                                        args.voltage_col, args.cables_col)
    log.info("wrote %d edges to %s (%d rows skipped)", written, args.output, skipped)
    if args.labels:
        _, labels = load_edge_list(args.output)
        write_labels(labels, args.labels)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="flowattack", description="Centrality-guided node attacks on weighted networks.")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a random weighted network as an edge list")
    g.add_argument("--model", choices=["ER", "BA", "WS"], type=str.upper, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--weight-seed", type=int, default=1)
    g.add_argument("--weights", type=int, nargs=2, default=(1, 10), metavar=("LO", "HI"))
    g.add_argument("--ws-rewire-p", type=float, default=0.1)
    g.add_argument("--connected", action=argparse.BooleanOptionalAction, default=True)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=_cmd_generate)

    a = sub.add_parser("attack", help="attack one network and print its scores")
    a.add_argument("graph", help="edge list u,v,capacity")
    a.add_argument("--centrality", choices=KIND_NAMES, required=True)
    a.add_argument("--metric", choices=METRIC_NAMES, nargs="+", default=["ranf"])
    a.add_argument("--tie-break", choices=["random", "lowest-id"], default="random")
    a.add_argument("--seed", type=int, default=0, help="tie-break seed")
    a.add_argument("--distance-mode", choices=DISTANCE_MODES, default="reciprocal")
    a.add_argument("--normalization", choices=NORMALIZATIONS, default="network")
    a.add_argument("--trace", help="write the per-round trace CSV here")
    a.add_argument("--labels", help="write the id,label node mapping here")
    a.add_argument("--full-snapshots", action="store_true", help="record every per-round field in the trace")
    a.set_defaults(func=_cmd_attack)

    b = sub.add_parser("batch", help="run a seeded sweep and write results.csv plus figures")
    b.add_argument("--config", help="JSON file with ExperimentConfig fields")
    b.add_argument("--preset", choices=sorted(PRESETS))
    b.add_argument("--model", choices=["ER", "BA", "WS"], type=str.upper, nargs="+", default=["ER"])
    b.add_argument("--n", type=int, nargs="+")
    b.add_argument("--m", type=int, nargs="+")
    b.add_argument("--m-per-n", type=float)
    b.add_argument("--dataset", help="edge list to attack instead of generated networks")
    b.add_argument("--centrality", "--kinds", choices=KIND_NAMES, nargs="+")
    b.add_argument("--metric", "--metrics", choices=METRIC_NAMES, nargs="+")
    b.add_argument("--trials", type=int)
    b.add_argument("--master-seed", type=int)
    b.add_argument("--distance-mode", choices=DISTANCE_MODES)
    b.add_argument("--normalization", choices=NORMALIZATIONS)
    b.add_argument("--ws-rewire-p", type=float)
    b.add_argument("--tie-break", choices=["random", "lowest-id"])
    b.add_argument("--jobs", type=int)
    b.add_argument("--output-dir")
    b.add_argument("--no-plots", action="store_true")
    b.set_defaults(func=_cmd_batch)

    pl = sub.add_parser("plot", help="render SVG charts from a results CSV")
    pl.add_argument("results")
    pl.add_argument("--output-dir", required=True)
    pl.add_argument("--allow-single-point", action="store_true")
    pl.set_defaults(func=_cmd_plot)

    c = sub.add_parser("convert", help="turn a raw grid line table into an edge list")
    c.add_argument("raw")
    c.add_argument("-o", "--output", required=True)
    c.add_argument("--from-col", required=True)
    c.add_argument("--to-col", required=True)
    c.add_argument("--voltage-col", required=True)
    c.add_argument("--cables-col", help="multiply voltage by this column (European grid)")
    c.add_argument("--labels", help="write the id,label node mapping here")
    c.set_defaults(func=_cmd_convert)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (ConfigError, EdgeListError, InfeasibleSpec, DegenerateBaseline, OSError) as exc:
        log.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())

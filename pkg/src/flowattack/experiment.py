"""Batch sweeps: many seeded networks per setting, one attack per centrality.

Seeds for trial ``k`` of setting ``(model, n, m)``::

    graph seed   = derive_seed(master, model key, n, m, k)
    weight seed  = derive_seed(graph seed, 1)
    tie seed     = derive_seed(graph seed, 2, centrality index)

with model keys ER=0, BA=1, WS=2 and centrality indices in
``CentralityKind`` order. For a dataset setting the graph is fixed and only
the tie seed varies: ``derive_seed(master, 3, k, centrality index)``.
"""

import csv
import io
import json
import logging
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .attack import NORMALIZATIONS, AttackError, LowestId, SeededRandom, run_attack, score_trace
from .centrality import DISTANCE_MODES, CentralityKind
from .edgelist import load_edge_list
from .generators import GeneratorSpec, Model, assign_random_integer_weights, generate
from .robustness import MetricKind
from .rng import derive_seed

log = logging.getLogger(__name__)

RESULT_HEADER = ("model", "n", "m", "centrality", "metric", "mean", "stddev", "trials")
KIND_ORDER = list(CentralityKind)
METRIC_ORDER = list(MetricKind)
MODEL_KEYS = {Model.ER: 0, Model.BA: 1, Model.WS: 2}

PRESETS = {
    # fixed n = 200, varying density
    "density": [(model, 200, m) for model in ("BA", "ER", "WS") for m in range(400, 1001, 100)],
    # fixed m/n = 2, varying scale
    "scale": [(model, n, 2 * n) for model in ("BA", "ER", "WS") for n in range(200, 1001, 200)],
}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Setting:
    model: str
    n: int
    m: int


@dataclass
class ExperimentConfig:
    settings: list = field(default_factory=list)
    dataset: str = None
    kinds: tuple = tuple(KIND_ORDER)
    metrics: tuple = (MetricKind.R_ANF,)
    trials: int = 50
    master_seed: int = 0
    distance_mode: str = "reciprocal"
    normalization: str = "network"
    output_dir: str = None
    ws_rewire_p: float = 0.1
    weight_lo: int = 1
    weight_hi: int = 10
    tie_break: str = "random"
    jobs: int = 1

    def __post_init__(self):
        self.kinds = tuple(CentralityKind(k) for k in self.kinds)
        self.metrics = tuple(MetricKind(m) for m in self.metrics)
        self.settings = [s if isinstance(s, Setting) else Setting(str(s[0]).upper(), int(s[1]), int(s[2]))
                         for s in self.settings]

    def validate(self):
        if not self.kinds:
            raise ConfigError("at least one centrality is required")
        if not self.metrics:
            raise ConfigError("at least one metric is required")
        if self.trials < 1:
            raise ConfigError(f"trials = {self.trials} must be at least 1")
        if not self.settings and not self.dataset:
            raise ConfigError("no generator settings and no dataset given")
        if self.distance_mode not in DISTANCE_MODES:
            raise ConfigError(f"distance_mode must be one of {DISTANCE_MODES}")
        if self.normalization not in NORMALIZATIONS:
            raise ConfigError(f"normalization must be one of {NORMALIZATIONS}")
        if self.tie_break not in ("random", "lowest-id"):
            raise ConfigError("tie_break must be 'random' or 'lowest-id'")
        for s in self.settings:
            Model(s.model)

    @classmethod
    def from_dict(cls, data):
        data = dict(data)
        if "preset" in data:
            data.setdefault("settings", [])
            data["settings"] = list(data["settings"]) + PRESETS[data.pop("preset")]
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ConfigError(f"unknown config key(s): {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_dict(json.load(fh))


@dataclass(frozen=True)
class ResultRow:
    model: str
    n: int
    m: int
    centrality: str
    metric: str
    mean: float
    stddev: float
    trials: int


@dataclass
class ResultTable:
    rows: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    def write_csv(self, fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(RESULT_HEADER)
        for r in self.rows:
            w.writerow([r.model, r.n, r.m, r.centrality, r.metric, repr(r.mean), repr(r.stddev), r.trials])

    def to_csv(self):
        buf = io.StringIO()
        self.write_csv(buf)
        return buf.getvalue()

    def save(self, path):
        with open(path, "w", newline="") as fh:
            self.write_csv(fh)

    @classmethod
    def read_csv(cls, path):
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = tuple(next(reader, ()))
            if header != RESULT_HEADER:
                raise ValueError(f"{path}: expected header {','.join(RESULT_HEADER)}")
            rows = [ResultRow(r[0], int(r[1]), int(r[2]), r[3], r[4], float(r[5]), float(r[6]), int(r[7]))
                    for r in reader if r]
        return cls(rows)


def trial_graph(config, setting, trial):
    """The seeded, weighted network for one trial of a generator setting."""
    model = Model(setting.model)
    gseed = derive_seed(config.master_seed, MODEL_KEYS[model], setting.n, setting.m, trial)
    spec = GeneratorSpec(model, setting.n, setting.m, gseed, config.ws_rewire_p, connected=True)
    g = generate(spec)
    return assign_random_integer_weights(g, config.weight_lo, config.weight_hi, derive_seed(gseed, 1)), gseed


def _policy(config, seed):
    return SeededRandom(seed) if config.tie_break == "random" else LowestId()


def _run_task(task):
    config, setting, trial, kind = task
    kidx = KIND_ORDER.index(kind)
    try:
        if config.dataset:
            g, _ = load_edge_list(config.dataset)
            tie_seed = derive_seed(config.master_seed, 3, trial, kidx)
        else:
            g, gseed = trial_graph(config, setting, trial)
            tie_seed = derive_seed(gseed, 2, kidx)
        trace = run_attack(g, kind, _policy(config, tie_seed), config.metrics, config.distance_mode,
                           config.normalization)
        return {m: score_trace(trace, m) for m in config.metrics}
    except (AttackError, ValueError) as exc:
        return f"{setting.model} n={setting.n} m={setting.m} {kind.value} trial {trial}: {exc}"


def _dataset_setting(config):
    g, _ = load_edge_list(config.dataset)
    return Setting(Path(config.dataset).stem, g.number_of_nodes(), g.number_of_edges())


def run_batch(config, progress=None):
    """Run every (setting, centrality, trial) attack and aggregate per metric."""
    config.validate()
    settings = [_dataset_setting(config)] if config.dataset else list(config.settings)
    tasks = [(config, s, t, k) for s in settings for k in config.kinds for t in range(config.trials)]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            outcomes = list(pool.map(_run_task, tasks, chunksize=1))
    else:
        outcomes = []
        for i, task in enumerate(tasks):
            outcomes.append(_run_task(task))
            if progress:
                progress(i + 1, len(tasks))
    results = {}
    for (_, s, t, k), out in zip(tasks, outcomes):
        results.setdefault((s, k), []).append(out)

    table = ResultTable()
    for s in settings:
        for k in config.kinds:
            outs = results[(s, k)]
            failed = [o for o in outs if isinstance(o, str)]
            if failed:
                table.errors.extend(failed)
                for msg in failed:
                    log.error("%s", msg)
                continue
            for metric in config.metrics:
                scores = [o[metric] for o in outs]
                sd = statistics.stdev(scores) if len(scores) > 1 else 0.0
                table.rows.append(ResultRow(s.model, s.n, s.m, k.value, metric.value,
                                            statistics.fmean(scores), sd, len(scores)))
    table.rows.sort(key=lambda r: (r.model, r.n, r.m, KIND_ORDER.index(CentralityKind(r.centrality)),
                                   METRIC_ORDER.index(MetricKind(r.metric))))
    return table

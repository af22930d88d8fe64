"""Command-line front end.

Subcommands: ``entropy``, ``compose-check``, ``extensivity``,
``series-verify``, ``funceq-verify`` and ``sequence``.  Every invocation is
first turned into a :class:`RunConfig` (JSON-compatible, numbers kept as
decimal strings), so ``--dump-config`` and ``--config FILE`` replay a run
exactly.

Exit status: 0 when every check passes, 1 when a check fails (the report
says which), 2 for malformed input or configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from groupentropy import entropy as ent
from groupentropy import funceq, laws, series, special

SUBCOMMANDS = ("entropy", "compose-check", "extensivity", "series-verify", "funceq-verify", "sequence")
OUTPUTS = ("json", "csv", "text")
SEQUENCE_LAWS = ("tsallis", "tsallis-q")
SERIES_GENERATORS = ("identity", "tsallis", "rational", "random")


class ConfigError(ValueError):
    pass


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# config
# ---------------------------------------------------------------------------


@dataclass
class RunConfig:
    subcommand: str
    entropy: dict | None = None
    growth: dict | None = None
    law: dict | None = None
    options: dict = field(default_factory=dict)
    seed: int = 0
    output: str = "text"
    tol: str | None = None
    order: int = series.DEFAULT_ORDER

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise ConfigError(f"unknown subcommand {self.subcommand!r}; valid: {', '.join(SUBCOMMANDS)}")
        if self.output not in OUTPUTS:
            raise ConfigError(f"unknown output format {self.output!r}; valid: {', '.join(OUTPUTS)}")
        if self.entropy is not None:
            ent.Kind.parse(self.entropy["kind"]) if "kind" in self.entropy else None
            gen = self.entropy.get("generator")
            if gen:
                _check_name(gen["name"], special.GENERATORS, "generator")
        if self.growth is not None:
            _check_name(self.growth["name"], laws.GROWTH_FUNCTIONS, "growth function")
            gen = self.growth.get("generator")
            if gen:
                _check_name(gen["name"], special.GENERATORS, "generator")

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        known = {f for f in cls.__dataclass_fields__}
        extra = set(d) - known
        if extra:
            raise ConfigError(f"unknown config fields {sorted(extra)}")
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from None


def _check_name(name, registry, what):
    if name not in registry:
        raise ConfigError(f"unknown {what} {name!r}; valid names: {', '.join(sorted(registry))}")


def _num(s) -> float:
    try:
        return float(Fraction(str(s)))
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"not a number: {s!r}") from None


def _exact(s) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"not an exact number: {s!r}") from None


def _kv(items) -> dict:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise ConfigError(f"expected key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _tol(cfg: RunConfig, default: float) -> float:
    return default if cfg.tol is None else _num(cfg.tol)


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def build_generator(spec: dict | None) -> special.Generator | None:
    if not spec:
        return None
    params = {k: _num(v) for k, v in spec.get("params", {}).items()}
    try:
        return special.make_generator(spec["name"], **params)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def build_entropy(spec: dict) -> ent.EntropyFunctional:
    if not spec or "kind" not in spec:
        raise ConfigError("an entropy kind is required (--kind)")
    alphas = tuple(_num(a) for a in spec.get("alphas", ()))
    raw = spec.get("params", {})
    params: dict = {}
    for k, v in raw.items():
        if k == "lambdas":
            params[k] = tuple(_num(x) for x in str(v).split(","))
        else:
            params[k] = _num(v)
    gen = build_generator(spec.get("generator"))
    kind = ent.Kind.parse(spec["kind"])
    if kind in (ent.Kind.SUPEREXP, ent.Kind.SUPEREXP_MULTI) and gen is None:
        gen = special.identity()
    try:
        return ent.EntropyFunctional(kind, alphas, params, gen)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def build_growth(spec: dict) -> laws.GrowthFunction:
    if not spec:
        raise ConfigError("a growth function is required (--growth)")
    params = {k: _num(v) for k, v in spec.get("params", {}).items()}
    if spec.get("generator"):
        params["g"] = build_generator(spec["generator"])
    try:
        return laws.make_growth(spec["name"], **params)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def load_distribution(text: str, stdin) -> ent.Distribution:
    if text == "-":
        text = stdin.read()
    elif text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    try:
        return ent.Distribution.from_json(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"distribution is not valid JSON: {exc}") from None
    except ent.InvalidDistribution as exc:
        if exc.measured_sum is not None:
            raise InputError(f"malformed distribution: measured sum {exc.measured_sum!r} differs from 1") from None
        raise InputError(f"malformed distribution: {exc}") from None


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _jsonify(obj) -> str:
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        if math.isnan(obj):
            return "NaN"
        if math.isinf(obj):
            return "Infinity" if obj > 0 else "-Infinity"
        return "%.17g" % obj
    if isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, Fraction):
        return json.dumps(str(obj))
    if isinstance(obj, np.floating):
        return _jsonify(float(obj))
    if isinstance(obj, np.integer):
        return json.dumps(int(obj))
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_jsonify(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_jsonify(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _fmt(v) -> str:
    if isinstance(v, float):
        return "%.17g" % v
    return str(v)


def emit_report(results: dict, fmt: str, table: list | None = None, columns: tuple | None = None) -> str:
    """Render ``results`` as JSON, CSV or text.

    JSON floats carry 17 significant digits so they parse back exactly.
    With ``table`` (a list of rows over ``columns``), CSV holds just the
    table; otherwise CSV is ``key,value`` rows of the flattened report.
    """
    if fmt == "json":
        return _jsonify(results) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if table is not None:
            w.writerow(columns)
            for row in table:
                w.writerow([_fmt(v) for v in row])
        else:
            w.writerow(["key", "value"])
            for k, v in _flatten(results):
                w.writerow([k, _fmt(v)])
        return buf.getvalue()
    lines = []
    if table is not None:
        lines.append(" ".join(columns))
        lines.extend(" ".join(_fmt(v) for v in row) for row in table)
        rest = {k: v for k, v in results.items() if k != "rows"}
        lines.extend(f"{k} = {_fmt(v)}" for k, v in _flatten(rest))
    else:
        lines.extend(f"{k} = {_fmt(v)}" for k, v in _flatten(results))
    return "\n".join(lines) + "\n"


def _flatten(d, prefix=""):
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            yield from _flatten(v, key + ".")
        elif isinstance(v, (list, tuple)):
            yield key, _jsonify(v)
        else:
            yield key, v


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_entropy(cfg: RunConfig, stdin, out) -> int:
    S = build_entropy(cfg.entropy)
    opts = cfg.options
    res = {"kind": S.kind.value}
    if opts.get("logw") is not None:
        logw = _num(opts["logw"])
        try:
            res["logW"] = logw
            res["value"] = ent.uniform_eval(S, logw)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    elif opts.get("dist") is not None:
        p = load_distribution(opts["dist"], stdin)
        res["W"] = p.W
        res["value"] = ent.catalog_eval(S, p)
    else:
        raise ConfigError("entropy needs --dist or --logw")
    if cfg.output == "text":
        out.write(_fmt(res["value"]) + "\n")
    else:
        out.write(emit_report(res, cfg.output))
    return 0


def _parse_sizes(s: str) -> tuple:
    r = funceq.parse_range(s)
    if r.start < 1:
        raise ConfigError("sizes must be at least 1")
    return (r.start, r.stop - 1)


def _cmd_compose(cfg: RunConfig, stdin, out) -> int:
    S = build_entropy(cfg.entropy)
    trials = int(cfg.options.get("trials", 1000))
    try:
        sizes = _parse_sizes(cfg.options.get("sizes", "2..6"))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    tol = _tol(cfg, 1e-10)
    rep = laws.check_composability(S, trials, sizes, cfg.seed)
    d = rep.to_dict()
    d["tol"] = tol
    d["passed"] = rep.passed(tol)
    out.write(emit_report(d, cfg.output))
    return 0 if d["passed"] else 1


def _parse_n_list(s: str) -> list:
    if ".." in s:
        # a..b:step
        rng, _, step = s.partition(":")
        lo, hi = rng.split("..")
        lo, hi, st = _num(lo), _num(hi), _num(step or 1)
        vals = list(np.arange(lo, hi + st / 2, st))
        return [float(v) for v in vals]
    return [_num(v) for v in s.split(",")]


def _cmd_extensivity(cfg: RunConfig, stdin, out) -> int:
    S = build_entropy(cfg.entropy)
    W = build_growth(cfg.growth)
    Ns = _parse_n_list(cfg.options.get("n", "100,200,500,1000"))
    try:
        table = laws.extensivity_scan(S, W, Ns)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    d = table.to_dict()
    status = 0
    if cfg.options.get("expect_c") is not None:
        c = _num(cfg.options["expect_c"])
        N, _, r = table.rows[-1]
        d["expected_c"] = c
        d["deviation"] = abs(r - c)
        d["bound"] = 10.0 / N
        d["passed"] = abs(r - c) <= 10.0 / N
        status = 0 if d["passed"] else 1
    rows = [(int(N) if float(N).is_integer() else N, s, r) for N, s, r in table.rows]
    out.write(emit_report(d, cfg.output, rows, ("N", "S", "S_over_N")))
    return status


def _series_generator(spec: dict, order: int, seed: int) -> series.TruncatedSeries:
    name = spec["name"]
    params = spec.get("params", {})
    if name == "identity":
        return series.TruncatedSeries.variable(order)
    if name == "tsallis":
        return series.exp_generator(_exact(params.get("sigma", "1")), order)
    if name == "rational":
        return series.rational_generator(_exact(params.get("a", "1")), _exact(params.get("b", "1")), order)
    if name == "random":
        return series.random_generator(np.random.default_rng(seed), order)
    raise ConfigError(f"unknown series generator {name!r}; valid names: {', '.join(SERIES_GENERATORS)}")


def _cmd_series(cfg: RunConfig, stdin, out) -> int:
    spec = cfg.law or {}
    order = int(cfg.order)
    try:
        if spec.get("phi"):
            phi = series.parse_poly(spec["phi"], nvars=2, order=order)
            psi = series.parse_poly(spec["psi"], nvars=2, order=order) if spec.get("psi") else None
        elif spec.get("generator"):
            G = _series_generator(spec["generator"], order, cfg.seed)
            phi = series.construct_group_law(G)
            psi = series.construct_ring_product(G)
        else:
            raise ConfigError("series-verify needs --law or --generator")
    except series.SeriesError as exc:
        raise ConfigError(str(exc)) from None
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc)) from None
    group = series.verify_group_axioms(phi)
    res = {"order": order, "group": group.to_dict()}
    ok = group.passed
    if psi is not None:
        ring = series.verify_ring_axioms(phi, psi)
        res["ring"] = ring.to_dict()
        ok = ok and ring.passed
    if spec.get("generator", {}).get("name") == "random":
        res["seed"] = cfg.seed
    res["passed"] = ok
    if spec.get("emit_series"):
        res["phi"] = phi.to_records()
        if psi is not None:
            res["psi"] = psi.to_records()
    out.write(emit_report(res, cfg.output))
    return 0 if ok else 1


def _closed_form_law(kind: funceq.EquationKind, G: special.Generator):
    if G.kind == "tsallis":
        sigma = G.params["sigma"]
        return laws.tsallis_product(sigma) if kind.uses_psi else laws.multiplicative_law(sigma)
    if G.kind == "rational" and not kind.uses_psi:
        return laws.rational_law(G.params["a"], G.params["b"])
    if G.kind == "identity":
        return laws.ordinary_product() if kind.uses_psi else laws.additive_law()
    return None


def _cmd_funceq(cfg: RunConfig, stdin, out) -> int:
    spec = cfg.law or {}
    try:
        kind = funceq.EquationKind.parse(spec.get("equation", "additive-phi"))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    G = build_generator(spec.get("generator")) or special.identity()
    law = _closed_form_law(kind, G) if spec.get("closed_form") else None
    eq = funceq.FunctionalEquation.from_generator(kind, G, law)
    f = funceq.lemma_solution(kind, G)
    g = cfg.options.get("grid", "0.1,3.0,20").split(",")
    if len(g) != 3:
        raise ConfigError("grid must be lo,hi,count")
    grid = np.linspace(_num(g[0]), _num(g[1]), int(g[2]))
    try:
        r = funceq.verify_on_grid(eq, f, grid)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    tol = _tol(cfg, 1e-10)
    d = {"equation": kind.value, "generator": G.kind, "law": eq.law.name, **r.to_dict(),
         "tol": tol, "passed": r.passed(tol)}
    out.write(emit_report(d, cfg.output))
    return 0 if d["passed"] else 1


def _cmd_sequence(cfg: RunConfig, stdin, out) -> int:
    spec = cfg.law or {}
    name = spec.get("name", "tsallis-q")
    if name not in SEQUENCE_LAWS:
        raise ConfigError(f"unknown sequence law {name!r}; valid names: {', '.join(SEQUENCE_LAWS)}")
    p = _exact(spec.get("p", "1"))
    p = int(p) if p.denominator == 1 else float(p)
    try:
        sysm = funceq.DiscreteSystem.tsallis(cfg.options.get("de", "DE3"), p, rescaled=(name == "tsallis-q"))
        n_range = funceq.parse_range(cfg.options.get("range", "-8..8"))
        seq = funceq.gen_sequence(sysm, n_range)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    rep = funceq.check_recurrence(seq, sysm, tol=_tol(cfg, 1e-10))
    if cfg.output == "json":
        out.write(_jsonify(list(seq.values())) + "\n")
    elif cfg.output == "csv":
        out.write(emit_report({}, "csv", [(n, v) for n, v in seq.items()], ("n", "value")))
    else:
        out.write("".join(f"{n} {_fmt(v)}\n" for n, v in seq.items()))
    if not rep.passed:
        sys.stderr.write(_jsonify({"recurrence": rep.to_dict()}) + "\n")
        return 1
    return 0


_DISPATCH = {
    "entropy": _cmd_entropy,
    "compose-check": _cmd_compose,
    "extensivity": _cmd_extensivity,
    "series-verify": _cmd_series,
    "funceq-verify": _cmd_funceq,
    "sequence": _cmd_sequence,
}


def run(config: RunConfig, stdin=None, stdout=None) -> int:
    """Execute one configured command; returns the exit status."""
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    return _DISPATCH[config.subcommand](config, stdin, stdout)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--output", choices=OUTPUTS, default=None, help="output format (default: text)")
    p.add_argument("--seed", type=int, default=0, help="random seed (default: 0)")
    p.add_argument("--tol", default=None, help="tolerance override (default: 1e-10 for residual checks)")
    p.add_argument("--order", type=int, default=series.DEFAULT_ORDER,
                   help=f"series truncation order (default: {series.DEFAULT_ORDER})")
    p.add_argument("--dump-config", action="store_true", help="print the run configuration as JSON and exit")


def _add_entropy(p: argparse.ArgumentParser):
    p.add_argument("--kind", required=True, help=f"entropy kind: {', '.join(ent.ENTROPY_KINDS)}")
    p.add_argument("--alpha", action="append", default=[], help="entropic parameter; repeat for several")
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE",
                   help="kind parameter (lambdas=..., rate, beta, k1)")
    p.add_argument("--generator", default=None, help=f"generator: {', '.join(sorted(special.GENERATORS))}")
    p.add_argument("--gparam", action="append", default=[], metavar="KEY=VALUE", help="generator parameter")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="groupentropy", description=__doc__.split("\n\n")[0])
    parser.add_argument("--config", default=None, help="run a saved JSON configuration")
    parser.add_argument("--output", choices=OUTPUTS, default=None, help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="subcommand")

    p = sub.add_parser("entropy", help="evaluate an entropy on a distribution or a uniform state")
    _add_entropy(p)
    p.add_argument("--dist", default=None, help="JSON array, @file or - for stdin")
    p.add_argument("--logw", default=None, help="evaluate on the uniform state with this ln W")
    _add_common(p)

    p = sub.add_parser("compose-check", help="composability residual on random independent pairs")
    _add_entropy(p)
    p.add_argument("--trials", type=int, default=1000, help="number of random pairs (default: 1000)")
    p.add_argument("--sizes", default="2..6", help="state counts per system, a..b (default: 2..6)")
    _add_common(p)

    p = sub.add_parser("extensivity", help="S(N)/N scan over a growth function")
    _add_entropy(p)
    p.add_argument("--growth", required=True, help=f"growth function: {', '.join(laws.GROWTH_FUNCTIONS)}")
    p.add_argument("--growth-param", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--growth-generator", default=None, help="interpolation function g for super-exponential growth")
    p.add_argument("--growth-gparam", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--n", default="100,200,500,1000", help="sizes: comma list or a..b:step")
    p.add_argument("--expect-c", default=None, help="fail unless |S(N)/N - c| <= 10/N at the last N")
    _add_common(p)

    p = sub.add_parser("series-verify", help="exact formal group / ring axiom check")
    p.add_argument("--law", default=None, help='group law expression, e.g. "x+y+x*y"')
    p.add_argument("--psi", default=None, help="ring product expression")
    p.add_argument("--generator", default=None, help=f"series generator: {', '.join(SERIES_GENERATORS)}")
    p.add_argument("--gparam", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--emit-series", action="store_true", help="include the coefficient records")
    _add_common(p)

    p = sub.add_parser("funceq-verify", help="grid residual of a master functional equation")
    p.add_argument("--equation", default="additive-phi",
                   help="additive-phi, additive-psi, multiplicative-phi or multiplicative-psi (default: additive-phi)")
    p.add_argument("--generator", default="identity")
    p.add_argument("--gparam", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--closed-form", action="store_true",
                   help="use the closed-form law where one is known instead of conjugation")
    p.add_argument("--grid", default="0.1,3.0,20", help="lo,hi,count per axis (default: 0.1,3.0,20)")
    _add_common(p)

    p = sub.add_parser("sequence", help="terms of a discrete system DE1..DE4")
    p.add_argument("--de", default="3", help="system 1..4 (default: 3)")
    p.add_argument("--law", default="tsallis-q", help=f"{', '.join(SEQUENCE_LAWS)} (default: tsallis-q)")
    p.add_argument("--p", default="1", help="ring parameter p")
    p.add_argument("--range", default="-8..8", help="inclusive index range a..b (default: -8..8)")
    _add_common(p)
    return parser


def _entropy_spec(a) -> dict:
    spec = {"kind": a.kind, "alphas": list(a.alpha), "params": _kv(a.param)}
    if a.generator:
        spec["generator"] = {"name": a.generator, "params": _kv(a.gparam)}
    return spec


def config_from_args(a: argparse.Namespace) -> RunConfig:
    sc = a.subcommand
    kw = dict(subcommand=sc, seed=a.seed, output=a.output or "text", tol=a.tol, order=a.order)
    if sc == "entropy":
        kw.update(entropy=_entropy_spec(a), options={"dist": a.dist, "logw": a.logw})
    elif sc == "compose-check":
        kw.update(entropy=_entropy_spec(a), options={"trials": a.trials, "sizes": a.sizes})
    elif sc == "extensivity":
        g = {"name": a.growth, "params": _kv(a.growth_param)}
        if a.growth_generator:
            g["generator"] = {"name": a.growth_generator, "params": _kv(a.growth_gparam)}
        kw.update(entropy=_entropy_spec(a), growth=g, options={"n": a.n, "expect_c": a.expect_c})
    elif sc == "series-verify":
        law = {"phi": a.law, "psi": a.psi, "emit_series": a.emit_series}
        if a.generator:
            law["generator"] = {"name": a.generator, "params": _kv(a.gparam)}
        kw.update(law=law)
    elif sc == "funceq-verify":
        kw.update(law={"equation": a.equation, "closed_form": a.closed_form,
                       "generator": {"name": a.generator, "params": _kv(a.gparam)}},
                  options={"grid": a.grid})
    elif sc == "sequence":
        de = a.de if str(a.de).upper().startswith("DE") else f"DE{a.de}"
        kw.update(law={"name": a.law, "p": a.p}, options={"de": de, "range": a.range})
    return RunConfig(**kw)


_DASHED_VALUE_FLAGS = ("--range", "--sizes", "--n", "--grid", "--p", "--expect-c", "--logw")


def _glue_negative_values(argv: list) -> list:
    # argparse mistakes values such as "-8..8" for options; glue them with "=".
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _DASHED_VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and len(argv[i + 1]) > 1 and (argv[i + 1][1].isdigit() or argv[i + 1][1] == "."):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    a = parser.parse_args(_glue_negative_values(argv))
    try:
        if a.config:
            with open(a.config) as fh:
                cfg = RunConfig.from_json(fh.read())
            if a.output:
                cfg.output = a.output
        elif a.subcommand is None:
            parser.print_help(sys.stderr)
            return 2
        else:
            cfg = config_from_args(a)
            if a.dump_config:
                sys.stdout.write(cfg.to_json() + "\n")
                return 0
        return run(cfg)
    except InputError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return 2
    except (ConfigError, ValueError) as exc:
        sys.stderr.write(f"config error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

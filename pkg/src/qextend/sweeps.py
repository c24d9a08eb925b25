"""Sweep orchestration: one function per CLI subcommand, each producing a Report.

Work is split into independent cells (one per q, or per (q, d, form spec));
cells run in a process pool when ``threads > 1`` and are merged in cell
order, so output does not depend on scheduling. A cell that raises is
recorded as a failing row instead of aborting the sweep.
"""
from __future__ import annotations

import configparser
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from fractions import Fraction

import numpy as np

from . import __version__
from .errors import ConfigError, DegenerateDenominator, QExtendError
from .exponents import (
    bootstrap_exponent,
    exponent_regions,
    fmt,
    format_region,
    incidence3_by_interpolation,
    incidence3_exponents,
    necessary_boundary_d2,
    stein_tomas_exponent,
)
from .expsums import gauss_sum, kloosterman_sum, power_sum_identity_check, salie_sum
from .extension import (
    ExponentPair,
    decay_check,
    kernel_decay_check,
    monotone_growth,
    rstar_lower_bound,
    rstar_two_two_exact,
    surface_ft_closed_form,
    surface_ft_direct,
    trend_table,
)
from .field import is_prime, make_field
from .incidence import (
    big_set_l4_check,
    dyadic_sizes,
    energy_check,
    energy_l4_identity,
    incidence_check,
    pairsum_check,
    random_subset,
    self_convolution_check,
    small_set_l4_check,
)
from .quadform import GRID_LIMIT, enumerate_surface, level_list, parse_form_spec
from .report import ROW_FIELDS, BoundReport

SCHEMA = 1

DEFAULT_THRESHOLDS = {
    "weil": 2.0,
    "decay": 2.0,
    "kernel": 2.0,
    "self_convolution": 8.0,
    "rstar": 4.0,
    "incidence": 4.0,
}

CHECKS = {
    "gauss": "|G_a(chi, psi)| equals sqrt(q) for every a != 0",
    "power": "sum_s chi(t s^n) equals its expansion in Gauss sums of order gcd(n, q-1)",
    "salie": "|twisted Kloosterman sum| <= weil * sqrt(q)",
    "kloosterman": "|Kloosterman sum| <= weil * sqrt(q) for (a, b) != (0, 0)",
    "surface_ft": "closed-form surface transform equals enumeration; decay and point-count concentration",
    "rstar_2_2_exact": "||ext f||_2 / ||f||_2 equals q^(d/2) / sqrt(#S) for every f",
    "kernel_decay": "max |(dsigma)^ - delta_0| <= kernel * (q^(d-1)/#S) q^(-(d-1)/2)",
    "rstar_2_4": "test-family lower bound on R*(2 -> 4) <= rstar",
    "stein_tomas": "test-family lower bound on R*(2 -> (2d+2)/(d-1)) <= rstar",
    "stein_tomas_trend": "per-q maximum of the Stein-Tomas lower bounds",
    "self_convolution": "max_{x != 0} (dsigma * dsigma)(x) <= self_convolution",
    "pairsum": "#{(a, b) in S^2 : a + b = x} <= 2 q^(d-2) for x != 0",
    "shifted_incidence": "#{(x, y) in E^2 : x - y + z in S} <= incidence ((#E)^2/q + #E q^((d-1)/2))",
    "additive_energy": "(#E)^2 <= Lambda(E) <= min((#E)^3, incidence ((#E)^3/q + (#E)^2 q^((d-1)/2)))",
    "energy_l4_identity": "||(E dsigma)^||_4 equals q^(d/4) Lambda(E)^(1/4) / #S",
    "big_set_l4": "||(E dsigma)^||_4 / ||E||_{4/3} <= incidence for #E >= q^((d+1)/2)",
    "small_set_l4": "||(E dsigma)^||_4 / (q^e ||E||_{p0}) <= incidence in each size regime",
    "bootstrap": "theta = (d-1)/(d+1), d~ = d-1 gives r = (2d+2)/(d-1) with q-exponent 0",
    "restricted_exponents": "closed-form restricted (p, r) thresholds equal the interpolation route",
}


@dataclass
class SweepConfig:
    q_list: list[int] = field(default_factory=lambda: [3, 5, 7, 11, 13])
    d_list: list[int] = field(default_factory=lambda: [2, 3])
    forms: list[str] = field(default_factory=lambda: ["diag", "random:5"])
    j_list: object = "all"
    seed: int = 0
    kinds: list[str] = field(default_factory=lambda: ["gauss", "power", "salie", "kloosterman"])
    families: list[str] = field(default_factory=lambda: ["constant", "point", "gaussian", "subsets", "caps"])
    functions: int = 100
    subsets: int = 20
    p0_list: list[Fraction] = field(default_factory=lambda: [Fraction(2), Fraction(4)])
    thresholds: dict = field(default_factory=lambda: dict(DEFAULT_THRESHOLDS))
    threads: int = 1
    out: str | None = None
    format: str = "csv"

    def validate(self) -> "SweepConfig":
        if not self.q_list:
            raise ConfigError("q list is empty")
        for q in self.q_list:
            if q < 3 or not is_prime(q):
                raise ConfigError(f"q={q} is not an odd prime")
        if not self.d_list or any(d < 1 for d in self.d_list):
            raise ConfigError("d must be a positive integer")
        for q in self.q_list:
            for d in self.d_list:
                if q**d > GRID_LIMIT:
                    raise ConfigError(f"grid {q}^{d} exceeds {GRID_LIMIT}")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"unknown format {self.format!r}")
        if self.threads < 1:
            raise ConfigError("threads must be >= 1")
        unknown = set(self.thresholds) - set(DEFAULT_THRESHOLDS)
        if unknown:
            raise ConfigError(f"unknown threshold(s) {sorted(unknown)}")
        return self

    def echo(self) -> dict:
        """Effective configuration as strings, excluding run-time-only keys."""
        out = {}
        for f in fields(self):
            if f.name in ("out", "threads"):
                continue
            v = getattr(self, f.name)
            if isinstance(v, dict):
                v = ",".join(f"{k}={v[k]!r}" for k in sorted(v))
            elif f.name == "forms":
                v = ";".join(v)
            elif isinstance(v, list):
                v = ",".join(fmt(x) if isinstance(x, Fraction) else str(x) for x in v)
            out[f.name] = str(v)
        return out


# --- config parsing -----------------------------------------------------------

def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise ConfigError(f"expected a comma-separated integer list, got {s!r}") from exc


def _j_list(s: str):
    s = s.strip()
    return s if s in ("all", "classes") else _int_list(s)


def _parse_threshold(item: str) -> tuple[str, float]:
    name, sep, val = item.partition("=")
    if not sep:
        raise ConfigError(f"threshold {item!r} is not name=value")
    try:
        return name.strip(), float(val)
    except ValueError as exc:
        raise ConfigError(f"threshold {item!r} has a non-numeric value") from exc


def apply_settings(cfg: SweepConfig, settings: dict) -> SweepConfig:
    """Overlay string settings (from a config file or CLI flags) onto ``cfg``."""
    for key, raw in settings.items():
        if raw is None:
            continue
        if key in ("q", "q_list"):
            cfg.q_list = _int_list(raw)
        elif key in ("d", "d_list"):
            cfg.d_list = _int_list(raw)
        elif key == "forms":
            cfg.forms = [f.strip() for f in raw.split(";") if f.strip()]
        elif key in ("j", "j_list"):
            cfg.j_list = _j_list(raw)
        elif key == "seed":
            cfg.seed = int(raw)
            if not 0 <= cfg.seed < 2**64:
                raise ConfigError("seed must fit in 64 bits")
        elif key == "kinds":
            cfg.kinds = [k.strip() for k in raw.split(",") if k.strip()]
        elif key == "families":
            cfg.families = [k.strip() for k in raw.split(",") if k.strip()]
        elif key in ("functions", "subsets", "threads"):
            setattr(cfg, key, int(raw))
        elif key in ("p0", "p0_list"):
            cfg.p0_list = [Fraction(x) for x in raw.split(",") if x.strip()]
        elif key == "out":
            cfg.out = raw
        elif key == "format":
            cfg.format = raw
        else:
            raise ConfigError(f"unknown config key {key!r}")
    return cfg


def load_config(path) -> SweepConfig:
    """Read an INI file with a [sweep] section and an optional [thresholds] section."""
    parser = configparser.ConfigParser()
    if not parser.read(path):
        raise ConfigError(f"cannot read config {path}")
    cfg = SweepConfig()
    if parser.has_section("sweep"):
        apply_settings(cfg, dict(parser.items("sweep")))
    if parser.has_section("thresholds"):
        for name, val in parser.items("thresholds"):
            cfg.thresholds[name] = float(val)
    return cfg


def env_threads(default: int = 1) -> int:
    raw = os.environ.get("QEXTEND_THREADS")
    return int(raw) if raw else default


# --- report -------------------------------------------------------------------

@dataclass
class Report:
    command: str
    config: dict
    columns: tuple
    rows: list[dict]
    checks: dict
    extra_text: str = ""

    @property
    def failed(self) -> int:
        return sum(1 for r in self.rows if r.get("passed") is False)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> list[dict]:
        per: dict[str, dict] = {}
        for r in self.rows:
            name = r.get("check") or r.get("kind") or self.command
            s = per.setdefault(name, {"check": name, "rows": 0, "failed": 0, "max_ratio": 0.0})
            s["rows"] += 1
            s["failed"] += r.get("passed") is False
            ratio = r.get("ratio")
            if isinstance(ratio, (int, float)) and not math.isnan(ratio):
                s["max_ratio"] = max(s["max_ratio"], float(ratio))
        return [per[k] for k in sorted(per)]


def _cell_map(func, cells, threads: int):
    if threads > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(func, cells))
    return [func(c) for c in cells]


def _cell_ctx(cell) -> dict:
    out = {"q": cell.get("q")}
    if "d" in cell:
        out["d"] = cell["d"]
    if "spec" in cell:
        out["form_id"] = cell["spec"]
    return out


def _run_cells(func, cells, threads):
    results = _cell_map(_CellRunner(func), cells, threads)
    return [row for rows in results for row in rows]


class _CellRunner:
    """Picklable wrapper giving per-cell failure isolation."""

    def __init__(self, func):
        self.func = func

    def __call__(self, cell):
        try:
            return self.func(cell)
        except QExtendError as exc:
            return [{"check": "error", "note": f"{type(exc).__name__}: {exc}", "passed": False, **_cell_ctx(cell)}]


# --- sums -----------------------------------------------------------------------

SUMS_COLUMNS = ("q", "kind", "a", "b", "value_re", "value_im", "magnitude", "bound", "ratio", "passed", "note")


def _sums_cell(cell) -> list[dict]:
    q, kinds, weil = cell["q"], cell["kinds"], cell["weil"]
    field_ = make_field(q)
    rows = []

    def row(kind, a, b, value, magnitude, bound, passed, note=""):
        ratio = 0.0 if math.isinf(bound) else magnitude / bound
        rows.append({
            "q": q, "kind": kind, "a": a, "b": b, "value_re": value.real, "value_im": value.imag,
            "magnitude": magnitude, "bound": bound, "ratio": ratio, "passed": bool(passed), "note": note,
        })

    for kind in kinds:
        if kind == "gauss":
            for a in range(1, q):
                g = gauss_sum(field_, a, 1)
                row("gauss", a, 1, g.value, g.magnitude, g.bound, abs(g.magnitude - g.bound) <= 1e-9 * q)
        elif kind == "power":
            for n in (2, 3, 4, 5):
                for t in range(1, q):
                    rep = power_sum_identity_check(field_, t, n)
                    row("power", t, n, rep.extra["lhs"], rep.value, rep.bound, rep.passed, f"h={rep.extra['h']}")
        elif kind in ("salie", "kloosterman"):
            fn = salie_sum if kind == "salie" else kloosterman_sum
            for a in range(q):
                for b in range(q):
                    s = fn(field_, a, b)
                    bound = s.bound if math.isinf(s.bound) else weil * math.sqrt(q)
                    trivial = a == 0 and b == 0
                    row(kind, a, b, s.value, s.magnitude, bound,
                        trivial or s.magnitude <= bound + 1e-6, "a=b=0" if trivial else "")
        else:
            raise ConfigError(f"unknown sum kind {kind!r}")
    return rows


def cmd_sums(cfg: SweepConfig) -> Report:
    cfg.validate()
    cells = [{"q": q, "kinds": cfg.kinds, "weil": cfg.thresholds["weil"]} for q in cfg.q_list]
    rows = _run_cells(_sums_cell, cells, cfg.threads)
    return Report("sums", cfg.echo(), SUMS_COLUMNS, rows,
                  {k: CHECKS[k] for k in cfg.kinds if k in CHECKS})


# --- surface transforms ---------------------------------------------------------

SURFACE_COLUMNS = (
    "q", "d", "form_id", "j", "max_abs_gap", "max_decay_ratio", "cardinality",
    "count_gap", "zero_gap", "passed", "note",
)


def _form_cells(cfg: SweepConfig, **extra) -> list[dict]:
    return [
        {"q": q, "d": d, "spec": spec, "j_list": cfg.j_list, "seed": cfg.seed, **extra}
        for d in cfg.d_list for q in cfg.q_list for spec in cfg.forms
    ]


def _surfaces(cell):
    for form in parse_form_spec(cell["spec"], cell["q"], cell["d"], cell["seed"]):
        for j in level_list(cell["q"], cell["j_list"]):
            try:
                yield form, j, enumerate_surface(form, j)
            except QExtendError as exc:
                yield form, j, exc


def _surface_ft_cell(cell) -> list[dict]:
    rows = []
    decay_c = cell["thresholds"]["decay"]
    for form, j, s in _surfaces(cell):
        q, d = form.q, form.d
        base = {"q": q, "d": d, "form_id": form.label, "j": j}
        if isinstance(s, Exception):
            rows.append({**base, "passed": False, "note": type(s).__name__})
            continue
        direct = surface_ft_direct(s)
        closed = surface_ft_closed_form(s)
        gap = float(np.abs(direct.values - closed.values).max())
        decay = decay_check(s, direct, decay_c)
        n = s.cardinality
        count_gap = n - q ** (d - 1)
        zero_gap = abs(float(closed.values[0].real) * q**d - n)
        ok = (
            gap <= 1e-9
            and decay.value <= decay_c + 1e-6
            and count_gap**2 <= q ** (d - 1)
            and zero_gap <= 1e-6
            and (d != 2 or n in (q - 1, q + 1))
        )
        rows.append({
            **base, "max_abs_gap": gap, "max_decay_ratio": decay.value, "cardinality": n,
            "count_gap": count_gap, "zero_gap": zero_gap, "passed": bool(ok), "note": decay.witness,
        })
    return rows


def cmd_surface_ft(cfg: SweepConfig) -> Report:
    cfg.validate()
    rows = _run_cells(_surface_ft_cell, _form_cells(cfg, thresholds=cfg.thresholds), cfg.threads)
    return Report("surface-ft", cfg.echo(), SURFACE_COLUMNS, rows, {"surface_ft": CHECKS["surface_ft"]})


# --- extension ------------------------------------------------------------------

def _row(rep: BoundReport, **override) -> dict:
    row = rep.as_row()
    row.update(override)
    return row


def _extension_cell(cell) -> list[dict]:
    rows = []
    th = cell["thresholds"]
    for form, j, s in _surfaces(cell):
        if isinstance(s, Exception):
            rows.append({"check": "error", "q": form.q, "d": form.d, "form_id": form.label, "j": j,
                         "passed": False, "note": type(s).__name__})
            continue
        d = s.d
        seed = cell["seed"]
        rows.append(_row(rstar_two_two_exact(s, cell["functions"], seed)))
        rep = kernel_decay_check(s)
        bound = th["kernel"] / 2.0 * rep.bound
        rows.append(_row(rep.with_context(bound=bound, passed=rep.value <= bound * (1 + 1e-9))))
        rows.append(_row(rstar_lower_bound(s, ExponentPair(2, 4), cell["families"], seed, th["rstar"]),
                         check="rstar_2_4"))
        r = stein_tomas_exponent(d) if d >= 2 else None
        if r is not None:
            rows.append(_row(rstar_lower_bound(s, ExponentPair(2, r), cell["families"], seed, th["rstar"]),
                             check="stein_tomas"))
        rows.append(_row(self_convolution_check(s, th["self_convolution"])))
    return rows


def cmd_extension(cfg: SweepConfig) -> Report:
    cfg.validate()
    cells = _form_cells(cfg, thresholds=cfg.thresholds, functions=cfg.functions, families=cfg.families)
    rows = _run_cells(_extension_cell, cells, cfg.threads)
    for d in cfg.d_list:
        if d < 2:
            continue
        st = [_as_report(r) for r in rows if r.get("check") == "stein_tomas" and r.get("d") == d]
        growth = monotone_growth(st)
        for q, peak, mean in trend_table(st):
            rows.append({
                "check": "stein_tomas_trend", "q": q, "d": d, "family": f"r={fmt(stein_tomas_exponent(d))}",
                "value": peak, "bound": cfg.thresholds["rstar"], "ratio": peak / cfg.thresholds["rstar"],
                "passed": peak <= cfg.thresholds["rstar"], "witness": f"mean={mean!r}",
                "note": "monotone_growth" if growth else "",
            })
    checks = {k: CHECKS[k] for k in
              ("rstar_2_2_exact", "kernel_decay", "rstar_2_4", "stein_tomas", "stein_tomas_trend", "self_convolution")}
    return Report("extension", cfg.echo(), ROW_FIELDS, rows, checks)


def _as_report(row: dict) -> BoundReport:
    return BoundReport(row["check"], row["value"], row["bound"], row["passed"], q=row["q"], d=row["d"])


# --- incidence ------------------------------------------------------------------

def _worst(reports: list[BoundReport], identity: bool = False) -> BoundReport:
    if identity:
        return max(reports, key=lambda r: abs(r.ratio - 1.0))
    return max(reports, key=lambda r: r.ratio)


def incidence_reports(s, subsets: int, seed: int, p0_list, constant: float) -> list[BoundReport]:
    """All subset-level incidence checks for one surface, worst instance per (check, size)."""
    out = [pairsum_check(s)]
    for size in dyadic_sizes(s.cardinality):
        count = 1 if size == s.cardinality else subsets
        buckets: dict[str, list[BoundReport]] = {}
        for k in range(count):
            E = random_subset(s, size, (seed, k))
            tag = f"subset#{k}"
            reps = [
                incidence_check(E, constant),
                energy_check(E, constant),
                energy_l4_identity(E),
                big_set_l4_check(E, constant),
            ]
            for p0 in p0_list:
                reps += small_set_l4_check(E, p0, constant)
            for rep in reps:
                key = f"{rep.check}|{rep.family}"
                buckets.setdefault(key, []).append(rep.with_context(witness=f"{rep.witness or ''} {tag}".strip(), seed=seed))
        for key in buckets:
            reps = buckets[key]
            out.append(_worst(reps, identity=reps[0].check == "energy_l4_identity"))
    return out


def _incidence_cell(cell) -> list[dict]:
    rows = []
    for form, j, s in _surfaces(cell):
        if isinstance(s, Exception):
            rows.append({"check": "error", "q": form.q, "d": form.d, "form_id": form.label, "j": j,
                         "passed": False, "note": type(s).__name__})
            continue
        for rep in incidence_reports(s, cell["subsets"], cell["seed"], cell["p0_list"],
                                     cell["thresholds"]["incidence"]):
            rows.append(_row(rep))
    return rows


def cmd_incidence(cfg: SweepConfig) -> Report:
    cfg.validate()
    cells = _form_cells(cfg, thresholds=cfg.thresholds, subsets=cfg.subsets, p0_list=cfg.p0_list)
    rows = _run_cells(_incidence_cell, cells, cfg.threads)
    checks = {k: CHECKS[k] for k in
              ("pairsum", "shifted_incidence", "additive_energy", "energy_l4_identity", "big_set_l4", "small_set_l4")}
    return Report("incidence", cfg.echo(), ROW_FIELDS, rows, checks)


# --- exponents ------------------------------------------------------------------

EXPONENT_COLUMNS = ("check", "d", "p0", "branch", "p", "r", "p_alt", "r_alt", "passed", "note")


def cmd_exponents(cfg: SweepConfig) -> Report:
    if not cfg.d_list or any(d < 2 for d in cfg.d_list):
        raise ConfigError("exponents need d >= 2")
    if any(p0 < 2 for p0 in cfg.p0_list):
        raise ConfigError("p0 values must be >= 2")
    rows = []
    regions = []
    for d in cfg.d_list:
        r_st = stein_tomas_exponent(d)
        boot = bootstrap_exponent(d, d - 1, Fraction(d - 1, d + 1))
        rows.append({
            "check": "bootstrap", "d": d, "p": "2", "r": fmt(boot.r_out), "p_alt": "2", "r_alt": fmt(r_st),
            "passed": boot.r_out == r_st and boot.q_exponent == 0, "note": f"q_exponent={fmt(boot.q_exponent)}",
        })
        for p0 in cfg.p0_list:
            for branch in ("small", "large"):
                base = {"check": "restricted_exponents", "d": d, "p0": fmt(p0), "branch": branch}
                try:
                    pair = incidence3_exponents(d, p0, branch)
                except DegenerateDenominator as exc:
                    rows.append({**base, "passed": None, "note": f"DegenerateDenominator: {exc}"})
                    continue
                alt = incidence3_by_interpolation(d, p0, branch)
                rows.append({
                    **base, "p": fmt(pair.p), "r": fmt(pair.r), "p_alt": fmt(alt.p), "r_alt": fmt(alt.r),
                    "passed": pair == alt,
                })
        regions.append(f"# d={d}")
        regions += [format_region(label, verts) for label, verts in exponent_regions(d, cfg.p0_list)]
        if d == 2:
            regions.append(format_region("necessary_d2_boundary", necessary_boundary_d2()))
    echo = {"d_list": ",".join(map(str, cfg.d_list)), "p0_list": ",".join(fmt(p) for p in cfg.p0_list)}
    return Report("exponents", echo, EXPONENT_COLUMNS, rows,
                  {k: CHECKS[k] for k in ("bootstrap", "restricted_exponents")}, "\n".join(regions) + "\n")


COMMANDS = {
    "sums": cmd_sums,
    "surface-ft": cmd_surface_ft,
    "extension": cmd_extension,
    "incidence": cmd_incidence,
    "exponents": cmd_exponents,
}


def cmd_suite(cfg: SweepConfig) -> list[Report]:
    return [fn(cfg) for fn in COMMANDS.values()]


# --- output ---------------------------------------------------------------------

def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return str(v)


def _header(report: Report) -> list[str]:
    lines = [f"schema={SCHEMA}", f"# tool: qextend {__version__}", f"# command: {report.command}"]
    lines += [f"# config: {k} = {v}" for k, v in sorted(report.config.items())]
    lines += [f"# check: {k}: {v}" for k, v in report.checks.items()]
    return lines


def to_csv(report: Report) -> str:
    import csv
    import io

    buf = io.StringIO()
    for line in _header(report):
        buf.write(line + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(report.columns)
    for row in report.rows:
        writer.writerow([_cell(row.get(c)) for c in report.columns])
    for s in report.summary():
        buf.write(f"# summary: {s['check']} rows={s['rows']} failed={s['failed']} "
                  f"max_ratio={_cell(s['max_ratio'])}\n")
    return buf.getvalue()


def _json_value(v):
    if isinstance(v, (np.bool_,)):
        return bool(v)
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else _cell(v)
    return v


def to_json(report: Report) -> str:
    import json

    doc = {
        "schema": SCHEMA,
        "tool": f"qextend {__version__}",
        "command": report.command,
        "config": report.config,
        "checks": report.checks,
        "columns": list(report.columns),
        "rows": [{c: _json_value(row.get(c)) for c in report.columns} for row in report.rows],
        "summary": report.summary(),
    }
    if report.extra_text:
        doc["regions"] = report.extra_text.splitlines()
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def render(report: Report, fmt_: str = "csv") -> str:
    return to_json(report) if fmt_ == "json" else to_csv(report)


__all__ = [
    "SweepConfig", "Report", "load_config", "apply_settings", "env_threads",
    "cmd_sums", "cmd_surface_ft", "cmd_extension", "cmd_incidence", "cmd_exponents", "cmd_suite",
    "render", "to_csv", "to_json", "incidence_reports", "COMMANDS",
]

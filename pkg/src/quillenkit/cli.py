"""Command-line entry point.

Exit status: 0 when every requested check reports ``equal`` and every
computation succeeds, 1 on a failed verification, 2 on a parse or schema
error, 3 when the entry cap is exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from . import __version__, builtins as bi, comparison as cmp
from .abelian import FGAbelianGroup
from .algebras import (central_quotient, hochschild_homology, mult_kernel_bimodule,
                       regular_bimodule)
from .config import override_entry_cap
from .errors import QuillenKitError, SizeCapError
from .groups import (abelianize_group, augmentation_ideal, group_cohomology,
                     group_homology, regular_rep, trivial_rep)
from .io import resolve_algebra, resolve_group
from .rings import hypersurface_cotangent, kaehler_differentials

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3

COMPUTE = ("group-homology", "group-cohomology", "abelianize", "hochschild",
           "kaehler", "hypersurface")
VERIFY = ("coinvariants-shift", "hochschild-shift", "comparison-map",
          "commutativization", "quillen-pair", "nonexact", "torsionfree-beck",
          "module-adjunction", "factorization", "central-quotient")

BATTERY_DEGREE = 2


@dataclass
class RunConfig:
    command: str
    target: str | None = None
    group: str | None = None
    algebra: str | None = None
    coeffs: str | None = None
    max_degree: int | None = None
    entry_cap: int | None = None
    output: str | None = None
    format: str = "json"
    banner: bool = True
    normalized: bool = False
    jobs: int = 1
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.max_degree is not None and self.max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        if self.entry_cap is not None and self.entry_cap < 1:
            raise ValueError("entry_cap must be >= 1")


# --------------------------------------------------------------------------
# single items (module-level so worker processes can run them)


def _error_line(name: str, inputs: dict, exc: Exception) -> dict:
    if isinstance(exc, SizeCapError):
        kind = "size-cap"
    elif isinstance(exc, QuillenKitError):
        kind = "validation"
    else:
        kind = "internal"
    out = {"name": name, "inputs": inputs, "error": kind, "message": str(exc)}
    if getattr(exc, "field", None):
        out["field"] = exc.field
    if getattr(exc, "triple", None):
        out["witness"] = list(exc.triple)
    return out


def _report_line(rep: cmp.ComparisonReport) -> dict:
    return rep.to_json()


def _factor_report(label, f, m, n) -> cmp.ComparisonReport:
    fz = cmp.factor_epi_mono(f, m, n)
    names = sorted(fz.checks)
    return cmp.make_report("factor-epi-mono", {"fixture": label},
                           [fz.checks[k] for k in names], [True] * len(names),
                           {"checks": fz.checks, "cokernel": fz.cokernel})


def run_item(item: tuple, cap: int | None = None) -> dict:
    """Run one battery/verify item and return its JSON line."""
    kind, key = item[0], item[1]
    inputs = {"item": key if isinstance(key, str) else str(key)}
    try:
        if cap is not None:
            with override_entry_cap(cap):
                return _run(kind, key, item[2:])
        return _run(kind, key, item[2:])
    except Exception as exc:  # reported, not raised: the battery keeps going
        return _error_line(kind, inputs, exc)


def _run(kind: str, key, extra: tuple) -> dict:
    deg = extra[0] if extra else BATTERY_DEGREE
    if kind == "coinvariants-shift":
        g = resolve_group(key)
        return _report_line(cmp.verify_coinvariants_shift(g, deg))
    if kind == "commutativization":
        return _report_line(cmp.verify_commutativization(bi.SPLIT_EXTENSIONS[key](), key))
    if kind == "hochschild-shift":
        a, _ = resolve_algebra(key)
        return _report_line(cmp.verify_hochschild_shift(a, deg, label=key))
    if kind == "comparison-map":
        _, r = resolve_algebra(key)
        if r is None:
            raise _NoPresentation(key)
        return _report_line(cmp.comparison_map_degree0(r, label=key))
    if kind == "quillen-pair":
        return _report_line(cmp.verify_quillen_pair_criterion(key, bi.quillen_samples(key)))
    if kind == "nonexact":
        label, r, m = bi.nonexact_fixtures()[key]
        return _report_line(cmp.verify_nonexact(r, m, label))
    if kind == "torsionfree-beck":
        r, m = key if isinstance(key, tuple) else bi.torsionfree_fixtures()[key]
        return _report_line(cmp.verify_torsionfree_beck(r, m))
    if kind == "module-adjunction":
        label, inst, m, n, samples = bi.adjunction_fixtures()[key]
        rep = cmp.verify_module_adjunction(inst, m, n, samples)
        out = _report_line(rep)
        out["inputs"]["fixture"] = label
        return out
    if kind == "factorization":
        return _report_line(_factor_report(*bi.factorization_fixtures()[key]))
    if kind == "central-quotient":
        a, _ = resolve_algebra(key)
        out = _report_line(cmp.verify_central_quotient_hh0(regular_bimodule(a)))
        out["inputs"]["algebra"] = key
        return out
    raise ValueError(f"unknown item kind {kind!r}")


class _NoPresentation(QuillenKitError):
    def __init__(self, key):
        super().__init__(f"{key} has no commutative presentation; pass a "
                         "commutative-ring JSON or a commutative builtin")
        self.field = "algebra"


def battery_items(extra_groups: Iterable[str] = ()) -> list[tuple]:
    items: list[tuple] = [("coinvariants-shift", f"builtin:{g}") for g in bi.SHIFT_BATTERY]
    items += [("coinvariants-shift", path) for path in extra_groups]
    items += [("commutativization", k) for k in bi.SPLIT_EXTENSIONS]
    items += [("hochschild-shift", f"builtin:{a}") for a in bi.ALGEBRA_BATTERY]
    items += [("comparison-map", f"builtin:{a}") for a in bi.COMMUTATIVE_BATTERY]
    items += [("quillen-pair", "gp-ab"), ("quillen-pair", "alg-com")]
    items += [("nonexact", i) for i in range(len(bi.nonexact_fixtures()))]
    items += [("torsionfree-beck", i) for i in range(len(bi.TORSIONFREE_FIXTURES))]
    items += [("module-adjunction", i) for i in range(len(bi.adjunction_fixtures()))]
    items += [("factorization", i) for i in range(len(bi.factorization_fixtures()))]
    items += [("central-quotient", f"builtin:{a}") for a in bi.ALGEBRA_BATTERY]
    return items


def _status(line: dict) -> int:
    if "error" in line:
        return {"size-cap": EXIT_CAP, "validation": EXIT_PARSE}.get(line["error"], EXIT_FAIL)
    if "verdict" in line and line["verdict"] != "equal":
        return EXIT_FAIL
    return EXIT_OK


def _combine(codes: Iterable[int]) -> int:
    codes = set(codes)
    for c in (EXIT_PARSE, EXIT_CAP, EXIT_FAIL):
        if c in codes:
            return c
    return EXIT_OK


def _run_items(items: list[tuple], cap: int | None, jobs: int) -> list[dict]:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map keeps declaration order regardless of completion order
            return list(pool.map(run_item, items, [cap] * len(items)))
    return [run_item(it, cap) for it in items]


# --------------------------------------------------------------------------
# compute verbs


def _rep_for(g, coeffs: str):
    if coeffs == "trivial":
        return trivial_rep(g)
    if coeffs == "regular":
        return regular_rep(g)
    if coeffs == "augmentation":
        return augmentation_ideal(g)
    raise QuillenKitError(f"unknown coefficients {coeffs!r}")


def _compute(cfg: RunConfig) -> dict:
    deg = 3 if cfg.max_degree is None else cfg.max_degree
    t = cfg.target
    if t in ("group-homology", "group-cohomology", "abelianize"):
        g = resolve_group(cfg.group or "builtin:trivial")
        inputs = {"group": cfg.group, "order": g.order}
        if t == "abelianize":
            return {"name": t, "inputs": inputs, "result": [str(abelianize_group(g))]}
        coeffs = cfg.coeffs or "trivial"
        inputs.update(coeffs=coeffs, max_degree=deg)
        m = _rep_for(g, coeffs)
        if t == "group-homology":
            hs = group_homology(g, m, deg, normalized=cfg.normalized)
        else:
            hs = group_cohomology(g, m, deg)
        return {"name": t, "inputs": inputs, "result": [str(h) for h in hs]}
    a, r = resolve_algebra(cfg.algebra or "builtin:Q")
    inputs = {"algebra": cfg.algebra, "dim": a.dim, "field": a.field.name}
    if t == "hochschild":
        coeffs = cfg.coeffs or "regular"
        if coeffs == "regular":
            m = regular_bimodule(a)
        elif coeffs == "kernel":
            m = mult_kernel_bimodule(a)
        else:
            raise QuillenKitError(f"unknown bimodule {coeffs!r}; use regular or kernel")
        inputs.update(coeffs=coeffs, max_degree=deg)
        dims = hochschild_homology(a, m, deg, normalized=cfg.normalized)
        return {"name": t, "inputs": inputs, "result": dims,
                "central_quotient": central_quotient(m).dim}
    if r is None:
        raise _NoPresentation(cfg.algebra)
    if t == "kaehler":
        om = kaehler_differentials(r)
        return {"name": t, "inputs": inputs,
                "result": {"generators": list(om.generators),
                           "k_dimension": om.k_dimension(),
                           "relation_span_rank": om.relation_span().shape[0]}}
    if t == "hypersurface":
        h = hypersurface_cotangent(r)
        return {"name": t, "inputs": inputs,
                "result": {"D_0": h.d0_dim, "D_1": h.d1_dim}}
    raise QuillenKitError(f"unknown computation {t!r}")


def _verify_items(cfg: RunConfig) -> list[tuple]:
    t = cfg.target
    deg = 3 if cfg.max_degree is None else cfg.max_degree
    if t == "coinvariants-shift":
        return [("coinvariants-shift", cfg.group or "builtin:trivial", deg)]
    if t == "hochschild-shift":
        return [("hochschild-shift", cfg.algebra or "builtin:Q", deg)]
    if t == "comparison-map":
        return [("comparison-map", cfg.algebra or "builtin:Q")]
    if t == "commutativization":
        keys = [cfg.extra["fixture"]] if cfg.extra.get("fixture") else list(bi.SPLIT_EXTENSIONS)
        for k in keys:
            if k not in bi.SPLIT_EXTENSIONS:
                raise QuillenKitError(f"unknown split-extension fixture {k!r}")
        return [("commutativization", k) for k in keys]
    if t == "quillen-pair":
        inst = cfg.extra.get("instance")
        return [("quillen-pair", i) for i in ([inst] if inst else ["gp-ab", "alg-com"])]
    if t == "nonexact":
        return [("nonexact", i) for i in range(len(bi.nonexact_fixtures()))]
    if t == "torsionfree-beck":
        if cfg.extra.get("module") is not None:
            m = FGAbelianGroup.parse(cfg.extra["module"])
            return [("torsionfree-beck", (cfg.extra.get("rank") or 0, m))]
        return [("torsionfree-beck", i) for i in range(len(bi.TORSIONFREE_FIXTURES))]
    if t == "module-adjunction":
        return [("module-adjunction", i) for i in range(len(bi.adjunction_fixtures()))]
    if t == "factorization":
        return [("factorization", i) for i in range(len(bi.factorization_fixtures()))]
    if t == "central-quotient":
        return [("central-quotient", cfg.algebra or "builtin:Q")]
    raise QuillenKitError(f"unknown verification {t!r}")


# --------------------------------------------------------------------------
# output


class _Writer:
    COLUMNS = ("name", "verdict", "left", "right", "witness", "error", "message")

    def __init__(self, stream, fmt: str):
        self.stream = stream
        self.fmt = fmt
        self.csv = csv.writer(stream, lineterminator="\n") if fmt == "csv" else None
        self._header = False

    def banner(self):
        if self.fmt == "csv":
            self.stream.write(f"# quillenkit {__version__}\n")
        else:
            self.emit({"tool": "quillenkit", "version": __version__})

    def emit(self, line: dict):
        if self.fmt == "json":
            self.stream.write(json.dumps(line, ensure_ascii=False) + "\n")
            return
        if not self._header:
            self.csv.writerow(self.COLUMNS)
            self._header = True
        row = []
        for col in self.COLUMNS:
            v = line.get(col, line.get("result") if col == "left" else None)
            if col == "message" and line.get("name") == "battery-summary":
                v = " ".join(f"{k}={line[k]}" for k in
                             ("total", "passed", "failed", "size_cap", "invalid"))
            row.append("" if v is None else v if isinstance(v, str)
                       else json.dumps(v, ensure_ascii=False))
        self.csv.writerow(row)
        self.stream.flush()


def run(cfg: RunConfig, stream=None, err=None) -> int:
    stream = stream or sys.stdout
    err = err or sys.stderr
    out = _Writer(stream, cfg.format)
    if cfg.banner:
        out.banner()
    try:
        if cfg.command == "compute":
            try:
                if cfg.entry_cap is not None:
                    with override_entry_cap(cfg.entry_cap):
                        line = _compute(cfg)
                else:
                    line = _compute(cfg)
            except Exception as exc:
                line = _error_line(cfg.target, {"group": cfg.group,
                                                "algebra": cfg.algebra}, exc)
            out.emit(line)
            code = _status(line)
            if code:
                err.write(f"error: {line.get('message')}\n")
            return code
        if cfg.command == "verify":
            items = _verify_items(cfg)
        else:
            # validate extra fixtures up front so a malformed file fails fast
            for path in cfg.extra.get("groups", []):
                resolve_group(path)
            items = battery_items(cfg.extra.get("groups", []))
            if cfg.max_degree is not None:
                items = [it + (cfg.max_degree,) if it[0] in ("coinvariants-shift",
                                                             "hochschild-shift") else it
                         for it in items]
    except QuillenKitError as exc:
        line = _error_line(cfg.command, {"target": cfg.target}, exc)
        out.emit(line)
        err.write(f"error: {exc}\n")
        return EXIT_CAP if isinstance(exc, SizeCapError) else EXIT_PARSE
    lines = _run_items(items, cfg.entry_cap, cfg.jobs)
    codes = []
    for line in lines:
        out.emit(line)
        code = _status(line)
        codes.append(code)
        if code == EXIT_FAIL and "witness" in line:
            err.write(f"FAIL {line['name']} {json.dumps(line.get('inputs'))}: "
                      f"witness {json.dumps(line['witness'])}\n")
    if cfg.command == "battery":
        summary = {"name": "battery-summary", "total": len(lines),
                   "passed": codes.count(EXIT_OK),
                   "failed": codes.count(EXIT_FAIL),
                   "size_cap": codes.count(EXIT_CAP),
                   "invalid": codes.count(EXIT_PARSE)}
        out.emit(summary)
    return _combine(codes)


# --------------------------------------------------------------------------
# argument parsing


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _common(p: argparse.ArgumentParser):
    p.add_argument("--max-degree", type=_nonneg, default=None,
                   help="top degree (default 3; the battery uses 2)")
    p.add_argument("--entry-cap", type=_positive, default=None,
                   help="dense matrix entry cap (default 4000000 or $QK_ENTRY_CAP)")
    p.add_argument("--output", help="write the report stream here instead of stdout")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--no-banner", action="store_true", help="omit the version line")
    p.add_argument("--jobs", type=_positive, default=1,
                   help="worker processes for independent items")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quillenkit",
        description="Exact homology computations and verification reports.")
    parser.add_argument("--version", action="version", version=f"quillenkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="run a single computation")
    pc.add_argument("target", choices=COMPUTE)
    pc.add_argument("--group", help="builtin:NAME or path to a group JSON file")
    pc.add_argument("--algebra", help="builtin:NAME or path to an algebra/ring JSON file")
    pc.add_argument("--coeffs", help="trivial|regular|augmentation (groups) or "
                                     "regular|kernel (algebras)")
    pc.add_argument("--normalized", action="store_true",
                    help="use the normalized bar/Hochschild complex")
    _common(pc)

    pv = sub.add_parser("verify", help="run one verification")
    pv.add_argument("target", choices=VERIFY)
    pv.add_argument("--group")
    pv.add_argument("--algebra")
    pv.add_argument("--fixture", help="split-extension fixture name (commutativization)")
    pv.add_argument("--instance", choices=("gp-ab", "alg-com"))
    pv.add_argument("--rank", type=_nonneg, help="free rank (torsionfree-beck)")
    pv.add_argument("--module", help='abelian group such as "Z + Z/3" (torsionfree-beck)')
    _common(pv)

    pb = sub.add_parser("battery", help="run the default verification battery")
    pb.add_argument("--group", action="append", default=[],
                    help="extra group JSON file for the shift checks (repeatable)")
    _common(pb)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    extra = {}
    for key in ("fixture", "instance", "rank", "module"):
        if getattr(ns, key, None) is not None:
            extra[key] = getattr(ns, key)
    group = ns.group
    if ns.command == "battery":
        extra["groups"] = list(ns.group)
        group = None
    return RunConfig(command=ns.command, target=getattr(ns, "target", None),
                     group=group, algebra=getattr(ns, "algebra", None),
                     coeffs=getattr(ns, "coeffs", None), max_degree=ns.max_degree,
                     entry_cap=ns.entry_cap, output=ns.output, format=ns.format,
                     banner=not ns.no_banner,
                     normalized=getattr(ns, "normalized", False), jobs=ns.jobs,
                     extra=extra)


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = config_from_args(ns)
    if cfg.output:
        buf = io.StringIO()
        code = run(cfg, buf)
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
        return code
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line driver: verification suites, criterion sweeps, single instances, module dumps.

Exit codes: 0 all checks pass, 1 mathematical disagreement, 2 usage error,
3 desk-scale refusal.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass, field as dc_field
from math import factorial

from .cyclo import CycloNum
from .refl_group import TChar

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_REFUSED = 0, 1, 2, 3
OUT_DIR_ENV = "GGHECKE_OUT_DIR"

# options whose values may start with '-' (negative literals, grids)
_VALUE_OPTS = {"--nu-grid", "--nu", "--kbar0", "--k", "--lambda", "--c"}


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    r: int = 2
    n: int = 2
    k: str = ""
    kbar0: str = "1"
    nu: str = ""
    nu_grid: str = "-2..2"
    varpi: str = "all-orbits"
    fmt: str = "json"
    out: str | None = None
    seed: int = 0
    fuzz: int = 50
    count: int = 10
    jobs: int = 1
    bound: int = 24
    lengths: bool = False
    suite: str = ""
    extra: dict = dc_field(default_factory=dict)

    def header(self) -> dict:
        d = asdict(self)
        d.pop("out")
        d.pop("jobs")  # parallelism does not change the output
        return d


def _merge_negative_values(argv: list[str]) -> list[str]:
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _cyclo(r: int, text: str, what: str) -> CycloNum:
    try:
        return CycloNum.parse(r, text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse {what} {text!r}: {exc}") from None


def _cyclo_list(r: int, text: str, what: str) -> list[CycloNum]:
    if not text.strip():
        return []
    return [_cyclo(r, x, what) for x in text.split(",")]


def _tchar(r: int, n: int, text: str) -> TChar:
    try:
        idx = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse T-character {text!r}") from None
    if len(idx) != n:
        raise UsageError(f"T-character {text!r} needs {n} entries")
    return TChar(r, idx)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gghecke", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--r", type=int, default=2)
        sp.add_argument("--n", type=int, default=2)
        sp.add_argument("--kbar0", default="1", help="exact literal, e.g. 1/2 or z+1")
        sp.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="json")
        sp.add_argument("--out", default=None)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--bound", type=int, default=24, help="largest module dimension attempted")

    v = sub.add_parser("verify", help="run an exact verification suite")
    v.add_argument("suite", choices=("relations", "pbw", "realization", "center", "duality"))
    common(v)
    v.add_argument("--k", default="", help="k_1..k_{r-1}, comma separated (random if omitted)")
    v.add_argument("--fuzz", type=int, default=50)
    v.add_argument("--count", type=int, default=10)

    s = sub.add_parser("sweep", help="criterion versus simplicity oracle over a grid")
    common(s)
    s.add_argument("--nu-grid", default="-2..2", help="lo..hi[:step] or comma list")
    s.add_argument("--varpi", default="all-orbits", help="all-orbits, all, or '0,0,1;1,0,0'")
    s.add_argument("--lengths", action="store_true", help="also compare composition lengths")
    s.add_argument("--jobs", type=int, default=1)

    c = sub.add_parser("criterion", help="criterion report for one instance")
    common(c)
    c.add_argument("--nu", required=True)
    c.add_argument("--varpi", required=True)
    c.add_argument("--oracle", action="store_true", help="also run the simplicity oracle")

    m = sub.add_parser("module", help="dump a principal series module")
    common(m)
    m.add_argument("--nu", required=True)
    m.add_argument("--varpi", required=True)
    m.add_argument("--e1", action="store_true", help="dump the type-A module on E_1 instead")
    return p


def _config(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command)
    for key in ("r", "n", "kbar0", "fmt", "out", "seed", "bound", "k", "fuzz", "count",
                "nu_grid", "varpi", "lengths", "jobs", "nu", "suite"):
        if hasattr(ns, key):
            setattr(cfg, key, getattr(ns, key))
    for key in ("oracle", "e1"):
        if hasattr(ns, key):
            cfg.extra[key] = getattr(ns, key)
    if cfg.r < 1 or cfg.n < 1:
        raise UsageError("r and n must be positive")
    return cfg


def _emit(cfg: RunConfig, text: str) -> None:
    path = cfg.out
    if path is None and os.environ.get(OUT_DIR_ENV):
        ext = {"json": "json", "csv": "csv", "text": "txt"}[cfg.fmt]
        path = os.path.join(os.environ[OUT_DIR_ENV], f"{cfg.command}.{ext}")
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text if text.endswith("\n") else text + "\n")


def _dump(cfg: RunConfig, payload: dict) -> str:
    return json.dumps({"config": cfg.header(), **payload}, indent=2, sort_keys=True)


def cmd_verify(cfg: RunConfig) -> int:
    from random import Random

    from . import suites
    from .cherednik import Params

    r, n = cfg.r, cfg.n
    kbar0 = _cyclo(r, cfg.kbar0, "kbar0")
    ks = _cyclo_list(r, cfg.k, "k")
    if ks and len(ks) != r - 1:
        raise UsageError(f"--k needs {r - 1} values")
    if cfg.suite in ("relations", "realization"):
        if not ks:
            ks = list(suites.random_params(r, n, Random(cfg.seed)).k)
        params = Params(r, n, tuple(ks), kbar0)
        checks = (suites.relations_suite if cfg.suite == "relations" else suites.realization_suite)(params)
    elif cfg.suite == "pbw":
        checks = suites.pbw_suite(r, n, kbar0, cfg.fuzz, cfg.seed)
    elif cfg.suite == "center":
        checks = suites.center_suite(r, n, kbar0)
    else:
        if factorial(n) > cfg.bound:
            return _refuse(cfg, f"modules of dimension {factorial(n)} exceed --bound {cfg.bound}")
        checks = suites.duality_suite(r, n, kbar0, cfg.count, cfg.seed)
    ok = all(c.passed for c in checks)
    if cfg.fmt == "json":
        text = _dump(cfg, {"passed": ok, "checks": [c.to_json() for c in checks]})
    else:
        text = "\n".join(f"{'PASS' if c.passed else 'FAIL'}  {c.label}" + (f"  ({c.detail})" if c.detail else "")
                         for c in checks)
    _emit(cfg, text)
    return EXIT_OK if ok else EXIT_DISAGREE


def _refuse(cfg: RunConfig, msg: str) -> int:
    sys.stderr.write(f"refused: {msg}; reduce n or raise --bound\n")
    return EXIT_REFUSED


def cmd_sweep(cfg: RunConfig) -> int:
    from .criterion import SweepConfig, parse_grid, criterion_sweep

    if factorial(cfg.n) > cfg.bound or cfg.n > 4:
        return _refuse(cfg, f"n = {cfg.n} gives modules of dimension {factorial(cfg.n)}")
    _cyclo(cfg.r, cfg.kbar0, "kbar0")
    try:
        parse_grid(cfg.nu_grid)
        sc = SweepConfig(cfg.r, cfg.n, cfg.kbar0, cfg.nu_grid, cfg.varpi, cfg.lengths, cfg.jobs, cfg.seed)
        sc.characters()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = criterion_sweep(sc)
    counts = res.counts()
    lengths_bad = 0
    if cfg.lengths:
        lengths_bad = sum(1 for x in res.rows if x.oracle == "reducible"
                          and not len(x.factors) == len(x.e1_factors) == len(x.type_a_factors))
        counts["length_mismatch"] = lengths_bad
    if cfg.fmt == "csv":
        head = "".join(f"# {k}={v}\n" for k, v in cfg.header().items())
        text = head + res.to_csv()
    else:
        payload = res.to_json()
        payload.pop("config")
        text = _dump(cfg, payload)
    _emit(cfg, text)
    sys.stderr.write(f"{counts['points']} instances, {counts['agree']} agree, "
                     f"{counts['disagree']} disagree, {counts['refused']} refused\n")
    if counts["disagree"] or lengths_bad:
        return EXIT_DISAGREE
    return EXIT_REFUSED if counts["refused"] else EXIT_OK


def _instance(cfg: RunConfig):
    from .psmod import CChar

    nu = _cyclo_list(cfg.r, cfg.nu, "nu")
    if len(nu) != cfg.n:
        raise UsageError(f"--nu needs {cfg.n} values")
    return CChar(tuple(nu), _tchar(cfg.r, cfg.n, cfg.varpi)), _cyclo(cfg.r, cfg.kbar0, "kbar0")


def cmd_criterion(cfg: RunConfig) -> int:
    from .criterion import p_set
    from .psmod import principal_series
    from .simplicity import DeskScaleRefusal, is_simple

    chi, kbar0 = _instance(cfg)
    rep = p_set(chi.gamma, chi.mu, kbar0)
    payload = {"report": rep.to_json()}
    code = EXIT_OK
    if cfg.extra.get("oracle"):
        if factorial(cfg.n) > cfg.bound:
            return _refuse(cfg, f"dimension {factorial(cfg.n)} exceeds --bound")
        try:
            orc = is_simple(principal_series(chi, kbar0), factors=True)
        except DeskScaleRefusal as exc:
            return _refuse(cfg, str(exc))
        payload["oracle"] = orc.to_json()
        if orc.verdict != rep.verdict:
            code = EXIT_DISAGREE
    _emit(cfg, _dump(cfg, payload))
    return code


def cmd_module(cfg: RunConfig) -> int:
    from .psmod import e1_as_gha, principal_series

    if factorial(cfg.n) > cfg.bound:
        return _refuse(cfg, f"dimension {factorial(cfg.n)} exceeds --bound")
    chi, kbar0 = _instance(cfg)
    M = principal_series(chi, kbar0)
    if cfg.extra.get("e1"):
        try:
            M = e1_as_gha(M)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    _emit(cfg, _dump(cfg, {"module": M.to_json()}))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        ns = parser.parse_args(_merge_negative_values(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = _config(ns)
        handler = {"verify": cmd_verify, "sweep": cmd_sweep, "criterion": cmd_criterion,
                   "module": cmd_module}[cfg.command]
        return handler(cfg)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except Exception as exc:  # refusal raised deep inside the oracle
        from .simplicity import DeskScaleRefusal
        if isinstance(exc, DeskScaleRefusal):
            return _refuse(RunConfig(command="?"), str(exc))
        raise


if __name__ == "__main__":
    sys.exit(main())

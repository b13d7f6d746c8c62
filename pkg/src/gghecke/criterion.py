"""Irreducibility criterion for principal series M(nu (x) varpi), and sweeps against the oracle."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field
from fractions import Fraction

from .cyclo import CycloNum, field
from .refl_group import Perm, TChar, all_chars, all_perms, orbit_representatives, perm_to_str, sort_char, twist


def _cyc(r: int, x) -> CycloNum:
    return x if isinstance(x, CycloNum) else field(r).const(x)


@dataclass
class CriterionReport:
    sigma: Perm
    sorted_char: TChar
    p_set: list[tuple[int, int]]
    verdict: str
    witnesses: list[dict] = dc_field(default_factory=list)

    @property
    def simple(self) -> bool:
        return self.verdict == "simple"

    def to_json(self) -> dict:
        return {
            "sigma": perm_to_str(self.sigma),
            "sorted_char": list(self.sorted_char.index),
            "p_set": [[i + 1, j + 1] for i, j in self.p_set],
            "verdict": self.verdict,
            "witnesses": self.witnesses,
        }


def p_set(nu, varpi: TChar, kbar0) -> CriterionReport:
    """Pairs i < j in one block of mu_varpi with (^sigma nu)_i - (^sigma nu)_j = +-r kbar0."""
    r = varpi.r
    nu = tuple(_cyc(r, x) for x in nu)
    bound = _cyc(r, kbar0) * r
    sc = sort_char(varpi)
    snu = twist(sc.sigma, nu)
    pairs, wit = [], []
    for block in sc.blocks:
        for p, i in enumerate(block):
            for j in block[p + 1:]:
                diff = snu[i] - snu[j]
                if diff == bound or diff == -bound:
                    pairs.append((i, j))
                    wit.append({"pair": [i + 1, j + 1], "difference": str(diff),
                                "sign": "+" if diff == bound else "-"})
    return CriterionReport(sc.sigma, sc.mu, pairs, "reducible" if pairs else "simple", wit)


def unsorted_verdict(nu, varpi: TChar, kbar0) -> str:
    """Same criterion without sorting: some u < v with varpi_u = varpi_v and nu_u - nu_v = +-r kbar0."""
    r = varpi.r
    nu = [_cyc(r, x) for x in nu]
    bound = _cyc(r, kbar0) * r
    n = len(nu)
    for u in range(n):
        for v in range(u + 1, n):
            if varpi.index[u] == varpi.index[v] and (nu[u] - nu[v] == bound or nu[u] - nu[v] == -bound):
                return "reducible"
    return "simple"


def sigma_independence(nu, varpi: TChar, kbar0) -> bool:
    verdicts = {p_set(twist(w, tuple(nu)), varpi.twist(w), kbar0).verdict for w in all_perms(varpi.n)}
    return len(verdicts) == 1 and verdicts == {unsorted_verdict(nu, varpi, kbar0)}


# -- sweeps ---------------------------------------------------------------------


def parse_grid(text: str) -> list[Fraction]:
    """'lo..hi' or 'lo..hi:step' (exact rationals), or a comma list."""
    text = text.strip()
    if ".." in text:
        rng, _, step = text.partition(":")
        lo, hi = (Fraction(x) for x in rng.split(".."))
        st = Fraction(step) if step else Fraction(1)
        if st <= 0 or hi < lo:
            raise ValueError(f"bad grid {text!r}")
        out, x = [], lo
        while x <= hi:
            out.append(x)
            x += st
        return out
    return [Fraction(x) for x in text.split(",") if x.strip()]


@dataclass
class SweepConfig:
    r: int
    n: int
    kbar0: str = "1"
    nu_grid: str = "-2..2"
    varpi: str = "all-orbits"  # or "all", or explicit "0,0,1;1,1,0"
    lengths: bool = False
    jobs: int = 1
    seed: int = 0

    def characters(self) -> list[TChar]:
        if self.varpi == "all-orbits":
            return orbit_representatives(self.r, self.n)
        if self.varpi == "all":
            return all_chars(self.r, self.n)
        out = []
        for chunk in self.varpi.split(";"):
            idx = tuple(int(x) for x in chunk.split(","))
            if len(idx) != self.n:
                raise ValueError(f"character {chunk!r} has the wrong length")
            out.append(TChar(self.r, idx))
        return out

    def points(self) -> list[tuple[tuple[Fraction, ...], TChar]]:
        import itertools
        grid = parse_grid(self.nu_grid)
        return [(nu, ch) for ch in self.characters() for nu in itertools.product(grid, repeat=self.n)]


@dataclass
class SweepRow:
    nu: tuple[str, ...]
    varpi: tuple[int, ...]
    kbar0: str
    criterion: str
    oracle: str
    factors: tuple[int, ...] = ()
    e1_factors: tuple[int, ...] = ()
    type_a_factors: tuple[int, ...] = ()
    agree: bool = True


def evaluate_point(nu, varpi: TChar, kbar0: str, lengths: bool) -> SweepRow:
    from .gha_a import principal_series_A
    from .psmod import CChar, e1_module, principal_series
    from .simplicity import DeskScaleRefusal, composition_length, is_simple

    r = varpi.r
    k0 = CycloNum.parse(r, kbar0)
    rep = p_set(nu, varpi, k0)
    M = principal_series(CChar(tuple(nu), varpi), k0)
    try:
        orc = is_simple(M)
        oracle = orc.verdict
    except DeskScaleRefusal:
        oracle = "refused"
    row = SweepRow(tuple(str(x) for x in nu), varpi.index, kbar0, rep.verdict, oracle,
                   agree=(oracle == rep.verdict))
    if lengths and oracle == "reducible":
        sc = sort_char(varpi)
        row.factors = tuple(composition_length(M))
        row.e1_factors = tuple(composition_length(e1_module(M)))
        snu = twist(sc.sigma, tuple(nu))
        row.type_a_factors = tuple(composition_length(principal_series_A(snu, sc.blocks, k0 * r, r)))
    elif oracle == "simple":
        row.factors = (M.dim,)
    return row


def _eval_star(args):
    return evaluate_point(*args)


@dataclass
class SweepResult:
    config: SweepConfig
    rows: list[SweepRow]

    @property
    def disagreements(self) -> list[SweepRow]:
        return [x for x in self.rows if not x.agree and x.oracle != "refused"]

    @property
    def refusals(self) -> list[SweepRow]:
        return [x for x in self.rows if x.oracle == "refused"]

    def counts(self) -> dict:
        return {
            "points": len(self.rows),
            "agree": sum(x.agree for x in self.rows),
            "disagree": len(self.disagreements),
            "refused": len(self.refusals),
            "reducible": sum(x.oracle == "reducible" for x in self.rows),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["nu", "varpi", "kbar0", "criterion", "oracle", "factors"])
        for x in self.rows:
            w.writerow([" ".join(x.nu), " ".join(map(str, x.varpi)), x.kbar0, x.criterion, x.oracle,
                        " ".join(map(str, x.factors))])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {"config": asdict(self.config), "counts": self.counts(),
                "rows": [asdict(x) for x in self.rows]}


def criterion_sweep(cfg: SweepConfig) -> SweepResult:
    if cfg.n > 4:
        raise ValueError("sweeps are limited to n <= 4")
    kb = str(CycloNum.parse(cfg.r, cfg.kbar0))
    tasks = [(nu, ch, kb, cfg.lengths) for nu, ch in cfg.points()]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            rows = list(ex.map(_eval_star, tasks, chunksize=8))
    else:
        rows = [_eval_star(t) for t in tasks]
    return SweepResult(cfg, rows)

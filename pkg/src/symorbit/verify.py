"""Normality decisions and exhaustive desk-scale checks of the proof chain.

is_normal applies the 1-step test to a partition; everything else here
certifies, by exhaustive enumeration up to a size bound, the exact
identities and inequalities that make that test correct.  Each suite
iterates its full instance space in a fixed order and reports the first
few counterexamples, so two runs of the same suite agree byte for byte
(apart from timing).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import abdiagrams as ab
from .partitions import (
    Partition,
    _partitions,
    degeneration_chain,
    diff_stats,
    dominates,
    dual,
    enumerate_below,
    s_step,
)
from .strata import (
    TauString,
    d_lists,
    dim_M,
    dim_N,
    dim_stratum,
    lambda_bound,
    orbit_extremes,
    orbit_partition,
    sigma_zero,
    strata_spec,
    tau_zero,
)

COUNTEREXAMPLE_CAP = 10


@dataclass(frozen=True)
class NormalityVerdict:
    lam: Partition
    normal: bool
    witness: int | None  # 1-indexed first row whose drop exceeds 1
    gap_certificate: Fraction | None


@dataclass
class LemmaReport:
    lemma_id: str
    n_range: tuple[int, int]
    instances_checked: int
    counterexamples: list[dict]
    elapsed_s: float
    extras: dict | None = None

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        out = {
            "lemma_id": self.lemma_id,
            "ok": self.ok,
            "n_range": list(self.n_range),
            "instances_checked": self.instances_checked,
            "counterexamples": self.counterexamples,
            "elapsed_s": self.elapsed_s,
        }
        if self.extras is not None:
            out["extras"] = self.extras
        return out


@dataclass
class StrataCheck:
    """Outcome of a per-partition stratum comparison."""

    lam: Partition
    status: str  # "ok" | "failed" | "skipped"
    reason: str | None
    instances: int
    min_gap: Fraction | None
    counterexamples: list[dict] = field(default_factory=list)
    cases: dict[str, int] | None = None
    flagged: list[dict] | None = None

    @property
    def ok(self) -> bool:
        return self.status != "failed"


def normality_witness(lam: Partition) -> int | None:
    padded = lam + (0,)
    for i, (a, b) in enumerate(zip(padded, padded[1:]), start=1):
        if a - b >= 2:
            return i
    return None


def minimum_stratum_gap(lam: Partition, bound: int | None = None) -> Fraction | None:
    """Smallest dimension drop from the maximal-rank stratum to any other."""
    top_dim = dim_stratum(tau_zero(lam), strata_spec(lam))
    gaps = [
        top_dim - summary.max_dim
        for mu, summary in orbit_extremes(lam, bound).items()
        if mu != lam
    ]
    return min(gaps) if gaps else None


def is_normal(lam: Partition, certify: bool = False, bound: int | None = None) -> NormalityVerdict:
    """Decide normality of the orbit closure by the 1-step test.

    With certify=True (and the partition small enough to enumerate), the
    verdict also carries the minimum stratum gap as a certificate.
    """
    witness = normality_witness(lam)
    gap = None
    if certify and lam and sum(lam) <= lambda_bound(bound):
        gap = minimum_stratum_gap(lam, bound)
    return NormalityVerdict(lam, witness is None, witness, gap)


def _orbit_gaps(lam: Partition, bound: int | None = None):
    """Per orbit below lam: (mu, worst gap, label count, worst label)."""
    top_dim = dim_stratum(tau_zero(lam), strata_spec(lam))
    for mu, summary in orbit_extremes(lam, bound).items():
        if mu == lam:
            continue
        yield mu, top_dim - summary.max_dim, summary.count, summary.witness


def check_ci_condition(lam: Partition, bound: int | None = None) -> StrataCheck:
    """For a 2-step partition, certify the maximal-rank stratum is strictly top.

    The comparison runs over the worst (highest-dimensional) label of each
    orbit, which bounds every other label of that orbit at once.
    """
    if not lam:
        return StrataCheck(lam, "skipped", "empty partition", 0, None)
    if not s_step(lam, 2):
        return StrataCheck(lam, "skipped", "precondition unmet: not 2-step", 0, None)
    instances = 0
    min_gap: Fraction | None = None
    ces: list[dict] = []
    for _mu, gap, count, witness in _orbit_gaps(lam, bound):
        instances += count
        if min_gap is None or gap < min_gap:
            min_gap = gap
        if gap <= 0:
            ces.append(_label_record(lam, witness, gap))
    status = "failed" if ces else "ok"
    return StrataCheck(lam, status, None, instances, min_gap, ces)


def check_normality_gap(lam: Partition, bound: int | None = None) -> StrataCheck:
    """For a 1-step partition, certify every other stratum sits >= 2 below.

    Each orbit is also classified by its (q, c): the tight cases q=c=2 and
    q=1, c in {1,2,3}, or the general route c+q >= 5 where the quarter
    bound already exceeds 1.  General-route orbits are flagged rather than
    failed; an orbit fitting no route would be a counterexample, but
    c >= q >= 1 makes the three routes exhaustive.
    """
    if not lam:
        return StrataCheck(lam, "skipped", "empty partition", 0, None)
    if not s_step(lam, 1):
        return StrataCheck(lam, "skipped", "precondition unmet: not 1-step", 0, None)
    instances = 0
    min_gap: Fraction | None = None
    ces: list[dict] = []
    cases: dict[str, int] = {}
    flagged: list[dict] = []
    for mu, gap, count, witness in _orbit_gaps(lam, bound):
        instances += count
        if min_gap is None or gap < min_gap:
            min_gap = gap
        if gap < 2:
            record = _label_record(lam, witness, gap)
            record["problem"] = "gap below 2"
            ces.append(record)
        stats = diff_stats(lam, mu)
        if stats.q == 2 and stats.c == 2:
            bucket = "q2c2"
        elif stats.q == 1 and stats.c in (1, 2, 3):
            bucket = f"q1c{stats.c}"
        elif stats.c + stats.q >= 5:
            bucket = "general_bound"
            flagged.append(
                {
                    "lambda": list(lam),
                    "mu": list(mu),
                    "labels": count,
                    "bound_num4": 2 * stats.r - stats.c - stats.q,
                    "min_gap_num4": int(gap * 4),
                }
            )
        else:
            bucket = "uncovered"
            record = _label_record(lam, witness, gap)
            record["problem"] = "case coverage"
            record.update({"q": stats.q, "c": stats.c, "r": stats.r})
            ces.append(record)
        cases[bucket] = cases.get(bucket, 0) + count
    status = "failed" if ces else "ok"
    return StrataCheck(lam, status, None, instances, min_gap, ces,
                       cases=dict(sorted(cases.items())), flagged=flagged)


def _label_record(lam: Partition, tau: TauString, gap: Fraction) -> dict:
    return {
        "lambda": list(lam),
        "tau": [ab.format_diagram(d) for d in tau],
        "mu": list(orbit_partition(tau)),
        "gap_num4": int(gap * 4),
    }


# ---------------------------------------------------------------------------
# Exhaustive lemma suites.  Each runner takes the size limit and returns
# (instances_checked, counterexamples, extras).

Runner = Callable[[int], tuple[int, list[dict], dict | None]]


def _pairs(n_max: int):
    for n in range(1, n_max + 1):
        for lam in _partitions(n):
            for mu in enumerate_below(lam):
                yield lam, mu


def _monotone(values: list[int]) -> bool:
    return all(a <= b for a, b in zip(values, values[1:])) or all(
        a >= b for a, b in zip(values, values[1:])
    )


def _run_diff_ind(n_max: int):
    instances = 0
    ces: list[dict] = []
    for lam, mu in _pairs(n_max):
        if lam == mu:
            continue
        instances += 1
        chain = degeneration_chain(lam, mu)
        q = diff_stats(lam, mu).q
        problems = []
        if chain[0] != lam or chain[-1] != mu:
            problems.append("endpoints")
        if len(chain) != q + 1:
            problems.append("length")
        for a, b in zip(chain, chain[1:]):
            if not dominates(a, b) or a == b or diff_stats(a, b).q != 1:
                problems.append("step")
                break
        width = max(len(p) for p in chain)
        for r in range(width):
            if not _monotone([p[r] if r < len(p) else 0 for p in chain]):
                problems.append("row monotonicity")
                break
        height = max(p[0] for p in chain)
        duals = [dual(p) for p in chain]
        for cidx in range(height):
            if not _monotone([d[cidx] if cidx < len(d) else 0 for d in duals]):
                problems.append("column monotonicity")
                break
        if problems:
            ces.append({"lambda": list(lam), "mu": list(mu), "problems": problems})
    return instances, ces, None


def _strictness_hypothesis(lam: Partition, mu: Partition) -> bool:
    lhat, mhat = dual(lam), dual(mu)
    col_hit = any(
        (mhat[i] if i < len(mhat) else 0) > (lhat[i] if i < len(lhat) else 0) + 1
        for i in range(max(len(lhat), len(mhat)))
    )
    row_hit = any(
        (mu[i] if i < len(mu) else 0) > (lam[i] if i < len(lam) else 0) + 1
        for i in range(max(len(lam), len(mu)))
    )
    return col_hit or row_hit


def _run_diff_usef(n_max: int):
    instances = 0
    ces: list[dict] = []
    for n in range(1, n_max + 1):
        for s in (1, 2):
            for lam in _partitions(n):
                if not s_step(lam, s):
                    continue
                for mu in enumerate_below(lam):
                    if mu == lam:
                        continue
                    instances += 1
                    st = diff_stats(lam, mu)
                    lhs, rhs = s * st.r, st.c + st.q
                    strict = _strictness_hypothesis(lam, mu)
                    if lhs < rhs or (strict and lhs == rhs):
                        ces.append(
                            {
                                "s": s,
                                "lambda": list(lam),
                                "mu": list(mu),
                                "q": st.q,
                                "c": st.c,
                                "r": st.r,
                                "strict_expected": strict,
                            }
                        )
    return instances, ces, None


def _run_qcr_identities(n_max: int):
    instances = 0
    ces: list[dict] = []
    for lam, mu in _pairs(n_max):
        instances += 1
        st = diff_stats(lam, mu)
        equal = lam == mu
        if ((st.q == 0) != equal) or ((st.c == 0) != equal) or ((st.r == 0) != equal):
            ces.append({"lambda": list(lam), "mu": list(mu), "problem": "vanishing"})
        if st.c < st.q:
            ces.append({"lambda": list(lam), "mu": list(mu), "problem": "c < q"})
        for nu in enumerate_below(mu):
            instances += 1
            st_bot = diff_stats(mu, nu)
            st_all = diff_stats(lam, nu)
            if st_all.c != st.c + st_bot.c or st_all.r != st.r + st_bot.r:
                ces.append(
                    {
                        "lambda": list(lam),
                        "mu": list(mu),
                        "nu": list(nu),
                        "problem": "additivity",
                    }
                )
    return instances, ces, None


def _run_comb_col(n_max: int):
    instances = 0
    ces: list[dict] = []
    for lam, mu in _pairs(n_max):
        instances += 1
        lhat, mhat = dual(lam), dual(mu)
        t = len(lhat)
        lhs = sum(
            (mhat[i] if i < len(mhat) else 0) ** 2 - lhat[i] ** 2 for i in range(t)
        )
        rhs = 2 * diff_stats(lam, mu).r
        if lhs != rhs:
            ces.append({"lambda": list(lam), "mu": list(mu), "lhs": lhs, "rhs": rhs})
    return instances, ces, None


def _run_o_sums(n_max: int):
    instances = 0
    ces: list[dict] = []
    for lam, mu in _pairs(n_max):
        instances += 1
        t = lam[0]
        sigma_sum = sum(ab.o_stat(d) for d in sigma_zero(mu, t))
        tau_sum = sum(ab.o_stat(d) for d in tau_zero(lam))
        n = sum(lam)
        if sigma_sum != n or tau_sum != n:
            ces.append(
                {
                    "lambda": list(lam),
                    "mu": list(mu),
                    "sigma_sum": sigma_sum,
                    "tau_sum": tau_sum,
                    "n": n,
                }
            )
    return instances, ces, None


def _all_a_bases(letter_max: int):
    """Diagrams whose rows are odd and all-'a' delimited, up to a letter budget."""
    for m in range(letter_max + 1):
        for lam in _partitions(m):
            if all(p % 2 == 1 for p in lam):
                yield ab.canonical(("a", p) for p in lam)


AUG_LETTER_BUDGET = 4


def _run_comb_maxab(n_max: int):
    instances = 0
    ces: list[dict] = []
    for base in _all_a_bases(n_max):
        base_o = ab.o_stat(base)
        for da in range(AUG_LETTER_BUDGET + 1):
            for db in range(AUG_LETTER_BUDGET + 1 - da):
                limit = max(da, db)
                for grown in ab.aug(base, da, db):
                    instances += 1
                    value = ab.o_stat(grown) - 2 * ab.delta_stat(grown) - base_o
                    if value > limit:
                        ces.append(
                            {
                                "base": ab.format_diagram(base),
                                "da": da,
                                "db": db,
                                "result": ab.format_diagram(grown),
                                "value": value,
                                "limit": limit,
                            }
                        )
    return instances, ces, None


def _run_comb_maxab2(n_max: int):
    instances = 0
    ces: list[dict] = []
    for base in _all_a_bases(n_max):
        base_o = ab.o_stat(base)
        ones = sum(1 for _, length in base if length == 1)
        expected = 1 - 2 * ones
        grown_list = ab.aug(base, 0, 1)
        if not grown_list:
            ces.append({"base": ab.format_diagram(base), "problem": "empty aug"})
            continue
        for grown in grown_list:
            instances += 1
            value = ab.o_stat(grown) - 2 * ab.delta_stat(grown) - base_o
            if value != expected:
                ces.append(
                    {
                        "base": ab.format_diagram(base),
                        "result": ab.format_diagram(grown),
                        "value": value,
                        "expected": expected,
                    }
                )
    return instances, ces, None


def _run_comb_clem(n_max: int):
    instances = 0
    ces: list[dict] = []
    for lam, mu in _pairs(n_max):
        instances += 1
        da, db = d_lists(lam, mu)
        total = sum(max(x, y) for x, y in zip(da, db))
        st = diff_stats(lam, mu)
        bad = total > st.c + st.q or (st.q == 1 and total != st.c + 1)
        if bad:
            ces.append(
                {
                    "lambda": list(lam),
                    "mu": list(mu),
                    "sum_max": total,
                    "c": st.c,
                    "q": st.q,
                }
            )
    return instances, ces, None


def _lone_b_rows(lam: Partition, mu: Partition, t: int) -> int:
    """Length-one row count backing the sharper gap bound, or -1 if unused.

    The sharper bound applies when some column's deficit is a single b;
    among such columns the one with the most length-one rows in the
    canonical label of mu gives the strongest statement.
    """
    da, db = d_lists(lam, mu)
    sigma = sigma_zero(mu, t)
    hits = [i for i in range(t) if (da[i], db[i]) == (0, 1)]
    if not hits:
        return -1
    return max(sum(1 for _, length in sigma[i] if length == 1) for i in hits)


def _gap_bound_loop(n_max: int, stronger: bool):
    """Shared loop for the two stratum-gap lower bounds.

    For a fixed orbit the bound is constant, so checking the orbit's
    highest-dimensional label checks them all; counts still reflect every
    label covered.
    """
    instances = 0
    ces: list[dict] = []
    for n in range(1, n_max + 1):
        for lam in _partitions(n):
            spec = strata_spec(lam)
            top_dim = dim_stratum(tau_zero(lam), spec)
            for mu, summary in orbit_extremes(lam, n_max).items():
                st = diff_stats(lam, mu)
                required = Fraction(2 * st.r - st.c - st.q, 4)
                if stronger:
                    ones = _lone_b_rows(lam, mu, spec.t)
                    if ones < 0:
                        continue
                    required += Fraction(ones, 2)
                instances += summary.count
                gap = top_dim - summary.max_dim
                if gap < required:
                    record = _label_record(lam, summary.witness, gap)
                    record["required_num4"] = int(required * 4)
                    if stronger:
                        record["l"] = ones
                    ces.append(record)
    return instances, ces, None


def _run_comb_big(n_max: int):
    return _gap_bound_loop(n_max, stronger=False)


def _run_comb_bigr(n_max: int):
    return _gap_bound_loop(n_max, stronger=True)


def _run_ci_codim(n_max: int):
    instances = 0
    ces: list[dict] = []
    for n in range(1, n_max + 1):
        for lam in _partitions(n):
            instances += 1
            spec = strata_spec(lam)
            top_dim = dim_stratum(tau_zero(lam), spec)
            expected = Fraction(dim_M(lam)) - dim_N(lam)
            if top_dim != expected or top_dim.denominator != 1:
                ces.append(
                    {
                        "lambda": list(lam),
                        "dim_top_num4": int(top_dim * 4),
                        "dimM": dim_M(lam),
                        "dimN_num4": int(dim_N(lam) * 4),
                    }
                )
    return instances, ces, None


def _run_ci_majineq(n_max: int):
    instances = 0
    ces: list[dict] = []
    checked = 0
    for n in range(1, n_max + 1):
        for lam in _partitions(n):
            if not s_step(lam, 2):
                continue
            checked += 1
            result = check_ci_condition(lam, n_max)
            instances += result.instances
            ces.extend(result.counterexamples)
    return instances, ces, {"partitions_checked": checked}


def _run_nor_gap(n_max: int):
    instances = 0
    ces: list[dict] = []
    cases: dict[str, int] = {}
    flagged_orbits = 0
    quarter_bound_short = 0  # general-route orbits whose quarter bound alone is < 2
    checked = 0
    for n in range(1, n_max + 1):
        for lam in _partitions(n):
            if not s_step(lam, 1):
                continue
            checked += 1
            result = check_normality_gap(lam, n_max)
            instances += result.instances
            ces.extend(result.counterexamples)
            for bucket, count in (result.cases or {}).items():
                cases[bucket] = cases.get(bucket, 0) + count
            flagged_orbits += len(result.flagged or [])
            quarter_bound_short += sum(
                1 for rec in (result.flagged or []) if rec["bound_num4"] < 8
            )
    extras = {
        "partitions_checked": checked,
        "cases": dict(sorted(cases.items())),
        "general_bound_orbits": flagged_orbits,
        "general_bound_quarter_short": quarter_bound_short,
    }
    return instances, ces, extras


def _run_ortho_equiv(n_max: int):
    instances = 0
    ces: list[dict] = []
    for total in range(n_max + 1):
        for na in range(total + 1):
            for diagram in ab.enumerate_all_diagrams(na, total - na):
                instances += 1
                balanced = ab.has_property_P(diagram)
                splits = ab.decompose(diagram) is not None
                if balanced != splits:
                    ces.append(
                        {
                            "diagram": ab.format_diagram(diagram),
                            "balanced_substrings": balanced,
                            "decomposes": splits,
                        }
                    )
    return instances, ces, None


@dataclass(frozen=True)
class _Suite:
    runner: Runner
    default_n: int
    cap: int
    start_n: int
    description: str


SUITES: dict[str, _Suite] = {
    "diff_ind": _Suite(
        _run_diff_ind, 10, 12, 1,
        "degeneration chains: endpoints, unit steps, monotone rows/columns",
    ),
    "diff_usef": _Suite(
        _run_diff_usef, 10, 12, 1,
        "s-step inequality s*r >= c+q with its strictness cases (s in {1,2})",
    ),
    "qcr_identities": _Suite(
        _run_qcr_identities, 10, 12, 1,
        "q/c/r vanish together, c >= q, and c/r add along chains",
    ),
    "comb_col": _Suite(
        _run_comb_col, 10, 12, 1,
        "column-square identity: sum of squared column differences = 2r",
    ),
    "o_sums": _Suite(
        _run_o_sums, 10, 12, 1,
        "odd-row counts of both canonical labels sum to n",
    ),
    "comb_maxab": _Suite(
        _run_comb_maxab, 8, 10, 0,
        "augmentation bound o - 2*Delta - o0 <= max(da, db) (letter budget 4)",
    ),
    "comb_maxab2": _Suite(
        _run_comb_maxab2, 8, 10, 0,
        "single-b augmentation equality o - 2*Delta - o0 = 1 - 2l",
    ),
    "comb_clem": _Suite(
        _run_comb_clem, 10, 12, 1,
        "columnwise deficit sum <= c+q, with equality c+1 when q = 1",
    ),
    "comb_big": _Suite(
        _run_comb_big, 9, 9, 1,
        "stratum gap >= (2r - c - q)/4 for every label",
    ),
    "comb_bigr": _Suite(
        _run_comb_bigr, 9, 9, 1,
        "stratum gap >= (2r - c - q)/4 + l/2 when some column adds a lone b",
    ),
    "ci_codim": _Suite(
        _run_ci_codim, 10, 12, 1,
        "maximal-rank stratum dimension equals dim M - dim N",
    ),
    "ci_majineq": _Suite(
        _run_ci_majineq, 9, 9, 1,
        "2-step partitions: the maximal-rank stratum is strictly largest",
    ),
    "nor_gap": _Suite(
        _run_nor_gap, 9, 9, 1,
        "1-step partitions: every other stratum at least 2 below, cases covered",
    ),
    "ortho_equiv": _Suite(
        _run_ortho_equiv, 12, 14, 0,
        "balanced substring counts iff decomposable into standard pieces",
    ),
}


def run_suite(
    lemma_id: str,
    n_max: int | None = None,
    max_counterexamples: int = COUNTEREXAMPLE_CAP,
) -> LemmaReport:
    """Run one suite over its full instance space up to n_max."""
    suite = SUITES.get(lemma_id)
    if suite is None:
        raise ValueError(
            f"unknown lemma id {lemma_id!r}; known: {', '.join(SUITES)}"
        )
    limit = suite.default_n if n_max is None else n_max
    if limit < 0:
        raise ValueError("n_max must be nonnegative")
    if limit > suite.cap:
        raise ValueError(f"n_max = {limit} exceeds the {lemma_id} bound {suite.cap}")
    start = time.perf_counter()
    instances, ces, extras = suite.runner(limit)
    elapsed = time.perf_counter() - start
    if len(ces) > max_counterexamples:
        extras = dict(extras or {})
        extras["counterexamples_total"] = len(ces)
        ces = ces[:max_counterexamples]
    return LemmaReport(lemma_id, (suite.start_n, limit), instances, ces, elapsed, extras)


def run_all(
    n_max: int | None = None,
    max_counterexamples: int = COUNTEREXAMPLE_CAP,
) -> list[LemmaReport]:
    """Run every suite; an explicit n_max is clamped to each suite's cap."""
    reports = []
    for lemma_id, suite in SUITES.items():
        limit = None if n_max is None else min(n_max, suite.cap)
        reports.append(run_suite(lemma_id, limit, max_counterexamples))
    return reports

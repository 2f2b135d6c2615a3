#!/usr/bin/env python3
"""
Ring Network Experiments
Exhaustive link-addition sweep over ring networks, per-(size, distance)
aggregation and the findings verdict built on it
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import pandas as pd

from ..config import SWEEP_CONFIG, get_zero_tolerance
from ..exceptions import SocialCloudInputError
from ..models.externalities import ExternalityReport, count_beneficiaries, externality_report
from ..models.graph import ring
from ..models.metrics import compute_metrics

logger = logging.getLogger(__name__)

RECORD_COLUMNS = ["n", "j", "k", "d", "nob", "non_beneficiaries", "beneficiary_pct"]


@dataclass(frozen=True, order=True)
class SweepRecord:
    """Outcome of adding link (j, k) to ring(n); d is the ring distance before the link"""

    n: int
    j: int
    k: int
    d: int
    nob: int
    non_beneficiaries: int
    beneficiary_pct: float
    closeness_gainers: int = 0
    witnesses: int = 0


@dataclass(frozen=True)
class DistanceAggregate:
    """NOB statistics over every link of one distance in one ring size"""

    n: int
    d: int
    links: int
    nob_min: int
    nob_max: int
    nob_mean: float
    closeness_gainers_mean: float
    witnesses_mean: float


@dataclass(frozen=True)
class SweepSummary:
    records: Tuple[SweepRecord, ...]
    aggregates: Tuple[DistanceAggregate, ...]
    # (n, fraction of consecutive d -> d+1 steps with non-decreasing mean NOB);
    # None when the size has a single admissible distance
    monotonicity: Tuple[Tuple[int, Optional[float]], ...]
    evaluations: int = field(default=0, compare=False)

    def sizes(self) -> List[int]:
        return sorted({record.n for record in self.records})

    def aggregate(self, n: int, d: int) -> DistanceAggregate:
        for cell in self.aggregates:
            if cell.n == n and cell.d == d:
                return cell
        raise KeyError((n, d))

    def records_frame(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(record) for record in self.records])

    def aggregates_frame(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(cell) for cell in self.aggregates])


@dataclass(frozen=True)
class FindingsVerdict:
    finding2: bool
    finding2_vacuous: bool
    positive_onset: bool
    sizes_with_beneficiaries: Tuple[int, ...]
    finding3_small_d: bool
    finding3_vacuous: bool
    monotone_fraction: Optional[float]
    finding4: bool
    max_beneficiary_pct: float
    pct_within_reported_range: bool

    def to_dict(self) -> Dict[str, object]:
        verdict = asdict(self)
        verdict["sizes_with_beneficiaries"] = list(self.sizes_with_beneficiaries)
        return verdict


def _admissible_distances(n: int) -> range:
    return range(2, n // 2 + 1)


def _orbit(n: int, d: int) -> Iterator[Tuple[int, int]]:
    """Every ordered (j, k) at ring distance d"""
    for j in range(n):
        for k in sorted({(j + d) % n, (j - d) % n}):
            yield j, k


def _to_record(n: int, j: int, k: int, d: int, report: ExternalityReport) -> SweepRecord:
    nob, _, pct = count_beneficiaries(report)
    return SweepRecord(
        n=n,
        j=j,
        k=k,
        d=d,
        nob=nob,
        non_beneficiaries=n - 2 - nob,
        beneficiary_pct=pct,
        closeness_gainers=len(report.closeness_gainers()),
        witnesses=len(report.witnesses()),
    )


def _sweep_size(n: int, tolerance: float) -> Tuple[List[SweepRecord], int]:
    g = ring(n)
    base = compute_metrics(g)
    records = []
    for d in _admissible_distances(n):
        for j, k in _orbit(n, d):
            report = externality_report(g, j, k, base=base, tolerance=tolerance)
            records.append(_to_record(n, j, k, d, report))
    logger.info(f"Ring {n}: {len(records)} links evaluated")
    return records, len(records)


def _reduced_size(n: int, tolerance: float) -> Tuple[List[SweepRecord], int]:
    g = ring(n)
    base = compute_metrics(g)
    records = []
    evaluations = 0
    for d in _admissible_distances(n):
        report = externality_report(g, 0, d, base=base, tolerance=tolerance)
        evaluations += 1
        representative = _to_record(n, 0, d, d, report)
        for j, k in _orbit(n, d):
            records.append(
                SweepRecord(
                    n=n,
                    j=j,
                    k=k,
                    d=d,
                    nob=representative.nob,
                    non_beneficiaries=representative.non_beneficiaries,
                    beneficiary_pct=representative.beneficiary_pct,
                    closeness_gainers=representative.closeness_gainers,
                    witnesses=representative.witnesses,
                )
            )
    logger.info(f"Ring {n}: {evaluations} representative links replicated to {len(records)}")
    return records, evaluations


def _validate_range(n_min: int, n_max: int) -> None:
    if n_min < 4:
        raise SocialCloudInputError(
            f"ring sweep needs n_min >= 4 (a distance-2 chord on a cycle), got {n_min}"
        )
    if n_min > n_max:
        raise SocialCloudInputError(f"n_min ({n_min}) exceeds n_max ({n_max})")


def _run_sizes(worker, n_min: int, n_max: int, workers: int, tolerance: float):
    sizes = list(range(n_min, n_max + 1))
    if workers > 1 and len(sizes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(worker, sizes, [tolerance] * len(sizes)))
    return [worker(n, tolerance) for n in sizes]


def summarize(records: Sequence[SweepRecord], evaluations: int = 0) -> SweepSummary:
    """Sort records by (n, j, k) and aggregate them per (n, d)"""
    ordered = tuple(sorted(records, key=lambda r: (r.n, r.j, r.k)))
    if not ordered:
        return SweepSummary(records=(), aggregates=(), monotonicity=(), evaluations=evaluations)

    frame = pd.DataFrame([asdict(record) for record in ordered])
    grouped = (
        frame.groupby(["n", "d"], sort=True)
        .agg(
            links=("nob", "size"),
            nob_min=("nob", "min"),
            nob_max=("nob", "max"),
            nob_mean=("nob", "mean"),
            closeness_gainers_mean=("closeness_gainers", "mean"),
            witnesses_mean=("witnesses", "mean"),
        )
        .reset_index()
    )
    aggregates = tuple(
        DistanceAggregate(
            n=int(row.n),
            d=int(row.d),
            links=int(row.links),
            nob_min=int(row.nob_min),
            nob_max=int(row.nob_max),
            nob_mean=float(row.nob_mean),
            closeness_gainers_mean=float(row.closeness_gainers_mean),
            witnesses_mean=float(row.witnesses_mean),
        )
        for row in grouped.itertuples(index=False)
    )

    monotonicity = []
    for n, cells in grouped.groupby("n", sort=True):
        means = cells.sort_values("d")["nob_mean"].tolist()
        steps = list(zip(means, means[1:]))
        fraction = sum(1 for a, b in steps if b >= a) / len(steps) if steps else None
        monotonicity.append((int(n), fraction))

    return SweepSummary(
        records=ordered,
        aggregates=aggregates,
        monotonicity=tuple(monotonicity),
        evaluations=evaluations,
    )


def ring_sweep(
    n_min: int, n_max: int, workers: int = 1, tolerance: Optional[float] = None
) -> SweepSummary:
    """
    Add every admissible chord to every ring size in [n_min, n_max]

    For each n, each agent j and each distance d from 2 to floor(n/2), every
    k at ring distance d from j is linked to j and the beneficiaries counted.
    """
    _validate_range(n_min, n_max)
    if tolerance is None:
        tolerance = get_zero_tolerance()
    logger.info(f"Full ring sweep over sizes {n_min}-{n_max}")
    per_size = _run_sizes(_sweep_size, n_min, n_max, workers, tolerance)
    records = [record for size_records, _ in per_size for record in size_records]
    return summarize(records, evaluations=sum(count for _, count in per_size))


def symmetry_reduced_sweep(
    n_min: int, n_max: int, workers: int = 1, tolerance: Optional[float] = None
) -> SweepSummary:
    """Same summary as ring_sweep, evaluating one link (0, d) per ring distance"""
    _validate_range(n_min, n_max)
    if tolerance is None:
        tolerance = get_zero_tolerance()
    logger.info(f"Symmetry-reduced ring sweep over sizes {n_min}-{n_max}")
    per_size = _run_sizes(_reduced_size, n_min, n_max, workers, tolerance)
    records = [record for size_records, _ in per_size for record in size_records]
    return summarize(records, evaluations=sum(count for _, count in per_size))


def _check_coverage(summary: SweepSummary) -> None:
    sizes = summary.sizes()
    if not sizes:
        raise SocialCloudInputError("findings need a non-empty sweep summary")

    links = {(cell.n, cell.d): cell.links for cell in summary.aggregates}
    missing = []
    for n in range(sizes[0], sizes[-1] + 1):
        for d in _admissible_distances(n):
            expected = n if 2 * d == n else 2 * n
            if links.get((n, d)) != expected:
                missing.append((n, d))
    if missing:
        raise SocialCloudInputError(f"sweep summary does not cover (n, d) cells: {missing}")


def findings_check(
    summary: SweepSummary, small_network_max: Optional[int] = None
) -> FindingsVerdict:
    """
    Evaluate the ring findings on a complete sweep summary

    - finding2: no beneficiary in any ring of size <= small_network_max
    - positive_onset: every larger ring has a distance with at least one beneficiary
    - finding3_small_d: in larger rings, mean NOB at d=2 <= mean NOB at d=3
    - finding4: every link leaves fewer beneficiaries than non-beneficiaries
    """
    if small_network_max is None:
        small_network_max = SWEEP_CONFIG['SMALL_NETWORK_MAX']
    _check_coverage(summary)

    small = [r for r in summary.records if r.n <= small_network_max]
    large_sizes = [n for n in summary.sizes() if n > small_network_max]
    sizes_with_beneficiaries = tuple(sorted({r.n for r in summary.records if r.nob >= 1}))

    small_d_holds = True
    for n in large_sizes:
        if n // 2 >= 3 and summary.aggregate(n, 2).nob_mean > summary.aggregate(n, 3).nob_mean:
            logger.info(f"Ring {n}: mean NOB drops from d=2 to d=3")
            small_d_holds = False

    steps = 0
    non_decreasing = 0
    for n in large_sizes:
        means = [summary.aggregate(n, d).nob_mean for d in _admissible_distances(n)]
        steps += len(means) - 1
        non_decreasing += sum(1 for a, b in zip(means, means[1:]) if b >= a)
    monotone_fraction = non_decreasing / steps if steps else None

    max_pct = max(r.beneficiary_pct for r in summary.records)
    return FindingsVerdict(
        finding2=all(r.nob == 0 for r in small),
        finding2_vacuous=not small,
        positive_onset=all(n in sizes_with_beneficiaries for n in large_sizes),
        sizes_with_beneficiaries=sizes_with_beneficiaries,
        finding3_small_d=small_d_holds,
        finding3_vacuous=not large_sizes,
        monotone_fraction=monotone_fraction,
        finding4=all(r.nob < r.non_beneficiaries for r in summary.records),
        max_beneficiary_pct=max_pct,
        pct_within_reported_range=max_pct <= SWEEP_CONFIG['MAX_BENEFICIARY_PCT'] + 1e-9,
    )

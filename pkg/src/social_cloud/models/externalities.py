#!/usr/bin/env python3
"""
Externality Analysis
Per-agent effect of one added link on closeness and availability, the
positive / negative / none classification, beneficiary counting and the
closeness-necessity counterexample scanner
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from ..config import get_zero_tolerance
from ..exceptions import SocialCloudInputError
from .graph import Graph, Link, add_link
from .metrics import MetricsBundle, compute_metrics

logger = logging.getLogger(__name__)


class Externality(str, Enum):
    """Effect of a link between two other agents on one agent's availability"""

    POSITIVE = "POSITIVE"
    NEGATIVE = "NEGATIVE"
    NONE = "NONE"


def classify_delta(delta_gamma: float, tolerance: Optional[float] = None) -> Externality:
    """Label a change in availability; |delta| <= tolerance is no externality"""
    if tolerance is None:
        tolerance = get_zero_tolerance()
    if delta_gamma > tolerance:
        return Externality.POSITIVE
    if delta_gamma < -tolerance:
        return Externality.NEGATIVE
    return Externality.NONE


@dataclass(frozen=True)
class AgentDelta:
    """Closeness and availability of one agent before and after the link"""

    agent: int
    phi_before: float
    phi_after: float
    gamma_before: float
    gamma_after: float

    @property
    def delta_phi(self) -> float:
        return self.phi_after - self.phi_before

    @property
    def delta_gamma(self) -> float:
        return self.gamma_after - self.gamma_before


@dataclass(frozen=True)
class AgentExternality(AgentDelta):
    label: Externality


@dataclass(frozen=True)
class ExternalityReport:
    """
    Effect of adding link (j, k) on every agent

    per_agent holds the n - 2 third parties sorted by id; the endpoints are
    not externality subjects and are kept apart, in (j, k) order.
    """

    link: Link
    base_distance: int
    n_agents: int
    per_agent: Tuple[AgentExternality, ...]
    endpoints: Tuple[AgentDelta, AgentDelta]
    tolerance: float

    @property
    def endpoint_deltas(self) -> Tuple[float, float, float, float]:
        """(delta gamma_j, delta gamma_k, delta phi_j, delta phi_k)"""
        j, k = self.endpoints
        return (j.delta_gamma, k.delta_gamma, j.delta_phi, k.delta_phi)

    def agents_with(self, label: Externality) -> List[int]:
        return [row.agent for row in self.per_agent if row.label is label]

    def closeness_gainers(self) -> List[int]:
        """Third parties whose closeness strictly increased"""
        return [row.agent for row in self.per_agent if row.delta_phi > self.tolerance]

    def witnesses(self) -> List[int]:
        """Closeness gainers that are nevertheless not beneficiaries"""
        return [
            row.agent
            for row in self.per_agent
            if row.delta_phi > self.tolerance and row.label is not Externality.POSITIVE
        ]


class BeneficiaryCount(NamedTuple):
    nob: int
    beneficiaries: Tuple[int, ...]
    beneficiary_pct: float


class CorpusEntry(NamedTuple):
    """A graph and the absent links to try on it"""

    graph_id: str
    graph: Graph
    candidates: Tuple[Link, ...]


class ConjectureViolation(NamedTuple):
    """An agent that gained availability without gaining closeness"""

    graph_id: str
    link: Link
    agent: int
    delta_gamma: float
    delta_phi: float


def _agent_delta(before: MetricsBundle, after: MetricsBundle, agent: int) -> AgentDelta:
    return AgentDelta(
        agent=agent,
        phi_before=float(before.phi[agent]),
        phi_after=float(after.phi[agent]),
        gamma_before=float(before.gamma[agent]),
        gamma_after=float(after.gamma[agent]),
    )


def externality_report(
    g: Graph,
    j: int,
    k: int,
    base: Optional[MetricsBundle] = None,
    tolerance: Optional[float] = None,
) -> ExternalityReport:
    """
    Compare metrics of g + <jk> against g for every agent

    Args:
        g: network before the link
        j, k: agents forming the link; {j, k} must be absent from g
        base: metrics of g, reused when the caller evaluates many links on g
        tolerance: classification band (configured zero tolerance by default)

    Returns:
        ExternalityReport
    """
    if tolerance is None:
        tolerance = get_zero_tolerance()
    perturbed = add_link(g, j, k)
    if base is None:
        base = compute_metrics(g)
    elif base.n != g.node_count:
        raise SocialCloudInputError(
            f"base metrics cover {base.n} agents but the graph has {g.node_count}"
        )
    after = compute_metrics(perturbed)

    per_agent = []
    for agent in range(g.node_count):
        if agent in (j, k):
            continue
        delta = _agent_delta(base, after, agent)
        per_agent.append(
            AgentExternality(
                agent=delta.agent,
                phi_before=delta.phi_before,
                phi_after=delta.phi_after,
                gamma_before=delta.gamma_before,
                gamma_after=delta.gamma_after,
                label=classify_delta(delta.delta_gamma, tolerance),
            )
        )

    return ExternalityReport(
        link=(j, k),
        base_distance=base.distances[j, k],
        n_agents=g.node_count,
        per_agent=tuple(per_agent),
        endpoints=(_agent_delta(base, after, j), _agent_delta(base, after, k)),
        tolerance=tolerance,
    )


def count_beneficiaries(report: ExternalityReport) -> BeneficiaryCount:
    """NOB: third parties labeled POSITIVE, as a count and a percentage of all agents"""
    beneficiaries = tuple(report.agents_with(Externality.POSITIVE))
    nob = len(beneficiaries)
    return BeneficiaryCount(
        nob=nob,
        beneficiaries=beneficiaries,
        beneficiary_pct=100.0 * nob / report.n_agents,
    )


def not_sufficient_witness(
    g: Graph, j: int, k: int, tolerance: Optional[float] = None
) -> List[int]:
    """Agents whose closeness rises with <jk> while they gain no availability"""
    return externality_report(g, j, k, tolerance=tolerance).witnesses()


def _as_entry(index: int, entry: Union[CorpusEntry, Tuple[Graph, Iterable[Link]]]) -> CorpusEntry:
    if isinstance(entry, CorpusEntry):
        return entry
    graph, candidates = entry
    return CorpusEntry(graph_id=str(index), graph=graph, candidates=tuple(candidates))


def _scan_entry(entry: CorpusEntry, tolerance: float) -> List[ConjectureViolation]:
    base = compute_metrics(entry.graph)
    violations = []
    for j, k in entry.candidates:
        report = externality_report(entry.graph, j, k, base=base, tolerance=tolerance)
        for row in report.per_agent:
            if row.label is Externality.POSITIVE and row.delta_phi <= tolerance:
                violations.append(
                    ConjectureViolation(
                        graph_id=entry.graph_id,
                        link=(j, k),
                        agent=row.agent,
                        delta_gamma=row.delta_gamma,
                        delta_phi=row.delta_phi,
                    )
                )
    logger.debug(
        f"Scanned {entry.graph_id}: {len(entry.candidates)} links, {len(violations)} violations"
    )
    return violations


def conjecture_scan(
    corpus: Sequence[Union[CorpusEntry, Tuple[Graph, Iterable[Link]]]],
    tolerance: Optional[float] = None,
    workers: int = 1,
) -> List[ConjectureViolation]:
    """
    Search a corpus for agents that benefit from a link without any gain in
    closeness. Nothing is asserted: an empty list means no counterexample
    was found.

    Violations are returned in corpus order, then by link, then by agent,
    whether or not the corpus is fanned out over worker processes.
    """
    if tolerance is None:
        tolerance = get_zero_tolerance()
    entries = [_as_entry(index, entry) for index, entry in enumerate(corpus)]

    if workers > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_entry = list(pool.map(_scan_entry, entries, [tolerance] * len(entries)))
    else:
        per_entry = [_scan_entry(entry, tolerance) for entry in entries]

    violations = []
    for found in per_entry:
        violations.extend(sorted(found, key=lambda v: (v.link, v.agent)))

    for violation in violations:
        logger.warning(
            f"Conjecture counterexample on {violation.graph_id}: link {violation.link}, "
            f"agent {violation.agent} gains {violation.delta_gamma:.3e} availability "
            f"with closeness change {violation.delta_phi:.3e}"
        )
    logger.info(f"Conjecture scan: {len(entries)} graphs, {len(violations)} violations")
    return violations

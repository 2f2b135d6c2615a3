"""
Externality reports, beneficiary counts and the conjecture scanner
"""

import logging

import numpy as np
import pytest
from hypothesis import given

from social_cloud.exceptions import SocialCloudInputError
from social_cloud.models.externalities import (
    CorpusEntry,
    Externality,
    classify_delta,
    conjecture_scan,
    count_beneficiaries,
    externality_report,
    not_sufficient_witness,
)
from social_cloud.models.graph import add_link, complete_graph, make_graph, non_edges, path_graph, ring
from social_cloud.models.metrics import compute_metrics
from social_cloud.services.corpus import random_corpus, ring_corpus
from strategies import graphs_with_absent_link


class TestClassifyDelta:
    @pytest.mark.parametrize("delta", [-0.008, -0.004, -0.011, -0.017])
    def test_negative_changes(self, delta):
        assert classify_delta(delta) is Externality.NEGATIVE

    def test_positive_change(self):
        assert classify_delta(0.003) is Externality.POSITIVE

    @pytest.mark.parametrize("delta", [0.0, 1e-13, -1e-13, 1e-12, -1e-12])
    def test_within_tolerance(self, delta):
        assert classify_delta(delta) is Externality.NONE

    def test_custom_tolerance(self):
        assert classify_delta(0.003, tolerance=0.01) is Externality.NONE

    def test_label_values(self):
        assert [label.value for label in Externality] == ["POSITIVE", "NEGATIVE", "NONE"]


class TestExternalityReport:
    def test_path_closed_into_triangle(self):
        report = externality_report(path_graph(3), 0, 2)
        assert report.base_distance == 2
        assert [row.agent for row in report.per_agent] == [1]
        middle = report.per_agent[0]
        assert middle.gamma_before == pytest.approx(8 / 9)
        assert middle.gamma_after == pytest.approx(3 / 4)
        assert middle.delta_gamma == pytest.approx(-5 / 36)
        assert middle.delta_phi == pytest.approx(0.0, abs=1e-12)
        assert middle.label is Externality.NEGATIVE
        assert count_beneficiaries(report).nob == 0

    def test_ring_of_six_chord(self):
        report = externality_report(ring(6), 0, 2)
        assert report.base_distance == 2
        assert report.agents_with(Externality.NEGATIVE) == [1, 3, 4, 5]
        by_agent = {row.agent: row for row in report.per_agent}
        assert by_agent[3].phi_after == pytest.approx(3.5)
        assert by_agent[3].gamma_after == pytest.approx(0.665312, abs=1e-6)
        assert by_agent[1].phi_after == pytest.approx(10 / 3)
        assert by_agent[1].gamma_after == pytest.approx(0.628061, abs=1e-6)
        assert by_agent[4].gamma_after == pytest.approx(0.648437, abs=1e-6)
        assert count_beneficiaries(report) == (0, (), 0.0)

    def test_ring_of_six_witnesses(self):
        assert not_sufficient_witness(ring(6), 0, 2) == [3, 5]

    def test_complete_graph_minus_one_link(self):
        g = make_graph(5, [pair for pair in non_edges(make_graph(5, [])) if pair != (0, 1)])
        assert add_link(g, 0, 1) == complete_graph(5)
        report = externality_report(g, 0, 1)
        assert count_beneficiaries(report).nob == 0
        assert report.closeness_gainers() == []

    def test_endpoints_kept_apart(self):
        report = externality_report(ring(8), 5, 1)
        assert report.link == (5, 1)
        assert [delta.agent for delta in report.endpoints] == [5, 1]
        assert sorted(row.agent for row in report.per_agent) == [0, 2, 3, 4, 6, 7]
        dg_j, dg_k, dphi_j, dphi_k = report.endpoint_deltas
        assert dphi_j > 0 and dphi_k > 0

    def test_disconnected_pair(self):
        g = make_graph(4, [(0, 1), (2, 3)])
        report = externality_report(g, 1, 2)
        assert report.base_distance == -1
        assert len(report.per_agent) == 2

    def test_existing_link_rejected(self):
        with pytest.raises(SocialCloudInputError):
            externality_report(ring(5), 0, 1)

    def test_mismatched_base_rejected(self):
        with pytest.raises(SocialCloudInputError):
            externality_report(ring(6), 0, 2, base=compute_metrics(ring(7)))

    def test_repeatable(self):
        assert externality_report(ring(12), 0, 5) == externality_report(ring(12), 0, 5)

    @given(graphs_with_absent_link())
    def test_report_covers_every_third_party(self, case):
        g, (j, k) = case
        report = externality_report(g, j, k)
        assert report.n_agents == g.node_count
        assert [row.agent for row in report.per_agent] == [
            v for v in range(g.node_count) if v not in (j, k)
        ]
        for row in report.per_agent:
            assert row.label is classify_delta(row.delta_gamma)
        nob, beneficiaries, pct = count_beneficiaries(report)
        assert nob == len(beneficiaries)
        assert pct == pytest.approx(100.0 * nob / g.node_count)

    @given(graphs_with_absent_link())
    def test_orientation_does_not_matter(self, case):
        g, (j, k) = case
        forward = externality_report(g, j, k)
        backward = externality_report(g, k, j)
        assert [(row.agent, row.label) for row in forward.per_agent] == [
            (row.agent, row.label) for row in backward.per_agent
        ]

    @given(graphs_with_absent_link())
    def test_endpoints_gain_closeness(self, case):
        g, (j, k) = case
        report = externality_report(g, j, k)
        assert all(delta.delta_phi > 0 for delta in report.endpoints)

    @given(graphs_with_absent_link())
    def test_witnesses_are_non_beneficiary_gainers(self, case):
        g, (j, k) = case
        report = externality_report(g, j, k)
        positive = set(report.agents_with(Externality.POSITIVE))
        gainers = set(report.closeness_gainers())
        assert set(report.witnesses()) == gainers - positive


class TestConjectureScan:
    def test_triangle_has_no_violation(self):
        assert conjecture_scan([(path_graph(3), [(0, 2)])]) == []

    def test_rings_have_no_violation(self):
        assert conjecture_scan(ring_corpus(4, 30)) == []

    def test_plain_tuples_get_index_ids(self, caplog):
        corpus = [(ring(5), non_edges(ring(5))), (path_graph(4), [(0, 3)])]
        with caplog.at_level(logging.INFO, logger="social_cloud.models.externalities"):
            violations = conjecture_scan(corpus)
        assert all(v.graph_id in ("0", "1") for v in violations)
        assert "Conjecture scan: 2 graphs" in caplog.text

    def test_seeded_random_corpus_is_logged(self, caplog):
        entries, manifest = random_corpus(200, 8, 14, 0.3, 20240601)
        with caplog.at_level(logging.WARNING, logger="social_cloud.models.externalities"):
            violations = conjecture_scan(entries)
        warnings = [r for r in caplog.records if r.levelno == logging.WARNING]
        assert len(warnings) == len(violations)
        assert manifest["count"] == 200
        for v in violations:
            assert v.delta_gamma > 1e-12 and v.delta_phi <= 1e-12

    def test_violations_follow_corpus_order(self):
        entries, _ = random_corpus(30, 6, 9, 0.4, 11)
        violations = conjecture_scan(entries)
        order = [entry.graph_id for entry in entries]
        keys = [(order.index(v.graph_id), v.link, v.agent) for v in violations]
        assert keys == sorted(keys)

    def test_zero_tolerance_band_controls_violations(self):
        # a huge band turns every positive delta into NONE
        entries, _ = random_corpus(10, 8, 10, 0.3, 3)
        assert conjecture_scan(entries, tolerance=1.0) == []

    def test_worker_fan_out_matches_serial(self):
        entries, _ = random_corpus(6, 6, 8, 0.3, 5)
        assert conjecture_scan(entries, workers=2) == conjecture_scan(entries)

    def test_entry_candidates_are_absent_links(self):
        for entry in ring_corpus(4, 8):
            assert isinstance(entry, CorpusEntry)
            assert len(entry.candidates) == entry.graph.node_count * (entry.graph.node_count - 3) // 2
            assert all(not entry.graph.has_edge(j, k) for j, k in entry.candidates)


class TestCorpus:
    def test_ring_ids(self):
        assert [entry.graph_id for entry in ring_corpus(4, 6)] == ["ring-004", "ring-005", "ring-006"]

    def test_ring_range_rejected(self):
        with pytest.raises(SocialCloudInputError):
            ring_corpus(3, 6)
        with pytest.raises(SocialCloudInputError):
            ring_corpus(9, 6)

    def test_random_corpus_replays(self):
        first, first_manifest = random_corpus(20, 8, 14, 0.3, 99)
        second, second_manifest = random_corpus(20, 8, 14, 0.3, 99)
        assert [e.graph for e in first] == [e.graph for e in second]
        assert first_manifest == second_manifest
        assert all(8 <= e.graph.node_count <= 14 for e in first)
        assert [g["graph_id"] for g in first_manifest["graphs"]][:2] == ["random-0000", "random-0001"]

    @pytest.mark.parametrize(
        "args",
        [(-1, 8, 14, 0.3, 1), (5, 1, 4, 0.3, 1), (5, 9, 8, 0.3, 1), (5, 8, 14, 1.5, 1), (5, 8, 14, 0.3, -1)],
    )
    def test_random_corpus_rejects(self, args):
        with pytest.raises(SocialCloudInputError):
            random_corpus(*args)

    def test_random_edges_match_density(self):
        entries, _ = random_corpus(50, 12, 12, 0.3, 1)
        density = np.mean([e.graph.edge_count / 66 for e in entries])
        assert 0.2 < density < 0.4

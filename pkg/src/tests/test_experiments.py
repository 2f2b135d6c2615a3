"""
Ring sweep, per-distance aggregation and the findings verdict
"""

import pytest

from social_cloud.exceptions import SocialCloudInputError
from social_cloud.models.externalities import count_beneficiaries, externality_report
from social_cloud.models.graph import ring, ring_distance
from social_cloud.services.experiments import (
    SweepRecord,
    findings_check,
    ring_sweep,
    summarize,
    symmetry_reduced_sweep,
)


class TestRingSweep:
    def test_ring_of_six(self):
        summary = ring_sweep(6, 6)
        assert {record.d for record in summary.records} == {2, 3}
        assert all(record.nob == 0 for record in summary.records)
        assert all(record.non_beneficiaries == 4 for record in summary.records)
        assert summary.aggregate(6, 2).links == 12
        assert summary.aggregate(6, 3).links == 6

    def test_ring_of_four_single_distance(self):
        summary = ring_sweep(4, 4)
        assert [(r.j, r.k) for r in summary.records] == [(0, 2), (1, 3), (2, 0), (3, 1)]
        assert summary.monotonicity == ((4, None),)

    @pytest.mark.parametrize("n", [4, 5, 6, 7, 12, 13])
    def test_record_count(self, n):
        summary = ring_sweep(n, n)
        assert len(summary.records) == n * (n - 3)
        assert summary.evaluations == n * (n - 3)

    def test_records_sorted_and_distances_consistent(self):
        summary = ring_sweep(4, 9)
        keys = [(r.n, r.j, r.k) for r in summary.records]
        assert keys == sorted(keys)
        for r in summary.records:
            assert r.d == ring_distance(r.n, r.j, r.k)
            assert 2 <= r.d <= r.n // 2
            assert r.nob + r.non_beneficiaries == r.n - 2
            assert r.beneficiary_pct == pytest.approx(100.0 * r.nob / r.n)

    def test_records_match_direct_reports(self):
        summary = ring_sweep(11, 11)
        for r in summary.records[::7]:
            assert r.nob == count_beneficiaries(externality_report(ring(11), r.j, r.k)).nob

    def test_distance_cells_are_uniform(self, full_ring_sweep):
        for cell in full_ring_sweep.aggregates:
            assert cell.nob_min == cell.nob_max
            assert cell.links == (cell.n if 2 * cell.d == cell.n else 2 * cell.n)

    def test_rotation_and_reflection_invariance(self):
        summary = ring_sweep(14, 14)
        by_link = {(r.j, r.k): r.nob for r in summary.records}
        n = 14
        for (j, k), nob in by_link.items():
            assert by_link[((j + 3) % n, (k + 3) % n)] == nob
            assert by_link[((-j) % n, (-k) % n)] == nob
            assert by_link[(k, j)] == nob

    def test_workers_match_serial(self):
        assert ring_sweep(4, 12, workers=2) == ring_sweep(4, 12)

    @pytest.mark.parametrize("n_min, n_max", [(3, 10), (10, 9)])
    def test_invalid_range(self, n_min, n_max):
        with pytest.raises(SocialCloudInputError):
            ring_sweep(n_min, n_max)


class TestSymmetryReducedSweep:
    def test_matches_full_sweep(self, full_ring_sweep):
        assert symmetry_reduced_sweep(4, 30) == full_ring_sweep

    @pytest.mark.parametrize("n, evaluations", [(4, 1), (5, 1), (12, 5), (30, 14)])
    def test_one_evaluation_per_distance(self, n, evaluations):
        assert symmetry_reduced_sweep(n, n).evaluations == evaluations

    def test_invalid_range(self):
        with pytest.raises(SocialCloudInputError):
            symmetry_reduced_sweep(2, 8)


class TestSummarize:
    def test_empty(self):
        summary = summarize([])
        assert summary.records == () and summary.aggregates == ()

    def test_means_and_monotonicity(self):
        records = [
            SweepRecord(n=8, j=0, k=2, d=2, nob=1, non_beneficiaries=5, beneficiary_pct=12.5),
            SweepRecord(n=8, j=1, k=3, d=2, nob=3, non_beneficiaries=3, beneficiary_pct=37.5),
            SweepRecord(n=8, j=0, k=3, d=3, nob=1, non_beneficiaries=5, beneficiary_pct=12.5),
            SweepRecord(n=8, j=0, k=4, d=4, nob=2, non_beneficiaries=4, beneficiary_pct=25.0),
        ]
        summary = summarize(list(reversed(records)))
        assert summary.records[0] == records[0]
        cell = summary.aggregate(8, 2)
        assert (cell.links, cell.nob_min, cell.nob_max, cell.nob_mean) == (2, 1, 3, 2.0)
        assert summary.monotonicity == ((8, 0.5),)

    def test_missing_cell(self):
        with pytest.raises(KeyError):
            ring_sweep(5, 5).aggregate(5, 3)

    def test_frames(self, full_ring_sweep):
        assert len(full_ring_sweep.records_frame()) == sum(n * (n - 3) for n in range(4, 31))
        assert len(full_ring_sweep.aggregates_frame()) == sum(n // 2 - 1 for n in range(4, 31))


class TestFindings:
    def test_no_beneficiaries_in_small_rings(self, full_ring_sweep):
        verdict = findings_check(full_ring_sweep)
        assert verdict.finding2
        assert not verdict.finding2_vacuous
        assert all(n > 10 for n in verdict.sizes_with_beneficiaries)

    def test_beneficiaries_appear_beyond_ten(self, full_ring_sweep):
        verdict = findings_check(full_ring_sweep)
        assert verdict.positive_onset
        assert verdict.sizes_with_beneficiaries == tuple(range(11, 31))

    def test_beneficiaries_stay_a_minority(self, full_ring_sweep):
        verdict = findings_check(full_ring_sweep)
        assert verdict.finding4

    def test_largest_beneficiary_share(self, full_ring_sweep):
        # 8 of 26 agents, reached by the antipodal link on ring(26)
        verdict = findings_check(full_ring_sweep)
        assert verdict.max_beneficiary_pct == pytest.approx(800 / 26)
        top = {(r.n, r.d, r.nob) for r in full_ring_sweep.records if r.beneficiary_pct == verdict.max_beneficiary_pct}
        assert (26, 13, 8) in top
        assert verdict.pct_within_reported_range is False

    def test_distance_two_does_not_beat_three(self, full_ring_sweep):
        verdict = findings_check(full_ring_sweep)
        assert verdict.finding3_small_d
        assert not verdict.finding3_vacuous

    def test_nob_mostly_grows_with_distance(self, full_ring_sweep):
        # 155 of the 160 consecutive distance steps over sizes 11..30
        verdict = findings_check(full_ring_sweep)
        assert verdict.monotone_fraction == pytest.approx(31 / 32)

    def test_small_only_sweep(self):
        verdict = findings_check(ring_sweep(4, 4))
        assert verdict.finding2 and verdict.finding4
        assert verdict.finding3_vacuous
        assert verdict.monotone_fraction is None
        assert verdict.max_beneficiary_pct == 0.0

    def test_large_only_sweep(self):
        verdict = findings_check(ring_sweep(11, 13))
        assert verdict.finding2_vacuous

    def test_incomplete_summary_rejected(self, full_ring_sweep):
        partial = summarize([r for r in full_ring_sweep.records if not (r.n == 20 and r.d == 5)])
        with pytest.raises(SocialCloudInputError, match=r"\(20, 5\)"):
            findings_check(partial)

    def test_empty_summary_rejected(self):
        with pytest.raises(SocialCloudInputError):
            findings_check(summarize([]))

    def test_verdict_serializes(self, full_ring_sweep):
        document = findings_check(full_ring_sweep).to_dict()
        assert isinstance(document["sizes_with_beneficiaries"], list)
        assert document["finding4"] is True

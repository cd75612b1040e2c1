"""Brute-force oracles: enumeration, disjointness, and the report format."""
from pathlib import Path

import pytest

from rllindel.bitseq import BitSeq, is_rll
from rllindel.code import raw_params
from rllindel.errors import ValidationError
from rllindel.oracle import (
    Report,
    check_channel_campaign,
    check_encoder_rll,
    check_front_roundtrip,
    check_sidc,
    deletion_balls_disjoint,
    enumerate_codewords,
    enumerate_rll,
)

FIXTURES = Path(__file__).parent / "fixtures"


def frozen(name: str) -> int:
    for line in (FIXTURES / "frozen_counts.txt").read_text().splitlines():
        if line.startswith(name):
            return int(line.split("=")[1])
    raise KeyError(name)


class TestEnumerateRll:
    def test_alternating_only_at_r1(self):
        words = enumerate_rll(4, 1)
        assert [str(w) for w in words] == ["0101", "1010"]

    def test_lexicographic_and_valid(self):
        words = enumerate_rll(8, 3)
        texts = [str(w) for w in words]
        assert texts == sorted(texts)
        assert all(is_rll(w, 3) for w in words)
        assert len(set(texts)) == len(texts)

    def test_frozen_count(self):
        assert len(enumerate_rll(10, 4)) == frozen("rll_count_n10_r4")

    def test_guards(self):
        with pytest.raises(ValueError):
            enumerate_rll(25, 4)
        with pytest.raises(ValueError):
            enumerate_rll(0, 4)
        with pytest.raises(ValueError):
            enumerate_rll(4, 0)


class TestEnumerateCodewords:
    def test_frozen_count(self):
        words = enumerate_codewords(raw_params(10, 4, 6, 0))
        assert len(words) == frozen("codeword_count_n10_rhat4_d6_b0")

    def test_lexicographic(self):
        texts = [str(w) for w in enumerate_codewords(raw_params(10, 4, 6, 3))]
        assert texts == sorted(texts)

    def test_residues_partition_the_space(self):
        total = 0
        rp0 = raw_params(10, 4, 6, 0)
        for b in range(rp0.modulus):
            total += len(enumerate_codewords(raw_params(10, 4, 6, b)))
        assert total == 1 << 10

    def test_guard(self):
        with pytest.raises(ValueError):
            enumerate_codewords(raw_params(25, 4, 6, 0))


class TestDeletionBalls:
    def test_disjoint_set(self):
        ok, clash = deletion_balls_disjoint([BitSeq("0011"), BitSeq("1100")])
        assert ok and clash is None

    def test_clashing_set(self):
        # both lose one symbol to become "0"
        ok, clash = deletion_balls_disjoint([BitSeq("00"), BitSeq("01")])
        assert not ok
        assert set(map(str, clash)) == {"00", "01"}

    def test_check_sidc_true_case(self):
        assert check_sidc(10, 4, 6, 0)

    def test_check_sidc_negative_control(self):
        # constant coefficients (the classic parity-sum code) are not
        # single-deletion correcting, so the helper must find a clash
        words = [
            BitSeq([(mask >> (8 - i)) & 1 for i in range(9)])
            for mask in range(1 << 9)
            if bin(mask).count("1") % 2 == 0
        ]
        ok, _ = deletion_balls_disjoint(words)
        assert not ok

    def test_guard(self):
        with pytest.raises(ValueError):
            check_sidc(17, 4, 6, 0)


class TestEncoderRll:
    def test_exhaustive_small_case(self):
        report = check_encoder_rll(7, 4, 6)
        assert report.passed
        assert report.stats["mode"] == "exhaustive"
        # every run-limited message part times every residue
        assert report.stats["encodes"] == len(enumerate_rll(7, 4)) * 25

    def test_sampled_mode_valid_params(self):
        report = check_encoder_rll(14, 4, 7, trials=2000)
        assert report.passed
        assert report.stats["mode"] == "sampled"
        assert report.stats["encodes"] == 2000

    def test_excluded_triple_observed_failing(self):
        # the one rejected triple; the oracle probes it anyway and reports
        # what it saw (roughly 3% of samples defeat the parity fallback)
        report = check_encoder_rll(14, 4, 5, trials=3000)
        assert not report.passed
        assert report.stats["violations"] > 0
        assert "FAIL" in report.lines()[0]

    def test_invalid_params_still_rejected(self):
        with pytest.raises(ValidationError):
            check_encoder_rll(6, 4)


class TestFrontRoundtrip:
    def test_passes_in_safe_zone(self):
        report = check_front_roundtrip(10, 4)
        assert report.passed
        assert report.stats["messages"] == 512

    def test_rejected_pair_fails_validation_before_running(self):
        with pytest.raises(ValidationError):
            check_front_roundtrip(14, 4)

    def test_cap(self):
        with pytest.raises(ValueError):
            check_front_roundtrip(14, 5)


class TestChannelCampaign:
    def test_small_campaign_passes(self):
        report = check_channel_campaign(13, 4, 400, 11)
        assert report.passed
        assert report.stats["failures"] == 0

    def test_render_is_reproducible(self):
        a = check_channel_campaign(13, 4, 200, 5)
        b = check_channel_campaign(13, 4, 200, 5)
        assert a.render() == b.render()

    def test_different_seeds_differ(self):
        a = check_channel_campaign(13, 4, 200, 5)
        b = check_channel_campaign(13, 4, 200, 6)
        assert a.stats["digest"] != b.stats["digest"]


class TestReportFormat:
    def test_pass_lines(self):
        report = Report("demo", {"k": 3}, True, stats={"cases": 7})
        assert report.lines() == ["CHECK demo k=3 PASS", "check=demo k=3 result=pass cases=7"]
        assert report.render() == "CHECK demo k=3 PASS\ncheck=demo k=3 result=pass cases=7\n"

    def test_fail_line_carries_counterexample(self):
        report = Report("demo", {"k": 3}, False, counterexample="y=010")
        assert report.lines()[0] == "CHECK demo k=3 FAIL y=010"

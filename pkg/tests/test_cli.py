"""Command-line interface: subcommands, streaming behavior, and exit codes."""
import subprocess
import sys

CMD = [sys.executable, "-m", "rllindel"]


def run(*args, stdin: str = ""):
    return subprocess.run(
        CMD + list(args), input=stdin, capture_output=True, text=True, timeout=300
    )


class TestParams:
    def test_prints_block(self):
        result = run("params", "--k", "14", "--r", "4")
        assert result.returncode == 0
        lines = result.stdout.splitlines()
        assert "n=21" in lines and "modulus=32" in lines
        assert "d_min=5" in lines and "d_max=7" in lines

    def test_excluded_triple_exits_2(self):
        result = run("params", "--k", "14", "--r", "4", "--d", "5")
        assert result.returncode == 2
        assert "(14, 4, 5)" in result.stderr

    def test_small_k_exits_2(self):
        result = run("params", "--k", "6", "--r", "4")
        assert result.returncode == 2

    def test_missing_flag_exits_1(self):
        result = run("params", "--k", "14")
        assert result.returncode == 1

    def test_unknown_command_exits_1(self):
        result = run("frobnicate")
        assert result.returncode == 1


class TestEncodeDecode:
    def test_raw_known_vector(self):
        result = run(
            "encode", "--raw", "--k", "14", "--r", "4", "--d", "6", "--b", "31",
            stdin="10100001000010\n",
        )
        assert result.returncode == 0
        assert result.stdout == "001111010100001000010\n"

    def test_raw_decode_round_trip(self):
        result = run(
            "decode", "--raw", "--k", "14", "--r", "4", "--d", "6", "--b", "31",
            stdin="001111010100001000010\n",
        )
        assert result.returncode == 0
        assert result.stdout == "10100001000010\n"

    def test_pipeline_round_trip(self):
        message = "010011000101\n"
        encoded = run("encode", "--k", "13", "--r", "4", stdin=message)
        assert encoded.returncode == 0
        decoded = run("decode", "--k", "13", "--r", "4", stdin=encoded.stdout)
        assert decoded.returncode == 0
        assert decoded.stdout == message

    def test_multiple_lines_keep_order(self):
        stdin = "000000000000\n111111111111\n010101010101\n"
        encoded = run("encode", "--k", "13", "--r", "4", stdin=stdin)
        decoded = run("decode", "--k", "13", "--r", "4", stdin=encoded.stdout)
        assert decoded.stdout == stdin

    def test_bad_line_reported_and_skipped(self):
        result = run(
            "encode", "--raw", "--k", "14", "--r", "4",
            stdin="xx\n10100001000010\n",
        )
        assert result.returncode == 3
        assert result.stderr.startswith("ERROR 1 ")
        assert len(result.stdout.splitlines()) == 1

    def test_pipeline_rejects_infeasible_pair(self):
        result = run("encode", "--k", "14", "--r", "4", stdin="1" * 13 + "\n")
        assert result.returncode == 2


class TestCorrupt:
    def test_deterministic(self):
        args = ("corrupt", "--seed", "7", "--op", "delete")
        first = run(*args, stdin="001111010100001000010\n")
        second = run(*args, stdin="001111010100001000010\n")
        assert first.returncode == 0
        assert (first.stdout, first.stderr) == (second.stdout, second.stderr)
        assert len(first.stdout.strip()) == 20
        assert first.stderr.startswith("deletion ")

    def test_insert_grows_line(self):
        result = run("corrupt", "--seed", "3", "--op", "insert", stdin="0000\n")
        assert len(result.stdout.strip()) == 5
        kind, position, symbol = result.stderr.split()
        assert kind == "insertion" and 1 <= int(position) <= 5 and symbol in "01"

    def test_missing_seed_exits_1(self):
        result = run("corrupt", "--op", "delete", stdin="0000\n")
        assert result.returncode == 1

    def test_corrupt_then_decode_recovers(self):
        message = "010011000101\n"
        encoded = run("encode", "--k", "13", "--r", "4", stdin=message)
        corrupted = run("corrupt", "--seed", "41", stdin=encoded.stdout)
        decoded = run("decode", "--k", "13", "--r", "4", stdin=corrupted.stdout)
        assert decoded.stdout == message


class TestVerify:
    def test_front_roundtrip_passes(self):
        result = run("verify", "front-roundtrip", "--k", "10", "--r", "4")
        assert result.returncode == 0
        assert result.stdout.startswith("CHECK front-roundtrip k=10 r=4 PASS")

    def test_rejected_pair_exits_2(self):
        result = run("verify", "front-roundtrip", "--k", "14", "--r", "4")
        assert result.returncode == 2

    def test_sidc_all_residues(self):
        result = run(
            "verify", "sidc", "--n-min", "10", "--n-max", "10", "--rhat", "4", "--d", "6"
        )
        assert result.returncode == 0
        assert "residues=21" in result.stdout

    def test_encoder_rll_excluded_triple_exits_4(self):
        result = run("verify", "encoder-rll", "--k", "14", "--r", "4", "--d", "5")
        assert result.returncode == 4
        assert "FAIL" in result.stdout

    def test_gap_condition_reports_collision(self):
        result = run("verify", "gap-condition", "--rhat", "4")
        assert result.returncode == 0
        assert "(k=14,d=5,A=32)" in result.stdout

    def test_campaign_reproducible(self):
        args = ("verify", "campaign", "--k", "13", "--r", "4", "--seed", "21")
        first = run(*args)
        second = run(*args)
        assert first.returncode == 0
        assert first.stdout == second.stdout


class TestAnalyze:
    def test_redundancy_table(self):
        result = run("analyze", "redundancy", "--n-min", "14", "--n-max", "100")
        assert result.returncode == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "n,r_hat,redundancy,phi,gap"
        assert lines[1] == "14,4,8,3.700616,4.299384"
        assert len(lines) == 88

    def test_below_band_exits_2(self):
        result = run("analyze", "redundancy", "--n-min", "10", "--n-max", "20")
        assert result.returncode == 2

    def test_reversed_range_exits_2(self):
        result = run("analyze", "redundancy", "--n-min", "20", "--n-max", "14")
        assert result.returncode == 2

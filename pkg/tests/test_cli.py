import io
import json
import subprocess
import sys

import pytest

from rpcomb.cli import run
from rpcomb.records import (
    Record,
    format_code,
    parse_code,
    parse_composition,
    parse_partition,
)
from rpcomb.core_trees import EMPTY
from rpcomb.errors import DomainError
from rpcomb.rp_compositions import BinaryPartition
from rpcomb.rp_words import RPCode

EXAMPLE_37 = "1+1+4+1+1+1+1+4+1+1+5+1+1+4+1+1+1+1+4+1+1"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), out=out, err=err)
    return status, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["count-words", "--length", "7", "--alphabet-size", "2"], "8\n"),
        (["count-words", "--length", "7", "--alphabet", "xyz"], "27\n"),
        (["pair-word", "MADAMIMADAM"], "AMDMAIAMDMA\n"),
        (["pair-word", "AABB"], "BBAA\n"),
        (["check-word", "ABACABA"], "true\n"),
        (["check-word", "MADAM"], "false\n"),
        (["encode-word", "AABAAAABAACAABAAAABAA"], "A0B0C\n"),
        (["decode-code", "A0B0C"], "AABAAAABAACAABAAAABAA\n"),
        (["encode-word", "0001000", "--empty-mark", "."], "001\n"),
        (["decode-code", "1..", "--empty-mark", "."], "1111\n"),
        (["map-composition", EXAMPLE_37], "16,4,4,4,4,1,1,1,1,1\n"),
        (["map-partition", "16,4,4,4,4,1,1,1,1,1"], EXAMPLE_37 + "\n"),
        (["map-partition", "m=[5,0,4,0,1]"], EXAMPLE_37 + "\n"),
        (["count-compositions", "16"], "36\n"),
        (["count-binary-partitions", "16"], "36\n"),
        (["list-compositions", "4"], "1+1+1+1\n2+2\n1+2+1\n4\n"),
        (["list-partitions", "4"], "4\n2,2\n2,1,1\n1,1,1,1\n"),
        (["check-composition", "2+1+2+6+2+1+2"], "true\n"),
        (["check-composition", "1+2+1+2"], "false\n"),
        (["pair-composition", "1+1+2"], "2+1+1\n"),
        (["catalan-parity", "7"], "true\n"),
        (["catalan-parity", "10"], "false\n"),
        (["catalan-count", "5"], "42\n"),
        (["catalan-fixed-points", "4"], "0\n"),
        (["catalan-fixed-points", "3", "--list"], "1\n((..)(..))\n"),
    ],
)
def test_commands(argv, expected):
    status, out, err = call(*argv)
    assert (status, out, err) == (0, expected, "")


def test_list_words_paper_example():
    status, out, _ = call("list-words", "--length", "7", "--alphabet", "01")
    assert status == 0
    assert set(out.split()) == {
        "0000000", "0001000", "0100010", "0101010",
        "1010101", "1011101", "1110111", "1111111",
    }


def test_count_words_structured_reports_candidates():
    status, out, _ = call("--format", "structured", "count-words", "--length", "7", "--alphabet-size", "2")
    rec = json.loads(out)
    assert status == 0
    assert (rec["kind"], rec["value"], rec["candidates"]) == ("count", 8, 128)


@pytest.mark.parametrize(
    "argv",
    [
        ["encode-word", "MADAM"],
        ["encode-word", "0001000"],  # letter clashes with the default empty mark
        ["decode-code", "0AB"],
        ["map-composition", "1+1+2"],
        ["map-partition", "3,1"],
        ["map-partition", "1,2"],
        ["pair-composition", "1+x"],
        ["check-composition", "1+0+1"],
        ["check-word", "ABC", "--alphabet", "AB"],
        ["list-partitions", "300"],
        ["catalan-fixed-points", "20"],
    ],
)
def test_domain_errors(argv):
    status, out, err = call(*argv)
    assert status == 1
    assert out == ""
    assert err.startswith("rpcomb ")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["no-such-command"],
        ["count-words", "--length", "-1", "--alphabet-size", "2"],
        ["count-words", "--length", "3"],
        ["list-words", "--length", "3", "--alphabet", "aa"],
        ["verify", "--words-max-n", "99"],
        ["--format", "xml", "catalan-count", "3"],
    ],
)
def test_usage_errors(argv, capsys):
    status, _, _ = call(*argv)
    assert status in (1, 2)
    if argv[:1] != ["verify"]:
        assert status == 2


def test_verify_bound_over_cap_is_refused():
    status, out, err = call("verify", "--catalan-max-n", "99")
    assert status == 1 and out == "" and "catalan_max_n" in err


STRUCTURED_COMMANDS = [
    ["count-words", "--length", "9", "--alphabet-size", "3"],
    ["list-words", "--length", "5", "--alphabet", "ab"],
    ["check-word", "ABACABA"],
    ["pair-word", "MADAMIMADAM"],
    ["encode-word", "AABAAAABAACAABAAAABAA"],
    ["decode-code", "A0B0C"],
    ["count-compositions", "10"],
    ["count-binary-partitions", "10"],
    ["list-compositions", "6"],
    ["list-partitions", "6"],
    ["check-composition", "1+2+1"],
    ["pair-composition", "1+1+2"],
    ["map-composition", EXAMPLE_37],
    ["map-partition", "m=[5,0,4,0,1]"],
    ["catalan-parity", "15"],
    ["catalan-count", "30"],
    ["catalan-fixed-points", "7", "--list"],
]


@pytest.mark.parametrize("argv", STRUCTURED_COMMANDS)
def test_structured_records_round_trip(argv):
    status, out, _ = call("--format", "structured", *argv)
    assert status == 0
    text_status, text_out, _ = call(*argv)
    lines = out.splitlines()
    assert len(lines) == len(text_out.splitlines())
    for line, text in zip(lines, text_out.splitlines()):
        rec = Record.from_json(line)
        assert rec.to_json() == line
        assert rec.to_text() == text


def test_format_flag_after_subcommand():
    assert call("catalan-count", "3", "--format", "structured")[1] == call("--format", "structured", "catalan-count", "3")[1]


def test_output_is_deterministic():
    for argv in STRUCTURED_COMMANDS:
        assert call(*argv) == call(*argv)


def test_verify_small_bounds_passes():
    argv = [
        "verify", "--words-max-n", "7", "--words3-max-n", "5", "--pairing-max-n", "8",
        "--theorem2-max-n", "20", "--compositions-max-n", "10", "--bijection-max-n", "10",
        "--composition-pairing-max-n", "8", "--catalan-max-n", "7", "--parity-max-n", "20",
    ]
    status, out, _ = call(*argv)
    assert status == 0
    assert all(line.startswith("PASS ") for line in out.splitlines())
    assert "length 7: 8 RP of 128 words" in out.splitlines()[0]
    status, out, _ = call("--format", "structured", *argv)
    assert all(Record.from_json(line).data["passed"] for line in out.splitlines())


def test_verify_level_label_mutation_reports_aabb():
    status, out, _ = call(
        "verify", "--pairing-criterion", "level-labels", "--alphabet", "AB",
        "--words-max-n", "4", "--words3-max-n", "3", "--pairing-max-n", "6",
        "--theorem2-max-n", "5", "--compositions-max-n", "5", "--bijection-max-n", "5",
        "--composition-pairing-max-n", "6", "--catalan-max-n", "3", "--parity-max-n", "5",
    )
    assert status == 3
    fails = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert "FAIL word-pairing: fixed points differ from RP words; counterexample: AABB" in fails
    assert any("pairing-regression" in line and "AABB" in line for line in fails)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rpcomb", "pair-word", "MADAMIMADAM"],
        capture_output=True, text=True, check=False,
    )
    assert (proc.returncode, proc.stdout) == (0, "AMDMAIAMDMA\n")


def test_parsers():
    assert parse_composition("1+2+1") == (1, 2, 1)
    assert parse_composition("") == ()
    assert parse_partition("4,2,1") == BinaryPartition((1, 1, 1))
    assert parse_partition("m=[]") == BinaryPartition(())
    assert parse_partition("m=[0, 1]") == BinaryPartition((0, 1))
    code = parse_code("A0B0C")
    assert code == RPCode(("C", EMPTY, "B", EMPTY, "A"), 21)
    assert format_code(code) == "A0B0C"
    assert parse_code("") == RPCode((), 0)
    with pytest.raises(DomainError):
        parse_code("0A")
    with pytest.raises(DomainError):
        parse_composition("1++2")
    with pytest.raises(DomainError):
        format_code(RPCode(("0",), 1))

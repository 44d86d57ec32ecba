import json
import subprocess
import sys
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from chernwork.cli import format_rational, load_record, main, parse_rational, run


def record(argv):
    status, text = run(argv)
    return status, (load_record(text) if text else None)


def test_coeff_b():
    status, rec = record(["coeff-b", "--partition", "3", "--k", "2"])
    assert status == 0
    assert rec["result"]["value"] == Fraction(-3, 2)


def test_coeff_h():
    status, rec = record(["coeff-h", "--genus", "signature", "--partition", "2,2"])
    assert status == 0 and rec["result"]["value"] == Fraction(1, 15)


def test_check_pass_and_fail():
    status, rec = record(["check", "--dim", "2", "--chern", "(1,1)=9,(2)=3"])
    assert status == 0 and rec["result"]["verdict"] == "pass"
    status, rec = record(["check", "--dim", "1", "--chern", "(1)=1"])
    assert status == 0 and rec["result"]["verdict"] == "fail"
    assert rec["result"]["violations"][0]["value"] == Fraction(1, 2)


def test_partition_sorted():
    _, a = record(["coeff-b", "--partition", "1,2", "--k", "1"])
    _, b = record(["coeff-b", "--partition", "2,1", "--k", "1"])
    assert a == b


def test_usage_error_exit_2():
    assert run(["coeff-b", "--partition", "x,1"])[0] == 2
    assert run(["coeff-b"])[0] == 2
    assert run(["nonsense"])[0] == 2


def test_domain_error_exit_1():
    status, rec = record(["rpp-report", "--dim", "4"])
    assert status == 1 and rec["error"]["type"] == "ValueError"
    status, rec = record(["check", "--dim", "9", "--chern", "(9)=1"])
    assert status == 1 and rec["error"]["type"] == "LimitExceededError"


def test_table_format():
    status, text = run(["coeff-b", "--partition", "3", "--k", "2", "--format", "table"])
    assert status == 0 and "-3/2" in text


def test_fixture_and_genus():
    _, rec = record(["fixture", "--partition", "2,1"])
    assert rec["result"]["realizable"] and rec["result"]["todd"] == 1
    _, rec = record(["genus-eval", "--genus", "todd", "--dim", "1", "--chern", "(1)=2"])
    assert rec["result"]["value"] == 1


def test_search_output_is_json():
    status, text = run(["search-thm3", "--k", "2", "--i", "2", "--bound", "50"])
    data = json.loads(text)
    assert status == 0 and data["result"]["all_signatures_even"] is True


@given(st.fractions(max_denominator=10**6))
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_main_entry(capsys):
    assert main(["coeff-b", "--partition", "3", "--k", "3"]) == 0
    assert '"1/1"' in capsys.readouterr().out


def test_module_invocation():
    out = subprocess.run(
        [sys.executable, "-m", "chernwork", "coeff-h", "--partition", "4"],
        capture_output=True,
        text=True,
        check=True,
    ).stdout
    assert load_record(out)["result"]["value"] == Fraction(14, 45)

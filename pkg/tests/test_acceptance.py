import pytest

from chernwork.acceptance import CRITERIA


@pytest.mark.parametrize("name,check", CRITERIA, ids=[name for name, _ in CRITERIA])
def test_criterion(name, check):
    ok, detail = check()
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    assert ok, detail

import pytest

from quartprimes import verify
from quartprimes.cli import main


@pytest.mark.slow
def test_verify_all_exit_zero(capsys):
    assert main(["verify", "all"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert sum(line.startswith("PASS") for line in out.splitlines()) >= 30


def test_known_exception_sets_are_exact(monkeypatch):
    monkeypatch.setattr(verify, "KNOWN_H_LAW_EXCEPTIONS", frozenset())
    rows = {r.name: r.passed for r in verify.run_suite("g")}
    assert not rows["h_prime_law_p"] and not rows["h_prime_law_p2"]
    assert rows["g_sum_eq_closed_d5000"]


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run_suite("nope")

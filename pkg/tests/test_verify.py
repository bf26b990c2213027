import pytest

from pfhull.faces import f_vector
from pfhull.verify import (
    CHECKS,
    FAIL,
    PASS,
    SKIP_BOUND,
    SKIP_LEVEL,
    f_vector_reversed,
    run_checks,
)

NAMES = [c[0] for c in CHECKS]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_full_checks_pass(n):
    results = run_checks(n, "full")
    assert [r.name for r in results] == NAMES
    assert all(r.status == PASS for r in results), results


def test_fast_level_skips_oracles():
    results = {r.name: r.status for r in run_checks(4, "fast")}
    for name, _, is_oracle, _ in CHECKS:
        assert results[name] == (SKIP_LEVEL if is_oracle else PASS)


def test_large_n_skips_by_bound():
    results = {r.name: r.status for r in run_checks(13, "full")}
    assert results["euler_relation"] == SKIP_BOUND
    assert results["edge_graph_regularity"] == SKIP_BOUND
    assert results["fvector_identities"] == PASS


def test_oracle_budget_skip():
    results = {r.name: r.status for r in run_checks(5, "full", budget=100)}
    assert results["volume_oracle"] == SKIP_BOUND
    assert results["lattice_equivalence"] == SKIP_BOUND
    assert results["face_lattice_oracle"] == PASS


def test_shards_do_not_change_verdicts():
    a = [r.to_dict() for r in run_checks(4, "full", shards=3)]
    b = [r.to_dict() for r in run_checks(4, "full")]
    assert a == b


def test_stops_at_first_failure(monkeypatch):
    import pfhull.verify as verify
    calls = []

    def bad(n, **_):
        calls.append("bad")
        return {"why": "forced"}

    def later(n, **_):
        calls.append("later")

    monkeypatch.setattr(verify, "CHECKS", [
        ("bad", lambda n: True, False, bad),
        ("later", lambda n: True, False, later),
    ])
    results = verify.run_checks(3)
    assert [r.status for r in results] == [FAIL]
    assert results[0].to_dict()["counterexample"] == {"why": "forced"}
    assert calls == ["bad"]


def test_bad_level():
    with pytest.raises(ValueError):
        run_checks(3, "medium")


@pytest.mark.parametrize("n", range(1, 20))
def test_reversed_sum_matches(n):
    assert f_vector_reversed(n) == f_vector(n)

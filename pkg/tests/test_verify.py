import pytest

from conftest import FIXTURE_NAMES, CORPUS_LABELS, suite_results
from quasitorsor import verify
from quasitorsor.ribbonmap import parse_rmap

ALL = FIXTURE_NAMES + CORPUS_LABELS


@pytest.mark.parametrize("label", ALL)
def test_every_suite_passes(label):
    res = suite_results(label)
    failed = {k: d for k, (ok, d) in res.items() if ok is False}
    assert not failed


def test_check_ids_are_stable():
    ids = list(suite_results("torus"))
    assert len(ids) == len(set(ids))
    assert all(i.split(".")[0] in {"ribbonmap", "orthomat", "jacobian", "bby",
                                    "ribbontorsor", "bridges"} for i in ids)
    assert "bridges.sphere" not in ids and "bridges.sphere" in suite_results("k4")


def test_size_guard_skips_bridges():
    G = parse_rmap("rmap 1\nn 3\nv 1+ 2+ 3+ 1- 2- 3-\n")
    res = list(verify.run_all(G, max_bases=1))
    skipped = [name for name, ok, _ in res if ok is None]
    assert skipped == ["bridges.ps-axioms", "bridges.abelian", "bridges.round-trip"]
    assert all(ok for _, ok, _ in res if ok is not None)

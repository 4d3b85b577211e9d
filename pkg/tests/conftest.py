import functools
import json
import random
from pathlib import Path

import pytest

from quasitorsor import parse_rmap, verify
from quasitorsor.cli import load_fixture

ORACLE = json.loads((Path(__file__).with_name("data") / "oracle.json").read_text())
FIXTURE_NAMES = sorted(ORACLE["fixtures"])
CORPUS_LABELS = [r["label"] for r in ORACLE["corpus"]]
RECORDS = {**ORACLE["fixtures"], **{r["label"]: r for r in ORACLE["corpus"]}}


@functools.lru_cache(maxsize=None)
def graph(label):
    return parse_rmap(RECORDS[label]["rmap"])


@functools.lru_cache(maxsize=None)
def context(label):
    return verify.Context(graph(label), seed=sum(map(ord, label)))


@functools.lru_cache(maxsize=None)
def suite_results(label):
    """{check id: (ok, detail)} from every verification suite."""
    return {name: (ok, detail) for name, ok, detail in verify.run_all(
        graph(label), seed=sum(map(ord, label)))}


def small(labels, max_edges):
    return [l for l in labels if RECORDS[l]["euler"][1] <= max_edges]


@pytest.fixture
def torus():
    return load_fixture("torus")


@pytest.fixture
def rng():
    return random.Random(7)

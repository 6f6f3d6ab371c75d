"""
Shared fixtures: the worked triple, golden data and a clean configuration.
"""

import json
from pathlib import Path

import pytest

from src.arithmetic import make_triple
from src.genes import validate_gene
from src.serre import make_serre_weight


FIXTURES = Path(__file__).parent / "fixtures"
T_STAR_MODULUS = 5 ** 7 - 1


def load_golden(name: str) -> dict:
    with open(FIXTURES / name, "r", encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture(autouse=True)
def clean_config(monkeypatch):
    """Every test starts from default settings, whatever the environment holds."""
    import os

    for key in list(os.environ):
        if key.startswith("SERRE_"):
            monkeypatch.delenv(key, raising=False)
    monkeypatch.setattr("src.config.settings._config_manager", None)
    yield


@pytest.fixture(scope="session")
def t_star_data() -> dict:
    return load_golden("t_star.json")


@pytest.fixture
def t_star(t_star_data):
    t = t_star_data["triple"]
    return make_triple(t["p"], t["f"], t["h"], t["gamma"], t["gamma_prime"])


@pytest.fixture
def t_star_gene(t_star_data):
    g = t_star_data["gene"]
    return validate_gene(g["top"] + g["bottom"])


@pytest.fixture
def t_star_common(t_star_data):
    """The twenty common weights, s reduced to [0, q-2]."""
    return [
        (tuple(e["w"]), make_serre_weight(5, 7, e["s"] % T_STAR_MODULUS, e["r"]))
        for e in t_star_data["common"]
    ]

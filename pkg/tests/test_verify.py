import random

import pytest

from exacthom.errors import InputError
from exacthom.linalg import det
from exacthom.verify import (
    SUITE_NAMES,
    random_presentation,
    random_unimodular,
    run_four_term,
    run_koszul_d2,
    run_suite,
)


def test_random_unimodular():
    rng = random.Random("verify-unimodular")
    for _ in range(20):
        n = rng.randint(1, 5)
        u = random_unimodular(n, rng)
        assert abs(det(u)) == 1


def test_random_presentation():
    rng = random.Random("verify-presentation")
    for _ in range(20):
        f_rank = rng.randint(1, 4)
        h_rank = rng.randint(0, f_rank)
        pres = random_presentation(f_rank, h_rank, rng)
        assert (pres.h_rank, pres.f_rank) == (h_rank, f_rank)
        pres.group()  # canonical form must be computable
    with pytest.raises(ValueError):
        random_presentation(1, 2, rng)


def test_suite_reports_are_deterministic():
    a = run_koszul_d2(7)
    b = run_koszul_d2(7)
    assert a == b
    assert a["suite"] == "koszul-d2" and a["seed"] == 7
    assert a["passed"] and not a["failures"]
    assert run_koszul_d2(8)["passed"]


def test_four_term_filters():
    report = run_four_term(10**6, only_preset="Z3", only_n=2)
    assert report["passed"]
    assert {d["group"] for d in report["details"]} == {"Z3"}
    assert {d["n"] for d in report["details"]} == {2}
    with pytest.raises(InputError):
        run_four_term(10**6, only_preset="Z9")
    with pytest.raises(InputError):
        run_four_term(10**6, only_n=0)


def test_run_suite_dispatch():
    assert set(SUITE_NAMES) == {"functoriality", "koszul-d2", "independence", "four-term"}
    report = run_suite("four-term", seed=42, budget=10**6)
    assert report["suite"] == "four-term"
    with pytest.raises(ValueError):
        run_suite("nope", 42, 10**6)

"""Acceptance criteria, each at its stated bound and time budget.

Run ``pytest tests/test_acceptance.py`` to get one PASS/FAIL line per
criterion in the terminal summary.
"""

import io
import json
import random
import time
from math import gcd

import pytest

from abpair import bilinear as bil
from abpair import oracle
from abpair.cli import main
from abpair.config import CheckConfig
from abpair.groups import FinAbGroup, census, is_isomorphic
from abpair.tensor import canonical_map, primary_tensor_formula, tensor_product


CONFIG = CheckConfig()


def criterion(n, title):
    return pytest.mark.criterion(n, title)


def run_check(name, detail):
    report = CONFIG.run(name)
    detail(report.summary())
    for note in report.notes:
        detail(note)
    assert report.ok, report.failures[:5]
    assert report.instances_checked > 0
    assert CONFIG.within_budget(name, report), f"{report.elapsed:.2f}s over budget"
    return report


@criterion(1, "cyclic tensor law, 1 <= a, b <= 50")
def test_cyclic_tensor_law(detail):
    start = time.perf_counter()
    for a in range(1, 51):
        for b in range(1, 51):
            g = gcd(a, b)
            T = tensor_product(FinAbGroup((a,)), FinAbGroup((b,))).product
            assert T.factors == ((g,) if g > 1 else ())
            assert census(T) == census(FinAbGroup((g,)))
    elapsed = time.perf_counter() - start
    detail(f"2500 pairs in {elapsed:.2f}s, budget 1s")
    assert elapsed < 1.0


@criterion(2, "tensor product vs primary formula, 200 random pairs of order <= 512")
def test_general_vs_primary_formula(detail):
    rng = random.Random(512)
    pool = oracle.factor_lists(512)
    start = time.perf_counter()
    by_census = 0
    for _ in range(200):
        A, B = rng.choice(pool), rng.choice(pool)
        T = tensor_product(A, B).product
        F = primary_tensor_formula(A, B)
        if T.order <= 1 << 12:
            by_census += 1
            assert census(T) == census(F), (A, B)
        else:
            assert is_isomorphic(T, F), (A, B)
    elapsed = time.perf_counter() - start
    detail(f"200 pairs ({by_census} by element-order census, rest by invariant factors) "
           f"in {elapsed:.2f}s, budget 10s")
    assert elapsed < 10.0


@pytest.mark.slow
@criterion(3, "|Bil(A x B, C)| = |Hom(A (x) B, C)| = prod gcd, |A|,|B| <= 36, C in Z2..Z12")
def test_counting_identity(detail):
    run_check("counts", detail)


@pytest.mark.slow
@criterion(4, "non-degeneracy criteria (i)-(iv)")
def test_nondegeneracy_criteria(detail):
    run_check("nondeg", detail)


@criterion(5, "pairings Z_a x Z_a -> Z_a: phi(a) of them, powers of the canonical map, unit group")
def test_pairing_census(detail):
    run_check("pairings", detail)


@pytest.mark.slow
@criterion(6, "dividing out the kernels, |A|,|B| <= 16, |C| <= 8")
def test_divide_out_kernels(detail):
    run_check("quotients", detail)
    detail("NOT exhaustive: signatures over the cap are sampled, see the note above")


@pytest.mark.slow
@criterion(7, "duality pairing symmetric, non-degenerate, |A| characters, |A| <= 100")
def test_duality(detail):
    run_check("duality", detail)


@pytest.mark.slow
@criterion(8, "universal property, |A|,|B| <= 12, |C| <= 6")
def test_universal_property(detail):
    run_check("universal", detail)


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    return main(list(argv), out, err), out.getvalue()


@criterion(9, "CLI goldens and lossless quotient round-trip")
def test_cli_goldens(tmp_path, detail):
    code, out = _cli("tensor", "Z6", "Z4")
    assert (code, out.splitlines()[0]) == (0, "Z2")
    code, out = _cli("pairings", "6")
    assert (code, out.strip()) == (0, "2")
    code, out = _cli("nondeg", "Z4", "Z2")
    assert code == 1 and "verdict: degenerate" in out.splitlines()
    pairings = [canonical_map(FinAbGroup((8, 2)), FinAbGroup((8, 2))),
                dict(bil.cyclic_pairings(12))[5]]
    for k, f in enumerate(pairings):
        src, dst = tmp_path / f"in{k}.json", tmp_path / f"out{k}.json"
        src.write_text(json.dumps(f.to_dict(), sort_keys=True) + "\n")
        assert _cli("quotient", str(src), "-o", str(dst))[0] == 0
        assert dst.read_bytes() == src.read_bytes()
    detail("3 goldens, 2 quotient round-trips byte-identical")

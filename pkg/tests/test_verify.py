import json

import pytest

from superhv import verify
from superhv.algebra import generators_in_window
from superhv.omega import OmegaParams
from superhv.poly import UniPoly
from superhv.sampling import rand_supervector, rng


@pytest.mark.parametrize("name", sorted(verify.SUITES))
def test_small_suites_pass(name):
    small = {
        "relations": dict(n_beta=1, n_vectors=3),
        "lemma32": dict(n_beta=1, n_vectors=1, max_i=2),
        "submodule": dict(n_g=2),
        "isomorphism": dict(samples=3),
        "subalgebra": dict(samples=2),
        "weighting": dict(n=2),
        "jacobi": dict(window=(-3, 3)),
    }[name]
    if name != "jacobi":
        small["seed"] = 7
    rep = verify.SUITES[name](**small)
    assert rep.ok and rep.checks > 0
    assert rep.line().startswith(name)
    json.dumps(rep.as_dict())


def test_python_checker_detects_broken_table():
    gens = generators_in_window(-2, 2)
    table = verify.pair_table(gens)
    ia, ib, sign, c, ix, x = table[7]
    table[7] = (ia, ib, sign, c * 3 + 1, ix, x)
    p = OmegaParams(UniPoly({0: 1, 2: 1}))
    v = rand_supervector(rng(1))
    while v.is_zero():
        v = rand_supervector(rng(2))
    _, bad = verify.bracket_axiom_on(v, p, gens, table)
    assert bad == (gens[ia], gens[ib])


def test_report_failure_line():
    rep = verify.Report("demo")
    rep.checks = 3
    rep.failure = "broken"
    assert not rep.ok and "FAIL" in rep.line() and "broken" in rep.line()

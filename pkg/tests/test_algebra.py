from fractions import Fraction

import pytest

import oracle
from superhv.algebra import (
    AlgebraElement,
    G,
    Generator,
    H,
    IndexParityError,
    L,
    Q,
    bracket,
    generators_in_window,
    jacobi_residual,
    parity,
)

h = Fraction(1, 2)


def el(*pairs):
    return AlgebraElement({g: c for g, c in pairs})


def as_oracle(a: AlgebraElement) -> dict:
    return {(g.kind, oracle.rat(g.idx)): oracle.from_scalar(c) for g, c in a.items()}


def test_bracket_witt():
    assert bracket(L(2), L(3)) == el((L(5), -1))


def test_bracket_gg():
    assert bracket(G(h), G(3 * h)) == el((L(2), 2))


def test_bracket_hq_vanishes():
    assert bracket(H(2), Q(h)) == AlgebraElement()


def test_bracket_lq():
    assert bracket(L(1), Q(h)) == el((Q(3 * h), -1))


@pytest.mark.parametrize("triple", [(L(1), L(2), L(3)), (G(h), G(h), L(1)), (H(1), G(h), Q(-h))])
def test_jacobi_examples(triple):
    assert jacobi_residual(*triple) == AlgebraElement()


def test_parity_examples():
    assert parity(L(3)) == "even"
    assert parity(Q(h)) == "odd"
    assert parity(el((L(1), 1), (G(h), 1))) == "mixed"


def test_index_parity():
    with pytest.raises(IndexParityError):
        G(1)
    with pytest.raises(IndexParityError):
        H(h)


def test_window_size():
    gens = generators_in_window(-6, 6)
    assert len(gens) == 26
    assert {g.kind for g in gens if g.index.doubled == 5} == {"G", "Q"}


def test_table_matches_oracle():
    gens = generators_in_window(-6, 6)
    for a in gens:
        for b in gens:
            got = as_oracle(bracket(a, b))
            want = oracle.table((a.kind, a.idx), (b.kind, b.idx))
            assert got == want, (a, b)


def test_h0_central():
    for g in generators_in_window(-6, 6):
        assert bracket(H(0), g) == AlgebraElement()


def test_basis_bracket_single_term():
    gens = generators_in_window(-6, 6)
    assert all(len(bracket(a, b).terms) <= 1 for a in gens for b in gens)


def test_mixed_parity_bilinear():
    a = el((L(1), 2), (G(h), 1))
    b = el((G(-h), 3))
    assert bracket(a, b) == bracket(L(1), G(-h)) * 6 + bracket(G(h), G(-h)) * 3


def test_render():
    assert str(el((L(5), -1))) == "-L[5]"
    assert str(Generator("G", Fraction(-3, 2))) == "G[-3/2]"

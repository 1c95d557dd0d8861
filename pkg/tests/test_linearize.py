import itertools

import pytest
from hypothesis import given, settings

from conftest import CASES
from fnq import autf, orders
from fnq.groups.elements import FpMatrix
from fnq.linearize import (
    abelianize,
    det_sign,
    determinant,
    identity_matrix,
    matmul,
    mod_p,
    natural_image_group,
    natural_image_order,
    saut_generators,
    to_json,
)
from test_autf import GENS, RANK, build, words


def test_abelianize_examples():
    assert abelianize(autf.rho(3, 1, 2)) == ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    assert abelianize(autf.eps(3, 1)) == ((-1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert abelianize(autf.sig(3, 1, 2)) == ((0, 1, 0), (1, 0, 0), (0, 0, 1))


def test_square_of_transvection():
    r = autf.rho(3, 1, 2)
    assert abelianize(autf.compose(r, r)) == ((1, 2, 0), (0, 1, 0), (0, 0, 1))


def test_det_sign_examples():
    assert det_sign(autf.eps(3, 1)) == -1
    assert det_sign(autf.product(autf.eps(3, 1), autf.eps(3, 2))) == 1
    assert det_sign(autf.delta(4)) == 1
    assert det_sign(autf.delta(3)) == -1
    assert det_sign(autf.gamma(5)) == 1


def test_saut_generators_have_det_one():
    assert all(det_sign(f) == 1 for f in saut_generators(4))


def test_determinant_oracle():
    # Leibniz expansion as an independent oracle
    m = ((2, -1, 0, 3), (1, 4, -2, 0), (0, 5, 1, -1), (3, 0, 2, 2))

    def leibniz(a):
        n = len(a)
        total = 0
        for perm in itertools.permutations(range(n)):
            inv = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
            term = (-1) ** inv
            for i in range(n):
                term *= a[i][perm[i]]
            total += term
        return total

    assert determinant(m) == leibniz(m)
    assert determinant(((0, 1), (1, 0))) == -1
    assert determinant(identity_matrix(5)) == 1


def test_mod_p_examples():
    assert mod_p(abelianize(autf.eps(3, 1)), 2) == FpMatrix.identity(2, 3)
    e = mod_p(abelianize(autf.rho(3, 1, 2)), 2)
    assert e.rows() == [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    two = mod_p(((2, 0), (0, 2)), 3)
    assert two.rows() == [[2, 0], [0, 2]] and two.det() == 1
    with pytest.raises(ValueError):
        mod_p(identity_matrix(2), 4)
    assert to_json(two) == [[2, 0], [0, 2]]


@pytest.mark.parametrize("n,p,expected", [(2, 2, 6), (3, 2, 168), (2, 3, 12), (2, 5, 60), (3, 3, 5616)])
def test_natural_image_orders(n, p, expected):
    assert natural_image_order(n, p) == expected


def test_natural_image_l42_matches_formula():
    G = natural_image_group(4, 2)
    assert G.order == 20160 == orders.ln2(4).value == orders.alternating_order(8).value


def test_rho_images_generate_ln2():
    from fnq.groups.core import closure

    for n in (3, 4):
        mats = [mod_p(abelianize(autf.rho(n, i, j)), 2) for i, j in itertools.permutations(range(1, n + 1), 2)]
        assert closure(mats).order == orders.ln2(n).value


@settings(max_examples=CASES)
@given(words, words)
def test_abelianize_reverses_products(a, b):
    f, g = build(a), build(b)
    assert abelianize(autf.compose(f, g)) == matmul(abelianize(g), abelianize(f))


@settings(max_examples=CASES)
@given(words, words)
def test_det_sign_multiplicative(a, b):
    f, g = build(a), build(b)
    assert det_sign(autf.compose(f, g)) == det_sign(f) * det_sign(g)
    # odd-sign generators: everything but the transvections (delta is odd at rank 3)
    odd = sum(1 for k, _ in a if det_sign(GENS[k]) == -1)
    assert det_sign(f) == (-1) ** odd
    assert RANK == 3

"""Oracle sanity: frozen hand-computed values for the naive recomputation
paths, plus their guard rails."""

import pytest

from jonesdim.oracle import (
    char_product_decompose,
    enumerate_paths,
    transfer_matrix_count,
)
from jonesdim.root_data import AlcoveParams, Family, make_root_system

MOD5 = AlcoveParams.modular(5)
MOD7 = AlcoveParams.modular(7)
Q10 = AlcoveParams.quantum(10)

PATH_CASES = [
    (Family.A_GL, 2, MOD5, 2, (1, 1), 1),
    (Family.A_GL, 2, MOD5, 2, (2, 0), 1),
    (Family.A_GL, 2, MOD5, 4, (3, 1), 3),
    (Family.A_GL, 2, MOD5, 4, (2, 2), 2),
    (Family.A_GL, 5, MOD5, 3, (1, 1, 1, 0, 0), 0),
    (Family.C, 1, MOD7, 2, (0,), 1),
    (Family.C, 1, MOD7, 7, (3,), 14),
    (Family.C, 2, MOD7, 4, (2, 0), 6),
    (Family.C, 2, Q10, 4, (1, 1), 5),
    (Family.C, 2, Q10, 7, (2, 1), 62),
    (Family.D, 1, MOD7, 4, (2,), 3),
    (Family.D, 2, MOD7, 4, (2, 0), 9),
    (Family.D, 3, MOD7, 4, (1, 1, 0), 7),
]


@pytest.mark.parametrize("family,rank,params,r,target,expected", PATH_CASES)
def test_enumerate_paths_frozen(family, rank, params, r, target, expected):
    spec = make_root_system(family, rank)
    assert enumerate_paths(spec, params, r, target) == expected


def test_enumerate_paths_rejects_family_b():
    spec = make_root_system(Family.B, 1)
    with pytest.raises(ValueError):
        enumerate_paths(spec, MOD7, 2, (0,))


def test_enumerate_paths_level_guard():
    spec = make_root_system(Family.C, 1)
    with pytest.raises(ValueError):
        enumerate_paths(spec, MOD7, 15, (1,))


CHAIN4 = {0: [1], 1: [0, 2], 2: [1, 3], 3: [2]}
LOOPY3 = {0: [1], 1: [0, 1, 2], 2: [1, 2]}


def test_transfer_matrix_chain():
    states = [0, 1, 2, 3]
    assert transfer_matrix_count(states, CHAIN4, 0, 0) == 1
    assert transfer_matrix_count(states, CHAIN4, 8, 0) == 13
    assert transfer_matrix_count(states, CHAIN4, 10, 0) == 34
    assert transfer_matrix_count(states, CHAIN4, 10, 2) == 55


def test_transfer_matrix_with_loops():
    states = [0, 1, 2]
    assert transfer_matrix_count(states, LOOPY3, 3, 1) == 3
    assert transfer_matrix_count(states, LOOPY3, 4, 0) == 3
    assert transfer_matrix_count(states, LOOPY3, 4, 1) == 6
    assert transfer_matrix_count(states, LOOPY3, 4, 2) == 5


def test_transfer_matrix_errors():
    with pytest.raises(ValueError):
        transfer_matrix_count([], {}, 1, 0)
    with pytest.raises(ValueError):
        transfer_matrix_count([0, 1], {0: [1]}, 1, 7)


CHAR_CASES = [
    (Family.A_GL, 2, 4, (2, 2), 2),
    (Family.A_GL, 2, 4, (3, 1), 3),
    (Family.A_GL, 2, 4, (4, 0), 1),
    (Family.A_GL, 3, 3, (1, 1, 1), 1),
    (Family.C, 1, 3, (3,), 1),
    (Family.C, 1, 3, (1,), 2),
    (Family.C, 2, 2, (1, 1), 1),
    (Family.C, 2, 2, (2, 0), 1),
    (Family.C, 2, 2, (0, 0), 1),
    (Family.B, 1, 2, (0,), 1),
    (Family.B, 1, 2, (1,), 1),
    (Family.B, 1, 2, (2,), 1),
    (Family.B, 2, 2, (1, 1), 1),
    (Family.B, 3, 2, (1, 1, 0), 1),
    (Family.D, 1, 3, (3,), 1),
    (Family.D, 1, 3, (1,), 2),
    (Family.D, 2, 2, (1, -1), 1),
    (Family.D, 2, 2, (2, 0), 1),
    (Family.D, 3, 2, (1, 1, 0), 1),
]


@pytest.mark.parametrize("family,rank,r,target,expected", CHAR_CASES)
def test_char_product_frozen(family, rank, r, target, expected):
    spec = make_root_system(family, rank)
    assert char_product_decompose(spec, r, target) == expected


def test_char_product_conserves_dimension():
    # sum over stripped components of mult * dim must be (dim V)^r; dims for
    # these small cases are known in closed form
    spec = make_root_system(Family.C, 1)
    mults = {m: char_product_decompose(spec, 4, (m,)) for m in range(5)}
    assert sum(c * (m + 1) for m, c in mults.items()) == 2**4


def test_char_product_guards():
    with pytest.raises(ValueError):
        char_product_decompose(make_root_system(Family.C, 4), 2, (0, 0, 0, 0))
    with pytest.raises(ValueError):
        char_product_decompose(make_root_system(Family.C, 2), 7, (1, 1))

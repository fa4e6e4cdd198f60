"""Geometry layer: alcove membership, signed reflection, Weyl dimensions."""

import pytest

from jonesdim import (
    AlcoveParams,
    Family,
    alcove_contains,
    alcove_weights,
    dim_vector_rep,
    is_dominant,
    make_root_system,
    reflect_to_alcove,
    weyl_dim,
)

A2 = make_root_system(Family.A_GL, 2)
A3 = make_root_system(Family.A_GL, 3)
B1 = make_root_system(Family.B, 1)
B2 = make_root_system(Family.B, 2)
C1 = make_root_system(Family.C, 1)
C2 = make_root_system(Family.C, 2)
D1 = make_root_system(Family.D, 1)
D2 = make_root_system(Family.D, 2)
D3 = make_root_system(Family.D, 3)

P5 = AlcoveParams.modular(5)
P7 = AlcoveParams.modular(7)
Q9 = AlcoveParams.quantum(9)
Q10 = AlcoveParams.quantum(10)
Q12 = AlcoveParams.quantum(12)


def test_params_validation():
    for bad in (4, 9, 1, 0, -3, 2):
        with pytest.raises(ValueError):
            AlcoveParams.modular(bad)
    for bad in (1, 2, 3, 4, 6, 0):
        with pytest.raises(ValueError):
            AlcoveParams.quantum(bad)
    assert AlcoveParams.modular(3).p == 3
    assert AlcoveParams.quantum(5).ell == 5


def test_params_ell_prime():
    assert Q9.ell_prime == 9
    assert Q10.ell_prime == 5
    assert Q12.ell_prime == 6
    with pytest.raises(ValueError):
        _ = P5.ell
    with pytest.raises(ValueError):
        _ = Q10.p


def test_root_system_data():
    assert A3.rho2 == (6, 4, 2)
    assert B2.rho2 == (3, 1)
    assert C2.rho2 == (4, 2)
    assert D3.rho2 == (4, 2, 0)
    assert D1.rho2 == (0,)
    assert (A3.coxeter_number, B2.coxeter_number) == (3, 4)
    assert (C2.coxeter_number, D3.coxeter_number) == (4, 4)
    assert dim_vector_rep(A3) == 3
    assert dim_vector_rep(B2) == 5
    assert dim_vector_rep(C2) == 4
    assert dim_vector_rep(D3) == 6
    assert dim_vector_rep(D1) == 2
    with pytest.raises(ValueError):
        make_root_system(Family.C, 0)


def test_dominance():
    assert is_dominant(A2, (3, 1))
    assert is_dominant(A2, (2, -1))
    assert not is_dominant(A2, (1, 3))
    assert is_dominant(C2, (2, 0))
    assert not is_dominant(C2, (1, -1))
    assert is_dominant(B2, (2, 1))
    assert is_dominant(D2, (2, -1))
    assert not is_dominant(D2, (1, -2))
    assert is_dominant(D1, (3,))
    assert not is_dominant(D1, (-1,))
    with pytest.raises(ValueError):
        is_dominant(C2, (1, 0, 0))


CONTAINS_CASES = [
    (make_root_system(Family.A_GL, 1), P5, (99,), True),
    (A2, P5, (3, 0), True),
    (A2, P5, (4, 0), False),
    (C1, P7, (5,), True),
    (C1, P7, (6,), False),
    (C2, P7, (2, 1), True),
    (C2, P7, (3, 1), False),
    (B1, P7, (2,), True),
    (B1, P7, (3,), False),
    (B2, P7, (1, 1), True),
    (B2, P7, (2, 0), False),
    (D1, P7, (5,), True),
    (D1, P7, (6,), False),
    (D2, P7, (3, 2), True),
    (D2, P7, (3, -2), True),
    (D2, P7, (5, 1), False),
    (D3, P7, (2, 1, 1), True),
    (D3, P7, (2, 1, -1), True),
    (D3, P7, (2, 2, 0), False),
    (A2, Q12, (4, 0), True),
    (A2, Q12, (5, 0), False),
    (C1, Q10, (3,), True),
    (C1, Q10, (4,), False),
    (C2, Q10, (2, 2), True),
    (C2, Q10, (3, 0), False),
    (C2, Q9, (3, 2), True),
    (C2, Q9, (4, 2), False),
]


@pytest.mark.parametrize("spec, params, weight, expected", CONTAINS_CASES)
def test_alcove_contains(spec, params, weight, expected):
    assert alcove_contains(spec, params, weight) is expected


def test_alcove_contains_rejects_bad_input():
    with pytest.raises(ValueError):
        alcove_contains(A2, P5, (1, 3))
    with pytest.raises(ValueError):
        alcove_contains(B2, Q10, (1, 0))
    with pytest.raises(ValueError):
        alcove_contains(D2, Q10, (1, 0))


REFLECT_CASES = [
    # (spec, params, input, expected weight or None for a wall, sign)
    (A2, P5, (3, 1), (3, 1), 1),
    (A2, P5, (4, 0), None, 0),
    (A2, P5, (5, 0), (4, 1), -1),
    (C1, P7, (5,), (5,), 1),
    (C1, P7, (6,), None, 0),
    (C1, P7, (7,), (5,), -1),
    (B1, P7, (2,), (2,), 1),
    (B1, P7, (3,), None, 0),
    (B1, P7, (4,), (2,), -1),
    (D1, P7, (6,), None, 0),
    (D1, P7, (7,), (5,), -1),
    (D2, P7, (5, 3), (3, 1), -1),
    (C2, Q10, (3, 0), None, 0),
    (C2, Q10, (4, 0), (2, 0), -1),
]


@pytest.mark.parametrize("spec, params, weight, out, sign", REFLECT_CASES)
def test_reflect_frozen(spec, params, weight, out, sign):
    got = reflect_to_alcove(spec, params, weight)
    assert got.weight == out
    assert got.sign == sign
    assert got.is_wall is (out is None)


def test_reflect_chamber_only():
    # params=None activates only the finite chamber walls (dot action).
    got = reflect_to_alcove(A2, None, (1, 3))
    assert (got.weight, got.sign) == ((2, 2), -1)
    assert reflect_to_alcove(A2, None, (2, 3)).is_wall
    got = reflect_to_alcove(C2, None, (0, 1))
    assert got.is_wall
    got = reflect_to_alcove(B1, None, (-1,))
    assert (got.weight, got.sign) == ((0,), -1)


@pytest.mark.parametrize(
    "spec, params",
    [
        (A2, P5),
        (A3, P5),
        (B1, P7),
        (B2, P7),
        (C1, P7),
        (C2, P7),
        (D2, P7),
        (D3, P7),
        (A2, Q12),
        (C2, Q10),
        (C2, Q9),
    ],
)
def test_reflect_fixes_exactly_the_alcove(spec, params, bound=6):
    """A dominant weight is fixed with sign +1 iff it lies in the open
    alcove; every other dominant weight maps to a wall or a different
    interior point, and the interior results are idempotent."""
    assert alcove_weights(spec, params, bound), "alcove unexpectedly empty"

    def dominant_box(prefix):
        i = len(prefix)
        if i == spec.rank:
            w = tuple(prefix)
            if is_dominant(spec, w):
                yield w
            return
        hi = bound if not i else prefix[i - 1]
        lo = -bound if spec.family in (Family.A_GL, Family.D) else 0
        for c in range(hi, lo - 1, -1):
            yield from dominant_box(prefix + [c])

    for w in dominant_box([]):
        got = reflect_to_alcove(spec, params, w)
        if alcove_contains(spec, params, w):
            assert (got.weight, got.sign) == (w, 1)
        else:
            assert got.is_wall or got.weight != w
        if not got.is_wall:
            assert alcove_contains(spec, params, got.weight)
            again = reflect_to_alcove(spec, params, got.weight)
            assert (again.weight, again.sign) == (got.weight, 1)


WEYL_CASES = [
    (A2, (1, 0), 2),
    (A2, (1, 1), 1),
    (A2, (2, 0), 3),
    (A3, (1, 1, 0), 3),
    (A3, (2, 1, 0), 8),
    (C1, (3,), 4),
    (C2, (1, 0), 4),
    (C2, (1, 1), 5),
    (C2, (2, 0), 10),
    (B1, (0,), 1),
    (B1, (1,), 3),
    (B1, (3,), 7),
    (B2, (1, 0), 5),
    (B2, (1, 1), 10),
    (D1, (0,), 1),
    (D1, (4,), 5),
    (D2, (1, 0), 4),
    (D2, (1, 1), 3),
    (D2, (1, -1), 3),
    (D2, (2, 0), 9),
    (D3, (1, 0, 0), 6),
    (D3, (1, 1, 0), 15),
    (D3, (1, 1, 1), 10),
    (D3, (1, 1, -1), 10),
]


@pytest.mark.parametrize("spec, weight, expected", WEYL_CASES)
def test_weyl_dim_frozen(spec, weight, expected):
    assert weyl_dim(spec, weight) == expected


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(ValueError):
        weyl_dim(A2, (1, 3))


def test_vector_rep_is_weyl_consistent():
    for spec in (A2, A3, B1, B2, C1, C2, D2, D3):
        top = spec.vector_rep_weights[0]
        assert weyl_dim(spec, top) == dim_vector_rep(spec)


def test_alcove_weights_frozen():
    assert alcove_weights(C2, Q10, 4) == [
        (2, 2),
        (2, 1),
        (2, 0),
        (1, 1),
        (1, 0),
        (0, 0),
    ]
    assert alcove_weights(D2, P7, 2) == [
        (2, 0),
        (1, 1),
        (1, 0),
        (1, -1),
        (0, 0),
    ]
    assert alcove_weights(B1, P7, 10) == [(2,), (1,), (0,)]
    assert alcove_weights(C1, P7, 0) == [(0,)]


def test_alcove_weights_are_inside():
    for spec, params in ((C2, P7), (D3, P7), (B2, P7), (A3, P5), (C2, Q10)):
        ws = alcove_weights(spec, params, 5)
        assert ws == sorted(ws, reverse=True)
        for w in ws:
            assert alcove_contains(spec, params, w)
    with pytest.raises(ValueError):
        alcove_weights(C2, P7, -1)

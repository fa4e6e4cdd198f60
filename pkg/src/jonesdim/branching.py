"""Decomposition of tensor powers of the vector representation.

Two regimes share one reflection engine:

* characteristic zero: signed branching into the dominant chamber
  (delta_mults), where cancellation only matters for the odd-orthogonal
  family, whose vector representation has the weight 0;
* fusion: the same recursion confined to the open bottom alcove, either
  level-by-level (fusion_mults) or by reflecting the characteristic-zero
  answer into the alcove with signs (fusion_mults_altsum).

For the minuscule step sets (all families except B) the confined recursion
never needs a genuine reflection, so the unsigned walk
(minuscule_walk_mults) computes the same table; the test suite holds the
three routes against each other.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .root_data import (
    AlcoveParams,
    Family,
    RootSystemSpec,
    Weight,
    alcove_contains,
    is_dominant,
    reflect_to_alcove,
)

Mults = dict[Weight, int]


def _check_level(r: int) -> None:
    if r < 0:
        raise ValueError(f"level must be >= 0, got {r}")


def _add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def _delta_level(spec: RootSystemSpec, r: int) -> tuple:
    if r == 0:
        return (((0,) * spec.rank, 1),)
    acc: dict[Weight, int] = defaultdict(int)
    for mu, m in _delta_level(spec, r - 1):
        for s in spec.vector_rep_weights:
            pt = reflect_to_alcove(spec, None, _add(mu, s))
            if not pt.is_wall:
                acc[pt.weight] += pt.sign * m
    items = sorted((w, c) for w, c in acc.items() if c != 0)
    if any(c < 0 for _, c in items):
        raise AssertionError(f"negative branching multiplicity at level {r}")
    return tuple(items)


def delta_mults(spec: RootSystemSpec, r: int) -> Mults:
    """Multiplicities of the irreducible summands of the r-th tensor power
    of the vector representation in characteristic zero."""
    _check_level(r)
    return dict(_delta_level(spec, r))


@lru_cache(maxsize=None)
def _fusion_step_items(
    spec: RootSystemSpec, params: AlcoveParams, weight: Weight
) -> tuple:
    if not alcove_contains(spec, params, weight):
        raise ValueError(f"weight {weight} is not in the open alcove")
    acc: dict[Weight, int] = defaultdict(int)
    for s in spec.vector_rep_weights:
        pt = reflect_to_alcove(spec, params, _add(weight, s))
        if not pt.is_wall:
            acc[pt.weight] += pt.sign
    return tuple(sorted((w, c) for w, c in acc.items() if c != 0))


def fusion_step(
    spec: RootSystemSpec, params: AlcoveParams, weight: Weight
) -> Mults:
    """Signed fusion of one vector-representation step applied to an alcove
    weight; entries with net multiplicity zero are dropped."""
    return dict(_fusion_step_items(spec, params, weight))


@lru_cache(maxsize=None)
def _fusion_level(spec: RootSystemSpec, params: AlcoveParams, r: int) -> tuple:
    zero = (0,) * spec.rank
    if r == 0:
        if is_dominant(spec, zero) and alcove_contains(spec, params, zero):
            return ((zero, 1),)
        return ()
    acc: dict[Weight, int] = defaultdict(int)
    for lam, m in _fusion_level(spec, params, r - 1):
        for w, c in _fusion_step_items(spec, params, lam):
            acc[w] += c * m
    items = sorted((w, c) for w, c in acc.items() if c != 0)
    if any(c < 0 for _, c in items):
        raise AssertionError(f"negative fusion multiplicity at level {r}")
    return tuple(items)


def fusion_mults(spec: RootSystemSpec, params: AlcoveParams, r: int) -> Mults:
    """Alcove-confined multiplicities at level r, computed level by level
    from {0: 1}."""
    _check_level(r)
    return dict(_fusion_level(spec, params, r))


def fusion_mults_altsum(
    spec: RootSystemSpec, params: AlcoveParams, r: int
) -> Mults:
    """Same table as fusion_mults, but obtained in one shot by reflecting
    the characteristic-zero decomposition into the alcove with signs."""
    _check_level(r)
    acc: dict[Weight, int] = defaultdict(int)
    for mu, m in _delta_level(spec, r):
        pt = reflect_to_alcove(spec, params, mu)
        if not pt.is_wall:
            acc[pt.weight] += pt.sign * m
    out = {w: c for w, c in sorted(acc.items()) if c != 0}
    if any(c < 0 for c in out.values()):
        raise AssertionError(f"negative alternating sum at level {r}")
    return out


def minuscule_walk_mults(
    spec: RootSystemSpec, params: AlcoveParams, r: int
) -> Mults:
    """Unsigned confined walk: keep a step if it lands on a dominant alcove
    weight, drop it otherwise.  Exact for minuscule step sets; family B is
    rejected because its zero step requires signed cancellation."""
    if spec.family is Family.B:
        raise ValueError(
            "the unsigned walk is not valid for family B; use fusion_mults"
        )
    _check_level(r)
    zero = (0,) * spec.rank
    cur: dict[Weight, int] = {}
    if is_dominant(spec, zero) and alcove_contains(spec, params, zero):
        cur[zero] = 1
    for _ in range(r):
        nxt: dict[Weight, int] = defaultdict(int)
        for w, m in cur.items():
            for s in spec.vector_rep_weights:
                cand = _add(w, s)
                if is_dominant(spec, cand) and alcove_contains(spec, params, cand):
                    nxt[cand] += m
        cur = dict(sorted(nxt.items()))
    return dict(cur)

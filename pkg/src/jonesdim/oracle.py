"""Independent brute-force oracles for cross-checking the fusion engines.

Everything here is deliberately naive and shares no reflection code with
root_data/branching: dominance and alcove membership are re-stated as plain
inequalities, multiplicities come from exhaustive path enumeration, matrix
iteration, or full character arithmetic.  Guards keep the exponential blow-up
in check; callers outside the guarded ranges get a hard error, never a slow
or wrong answer.
"""

from __future__ import annotations

import itertools
from collections import Counter

from .root_data import AlcoveParams, Family, RootSystemSpec, Weight

_MAX_ENUM_LEVEL = 14
_MAX_CHAR_LEVEL = 6
_MAX_CHAR_RANK = 3


def _odom(family: Family, rank: int, w: tuple[int, ...]) -> bool:
    if family is Family.A_GL:
        return all(w[i] >= w[i + 1] for i in range(rank - 1))
    if family in (Family.B, Family.C):
        return all(w[i] >= w[i + 1] for i in range(rank - 1)) and w[-1] >= 0
    if rank == 1:
        return w[0] >= 0
    return (
        all(w[i] >= w[i + 1] for i in range(rank - 2))
        and w[rank - 2] >= abs(w[rank - 1])
    )


def _oalcove(
    family: Family, rank: int, params: AlcoveParams, w: tuple[int, ...]
) -> bool:
    n = rank
    if params.mode == "modular":
        p = params.p
        if family is Family.A_GL:
            return n == 1 or w[0] - w[-1] <= p - n
        if family is Family.C:
            return w[0] <= p - 2 if n == 1 else w[0] + w[1] <= p - 2 * n
        if family is Family.B:
            return 2 * w[0] <= p - 2 * n
        if n == 1:
            return w[0] <= p - 2
        if n == 2:
            return w[0] + w[1] <= p - 2 and w[0] - w[1] <= p - 2
        return w[0] + w[1] <= p - 2 * n + 2
    ell = params.ell
    ellp = params.ell_prime
    if family is Family.A_GL:
        return n == 1 or w[0] - w[-1] <= ellp - n
    if family is Family.C:
        if ell % 2 == 1:
            return w[0] <= ell - 2 if n == 1 else w[0] + w[1] <= ell - 2 * n
        return w[0] <= ellp - n - 1
    raise ValueError(f"no quantum alcove for family {family.value}")


def enumerate_paths(
    spec: RootSystemSpec, params: AlcoveParams, r: int, target: Weight
) -> int:
    """Count length-r step sequences from 0 to target that stay inside the
    alcove at every level.  Exhaustive depth-first search; minuscule step
    sets only (the zero step of family B needs signs, which a raw path count
    cannot see)."""
    if spec.family is Family.B:
        raise ValueError("path enumeration is not valid for family B")
    if r > _MAX_ENUM_LEVEL:
        raise ValueError(f"enumerate_paths is guarded to r <= {_MAX_ENUM_LEVEL}")
    if r < 0:
        raise ValueError("r must be >= 0")
    fam, n = spec.family, spec.rank
    steps = spec.vector_rep_weights
    zero = (0,) * n
    if not (_odom(fam, n, zero) and _oalcove(fam, n, params, zero)):
        return 0

    count = 0

    def walk(pos: tuple[int, ...], depth: int) -> None:
        nonlocal count
        if depth == r:
            count += pos == target
            return
        for s in steps:
            nxt = tuple(a + b for a, b in zip(pos, s))
            if _odom(fam, n, nxt) and _oalcove(fam, n, params, nxt):
                walk(nxt, depth + 1)

    walk(zero, 0)
    return count


def transfer_matrix_count(
    states: list, adjacency: dict, r: int, target
) -> int:
    """Count length-r walks on an explicit digraph from states[0] to target
    by iterating the adjacency map on a counting vector."""
    if not states:
        raise ValueError("state list must be nonempty")
    if r < 0:
        raise ValueError("r must be >= 0")
    if target not in states:
        raise ValueError(f"target {target} is not a listed state")
    vec = {s: 0 for s in states}
    vec[states[0]] = 1
    for _ in range(r):
        nxt = {s: 0 for s in states}
        for s, c in vec.items():
            if c == 0:
                continue
            for t in adjacency.get(s, ()):
                nxt[t] += c
        vec = nxt
    return vec[target]


def _sign_patterns(family: Family, rank: int):
    if family is Family.A_GL:
        yield (1,) * rank
        return
    if family is Family.D and rank > 1:
        for pat in itertools.product((1, -1), repeat=rank):
            if pat.count(-1) % 2 == 0:
                yield pat
        return
    yield from itertools.product((1, -1), repeat=rank)


def _weyl_group(family: Family, rank: int):
    """All (permutation, signs, det) elements of the finite Weyl group acting
    on epsilon-coordinates.  Rank-1 family D is treated as the rank-1 chain
    with the full sign group."""
    out = []
    for perm in itertools.permutations(range(rank)):
        inv = sum(
            1
            for a in range(rank)
            for b in range(a + 1, rank)
            if perm[a] > perm[b]
        )
        psign = -1 if inv % 2 else 1
        for signs in _sign_patterns(family, rank):
            det = psign * (-1 if signs.count(-1) % 2 else 1)
            out.append((perm, signs, det))
    return out


def _apply(perm, signs, x):
    return tuple(signs[i] * x[perm[i]] for i in range(len(x)))


def _orbit_sum(group, x) -> Counter:
    acc: Counter = Counter()
    for perm, signs, det in group:
        acc[_apply(perm, signs, x)] += det
    return Counter({e: c for e, c in acc.items() if c})


def _divide_leading(numerator: Counter, denominator: Counter) -> Counter:
    """Exact division of sparse Laurent polynomials by repeated elimination
    of the lexicographically largest term."""
    den_lead = max(denominator)
    den_coeff = denominator[den_lead]
    quotient: Counter = Counter()
    work = Counter(numerator)
    while work:
        lead = max(work)
        coeff = work[lead]
        if coeff % den_coeff != 0:
            raise AssertionError("character division failed")
        q_exp = tuple(a - b for a, b in zip(lead, den_lead))
        q_coeff = coeff // den_coeff
        quotient[q_exp] += q_coeff
        for exp, c in denominator.items():
            shifted = tuple(a + b for a, b in zip(exp, q_exp))
            work[shifted] -= c * q_coeff
        work = Counter({e: c for e, c in work.items() if c})
    return quotient


def _char_weight_multiset(
    family: Family, rank: int, rho2: Weight, mu: Weight
) -> Counter:
    """Weight multiset of the irreducible with highest weight mu, from the
    ratio of alternating orbit sums in doubled coordinates."""
    group = _weyl_group(family, rank)
    x_mu = tuple(2 * c + s for c, s in zip(mu, rho2))
    x_0 = tuple(rho2)
    numerator = _orbit_sum(group, x_mu)
    denominator = _orbit_sum(group, x_0)
    quotient = _divide_leading(numerator, denominator)
    weights: Counter = Counter()
    for exp, c in quotient.items():
        if any(e % 2 for e in exp):
            raise AssertionError("character quotient has odd exponents")
        weights[tuple(e // 2 for e in exp)] += c
    if any(c < 0 for c in weights.values()):
        raise AssertionError("character has a negative weight multiplicity")
    return weights


def char_product_decompose(spec: RootSystemSpec, r: int, target: Weight) -> int:
    """Multiplicity of the irreducible with highest weight target inside the
    r-th tensor power of the vector representation, by expanding the full
    weight multiset and greedily stripping highest weights."""
    if spec.rank > _MAX_CHAR_RANK or r > _MAX_CHAR_LEVEL:
        raise ValueError(
            f"char_product_decompose is guarded to rank <= {_MAX_CHAR_RANK},"
            f" r <= {_MAX_CHAR_LEVEL}"
        )
    if r < 0:
        raise ValueError("r must be >= 0")
    fam, n = spec.family, spec.rank
    rho2 = (2,) if (fam is Family.D and n == 1) else spec.rho2
    total: Counter = Counter({(0,) * n: 1})
    for _ in range(r):
        nxt: Counter = Counter()
        for w, c in total.items():
            for s in spec.vector_rep_weights:
                nxt[tuple(a + b for a, b in zip(w, s))] += c
        total = nxt
    found = 0
    while total:
        lead = max(total)
        coeff = total[lead]
        if not _odom(fam, n, lead) or coeff <= 0:
            raise AssertionError(
                f"decomposition failed at {lead} with coefficient {coeff}"
            )
        for w, c in _char_weight_multiset(fam, n, rho2, lead).items():
            total[w] -= coeff * c
        if any(c < 0 for c in total.values()):
            raise AssertionError("negative multiplicity while stripping")
        total = +total
        if lead == target:
            found = coeff
    return found

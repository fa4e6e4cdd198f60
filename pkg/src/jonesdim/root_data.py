"""Root-system data, alcove geometry and exact Weyl dimension formulas.

Weights are integer tuples in epsilon-coordinates.  All reflection geometry
runs in doubled shifted coordinates x = 2*weight + rho2, where rho2 is twice
the half-sum of positive roots; doubling keeps every wall pairing integral
even for the odd-orthogonal family, whose rho is half-integral.

Supported families:
  A-GL  general linear, weights are weakly decreasing integer tuples
  B     odd orthogonal SO(2n+1)
  C     symplectic Sp(2n)
  D     even orthogonal O(2n); the last coordinate may be negative

The degenerate rank-1 even-orthogonal case is handled as the usual rank-1
chain (two-dimensional vector representation, dominance weight >= 0,
dimension weight + 1); its stored rho2 keeps the general-formula value but
the geometry uses the shifted chain coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

Weight = tuple[int, ...]

# Affine reflections strictly decrease the number of walls separating a point
# from the fundamental alcove, so this cap is never reached for sane inputs.
_REFLECT_CAP = 100_000


class Family(Enum):
    A_GL = "A-GL"
    B = "B"
    C = "C"
    D = "D"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class AlcoveParams:
    """Either a modular parameter p (odd prime) or a quantum order ell."""

    mode: str  # "modular" | "quantum"
    value: int

    @staticmethod
    def modular(p: int) -> "AlcoveParams":
        if not (_is_prime(p) and p >= 3):
            raise ValueError(f"modular parameter must be a prime >= 3, got {p}")
        return AlcoveParams("modular", p)

    @staticmethod
    def quantum(ell: int) -> "AlcoveParams":
        if ell < 5 or ell == 6:
            raise ValueError(
                f"quantum order must be an integer >= 5 and != 6, got {ell}"
            )
        return AlcoveParams("quantum", ell)

    @property
    def p(self) -> int:
        if self.mode != "modular":
            raise ValueError("not a modular parameter")
        return self.value

    @property
    def ell(self) -> int:
        if self.mode != "quantum":
            raise ValueError("not a quantum parameter")
        return self.value

    @property
    def ell_prime(self) -> int:
        ell = self.ell
        return ell if ell % 2 == 1 else ell // 2


@dataclass(frozen=True)
class RootSystemSpec:
    family: Family
    rank: int
    rho2: Weight
    coxeter_number: int
    vector_rep_weights: tuple[Weight, ...]


@dataclass(frozen=True)
class SignedAlcovePoint:
    """Result of reflecting a weight: either a wall hit or an interior
    weight together with the parity of the reflections used."""

    weight: Weight | None
    sign: int

    @staticmethod
    def wall() -> "SignedAlcovePoint":
        return SignedAlcovePoint(None, 0)

    @staticmethod
    def interior(weight: Weight, sign: int) -> "SignedAlcovePoint":
        return SignedAlcovePoint(weight, sign)

    @property
    def is_wall(self) -> bool:
        return self.weight is None


def _unit(n: int, i: int, value: int = 1) -> Weight:
    e = [0] * n
    e[i] = value
    return tuple(e)


def make_root_system(family: Family, rank: int) -> RootSystemSpec:
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    n = rank
    plus = tuple(_unit(n, i) for i in range(n))
    minus = tuple(_unit(n, i, -1) for i in range(n))
    if family is Family.A_GL:
        rho2 = tuple(2 * (n - i) for i in range(n))
        return RootSystemSpec(family, n, rho2, n, plus)
    if family is Family.B:
        rho2 = tuple(2 * (n - i) - 1 for i in range(n))
        return RootSystemSpec(family, n, rho2, 2 * n, plus + ((0,) * n,) + minus)
    if family is Family.C:
        rho2 = tuple(2 * (n - i) for i in range(n))
        return RootSystemSpec(family, n, rho2, 2 * n, plus + minus)
    if family is Family.D:
        rho2 = tuple(2 * (n - i) - 2 for i in range(n))
        return RootSystemSpec(family, n, rho2, 2 * n - 2, plus + minus)
    raise ValueError(f"unknown family {family!r}")


def dim_vector_rep(spec: RootSystemSpec) -> int:
    return len(spec.vector_rep_weights)


def _check_weight(spec: RootSystemSpec, weight: Weight) -> None:
    if len(weight) != spec.rank:
        raise ValueError(
            f"weight {weight} has length {len(weight)}, expected rank {spec.rank}"
        )
    if not all(isinstance(c, int) for c in weight):
        raise ValueError(f"weight {weight} must have integer entries")


def is_dominant(spec: RootSystemSpec, weight: Weight) -> bool:
    _check_weight(spec, weight)
    fam, n = spec.family, spec.rank
    if fam is Family.A_GL:
        return all(weight[i] >= weight[i + 1] for i in range(n - 1))
    if fam in (Family.B, Family.C):
        return (
            all(weight[i] >= weight[i + 1] for i in range(n - 1))
            and weight[-1] >= 0
        )
    # family D
    if n == 1:
        return weight[0] >= 0
    return (
        all(weight[i] >= weight[i + 1] for i in range(n - 2))
        and weight[n - 2] >= abs(weight[n - 1])
    )


def _require_reflection_family(spec: RootSystemSpec, params: AlcoveParams) -> None:
    if params.mode == "quantum" and spec.family in (Family.B, Family.D):
        raise ValueError(
            "no quantum alcove is defined for the orthogonal families B and D"
        )


def alcove_contains(spec: RootSystemSpec, params: AlcoveParams, weight: Weight) -> bool:
    """Membership of a dominant weight in the open bottom alcove."""
    if not is_dominant(spec, weight):
        raise ValueError(f"weight {weight} is not dominant for {spec.family.value}")
    _require_reflection_family(spec, params)
    fam, n = spec.family, spec.rank
    if params.mode == "modular":
        p = params.p
        if fam is Family.A_GL:
            return True if n == 1 else weight[0] - weight[-1] <= p - n
        if fam is Family.C:
            if n == 1:
                return weight[0] <= p - 2
            return weight[0] + weight[1] <= p - 2 * n
        if fam is Family.B:
            return 2 * weight[0] <= p - 2 * n
        # family D
        if n == 1:
            return weight[0] <= p - 2
        if n == 2:
            return weight[0] + weight[1] <= p - 2 and weight[0] - weight[1] <= p - 2
        return weight[0] + weight[1] <= p - 2 * n + 2
    ell, ellp = params.ell, params.ell_prime
    if fam is Family.A_GL:
        return True if n == 1 else weight[0] - weight[-1] <= ellp - n
    # family C
    if ell % 2 == 1:
        if n == 1:
            return weight[0] <= ell - 2
        return weight[0] + weight[1] <= ell - 2 * n
    return weight[0] <= ellp - n - 1


def _doubled_shift(spec: RootSystemSpec) -> Weight:
    if spec.family is Family.D and spec.rank == 1:
        return (2,)
    return spec.rho2


def _forms(
    spec: RootSystemSpec, params: AlcoveParams | None
) -> tuple[tuple[str, int, int, int | None], ...]:
    """Positive-root pairing forms (kind, i, j, wall modulus) in doubled
    coordinates; modulus None means chamber walls only (value == 0)."""
    fam, n = spec.family, spec.rank
    if params is None:
        m_pair = m_single = None
    elif params.mode == "modular":
        m_pair = 2 * params.p
        m_single = params.p if fam is Family.B else 2 * params.p
    elif fam is Family.A_GL:
        m_pair = m_single = 2 * params.ell_prime
    elif params.ell % 2 == 1:
        m_pair = m_single = 2 * params.ell
    else:
        m_pair = 2 * params.ell
        m_single = params.ell
    forms: list[tuple[str, int, int, int | None]] = []
    for i in range(n):
        for j in range(i + 1, n):
            forms.append(("diff", i, j, m_pair))
            if fam in (Family.B, Family.C, Family.D):
                forms.append(("sum", i, j, m_pair))
    if fam in (Family.B, Family.C) or (fam is Family.D and n == 1):
        for i in range(n):
            forms.append(("single", i, 0, m_single))
    return tuple(forms)


def _form_value(kind: str, i: int, j: int, x: list[int]) -> int:
    if kind == "diff":
        return x[i] - x[j]
    if kind == "sum":
        return x[i] + x[j]
    return x[i]


def _dominance_pass(spec: RootSystemSpec, x: list[int]) -> int:
    """Apply finite Weyl reflections until x is weakly dominant; returns the
    accumulated sign (-1 per reflection)."""
    fam, n = spec.family, spec.rank
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if x[i] < x[i + 1]:
                x[i], x[i + 1] = x[i + 1], x[i]
                sign = -sign
                changed = True
        if fam in (Family.B, Family.C) or (fam is Family.D and n == 1):
            if x[-1] < 0:
                x[-1] = -x[-1]
                sign = -sign
                changed = True
        elif fam is Family.D:
            if x[-2] + x[-1] < 0:
                x[-2], x[-1] = -x[-1], -x[-2]
                sign = -sign
                changed = True
    return sign


def reflect_to_alcove(
    spec: RootSystemSpec, params: AlcoveParams | None, weight: Weight
) -> SignedAlcovePoint:
    """Reflect an arbitrary integral weight to the open bottom alcove under
    the dot action, tracking the sign of the Weyl-group element used.

    With params=None only the finite chamber walls are active, so the result
    is the dominant-chamber representative (used by characteristic-zero
    branching).
    """
    _check_weight(spec, weight)
    if params is not None:
        _require_reflection_family(spec, params)
    shift = _doubled_shift(spec)
    x = [2 * c + s for c, s in zip(weight, shift)]
    forms = _forms(spec, params)
    sign = 1
    for _ in range(_REFLECT_CAP):
        sign *= _dominance_pass(spec, x)
        pending: tuple[str, int, int, int] | None = None
        on_wall = False
        for kind, i, j, modulus in forms:
            v = _form_value(kind, i, j, x)
            if modulus is None:
                if v == 0:
                    on_wall = True
                    break
            else:
                if v % modulus == 0:
                    on_wall = True
                    break
                if v > modulus and pending is None:
                    pending = (kind, i, j, modulus)
        if on_wall:
            return SignedAlcovePoint.wall()
        if pending is None:
            out = tuple((xi - s) // 2 for xi, s in zip(x, shift))
            return SignedAlcovePoint.interior(out, sign)
        kind, i, j, modulus = pending
        v = _form_value(kind, i, j, x)
        c = (v // modulus) * modulus
        if kind == "diff":
            x[i], x[j] = x[j] + c, x[i] - c
        elif kind == "sum":
            x[i], x[j] = c - x[j], c - x[i]
        else:
            x[i] = 2 * c - x[i]
        sign = -sign
    raise AssertionError(f"reflection of {weight} did not terminate")


def weyl_dim(spec: RootSystemSpec, weight: Weight) -> int:
    """Dimension of the irreducible with the given dominant highest weight
    (characteristic zero), as an exact integer."""
    if not is_dominant(spec, weight):
        raise ValueError(f"weight {weight} is not dominant for {spec.family.value}")
    if spec.family is Family.D and spec.rank == 1:
        return weight[0] + 1
    x = [2 * c + s for c, s in zip(weight, spec.rho2)]
    x0 = list(spec.rho2)
    num = 1
    den = 1
    for kind, i, j, _ in _forms(spec, None):
        num *= _form_value(kind, i, j, x)
        den *= _form_value(kind, i, j, x0)
    if num % den != 0:
        raise AssertionError(f"non-integral dimension for {weight}")
    return num // den


def alcove_weights(
    spec: RootSystemSpec, params: AlcoveParams, bound: int
) -> list[Weight]:
    """All dominant alcove weights with |entries| summing to at most bound,
    in descending lexicographic order."""
    if bound < 0:
        raise ValueError(f"bound must be >= 0, got {bound}")
    _require_reflection_family(spec, params)
    fam, n = spec.family, spec.rank
    out: list[Weight] = []

    def rec(prefix: list[int], rem: int) -> None:
        i = len(prefix)
        if i == n:
            w = tuple(prefix)
            if is_dominant(spec, w) and alcove_contains(spec, params, w):
                out.append(w)
            return
        hi = min(prefix[i - 1], rem) if i else min(bound, rem)
        if fam is Family.A_GL:
            lo = -rem
        elif fam is Family.D and i == n - 1 and n > 1:
            lo = -hi
        else:
            lo = 0
        for c in range(hi, lo - 1, -1):
            rec(prefix + [c], rem - abs(c))

    rec([], bound)
    return out

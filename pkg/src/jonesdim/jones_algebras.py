"""Simple-module dimension tables for the semisimple quotients.

Each supported algebra is resolved to one or more root-system slices whose
alcove-confined fusion tables carry the dimensions:

  symmetric group over F_p   -> A-GL ranks 1..p-1, modular p, merged
  Hecke algebra at a root of unity of order ell
                             -> A-GL ranks 1..ell'-1, quantum ell, merged
  Brauer, odd delta in (0, p)      -> C rank (p - delta)/2, modular p
  Brauer, even delta in [2, p+1]   -> D rank delta/2, modular p
  Brauer, delta = 2m+1 realized through the odd-orthogonal group
                             -> B rank m, modular p
  BMW at a root of unity of order ell -> C rank n, quantum ell

The merged tables key simple modules by partitions with trailing zeros
stripped; any partition reachable from several ranks must get the same
dimension from each, and this is asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .branching import fusion_mults
from .root_data import (
    AlcoveParams,
    Family,
    RootSystemSpec,
    Weight,
    alcove_weights,
    make_root_system,
)

_SYMPLECTIC = "symplectic"
_EVEN_ORTHOGONAL = "even-orthogonal"
_TYPE_B = "type-b"


def delta_from_rank(kind: str, rank: int, p: int) -> int:
    """Parameter delta realized by the rank-`rank` slice of the given
    orthosymplectic kind at the modular parameter p."""
    AlcoveParams.modular(p)
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    if kind == _SYMPLECTIC:
        if rank > (p - 1) // 2:
            raise ValueError(f"symplectic rank must be <= (p-1)/2 = {(p - 1) // 2}")
        return p - 2 * rank
    if kind == _EVEN_ORTHOGONAL:
        if rank > (p + 1) // 2:
            raise ValueError(
                f"even-orthogonal rank must be <= (p+1)/2 = {(p + 1) // 2}"
            )
        return 2 * rank
    if kind == _TYPE_B:
        if rank > (p - 3) // 2:
            raise ValueError(f"type-b rank must be <= (p-3)/2 = {(p - 3) // 2}")
        return 2 * rank + 1
    raise ValueError(f"unknown kind {kind!r}")


def rank_from_delta(kind: str, delta: int, p: int) -> int:
    """Inverse of delta_from_rank, with range checking."""
    AlcoveParams.modular(p)
    if kind == _SYMPLECTIC:
        if delta % 2 == 0 or not 0 < delta <= p - 1:
            raise ValueError(
                f"symplectic delta must be odd with 0 < delta <= p-1, got {delta}"
            )
        return (p - delta) // 2
    if kind == _EVEN_ORTHOGONAL:
        if delta % 2 == 1 or not 2 <= delta <= p + 1:
            raise ValueError(
                f"even-orthogonal delta must be even with 2 <= delta <= p+1,"
                f" got {delta}"
            )
        return delta // 2
    if kind == _TYPE_B:
        if delta % 2 == 0 or delta < 3:
            raise ValueError(f"type-b delta must be odd and >= 3, got {delta}")
        rank = (delta - 1) // 2
        if rank > (p - 3) // 2:
            raise ValueError(f"type-b delta must be <= p-2, got {delta}")
        return rank
    raise ValueError(f"unknown kind {kind!r}")


@dataclass(frozen=True)
class AlgebraConfig:
    kind: str
    p: int = 0
    ell: int = 0
    delta: int = 0
    n: int = 0
    m: int = 0

    @staticmethod
    def symmetric(p: int) -> "AlgebraConfig":
        AlcoveParams.modular(p)
        return AlgebraConfig("symmetric", p=p)

    @staticmethod
    def hecke(ell: int) -> "AlgebraConfig":
        AlcoveParams.quantum(ell)
        return AlgebraConfig("hecke", ell=ell)

    @staticmethod
    def brauer(delta: int, p: int) -> "AlgebraConfig":
        if delta % 2 == 1:
            rank_from_delta(_SYMPLECTIC, delta, p)
            return AlgebraConfig("brauer-odd", p=p, delta=delta)
        rank_from_delta(_EVEN_ORTHOGONAL, delta, p)
        return AlgebraConfig("brauer-even", p=p, delta=delta)

    @staticmethod
    def brauer_type_b(m: int, p: int) -> "AlgebraConfig":
        AlcoveParams.modular(p)
        if not 1 <= m <= (p - 3) // 2:
            raise ValueError(
                f"type-b rank must satisfy 1 <= m <= (p-3)/2 = {(p - 3) // 2},"
                f" got {m}"
            )
        return AlgebraConfig("brauer-b", p=p, m=m)

    @staticmethod
    def bmw(n: int, ell: int) -> "AlgebraConfig":
        if ell == 1:
            raise ValueError(
                "order 1 means the deformation parameter is 1; use the Brauer"
                " configuration instead"
            )
        AlcoveParams.quantum(ell)
        top = (ell - 1) // 2 if ell % 2 == 1 else (ell - 4) // 2
        if not 1 <= n <= top:
            raise ValueError(
                f"bmw rank must satisfy 1 <= n <= {top} for order {ell}, got {n}"
            )
        return AlgebraConfig("bmw", ell=ell, n=n)

    def resolve(self) -> list[tuple[RootSystemSpec, AlcoveParams]]:
        """Root-system slices whose fusion tables carry this algebra's
        simple-module dimensions."""
        if self.kind == "symmetric":
            params = AlcoveParams.modular(self.p)
            return [
                (make_root_system(Family.A_GL, m), params)
                for m in range(1, self.p)
            ]
        if self.kind == "hecke":
            params = AlcoveParams.quantum(self.ell)
            return [
                (make_root_system(Family.A_GL, m), params)
                for m in range(1, params.ell_prime)
            ]
        if self.kind == "brauer-odd":
            rank = rank_from_delta(_SYMPLECTIC, self.delta, self.p)
            return [(make_root_system(Family.C, rank), AlcoveParams.modular(self.p))]
        if self.kind == "brauer-even":
            rank = rank_from_delta(_EVEN_ORTHOGONAL, self.delta, self.p)
            return [(make_root_system(Family.D, rank), AlcoveParams.modular(self.p))]
        if self.kind == "brauer-b":
            return [(make_root_system(Family.B, self.m), AlcoveParams.modular(self.p))]
        if self.kind == "bmw":
            return [(make_root_system(Family.C, self.n), AlcoveParams.quantum(self.ell))]
        raise ValueError(f"unknown algebra kind {self.kind!r}")


@dataclass(frozen=True)
class DimensionRow:
    """One level of a dimension table: ordered (label, dimension) pairs in
    descending lexicographic label order."""

    r: int
    entries: tuple[tuple[Weight, int], ...]

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.entries)


def _strip(weight: Weight) -> Weight:
    out = list(weight)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def is_e_regular(partition: Weight, e: int) -> bool:
    """True when no positive part value is repeated e or more times."""
    if e < 2:
        raise ValueError(f"e must be >= 2, got {e}")
    parts = [c for c in partition if c]
    return all(parts.count(v) < e for v in set(parts))


def _partitions(total: int, max_len: int):
    """Weakly decreasing tuples of positive integers with the given sum."""

    def rec(rem: int, cap: int, length: int):
        if rem == 0:
            yield ()
            return
        if length == 0:
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in rec(rem - first, first, length - 1):
                yield (first,) + rest

    yield from rec(total, total, max_len)


@lru_cache(maxsize=None)
def _merged_dims(config: AlgebraConfig, r: int) -> tuple:
    """Union of the per-rank fusion tables, keyed by stripped partition;
    cross-rank collisions must agree."""
    merged: dict[Weight, int] = {}
    for spec, params in config.resolve():
        for w, c in fusion_mults(spec, params, r).items():
            key = _strip(w)
            if key in merged and merged[key] != c:
                raise AssertionError(
                    f"rank tables disagree at {key}: {merged[key]} vs {c}"
                )
            merged[key] = c
    return tuple(sorted(merged.items(), reverse=True))


def weight_set(config: AlgebraConfig, r: int) -> list[Weight]:
    """Labels of the simple modules of the level-r algebra, in descending
    lexicographic order."""
    if r < 1:
        raise ValueError(f"level must be >= 1, got {r}")
    if config.kind in ("symmetric", "hecke"):
        if config.kind == "symmetric":
            e = config.p
        else:
            e = AlcoveParams.quantum(config.ell).ell_prime
        out = [
            lam
            for lam in _partitions(r, e - 1)
            if lam[0] - lam[-1] <= e - len(lam)
        ]
        return sorted(out, reverse=True)
    (spec, params), = config.resolve()
    if config.kind == "brauer-b":
        return sorted(fusion_mults(spec, params, r), reverse=True)
    out = []
    for w in alcove_weights(spec, params, r):
        size = sum(abs(c) for c in w)
        if size <= r and (r - size) % 2 == 0:
            out.append(w)
    return sorted(out, reverse=True)


def symmetric_simple_dims(p: int, r: int) -> DimensionRow:
    """Dimensions of the simple modules of the semisimple quotient of the
    group algebra of the symmetric group on r letters over F_p."""
    if r < 1:
        raise ValueError(f"level must be >= 1, got {r}")
    return DimensionRow(r, _merged_dims(AlgebraConfig.symmetric(p), r))


def hecke_simple_dims(ell: int, r: int) -> DimensionRow:
    """Dimensions of the simple modules of the semisimple quotient of the
    Hecke algebra at a primitive root of unity of order ell."""
    if r < 1:
        raise ValueError(f"level must be >= 1, got {r}")
    return DimensionRow(r, _merged_dims(AlgebraConfig.hecke(ell), r))


def brauer_simple_dims(config: AlgebraConfig, r: int) -> DimensionRow:
    """Dimensions of the simple modules of the semisimple quotient of the
    Brauer algebra on r strands for the given configuration."""
    if config.kind not in ("brauer-odd", "brauer-even", "brauer-b"):
        raise ValueError(f"not a Brauer configuration: {config.kind}")
    if r < 1:
        raise ValueError(f"level must be >= 1, got {r}")
    (spec, params), = config.resolve()
    table = fusion_mults(spec, params, r)
    return DimensionRow(r, tuple(sorted(table.items(), reverse=True)))


def bmw_simple_dims(n: int, ell: int, r: int) -> DimensionRow:
    """Dimensions of the simple modules of the semisimple quotient of the
    BMW algebra on r strands, rank n, quantum order ell."""
    if r < 1:
        raise ValueError(f"level must be >= 1, got {r}")
    config = AlgebraConfig.bmw(n, ell)
    (spec, params), = config.resolve()
    table = fusion_mults(spec, params, r)
    return DimensionRow(r, tuple(sorted(table.items(), reverse=True)))


def algebra_decomposition(config, r: int):
    """Matrix-ring block decomposition of the level-r semisimple quotient:
    returns (blocks, total) where blocks are (label, dimension) pairs and
    total is the sum of squared dimensions.

    Accepts an AlgebraConfig, or a (RootSystemSpec, AlcoveParams) pair for a
    single slice.
    """
    if isinstance(config, AlgebraConfig):
        if config.kind in ("symmetric", "hecke"):
            if r < 1:
                raise ValueError(f"level must be >= 1, got {r}")
            blocks = list(_merged_dims(config, r))
        else:
            (spec, params), = config.resolve()
            blocks = sorted(fusion_mults(spec, params, r).items(), reverse=True)
    else:
        spec, params = config
        blocks = sorted(fusion_mults(spec, params, r).items(), reverse=True)
    total = sum(c * c for _, c in blocks)
    return blocks, total

"""Exact irreducible character values of symmetric groups.

Character values are computed by the recursive border-strip expansion on
beta-sets, degrees by the hook length formula; everything is an exact int.
"""

from __future__ import annotations

from functools import lru_cache, reduce
from math import factorial
from operator import mul

from .partitions import (
    Partition,
    beta_numbers,
    generate_partitions,
    hook_lengths,
    partition_from_beta,
)

TABLE_GUARD = 12


def _strip_hooks(lam: Partition, t: int) -> list[tuple[int, Partition]]:
    """All ways to remove a border strip of length t from lam.

    Returns (sign, remaining partition) pairs; on the beta-set a removal is a
    bead move b -> b - t onto a free position, and the sign is (-1)^(number of
    beads jumped over), which is the leg length of the strip.
    """
    beta = beta_numbers(lam, len(lam))
    occupied = set(beta)
    out = []
    for b in beta:
        if b - t < 0 or b - t in occupied:
            continue
        jumped = sum(1 for c in beta if b - t < c < b)
        rest = [c for c in beta if c != b] + [b - t]
        out.append(((-1) ** jumped, partition_from_beta(rest)))
    return out


@lru_cache(maxsize=None)
def _mn(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1
    t, rest = rho[0], rho[1:]
    return sum(sign * _mn(mu, rest) for sign, mu in _strip_hooks(lam, t))


def mn_value(lam: Partition, rho: Partition) -> int:
    """Character value of the irreducible labelled by lam at cycle type rho."""
    if sum(lam) != sum(rho):
        raise ValueError(f"|{lam}| != |{rho}|")
    return _mn(lam, rho)


def degree(lam: Partition) -> int:
    """Dimension of the irreducible labelled by lam (hook length formula)."""
    hooks = hook_lengths(lam)
    return factorial(sum(lam)) // reduce(mul, hooks.values(), 1)


def centralizer_order(rho: Partition) -> int:
    """z_rho = prod_m m^(a_m) * a_m! over the part multiplicities a_m of rho."""
    z = 1
    mult = 1
    for i, m in enumerate(rho):
        mult = mult + 1 if i and rho[i - 1] == m else 1
        z *= m * mult
    return z


def class_size(rho: Partition) -> int:
    return factorial(sum(rho)) // centralizer_order(rho)


def character_table_sn(k: int) -> list[list[int]]:
    """Full character table of the symmetric group on k letters.

    Rows are partitions of k in generate_partitions order (labels), columns
    the cycle types in the same order.
    """
    if not 1 <= k <= TABLE_GUARD:
        raise ValueError(f"k must be in 1..{TABLE_GUARD}, got {k}")
    types = generate_partitions(k)
    return [[mn_value(lam, rho) for rho in types] for lam in types]

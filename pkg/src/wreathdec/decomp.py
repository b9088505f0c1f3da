"""Label-level decomposition engine for the two wreath-product families.

For an odd prime p, the irreducible characters of the large wreath product
(order (p(p-1))^w * w!) are labelled by p-tuples of partitions of total size
w ("G-labels"); those of the small one (order (p-1)^w * w!) by (p-1)-tuples
("H-labels"), the missing slot sitting at position r = (p+1)/2.  Everything
here works purely on labels: the integer coefficient k_coefficient(alpha,
gamma) is the multiplicity of the G-irreducible gamma in the induction of the
H-irreducible alpha, computed from Littlewood-Richardson numbers, and the
other operations are assembled from it.  No group is ever constructed.
"""

from __future__ import annotations

from itertools import product
from math import factorial

from . import sn_char
from .lr import iterated_lr, lr_coefficient
from .partitions import (
    MultiPartition,
    Partition,
    generate_multipartitions,
    generate_partitions,
    p_core_and_quotient,
)
from .partitions import _require_odd_prime  # shared validation


def r_slot(p: int) -> int:
    """0-based index of the distinguished slot r = (p+1)/2 in a G-label."""
    return (p - 1) // 2


def glabels(p: int, w: int) -> tuple[MultiPartition, ...]:
    _require_odd_prime(p)
    return generate_multipartitions(w, p)


def hlabels(p: int, w: int) -> tuple[MultiPartition, ...]:
    _require_odd_prime(p)
    return generate_multipartitions(w, p - 1)


def _split_glabel(gamma: MultiPartition, p: int):
    mid = r_slot(p)
    return gamma[:mid] + gamma[mid + 1 :], gamma[mid]


def _check_pair(alpha: MultiPartition, gamma: MultiPartition, p: int) -> None:
    _require_odd_prime(p)
    if len(alpha) != p - 1 or len(gamma) != p:
        raise ValueError(f"label lengths {len(alpha)}, {len(gamma)} do not fit p={p}")
    if sum(map(sum, alpha)) != sum(map(sum, gamma)):
        raise ValueError("labels have different weights")


def k_coefficient(alpha: MultiPartition, gamma: MultiPartition, p: int) -> int:
    """Multiplicity of the G-irreducible gamma in the induced H-irreducible alpha.

    Sums, over tuples of partitions beta^i of size |alpha^i| - |gamma^i|, the
    product of the slot-wise coefficients c^{alpha^i}_{beta^i, gamma^i} times
    the iterated coefficient of gamma^r in the beta tuple.  Zero whenever some
    |gamma^i| exceeds |alpha^i|.
    """
    _check_pair(alpha, gamma, p)
    gamma_i, gamma_r = _split_glabel(gamma, p)
    if any(sum(g) > sum(a) for a, g in zip(alpha, gamma_i)):
        return 0
    if sum(gamma_r) != sum(sum(a) - sum(g) for a, g in zip(alpha, gamma_i)):
        return 0
    slot_terms = []
    for a, g in zip(alpha, gamma_i):
        terms = [
            (beta, c)
            for beta in generate_partitions(sum(a) - sum(g))
            if (c := lr_coefficient(a, beta, g))
        ]
        if not terms:
            return 0
        slot_terms.append(terms)
    total = 0
    for combo in product(*slot_terms):
        coeff = 1
        for _, c in combo:
            coeff *= c
        total += coeff * iterated_lr(gamma_r, [b for b, _ in combo])
    return total


def induce_H_to_G(alpha: MultiPartition, p: int) -> dict[MultiPartition, int]:
    """All G-labels appearing in the induction of alpha, with multiplicities."""
    _require_odd_prime(p)
    if len(alpha) != p - 1:
        raise ValueError(f"expected {p - 1} components, got {len(alpha)}")
    mid = r_slot(p)
    # per slot, every (gamma^i, beta^i) split of alpha^i with a nonzero coefficient
    slot_splits = []
    for a in alpha:
        splits = []
        for g in range(sum(a) + 1):
            for gam in generate_partitions(g):
                for beta in generate_partitions(sum(a) - g):
                    c = lr_coefficient(a, beta, gam)
                    if c:
                        splits.append((gam, beta, c))
        slot_splits.append(splits)
    result: dict[MultiPartition, int] = {}
    for combo in product(*slot_splits):
        coeff = 1
        for _, _, c in combo:
            coeff *= c
        betas = [b for _, b, _ in combo]
        jr = sum(map(sum, betas))
        for gamma_r in generate_partitions(jr):
            cr = iterated_lr(gamma_r, betas)
            if cr:
                gamma = tuple(g for g, _, _ in combo)
                gamma = gamma[:mid] + (gamma_r,) + gamma[mid:]
                result[gamma] = result.get(gamma, 0) + coeff * cr
    return result


def restrict_G_to_H(gamma: MultiPartition, p: int) -> dict[MultiPartition, int]:
    """All H-labels appearing in the restriction of gamma, with multiplicities."""
    _require_odd_prime(p)
    if len(gamma) != p:
        raise ValueError(f"expected {p} components, got {len(gamma)}")
    gamma_i, gamma_r = _split_glabel(gamma, p)
    result: dict[MultiPartition, int] = {}
    for extra in _compositions(sum(gamma_r), p - 1):
        sizes = [sum(g) + e for g, e in zip(gamma_i, extra)]
        for alpha in product(*(generate_partitions(s) for s in sizes)):
            k = k_coefficient(alpha, gamma, p)
            if k:
                result[alpha] = k
    return result


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def degree_G(gamma: MultiPartition, p: int) -> int:
    """Degree of the G-irreducible gamma: the r-th base character has degree
    p - 1, all others are linear."""
    _require_odd_prime(p)
    w = sum(map(sum, gamma))
    deg = factorial(w) * (p - 1) ** sum(gamma[r_slot(p)])
    for comp in gamma:
        deg = deg // factorial(sum(comp)) * sn_char.degree(comp)
    return deg


def degree_H(alpha: MultiPartition, p: int) -> int:
    """Degree of the H-irreducible alpha (all base characters are linear)."""
    _require_odd_prime(p)
    w = sum(map(sum, alpha))
    deg = factorial(w)
    for comp in alpha:
        deg = deg // factorial(sum(comp)) * sn_char.degree(comp)
    return deg


def k_matrix(p: int, w: int) -> list[list[int]]:
    """Dense coefficient matrix: rows over hlabels(p, w), columns over
    glabels(p, w), both in enumeration order."""
    cols = {g: j for j, g in enumerate(glabels(p, w))}
    matrix = []
    for alpha in hlabels(p, w):
        row = [0] * len(cols)
        for gamma, k in induce_H_to_G(alpha, p).items():
            row[cols[gamma]] = k
        matrix.append(row)
    return matrix


def gram_matrix(p: int, w: int) -> list[list[int]]:
    """Inner products of the restrictions of pairs of G-irreducibles:
    entry (i, j) = sum_alpha k(alpha, gamma_i) * k(alpha, gamma_j)."""
    kmat = k_matrix(p, w)
    n = len(glabels(p, w))
    gram = [[0] * n for _ in range(n)]
    for row in kmat:
        support = [(j, v) for j, v in enumerate(row) if v]
        for i, vi in support:
            for j, vj in support:
                gram[i][j] += vi * vj
    return gram


def determinant(matrix: list[list[int]]) -> int:
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign, prev = 1, 1
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def basic_set(n: int, p: int) -> list[Partition]:
    """Partitions of n whose quotient has an empty component in slot r.

    Their count equals the number of partitions of n with no part divisible
    by p, i.e. the number of classes of the symmetric group of order coprime
    to p.
    """
    _require_odd_prime(p)
    mid = r_slot(p)
    return [
        lam
        for lam in generate_partitions(n)
        if not p_core_and_quotient(lam, p).quotient[mid]
    ]


def block_partition(
    n: int, p: int
) -> dict[tuple[Partition, int], list[Partition]]:
    """Partitions of n grouped by (core, weight); two labels share a group
    exactly when their cores agree."""
    _require_odd_prime(p)
    blocks: dict[tuple[Partition, int], list[Partition]] = {}
    for lam in generate_partitions(n):
        core, _, weight = p_core_and_quotient(lam, p)
        blocks.setdefault((core, weight), []).append(lam)
    return blocks

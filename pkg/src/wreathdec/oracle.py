"""Brute-force verification from first principles.

Everything the label-level engine computes by formula is recomputed here the
hard way: the base groups are materialized as explicit element tables, the
wreath products as explicit element sets, conjugacy classes come from orbit
enumeration, induced characters from whole-group averaging, and every
multiplicity is an exact inner product of class functions.  Agreement between
the two routes is the whole point of this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache, reduce
from itertools import combinations, permutations, product
from math import factorial
from typing import NamedTuple, Optional

from . import decomp
from .cyclotomic import Cyclotomic, root_of_unity
from .lr import lr_coefficient
from .partitions import (
    MultiPartition,
    Partition,
    generate_multipartitions,
    generate_partitions,
    is_odd_prime,
)
from .sn_char import mn_value

DEFAULT_GUARD = 10**6
MAX_PRIME = 17


class GuardError(RuntimeError):
    """Raised when a requested group exceeds the enumeration guard."""


def primitive_root(p: int) -> int:
    """Smallest positive primitive root modulo the odd prime p."""
    for g in range(2, p):
        acc, order = g, 1
        while acc != 1:
            acc = acc * g % p
            order += 1
        if order == p - 1:
            return g
    raise ValueError(f"no primitive root mod {p}")


def index_exponents(p: int) -> dict[int, int]:
    """Bijection from the linear-character slots I = {1..p} minus r onto the
    exponents 0..p-2, fixing slot 1 as the trivial character."""
    r = (p + 1) // 2
    out = {}
    for i in range(1, p + 1):
        if i == r:
            continue
        out[i] = 0 if i == 1 else (i - 1 if i < r else i - 2)
    return out


class BaseGroup:
    """A small concrete group: explicit elements, multiplication, inversion,
    and the full set of irreducible character value tables (in slot order)."""

    def __init__(self, name, elements, identity, mult, inv, irr, value_order):
        self.name = name
        self.elements = tuple(elements)
        self.identity = identity
        self.mult = mult
        self.inv = inv
        self.irr = irr
        self.value_order = value_order
        self._build_classes()

    def _build_classes(self):
        index = {e: i for i, e in enumerate(self.elements)}
        assigned = [-1] * len(self.elements)
        reps, sizes = [], []
        for i, g in enumerate(self.elements):
            if assigned[i] >= 0:
                continue
            orbit = {index[self.mult(self.mult(x, g), self.inv(x))] for x in self.elements}
            c = len(reps)
            for j in orbit:
                assigned[j] = c
            reps.append(g)
            sizes.append(len(orbit))
        self.class_reps = tuple(reps)
        self.class_sizes = tuple(sizes)
        self.class_of = {e: assigned[i] for i, e in enumerate(self.elements)}


class BasePair(NamedTuple):
    p: int
    r: int
    islots: tuple[int, ...]
    root: int
    G: BaseGroup
    H: BaseGroup


@cache
def base_group(p: int) -> BasePair:
    """The order-p(p-1) base group (a cyclic normal subgroup of order p acted
    on faithfully by a cyclic group of order p-1) and its order-(p-1)
    complement, with all irreducible character values as exact cyclotomics.

    Elements of the big group are pairs (a, b) with a mod p, b mod p-1 and
    (a1,b1)(a2,b2) = (a1 + g^b1 * a2, b1 + b2) for the smallest primitive
    root g; the complement is the subset a = 0.
    """
    if not is_odd_prime(p) or p > MAX_PRIME:
        raise ValueError(f"p must be an odd prime <= {MAX_PRIME}, got {p}")
    m = p - 1
    g = primitive_root(p)
    r = (p + 1) // 2
    exps = index_exponents(p)
    islots = tuple(sorted(exps))
    powg = [pow(g, b, p) for b in range(m)]

    def gmult(x, y):
        return ((x[0] + powg[x[1]] * y[0]) % p, (x[1] + y[1]) % m)

    def ginv(x):
        b = (-x[1]) % m
        return ((-x[0] * powg[b]) % p, b)

    g_elements = [(a, b) for a in range(p) for b in range(m)]
    zeta = [root_of_unity(m, k) for k in range(m)]
    g_irr = []
    for i in range(1, p + 1):
        if i == r:
            table = {
                (a, b): Cyclotomic.from_rational(m, p - 1 if (a, b) == (0, 0) else (-1 if b == 0 else 0))
                for (a, b) in g_elements
            }
        else:
            e = exps[i]
            table = {(a, b): zeta[e * b % m] for (a, b) in g_elements}
        g_irr.append(table)
    G = BaseGroup("G", g_elements, (0, 0), gmult, ginv, tuple(g_irr), m)

    h_elements = list(range(m))
    h_irr = tuple({b: zeta[exps[i] * b % m] for b in h_elements} for i in islots)
    H = BaseGroup(
        "H", h_elements, 0, lambda x, y: (x + y) % m, lambda x: (-x) % m, h_irr, m
    )
    return BasePair(p, r, islots, g, G, H)


@cache
def _inv_perm(sigma: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma):
        inv[v] = i
    return tuple(inv)


@cache
def perm_cycles(sigma: tuple[int, ...]):
    """Cycles of a permutation, each listed in cycle-product order (the start
    index followed by its successive preimages), plus the cycle type."""
    inv = _inv_perm(sigma)
    seen = [False] * len(sigma)
    cycles = []
    for j in range(len(sigma)):
        if seen[j]:
            continue
        cyc = [j]
        seen[j] = True
        pos = inv[j]
        while pos != j:
            cyc.append(pos)
            seen[pos] = True
            pos = inv[pos]
        cycles.append(tuple(cyc))
    ctype = tuple(sorted((len(c) for c in cycles), reverse=True))
    return tuple(cycles), ctype


class ClassData(NamedTuple):
    label: MultiPartition
    representative: tuple
    size: int


class WreathGroup:
    """A wreath product of a concrete base group with a symmetric group,
    fully enumerated.  Elements are pairs (f, sigma) with f a w-tuple of base
    elements and sigma a permutation acting on coordinates."""

    def __init__(self, base: BaseGroup, w: int):
        self.base = base
        self.w = w
        self.order = len(base.elements) ** w * factorial(w)
        perms = tuple(permutations(range(w)))
        self.elements = tuple(
            (f, s) for f in product(base.elements, repeat=w) for s in perms
        )
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.identity = ((base.identity,) * w, tuple(range(w)))
        self._char_cache: dict[MultiPartition, "ClassFunction"] = {}
        self._build_classes()

    def mult(self, x, y):
        f, s = x
        f2, t = y
        sinv = _inv_perm(s)
        bm = self.base.mult
        return (
            tuple(bm(f[i], f2[sinv[i]]) for i in range(self.w)),
            tuple(s[t[i]] for i in range(self.w)),
        )

    def inv(self, x):
        f, s = x
        bi = self.base.inv
        return (tuple(bi(f[s[j]]) for j in range(self.w)), _inv_perm(s))

    def cycle_products(self, elem) -> list:
        """One base-group element per cycle of the permutation part, each the
        product of the coordinates along the cycle in product order."""
        f, sigma = elem
        cycles, _ = perm_cycles(sigma)
        return [reduce(self.base.mult, (f[i] for i in cyc)) for cyc in cycles]

    def class_label(self, elem) -> MultiPartition:
        """Cycle structure: one partition per base class, collecting the
        lengths of the cycles whose product lands in that class."""
        f, sigma = elem
        cycles, _ = perm_cycles(sigma)
        parts: list[list[int]] = [[] for _ in self.base.class_reps]
        for cyc in cycles:
            prod = reduce(self.base.mult, (f[i] for i in cyc))
            parts[self.base.class_of[prod]].append(len(cyc))
        return tuple(tuple(sorted(ps, reverse=True)) for ps in parts)

    def _build_classes(self):
        n = len(self.elements)
        labels = [self.class_label(e) for e in self.elements]
        invs = [self.inv(e) for e in self.elements]
        assigned = [-1] * n
        reps, sizes, rows = [], [], []
        for i, g in enumerate(self.elements):
            if assigned[i] >= 0:
                continue
            row = [
                self.index[self.mult(self.mult(x, g), xi)]
                for x, xi in zip(self.elements, invs)
            ]
            members = set(row)
            c = len(reps)
            for j in members:
                assigned[j] = c
            reps.append(g)
            sizes.append(len(members))
            rows.append(row)
        orbit_partition = {}
        for i, c in enumerate(assigned):
            orbit_partition.setdefault(c, set()).add(i)
        label_partition = {}
        for i, lab in enumerate(labels):
            label_partition.setdefault(lab, set()).add(i)
        if set(map(frozenset, orbit_partition.values())) != set(
            map(frozenset, label_partition.values())
        ):
            raise RuntimeError("conjugation orbits disagree with cycle structures")
        self.class_reps = tuple(reps)
        self.class_sizes = tuple(sizes)
        self.class_labels = tuple(labels[self.index[rep]] for rep in reps)
        self.class_of_index = tuple(assigned)
        self._conj_rows = rows

    def class_of(self, elem) -> int:
        return self.class_of_index[self.index[elem]]


def group_order(p: int, w: int, kind: str) -> int:
    base_size = p * (p - 1) if kind == "G" else p - 1
    return base_size**w * factorial(w)


@cache
def _wreath_cached(p: int, w: int, kind: str) -> WreathGroup:
    pair = base_group(p)
    return WreathGroup(pair.G if kind == "G" else pair.H, w)


def wreath_group(
    p: int, w: int, kind: str = "G", guard: Optional[int] = None
) -> WreathGroup:
    """Enumerated wreath product; refuses to build more than `guard` elements
    (default 10^6)."""
    if kind not in ("G", "H"):
        raise ValueError("kind must be 'G' or 'H'")
    base_group(p)  # validates p
    order = group_order(p, w, kind)
    limit = DEFAULT_GUARD if guard is None else guard
    if order > limit:
        raise GuardError(
            f"{kind}-wreath product for p={p}, w={w} has {order} elements, "
            f"beyond the guard of {limit}"
        )
    return _wreath_cached(p, w, kind)


def conjugacy_classes(group: WreathGroup) -> list[ClassData]:
    return [
        ClassData(label, rep, size)
        for label, rep, size in zip(
            group.class_labels, group.class_reps, group.class_sizes
        )
    ]


class ClassFunction:
    """A class function on a concretely built group, stored as one exact
    cyclotomic value per conjugacy class."""

    def __init__(self, group: WreathGroup, values):
        m = group.base.value_order
        self.group = group
        self.values = tuple(
            v if isinstance(v, Cyclotomic) else Cyclotomic.from_rational(m, v)
            for v in values
        )

    def value_at(self, elem):
        return self.values[self.group.class_of(elem)]

    def degree(self):
        return self.values[self.group.class_of(self.group.identity)].as_rational()


def inner_product(a: ClassFunction, b: ClassFunction) -> Fraction:
    """Exact inner product: the class-size-weighted sum of a * conj(b) over
    classes, divided by the group order.  Must come out rational."""
    if a.group is not b.group:
        raise ValueError("class functions live on different groups")
    total = Cyclotomic(a.group.base.value_order)
    for size, x, y in zip(a.group.class_sizes, a.values, b.values):
        total = total + x * y.conjugate() * size
    return total.as_rational() / a.group.order


def _tilde_value(base: BaseGroup, base_values, lam: Partition, f, sigma):
    """Value at (f, sigma) of the extension-style character built from a base
    character table tensored with a symmetric-group character: a product of
    base values at the cycle products times the character value at the cycle
    type.  Returns None when some coordinate leaves the table's domain (the
    coordinates decide membership; cycle products of outside elements can
    still land inside)."""
    for x in f:
        if x not in base_values:
            return None
    cycles, ctype = perm_cycles(sigma)
    val = 1
    for cyc in cycles:
        prod = reduce(base.mult, (f[i] for i in cyc))
        val = val * base_values[prod]
    return val * mn_value(lam, ctype)


def _block_chi0(group: WreathGroup, blocks):
    """Pointwise values of an outer tensor product over consecutive blocks,
    zero (None) off the block-product subgroup."""

    def chi0(elem):
        f, sigma = elem
        val = 1
        for start, size, base_values, lam in blocks:
            if any(not start <= sigma[start + i] < start + size for i in range(size)):
                return None
            sub_sigma = tuple(sigma[start + i] - start for i in range(size))
            v = _tilde_value(group.base, base_values, lam, f[start : start + size], sub_sigma)
            if v is None:
                return None
            val = val * v
        return val

    return chi0


def induce(group: WreathGroup, chi0, subgroup_order: int) -> ClassFunction:
    """Induction by explicit whole-group averaging of the zero-extended
    subgroup character chi0 (a function on elements, None outside)."""
    cached = [chi0(e) for e in group.elements]
    scale = Fraction(1, subgroup_order)
    values = []
    for row in group._conj_rows:
        acc = Cyclotomic(group.base.value_order)
        for xi in row:
            v = cached[xi]
            if v is not None:
                acc = acc + v
        values.append(acc * scale)
    return ClassFunction(group, values)


def tilde_character(group: WreathGroup, base_values, lam: Partition) -> ClassFunction:
    """The full-width extension character (base table defined on the whole
    base group), evaluated directly on class representatives."""
    return ClassFunction(
        group,
        [_tilde_value(group.base, base_values, lam, f, s) for f, s in group.class_reps],
    )


def parametrized_character(group: WreathGroup, label: MultiPartition) -> ClassFunction:
    """Irreducible character attached to a tuple of partitions, one per base
    character slot: the block-wise extension tensored with symmetric-group
    characters, induced up from the block-product subgroup.  The result has
    norm exactly 1."""
    if label in group._char_cache:
        return group._char_cache[label]
    if len(label) != len(group.base.irr):
        raise ValueError(f"label must have {len(group.base.irr)} components")
    if sum(map(sum, label)) != group.w:
        raise ValueError(f"label size must be {group.w}")
    blocks = []
    start = 0
    for slot, lam in enumerate(label):
        size = sum(lam)
        if size:
            blocks.append((start, size, group.base.irr[slot], lam))
            start += size
    if len(blocks) <= 1:
        if not blocks:
            chi = ClassFunction(group, [1] * len(group.class_reps))
        else:
            chi = tilde_character(group, blocks[0][2], blocks[0][3])
    else:
        sub_order = len(group.base.elements) ** group.w
        for _, size, _, _ in blocks:
            sub_order *= factorial(size)
        chi = induce(group, _block_chi0(group, blocks), sub_order)
    assert inner_product(chi, chi) == 1, f"character {label} does not have norm 1"
    group._char_cache[label] = chi
    return chi


def _embed_h(elem):
    f, sigma = elem
    return (tuple((0, b) for b in f), sigma)


def restrict_to_h(gw: WreathGroup, hw: WreathGroup, chi: ClassFunction) -> ClassFunction:
    """View a class function of the big wreath product as one of the small
    wreath product sitting inside it coordinate-wise."""
    return ClassFunction(
        hw, [chi.values[gw.class_of(_embed_h(rep))] for rep in hw.class_reps]
    )


def _as_multiplicity(q: Fraction) -> int:
    if q.denominator != 1 or q < 0:
        raise ValueError(f"multiplicity {q} is not a nonnegative integer")
    return int(q)


def oracle_restriction(
    gamma: MultiPartition, p: int, guard: Optional[int] = None
) -> dict[MultiPartition, int]:
    """Restriction multiplicities of the big-wreath irreducible gamma,
    recomputed by exact inner products over the concretely built groups."""
    w = sum(map(sum, gamma))
    gw = wreath_group(p, w, "G", guard)
    hw = wreath_group(p, w, "H", guard)
    res = restrict_to_h(gw, hw, parametrized_character(gw, gamma))
    out = {}
    for alpha in generate_multipartitions(w, p - 1):
        mult = _as_multiplicity(inner_product(res, parametrized_character(hw, alpha)))
        if mult:
            out[alpha] = mult
    return out


def _theta_on_embedded_h(pair: BasePair, i: int):
    """Value table of the i-th linear complement character on the embedded
    complement, as a partial table on the big base group."""
    slot = pair.islots.index(i)
    return {(0, b): v for b, v in pair.H.irr[slot].items()}


def verify_mackey_multiplicities(
    i: int,
    j: int,
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    p: int,
    k: int,
    guard: Optional[int] = None,
) -> int:
    """Inner product of two explicitly induced characters of the big wreath
    product on k letters: the induction of (i-th linear extension) x (alpha)
    from the small wreath product, against the induction from the block
    subgroup of (degree-(p-1) extension) x (beta) boxed with (i-th linear
    extension) x (gamma).  Equals the Littlewood-Richardson number
    c^alpha_{beta,gamma}."""
    pair = base_group(p)
    if i not in pair.islots:
        raise ValueError(f"i must avoid the distinguished slot, got {i}")
    if not 0 <= j <= k or sum(beta) != j or sum(gamma) != k - j or sum(alpha) != k:
        raise ValueError("sizes must satisfy |beta| = j, |gamma| = k - j, |alpha| = k")
    gw = wreath_group(p, k, "G", guard)
    lhs = induce(
        gw,
        _block_chi0(gw, [(0, k, _theta_on_embedded_h(pair, i), alpha)]),
        group_order(p, k, "H"),
    )
    psi_r = pair.G.irr[pair.r - 1]
    psi_i = pair.G.irr[i - 1]
    if j == 0:
        rhs = tilde_character(gw, psi_i, gamma)
    elif j == k:
        rhs = tilde_character(gw, psi_r, beta)
    else:
        sub_order = len(pair.G.elements) ** k * factorial(j) * factorial(k - j)
        rhs = induce(
            gw,
            _block_chi0(gw, [(0, j, psi_r, beta), (j, k - j, psi_i, gamma)]),
            sub_order,
        )
    return _as_multiplicity(inner_product(lhs, rhs))


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


@dataclass
class ClaimResult:
    """One verified claim: what was checked, for which parameters, and the
    expected and computed sides."""

    claim: str
    params: dict
    expected: str
    computed: str
    status: str  # "pass", "fail" or "skip"

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _claim(name, params, expected, computed) -> ClaimResult:
    status = "pass" if expected == computed else "fail"
    return ClaimResult(name, params, repr(expected), repr(computed), status)


def base_group_claims(p: int) -> list[ClaimResult]:
    pair = base_group(p)
    G, H = pair.G, pair.H
    out = []
    # the degree-(p-1) character vanishes off the normal subgroup and its
    # restriction to the complement is (p-1) at the identity, 0 elsewhere
    psi_r = G.irr[pair.r - 1]
    res = tuple(psi_r[(0, b)] for b in H.elements)
    expected = tuple(
        Cyclotomic.from_rational(p - 1, p - 1 if b == 0 else 0) for b in H.elements
    )
    out.append(_claim("restriction_of_heavy_character_is_delta", {"p": p}, expected, res))
    # second orthogonality at the identity column of the complement
    sums = tuple(
        sum((table[b] for table in H.irr), Cyclotomic(p - 1)) for b in H.elements
    )
    out.append(_claim("complement_second_orthogonality", {"p": p}, expected, sums))
    # row orthogonality of the full base character table
    ok = True
    for a, ta in enumerate(G.irr):
        for b, tb in enumerate(G.irr):
            ip = sum(
                (ta[g] * tb[g].conjugate() for g in G.elements), Cyclotomic(p - 1)
            ).as_rational() / len(G.elements)
            ok = ok and ip == (1 if a == b else 0)
    out.append(_claim("base_table_row_orthogonality", {"p": p}, True, ok))
    return out


def class_structure_claims(p: int, w: int, guard: Optional[int] = None) -> list[ClaimResult]:
    out = []
    for kind in ("G", "H"):
        group = wreath_group(p, w, kind, guard)
        params = {"p": p, "w": w, "group": kind}
        labels = [group.class_label(e) for e in group.elements]
        by_label = {}
        for i, lab in enumerate(labels):
            by_label.setdefault(lab, set()).add(i)
        orbits = {}
        for i, c in enumerate(group.class_of_index):
            orbits.setdefault(c, set()).add(i)
        out.append(
            _claim(
                "orbit_classes_match_cycle_structure",
                params,
                sorted(map(sorted, orbits.values())),
                sorted(map(sorted, by_label.values())),
            )
        )
        s = len(group.base.class_reps)
        out.append(
            _claim(
                "class_count_is_multipartition_count",
                params,
                len(generate_multipartitions(w, s)),
                len(group.class_reps),
            )
        )
        out.append(
            _claim("class_sizes_sum_to_order", params, group.order, sum(group.class_sizes))
        )
        # centralizer-order cross-check: per class, the product over base
        # classes and part sizes of (part * base centralizer)^mult * mult!
        ok = True
        base_cent = [len(group.base.elements) // s for s in group.base.class_sizes]
        for label, size in zip(group.class_labels, group.class_sizes):
            cent = 1
            for bi, part in enumerate(label):
                mult = 1
                for t, m in enumerate(part):
                    mult = mult + 1 if t and part[t - 1] == m else 1
                    cent *= m * base_cent[bi] * mult
            ok = ok and size == group.order // cent
        out.append(_claim("class_sizes_match_centralizer_formula", params, True, ok))
    return out


def character_claims(p: int, w: int, guard: Optional[int] = None) -> list[ClaimResult]:
    out = []
    for kind in ("G", "H"):
        group = wreath_group(p, w, kind, guard)
        params = {"p": p, "w": w, "group": kind}
        t = p if kind == "G" else p - 1
        chars = [
            parametrized_character(group, lab) for lab in generate_multipartitions(w, t)
        ]
        norms_ok = all(inner_product(c, c) == 1 for c in chars)
        out.append(_claim("characters_have_norm_one", params, True, norms_ok))
        orth_ok = all(
            inner_product(a, b) == 0 for a, b in combinations(chars, 2)
        )
        out.append(_claim("characters_pairwise_orthogonal", params, True, orth_ok))
        out.append(
            _claim(
                "squared_degrees_sum_to_order",
                params,
                group.order,
                sum(int(c.degree()) ** 2 for c in chars),
            )
        )
        degfn = decomp.degree_G if kind == "G" else decomp.degree_H
        degs_ok = all(
            c.degree() == degfn(lab, p)
            for c, lab in zip(chars, generate_multipartitions(w, t))
        )
        out.append(_claim("degrees_match_formula", params, True, degs_ok))
    return out


def tilde_restriction_claims(p: int, w: int, guard: Optional[int] = None) -> list[ClaimResult]:
    """Value-by-value agreement, on the embedded small wreath product, of the
    big-group extension characters with the small-group ones, and the closed
    form for the heavy slot."""
    pair = base_group(p)
    gw = wreath_group(p, w, "G", guard)
    hw = wreath_group(p, w, "H", guard)
    out = []
    lams = generate_partitions(w)
    for i in pair.islots:
        slot = pair.islots.index(i)
        ok = True
        for elem in hw.elements:
            f, sigma = _embed_h(elem)
            for lam in lams:
                big = _tilde_value(gw.base, pair.G.irr[i - 1], lam, f, sigma)
                small = _tilde_value(hw.base, pair.H.irr[slot], lam, elem[0], sigma)
                ok = ok and big == small
        out.append(
            _claim(
                "linear_extension_agrees_on_complement",
                {"p": p, "w": w, "slot": i},
                True,
                ok,
            )
        )
    psi_r = pair.G.irr[pair.r - 1]
    trivial = (w,) if w else ()
    ok = True
    for elem in hw.elements:
        f, sigma = _embed_h(elem)
        got = _tilde_value(gw.base, psi_r, trivial, f, sigma)
        prods = [reduce(gw.base.mult, (f[i] for i in cyc)) for cyc in perm_cycles(sigma)[0]]
        expected = (p - 1) ** len(prods) if all(x == (0, 0) for x in prods) else 0
        ok = ok and got == expected
    out.append(_claim("heavy_extension_closed_form", {"p": p, "w": w}, True, ok))
    return out


def restriction_claims(p: int, w: int, guard: Optional[int] = None) -> list[ClaimResult]:
    """The main check: brute-force restriction multiplicities equal the
    label-level coefficients, for every big-group label."""
    out = []
    for gamma in generate_multipartitions(w, p):
        out.append(
            _claim(
                "restriction_matches_formula",
                {"p": p, "w": w, "gamma": gamma},
                decomp.restrict_G_to_H(gamma, p),
                oracle_restriction(gamma, p, guard),
            )
        )
    return out


def mackey_claims(p: int, k: int, guard: Optional[int] = None) -> list[ClaimResult]:
    """Multiplicity identities for the inductions between the two wreath
    products on k letters, against Littlewood-Richardson numbers."""
    pair = base_group(p)
    gw = wreath_group(p, k, "G", guard)
    hw = wreath_group(p, k, "H", guard)
    out = []
    psi_r_tilde = tilde_character(gw, pair.G.irr[pair.r - 1], (k,) if k else ())
    res_r = restrict_to_h(gw, hw, psi_r_tilde)
    for i in pair.islots:
        slot = pair.islots.index(i)
        theta_tilde = tilde_character(hw, pair.H.irr[slot], (k,) if k else ())
        out.append(
            _claim(
                "heavy_restriction_contains_each_linear_once",
                {"p": p, "k": k, "i": i},
                1,
                _as_multiplicity(inner_product(res_r, theta_tilde)),
            )
        )
    for beta in generate_partitions(k):
        lhs = restrict_to_h(gw, hw, tilde_character(gw, pair.G.irr[pair.r - 1], beta))
        for i in pair.islots:
            slot = pair.islots.index(i)
            for alpha in generate_partitions(k):
                rhs = tilde_character(hw, pair.H.irr[slot], alpha)
                out.append(
                    _claim(
                        "heavy_tensor_restriction_multiplicity",
                        {"p": p, "k": k, "i": i, "alpha": alpha, "beta": beta},
                        1 if alpha == beta else 0,
                        _as_multiplicity(inner_product(lhs, rhs)),
                    )
                )
    for i in pair.islots:
        for j in range(k + 1):
            for alpha in generate_partitions(k):
                for beta in generate_partitions(j):
                    for gamma in generate_partitions(k - j):
                        got = verify_mackey_multiplicities(
                            i, j, alpha, beta, gamma, p, k, guard
                        )
                        out.append(
                            _claim(
                                "double_induction_multiplicity_is_lr",
                                {
                                    "p": p,
                                    "k": k,
                                    "i": i,
                                    "j": j,
                                    "alpha": alpha,
                                    "beta": beta,
                                    "gamma": gamma,
                                },
                                lr_coefficient(alpha, beta, gamma),
                                got,
                            )
                        )
    return out


def reconstruction_claims(p: int, k: int, guard: Optional[int] = None) -> list[ClaimResult]:
    """The induced linear-extension characters decompose as the LR-weighted
    sum of block inductions, as class functions."""
    pair = base_group(p)
    gw = wreath_group(p, k, "G", guard)
    out = []
    psi_r = pair.G.irr[pair.r - 1]
    m = p - 1
    for i in pair.islots:
        theta_table = _theta_on_embedded_h(pair, i)
        psi_i = pair.G.irr[i - 1]
        for alpha in generate_partitions(k):
            lhs = induce(
                gw,
                _block_chi0(gw, [(0, k, theta_table, alpha)]),
                group_order(p, k, "H"),
            )
            rhs_vals = [Cyclotomic(m)] * len(gw.class_reps)
            for j in range(k + 1):
                for beta in generate_partitions(j):
                    for gamma in generate_partitions(k - j):
                        c = lr_coefficient(alpha, beta, gamma)
                        if not c:
                            continue
                        if j == 0:
                            term = tilde_character(gw, psi_i, gamma)
                        elif j == k:
                            term = tilde_character(gw, psi_r, beta)
                        else:
                            sub = (
                                len(pair.G.elements) ** k
                                * factorial(j)
                                * factorial(k - j)
                            )
                            term = induce(
                                gw,
                                _block_chi0(
                                    gw, [(0, j, psi_r, beta), (j, k - j, psi_i, gamma)]
                                ),
                                sub,
                            )
                        rhs_vals = [a + v * c for a, v in zip(rhs_vals, term.values)]
            out.append(
                _claim(
                    "induced_linear_extension_reconstruction",
                    {"p": p, "k": k, "i": i, "alpha": alpha},
                    tuple(lhs.values),
                    tuple(rhs_vals),
                )
            )
    return out


def verify_suite(
    p: int,
    w: int,
    guard: Optional[int] = None,
    with_mackey: bool = True,
    with_reconstruction: Optional[bool] = None,
) -> list[ClaimResult]:
    """All claims for the given parameters.  Groups that would exceed the
    element guard produce 'skip' records instead of failures."""
    try:
        base_group(p)
    except ValueError as exc:
        return [ClaimResult("base_group_supported", {"p": p, "w": w}, "", str(exc), "skip")]
    out = base_group_claims(p)
    try:
        wreath_group(p, w, "G", guard)
    except GuardError as exc:
        out.append(ClaimResult("group_within_guard", {"p": p, "w": w}, "", str(exc), "skip"))
        return out
    out += class_structure_claims(p, w, guard)
    out += character_claims(p, w, guard)
    out += tilde_restriction_claims(p, w, guard)
    out += restriction_claims(p, w, guard)
    if with_mackey and w >= 1:
        out += mackey_claims(p, w, guard)
    if with_reconstruction is None:
        with_reconstruction = w <= 2
    if with_reconstruction and w >= 1:
        out += reconstruction_claims(p, w, guard)
    return out

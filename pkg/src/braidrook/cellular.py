"""Cell structure of the partial-permutation algebra: triples (dom, pi, im),
the inflation maps phi/theta/psi, the U(k) module of k-subsets, the cell
dimension combinatorics c^r_lambda, the branching (Bratteli) diagram, and a
semisimplicity certificate.

A rank-k basis diagram is equivalently a triple (u, b, v): a k-subset u (its
domain), a permutation b of {1..k} (written in sorted coordinates), and a
k-subset v (its image). Products act on these triples through phi_k and
theta_k modulo diagrams of lower rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .diagrams import (
    PartialPermutation,
    SetPartitionDiagram,
    compose_perms,
    identity_perm,
    invert_perm,
    rook_elements,
)
from .linalg import det
from .matrix import Matrix
from .scalars import scalar

# -- partitions ----------------------------------------------------------------


def partitions_of(k: int) -> list[tuple[int, ...]]:
    """Partitions of k as weakly decreasing tuples, in descending
    lexicographic order: (k), (k-1,1), ..., (1,)*k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out: list[tuple[int, ...]] = []

    def grow(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            grow(remaining - part, part, prefix)
            prefix.pop()

    grow(k, k, [])
    return out


def is_partition(parts: tuple[int, ...]) -> bool:
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        a >= b for a, b in zip(parts, parts[1:])
    )


def hook_lengths(parts: tuple[int, ...]) -> list[list[int]]:
    conj = [sum(1 for p in parts if p > i) for i in range(parts[0])] if parts else []
    return [
        [(parts[i] - j) + (conj[j] - i) - 1 for j in range(parts[i])]
        for i in range(len(parts))
    ]


def standard_tableaux_count(parts: tuple[int, ...]) -> int:
    """f^lambda by the hook-length formula."""
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    k = sum(parts)
    denom = 1
    for row in hook_lengths(parts):
        for h in row:
            denom *= h
    f, rem = divmod(factorial(k), denom)
    assert rem == 0
    return f


def gl_weyl_dim(parts: tuple[int, ...], m: int) -> int:
    """Dimension of the irreducible polynomial GL_m module with highest
    weight lambda (padded with zeros): the Weyl product
    prod_{i<j} (lambda_i - lambda_j + j - i)/(j - i), which counts
    semistandard tableaux of shape lambda with entries in 1..m."""
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    if len(parts) > m:
        return 0
    lam = list(parts) + [0] * (m - len(parts))
    num = den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    d, rem = divmod(num, den)
    assert rem == 0
    return d


def partition_minus_boxes(parts: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All partitions obtained by removing one box."""
    out = []
    for i, p in enumerate(parts):
        if i == len(parts) - 1 or parts[i + 1] < p:
            smaller = parts[:i] + ((p - 1,) if p > 1 else ()) + parts[i + 1 :]
            out.append(smaller)
    return out


def partition_plus_boxes(parts: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All partitions obtained by adding one box."""
    out = []
    for i in range(len(parts)):
        if i == 0 or parts[i] < parts[i - 1]:
            out.append(parts[:i] + (parts[i] + 1,) + parts[i + 1 :])
    out.append(parts + (1,))
    return out


@dataclass(frozen=True)
class CellLabel:
    """A cell label (k, lambda) with lambda a partition of k."""

    k: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if not is_partition(self.parts) or sum(self.parts) != self.k:
            raise ValueError(f"lambda={self.parts} is not a partition of {self.k}")

    def fits_length(self, n: int) -> bool:
        """Length bound used by the tensor-space theory: l(lambda) <= n-1."""
        return len(self.parts) <= n - 1


def cell_labels(r: int) -> list[CellLabel]:
    """The label set: all partitions of k for 0 <= k <= r, k ascending and
    each batch in descending lexicographic order."""
    return [CellLabel(k, p) for k in range(r + 1) for p in partitions_of(k)]


# -- triples -------------------------------------------------------------------


@dataclass(frozen=True)
class CellTriple:
    """(dom, pi, im): sorted k-subsets and the permutation of {1..k} written
    in sorted coordinates: x_i d = y_{pi(i)}."""

    dom: tuple[int, ...]
    pi: tuple[int, ...]
    im: tuple[int, ...]

    def __post_init__(self):
        k = len(self.dom)
        if len(self.im) != k or len(self.pi) != k:
            raise ValueError("dom, pi, im must share one size k")
        if tuple(sorted(self.dom)) != self.dom or tuple(sorted(self.im)) != self.im:
            raise ValueError("dom and im must be sorted")
        if sorted(self.pi) != list(range(1, k + 1)):
            raise ValueError("pi must be a permutation of 1..k")


def triple_of(d: PartialPermutation) -> CellTriple:
    xs = tuple(sorted(d.dom))
    ys = tuple(sorted(d.im))
    pos = {y: j + 1 for j, y in enumerate(ys)}
    m = d.mapping()
    pi = tuple(pos[m[x]] for x in xs)
    return CellTriple(xs, pi, ys)


def diagram_of(t: CellTriple, r: int) -> PartialPermutation:
    return PartialPermutation(r, [(x, t.im[t.pi[i] - 1]) for i, x in enumerate(t.dom)])


def star(d: PartialPermutation) -> PartialPermutation:
    """The anti-involution: flip the diagram top to bottom."""
    return PartialPermutation(d.r, [(y, x) for x, y in d.pairs])


def star_diagram(d: SetPartitionDiagram) -> SetPartitionDiagram:
    r = d.r
    return SetPartitionDiagram(
        r, [tuple(x + r if x <= r else x - r for x in b) for b in d.blocks]
    )


def k_subsets(r: int, k: int) -> list[tuple[int, ...]]:
    """k-subsets of {1..r} in lexicographic order; the U(k) basis order."""
    return list(combinations(range(1, r + 1), k))


# -- inflation maps -------------------------------------------------------------


def phi(a: PartialPermutation, u, z, r: int) -> tuple[Fraction, frozenset[int]] | None:
    """phi_k(a, u) = z^(r - rank a) * (preimage of u under a) when u is
    contained in im(a); None (zero) otherwise."""
    if a.r != r:
        raise ValueError("size mismatch")
    u = frozenset(u)
    if not u <= a.im:
        return None
    inv = {y: x for x, y in a.pairs}
    return scalar(z) ** (r - a.rank), frozenset(inv[y] for y in u)


def theta(a: PartialPermutation, u) -> tuple[int, ...] | None:
    """theta_k(a, u): the permutation of {1..k} carried by the restriction
    of a to the preimage of u, in sorted coordinates; None if u is not
    contained in im(a)."""
    u = frozenset(u)
    if not u <= a.im:
        return None
    pairs = [(x, y) for x, y in a.pairs if y in u]
    return triple_of(PartialPermutation(a.r, pairs)).pi


def psi(y, u, z, r: int) -> Fraction:
    """psi_k(y, u) = z^(r-k) if y = u, else 0 (coefficient of the identity of
    the rank-k symmetric group algebra)."""
    y, u = frozenset(y), frozenset(u)
    if len(y) != len(u):
        raise ValueError("subsets must share one size k")
    return scalar(z) ** (r - len(u)) if y == u else Fraction(0)


def uk_action(g: PartialPermutation, u, z) -> tuple[Fraction, frozenset[int]] | None:
    """Action of a basis diagram on the k-subset module U(k): a full
    permutation w sends u to its preimage (u)w^{-1}, and p_j multiplies by z
    when j is outside u and kills u otherwise; both are phi_k."""
    return phi(g, u, z, g.r)


# -- dimension combinatorics ------------------------------------------------------


def dim_recursion(r: int) -> dict[CellLabel, int]:
    """c^r_lambda for lambda in the label set of r, by the branching rule
    c^r_lambda = [|lambda| <= r-1] c^(r-1)_lambda + sum over removing a box."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    table: dict[tuple[int, ...], int] = {(): 1}
    for t in range(1, r + 1):
        prev, table = table, {}
        for lam in (p for k in range(t + 1) for p in partitions_of(k)):
            total = prev.get(lam, 0)
            for mu in partition_minus_boxes(lam):
                total += prev.get(mu, 0)
            if total:
                table[lam] = total
    return {label: table[label.parts] for label in cell_labels(r)}


def cell_dim(r: int, parts: tuple[int, ...]) -> int:
    """dim of the cell module with label lambda: C(r,k) f^lambda."""
    parts = tuple(parts)
    k = sum(parts)
    if k > r:
        raise ValueError("|lambda| exceeds r")
    return comb(r, k) * standard_tableaux_count(parts)


def dims_table(r: int) -> list[dict]:
    """One row per label: the recursion value, the closed form, and the
    square contribution to dim P'_r."""
    rec = dim_recursion(r)
    rows = []
    for label, c in rec.items():
        closed = cell_dim(r, label.parts)
        rows.append(
            {
                "k": label.k,
                "lambda": list(label.parts),
                "c": c,
                "binomial_times_hooks": closed,
                "square": c * c,
            }
        )
    return rows


def rook_dimension(r: int) -> int:
    return sum(comb(r, k) ** 2 * factorial(k) for k in range(r + 1))


# -- branching diagram --------------------------------------------------------------


@dataclass
class BratteliDiagram:
    """rows[t] lists the vertex labels at level t; edges[t] joins row t to
    row t+1 as index pairs (i, j)."""

    rows: list[list[tuple[int, ...]]]
    edges: list[list[tuple[int, int]]]

    def path_counts(self) -> list[list[int]]:
        counts = [[1]]
        for t, edge_list in enumerate(self.edges):
            nxt = [0] * len(self.rows[t + 1])
            for i, j in edge_list:
                nxt[j] += counts[t][i]
            counts.append(nxt)
        return counts

    def leaf_counts(self) -> dict[tuple[int, ...], int]:
        return dict(zip(self.rows[-1], self.path_counts()[-1]))

    def to_dot(self) -> str:
        def fmt(parts: tuple[int, ...]) -> str:
            return ",".join(str(p) for p in parts) if parts else "()"

        lines = ["digraph bratteli {", "  rankdir=TB;", "  node [shape=plaintext];"]
        for t, row in enumerate(self.rows):
            names = " ".join(f'"L{t}_{i}"' for i in range(len(row)))
            lines.append(f"  {{ rank=same; {names} }}")
            for i, parts in enumerate(row):
                lines.append(f'  "L{t}_{i}" [label="{fmt(parts)}"];')
        for t, edge_list in enumerate(self.edges):
            for i, j in edge_list:
                lines.append(f'  "L{t}_{i}" -> "L{t+1}_{j}";')
        lines.append("}")
        return "\n".join(lines)


def bratteli(r: int) -> BratteliDiagram:
    """Rows built by copying row t-1 and appending the partitions of t in
    descending lexicographic order; edges keep a label or add one box."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    rows: list[list[tuple[int, ...]]] = [[()]]
    edges: list[list[tuple[int, int]]] = []
    for t in range(1, r + 1):
        row = list(rows[t - 1]) + partitions_of(t)
        index = {p: j for j, p in enumerate(row)}
        edge_list = []
        for i, mu in enumerate(rows[t - 1]):
            if mu in index:
                edge_list.append((i, index[mu]))
            for lam in partition_plus_boxes(mu):
                if lam in index:
                    edge_list.append((i, index[lam]))
        rows.append(row)
        edges.append(sorted(edge_list))
    return BratteliDiagram(rows, edges)


# -- semisimplicity -----------------------------------------------------------------


def semisimplicity_certificate(r: int, z) -> dict:
    """Two independent certificates that the algebra at parameter z is
    semisimple: (1) the Gram determinant of the regular trace form on the
    diagram basis is nonzero; (2) every cell form psi_k has the nonzero scale
    z^(r-k). Both are reported and must agree."""
    z = scalar(z)
    if z == 0:
        raise ValueError("parameter z must be nonzero")
    basis = rook_elements(r)
    m = len(basis)

    def regular_trace(c: PartialPermutation, power: int) -> Fraction:
        total = Fraction(0)
        for e in basis:
            prod, dropped = c.compose(e)
            if prod == e:
                total += z ** (power + dropped)
        return total

    gram_rows = []
    for a in basis:
        row = []
        for b in basis:
            prod, dropped = a.compose(b)
            row.append(regular_trace(prod, dropped))
        gram_rows.append(row)
    gram_det = det(Matrix.from_rows(gram_rows))

    cells = [
        {"k": k, "psi_scale": str(z ** (r - k)), "nonzero": z ** (r - k) != 0}
        for k in range(r + 1)
    ]
    gram_ok = gram_det != 0
    cells_ok = all(c["nonzero"] for c in cells)
    return {
        "r": r,
        "z": str(z),
        "gram_size": m,
        "gram_det": str(gram_det),
        "gram_nondegenerate": gram_ok,
        "cells": cells,
        "cells_nondegenerate": cells_ok,
        "agree": gram_ok == cells_ok,
        "semisimple": gram_ok and cells_ok,
    }

"""Exact linear-algebra kernels: echelon forms, nullspaces, commutants,
and multiplicative span closure.

Everything is computed over the rationals with no rounding. Bases are
returned in a canonical echelon order so outputs are deterministic and
independent of pivot choices (pivot selection is performance-only). Large
nullspace systems are dispatched to a certified modular accelerator whose
candidates are verified exactly before use; on any failure the pure
rational path runs instead, so results never depend on the fast path.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .matrix import Matrix

SparseRow = list[tuple[int, Fraction]]

# Work estimate above which nullspace extraction is attempted modularly
# first. Purely a speed knob: both routes return identical bases.
_MODULAR_THRESHOLD = 40_000_000


def _digit_size(x: Fraction) -> int:
    """Pivot-size heuristic: total digit length of numerator and denominator."""
    n, d = x.numerator, x.denominator
    return len(str(abs(n))) + len(str(d))


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns).

    The pivot row for each column is chosen to minimize the digit-size
    heuristic; the returned RREF is the canonical one regardless.
    """
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        best = -1
        best_size = None
        for i in range(r, len(work)):
            v = work[i][col]
            if v:
                size = _digit_size(v)
                if best_size is None or size < best_size:
                    best, best_size = i, size
        if best < 0:
            continue
        work[r], work[best] = work[best], work[r]
        prow = work[r]
        inv = 1 / prow[col]
        if inv != 1:
            work[r] = prow = [x * inv for x in prow]
        for i in range(len(work)):
            if i == r:
                continue
            c = work[i][col]
            if c:
                row = work[i]
                for k in range(col, ncols):
                    pv = prow[k]
                    if pv:
                        row[k] -= c * pv
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(m: Matrix) -> int:
    return len(rref(m.to_lists())[1])


def _nullspace_from_rref(echelon: list[list[Fraction]], pivots: list[int], ncols: int):
    """Canonical nullspace basis: one vector per free column f, with a 1 at f
    and support otherwise only on earlier pivot columns (trailing-echelon form)."""
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            if p < f:
                c = echelon[i][f]
                if c:
                    v[p] = -c
        basis.append(tuple(v))
    return basis


def nullspace_basis(m: Matrix) -> list[tuple[Fraction, ...]]:
    """Exact basis of {x : m x = 0}, in canonical trailing-echelon order."""
    sparse = []
    for i in range(m.rows):
        row = m.row(i)
        entries = [(j, v) for j, v in enumerate(row) if v]
        if entries:
            sparse.append(entries)
    return nullspace_of_rows(sparse, m.cols)


def nullspace_of_rows(rows: list[SparseRow], ncols: int) -> list[tuple[Fraction, ...]]:
    """Nullspace of a sparsely given system; dispatches to the certified
    modular engine for large systems, with exact fallback."""
    if not rows:
        return [tuple(Fraction(1) if j == f else Fraction(0) for j in range(ncols)) for f in range(ncols)]
    est = len(rows) * ncols * min(len(rows), ncols)
    if est >= _MODULAR_THRESHOLD:
        from . import _modlinalg

        result = _modlinalg.certified_nullspace(rows, ncols)
        if result is not None:
            return [tuple(v) for v in result]
    dense = []
    for entries in rows:
        row = [Fraction(0)] * ncols
        for j, v in entries:
            row[j] = v
        dense.append(row)
    echelon, pivots = rref(dense)
    return _nullspace_from_rref(echelon, pivots, ncols)


def invert(m: Matrix) -> Matrix:
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = []
    for i in range(n):
        row = m.row(i) + [Fraction(0)] * n
        row[n + i] = Fraction(1)
        aug.append(row)
    echelon, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return Matrix.from_rows([echelon[i][n:] for i in range(n)])


def det(m: Matrix) -> Fraction:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    work: list[list[int]] = []
    for i in range(n):
        row = m.row(i)
        denom = lcm(*(x.denominator for x in row)) if n > 1 else row[0].denominator
        scale *= denom
        work.append([int(x * denom) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if work[i][k]), None)
            if swap is None:
                return Fraction(0)
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, n):
            wik = work[i][k]
            rowi = work[i]
            rowk = work[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pivot - wik * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    return Fraction(sign * work[n - 1][n - 1], 1) / scale


class VectorSpan:
    """Incremental exact row space with a maintained reduced-echelon basis.

    mode "lead": pivots are leading (leftmost) nonzeros, the usual RREF.
    mode "trail": pivots are trailing nonzeros; this is the canonical form
    used for nullspace bases.
    """

    def __init__(self, length: int, mode: str = "lead"):
        if mode not in ("lead", "trail"):
            raise ValueError("mode must be 'lead' or 'trail'")
        self.length = length
        self.mode = mode
        self._rows: dict[int, list[Fraction]] = {}

    @property
    def dim(self) -> int:
        return len(self._rows)

    def _pivot_of(self, v: list[Fraction]) -> int | None:
        rng = range(self.length) if self.mode == "lead" else range(self.length - 1, -1, -1)
        for i in rng:
            if v[i]:
                return i
        return None

    def reduce(self, vec: Iterable[Fraction]) -> list[Fraction]:
        """Residual of vec after elimination against the current basis."""
        v = list(vec)
        if len(v) != self.length:
            raise ValueError("vector length mismatch")
        hits = [(row, v[p]) for p, row in self._rows.items() if v[p]]
        for row, c in hits:
            for k, rv in enumerate(row):
                if rv:
                    v[k] -= c * rv
        return v

    def contains(self, vec: Iterable[Fraction]) -> bool:
        return all(x == 0 for x in self.reduce(vec))

    def add(self, vec: Iterable[Fraction]) -> list[Fraction] | None:
        """Adjoin vec; returns the new normalized basis row, or None if
        vec already lies in the span."""
        v = self.reduce(vec)
        p = self._pivot_of(v)
        if p is None:
            return None
        inv = 1 / v[p]
        if inv != 1:
            v = [x * inv for x in v]
        for row in self._rows.values():
            c = row[p]
            if c:
                for k, nv in enumerate(v):
                    if nv:
                        row[k] -= c * nv
        self._rows[p] = v
        return v

    def basis_rows(self) -> list[tuple[Fraction, ...]]:
        """Canonical basis, ordered by pivot position."""
        return [tuple(self._rows[p]) for p in sorted(self._rows)]


def span_of_vectors(vectors: Iterable[Sequence[Fraction]], length: int, mode: str = "lead") -> VectorSpan:
    span = VectorSpan(length, mode)
    for v in vectors:
        span.add(v)
    return span


def matrix_span(mats: Sequence[Matrix]) -> VectorSpan:
    """Row space of the matrices' row-major vectorizations."""
    if not mats:
        raise ValueError("empty matrix list")
    n = mats[0].rows * mats[0].cols
    return span_of_vectors((m.entries() for m in mats), n)


def spans_equal(a: Sequence[Matrix], b: Sequence[Matrix]) -> bool:
    """Whether two lists of equal-shape matrices span the same subspace."""
    sa, sb = matrix_span(a), matrix_span(b)
    return sa.basis_rows() == sb.basis_rows()


def span_contains(mats: Sequence[Matrix], candidate: Matrix) -> bool:
    return matrix_span(mats).contains(candidate.entries())


def span_closure(
    seed: Sequence[Matrix],
    multipliers: Sequence[Matrix] | None = None,
) -> tuple[int, list[Matrix]]:
    """Smallest unital subalgebra of N x N matrices containing seed.

    Worklist closure: keep an echelon basis of the current span, multiply
    unprocessed basis elements by the multiplier set on both sides, adjoin
    independent products, repeat to fixpoint (dimension <= N^2 bounds it).
    multipliers defaults to seed; passing a subset is sound whenever every
    seed element lies in the unital algebra the subset generates (e.g.
    inverses of multipliers, by Cayley-Hamilton).
    """
    if not seed:
        raise ValueError("span_closure needs a nonempty seed")
    n = seed[0].rows
    if any(not m.is_square() or m.rows != n for m in seed):
        raise ValueError("seed matrices must be square and same size")
    mult = list(multipliers) if multipliers is not None else list(seed)
    span = VectorSpan(n * n)
    queue: list[Matrix] = []
    for m in [Matrix.identity(n), *seed]:
        row = span.add(m.entries())
        if row is not None:
            queue.append(Matrix(n, n, row))
    while queue:
        w = queue.pop()
        for g in mult:
            for prod in (w * g, g * w):
                row = span.add(prod.entries())
                if row is not None:
                    queue.append(Matrix(n, n, row))
    basis = [Matrix(n, n, list(row)) for row in span.basis_rows()]
    return span.dim, basis


def commutant(gens: Sequence[Matrix], size: int | None = None) -> tuple[int, list[Matrix]]:
    """Basis of {X : gX = Xg for all g in gens}.

    Solved as the joint nullspace of X -> gX - Xg over the row-major
    vectorization of X. With no generators the full matrix space comes
    back, which needs an explicit size.
    """
    if not gens:
        if size is None:
            raise ValueError("empty generator list needs an explicit size")
        n = size
    else:
        n = gens[0].rows
        if any(not g.is_square() or g.rows != n for g in gens):
            raise ValueError("generators must be square and same size")
    rows: list[SparseRow] = []
    for g in gens:
        for i in range(n):
            for j in range(n):
                coeff: dict[int, Fraction] = {}
                for k in range(n):
                    gik = g[i, k]
                    if gik:
                        idx = k * n + j
                        coeff[idx] = coeff.get(idx, Fraction(0)) + gik
                    gkj = g[k, j]
                    if gkj:
                        idx = i * n + k
                        coeff[idx] = coeff.get(idx, Fraction(0)) - gkj
                entries = sorted((c, v) for c, v in coeff.items() if v)
                if entries:
                    rows.append(entries)
    vectors = nullspace_of_rows(rows, n * n)
    return len(vectors), [Matrix(n, n, list(v)) for v in vectors]


def commutant_of_span(basis: Sequence[Matrix]) -> tuple[int, list[Matrix]]:
    """Commutant of the algebra spanned by basis, via a small generating
    subset: a prefix of basis whose span closure already spans everything.
    The commutant of a generating set equals the commutant of the algebra.

    The closure grows incrementally: adding a generator multiplies it
    against the elements already closed, then closes the new arrivals
    against every generator, so no product is recomputed across prefix
    extensions."""
    if not basis:
        raise ValueError("empty basis")
    n = basis[0].rows
    target = matrix_span(basis).dim
    gens: list[Matrix] = []
    span = VectorSpan(n * n)
    reps: list[Matrix] = []
    first = span.add(Matrix.identity(n).entries())
    reps.append(Matrix(n, n, first))
    for m in basis:
        if span.dim >= target:
            break
        row = span.add(m.entries())
        if row is None:
            continue
        gens.append(m)
        queue = [Matrix(n, n, row)]
        for w in reps:
            for prod in (w * m, m * w):
                extra = span.add(prod.entries())
                if extra is not None:
                    queue.append(Matrix(n, n, extra))
        while queue:
            w = queue.pop()
            reps.append(w)
            for g in gens:
                for prod in (w * g, g * w):
                    extra = span.add(prod.entries())
                    if extra is not None:
                        queue.append(Matrix(n, n, extra))
    return commutant(gens, size=n)

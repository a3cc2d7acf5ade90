"""Zero-left-prime tests, ZLP extraction from a full-row-rank matrix, and a
staged, budgeted completion of a ZLP matrix to a unimodular one.

The completion is a deterministic search over exact column operations: it
hunts for constant pivots, reduces degrees by leading-term division, and
falls back to cofactor-driven moves.  It either returns a certified
unimodular completion or reports that its budget ran out; budget exhaustion
is inconclusive, never a refutation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groebner import is_unit_ideal
from .matrix import PolyMatrix, ShapeError, all_minors, minors_report
from .modules import module_equal, module_quotient_by_poly, rank_of_module
from .poly import DEGREVLEX, Polynomial, exact_div, mono_div, mono_divides

DEFAULT_MAX_OPS = 200
DEFAULT_MAX_DEGREE = 12

COMPLETED = "completed"
FAILED_DEPTH_LIMIT = "failed-depth-limit"


class NotFullRankError(ValueError):
    """The matrix does not have full row rank."""


class HypothesisError(ValueError):
    """The reduced-minor unit-ideal hypothesis does not hold."""


class FactorizationIncompleteError(RuntimeError):
    """The generator selection step could not produce a square factor."""


@dataclass(frozen=True)
class CompletionResult:
    status: str
    matrix: PolyMatrix | None = None
    ops_used: int = 0

    @property
    def completed(self) -> bool:
        return self.status == COMPLETED


def is_zlp(matrix: PolyMatrix) -> bool:
    """True iff the maximal minors generate the unit ideal.

    Raises NotFullRankError when the matrix is rank deficient, since the
    property is only defined for full-row-rank matrices.
    """
    r, l = matrix.shape
    if r > l:
        raise ShapeError("expected at least as many columns as rows")
    if matrix.rank() < r:
        raise NotFullRankError("matrix does not have full row rank")
    flag, _ = is_unit_ideal(all_minors(matrix, r))
    return flag


def zlp_factorize(h0: PolyMatrix) -> tuple[PolyMatrix, PolyMatrix]:
    """Split a full-row-rank matrix as h0 = h1 * h2 with h2 zero left prime.

    Requires that the maximal reduced minors of h0 generate the unit ideal.
    The ZLP factor is recovered as the quotient of the row module by the
    maximal-minor gcd; the square factor is then solved for exactly.
    """
    r, l = h0.shape
    if h0.rank() < r:
        raise NotFullRankError("matrix does not have full row rank")
    report = minors_report(h0, r)
    unit, _ = is_unit_ideal(report.reduced)
    if not unit:
        raise HypothesisError(
            "maximal reduced minors do not generate the unit ideal")
    if report.d.is_constant:
        # already ZLP: the gcd of the maximal minors is a unit
        return PolyMatrix.identity(r, h0.nvars), h0

    if r == 1:
        w0 = report.d  # gcd of the single row's entries
        h2 = h0.map(lambda p: exact_div(p, w0))
        return PolyMatrix([[w0]]), h2

    rows = [h0.row(i) for i in range(r)]
    quotient = module_quotient_by_poly(rows, report.d)
    candidates = _select_spanning_subset(quotient, r)
    if candidates is None:
        raise FactorizationIncompleteError(
            "quotient module did not yield a square generating set")
    h2 = PolyMatrix([list(v) for v in candidates])
    h1 = _solve_left_factor(h0, h2)
    assert h1 * h2 == h0
    return h1, h2


def _select_spanning_subset(generators, r):
    """First r-subset (lexicographic) spanning the same module, or None."""
    gens = list(generators)
    if len(gens) < r:
        return None
    if len(gens) == r:
        return gens if rank_of_module(gens) == r else None
    from itertools import combinations
    for subset in combinations(range(len(gens)), r):
        chosen = [gens[k] for k in subset]
        if rank_of_module(chosen) < r:
            continue
        if module_equal(chosen, gens):
            return chosen
    return None


def _solve_left_factor(h0: PolyMatrix, h2: PolyMatrix) -> PolyMatrix:
    """The unique h1 with h0 = h1 * h2, via the normal-equations adjugate."""
    gram = h2 * h2.transpose()
    det = gram.determinant()
    n = gram.rows
    idx = list(range(n))
    adj_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = gram.submatrix([a for a in idx if a != j],
                                   [b for b in idx if b != i]).determinant()
            row.append(minor if (i + j) % 2 == 0 else -minor)
        adj_rows.append(row)
    adj = PolyMatrix(adj_rows)
    numerator = h0 * h2.transpose() * adj
    try:
        return numerator.map(lambda p: exact_div(p, det))
    except ArithmeticError as exc:
        raise FactorizationIncompleteError(
            "left factor is not polynomial") from exc


class _OpTracker:
    """Applies exact column operations to M while maintaining A with the
    invariant M * A == H; at the end A is the completed unimodular matrix."""

    def __init__(self, h: PolyMatrix, max_ops: int, max_degree: int):
        self.m = [list(h.row(i)) for i in range(h.rows)]
        self.rows = h.rows
        self.cols = h.cols
        self.nvars = h.nvars
        self.a = [list(PolyMatrix.identity(h.cols, h.nvars).row(i))
                  for i in range(h.cols)]
        self.max_ops = max_ops
        self.max_degree = max_degree
        self.ops = 0
        self.exhausted = False

    def _charge(self) -> bool:
        self.ops += 1
        if self.ops > self.max_ops:
            self.exhausted = True
            return False
        return True

    def _degree_ok(self) -> bool:
        limit = self.max_degree
        for row in self.m:
            for p in row:
                if p.total_degree() > limit:
                    self.exhausted = True
                    return False
        for row in self.a:
            for p in row:
                if p.total_degree() > limit:
                    self.exhausted = True
                    return False
        return True

    def swap(self, s: int, t: int) -> bool:
        if s == t:
            return True
        if not self._charge():
            return False
        for row in self.m:
            row[s], row[t] = row[t], row[s]
        self.a[s], self.a[t] = self.a[t], self.a[s]
        return True

    def scale(self, t: int, c) -> bool:
        """Multiply column t of M by the nonzero constant c."""
        if not self._charge():
            return False
        for row in self.m:
            row[t] = row[t] * c
        inv = 1 / c
        self.a[t] = [p * inv for p in self.a[t]]
        return True

    def add_multiple(self, t: int, s: int, q: Polynomial) -> bool:
        """Column t of M += q * column s; row s of A -= q * row t."""
        if q.is_zero:
            return True
        if not self._charge():
            return False
        for row in self.m:
            row[t] = row[t] + q * row[s]
        self.a[s] = [p - q * pt for p, pt in zip(self.a[s], self.a[t])]
        return self._degree_ok()

    def block_transform(self, s: int, t: int, x11, x12, x21, x22,
                        y11, y12, y21, y22) -> bool:
        """Right-multiply M by the identity with [[x11,x12],[x21,x22]]
        embedded at columns (s, t); Y must be the exact inverse block."""
        if not self._charge():
            return False
        for row in self.m:
            ms, mt = row[s], row[t]
            row[s] = ms * x11 + mt * x21
            row[t] = ms * x12 + mt * x22
        ra, rb = self.a[s], self.a[t]
        self.a[s] = [y11 * p + y12 * q for p, q in zip(ra, rb)]
        self.a[t] = [y21 * p + y22 * q for p, q in zip(ra, rb)]
        return self._degree_ok()


def complete_to_unimodular(h: PolyMatrix,
                           max_ops: int = DEFAULT_MAX_OPS,
                           max_degree: int = DEFAULT_MAX_DEGREE) -> CompletionResult:
    """Extend a ZLP r x l matrix to an l x l unimodular matrix having the
    input as its first r rows.

    Staged search: (1) exact column reduction hunting for constant pivots,
    (2) on a stall, a direct two-column completion from unit-ideal cofactors
    or a cofactor-combination column update, then stage 1 again.  Returns
    FAILED_DEPTH_LIMIT when the op or degree budget runs out.
    """
    r, l = h.shape
    if not is_zlp(h):
        raise HypothesisError("input is not zero left prime")
    if r == l:
        return CompletionResult(COMPLETED, h, 0)

    work = _OpTracker(h, max_ops, max_degree)
    order = DEGREVLEX

    for i in range(r):
        augmented = False
        while True:
            if work.exhausted:
                return CompletionResult(FAILED_DEPTH_LIMIT, None, work.ops)
            row = work.m[i]
            # stage 1a: a constant pivot among the free columns
            const_col = next((j for j in range(i, l)
                              if row[j].is_constant and not row[j].is_zero),
                             None)
            if const_col is not None:
                if not work.swap(i, const_col):
                    break
                value = work.m[i][i].constant_value()
                if value != 1 and not work.scale(i, 1 / value):
                    break
                cleared = True
                for j in range(l):
                    if j == i or work.m[i][j].is_zero:
                        continue
                    if not work.add_multiple(j, i, -work.m[i][j]):
                        cleared = False
                        break
                if cleared:
                    break  # pivot row established
                continue
            # stage 1b: leading-term division sweep within the row
            nonzero = [j for j in range(i, l) if not row[j].is_zero]
            if not nonzero:
                raise AssertionError("full row rank leaves a nonzero entry")
            pivot = min(nonzero,
                        key=lambda j: (row[j].total_degree(),
                                       order.key(row[j].leading_monomial(order)),
                                       j))
            lm_p, lc_p = work.m[i][pivot].leading_term(order)
            progress = False
            for j in nonzero:
                if j == pivot:
                    continue
                while not work.m[i][j].is_zero:
                    lm_j, lc_j = work.m[i][j].leading_term(order)
                    if not mono_divides(lm_p, lm_j):
                        break
                    step = Polynomial(h.nvars,
                                      {mono_div(lm_j, lm_p): lc_j / lc_p})
                    if not work.add_multiple(j, pivot, -step):
                        return CompletionResult(FAILED_DEPTH_LIMIT, None,
                                                work.ops)
                    progress = True
            if progress:
                continue
            # stage 2: cofactor-driven moves on the stalled row
            avail = [j for j in range(i, l) if not work.m[i][j].is_zero]
            entries = [work.m[i][j] for j in avail]
            unit, cof = is_unit_ideal(entries, track=True)
            if unit and len(avail) == 2:
                a, b = entries
                p, q = cof
                s, t = avail
                ok = work.block_transform(s, t, p, -b, q, a, a, b, -q, p)
                if not ok:
                    return CompletionResult(FAILED_DEPTH_LIMIT, None, work.ops)
                continue
            if unit and not augmented:
                augmented = True
                target = avail[0]
                applied = False
                for j, c in zip(avail, cof):
                    if j == target or c.is_zero:
                        continue
                    if not work.add_multiple(target, j, c):
                        return CompletionResult(FAILED_DEPTH_LIMIT, None,
                                                work.ops)
                    applied = True
                if applied:
                    continue
            return CompletionResult(FAILED_DEPTH_LIMIT, None, work.ops)
        if work.exhausted:
            return CompletionResult(FAILED_DEPTH_LIMIT, None, work.ops)

    completed = PolyMatrix(work.a)
    for i in range(r):
        assert tuple(completed.row(i)) == tuple(h.row(i))
    assert completed.is_unimodular()
    return CompletionResult(COMPLETED, completed, work.ops)

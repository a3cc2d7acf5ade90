"""Top-level procedures: extraction of powers of a linear factor
h = z1 - f(z2..zn) from a polynomial matrix, and the decision whether a
square matrix is equivalent to diag(h,..,h,1,..,1).

Every positive outcome carries witness matrices that are re-verified by
exact multiplication before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .completion import (DEFAULT_MAX_DEGREE, DEFAULT_MAX_OPS,
                         complete_to_unimodular, zlp_factorize)
from .groebner import buchberger, normal_form
from .matrix import (PolyMatrix, ShapeError, all_minors, column_reduced_minors,
                     gcd_chain, minor_ideal_generators)
from .modules import rank_of_module, syzygy
from .poly import (DEGREVLEX, MonomialOrder, Polynomial, divides, exact_div,
                   gcd_many)

FACTORED = "factored"
NO_FACTORIZATION = "no_factorization"
UNABLE_TO_JUDGE = "unable_to_judge"
COMPLETION_NOT_FOUND = "completion_not_found"

EQUIVALENT = "equivalent"
NOT_EQUIVALENT = "not_equivalent"


class NotInClassError(ValueError):
    """The linear polynomial does not divide the maximal-minor gcd."""


class PivotError(ValueError):
    """The supposed linear factor is not of the form z_i - f with f free
    of z_i."""


@dataclass(frozen=True)
class FactorizationOutcome:
    variant: str
    r: int
    h: Polynomial
    g1: PolyMatrix | None = None
    f1: PolyMatrix | None = None
    certificate: tuple[Polynomial, ...] = ()
    cofactors: tuple[Polynomial, ...] | None = None

    @property
    def factored(self) -> bool:
        return self.variant == FACTORED


@dataclass(frozen=True)
class EquivalenceOutcome:
    variant: str
    r: int
    h: Polynomial
    u: PolyMatrix | None = None
    d: PolyMatrix | None = None
    v: PolyMatrix | None = None
    certificate: tuple[Polynomial, ...] = ()

    @property
    def equivalent(self) -> bool:
        return self.variant == EQUIVALENT


def split_pivot(h: Polynomial, var_index: int = 0) -> Polynomial:
    """Check h == z_{var_index+1} - f with f free of that variable and
    return f."""
    coeffs = h.coefficients_in(var_index)
    if len(coeffs) != 2 or coeffs[1] != 1:
        raise PivotError(
            f"expected a monic linear polynomial in z{var_index + 1}")
    return -coeffs[0]


def classify(matrix: PolyMatrix, h: Polynomial) -> int:
    """The multiplicity r with which h can possibly be extracted: the rank
    drop of the matrix after substituting z1 -> f.

    Cross-checked against the gcd chain: r is also the unique index with
    h | d_{l-r+1} but h not | d_{l-r}.  Raises NotInClassError when h does
    not divide d_l.
    """
    f = split_pivot(h)
    l = matrix.rows
    if l > matrix.cols:
        raise ShapeError("expected at least as many columns as rows")
    chain = gcd_chain(matrix)  # d_0 .. d_l; divides() treats 0 as divisible
    if not divides(h, chain[l])[0]:
        raise NotInClassError(
            "h does not divide the gcd of the maximal minors")
    r_rank = l - matrix.substitute(0, f).rank()
    r_chain = None
    for r in range(1, l + 1):
        if divides(h, chain[l - r + 1])[0] and not divides(h, chain[l - r])[0]:
            r_chain = r
            break
    assert r_chain == r_rank, (
        f"rank route gives r={r_rank}, gcd-chain route gives r={r_chain}")
    return r_rank


def _extract_rows(matrix: PolyMatrix, h: Polynomial, count: int) -> PolyMatrix:
    """Divide the first ``count`` rows exactly by h."""
    rows = []
    for i in range(matrix.rows):
        if i < count:
            rows.append([exact_div(p, h) for p in matrix.row(i)])
        else:
            rows.append(list(matrix.row(i)))
    return PolyMatrix(rows)


def _diagonal_target(h: Polynomial, r: int, l: int) -> PolyMatrix:
    one = Polynomial.one(h.nvars)
    return PolyMatrix.diagonal([h] * r + [one] * (l - r))


def _annihilator(fbar: PolyMatrix, r: int,
                 reverse_tie_break: bool) -> PolyMatrix:
    """A full-row-rank stack of r syzygy generators of the substituted
    matrix's rows, chosen greedily in the basis's deterministic order."""
    rows = [fbar.row(i) for i in range(fbar.rows)]
    basis = syzygy(rows)
    gens = list(basis.generators)
    if reverse_tie_break:
        gens.reverse()
    chosen: list = []
    for g in gens:
        if rank_of_module(chosen + [g]) > len(chosen):
            chosen.append(g)
        if len(chosen) == r:
            break
    assert len(chosen) == r, "syzygy rank must match the multiplicity"
    return PolyMatrix([list(g) for g in chosen])


def factorize(matrix: PolyMatrix, h: Polynomial,
              order: MonomialOrder = DEGREVLEX,
              max_ops: int | None = None, max_degree: int | None = None,
              reverse_tie_break: bool = False) -> FactorizationOutcome:
    """Extract the full power h^r from the matrix when possible.

    Returns FACTORED with witnesses g1 (square, det a constant multiple of
    h^r) and f1 with matrix == g1 * f1 exactly; NO_FACTORIZATION (r == 1,
    provably none exists); UNABLE_TO_JUDGE (1 < r < l, the sufficient
    condition failed); or COMPLETION_NOT_FOUND (search budget exhausted).
    """
    max_ops = DEFAULT_MAX_OPS if max_ops is None else max_ops
    max_degree = DEFAULT_MAX_DEGREE if max_degree is None else max_degree

    f = split_pivot(h)
    l, m = matrix.shape
    r = classify(matrix, h)

    if r == l:
        f1 = _extract_rows(matrix, h, l)
        g1 = _diagonal_target(h, l, l)
        assert verify_factorization(matrix, g1, f1, h, l)
        return FactorizationOutcome(FACTORED, l, h, g1, f1)

    fbar = matrix.substitute(0, f)
    crm = column_reduced_minors(fbar, reverse_subsets=reverse_tie_break)
    basis = buchberger(crm, order, track=True)
    if not basis.is_unit:
        variant = NO_FACTORIZATION if r == 1 else UNABLE_TO_JUDGE
        return FactorizationOutcome(variant, r, h,
                                    certificate=basis.generators)
    cof = basis.cofactors[0]

    h0 = _annihilator(fbar, r, reverse_tie_break)
    _, h_zlp = zlp_factorize(h0)
    result = complete_to_unimodular(h_zlp, max_ops=max_ops,
                                    max_degree=max_degree)
    if not result.completed:
        return FactorizationOutcome(COMPLETION_NOT_FOUND, r, h,
                                    certificate=basis.generators,
                                    cofactors=tuple(cof))
    u = result.matrix
    uf = u * matrix
    f1 = _extract_rows(uf, h, r)
    g1 = u.inverse_unimodular() * _diagonal_target(h, r, l)
    assert verify_factorization(matrix, g1, f1, h, r)
    return FactorizationOutcome(FACTORED, r, h, g1, f1,
                                certificate=basis.generators,
                                cofactors=tuple(cof))


def factorize_general_variable(matrix: PolyMatrix, var_index: int,
                               f_i: Polynomial,
                               order: MonomialOrder = DEGREVLEX,
                               max_ops: int | None = None,
                               max_degree: int | None = None,
                               reverse_tie_break: bool = False
                               ) -> FactorizationOutcome:
    """Factor with respect to h = z_{var_index+1} - f_i by letting that
    variable play the distinguished role (a variable swap on both ends)."""
    if f_i.involves(var_index):
        raise PivotError(
            f"f must not involve z{var_index + 1}")
    n = matrix.nvars
    perm = list(range(n))
    perm[0], perm[var_index] = perm[var_index], perm[0]

    h_orig = Polynomial.variable(n, var_index) - f_i
    if var_index == 0:
        return factorize(matrix, h_orig, order, max_ops, max_degree,
                         reverse_tie_break)

    swapped = matrix.permute_variables(perm)
    h_swapped = Polynomial.variable(n, 0) - f_i.permute_variables(perm)
    out = factorize(swapped, h_swapped, order, max_ops, max_degree,
                    reverse_tie_break)

    def back(p: Polynomial) -> Polynomial:
        return p.permute_variables(perm)

    def back_m(mat: PolyMatrix | None) -> PolyMatrix | None:
        return None if mat is None else mat.permute_variables(perm)

    return FactorizationOutcome(
        out.variant, out.r, h_orig, back_m(out.g1), back_m(out.f1),
        certificate=tuple(back(p) for p in out.certificate),
        cofactors=None if out.cofactors is None
        else tuple(back(p) for p in out.cofactors))


def fitting_sufficient_check(matrix: PolyMatrix, h: Polynomial):
    """Sufficient criterion via Fitting ideals of the substituted row module.

    True iff the presentation matrix (stacked syzygy generators) has all
    2 x 2 minors zero and its entry ideal is principal with a nonzero
    generator; truth implies the factorization exists.
    """
    f = split_pivot(h)
    classify(matrix, h)  # membership check
    l = matrix.rows
    fbar = matrix.substitute(0, f)
    basis = syzygy([fbar.row(i) for i in range(l)])
    if not basis.generators:
        return False, {"reason": "substituted matrix has full row rank"}
    pres = PolyMatrix([list(g) for g in basis.generators])
    if pres.rows >= 2:
        second_fitting_zero = all(p.is_zero for p in all_minors(pres, 2))
    else:
        second_fitting_zero = True
    entries = [p for row in pres.entries for p in row if not p.is_zero]
    if not entries:
        return False, {"reason": "zero presentation matrix"}
    g = gcd_many(entries)
    entry_basis = buchberger(entries)
    principal = normal_form(g, entry_basis).is_zero
    ok = second_fitting_zero and principal
    details = {
        "presentation_rows": pres.rows,
        "second_fitting_zero": second_fitting_zero,
        "entry_gcd": g,
        "principal": principal,
    }
    return ok, details


def decide_equivalence(matrix: PolyMatrix, h: Polynomial, r: int,
                       max_ops: int | None = None,
                       max_degree: int | None = None) -> EquivalenceOutcome:
    """Decide whether a square matrix with determinant a constant multiple
    of h^r is equivalent to diag(h,..,h,1,..,1) (r copies of h), producing
    unimodular witnesses u, v with matrix == u * d * v exactly."""
    max_ops = DEFAULT_MAX_OPS if max_ops is None else max_ops
    max_degree = DEFAULT_MAX_DEGREE if max_degree is None else max_degree

    if not matrix.is_square:
        raise ShapeError("equivalence target requires a square matrix")
    l = matrix.rows
    if not 1 <= r <= l:
        raise ValueError(f"r must lie in 1..{l}")
    f = split_pivot(h)
    det = matrix.determinant()
    rem = det
    for _ in range(r):
        ok, rem = divides(h, rem)
        if not ok:
            raise ValueError("determinant is not a constant multiple of h^r")
    if not rem.is_constant or rem.is_zero:
        raise ValueError("determinant is not a constant multiple of h^r")

    d_target = _diagonal_target(h, r, l)

    if r == l:
        entries = [p for row in matrix.entries for p in row]
        d1 = gcd_many(entries)
        if not divides(h, d1)[0]:
            return EquivalenceOutcome(NOT_EQUIVALENT, r, h,
                                      certificate=(d1,))
        v = matrix.map(lambda p: exact_div(p, h))
        u = PolyMatrix.identity(l, matrix.nvars)
        assert verify_equivalence(matrix, u, d_target, v)
        return EquivalenceOutcome(EQUIVALENT, r, h, u, d_target, v)

    chain = gcd_chain(matrix)
    upper = chain[l - r + 1]
    if not divides(h, upper)[0]:
        # h fails to divide d_{l-r+1}; that gcd is the counter-witness
        return EquivalenceOutcome(NOT_EQUIVALENT, r, h, certificate=(upper,))
    gens = [h] + minor_ideal_generators(matrix, l - r)
    basis = buchberger(gens)
    if not basis.is_unit:
        return EquivalenceOutcome(NOT_EQUIVALENT, r, h,
                                  certificate=basis.generators)

    fbar = matrix.substitute(0, f)
    assert fbar.rank() == l - r
    h0 = _annihilator(fbar, r, reverse_tie_break=False)
    _, h_zlp = zlp_factorize(h0)
    result = complete_to_unimodular(h_zlp, max_ops=max_ops,
                                    max_degree=max_degree)
    if not result.completed:
        return EquivalenceOutcome(COMPLETION_NOT_FOUND, r, h,
                                  certificate=basis.generators)
    u0 = result.matrix
    v = _extract_rows(u0 * matrix, h, r)
    assert v.is_unimodular()
    u = u0.inverse_unimodular()
    assert verify_equivalence(matrix, u, d_target, v)
    return EquivalenceOutcome(EQUIVALENT, r, h, u, d_target, v,
                              certificate=basis.generators)


def verify_factorization(matrix: PolyMatrix, g1: PolyMatrix, f1: PolyMatrix,
                         h: Polynomial | None = None,
                         r: int | None = None) -> bool:
    """Exact witness check: matrix == g1 * f1, and when h and r are given,
    det(g1) is a nonzero constant multiple of h^r."""
    try:
        if g1 * f1 != matrix:
            return False
    except ShapeError:
        return False
    if h is None or r is None:
        return True
    det = g1.determinant()
    rem = det
    for _ in range(r):
        ok, rem = divides(h, rem)
        if not ok:
            return False
    return rem.is_constant and not rem.is_zero


def verify_equivalence(matrix: PolyMatrix, u: PolyMatrix, d: PolyMatrix,
                       v: PolyMatrix) -> bool:
    """Exact witness check: matrix == u * d * v with u, v unimodular."""
    try:
        if u * d * v != matrix:
            return False
        return u.is_unimodular() and v.is_unimodular()
    except ShapeError:
        return False

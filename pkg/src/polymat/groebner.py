"""Buchberger's algorithm for polynomial ideals.

Provides reduced Groebner bases, normal forms, a unit-ideal test, and
optional cofactor tracking so that every basis element is expressed as an
explicit combination of the original generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .poly import (DEGREVLEX, DimensionError, MonomialOrder, Polynomial,
                   mono_div, mono_divides, mono_lcm, mono_mul)


@dataclass(frozen=True)
class IdealBasis:
    """A Groebner basis; ``cofactors[i][j]`` expresses generators[i] as a
    combination of the original input generators."""

    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool = True
    cofactors: tuple[tuple[Polynomial, ...], ...] | None = None

    @property
    def is_unit(self) -> bool:
        return (len(self.generators) == 1
                and self.generators[0].is_constant
                and not self.generators[0].is_zero)

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero


class _Tracked:
    """Working pair of a polynomial and its cofactor row."""

    __slots__ = ("poly", "cof", "lm")

    def __init__(self, poly: Polynomial, cof: list[Polynomial] | None,
                 order: MonomialOrder):
        self.poly = poly
        self.cof = cof
        self.lm = poly.leading_monomial(order) if not poly.is_zero else None


def _reduce_full(p: Polynomial, cof: list[Polynomial] | None,
                 basis: Sequence[_Tracked], order: MonomialOrder):
    """Full (tail-included) remainder of p modulo the basis.

    Deterministic: the reducer is always the first basis element whose
    leading monomial divides the current term.
    """
    remainder: dict = {}
    r = p
    while not r.is_zero:
        lm, lc = r.leading_term(order)
        for g in basis:
            if g.lm is not None and mono_divides(g.lm, lm):
                m = mono_div(lm, g.lm)
                c = lc / g.poly.terms[g.lm]
                r = r - g.poly.mul_term(c, m)
                if cof is not None and g.cof is not None:
                    for j, gc in enumerate(g.cof):
                        cof[j] = cof[j] - gc.mul_term(c, m)
                break
        else:
            remainder[lm] = lc
            r = r - Polynomial(r.nvars, {lm: lc})
    return Polynomial(p.nvars, remainder), cof


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX,
               track: bool = False) -> IdealBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pair selection follows the normal strategy (minimal lcm in the order);
    Buchberger's coprime and chain criteria prune useless pairs.
    """
    gens = list(gens)
    nv = None
    for g in gens:
        if nv is None:
            nv = g.nvars
        elif g.nvars != nv:
            raise DimensionError("generators have mixed variable counts")
    n_orig = len(gens)

    def unit_cof(i: int) -> list[Polynomial] | None:
        if not track:
            return None
        return [Polynomial.constant(nv, 1 if j == i else 0)
                for j in range(n_orig)]

    basis: list[_Tracked] = []
    for i, g in enumerate(gens):
        if g.is_zero:
            continue
        basis.append(_Tracked(g, unit_cof(i), order))

    if not basis:
        return IdealBasis((), order, reduced=True,
                          cofactors=() if track else None)

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def lcm_of(i: int, j: int):
        return mono_lcm(basis[i].lm, basis[j].lm)

    while pairs:
        i, j = min(pairs, key=lambda ij: (order.key(lcm_of(*ij)), ij))
        pairs.discard((i, j))
        lij = lcm_of(i, j)
        # coprime criterion
        if lij == mono_mul(basis[i].lm, basis[j].lm):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if mono_divides(basis[k].lm, lij):
                p1 = (min(i, k), max(i, k))
                p2 = (min(j, k), max(j, k))
                if p1 not in pairs and p2 not in pairs:
                    skip = True
                    break
        if skip:
            continue

        fi, fj = basis[i], basis[j]
        mi = mono_div(lij, fi.lm)
        mj = mono_div(lij, fj.lm)
        ci = 1 / fi.poly.terms[fi.lm]
        cj = 1 / fj.poly.terms[fj.lm]
        s = fi.poly.mul_term(ci, mi) - fj.poly.mul_term(cj, mj)
        cof = None
        if track:
            cof = [a.mul_term(ci, mi) - b.mul_term(cj, mj)
                   for a, b in zip(fi.cof, fj.cof)]
        r, cof = _reduce_full(s, cof, basis, order)
        if r.is_zero:
            continue
        new_index = len(basis)
        basis.append(_Tracked(r, cof, order))
        for k in range(new_index):
            pairs.add((k, new_index))

    # minimalize: drop elements whose leading monomial is divisible by
    # another survivor's leading monomial
    order_idx = sorted(range(len(basis)), key=lambda k: order.key(basis[k].lm))
    kept: list[_Tracked] = []
    for k in order_idx:
        if any(mono_divides(g.lm, basis[k].lm) for g in kept):
            continue
        kept.append(basis[k])

    # interreduce tails and make monic
    final: list[_Tracked] = []
    for idx, g in enumerate(kept):
        others = kept[:idx] + kept[idx + 1:]
        cof = list(g.cof) if track else None
        r, cof = _reduce_full(g.poly, cof, others, order)
        lc = r.leading_coefficient(order)
        inv = 1 / lc
        r = r * inv
        if track:
            cof = [c * inv for c in cof]
        final.append(_Tracked(r, cof, order))

    final.sort(key=lambda g: order.key(g.lm))
    return IdealBasis(tuple(g.poly for g in final), order, reduced=True,
                      cofactors=tuple(tuple(g.cof) for g in final) if track else None)


def normal_form(p: Polynomial, basis: IdealBasis | Sequence[Polynomial],
                order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of multivariate division of p by a Groebner basis."""
    if isinstance(basis, IdealBasis):
        gens = basis.generators
        order = basis.order
    else:
        gens = tuple(basis)
        order = order or DEGREVLEX
    tracked = [_Tracked(g, None, order) for g in gens if not g.is_zero]
    r, _ = _reduce_full(p, None, tracked, order)
    return r


def is_unit_ideal(gens: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX,
                  track: bool = False):
    """Decide whether the generators span the whole ring.

    Returns ``(flag, cofactors)``; when ``track`` is set and the ideal is
    the unit ideal, the cofactors c satisfy sum(c[i] * gens[i]) == 1 exactly.
    """
    basis = buchberger(gens, order, track=track)
    if not basis.is_unit:
        return False, None
    if not track:
        return True, None
    return True, basis.cofactors[0]

"""Shared builders for the test suite: parsed fixtures for the worked
examples and seeded random generators for property tests."""

from __future__ import annotations

import random
from fractions import Fraction

from polymat.matrix import PolyMatrix
from polymat.parsing import parse_polynomial
from polymat.poly import Polynomial, normalized

N = 3


def P(text: str, nvars: int = N) -> Polynomial:
    return parse_polynomial(text, nvars)


def M(grid, nvars: int = N) -> PolyMatrix:
    return PolyMatrix([[P(cell, nvars) for cell in row] for row in grid])


def Z(index: int, nvars: int = N) -> Polynomial:
    return Polynomial.variable(nvars, index)


def eq_up_to_unit(p: Polynomial, q: Polynomial) -> bool:
    return normalized(p) == normalized(q)


# -- the three worked examples -------------------------------------------

def example_2x4() -> dict:
    """2x4 matrix that splits off h = z1 - z3 exactly once."""
    f = M([
        ["-2*z1*z2^2 + z1^2*z3 + z2^2*z3 - z1*z3^2 + z2*z3^2",
         "z1^3 - z2^3 - z1^2*z3 + z2*z3^2",
         "z1*z2 - z2*z3",
         "z2^2"],
        ["-z1*z2 + z3^2", "-z2^2 + z1*z3", "0", "z2"],
    ])
    g1 = M([["z1 - z3", "z2"], ["0", "1"]])
    f1 = M([
        ["z1*z3 - z2^2", "z1^2 - z2*z3", "z2", "0"],
        ["-z1*z2 + z3^2", "-z2^2 + z1*z3", "0", "z2"],
    ])
    return {"F": f, "h": P("z1 - z3"), "G1": g1, "F1": f1}


def example_3x3() -> dict:
    """3x3 matrix with a double factor z1 - z2 and then a z1 factor."""
    f = M([
        ["z1^2 - z1*z2", "z2*z3 + z3^2 + z2 + z3", "-z2*z3 - z2"],
        ["z1*z2 - z2^2", "-z1*z3 + z2*z3", "z1^3 - z1^2*z2 + z1*z2 - z2^2"],
        ["0", "z2 + z3", "-z2"],
    ])
    g1 = M([["z1 - z2", "0", "z3 + 1"],
            ["0", "z1 - z2", "0"],
            ["0", "0", "1"]])
    f1 = M([["z1", "0", "0"],
            ["z2", "-z3", "z1^2 + z2"],
            ["0", "z2 + z3", "-z2"]])
    g2 = M([["z1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])
    f2 = M([["1", "0", "0"],
            ["z2", "-z3", "z1^2 + z2"],
            ["0", "z2 + z3", "-z2"]])
    return {"F": f, "h": P("z1 - z2"), "G1": g1, "F1": f1,
            "G2": g2, "F2": f2}


def example_equivalence() -> dict:
    """3x3 matrix equivalent to diag(h, h, 1) for h = z1 - z2."""
    f = M([
        ["z1*z2 - z2^2 + z2*z3 + z2 - z3 - 1",
         "z1*z2*z3 - z2^2*z3 + z1*z2 - z2^2 + z2*z3 - z3",
         "z1*z2*z3 - z2^2*z3"],
        ["z1*z2 - z2^2 + z1 - z2 + z3 + 1",
         "z1*z2*z3 - z2^2*z3 + 2*z1*z2 - 2*z2^2 + z1*z3 - z2*z3 + z1 - z2 + z3",
         "z1*z2*z3 - z2^2*z3 + z1*z2 - z2^2 + z1*z3 - z2*z3"],
        ["z1 - z2", "z1*z3 - z2*z3 + 2*z1 - 2*z2", "z1*z3 - z2*z3 + z1 - z2"],
    ])
    u = M([["0", "z2", "z2 - 1"], ["z2", "z2 + 1", "1"], ["1", "1", "0"]])
    v = M([["0", "1", "1"], ["1", "z3 + 1", "z3"], ["z3 + 1", "z3", "0"]])
    d = M([["z1 - z2", "0", "0"], ["0", "z1 - z2", "0"], ["0", "0", "1"]])
    syz = M([["1", "-z2 + 1", "z2^2 - z2"],
             ["-1", "z2 - 1", "-z2^2 + z2 + 1"]])
    return {"F": f, "h": P("z1 - z2"), "U": u, "V": v, "D": d, "H": syz}


# -- random generators -----------------------------------------------------

def rand_poly(rng: random.Random, nvars: int = N, max_deg: int = 2,
              max_terms: int = 3, coeff_bound: int = 3,
              allowed_vars=None, nonzero: bool = False) -> Polynomial:
    """Sparse random polynomial with small integer coefficients."""
    allowed = list(range(nvars)) if allowed_vars is None else list(allowed_vars)
    terms = {}
    for _ in range(rng.randint(0 if not nonzero else 1, max_terms)):
        mono = [0] * nvars
        for _ in range(rng.randint(0, max_deg)):
            mono[rng.choice(allowed)] += 1
        c = rng.randint(-coeff_bound, coeff_bound)
        if c == 0:
            continue
        mono = tuple(mono)
        terms[mono] = terms.get(mono, 0) + c
    p = Polynomial(nvars, {m: Fraction(c) for m, c in terms.items() if c})
    if nonzero and p.is_zero:
        return Polynomial.constant(nvars, rng.choice([1, -1, 2]))
    return p


def rand_matrix(rng: random.Random, rows: int, cols: int, nvars: int = N,
                max_deg: int = 1, allowed_vars=None) -> PolyMatrix:
    return PolyMatrix([[rand_poly(rng, nvars, max_deg, allowed_vars=allowed_vars)
                        for _ in range(cols)] for _ in range(rows)])


def rand_unimodular(rng: random.Random, size: int, nvars: int = N,
                    ops: int = 3, max_deg: int = 1,
                    allowed_vars=None) -> PolyMatrix:
    """Product of random elementary matrices (unit determinant up to sign)."""
    u = PolyMatrix.identity(size, nvars)
    for _ in range(ops):
        kind = rng.choice(["add", "swap", "negate"])
        i = rng.randrange(size)
        j = rng.randrange(size)
        if kind == "add" and i != j:
            q = rand_poly(rng, nvars, max_deg, max_terms=2,
                          allowed_vars=allowed_vars)
            rows = [list(u.row(k)) for k in range(size)]
            rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
            u = PolyMatrix(rows)
        elif kind == "swap" and i != j:
            rows = [list(u.row(k)) for k in range(size)]
            rows[i], rows[j] = rows[j], rows[i]
            u = PolyMatrix(rows)
        elif kind == "negate":
            rows = [list(u.row(k)) for k in range(size)]
            rows[i] = [-a for a in rows[i]]
            u = PolyMatrix(rows)
    return u

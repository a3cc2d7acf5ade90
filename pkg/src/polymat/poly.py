"""Exact sparse multivariate polynomials over the rationals.

A polynomial in ``n`` variables z1..zn is stored as a map from exponent
tuples to nonzero ``Fraction`` coefficients.  All arithmetic is exact; the
zero polynomial is the empty map.  Values are immutable after construction,
so they can be shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd, lcm as _int_lcm
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


class DimensionError(ValueError):
    """Operands belong to rings with different numbers of variables."""


class SubstitutionError(ValueError):
    """The replacement polynomial mentions the variable being replaced."""


# ---------------------------------------------------------------------------
# monomial helpers

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(numerator: Monomial, denominator: Monomial) -> Monomial:
    """numerator / denominator; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(numerator, denominator))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


class MonomialOrder:
    """A total, multiplicative well-order on monomials.

    ``kind`` is one of degrevlex, deglex, lex.  ``permutation`` lists the
    variable indices from most to least significant; None means the natural
    order z1 > z2 > ... > zn.
    """

    KINDS = ("degrevlex", "deglex", "lex")

    __slots__ = ("kind", "permutation")

    def __init__(self, kind: str = "degrevlex",
                 permutation: Sequence[int] | None = None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        if permutation is not None:
            permutation = tuple(permutation)
            if sorted(permutation) != list(range(len(permutation))):
                raise ValueError("permutation must be a bijection on 0..n-1")
        self.permutation = permutation

    def key(self, mono: Monomial):
        """Sort key: key(a) < key(b) iff a comes before b in the order."""
        if self.permutation is not None:
            if len(self.permutation) != len(mono):
                raise DimensionError("permutation length does not match monomial")
            mono = tuple(mono[i] for i in self.permutation)
        if self.kind == "lex":
            return mono
        deg = sum(mono)
        if self.kind == "deglex":
            return (deg, mono)
        return (deg, tuple(-e for e in reversed(mono)))

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and self.kind == other.kind
                and self.permutation == other.permutation)

    def __hash__(self):
        return hash((self.kind, self.permutation))

    def __repr__(self):
        if self.permutation is None:
            return f"MonomialOrder({self.kind!r})"
        return f"MonomialOrder({self.kind!r}, {self.permutation!r})"


DEGREVLEX = MonomialOrder("degrevlex")


class Polynomial:
    """A sparse multivariate polynomial with Fraction coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int,
                 terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = ()):
        if nvars < 1:
            raise ValueError("nvars must be at least 1")
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != nvars:
                raise DimensionError(
                    f"monomial {mono} has length {len(mono)}, expected {nvars}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = clean.get(mono, _ZERO_FRACTION) + Fraction(coeff)
            if c:
                clean[mono] = c
            elif mono in clean:
                del clean[mono]
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "Polynomial":
        value = Fraction(value)
        if not value:
            return cls(nvars)
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        """The polynomial z_{index+1} (index is zero-based)."""
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range for nvars={nvars}")
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {mono: Fraction(1)})

    # -- predicates ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(mono_degree(m) == 0 for m in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def involves(self, index: int) -> bool:
        return any(m[index] for m in self.terms)

    def total_degree(self) -> int:
        """Maximum term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def degree_in(self, index: int) -> int:
        if not self.terms:
            return -1
        return max(m[index] for m in self.terms)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionError(
                f"mixed variable counts: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        other = self._coerce(other)
        self._check(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = out.get(mono, _ZERO_FRACTION) + coeff
            if c:
                out[mono] = c
            elif mono in out:
                del out[mono]
        return self._wrap(out)

    __radd__ = __add__

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return self._coerce(other) - self

    def __neg__(self) -> "Polynomial":
        return self._wrap({m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        other = self._coerce(other)
        self._check(other)
        if not self.terms or not other.terms:
            return Polynomial(self.nvars)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = out.get(m, _ZERO_FRACTION) + c1 * c2
                if c:
                    out[m] = c
                elif m in out:
                    del out[m]
        return self._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = Polynomial.one(self.nvars)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def mul_term(self, coeff: Scalar, mono: Monomial) -> "Polynomial":
        coeff = Fraction(coeff)
        if not coeff:
            return Polynomial(self.nvars)
        return self._wrap({mono_mul(m, mono): c * coeff
                           for m, c in self.terms.items()})

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def _wrap(self, terms: dict[Monomial, Fraction]) -> "Polynomial":
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p.terms = terms
        return p

    # -- leading data ---------------------------------------------------

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = DEGREVLEX) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def leading_term(self, order: MonomialOrder = DEGREVLEX) -> tuple[Monomial, Fraction]:
        m = self.leading_monomial(order)
        return m, self.terms[m]

    # -- substitution ---------------------------------------------------

    def coefficients_in(self, index: int) -> list["Polynomial"]:
        """Dense coefficient list of self viewed in the variable z_{index+1}.

        Entry k is the (z_index-free) coefficient of z_index^k; the list is
        empty for the zero polynomial.
        """
        if not self.terms:
            return []
        top = self.degree_in(index)
        buckets: list[dict[Monomial, Fraction]] = [dict() for _ in range(top + 1)]
        for mono, coeff in self.terms.items():
            k = mono[index]
            rest = tuple(0 if i == index else e for i, e in enumerate(mono))
            buckets[k][rest] = coeff
        return [self._wrap(b) for b in buckets]

    def substitute(self, index: int, value: "Polynomial") -> "Polynomial":
        """Ring homomorphism image of self under z_{index+1} -> value."""
        self._check(value)
        if value.involves(index):
            raise SubstitutionError(
                f"replacement for z{index + 1} must not involve z{index + 1}")
        coeffs = self.coefficients_in(index)
        if not coeffs:
            return Polynomial(self.nvars)
        result = coeffs[-1]
        for c in reversed(coeffs[:-1]):
            result = result * value + c
        return result

    def permute_variables(self, perm: Sequence[int]) -> "Polynomial":
        """Rename variables: new z_{k+1} takes the role of old z_{perm[k]+1}."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError("perm must be a bijection on 0..nvars-1")
        return self._wrap({tuple(m[perm[k]] for k in range(self.nvars)): c
                           for m, c in self.terms.items()})

    # -- comparisons / hashing -------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- printing ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for mono in sorted(self.terms, key=DEGREVLEX.key, reverse=True):
            coeff = self.terms[mono]
            mag = abs(coeff)
            factors = [f"z{i + 1}" + (f"^{e}" if e > 1 else "")
                       for i, e in enumerate(mono) if e]
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"<Polynomial {self}>"


_ZERO_FRACTION = Fraction(0)


# ---------------------------------------------------------------------------
# division, normalization, gcd

def divides(d: Polynomial, p: Polynomial,
            order: MonomialOrder = DEGREVLEX) -> tuple[bool, Polynomial | None]:
    """Decide whether d | p; on success also return the exact quotient.

    Sound for a single divisor: whenever d | r for the running remainder r,
    the leading term of r is divisible by the leading term of d, so hitting
    an indivisible leading term refutes divisibility.
    """
    if d.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    d._check(p)
    if p.is_zero:
        return True, Polynomial(p.nvars)
    if d.is_constant:
        inv = 1 / d.constant_value()
        return True, p * inv
    lm_d, lc_d = d.leading_term(order)
    quotient: dict[Monomial, Fraction] = {}
    r = p
    while not r.is_zero:
        lm_r, lc_r = r.leading_term(order)
        if not mono_divides(lm_d, lm_r):
            return False, None
        m = mono_div(lm_r, lm_d)
        c = lc_r / lc_d
        quotient[m] = quotient.get(m, _ZERO_FRACTION) + c
        r = r - d.mul_term(c, m)
    return True, Polynomial(p.nvars, quotient)


def exact_div(p: Polynomial, d: Polynomial) -> Polynomial:
    ok, q = divides(d, p)
    if not ok:
        raise ArithmeticError(f"({p}) is not divisible by ({d})")
    return q


def normalized(p: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Canonical associate: integer coefficients with content 1 and a
    positive leading coefficient under the given order."""
    if p.is_zero:
        return p
    denom_lcm = 1
    for c in p.terms.values():
        denom_lcm = _int_lcm(denom_lcm, c.denominator)
    num_gcd = 0
    for c in p.terms.values():
        num_gcd = _int_gcd(num_gcd, abs(c.numerator * (denom_lcm // c.denominator)))
    factor = Fraction(denom_lcm, num_gcd)
    if p.leading_coefficient(order) < 0:
        factor = -factor
    return p * factor


def _nonconstant_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """gcd up to a unit for nonzero inputs (constant inputs give 1)."""
    if p.is_constant or q.is_constant:
        return Polynomial.one(p.nvars)
    main = max(i for i in range(p.nvars) if p.involves(i) or q.involves(i))
    a = p.coefficients_in(main)
    b = q.coefficients_in(main)
    cont_a = _list_gcd(a)
    cont_b = _list_gcd(b)
    cont = _nonconstant_gcd(cont_a, cont_b)
    pp_a = [exact_div(c, cont_a) for c in a]
    pp_b = [exact_div(c, cont_b) for c in b]
    prim = _subresultant_gcd(pp_a, pp_b, p.nvars)
    return cont * _assemble(prim, main, p.nvars)


def _list_gcd(coeffs: Iterable[Polynomial]) -> Polynomial:
    g: Polynomial | None = None
    for c in coeffs:
        if c.is_zero:
            continue
        g = c if g is None else _nonconstant_gcd(g, c)
        if g.is_constant:
            return Polynomial.one(c.nvars)
    if g is None:
        raise ValueError("gcd of an all-zero coefficient list")
    return g


def _assemble(coeffs: list[Polynomial], index: int, nvars: int) -> Polynomial:
    out = Polynomial(nvars)
    x = Polynomial.variable(nvars, index)
    for k in reversed(range(len(coeffs))):
        out = out * x + coeffs[k]
    return out


def _trim(coeffs: list[Polynomial]) -> list[Polynomial]:
    while coeffs and coeffs[-1].is_zero:
        coeffs.pop()
    return coeffs


def _pseudo_rem(a: list[Polynomial], b: list[Polynomial]) -> list[Polynomial]:
    """Pseudo-remainder of lc(b)^(da-db+1) * a modulo b (dense lists)."""
    da, db = len(a) - 1, len(b) - 1
    lc_b = b[-1]
    n = da - db + 1
    r = list(a)
    while r and len(r) - 1 >= db:
        lc_r = r[-1]
        k = len(r) - 1 - db
        n -= 1
        r = [c * lc_b for c in r]
        for i, bc in enumerate(b):
            r[k + i] = r[k + i] - lc_r * bc
        r = _trim(r)
    scale = lc_b ** n
    return [c * scale for c in r]


def _subresultant_gcd(a: list[Polynomial], b: list[Polynomial],
                      nvars: int) -> list[Polynomial]:
    """Primitive gcd of two primitive dense polynomials in the top variable,
    via the subresultant polynomial remainder sequence."""
    one = [Polynomial.one(nvars)]
    a, b = _trim(list(a)), _trim(list(b))
    if len(a) < len(b):
        a, b = b, a
    if len(b) - 1 == 0:
        return one
    g = Polynomial.one(nvars)
    h = Polynomial.one(nvars)
    while True:
        delta = (len(a) - 1) - (len(b) - 1)
        r = _pseudo_rem(a, b)
        if not r:
            last = b
            break
        if len(r) - 1 == 0:
            return one
        divisor = g * h ** delta
        a, b = b, [exact_div(c, divisor) for c in r]
        g = a[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = exact_div(g ** delta, h ** (delta - 1))
    cont = _list_gcd(last)
    return [exact_div(c, cont) for c in last]


def gcd(p: Polynomial, q: Polynomial,
        order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Greatest common divisor in canonical normalization.

    gcd(p, 0) = normalized(p); gcd(0, 0) = 0; any pair involving a nonzero
    constant has gcd 1 (constants are units over the rationals).
    """
    if p.is_zero:
        return normalized(q, order)
    if q.is_zero:
        return normalized(p, order)
    p._check(q)
    if p.is_constant or q.is_constant:
        return Polynomial.one(p.nvars)
    return normalized(_nonconstant_gcd(p, q), order)


def gcd_many(polys: Iterable[Polynomial],
             order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """gcd of a sequence; 0 for an empty or all-zero sequence."""
    g: Polynomial | None = None
    for p in polys:
        if g is None:
            g = normalized(p, order)
        else:
            g = gcd(g, p, order)
        if g is not None and not g.is_zero and g.is_constant:
            return Polynomial.one(g.nvars)
    if g is None:
        raise ValueError("gcd of an empty sequence")
    return g

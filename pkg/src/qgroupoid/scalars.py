"""Exact scalars: rationals and sparse commutative polynomials.

Rationals are ``fractions.Fraction`` (always lowest terms, positive
denominator).  A ``CPoly`` is a polynomial over the rationals in a fixed
number of variables x1..xp, stored as a sparse map from exponent tuples to
coefficients.  Instances are immutable and hashable so they can key caches
throughout the engine.
"""

import re
from fractions import Fraction

from .errors import ConfigError, ParseError
from .kernel import poly_add, poly_diff, poly_mul, poly_neg, poly_scale, poly_sub

__all__ = ["Fraction", "CPoly", "parse_poly", "monomials_upto"]


class CPoly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = dict(terms) if terms else {}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, nvars, c):
        c = Fraction(c)
        if not c:
            return cls(nvars)
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls.const(nvars, 1)

    @classmethod
    def var(cls, nvars, j, power=1):
        if not 0 <= j < nvars:
            raise ConfigError("variable index %d out of range" % j)
        exp = [0] * nvars
        exp[j] = power
        return cls(nvars, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, nvars, exp, c=1):
        c = Fraction(c)
        if not c:
            return cls(nvars)
        return cls(nvars, {tuple(exp): c})

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * self.nvars: Fraction(1)}

    def is_constant(self):
        return all(not any(k) for k in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(k) for k in self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ConfigError("polynomials over different variable counts")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CPoly.const(self.nvars, other)
        self._check(other)
        return CPoly(self.nvars, poly_add(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CPoly.const(self.nvars, other)
        self._check(other)
        return CPoly(self.nvars, poly_sub(self.terms, other.terms))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CPoly(self.nvars, poly_neg(self.terms))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CPoly(self.nvars, poly_scale(self.terms, Fraction(other)))
        self._check(other)
        return CPoly(self.nvars, poly_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ConfigError("negative polynomial power")
        out = CPoly.one(self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def diff(self, j):
        return CPoly(self.nvars, poly_diff(self.terms, j))

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CPoly.const(self.nvars, other)
        return isinstance(other, CPoly) and self.nvars == other.nvars \
            and self.terms == other.terms

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(sorted(self.terms.items()))))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- display -----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[exp]
            factors = []
            if c != 1 or not any(exp):
                factors.append(str(c))
            for j, e in enumerate(exp):
                if e == 1:
                    factors.append("x%d" % (j + 1))
                elif e > 1:
                    factors.append("x%d^%d" % (j + 1, e))
            parts.append("*".join(factors))
        return " + ".join(parts)

    __repr__ = __str__


_TOKEN = re.compile(r"\s*(?:(?P<num>-?\d+(?:/\d+)?)|(?P<var>x\d+)(?:\^(?P<pow>\d+))?)\s*")


def parse_poly(text, nvars, line=0):
    """Parse "3/2*x1^2*x2 - x1 + 4" into a CPoly.

    Terms are separated by + or -; factors within a term by '*'.
    """
    text = text.strip()
    if not text:
        raise ParseError(line, "empty polynomial")
    out = CPoly.zero(nvars)
    # normalize leading sign, then split into signed terms
    chunks = re.split(r"(?<![*^/])\s*([+-])\s*", "+" + text if text[0] not in "+-" else text)
    # chunks like ['', '+', 'term', '-', 'term', ...]
    it = iter(chunks)
    first = next(it)
    if first.strip():
        raise ParseError(line, "malformed polynomial %r" % text)
    for sign, term in zip(it, it):
        term = term.strip()
        if not term:
            raise ParseError(line, "dangling sign in %r" % text)
        coeff = Fraction(1) if sign == "+" else Fraction(-1)
        exp = [0] * nvars
        for factor in term.split("*"):
            factor = factor.strip()
            m = _TOKEN.fullmatch(factor)
            if not m:
                raise ParseError(line, "bad factor %r" % factor)
            if m.group("num") is not None:
                coeff *= Fraction(m.group("num"))
            else:
                j = int(m.group("var")[1:]) - 1
                if not 0 <= j < nvars:
                    raise ParseError(line, "variable %s out of range" % m.group("var"))
                exp[j] += int(m.group("pow") or 1)
        out = out + CPoly.monomial(nvars, exp, coeff)
    return out


def monomials_upto(nvars, max_degree):
    """All monomials x^gamma with |gamma| <= max_degree, as CPoly, sorted."""
    exps = [()]
    for _ in range(nvars):
        exps = [e + (k,) for e in exps for k in range(max_degree + 1)]
    exps = [e for e in exps if sum(e) <= max_degree]
    exps.sort(key=lambda e: (sum(e), e))
    return [CPoly.monomial(nvars, e) for e in exps]

"""Enveloping algebra of a Lie-Rinehart structure, in PBW normal form.

An ``EnvElement`` is a sparse map from multi-indices alpha to polynomial
coefficients, standing for sum_alpha a_alpha e^alpha with the coefficient
on the left and e^alpha = e_1^a1 ... e_m^am in fixed generator order.
Multiplication rewrites e_i a -> a e_i + anchor(e_i)(a) and
e_j e_i -> e_i e_j - [e_i, e_j] (j > i) until normal; rewriting terminates
because every step lowers (total degree, inversion count) lexicographically.

The mirrored right-handed normal form (coefficients on the right) backs the
algebra anti-isomorphism ``right_from_left`` that presents the right-handed
enveloping algebra.
"""

from .errors import ConfigError
from .scalars import CPoly, Fraction

__all__ = [
    "EnvElement", "pbw_mul", "env_counit", "anchor_action",
    "mul_gen_right", "mul_poly_right", "right_from_left", "renv_mul",
]


class EnvElement:
    """Normal-form element: {multi-index alpha: CPoly coefficient}."""

    __slots__ = ("nvars", "rank", "terms", "_hash")

    def __init__(self, nvars, rank, terms=None):
        self.nvars = nvars
        self.rank = rank
        self.terms = {a: c for a, c in (terms or {}).items() if not c.is_zero()}
        self._hash = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nvars, rank):
        return cls(nvars, rank)

    @classmethod
    def one(cls, nvars, rank):
        return cls(nvars, rank, {(0,) * rank: CPoly.one(nvars)})

    @classmethod
    def from_poly(cls, rank, poly):
        return cls(poly.nvars, rank, {(0,) * rank: poly})

    @classmethod
    def gen(cls, nvars, rank, i, power=1):
        alpha = [0] * rank
        alpha[i] = power
        return cls(nvars, rank, {tuple(alpha): CPoly.one(nvars)})

    @classmethod
    def monomial(cls, nvars, rank, alpha, coeff=None):
        coeff = coeff if coeff is not None else CPoly.one(nvars)
        return cls(nvars, rank, {tuple(alpha): coeff})

    # -- structure -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(a) for a in self.terms)

    def scale(self, poly):
        """Left multiplication by a coefficient (polynomial or rational)."""
        if isinstance(poly, (int, Fraction)):
            poly = CPoly.const(self.nvars, poly)
        return EnvElement(self.nvars, self.rank,
                          {a: poly * c for a, c in self.terms.items()})

    def rscale(self, poly):
        """Coefficient multiplication on the right (right normal forms)."""
        if isinstance(poly, (int, Fraction)):
            poly = CPoly.const(self.nvars, poly)
        return EnvElement(self.nvars, self.rank,
                          {a: c * poly for a, c in self.terms.items()})

    def __add__(self, other):
        out = dict(self.terms)
        for a, c in other.terms.items():
            cur = out.get(a)
            out[a] = c if cur is None else cur + c
        return EnvElement(self.nvars, self.rank, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return EnvElement(self.nvars, self.rank,
                          {a: -c for a, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, EnvElement) and self.terms == other.terms

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.terms.items(),
                                           key=lambda kv: kv[0])))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for alpha in sorted(self.terms, key=lambda a: (sum(a), a)):
            word = "".join("e%d^%d" % (i + 1, k) if k > 1 else "e%d" % (i + 1)
                           for i, k in enumerate(alpha) if k)
            c = str(self.terms[alpha])
            parts.append("(%s)%s" % (c, word) if word else "(%s)" % c)
        return " + ".join(parts)


def _bump(alpha, i, by=1):
    out = list(alpha)
    out[i] += by
    return tuple(out)


def _last_nonzero(alpha):
    for j in range(len(alpha) - 1, -1, -1):
        if alpha[j]:
            return j
    return None


def _first_nonzero(alpha):
    for j, a in enumerate(alpha):
        if a:
            return j
    return None


# -- left normal form ----------------------------------------------------------


def _mono_times_gen(spec, beta, i):
    """Normal form of e^beta * e_i (cached per spec)."""
    cache = spec._gen_cache
    key = (beta, i)
    hit = cache.get(key)
    if hit is not None:
        return hit
    j = _last_nonzero(beta)
    if j is None or j <= i:
        res = EnvElement.monomial(spec.nvars, spec.rank, _bump(beta, i))
    else:
        beta2 = _bump(beta, j, -1)
        res = mul_gen_right(spec, _mono_times_gen(spec, beta2, i), j)
        for k, c in enumerate(spec.bracket_basis(i, j)):
            if not c.is_zero():
                head = mul_poly_right(
                    spec, EnvElement.monomial(spec.nvars, spec.rank, beta2), c)
                res = res - mul_gen_right(spec, head, k)
    cache[key] = res
    return res


def mul_gen_right(spec, u, i):
    """Normal form of u * e_i."""
    out = EnvElement.zero(spec.nvars, spec.rank)
    for beta, c in u.terms.items():
        out = out + _mono_times_gen(spec, beta, i).scale(c)
    return out


def _mono_times_poly(spec, beta, a):
    """Normal form of e^beta * a for a polynomial a."""
    if a.is_zero():
        return EnvElement.zero(spec.nvars, spec.rank)
    j = _last_nonzero(beta)
    if j is None:
        return EnvElement.from_poly(spec.rank, a)
    beta2 = _bump(beta, j, -1)
    head = mul_gen_right(spec, _mono_times_poly(spec, beta2, a), j)
    return head + _mono_times_poly(spec, beta2, spec.anchor_apply(j, a))


def mul_poly_right(spec, u, a):
    """Normal form of u * a."""
    out = EnvElement.zero(spec.nvars, spec.rank)
    for beta, c in u.terms.items():
        out = out + _mono_times_poly(spec, beta, a).scale(c)
    return out


def pbw_mul(spec, u, v):
    """Associative product in PBW normal form."""
    if u.rank != v.rank or u.nvars != v.nvars:
        raise ConfigError("operands over different structures")
    out = EnvElement.zero(spec.nvars, spec.rank)
    for beta, b in v.terms.items():
        t = mul_poly_right(spec, u, b)
        for i in range(spec.rank):
            for _ in range(beta[i]):
                t = mul_gen_right(spec, t, i)
        out = out + t
    return out


def env_counit(u):
    """Coefficient at alpha = 0 of the normal form."""
    return u.terms.get((0,) * u.rank, CPoly.zero(u.nvars))


def anchor_action(spec, u, a):
    """u acting on the base: counit(u * a), computed by composing derivations."""
    out = CPoly.zero(spec.nvars)
    for beta, c in u.terms.items():
        val = a
        for i in range(spec.rank - 1, -1, -1):
            for _ in range(beta[i]):
                val = spec.anchor_apply(i, val)
                if val.is_zero():
                    break
            if val.is_zero():
                break
        if not val.is_zero():
            out = out + c * val
    return out


# -- right normal form (coefficients on the right) -----------------------------
#
# Elements are the same container read as sum_alpha e^alpha * a_alpha.


def _r_gen_times_mono(spec, i, beta):
    """Right normal form of e_i * e^beta."""
    cache = spec._poly_cache
    key = ("rg", i, beta)
    hit = cache.get(key)
    if hit is not None:
        return hit
    j = _first_nonzero(beta)
    if j is None or i <= j:
        res = EnvElement.monomial(spec.nvars, spec.rank, _bump(beta, i))
    else:
        beta2 = _bump(beta, j, -1)
        res = renv_mul_gen_left(spec, _r_gen_times_mono(spec, i, beta2), j)
        for k, c in enumerate(spec.bracket_basis(i, j)):
            if not c.is_zero():
                tail = _r_gen_times_mono(spec, k, beta2)
                res = res + renv_mul_poly_left(spec, c, tail)
    cache[key] = res
    return res


def renv_mul_gen_left(spec, w, i):
    """Right normal form of e_i * w."""
    out = EnvElement.zero(spec.nvars, spec.rank)
    for beta, c in w.terms.items():
        out = out + _r_gen_times_mono(spec, i, beta).rscale(c)
    return out


def _r_poly_times_mono(spec, a, gamma):
    """Right normal form of a * e^gamma."""
    if a.is_zero():
        return EnvElement.zero(spec.nvars, spec.rank)
    j = _first_nonzero(gamma)
    if j is None:
        return EnvElement.from_poly(spec.rank, a)
    gamma2 = _bump(gamma, j, -1)
    head = renv_mul_gen_left(spec, _r_poly_times_mono(spec, a, gamma2), j)
    return head - _r_poly_times_mono(spec, spec.anchor_apply(j, a), gamma2)


def renv_mul_poly_left(spec, a, w):
    """Right normal form of a * w."""
    out = EnvElement.zero(spec.nvars, spec.rank)
    for gamma, c in w.terms.items():
        out = out + _r_poly_times_mono(spec, a, gamma).rscale(c)
    return out


def renv_mul(spec, w1, w2):
    """Product of two right-normal-form elements."""
    out = EnvElement.zero(spec.nvars, spec.rank)
    for alpha, a in w1.terms.items():
        for beta, b in w2.terms.items():
            t = _r_poly_times_mono(spec, a, beta).rscale(b)
            for i in range(spec.rank - 1, -1, -1):
                for _ in range(alpha[i]):
                    t = renv_mul_gen_left(spec, t, i)
            out = out + t
    return out


def right_from_left(spec, u):
    """Anti-isomorphism to the right-handed envelope: a -> a, e_i -> -e_i.

    Input is a left normal form; output is a right normal form (read the
    returned element as sum e^alpha * a_alpha).
    """
    out = EnvElement.zero(spec.nvars, spec.rank)
    for alpha, a in u.terms.items():
        sign = -1 if sum(alpha) % 2 else 1
        t = EnvElement.from_poly(spec.rank, a * sign)
        # image of a e^alpha is (-1)^|alpha| e_m^am ... e_1^a1 * a
        for i in range(spec.rank):
            for _ in range(alpha[i]):
                t = renv_mul_gen_left(spec, t, i)
        out = out + t
    return out

"""Lifted tensor products of enveloping elements.

Tensors are taken over the ground field on the k-basis of monomials
x^gamma e^alpha, so a term is a tuple of legs (gamma, alpha) with a
rational coefficient.  The class in the tensor product over the base ring
is represented by the canonical reduction that moves every coefficient
into the last leg; class equality is reduction equality.
"""

import itertools

from .envelope import EnvElement, mul_poly_right, pbw_mul
from .errors import ConfigError
from .scalars import CPoly, Fraction

__all__ = [
    "TensorElement", "env_coproduct", "tensor_mul", "tensor_reduce",
    "takeuchi_check", "iterated_coproduct", "primitive_check",
]


class TensorElement:
    __slots__ = ("nvars", "rank", "legs", "terms", "_hash")

    def __init__(self, nvars, rank, legs, terms=None):
        self.nvars = nvars
        self.rank = rank
        self.legs = legs
        self.terms = {k: c for k, c in (terms or {}).items() if c}
        self._hash = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nvars, rank, legs=2):
        return cls(nvars, rank, legs)

    @classmethod
    def unit(cls, nvars, rank, legs=2):
        key = (((0,) * nvars, (0,) * rank),) * legs
        return cls(nvars, rank, legs, {key: Fraction(1)})

    @classmethod
    def of(cls, *factors):
        """Outer product of EnvElements."""
        first = factors[0]
        terms = {(): Fraction(1)}
        for u in factors:
            new = {}
            for key, c in terms.items():
                for alpha, poly in u.terms.items():
                    for gamma, q in poly.terms.items():
                        k2 = key + ((gamma, alpha),)
                        cur = new.get(k2)
                        val = c * q
                        new[k2] = val if cur is None else cur + val
            terms = new
        return cls(first.nvars, first.rank, len(factors), terms)

    def leg_env(self, key):
        gamma, alpha = key
        return EnvElement.monomial(self.nvars, self.rank, alpha,
                                   CPoly.monomial(self.nvars, gamma))

    # -- ring-ish operations ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            cur = out.get(k)
            s = c if cur is None else cur + c
            if s:
                out[k] = s
            else:
                del out[k]
        return TensorElement(self.nvars, self.rank, self.legs, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement(self.nvars, self.rank, self.legs,
                             {k: -c for k, c in self.terms.items()})

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return TensorElement.zero(self.nvars, self.rank, self.legs)
        return TensorElement(self.nvars, self.rank, self.legs,
                             {k: v * c for k, v in self.terms.items()})

    def flip(self):
        """Swap the two legs of a 2-leg tensor."""
        if self.legs != 2:
            raise ConfigError("flip is for 2-leg tensors")
        return TensorElement(self.nvars, self.rank, 2,
                             {(k[1], k[0]): c for k, c in self.terms.items()})

    def embed(self, legs, pos):
        """Place this tensor at slots pos..pos+self.legs-1 of a wider tensor."""
        idkey = ((0,) * self.nvars, (0,) * self.rank)
        pre = (idkey,) * pos
        post = (idkey,) * (legs - pos - self.legs)
        return TensorElement(self.nvars, self.rank, legs,
                             {pre + k + post: c for k, c in self.terms.items()})

    def _check(self, other):
        if self.legs != other.legs or self.rank != other.rank:
            raise ConfigError("tensor shape mismatch")

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.legs == other.legs \
            and self.terms == other.terms

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.legs, tuple(sorted(self.terms.items()))))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return "0"

        def leg_str(key):
            gamma, alpha = key
            bits = [("x%d^%d" % (j + 1, g)) if g > 1 else "x%d" % (j + 1)
                    for j, g in enumerate(gamma) if g]
            bits += [("e%d^%d" % (i + 1, a)) if a > 1 else "e%d" % (i + 1)
                     for i, a in enumerate(alpha) if a]
            return "*".join(bits) or "1"

        parts = []
        for key in sorted(self.terms):
            c = self.terms[key]
            body = " (x) ".join(leg_str(k) for k in key)
            parts.append("%s[%s]" % ("" if c == 1 else str(c) + " ", body))
        return " + ".join(parts)


# -- products -------------------------------------------------------------------


def _mono_mul(spec, ka, kb):
    """PBW product of two basis monomials, cached on the spec."""
    cache = spec._poly_cache
    key = ("mm", ka, kb)
    hit = cache.get(key)
    if hit is not None:
        return hit
    ga, aa = ka
    gb, ab = kb
    ua = EnvElement.monomial(spec.nvars, spec.rank, aa, CPoly.monomial(spec.nvars, ga))
    ub = EnvElement.monomial(spec.nvars, spec.rank, ab, CPoly.monomial(spec.nvars, gb))
    res = pbw_mul(spec, ua, ub)
    cache[key] = res
    return res


def tensor_mul(spec, s, t):
    """Factorwise multiplication of lifted tensors."""
    s._check(t)
    out = {}
    for ka, ca in s.terms.items():
        for kb, cb in t.terms.items():
            c = ca * cb
            factors = [_mono_mul(spec, ka[l], kb[l]) for l in range(s.legs)]
            _expand_product(out, factors, c)
    return TensorElement(s.nvars, s.rank, s.legs, out)


def _expand_product(out, factors, coeff):
    """Accumulate the outer product of EnvElements into a term dict."""
    legchoices = []
    for u in factors:
        if not u.terms:
            return
        opts = []
        for alpha, poly in u.terms.items():
            for gamma, q in poly.terms.items():
                opts.append(((gamma, alpha), q))
        legchoices.append(opts)
    for combo in itertools.product(*legchoices):
        key = tuple(k for k, _ in combo)
        c = coeff
        for _, q in combo:
            c *= q
        cur = out.get(key)
        s = c if cur is None else cur + c
        if s:
            out[key] = s
        else:
            del out[key]


# -- coproduct ------------------------------------------------------------------


def _copro_mono(spec, alpha):
    """Delta(e^alpha) as a lifted 2-tensor, cached per spec."""
    cache = spec._poly_cache
    key = ("cp", alpha)
    hit = cache.get(key)
    if hit is not None:
        return hit
    T = TensorElement.unit(spec.nvars, spec.rank, 2)
    for i in range(spec.rank):
        if not alpha[i]:
            continue
        gen = EnvElement.gen(spec.nvars, spec.rank, i)
        one = EnvElement.one(spec.nvars, spec.rank)
        prim = TensorElement.of(gen, one) + TensorElement.of(one, gen)
        for _ in range(alpha[i]):
            T = tensor_mul(spec, T, prim)
    cache[key] = T
    return T


def scale_leg(T, leg, poly):
    """Multiply the coefficient of one leg by a polynomial (on the left)."""
    out = {}
    for key, c in T.terms.items():
        gamma, alpha = key[leg]
        for g2, q in poly.terms.items():
            gg = tuple(a + b for a, b in zip(gamma, g2))
            k2 = key[:leg] + ((gg, alpha),) + key[leg + 1:]
            cur = out.get(k2)
            s = c * q if cur is None else cur + c * q
            if s:
                out[k2] = s
            else:
                del out[k2]
    return TensorElement(T.nvars, T.rank, T.legs, out)


def env_coproduct(spec, u):
    """Multiplicative coproduct on the lift: generators are primitive,
    base coefficients load the left leg."""
    out = TensorElement.zero(spec.nvars, spec.rank, 2)
    for alpha, poly in u.terms.items():
        out = out + scale_leg(_copro_mono(spec, alpha), 0, poly)
    return out


def tensor_coproduct_leg(spec, T, leg):
    """Apply the coproduct at one leg of a lifted tensor (legs grow by one)."""
    out = {}
    for key, c in T.terms.items():
        gamma, alpha = key[leg]
        piece = _copro_mono(spec, alpha)
        if any(gamma):
            piece = scale_leg(piece, 0, CPoly.monomial(spec.nvars, gamma))
        for k2, c2 in piece.terms.items():
            kk = key[:leg] + k2 + key[leg + 1:]
            cur = out.get(kk)
            s = c * c2 if cur is None else cur + c * c2
            if s:
                out[kk] = s
            else:
                del out[kk]
    return TensorElement(T.nvars, T.rank, T.legs + 1, out)


def iterated_coproduct(spec, u, n, max_legs=8):
    """Left-nested n-fold coproduct on a lifted representative."""
    if n < 1:
        raise ConfigError("need n >= 1")
    if n + 1 > max_legs:
        raise ConfigError("iterated coproduct beyond configured bound")
    T = env_coproduct(spec, u)
    for _ in range(n - 1):
        T = tensor_coproduct_leg(spec, T, 0)
    return T


# -- reduction and class checks ---------------------------------------------------


def tensor_reduce(spec, T):
    """Canonical representative modulo the base-ring relations.

    All coefficients migrate to the last leg; earlier legs become pure PBW
    monomials.  Idempotent; class equality is equality of reductions.
    """
    out = {}
    zeros = (0,) * spec.nvars
    for key, c in T.terms.items():
        total = [0] * spec.nvars
        newkey = []
        for gamma, alpha in key[:-1]:
            for j, g in enumerate(gamma):
                total[j] += g
            newkey.append((zeros, alpha))
        lgamma, lalpha = key[-1]
        lg = tuple(a + b for a, b in zip(total, lgamma))
        newkey.append((lg, lalpha))
        kk = tuple(newkey)
        cur = out.get(kk)
        s = c if cur is None else cur + c
        if s:
            out[kk] = s
        else:
            del out[kk]
    return TensorElement(T.nvars, T.rank, T.legs, out)


def takeuchi_check(spec, T, samples):
    """Membership in the Takeuchi subspace, classical structure maps.

    For every sampled base element a the reductions of
    sum (u_i t(a)) (x) u'_i and sum u_i (x) (u'_i s(a)) must agree.
    """
    for a in samples:
        lhs = {}
        rhs = {}
        for key, c in T.terms.items():
            left = mul_poly_right(spec, T.leg_env(key[0]), a)
            _expand_product(lhs, [left, T.leg_env(key[1])], c)
            right = mul_poly_right(spec, T.leg_env(key[1]), a)
            _expand_product(rhs, [T.leg_env(key[0]), right], c)
        L = tensor_reduce(spec, TensorElement(T.nvars, T.rank, 2, lhs))
        R = tensor_reduce(spec, TensorElement(T.nvars, T.rank, 2, rhs))
        if L != R:
            return False
    return True


def primitive_check(spec, u):
    """True iff Delta(u) - u (x) 1 - 1 (x) u reduces to zero."""
    one = EnvElement.one(spec.nvars, spec.rank)
    diff = env_coproduct(spec, u) - TensorElement.of(u, one) - TensorElement.of(one, u)
    return tensor_reduce(spec, diff).is_zero()

"""Spec-file ingestion: a sectioned plain-text format.

Sections in square brackets, key = value entries, comments with '#'.
Polynomials use the x1..xp syntax of the scalar parser; envelope monomials
additionally allow generator names (as declared in [generators]) with '^'
powers, e.g. ``1/2 | x1*d1 | d2`` for one twistor term.

    [base]        vars = x1 x2
    [generators]  names = d1 d2            (or: rank = 2)
    [bracket]     c i j k = <poly>         ([e_i, e_j] component k; i < j)
    [anchor]      w i j = <poly>
    [twistor]     form = exp | none
                  term = <weight> | <left monomial> | <right monomial>
    [truncation]  h_order / pbw_degree / jet_degree / n_max
    [samples]     max_degree = 2, extra = <poly>; <poly>
    [rng]         seed = 7
"""

import re
from fractions import Fraction

from .deform import Twistor, exp_twistor, trivial_twistor
from .envelope import EnvElement
from .errors import ParseError, SemanticError
from .lierinehart import LieRinehartSpec
from .scalars import CPoly, parse_poly

__all__ = ["EngineSpec", "load_spec", "load_spec_file", "parse_env_monomial"]

_SECTIONS = ("base", "generators", "bracket", "anchor", "twistor",
             "truncation", "samples", "rng")


class EngineSpec:
    def __init__(self):
        self.var_names = []
        self.gen_names = []
        self.bracket_entries = []   # (i, j, k, poly-text, line)
        self.anchor_entries = []    # (i, j, poly-text, line)
        self.twistor_form = "none"
        self.twistor_terms = []     # (weight, left-text, right-text, line)
        self.twistor_orders = []    # (n, weight, left-text, right-text, line)
        self.h_order = 2
        self.pbw_degree = 6
        self.jet_degree = 2
        self.n_max = 2
        self.sample_degree = 2
        self.extra_polys = []
        self.seed = 0

    @property
    def nvars(self):
        return len(self.var_names)

    @property
    def rank(self):
        return len(self.gen_names)

    def build_structure(self):
        p, m = self.nvars, self.rank
        bracket = {}
        for (i, j, k, text, line) in self.bracket_entries:
            key = (i - 1, j - 1)
            vec = list(bracket.get(key, [CPoly.zero(p)] * m))
            vec[k - 1] = vec[k - 1] + parse_poly(text, p, line)
            bracket[key] = tuple(vec)
        anchor = [[CPoly.zero(p)] * p for _ in range(m)]
        for (i, j, text, line) in self.anchor_entries:
            anchor[i - 1][j - 1] = anchor[i - 1][j - 1] + parse_poly(text, p, line)
        return LieRinehartSpec(p, m, bracket, anchor, name="specfile")

    def build_twistor(self, spec, order):
        from .series import HSeries
        from .tensorspace import TensorElement
        if self.twistor_form == "none":
            return trivial_twistor(spec, order)
        if self.twistor_form == "exp":
            r = TensorElement.zero(spec.nvars, spec.rank, 2)
            for (weight, left, right, line) in self.twistor_terms:
                lenv = parse_env_monomial(left, self.var_names, self.gen_names, line)
                renv = parse_env_monomial(right, self.var_names, self.gen_names, line)
                r = r + TensorElement.of(lenv, renv).scale(weight)
            return exp_twistor(spec, r, order)
        # explicit per-order tensor lists; order 0 is always the unit
        zero = TensorElement.zero(spec.nvars, spec.rank, 2)
        coeffs = [TensorElement.unit(spec.nvars, spec.rank, 2)] \
            + [zero] * order
        for (n, weight, left, right, line) in self.twistor_orders:
            if n < 1:
                raise SemanticError("line %d: explicit twistor orders start "
                                    "at h^1" % line)
            if n > order:
                continue
            lenv = parse_env_monomial(left, self.var_names, self.gen_names, line)
            renv = parse_env_monomial(right, self.var_names, self.gen_names, line)
            coeffs[n] = coeffs[n] + TensorElement.of(lenv, renv).scale(weight)
        return Twistor(HSeries(order, coeffs, zero))


_INT = re.compile(r"-?\d+$")


def parse_env_monomial(text, var_names, gen_names, line=0):
    """A product of a rational, base variables and generator names."""
    p, m = len(var_names), len(gen_names)
    coeff = Fraction(1)
    gamma = [0] * p
    alpha = [0] * m
    for factor in text.strip().split("*"):
        factor = factor.strip()
        if not factor:
            raise ParseError(line, "empty factor in %r" % text)
        name, _, power = factor.partition("^")
        power = int(power) if power else 1
        if name in var_names:
            gamma[var_names.index(name)] += power
        elif name in gen_names:
            alpha[gen_names.index(name)] += power
        elif re.fullmatch(r"-?\d+(/\d+)?", name):
            coeff *= Fraction(name) ** power
        else:
            raise ParseError(line, "unknown factor %r" % name)
    return EnvElement.monomial(p, m, tuple(alpha),
                               CPoly.monomial(p, tuple(gamma), coeff))


def load_spec_file(path):
    with open(path) as fh:
        return load_spec(fh.read())


def load_spec(text):
    """Parse and validate spec text; returns an EngineSpec."""
    spec = EngineSpec()
    section = None
    seen_any = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        seen_any = True
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError(lineno, "unterminated section header")
            section = line[1:-1].strip()
            if section not in _SECTIONS:
                raise ParseError(lineno, "unknown section %r" % section)
            continue
        if section is None:
            raise ParseError(lineno, "entry before any section")
        key, eq, value = line.partition("=")
        if not eq:
            raise ParseError(lineno, "expected key = value")
        key, value = key.strip(), value.strip()
        _dispatch(spec, section, key, value, lineno)
    if not seen_any:
        raise ParseError(0, "empty spec file")
    _validate(spec)
    return spec


def _dispatch(spec, section, key, value, lineno):
    if section == "base":
        if key != "vars":
            raise ParseError(lineno, "unknown base key %r" % key)
        spec.var_names = value.split()
    elif section == "generators":
        if key == "names":
            spec.gen_names = value.split()
        elif key == "rank":
            spec.gen_names = ["e%d" % (i + 1) for i in range(_int(value, lineno))]
        else:
            raise ParseError(lineno, "unknown generators key %r" % key)
    elif section == "bracket":
        parts = key.split()
        if len(parts) != 4 or parts[0] != "c":
            raise ParseError(lineno, "bracket entries read: c i j k = poly")
        spec.bracket_entries.append(
            (_int(parts[1], lineno), _int(parts[2], lineno),
             _int(parts[3], lineno), value, lineno))
    elif section == "anchor":
        parts = key.split()
        if len(parts) != 3 or parts[0] != "w":
            raise ParseError(lineno, "anchor entries read: w i j = poly")
        spec.anchor_entries.append(
            (_int(parts[1], lineno), _int(parts[2], lineno), value, lineno))
    elif section == "twistor":
        if key == "form":
            if value not in ("exp", "orders", "none"):
                raise ParseError(lineno,
                                 "twistor form must be exp, orders or none")
            spec.twistor_form = value
        elif key == "term":
            bits = [b.strip() for b in value.split("|")]
            if len(bits) != 3:
                raise ParseError(lineno, "term reads: weight | left | right")
            try:
                weight = Fraction(bits[0])
            except ValueError:
                raise ParseError(lineno, "bad weight %r" % bits[0])
            spec.twistor_terms.append((weight, bits[1], bits[2], lineno))
        elif key.split()[0] == "order":
            parts = key.split()
            if len(parts) != 2:
                raise ParseError(lineno, "explicit entries read: "
                                 "order n = weight | left | right")
            bits = [b.strip() for b in value.split("|")]
            if len(bits) != 3:
                raise ParseError(lineno, "order reads: weight | left | right")
            try:
                weight = Fraction(bits[0])
            except ValueError:
                raise ParseError(lineno, "bad weight %r" % bits[0])
            spec.twistor_orders.append(
                (_int(parts[1], lineno), weight, bits[1], bits[2], lineno))
        else:
            raise ParseError(lineno, "unknown twistor key %r" % key)
    elif section == "truncation":
        if key not in ("h_order", "pbw_degree", "jet_degree", "n_max"):
            raise ParseError(lineno, "unknown truncation key %r" % key)
        setattr(spec, key, _int(value, lineno))
    elif section == "samples":
        if key == "max_degree":
            spec.sample_degree = _int(value, lineno)
        elif key == "extra":
            spec.extra_polys = [s.strip() for s in value.split(";") if s.strip()]
        else:
            raise ParseError(lineno, "unknown samples key %r" % key)
    elif section == "rng":
        if key != "seed":
            raise ParseError(lineno, "unknown rng key %r" % key)
        spec.seed = _int(value, lineno)


def _int(value, lineno):
    if not _INT.match(value.strip()):
        raise ParseError(lineno, "expected an integer, got %r" % value)
    return int(value)


def _validate(spec):
    if not spec.var_names and not spec.gen_names:
        raise SemanticError("spec declares neither variables nor generators")
    if not spec.gen_names:
        raise SemanticError("spec declares no generators")
    if len(set(spec.var_names)) != len(spec.var_names):
        raise SemanticError("duplicate variable names")
    if len(set(spec.gen_names)) != len(spec.gen_names):
        raise SemanticError("duplicate generator names")
    if set(spec.var_names) & set(spec.gen_names):
        raise SemanticError("variable and generator names overlap")
    for name in spec.var_names:
        if not re.fullmatch(r"x\d+", name):
            raise SemanticError("variables must be named x1..xp, got %r" % name)
    for i, name in enumerate(spec.var_names):
        if name != "x%d" % (i + 1):
            raise SemanticError("variables must appear in order x1..xp")
    m = spec.rank
    for (i, j, k, _, line) in spec.bracket_entries:
        if not (1 <= i < j <= m) or not 1 <= k <= m:
            raise SemanticError("line %d: bracket index out of range" % line)
    for (i, j, _, line) in spec.anchor_entries:
        if not 1 <= i <= m or not 1 <= j <= spec.nvars:
            raise SemanticError("line %d: anchor index out of range" % line)
    for val in (spec.h_order, spec.jet_degree, spec.n_max, spec.pbw_degree,
                spec.sample_degree):
        if val < 1:
            raise SemanticError("all truncation degrees must be >= 1")

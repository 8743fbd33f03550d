"""Drinfeld-style rescaling functors and semiclassical extraction.

The dual-side functor rescales the augmentation functionals by 1/h and
checks that all generator relations stay h-integral; the envelope-side
functor selects elements whose n-fold reduced coproducts are divisible by
h^n.  Semiclassical limits read off the induced structure on the dual
module from order-h data; the roundtrip check composes the two functors
and compares generators and relations with the originals at truncation.
"""

import itertools

from .deform import (
    defelem_from_env, defelem_mul, iterated_twisted_coproduct,
    twisted_coproduct,
)
from .envelope import EnvElement, env_counit, pbw_mul
from .errors import ConfigError, NonIntegralError, TruncationInsufficientError
from .jets import (
    coordinate_functional, jet_pair, jet_product, jets_equal, pbw_indices,
    unit_functional, xi_functional,
)
from .lierinehart import (
    LieRinehartSpec, MultiVector, cobracket_from_dual_spec,
    lr_bialgebra_validate, lr_validate,
)
from .report import Check, Report
from .scalars import CPoly, Fraction, monomials_upto
from .series import HSeries

__all__ = [
    "VeeAlgebroid", "vee_build", "vee_semiclassical", "hprime_member",
    "hprime_basis", "semiclassical_cobracket", "semiclassical_dual_bracket",
    "duality_roundtrip",
]


# -- the (.)^vee functor on jet contexts -----------------------------------------


class VeeAlgebroid:
    """Generators xi-check_i = h^-1 xi_i together with the base embeddings,
    and their computed relation table (all h-integral by construction)."""

    def __init__(self, jctx, gen_names=None, base_names=None):
        self.jctx = jctx
        spec = jctx.spec
        gen_names = gen_names or ["xv%d" % (i + 1) for i in range(spec.rank)]
        base_names = base_names or ["b%d" % (j + 1) for j in range(spec.nvars)]
        self.gen_names = list(gen_names)
        self.base_names = list(base_names)
        self.gens = {}
        for i, name in enumerate(self.gen_names):
            self.gens[name] = xi_functional(jctx, i).shift(-1)
        for j, name in enumerate(self.base_names):
            self.gens[name] = coordinate_functional(jctx, j)
        self.relations = {}

    def names(self):
        return self.gen_names + self.base_names


def vee_build(jctx, degree=None, gen_names=None, base_names=None):
    """Construct the rescaled dual algebroid and its relation table.

    Every pairwise commutator must stay inside the rescaled algebra: the
    table entry at depth beta may carry at worst h^-|beta| (one inverse
    power per rescaled generator).  Anything deeper raises NonIntegralError
    naming the offending pair.
    """
    v = VeeAlgebroid(jctx, gen_names, base_names)
    names = v.names()
    for ia, na in enumerate(names):
        for nb in names[ia + 1:]:
            a, b = v.gens[na], v.gens[nb]
            comm = jet_product(jctx, a, b, degree).sub(
                jet_product(jctx, b, a, degree))
            for beta, val in comm.table.items():
                norm = val.normalize()
                if norm.coeffs and norm.val < -sum(beta):
                    raise NonIntegralError(
                        norm.val,
                        "commutator [%s, %s] exceeds the rescaling depth "
                        "at %s" % (na, nb, beta))
            v.relations[(na, nb)] = comm
    return v


def vee_semiclassical(v):
    """Read the order-zero structure off the relation table.

    Generator commutators give the dual bracket constants, generator-base
    commutators the dual anchor; the result must validate and the
    generators must be primitive modulo h.
    """
    jctx = v.jctx
    spec = jctx.spec
    report = Report("vee-semiclassical",
                    {"h_order": jctx.order, "flavor": jctx.flavor})
    m, p = spec.rank, spec.nvars
    zero = CPoly.zero(p)

    bracket = {}
    ok, witness = True, None
    for i in range(m):
        for j in range(i + 1, m):
            comm = v.relations[(v.gen_names[i], v.gen_names[j])]
            vec = []
            for k in range(m):
                beta = tuple(1 if t == k else 0 for t in range(m))
                # generators carry an h^-1 scale; their coefficient in the
                # commutator sits at Laurent order -1
                vec.append(comm.value(jctx, beta).coeff(-1))
            if any(not c.is_zero() for c in vec):
                bracket[(i, j)] = tuple(vec)
            # nothing below the generator scale may survive
            for beta, val in comm.table.items():
                norm = val.normalize()
                if norm.coeffs and norm.val < -1:
                    ok, witness = False, \
                        "relation [%s,%s] has terms below the generator scale" \
                        % (v.gen_names[i], v.gen_names[j])
    report.add(Check("relations-at-generator-scale", ok, witness))

    anchor = [[zero] * p for _ in range(m)]
    for i in range(m):
        for j in range(p):
            na, nb = v.gen_names[i], v.base_names[j]
            comm = v.relations[(na, nb)] if (na, nb) in v.relations \
                else v.relations[(nb, na)].neg()
            anchor[i][j] = comm.value(jctx, (0,) * m).coeff(0)

    dual = LieRinehartSpec(p, m, bracket, anchor, name="dual-of-%s" % jctx.flavor)
    rep = lr_validate(dual)
    report.add(Check("dual-structure-valid", rep.ok(), rep.first_failure()))

    ok, witness = True, None
    from .jets import tensor_functional_from_pair, jet_coproduct_functional
    eps = unit_functional(jctx)
    for i, name in enumerate(v.gen_names):
        g = v.gens[name]
        T = jet_coproduct_functional(jctx, g, degree=2)
        W1 = tensor_functional_from_pair(jctx, g, eps, degree=2)
        W2 = tensor_functional_from_pair(jctx, eps, g, degree=2)
        keys = set(T) | set(W1) | set(W2)
        zval = jctx.zero_value()
        for key in keys:
            diff = T.get(key, zval) - (W1.get(key, zval) + W2.get(key, zval))
            norm = diff.normalize()
            # the correction must lie in h * (rescaled x rescaled), whose
            # table entries at depth (b1, b2) reach down to h^(1-|b1|-|b2|)
            depth = 1 - sum(key[0]) - sum(key[1])
            if norm.coeffs and norm.val < depth:
                ok, witness = False, "%s not primitive modulo h" % name
                break
        if not ok:
            break
    report.add(Check("generators-primitive-mod-h", ok, witness))
    return dual, report


# -- the (.)' functor on the envelope side -----------------------------------------


def _counit_series(u):
    zero = CPoly.zero(u.zero.nvars)
    return HSeries(u.order, [env_counit(c) for c in u.coeffs], zero)


def _project_leg(dfa, HT, leg, flavor):
    """Per-leg projection w -> w - map_F(eps(w)) on a lifted tensor series."""
    spec = dfa.spec
    n = dfa.order
    mapper = dfa.source if flavor == "source" else dfa.target
    zeros_a = (0,) * spec.rank
    acc = [dict() for _ in range(n + 1)]
    zero_t = None
    for k, Tk in enumerate(HT.coeffs):
        if zero_t is None:
            zero_t = Tk
        for key, c in Tk.terms.items():
            gamma, alpha = key[leg]
            _bump(acc[k], key, c)
            if alpha != zeros_a:
                continue
            ser = mapper(CPoly.monomial(spec.nvars, gamma))
            for j, env in enumerate(ser.coeffs):
                if k + j > n:
                    break
                for a2, p2 in env.terms.items():
                    for g2, q2 in p2.terms.items():
                        k2 = key[:leg] + ((g2, a2),) + key[leg + 1:]
                        _bump(acc[k + j], k2, -c * q2)
    from .tensorspace import TensorElement
    legs = zero_t.legs if zero_t is not None else 2
    coeffs = [TensorElement(spec.nvars, spec.rank, legs, d) for d in acc]
    return HSeries(n, coeffs, TensorElement.zero(spec.nvars, spec.rank, legs))


def _bump(d, key, c):
    cur = d.get(key)
    s = c if cur is None else cur + c
    if s:
        d[key] = s
    else:
        d.pop(key, None)


def reduced_coproduct_power(dfa, u, n, flavor="source"):
    """delta^n: the J-component of the n-fold coproduct on the lift."""
    if n == 1:
        eps = _counit_series(u)
        mapper = dfa.source_series if flavor == "source" else dfa.target_series
        return u - mapper(eps)
    HT = iterated_twisted_coproduct(dfa, u, n - 1)
    for leg in range(n):
        HT = _project_leg(dfa, HT, leg, flavor)
    return HT


def hprime_member(dfa, u, n_max=None, cross_check=True):
    """delta^n(u) divisible by h^n for every n <= n_max, on lifted
    representatives; certification is relative to (N, n_max)."""
    n_max = n_max if n_max is not None else dfa.order
    if n_max > dfa.order:
        raise ConfigError("membership order exceeds the truncation")
    for n in range(1, n_max + 1):
        d = reduced_coproduct_power(dfa, u, n, "source")
        if any(not d.coeffs[k].is_zero() for k in range(min(n, dfa.order + 1))):
            return False
        if cross_check:
            dt = reduced_coproduct_power(dfa, u, n, "target")
            if any(not dt.coeffs[k].is_zero() for k in range(min(n, dfa.order + 1))):
                return False
    return True


def hprime_basis(dfa, jctx, degree, n_max=None):
    """The rescaled dual basis {h^|alpha| theta_alpha} with theta_alpha dual
    to the divided xi-powers, solved by exact triangular inversion."""
    if jctx.dfa is not dfa:
        raise ConfigError("jet context must wrap the same deformation")
    spec = dfa.spec
    n = dfa.order
    idx = pbw_indices(spec.rank, degree)
    gens = [xi_functional(jctx, i) for i in range(spec.rank)]

    powers = {}
    for kappa in idx:
        prod = unit_functional(jctx)
        fact = 1
        for i in range(spec.rank):
            for t in range(kappa[i]):
                prod = jet_product(jctx, prod, gens[i], degree)
                fact *= t + 1
        powers[kappa] = prod.scale(Fraction(1, fact))

    basis = {}
    for alpha in idx:
        cand = defelem_from_env(
            spec, EnvElement.monomial(spec.nvars, spec.rank, alpha), n)
        # kill the order-k residuals of the pairing matrix, one order at a
        # time; the order-0 row is the Kronecker delta already
        for k in range(1, n + 1):
            for beta in idx:
                resid = jet_pair(jctx, powers[beta], cand).coeff(k)
                if resid.is_zero():
                    continue
                mono = EnvElement.monomial(spec.nvars, spec.rank, beta)
                corr = dfa.source(resid).map(
                    lambda w: pbw_mul(spec, w, mono)).shift(k)
                cand = cand - corr
        for beta in idx:
            val = jet_pair(jctx, powers[beta], cand)
            want = CPoly.const(spec.nvars, 1) if beta == alpha \
                else CPoly.zero(spec.nvars)
            for q in range(n + 1):
                expect = want if q == 0 else CPoly.zero(spec.nvars)
                if val.coeff(q) != expect:
                    raise TruncationInsufficientError(
                        "dual basis solve did not converge at %s/%s"
                        % (alpha, beta))
        member = cand.shift(sum(alpha))
        if n_max and not hprime_member(dfa, member, n_max):
            raise ConfigError("dual basis member fails the membership test")
        basis[alpha] = member
    return basis


# -- semiclassical limits ------------------------------------------------------------


def semiclassical_cobracket(dfa):
    """Order-h data of the deformation: delta on base variables (values in
    the module) and on generators (values in wedge^2), assembled into the
    dual structure; the induced pair must validate as a bialgebra."""
    spec = dfa.spec
    p, m = spec.nvars, spec.rank
    report = Report("semiclassical-cobracket", {"h_order": dfa.order})
    zero = CPoly.zero(p)

    delta_base = []
    ok, witness = True, None
    for j in range(p):
        xj = CPoly.var(p, j)
        diff = dfa.target(xj) - dfa.source(xj)
        if not diff.coeffs[0].is_zero():
            ok, witness = False, "source/target differ at order zero"
        val = diff.coeffs[1] if dfa.order >= 1 else EnvElement.zero(p, m)
        terms = {}
        for alpha, poly in val.terms.items():
            if sum(alpha) != 1:
                ok, witness = False, \
                    "delta(x%d) is not module-valued" % (j + 1)
                continue
            i = alpha.index(1)
            terms[(i,)] = terms.get((i,), zero) + poly
        delta_base.append(MultiVector(p, 1, terms))
    report.add(Check("delta-on-base-is-linear", ok, witness))

    from .tensorspace import TensorElement, tensor_reduce
    delta_gens = []
    ok, witness = True, None
    for i in range(m):
        u = defelem_from_env(spec, EnvElement.gen(p, m, i), dfa.order)
        lift = twisted_coproduct(dfa, u)
        first = tensor_reduce(spec, lift.coeffs[1]) if dfa.order >= 1 \
            else TensorElement.zero(p, m, 2)
        anti = first.flip() - first
        # reduce again so both legs sit in canonical position
        anti = tensor_reduce(spec, anti)
        terms = {}
        for key, c in anti.terms.items():
            (g1, a1), (g2, a2) = key
            if sum(a1) != 1 or sum(a2) != 1:
                ok, witness = False, \
                    "antisymmetrized order-h coproduct of e%d is not bilinear" % (i + 1)
                continue
            ia, ib = a1.index(1), a2.index(1)
            coeff = CPoly.monomial(p, tuple(x + y for x, y in zip(g1, g2)), c)
            if ia == ib:
                if not coeff.is_zero():
                    ok, witness = False, "diagonal term in delta(e%d)" % (i + 1)
                continue
            if ia < ib:
                terms[(ia, ib)] = terms.get((ia, ib), zero) + coeff
        delta_gens.append(MultiVector(p, 2, terms))
    report.add(Check("delta-on-generators-in-wedge2", ok, witness))

    # read the dual structure off delta
    anchor = [[delta_base[j].terms.get((i,), zero) for j in range(p)]
              for i in range(m)]
    bracket = {}
    for i in range(m):
        for j in range(i + 1, m):
            vec = []
            for k in range(m):
                vec.append(-delta_gens[k].terms.get((i, j), zero))
            if any(not c.is_zero() for c in vec):
                bracket[(i, j)] = tuple(vec)
    dual = LieRinehartSpec(p, m, bracket, anchor, name="cobracket-dual")
    pair_rep = lr_bialgebra_validate(spec, dual)
    report.add(Check("induced-pair-is-bialgebra", pair_rep.ok(),
                     pair_rep.first_failure()))
    delta = cobracket_from_dual_spec(spec, dual)
    return delta, dual, report


def semiclassical_dual_bracket(jctx):
    """Bracket and anchor on the dual module from functional commutators,
    with canonical liftings in the counit kernel."""
    spec = jctx.spec
    p, m = spec.nvars, spec.rank
    report = Report("semiclassical-dual-bracket",
                    {"h_order": jctx.order, "flavor": jctx.flavor})
    zero = CPoly.zero(p)
    gens = [xi_functional(jctx, i) for i in range(spec.rank)]
    coords = [coordinate_functional(jctx, j) for j in range(p)]

    bracket = {}
    ok, witness = True, None
    for i in range(m):
        for j in range(i + 1, m):
            comm = jet_product(jctx, gens[i], gens[j], degree=2).sub(
                jet_product(jctx, gens[j], gens[i], degree=2)).shift(-1)
            vec = []
            for k in range(m):
                beta = tuple(1 if t == k else 0 for t in range(m))
                vec.append(comm.value(jctx, beta).coeff(0))
            if any(not c.is_zero() for c in vec):
                bracket[(i, j)] = tuple(vec)
            unitval = comm.value(jctx, (0,) * m).normalize()
            if unitval.coeffs and unitval.val < 1:
                ok, witness = False, "commutator has a counit component"
    report.add(Check("bracket-lands-in-augmentation", ok, witness))

    anchor = [[zero] * p for _ in range(m)]
    for i in range(m):
        for j in range(p):
            comm = jet_product(jctx, gens[i], coords[j], degree=1).sub(
                jet_product(jctx, coords[j], gens[i], degree=1)).shift(-1)
            anchor[i][j] = comm.value(jctx, (0,) * m).coeff(0)

    dual = LieRinehartSpec(p, m, bracket, anchor,
                           name="dual-bracket-%s" % jctx.flavor)
    rep = lr_validate(dual)
    report.add(Check("dual-structure-valid", rep.ok(), rep.first_failure()))
    return dual, report


# -- quantum-duality roundtrip ----------------------------------------------------------


def _membership_args(dfa, sample_degree=1):
    """Augmentation samples from the selected subalgebra: h^|alpha|-scaled
    generator monomials and augmentation projections of base monomials.
    These are the elements every dual-integral functional must see with
    the full h-growth."""
    spec = dfa.spec
    out = []
    for alpha in pbw_indices(spec.rank, sample_degree):
        if any(alpha):
            u = defelem_from_env(
                spec, EnvElement.monomial(spec.nvars, spec.rank, alpha),
                dfa.order)
            out.append(u.shift(sum(alpha)))
    for g in monomials_upto(spec.nvars, sample_degree)[1:]:
        u = defelem_from_env(spec, EnvElement.from_poly(spec.rank, g),
                             dfa.order)
        out.append(u - dfa.source_series(_counit_series(u)))
    return out


def functional_prime_member(jctx, lam, n_max=3, sample_degree=1):
    """Pairing test: lam on products of n augmentation elements must be
    divisible by h^n, for n <= n_max."""
    dfa = jctx.dfa
    spec = jctx.spec
    args = _membership_args(dfa, sample_degree)
    for n in range(1, n_max + 1):
        for combo in itertools.combinations_with_replacement(range(len(args)), n):
            prod = args[combo[0]]
            for idx in combo[1:]:
                prod = defelem_mul(spec, prod, args[idx])
            val = jet_pair(jctx, lam, prod).normalize()
            if val.coeffs and val.val < n:
                return False, "pairing with a %d-fold augmentation product " \
                    "has order h^%d" % (n, val.val)
    return True, None


def duality_roundtrip(jctx, generators=None, n_max=3, degree=None):
    """Rescale down, rescale back up, and compare with the originals.

    ``generators`` defaults to the canonical augmentation functionals; a
    rescaled input is reported as a mismatch against the canonical table.
    """
    spec = jctx.spec
    report = Report("duality-roundtrip",
                    {"h_order": jctx.order, "flavor": jctx.flavor,
                     "n_max": n_max})
    canonical = [xi_functional(jctx, i) for i in range(spec.rank)]
    gens = list(generators) if generators is not None else list(canonical)
    degree = degree if degree is not None else jctx.jet_degree

    checked = [g.shift(-1) for g in gens]
    ok, witness = True, None
    for i, a in enumerate(checked):
        for j in range(i + 1, len(checked)):
            comm = jet_product(jctx, a, checked[j], degree).sub(
                jet_product(jctx, checked[j], a, degree))
            for beta, val in comm.table.items():
                norm = val.normalize()
                if norm.coeffs and norm.val < -sum(beta):
                    ok, witness = False, \
                        "rescaled commutator exceeds depth at %s" % (beta,)
    report.add(Check("vee-relations-integral", ok, witness))

    recovered = [g.shift(1) for g in checked]
    ok, witness = True, None
    for i, r in enumerate(recovered):
        member, why = functional_prime_member(jctx, r, n_max)
        if not member:
            ok, witness = False, "recovered generator %d: %s" % (i + 1, why)
            break
    report.add(Check("recovered-generators-pass-membership", ok, witness))

    ok, witness = True, None
    for i, r in enumerate(recovered):
        if not jets_equal(jctx, r, canonical[i]):
            ok, witness = False, \
                "recovered generator %d differs from the canonical one" % (i + 1)
    report.add(Check("generator-tables-recovered", ok, witness))

    ok, witness = True, None
    for i in range(len(recovered)):
        for j in range(i + 1, len(recovered)):
            got = jet_product(jctx, recovered[i], recovered[j], degree).sub(
                jet_product(jctx, recovered[j], recovered[i], degree))
            want = jet_product(jctx, canonical[i], canonical[j], degree).sub(
                jet_product(jctx, canonical[j], canonical[i], degree))
            if not jets_equal(jctx, got, want):
                ok, witness = False, \
                    "relation table differs on pair (%d, %d)" % (i + 1, j + 1)
    report.add(Check("relation-table-recovered", ok, witness))
    return report

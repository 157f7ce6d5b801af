"""Spectral-curve toolkit for commuting pairs of differential operators.

For commuting A, B the resultant h(lambda, mu) = Res(A - lambda, B - mu)
is a nonzero constant-coefficient polynomial; its square-free part f cuts
out the spectral curve.  Over the fraction field of K[lambda, mu]/(f) the
shifted pair acquires a common right factor, recovered here as the first
subresultant that stays nonzero after reduction modulo the curve.

Includes constructors for the two worked families: Euler operators over
Q(x) and the Lame pair over the Weierstrass extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .domains import (DomainElement, MultiPoly, exact_div, poly_gcd,
                      rational_function_domain, weierstrass_domain)
from .errors import (DenominatorInIdeal, DivisionByZero, NonConstantResultant,
                     NonConstantValue, NotCommuting, NotMonicInEitherVariable,
                     UnknownParameter, ZeroInput)
from .operators import ODO, commutator
from .subresultants import resultant, subresultant


@dataclass(frozen=True)
class SpectralCurve:
    """Plane curve f(lambda, mu) = 0 over the constant subfield."""
    f: MultiPoly
    lambda_symbol: str
    mu_symbol: str

    def variable_indices(self):
        t = self.f.table
        return t.index_of(self.lambda_symbol), t.index_of(self.mu_symbol)


@dataclass(frozen=True)
class CommutingPair:
    """A commuting pair with its resultant polynomial and spectral curve."""
    a: ODO
    b: ODO
    h: DomainElement
    curve: SpectralCurve


@dataclass(frozen=True)
class SpectralAnalysis:
    """Full output of the curve GCRD pipeline."""
    pair: CommutingPair
    index: int
    gcrd: ODO


def shift_by_parameter(a, name):
    """A - p for a registered constant parameter p of A's domain."""
    if not a.domain.is_constant_symbol(name):
        raise UnknownParameter("%r is not a constant parameter of %s" % (name, a.domain))
    return a - a.domain.symbol(name)


def bc_resultant(a, b, lambda_symbol="lambda", mu_symbol="mu"):
    """Resultant of (A - lambda, B - mu) for a commuting pair.

    Checks commutativity first, and afterwards that the result is a nonzero
    polynomial in the two parameters with constant coefficients; anything
    else signals a bug or non-commuting input.
    """
    comm = commutator(a, b)
    if not comm.is_zero:
        raise NotCommuting("commutator has order %s" % comm.order)
    h = resultant(shift_by_parameter(a, lambda_symbol),
                  shift_by_parameter(b, mu_symbol))
    table = a.domain.table
    li, mi = table.index_of(lambda_symbol), table.index_of(mu_symbol)
    if (h.is_zero or not h.derive().is_zero
            or h.den.degree_in(li) or h.den.degree_in(mi)):
        raise NonConstantResultant("resultant of the shifted pair is not a "
                                   "constant-coefficient polynomial")
    return h


def squarefree_part(h, var_names=("lambda", "mu")):
    """rad(h) = h / gcd(h, dh/dlambda, dh/dmu), content 1, positive lead."""
    if h.is_zero:
        raise ZeroInput("square-free part of zero")
    g = h
    for name in var_names:
        idx = h.table.index_of(name)
        if idx is not None:
            g = poly_gcd(g, h.partial(idx))
    return exact_div(h, g).normalized()


def make_curve(h, lambda_symbol="lambda", mu_symbol="mu"):
    """Spectral curve from the resultant polynomial (square-free part)."""
    if isinstance(h, DomainElement):
        h = h.num
    f = squarefree_part(h, (lambda_symbol, mu_symbol))
    return SpectralCurve(f, lambda_symbol, mu_symbol)


def _curve_reducer(curve):
    """Pick the reduction variable and return (index, degree, rest/-lc).

    Needs a variable in which f is monic up to a rational constant; the mu
    variable is preferred.  Reduction then rewrites v^deg as that quotient.
    """
    li, mi = curve.variable_indices()
    f = curve.f
    for v in (mi, li):
        if v is None:
            continue
        deg = f.degree_in(v)
        if deg == 0:
            continue
        lead = f.coeff_in(v, deg)
        if lead.is_constant:
            c = lead.constant_value()
            rest = f - MultiPoly.gen(f.table, v, deg) * lead
            return v, deg, rest.scale(Fraction(-1) / c)
    raise NotMonicInEitherVariable("curve polynomial is monic in neither variable")


def reduce_poly_mod_curve(p, curve):
    """Remainder of p under division by the curve polynomial."""
    v, deg, repl = _curve_reducer(curve)
    while p.degree_in(v) >= deg:
        high = {}
        low = {}
        for exps, c in p.terms.items():
            e = exps[v] if v < len(exps) else 0
            if e >= deg:
                out = list(exps) + [0] * (v + 1 - len(exps))
                out[v] = e - deg
                high[tuple(out)] = c
            else:
                low[exps] = c
        p = MultiPoly(p.table, low) + MultiPoly.from_items(p.table, high.items()) * repl
    return p


def reduce_mod_curve(e, curve):
    """Canonical representative of a domain element in K(curve)."""
    num = reduce_poly_mod_curve(e.num, curve)
    den = reduce_poly_mod_curve(e.den, curve)
    if den.is_zero:
        raise DenominatorInIdeal("denominator vanishes on the curve")
    return DomainElement(e.domain, num, den)


def is_zero_mod_curve(e, curve):
    if reduce_poly_mod_curve(e.den, curve).is_zero:
        raise DenominatorInIdeal("denominator vanishes on the curve")
    return reduce_poly_mod_curve(e.num, curve).is_zero


def elements_equal_mod_curve(a, b, curve):
    return is_zero_mod_curve(a - b, curve)


def odo_reduce_mod_curve(op, curve):
    """Reduce every coefficient; drops the order when the lead vanishes."""
    return ODO(op.domain, [reduce_mod_curve(c, curve) for c in op.coeffs])


def odos_equal_mod_curve(a, b, curve):
    diff = a - b
    return all(is_zero_mod_curve(c, curve) for c in diff.coeffs)


def right_divide_mod_curve(a, b, curve):
    """Right division carried out with coefficients reduced on the curve."""
    q = ODO.zero(a.domain)
    r = odo_reduce_mod_curve(a, curve)
    b = odo_reduce_mod_curve(b, curve)
    lc_inv = b.leading_coeff().inverse()
    while r.coeffs and r.order >= b.order:
        k = r.order - b.order
        t = ODO(a.domain, [a.domain.zero()] * k
                + [reduce_mod_curve(r.leading_coeff() * lc_inv, curve)])
        q = q + t
        r = odo_reduce_mod_curve(r - t * b, curve)
    return q, r


def gcrd_on_curve(a, b, lambda_symbol="lambda", mu_symbol="mu"):
    """Monic GCRD of (A - lambda, B - mu) over the spectral curve field.

    Returns the reduced monic operator and the curve.  Use
    :func:`analyze_commuting_pair` for the resultant and the gap index too.
    """
    analysis = analyze_commuting_pair(a, b, lambda_symbol, mu_symbol)
    return analysis.gcrd, analysis.pair.curve


def analyze_commuting_pair(a, b, lambda_symbol="lambda", mu_symbol="mu"):
    h = bc_resultant(a, b, lambda_symbol, mu_symbol)
    curve = make_curve(h, lambda_symbol, mu_symbol)
    pair = CommutingPair(a, b, h, curve)
    sa = shift_by_parameter(a, lambda_symbol)
    sb = shift_by_parameter(b, mu_symbol)
    for i in range(min(sa.order, sb.order)):
        reduced = odo_reduce_mod_curve(subresultant(sa, sb, i).operator, curve)
        if not reduced.is_zero:
            return SpectralAnalysis(pair, i, _monic_mod_curve(reduced, curve))
    # every subresultant vanishes on the curve, so the lower-order shifted
    # operator right-divides the other there and is itself the GCRD
    low = sa if sa.order <= sb.order else sb
    gcrd = _monic_mod_curve(odo_reduce_mod_curve(low, curve), curve)
    return SpectralAnalysis(pair, gcrd.order, gcrd)


def _monic_mod_curve(op, curve):
    lc_inv = op.leading_coeff().inverse()
    return ODO(op.domain,
               [reduce_mod_curve(lc_inv * c, curve) for c in op.coeffs])


def substitute_parametrization(op, assignments):
    """Coefficientwise substitution of constant parameters by constants.

    Every key must be a registered constant parameter and every value a
    constant element (derivation zero); a non-constant value is exactly the
    case a rational-coefficient GCRD cannot absorb, and is rejected.
    """
    dom = op.domain
    table = dom.table
    by_index = {}
    for name, value in assignments.items():
        if not dom.is_constant_symbol(name):
            raise UnknownParameter("%r is not a constant parameter of %s" % (name, dom))
        if not isinstance(value, DomainElement) or value.domain is not dom:
            value = DomainElement(dom, MultiPoly.const(table, value))
        if not value.derive().is_zero:
            raise NonConstantValue("substitution value for %r is not constant" % name)
        by_index[table.index_of(name)] = value
    out = []
    for c in op.coeffs:
        num = _subs_poly(c.num, by_index, dom)
        den = _subs_poly(c.den, by_index, dom)
        if den.is_zero:
            raise DivisionByZero("substitution sends a denominator to zero")
        out.append(num * den.inverse())
    return ODO(dom, out)


def _subs_poly(p, by_index, dom):
    acc = dom.zero()
    for exps, coeff in p.terms.items():
        rest = list(exps)
        factor = DomainElement(dom, MultiPoly.const(p.table, coeff))
        for idx, value in by_index.items():
            e = exps[idx] if idx < len(exps) else 0
            if e:
                rest[idx] = 0
                factor = factor * value ** e
        mono = MultiPoly.from_items(p.table, [(tuple(rest), Fraction(1))])
        acc = acc + factor * DomainElement(dom, mono)
    return acc


# ---------------------------------------------------------------------------
# worked families

def euler_domain(extra_params=()):
    """Q(x) with the spectral parameters and a curve parameter s."""
    return rational_function_domain("x", ("lambda", "mu", "s", *extra_params))


def euler_operator(n, m, domain=None):
    """x^(-n) * d * (d - m) * (d - 2m) ... (d - (n-1)m) with d = x*D.

    The product is taken left to right; all factors are polynomials in the
    scaled derivation d, so any two of these operators commute.
    """
    if n < 1 or m < 1:
        raise ValueError("Euler operator needs positive orders")
    if domain is None:
        domain = euler_domain()
    x = domain.main()
    dx = ODO.d(domain)
    delta = ODO.scalar(domain, x) * dx
    op = ODO.scalar(domain, x ** (1 - n)) * dx
    for i in range(1, n):
        op = op * (delta - domain.rational(i * m))
    return op


def euler_pair(n=4, m=6, domain=None):
    """The commuting pair (EulerOp(n, m), EulerOp(m, n)) over one domain."""
    if domain is None:
        domain = euler_domain()
    return euler_operator(n, m, domain), euler_operator(m, n, domain)


def lame_domain(extra_params=()):
    return weierstrass_domain("x", ("lambda", "mu", *extra_params))


def lame_pair(domain=None):
    """A = D^2 - 2*wp and B = -D^3 + 3*wp*D + (3/2)*wpp; they commute."""
    if domain is None:
        domain = lame_domain()
    wp = domain.symbol("wp")
    wpp = domain.symbol("wpp")
    d = ODO.d(domain)
    a = d * d - ODO.scalar(domain, 2 * wp)
    b = -(d * d * d) + ODO.scalar(domain, 3 * wp) * d \
        + ODO.scalar(domain, Fraction(3, 2) * wpp)
    return a, b


def verify_bc_identity(pair):
    """Evaluate f(A, B) by operator substitution and test for zero.

    The pair commutes, so the monomial evaluation order is irrelevant;
    powers of A and B are cached and combined left to right.
    """
    a, b = pair.a, pair.b
    if not commutator(a, b).is_zero:
        raise NotCommuting("operators do not commute")
    f = pair.curve.f
    li, mi = pair.curve.variable_indices()
    dom = a.domain
    pow_a = {0: ODO.scalar(dom, 1)}
    pow_b = {0: ODO.scalar(dom, 1)}

    def power(cache, base, k):
        while k not in cache:
            top = max(cache)
            cache[top + 1] = cache[top] * base
        return cache[k]

    total = ODO.zero(dom)
    for exps, coeff in f.terms.items():
        i = exps[li] if li < len(exps) else 0
        j = exps[mi] if mi < len(exps) else 0
        rest = list(exps)
        if li < len(rest):
            rest[li] = 0
        if mi < len(rest):
            rest[mi] = 0
        scalar = DomainElement(dom, MultiPoly.from_items(f.table, [(tuple(rest), coeff)]))
        term = ODO.scalar(dom, scalar) * power(pow_a, a, i) * power(pow_b, b, j)
        total = total + term
    return total.is_zero

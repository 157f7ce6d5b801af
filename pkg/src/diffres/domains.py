"""Exact differential coefficient domains.

Three domain kinds sit behind one interface:

* ``rational_functions`` -- rational functions in the main variable over Q,
  with optional constant parameters (derivation zero).
* ``diff_polynomials`` -- a differential polynomial ring Q{a, b, ...} whose
  indeterminates carry jet variables a^[1], a^[2], ... created on demand by
  the derivation.
* ``weierstrass`` -- the quadratic extension Q(g2, g3)(wp, wpp) with
  wpp^2 = 4*wp^3 - g2*wp - g3, wp' = wpp, wpp' = 6*wp^2 - g2/2.

Elements are reduced fractions of multivariate polynomials with exact
rational coefficients.  All values are immutable after construction, and
every operation is a pure function; the only mutation point is generator
registration inside :class:`GeneratorTable`, which is lock protected.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd as int_gcd, lcm as int_lcm

from .errors import DivisionByZero, DomainMismatch, UnknownParameter

RATIONAL_FUNCTIONS = "rational_functions"
DIFF_POLYNOMIALS = "diff_polynomials"
WEIERSTRASS = "weierstrass"

# generator kinds
KIND_MAIN = "main"
KIND_CONSTANT = "constant"
KIND_INDET = "indet"
KIND_WP = "wp"
KIND_WPP = "wpp"


# ---------------------------------------------------------------------------
# exponent vectors
#
# A monomial is a tuple of exponents indexed by generator, with trailing
# zeros stripped so that registering a new generator never invalidates an
# existing polynomial.

def _strip(exps):
    n = len(exps)
    while n and exps[n - 1] == 0:
        n -= 1
    return tuple(exps[:n])


def _exp_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    lb = len(b)
    return tuple(a[i] + b[i] if i < lb else a[i] for i in range(len(a)))


def _exp_sub(a, b):
    """a - b componentwise, or None when b does not divide a."""
    la, lb = len(a), len(b)
    if lb > la:
        return None
    out = list(a)
    for i in range(lb):
        out[i] -= b[i]
        if out[i] < 0:
            return None
    return _strip(out)


def grlex_key(exps):
    """Sort key for the fixed graded-lexicographic monomial order."""
    return (sum(exps), exps)


class GeneratorTable:
    """Ordered registry of the named generators of one domain.

    Append only; indices are stable.  Jet generators are registered lazily
    by the derivation, under a lock so concurrent readers stay safe.
    """

    def __init__(self):
        self.names = []
        self._index = {}
        self._kinds = []
        self._jet_info = []     # (root_name, jet_order) for indets, else None
        self._deriv = []        # cached derivative polynomial per generator
        self._lock = threading.Lock()

    def __len__(self):
        return len(self.names)

    def register(self, name, kind, jet_info=None):
        with self._lock:
            if name in self._index:
                raise ValueError("generator %r already registered" % name)
            idx = len(self.names)
            self.names.append(name)
            self._index[name] = idx
            self._kinds.append(kind)
            self._jet_info.append(jet_info)
            self._deriv.append(None)
            return idx

    def index_of(self, name):
        return self._index.get(name)

    def kind_of(self, idx):
        return self._kinds[idx]

    def kind_index(self, kind):
        """Index of the unique generator of the given kind, or None."""
        for i, k in enumerate(self._kinds):
            if k == kind:
                return i
        return None

    def jet_index(self, idx):
        """Index of the jet one derivation above generator ``idx``."""
        root, order = self._jet_info[idx]
        name = "%s^[%d]" % (root, order + 1)
        with self._lock:
            nxt = self._index.get(name)
            if nxt is None:
                nxt = len(self.names)
                self.names.append(name)
                self._index[name] = nxt
                self._kinds.append(KIND_INDET)
                self._jet_info.append((root, order + 1))
                self._deriv.append(None)
        return nxt

    def deriv_poly(self, idx):
        """Derivative of generator ``idx`` as a polynomial over this table."""
        cached = self._deriv[idx]
        if cached is not None:
            return cached
        kind = self._kinds[idx]
        if kind == KIND_MAIN:
            d = MultiPoly.const(self, 1)
        elif kind == KIND_CONSTANT:
            d = MultiPoly.zero(self)
        elif kind == KIND_INDET:
            d = MultiPoly.gen(self, self.jet_index(idx))
        elif kind == KIND_WP:
            d = MultiPoly.gen(self, self.kind_index(KIND_WPP))
        elif kind == KIND_WPP:
            wp = self.kind_index(KIND_WP)
            g2 = self._index["g2"]
            d = MultiPoly.gen(self, wp, 2).scale(6) - MultiPoly.gen(self, g2).scale(Fraction(1, 2))
        else:  # pragma: no cover
            raise AssertionError(kind)
        self._deriv[idx] = d
        return d


class MultiPoly:
    """Multivariate polynomial with exact rational coefficients.

    ``terms`` maps stripped exponent tuples to nonzero :class:`Fraction`
    values; the zero polynomial has an empty map.  Instances are immutable.
    """

    __slots__ = ("table", "terms")

    def __init__(self, table, terms):
        self.table = table
        self.terms = terms

    # -- constructors --

    @classmethod
    def from_items(cls, table, items):
        acc = {}
        for exps, c in items:
            exps = _strip(exps)
            c = acc.get(exps, _ZERO) + c
            if c:
                acc[exps] = c
            elif exps in acc:
                del acc[exps]
        return cls(table, acc)

    @classmethod
    def zero(cls, table):
        return cls(table, {})

    @classmethod
    def const(cls, table, value):
        value = Fraction(value)
        return cls(table, {(): value} if value else {})

    @classmethod
    def gen(cls, table, idx, power=1):
        exps = (0,) * idx + (power,)
        return cls(table, {exps: _ONE})

    # -- predicates and views --

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_one(self):
        return self.terms == {(): _ONE}

    @property
    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        return self.terms.get((), _ZERO)

    def max_gen(self):
        """Largest generator index occurring, or None for constants."""
        best = None
        for exps in self.terms:
            if exps:
                i = len(exps) - 1
                if best is None or i > best:
                    best = i
        return best

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, idx):
        d = 0
        for exps in self.terms:
            if idx < len(exps) and exps[idx] > d:
                d = exps[idx]
        return d

    def leading_exp(self):
        return max(self.terms, key=grlex_key)

    def leading_coeff(self):
        if not self.terms:
            return _ZERO
        return self.terms[self.leading_exp()]

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def coeff_in(self, idx, k):
        """Coefficient of gen(idx)^k, a polynomial free of that generator."""
        acc = {}
        for exps, c in self.terms.items():
            e = exps[idx] if idx < len(exps) else 0
            if e == k:
                out = list(exps)
                if idx < len(out):
                    out[idx] = 0
                acc[_strip(out)] = c
        return MultiPoly(self.table, acc)

    def as_univar(self, idx):
        """View as a polynomial in generator ``idx``: degree -> coefficient."""
        parts = {}
        for exps, c in self.terms.items():
            e = exps[idx] if idx < len(exps) else 0
            out = list(exps)
            if idx < len(out):
                out[idx] = 0
            key = _strip(out)
            bucket = parts.setdefault(e, {})
            bucket[key] = bucket.get(key, _ZERO) + c
        return {
            e: MultiPoly(self.table, {k: v for k, v in bucket.items() if v})
            for e, bucket in parts.items()
        }

    # -- ring operations --

    def _check(self, other):
        if self.table is not other.table:
            raise DomainMismatch("polynomials over different generator tables")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.table, other)
        elif not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for exps, c in other.terms.items():
            s = acc.get(exps, _ZERO) + c
            if s:
                acc[exps] = s
            elif exps in acc:
                del acc[exps]
        return MultiPoly(self.table, acc)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.table, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.table, other)
        elif not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        if not self.terms or not other.terms:
            return MultiPoly(self.table, {})
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        acc = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = _exp_add(ea, eb)
                s = acc.get(e, _ZERO) + ca * cb
                if s:
                    acc[e] = s
                elif e in acc:
                    del acc[e]
        return MultiPoly(self.table, acc)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.const(self.table, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return MultiPoly(self.table, {})
        return MultiPoly(self.table, {e: v * c for e, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.table, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.table is other.table and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        from .rendering import poly_text
        return poly_text(self)

    # -- calculus --

    def derive(self):
        """Apply the domain derivation (Leibniz over every term)."""
        acc = MultiPoly(self.table, {})
        for exps, c in self.terms.items():
            for pos in range(len(exps)):
                k = exps[pos]
                if not k:
                    continue
                d = self.table.deriv_poly(pos)
                if d.is_zero:
                    continue
                out = list(exps)
                out[pos] = k - 1
                acc = acc + MultiPoly(self.table, {_strip(out): c * k}) * d
        return acc

    def partial(self, idx):
        """Ordinary partial derivative with respect to one generator."""
        acc = {}
        for exps, c in self.terms.items():
            k = exps[idx] if idx < len(exps) else 0
            if not k:
                continue
            out = list(exps)
            out[idx] = k - 1
            acc[_strip(out)] = c * k
        return MultiPoly(self.table, acc)

    # -- content and normalization --

    def rational_content(self):
        """Positive rational c with self/c integer-coefficient, content 1."""
        num = 0
        den = 1
        for c in self.terms.values():
            num = int_gcd(num, c.numerator)
            den = int_lcm(den, c.denominator)
        if num == 0:
            return _ONE
        return Fraction(num, den)

    def normalized(self):
        """Divide by rational content and sign so the leading coeff is positive."""
        if not self.terms:
            return self
        c = self.rational_content()
        if self.leading_coeff() < 0:
            c = -c
        return self.scale(1 / c)


_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# polynomial division and gcd

def exact_div(f, g):
    """Exact quotient f/g in the polynomial ring; raises if not divisible."""
    if g.is_zero:
        raise DivisionByZero("polynomial division by zero")
    if g.is_one:
        return f
    if g.is_constant:
        return f.scale(1 / g.constant_value())
    table = f.table
    rem = dict(f.terms)
    out = {}
    glead = g.leading_exp()
    gc = g.terms[glead]
    while rem:
        rlead = max(rem, key=grlex_key)
        q = _exp_sub(rlead, glead)
        if q is None:
            raise ArithmeticError("polynomial division is not exact")
        c = rem[rlead] / gc
        out[q] = c
        for e, v in g.terms.items():
            t = _exp_add(q, e)
            s = rem.get(t, _ZERO) - c * v
            if s:
                rem[t] = s
            elif t in rem:
                del rem[t]
    return MultiPoly(table, out)


def _prem(f, g, v):
    """Pseudo-remainder of f by g with respect to generator ``v``."""
    dg = g.degree_in(v)
    lc_g = g.coeff_in(v, dg)
    r = f
    while not r.is_zero:
        dr = r.degree_in(v)
        if dr < dg:
            break
        lt = r.coeff_in(v, dr)
        shift = MultiPoly.gen(f.table, v, dr - dg) if dr > dg else MultiPoly.const(f.table, 1)
        r = lc_g * r - lt * shift * g
    return r


def _content_list(polys):
    g = None
    for p in polys:
        g = p if g is None else poly_gcd(g, p)
        if g.is_one:
            return g
    return g


def poly_gcd(f, g):
    """GCD in the polynomial ring, by primitive remainder sequences.

    The result is normalized: rational content 1 and positive leading
    coefficient under the graded-lex order.  The gcd of two constants is 1.
    """
    if f.is_zero:
        return g.normalized()
    if g.is_zero:
        return f.normalized()
    if f.is_constant or g.is_constant:
        return MultiPoly.const(f.table, 1)
    mono = _monomial_gcd(f, g)
    if mono is not None:
        return mono
    vf, vg = f.max_gen(), g.max_gen()
    v = max(vf, vg)
    fu, gu = f.as_univar(v), g.as_univar(v)
    cf = _content_list(fu.values())
    cg = _content_list(gu.values())
    c = poly_gcd(cf, cg)
    pf = exact_div(f, cf)
    pg = exact_div(g, cg)
    if pf.degree_in(v) < pg.degree_in(v):
        pf, pg = pg, pf
    while True:
        r = _prem(pf, pg, v)
        if r.is_zero:
            gg = pg
            break
        if r.degree_in(v) == 0:
            gg = MultiPoly.const(f.table, 1)
            break
        r = exact_div(r, _content_list(r.as_univar(v).values()))
        pf, pg = pg, r
    if gg.is_constant:
        return c.normalized()
    gg = exact_div(gg, _content_list(gg.as_univar(v).values()))
    return (c * gg).normalized()


def _monomial_gcd(f, g):
    """Fast path when either argument is a single term."""
    single = None
    if len(f.terms) == 1:
        single, other = f, g
    elif len(g.terms) == 1:
        single, other = g, f
    if single is None:
        return None
    (se,) = single.terms
    common = list(se)
    for exps in other.terms:
        for i in range(len(common)):
            e = exps[i] if i < len(exps) else 0
            if e < common[i]:
                common[i] = e
        if not any(common):
            break
    return MultiPoly(f.table, {_strip(common): _ONE})


def poly_lcm(f, g):
    if f.is_zero or g.is_zero:
        return MultiPoly.zero(f.table)
    return exact_div(f * g, poly_gcd(f, g)).normalized()


def reduce_weierstrass(p):
    """Rewrite wpp^k (k >= 2) via wpp^2 = 4*wp^3 - g2*wp - g3.

    The result has degree at most 1 in wpp and is the canonical
    representative of ``p`` in the quadratic extension.
    """
    table = p.table
    wpp = table.kind_index(KIND_WPP)
    if wpp is None or p.degree_in(wpp) < 2:
        return p
    wp = table.kind_index(KIND_WP)
    g2 = table.index_of("g2")
    g3 = table.index_of("g3")
    rel = (MultiPoly.gen(table, wp, 3).scale(4)
           - MultiPoly.gen(table, g2) * MultiPoly.gen(table, wp)
           - MultiPoly.gen(table, g3))
    while p.degree_in(wpp) >= 2:
        low = {}
        high = {}
        for exps, c in p.terms.items():
            e = exps[wpp] if wpp < len(exps) else 0
            if e >= 2:
                out = list(exps) + [0] * (wpp + 1 - len(exps))
                out[wpp] = e - 2
                high[_strip(out)] = c
            else:
                low[exps] = c
        p = MultiPoly(table, low) + MultiPoly(table, high) * rel
    return p


# ---------------------------------------------------------------------------
# domain descriptors

class DomainDescriptor:
    """One differential coefficient domain: kind, generators, derivation.

    Use the module-level factory functions to build one.  The descriptor is
    shared by every element of the domain; generator registration (jets) is
    the only mutation and is synchronized inside the table.
    """

    def __init__(self, kind, main_variable, constant_parameters=(),
                 differential_indeterminates=()):
        names = [main_variable, *constant_parameters, *differential_indeterminates]
        if kind == WEIERSTRASS:
            names += ["wp", "wpp", "g2", "g3"]
        if len(set(names)) != len(names):
            raise ValueError("domain symbol names must be pairwise distinct")
        self.kind = kind
        self.main_variable = main_variable
        self.constant_parameters = tuple(constant_parameters)
        self.differential_indeterminates = tuple(differential_indeterminates)
        self.table = GeneratorTable()
        self.table.register(main_variable, KIND_MAIN)
        for name in constant_parameters:
            self.table.register(name, KIND_CONSTANT)
        for name in differential_indeterminates:
            self.table.register(name, KIND_INDET, jet_info=(name, 0))
        self.relation = None
        if kind == WEIERSTRASS:
            t = self.table
            t.register("wp", KIND_WP)
            t.register("wpp", KIND_WPP)
            t.register("g2", KIND_CONSTANT)
            t.register("g3", KIND_CONSTANT)
            self.relation = (MultiPoly.gen(t, t.index_of("wp"), 3).scale(4)
                             - MultiPoly.gen(t, t.index_of("g2")) * MultiPoly.gen(t, t.index_of("wp"))
                             - MultiPoly.gen(t, t.index_of("g3")))

    # -- element constructors --

    def zero(self):
        return DomainElement(self, MultiPoly.zero(self.table))

    def one(self):
        return DomainElement(self, MultiPoly.const(self.table, 1))

    def rational(self, p, q=1):
        return DomainElement(self, MultiPoly.const(self.table, Fraction(p, q)))

    def symbol(self, name):
        idx = self.table.index_of(name)
        if idx is None:
            raise UnknownParameter("unknown symbol %r in domain %s" % (name, self))
        return DomainElement(self, MultiPoly.gen(self.table, idx))

    def main(self):
        return self.symbol(self.main_variable)

    def jet(self, name, order):
        """The jet variable ``name^[order]`` of a differential indeterminate."""
        if name not in self.differential_indeterminates:
            raise UnknownParameter("%r is not a differential indeterminate" % name)
        idx = self.table.index_of(name)
        for _ in range(order):
            idx = self.table.jet_index(idx)
        return DomainElement(self, MultiPoly.gen(self.table, idx))

    def ensure_parameter(self, name):
        """Register an extra constant parameter; no-op when present."""
        if self.table.index_of(name) is None:
            self.table.register(name, KIND_CONSTANT)
            self.constant_parameters = self.constant_parameters + (name,)
        return self.symbol(name)

    def is_constant_symbol(self, name):
        idx = self.table.index_of(name)
        return idx is not None and self.table.kind_of(idx) == KIND_CONSTANT

    def element(self, num, den=None):
        return DomainElement(self, num, den)

    def __str__(self):
        kind_names = {RATIONAL_FUNCTIONS: "ratfunc", DIFF_POLYNOMIALS: "diffpoly",
                      WEIERSTRASS: "weierstrass"}
        parts = [self.main_variable]
        extras = []
        if self.constant_parameters:
            extras.append("params=" + ",".join(self.constant_parameters))
        if self.differential_indeterminates:
            extras.append("inds=" + ",".join(self.differential_indeterminates))
        body = parts[0] + ("; " + ", ".join(extras) if extras else "")
        return "%s(%s)" % (kind_names[self.kind], body)

    __repr__ = __str__


def rational_function_domain(main="x", params=()):
    return DomainDescriptor(RATIONAL_FUNCTIONS, main, params)


def diff_polynomial_domain(main="x", indeterminates=(), params=()):
    return DomainDescriptor(DIFF_POLYNOMIALS, main, params, indeterminates)


def weierstrass_domain(main="x", params=()):
    return DomainDescriptor(WEIERSTRASS, main, params)


# ---------------------------------------------------------------------------
# domain elements

class DomainElement:
    """A reduced fraction of polynomials over one domain.

    Canonical form: numerator and denominator coprime, denominator with
    rational content 1 and positive leading coefficient (so a constant
    denominator is literally 1); for the weierstrass kind both parts are
    kept at degree <= 1 in wpp.  Zero testing is structural on this form.
    """

    __slots__ = ("domain", "num", "den")

    def __init__(self, domain, num, den=None):
        if den is None:
            den = MultiPoly.const(domain.table, 1)
        if domain.kind == WEIERSTRASS:
            num = reduce_weierstrass(num)
            den = reduce_weierstrass(den)
        if den.is_zero:
            raise DivisionByZero("zero denominator")
        if num.is_zero:
            self.domain = domain
            self.num = num
            self.den = MultiPoly.const(domain.table, 1)
            return
        if not den.is_one:
            g = poly_gcd(num, den)
            if not g.is_constant:
                num = exact_div(num, g)
                den = exact_div(den, g)
            c = den.rational_content()
            if den.leading_coeff() < 0:
                c = -c
            if c != 1:
                num = num.scale(1 / c)
                den = den.scale(1 / c)
        self.domain = domain
        self.num = num
        self.den = den

    # -- predicates --

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_one(self):
        return self.num.is_one and self.den.is_one

    def is_constant(self):
        """True when the derivation sends this element to zero."""
        return self.derive().is_zero

    def __bool__(self):
        return not self.num.is_zero

    # -- arithmetic --

    def _coerce(self, other):
        if isinstance(other, DomainElement):
            if other.domain is not self.domain:
                raise DomainMismatch("elements of different domains")
            return other
        if isinstance(other, (int, Fraction)):
            return DomainElement(self.domain, MultiPoly.const(self.domain.table, other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return DomainElement(self.domain, self.num + other.num, self.den)
        return DomainElement(self.domain,
                             self.num * other.den + other.num * self.den,
                             self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return DomainElement(self.domain, -self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return DomainElement(self.domain, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero:
            raise DivisionByZero("inverse of zero")
        return DomainElement(self.domain, self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return DomainElement(self.domain, self.num ** k, self.den ** k)

    def __eq__(self, other):
        if isinstance(other, DomainElement) and other.domain is not self.domain:
            return False
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.domain.kind == WEIERSTRASS:
            cross = self.num * other.den - other.num * self.den
            return reduce_weierstrass(cross).is_zero
        return self.num == other.num and self.den == other.den

    __hash__ = None

    # -- calculus --

    def derive(self):
        """Quotient rule over the domain derivation."""
        dn = self.num.derive()
        if self.den.is_one:
            return DomainElement(self.domain, dn)
        dd = self.den.derive()
        return DomainElement(self.domain,
                             dn * self.den - self.num * dd,
                             self.den * self.den)

    def __repr__(self):
        from .rendering import element_text
        return element_text(self)


def add(a, b):
    """Canonical-form sum of two elements of one domain."""
    if not isinstance(b, DomainElement) or a.domain is not b.domain:
        raise DomainMismatch("elements of different domains")
    return a + b


def mul(a, b):
    """Canonical-form product of two elements of one domain."""
    if not isinstance(b, DomainElement) or a.domain is not b.domain:
        raise DomainMismatch("elements of different domains")
    return a * b


def inverse(a):
    return a.inverse()


def derive(a):
    return a.derive()


def is_zero(a):
    return a.is_zero

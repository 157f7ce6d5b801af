"""Expression parser for operators, plus the CLI domain declaration syntax.

Grammar (whitespace insignificant):

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := base ("^" "[" INT "]")? ("^" INT)?
    base   := INT | IDENT | "(" expr ")" | "-" factor

Multiplication is the non-commutative operator product; division means
multiplication by the inverse and requires an order-0 divisor, which also
covers exact rational literals written p/q.  ``D<var>`` (for the domain's
main variable) denotes the derivation; ``name^[k]`` denotes the k-th jet
of a differential indeterminate.
"""

from __future__ import annotations

import re

from .errors import DivisionByZero, ExprSyntaxError, UnknownSymbol
from .operators import ODO

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^\[)|([()+\-*/^\[\]]))")


class _Tokens:
    def __init__(self, src):
        self.src = src
        self.items = []
        pos = 0
        while pos < len(src):
            m = _TOKEN.match(src, pos)
            if not m or m.end() == m.start():
                # skip leading whitespace handled by the regex; anything
                # unmatched here is a real lexical error
                rest = src[pos:].lstrip()
                if not rest:
                    break
                col = len(src) - len(rest)
                raise ExprSyntaxError("unexpected character %r" % rest[0], column=col)
            if m.group(1) is not None:
                self.items.append(("int", int(m.group(1)), m.start(1)))
            elif m.group(2) is not None:
                self.items.append(("ident", m.group(2), m.start(2)))
            elif m.group(3) is not None:
                self.items.append(("^[", "^[", m.start(3)))
            else:
                self.items.append((m.group(4), m.group(4), m.start(4)))
            pos = m.end()
        self.items.append(("end", None, len(src)))
        self.i = 0

    def peek(self, k=0):
        j = min(self.i + k, len(self.items) - 1)
        return self.items[j]

    def next(self):
        tok = self.items[self.i]
        if tok[0] != "end":
            self.i += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ExprSyntaxError("expected %r, found %r" % (kind, tok[1]), column=tok[2])
        return tok


class OperatorParser:
    """Parses one expression into an ODO over a fixed domain."""

    def __init__(self, domain):
        self.domain = domain
        self.dname = "D" + domain.main_variable

    def parse(self, src):
        toks = _Tokens(src)
        value = self._expr(toks)
        tok = toks.peek()
        if tok[0] != "end":
            raise ExprSyntaxError("unexpected trailing input %r" % tok[1], column=tok[2])
        return value

    def _expr(self, toks):
        value = self._term(toks)
        while toks.peek()[0] in ("+", "-"):
            op = toks.next()[0]
            rhs = self._term(toks)
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self, toks):
        value = self._factor(toks)
        while toks.peek()[0] in ("*", "/"):
            op, _, col = toks.next()
            rhs = self._factor(toks)
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero:
                    raise DivisionByZero("division by zero")
                if rhs.order != 0:
                    raise ExprSyntaxError(
                        "division needs an order-0 divisor", column=col)
                value = value * ODO.scalar(self.domain, rhs.coeffs[0].inverse())
        return value

    def _factor(self, toks):
        if toks.peek()[0] == "ident" and toks.peek(1)[0] == "^[":
            name, col = toks.next()[1], toks.peek()[2]
            toks.next()  # ^[
            k = toks.expect("int")[1]
            toks.expect("]")
            if name not in self.domain.differential_indeterminates:
                raise UnknownSymbol("%r has no jet variables" % name)
            base = ODO.scalar(self.domain, self.domain.jet(name, k))
        else:
            base = self._base(toks)
        if toks.peek()[0] == "^":
            toks.next()
            tok = toks.expect("int")
            base = base ** tok[1]
        return base

    def _base(self, toks):
        kind, value, col = toks.next()
        if kind == "int":
            return ODO.scalar(self.domain, value)
        if kind == "-":
            return -self._factor(toks)
        if kind == "(":
            inner = self._expr(toks)
            toks.expect(")")
            return inner
        if kind == "ident":
            if value == self.dname:
                return ODO.d(self.domain)
            idx = self.domain.table.index_of(value)
            if idx is None:
                raise UnknownSymbol("unknown symbol %r in domain %s"
                                    % (value, self.domain))
            return ODO.scalar(self.domain, self.domain.symbol(value))
        raise ExprSyntaxError("unexpected token %r" % (value,), column=col)


def parse_operator(src, domain):
    """Parse ``src`` into an operator over ``domain``."""
    return OperatorParser(domain).parse(src)


# ---------------------------------------------------------------------------
# domain declarations:  kind(main; params=a,b, inds=c0..c3)

_RANGE = re.compile(r"([A-Za-z_]+)(\d+)\.\.(?:[A-Za-z_]+)?(\d+)$")


def _expand_names(spec):
    out = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        m = _RANGE.match(part)
        if m:
            stem, lo, hi = m.group(1), int(m.group(2)), int(m.group(3))
            out.extend("%s%d" % (stem, i) for i in range(lo, hi + 1))
        else:
            out.append(part)
    return out


def parse_domain_spec(spec):
    """Build a domain from a declaration like ``ratfunc(x; params=lambda,mu)``."""
    from .domains import (diff_polynomial_domain, rational_function_domain,
                          weierstrass_domain)
    m = re.fullmatch(r"\s*(\w+)\s*\(([^)]*)\)\s*", spec)
    if not m:
        raise ExprSyntaxError("bad domain declaration %r" % spec)
    kind, body = m.group(1), m.group(2)
    pieces = body.split(";")
    main = pieces[0].strip() or "x"
    params = []
    inds = []
    for clause in pieces[1:]:
        for item in re.split(r",(?=\s*\w+\s*=)", clause):
            item = item.strip()
            if not item:
                continue
            if "=" not in item:
                raise ExprSyntaxError("bad domain clause %r" % item)
            key, _, val = item.partition("=")
            names = _expand_names(val)
            if key.strip() == "params":
                params.extend(names)
            elif key.strip() == "inds":
                inds.extend(names)
            else:
                raise ExprSyntaxError("unknown domain clause %r" % key.strip())
    if kind == "ratfunc":
        if inds:
            raise ExprSyntaxError("ratfunc domains have no indeterminates")
        return rational_function_domain(main, tuple(params))
    if kind == "diffpoly":
        return diff_polynomial_domain(main, tuple(inds), tuple(params))
    if kind == "weierstrass":
        if inds:
            raise ExprSyntaxError("weierstrass domains have no indeterminates")
        return weierstrass_domain(main, tuple(params))
    raise ExprSyntaxError("unknown domain kind %r" % kind)

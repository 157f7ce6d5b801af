"""Canonical text, LaTeX and JSON renderers.

The text form is the package's canonical syntax: it is deterministic
(terms in descending graded-lex order) and always re-parses to the same
value, which the round-trip tests rely on.
"""

from __future__ import annotations

import json
import re

from .domains import MultiPoly


# ---------------------------------------------------------------------------
# text

def _coeff_str(c):
    return str(c)  # Fraction prints p/q, integers plainly


def _term_text(exps, coeff, names):
    factors = []
    for i, e in enumerate(exps):
        if e == 1:
            factors.append(names[i])
        elif e > 1:
            factors.append("%s^%d" % (names[i], e))
    if not factors:
        return _coeff_str(coeff)
    body = "*".join(factors)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return "%s*%s" % (_coeff_str(coeff), body)


def _join_terms(parts):
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


def poly_text(p):
    if p.is_zero:
        return "0"
    names = p.table.names
    return _join_terms([_term_text(e, c, names) for e, c in p.sorted_terms()])


def _is_single_term(p):
    return len(p.terms) == 1


def _den_is_atom(p):
    """True when the denominator may appear after '/' without parentheses."""
    if len(p.terms) != 1:
        return False
    ((exps, c),) = p.terms.items()
    return c == 1 and sum(1 for e in exps if e) == 1


def element_text(e):
    if e.den.is_one:
        return poly_text(e.num)
    num = poly_text(e.num)
    if not _is_single_term(e.num):
        num = "(%s)" % num
    den = poly_text(e.den)
    if not _den_is_atom(e.den):
        den = "(%s)" % den
    return "%s/%s" % (num, den)


def _coefficient_factor(e):
    """Coefficient rendered so that '<this>*Dx^k' re-parses correctly."""
    text = element_text(e)
    if e.den.is_one and not _is_single_term(e.num):
        return "(%s)" % text
    return text


def odo_text(op):
    if op.is_zero:
        return "0"
    dname = "D" + op.domain.main_variable
    parts = []
    for i in range(len(op.coeffs) - 1, -1, -1):
        c = op.coeffs[i]
        if c.is_zero:
            continue
        dpart = "" if i == 0 else (dname if i == 1 else "%s^%d" % (dname, i))
        if not dpart:
            parts.append(element_text(c))
        elif c.is_one:
            parts.append(dpart)
        elif (-c).is_one:
            parts.append("-" + dpart)
        else:
            parts.append("%s*%s" % (_coefficient_factor(c), dpart))
    return _join_terms(parts)


def matrix_text(m):
    cells = [[element_text(e) for e in row] for row in m.entries]
    if not cells:
        return "[]"
    widths = [max(len(cells[r][c]) for r in range(m.rows)) for c in range(m.cols)]
    lines = []
    for row in cells:
        padded = [s.ljust(w) for s, w in zip(row, widths)]
        lines.append("[ " + "  ".join(padded).rstrip() + " ]")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# LaTeX

_GREEK = {"lambda": r"\lambda", "mu": r"\mu", "wp": r"\wp", "wpp": r"\wp'"}


def _latex_name(name):
    jet = re.fullmatch(r"(.+)\^\[(\d+)\]", name)
    suffix = ""
    if jet:
        name, k = jet.group(1), jet.group(2)
        suffix = "^{[%s]}" % k
    if name in _GREEK:
        return _GREEK[name] + suffix
    m = re.fullmatch(r"([A-Za-z]+)(\d+)", name)
    if m:
        return "%s_{%s}%s" % (m.group(1), m.group(2), suffix)
    return name + suffix


def _coeff_latex(c):
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return r"%s\frac{%d}{%d}" % (sign, abs(c.numerator), c.denominator)


def poly_latex(p):
    if p.is_zero:
        return "0"
    names = p.table.names
    parts = []
    for exps, coeff in p.sorted_terms():
        factors = []
        for i, e in enumerate(exps):
            if e == 1:
                factors.append(_latex_name(names[i]))
            elif e > 1:
                factors.append("%s^{%d}" % (_latex_name(names[i]), e))
        if not factors:
            parts.append(_coeff_latex(coeff))
        elif coeff == 1:
            parts.append(" ".join(factors))
        elif coeff == -1:
            parts.append("-" + " ".join(factors))
        else:
            parts.append(_coeff_latex(coeff) + " " + " ".join(factors))
    return _join_terms_latex(parts)


def _join_terms_latex(parts):
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def element_latex(e):
    if e.den.is_one:
        return poly_latex(e.num)
    return r"\frac{%s}{%s}" % (poly_latex(e.num), poly_latex(e.den))


def odo_latex(op):
    if op.is_zero:
        return "0"
    parts = []
    for i in range(len(op.coeffs) - 1, -1, -1):
        c = op.coeffs[i]
        if c.is_zero:
            continue
        dpart = "" if i == 0 else (r"\partial" if i == 1 else r"\partial^{%d}" % i)
        if not dpart:
            parts.append(element_latex(c))
        elif c.is_one:
            parts.append(dpart)
        elif (-c).is_one:
            parts.append("-" + dpart)
        else:
            body = element_latex(c)
            if c.den.is_one and len(c.num.terms) > 1:
                body = r"\left(%s\right)" % body
            parts.append(body + dpart)
    return _join_terms_latex(parts)


def matrix_latex(m):
    rows = [" & ".join(element_latex(e) for e in row) for row in m.entries]
    return "\\begin{bmatrix}\n%s\n\\end{bmatrix}" % " \\\\\n".join(rows)


# ---------------------------------------------------------------------------
# JSON

def odo_json_obj(op):
    return {
        "order": None if op.is_zero else op.order,
        "coefficients": [element_text(c) for c in op.coeffs],
        "domain": str(op.domain),
    }


def matrix_json_obj(m):
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[element_text(e) for e in row] for row in m.entries],
    }


def to_json(obj):
    return json.dumps(obj, ensure_ascii=False)


# ---------------------------------------------------------------------------
# dispatch used by the CLI

def render(value, fmt="text"):
    """Render an ODO, element, poly or matrix in the requested format."""
    from .matrices import DiffMatrix
    from .operators import ODO
    from .domains import DomainElement

    if fmt == "text":
        if isinstance(value, ODO):
            return odo_text(value)
        if isinstance(value, DomainElement):
            return element_text(value)
        if isinstance(value, MultiPoly):
            return poly_text(value)
        if isinstance(value, DiffMatrix):
            return matrix_text(value)
    elif fmt == "latex":
        if isinstance(value, ODO):
            return odo_latex(value)
        if isinstance(value, DomainElement):
            return element_latex(value)
        if isinstance(value, MultiPoly):
            return poly_latex(value)
        if isinstance(value, DiffMatrix):
            return matrix_latex(value)
    elif fmt == "json":
        if isinstance(value, ODO):
            return to_json(odo_json_obj(value))
        if isinstance(value, DomainElement):
            return to_json(element_text(value))
        if isinstance(value, MultiPoly):
            return to_json(poly_text(value))
        if isinstance(value, DiffMatrix):
            return to_json(matrix_json_obj(value))
    raise ValueError("cannot render %r as %s" % (type(value).__name__, fmt))

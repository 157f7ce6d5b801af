"""Shared fixtures and random-value generators for the test suite."""

from __future__ import annotations

import random

import pytest

from diffres import (ODO, DomainElement, MultiPoly, diff_polynomial_domain,
                     rational_function_domain, weierstrass_domain)


@pytest.fixture
def rng():
    return random.Random(20250810)


def ratfunc_domain():
    return rational_function_domain("x", ("lambda", "mu"))


def diffpoly_domain():
    return diff_polynomial_domain("x", ("a0", "a1", "a2", "b0", "b1", "b2", "b3"))


def wp_domain():
    return weierstrass_domain("x", ("lambda", "mu"))


def random_poly(dom, rng, gens, max_deg=2, max_terms=3):
    """Small random polynomial in the named generators (may be zero)."""
    table = dom.table
    acc = MultiPoly.zero(table)
    for _ in range(rng.randint(1, max_terms)):
        coeff = rng.randint(-4, 4)
        if not coeff:
            continue
        term = MultiPoly.const(table, coeff)
        for name in gens:
            e = rng.randint(0, max_deg)
            if e:
                term = term * MultiPoly.gen(table, table.index_of(name), e)
        acc = acc + term
    return acc


def random_element(dom, rng, with_fraction=True):
    """Random element of any of the three domain kinds."""
    if dom.kind == "diff_polynomials":
        gens = ["x", dom.differential_indeterminates[rng.randrange(
            len(dom.differential_indeterminates))]]
    elif dom.kind == "weierstrass":
        gens = ["wp", "wpp", "g2"]
    else:
        gens = ["x"]
    num = random_poly(dom, rng, gens)
    if not with_fraction or rng.random() < 0.5:
        return DomainElement(dom, num)
    den = MultiPoly.zero(dom.table)
    while den.is_zero:
        den = random_poly(dom, rng, gens[:1], max_deg=2, max_terms=2)
    return DomainElement(dom, num, den)


def nonzero_element(dom, rng, **kw):
    e = random_element(dom, rng, **kw)
    while e.is_zero:
        e = random_element(dom, rng, **kw)
    return e


def random_odo(dom, rng, order, poly_coeffs=True):
    """Random operator of exactly the given order with small coefficients."""
    coeffs = []
    for i in range(order + 1):
        if poly_coeffs:
            c = DomainElement(dom, random_poly(dom, rng, ["x"], max_deg=1, max_terms=2))
        else:
            c = random_element(dom, rng)
        coeffs.append(c)
    while coeffs[-1].is_zero:
        coeffs[-1] = DomainElement(
            dom, random_poly(dom, rng, ["x"], max_deg=1, max_terms=2))
    return ODO(dom, coeffs)

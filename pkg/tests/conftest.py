"""Shared hypothesis strategies for exact rational polynomials."""

from __future__ import annotations

from hypothesis import strategies as st

from invsp.polycore import Polynomial
from invsp.rat import rat


def rationals(max_num: int = 9, max_den: int = 4, nonneg: bool = False):
    lo = 0 if nonneg else -max_num
    return st.builds(
        lambda n, d: rat(n, d), st.integers(lo, max_num), st.integers(1, max_den)
    )


def monomials(nvars: int, max_exp: int = 4):
    return st.tuples(*([st.integers(0, max_exp)] * nvars))


def polynomials(
    nvars: int,
    max_terms: int = 5,
    max_exp: int = 4,
    coeffs=None,
    allow_zero: bool = True,
):
    coeffs = coeffs if coeffs is not None else rationals()
    min_size = 0 if allow_zero else 1
    return st.dictionaries(
        monomials(nvars, max_exp), coeffs, min_size=min_size, max_size=max_terms
    ).map(lambda d: Polynomial(nvars, d))

"""Hand-entered reference coefficient tables for the order-7 group.

These tables list, for the two interesting bounded-degree families (G of
degree at most 11 and at most 13), every monomial that can occur in
G = F - H + H*F together with its affine coefficient form over the
conventional parameter letters.  They were tabulated by hand, term by
term, from the products of H's monomials with the 17 terms of the basic
polynomial, and serve as an independent cross-check of the programmatic
family builder: the builder must reproduce them entry for entry.

Parameter letters (each names the coefficient of one invariant monomial
of H): U xyz; B yz^3, C x^3z, D xy^3; R y^3z^2, S x^2z^3, T x^3y^2;
K y^5z, L xz^5, M x^5y; V x^2y^2z^2.
"""

from __future__ import annotations

from typing import Dict

from .affinefamily import LinearForm
from .polycore import Monomial


def _f(const=0, **weights) -> LinearForm:
    return LinearForm(const, weights)


def degree11_reference() -> Dict[Monomial, LinearForm]:
    """Coefficient forms of G for H of degree at most 4 (51 slots)."""
    return {
        # pure basic-polynomial slots
        (0, 0, 7): _f(1),
        (7, 0, 0): _f(1),
        (0, 7, 0): _f(1),
        (0, 3, 2): _f(14),
        (2, 0, 3): _f(14),
        (3, 2, 0): _f(14),
        (0, 5, 1): _f(7),
        (1, 0, 5): _f(7),
        (5, 1, 0): _f(7),
        # degree-4 slots of F less the matching H term
        (0, 1, 3): _f(7, B=-1),
        (3, 0, 1): _f(7, C=-1),
        (1, 3, 0): _f(7, D=-1),
        # single-parameter product slots
        (0, 2, 6): _f(B=7),
        (6, 0, 2): _f(C=7),
        (2, 6, 0): _f(D=7),
        (0, 4, 5): _f(B=14),
        (5, 0, 4): _f(C=14),
        (4, 5, 0): _f(D=14),
        (0, 6, 4): _f(B=7),
        (4, 0, 6): _f(C=7),
        (6, 4, 0): _f(D=7),
        (0, 1, 10): _f(B=1),
        (10, 0, 1): _f(C=1),
        (1, 10, 0): _f(D=1),
        (0, 8, 3): _f(B=1),
        (3, 0, 8): _f(C=1),
        (8, 3, 0): _f(D=1),
        # two-parameter product slots
        (1, 3, 7): _f(B=7, D=1),
        (7, 1, 3): _f(B=1, C=7),
        (3, 7, 1): _f(C=1, D=7),
        (2, 5, 4): _f(B=7, D=7),
        (4, 2, 5): _f(B=7, C=7),
        (5, 4, 2): _f(C=7, D=7),
        # slots mixing the constant part of F with U and one of B, C, D
        (1, 2, 4): _f(7, U=7, B=14),
        (4, 1, 2): _f(7, U=7, C=14),
        (2, 4, 1): _f(7, U=7, D=14),
        (1, 1, 8): _f(U=1, B=7),
        (8, 1, 1): _f(U=1, C=7),
        (1, 8, 1): _f(U=1, D=7),
        (2, 1, 6): _f(U=7, B=14),
        (6, 2, 1): _f(U=7, C=14),
        (1, 6, 2): _f(U=7, D=14),
        (1, 4, 3): _f(U=14, B=7, D=7),
        (3, 1, 4): _f(U=14, B=7, C=7),
        (4, 3, 1): _f(U=14, C=7, D=7),
        (2, 3, 5): _f(U=7, B=7, D=7),
        (5, 2, 3): _f(U=7, B=7, C=7),
        (3, 5, 2): _f(U=7, C=7, D=7),
        # the exceptional diagonal slots
        (1, 1, 1): _f(14, U=-1),
        (2, 2, 2): _f(7, U=14),
        (3, 3, 3): _f(U=7, B=14, C=14, D=14),
    }


def degree13_reference() -> Dict[Monomial, LinearForm]:
    """Coefficient forms of G for H of degree at most 6 (79 slots).

    One systematic correction against the usual printed layout: in the
    three slots x^2y^3z^5, x^5y^2z^3, x^3y^5z^2 the parameter V enters
    with weight 7 (V's monomial times a coefficient-7 term of F), not
    weight 1.
    """
    return {
        (0, 0, 7): _f(1),
        (7, 0, 0): _f(1),
        (0, 7, 0): _f(1),
        (0, 1, 3): _f(7, B=-1),
        (3, 0, 1): _f(7, C=-1),
        (1, 3, 0): _f(7, D=-1),
        (0, 2, 6): _f(B=7),
        (6, 0, 2): _f(C=7),
        (2, 6, 0): _f(D=7),
        (0, 1, 10): _f(B=1),
        (10, 0, 1): _f(C=1),
        (1, 10, 0): _f(D=1),
        (0, 3, 2): _f(14, R=-1),
        (2, 0, 3): _f(14, S=-1),
        (3, 2, 0): _f(14, T=-1),
        (0, 3, 9): _f(R=1),
        (9, 0, 3): _f(S=1),
        (3, 9, 0): _f(T=1),
        (0, 4, 5): _f(B=14, R=7),
        (5, 0, 4): _f(C=14, S=7),
        (4, 5, 0): _f(D=14, T=7),
        (1, 7, 5): _f(K=7, L=1),
        (5, 1, 7): _f(L=7, M=1),
        (7, 5, 1): _f(K=1, M=7),
        (1, 5, 6): _f(K=7, L=7, R=7),
        (6, 1, 5): _f(L=7, M=7, S=7),
        (5, 6, 1): _f(K=7, M=7, T=7),
        (0, 5, 1): _f(7, K=-1),
        (1, 0, 5): _f(7, L=-1),
        (5, 1, 0): _f(7, M=-1),
        (0, 5, 8): _f(K=1),
        (8, 0, 5): _f(L=1),
        (5, 8, 0): _f(M=1),
        (0, 12, 1): _f(K=1),
        (1, 0, 12): _f(L=1),
        (12, 1, 0): _f(M=1),
        (0, 6, 4): _f(B=7, K=7, R=14),
        (4, 0, 6): _f(C=7, L=7, S=14),
        (6, 4, 0): _f(D=7, M=7, T=14),
        (0, 10, 2): _f(K=7, R=1),
        (2, 0, 10): _f(L=7, S=1),
        (10, 2, 0): _f(M=7, T=1),
        (0, 8, 3): _f(B=1, K=14, R=7),
        (3, 0, 8): _f(C=1, L=14, S=7),
        (8, 3, 0): _f(D=1, M=14, T=7),
        (1, 3, 7): _f(B=7, D=1, L=14, R=7),
        (7, 1, 3): _f(B=1, C=7, M=14, S=7),
        (3, 7, 1): _f(C=1, D=7, K=14, T=7),
        (1, 2, 4): _f(7, U=7, B=14),
        (4, 1, 2): _f(7, U=7, C=14),
        (2, 4, 1): _f(7, U=7, D=14),
        (1, 4, 3): _f(U=14, B=7, D=7, R=14),
        (3, 1, 4): _f(U=14, B=7, C=7, S=14),
        (4, 3, 1): _f(U=14, C=7, D=7, T=14),
        (1, 6, 2): _f(U=7, D=14, K=14, R=7),
        (2, 1, 6): _f(U=7, B=14, L=14, S=7),
        (6, 2, 1): _f(U=7, C=14, M=14, T=7),
        (1, 8, 1): _f(U=1, D=7, K=7),
        (1, 1, 8): _f(U=1, B=7, L=7),
        (8, 1, 1): _f(U=1, C=7, M=7),
        (2, 7, 3): _f(K=7, R=7, S=1, V=7),
        (3, 2, 7): _f(L=7, S=7, T=1, V=7),
        (7, 3, 2): _f(M=7, T=7, R=1, V=7),
        (2, 5, 4): _f(B=7, D=7, R=7, S=7, K=14, V=14),
        (4, 2, 5): _f(C=7, B=7, S=7, T=7, L=14, V=14),
        (5, 4, 2): _f(C=7, D=7, R=7, T=7, M=14, V=14),
        (2, 3, 5): _f(U=7, B=7, D=7, L=7, R=14, S=14, V=7),
        (5, 2, 3): _f(U=7, C=7, B=7, M=7, S=14, T=14, V=7),
        (3, 5, 2): _f(U=7, D=7, C=7, K=7, T=14, R=14, V=7),
        (2, 9, 2): _f(K=7, V=1),
        (2, 2, 9): _f(L=7, V=1),
        (9, 2, 2): _f(M=7, V=1),
        (4, 6, 3): _f(K=7, V=7),
        (3, 4, 6): _f(L=7, V=7),
        (6, 3, 4): _f(M=7, V=7),
        (1, 1, 1): _f(14, U=-1),
        (2, 2, 2): _f(7, U=14, V=-1),
        (3, 3, 3): _f(U=7, B=14, C=14, D=14, R=7, S=7, T=7, V=14),
        (4, 4, 4): _f(R=7, S=7, T=7, V=7),
    }

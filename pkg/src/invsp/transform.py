"""The tensor operation G = F - H + H*F and specialness validation.

If F equals 1 on the hyperplane then so does G = F + H*(F - 1) for any H,
and invariance of F and H passes to G.  Conversely every invariant
polynomial G that equals 1 on the hyperplane differs from the basic
polynomial F by a multiple of F - 1, so H can be recovered by exact
division.  Degree estimates bound how large the degree of a polynomial
with a given term count can be; they are used to turn bounded searches
into unconditional statements.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .construct import basic_poly_closed
from .groups import GroupSpec, is_invariant
from .polycore import DimensionMismatchError, Polynomial, is_one_on_hyperplane
from .rat import rat


@dataclass(frozen=True)
class SpecialReport:
    """Validation summary of a candidate special polynomial."""

    invariant: bool
    constant_on_hyperplane: bool
    nonneg: bool
    zero_at_origin: bool
    n_terms: int
    degree: int

    @property
    def is_special(self) -> bool:
        return (
            self.invariant
            and self.constant_on_hyperplane
            and self.nonneg
            and self.zero_at_origin
            and self.n_terms > 0
        )

    def to_json_dict(self) -> dict:
        data = asdict(self)
        data["is_special"] = self.is_special
        return data


def tensor_step(F: Polynomial, H: Polynomial) -> Polynomial:
    """Return F - H + H*F exactly."""
    if F.nvars != H.nvars:
        raise DimensionMismatchError("tensor operands must share variables")
    return F - H + H * F


def validate_special(g: GroupSpec, f: Polynomial) -> SpecialReport:
    """Check the defining properties of a special polynomial for the group."""
    if f.nvars != g.nvars:
        raise DimensionMismatchError(
            f"polynomial has {f.nvars} variables, group acts on {g.nvars}"
        )
    return SpecialReport(
        invariant=is_invariant(g, f),
        constant_on_hyperplane=is_one_on_hyperplane(f),
        nonneg=all(c > 0 for c in f.terms.values()),
        zero_at_origin=f.constant_term() == 0,
        n_terms=f.term_count(),
        degree=f.degree(),
    )


def degree_bound(n: int, N: int) -> int:
    """Largest possible degree of a good polynomial with N terms.

    In two variables the sharp estimate is d <= 2N - 3; in three variables
    N >= 2d + 1, i.e. d <= (N - 1) / 2.  Source dimension 1 carries no
    constraint and is rejected.
    """
    if N < 1:
        raise ValueError("term count must be positive")
    if n == 2:
        return 2 * N - 3
    if n == 3:
        return (N - 1) // 2
    raise ValueError(f"no degree estimate for source dimension {n}")


def quotient_H(g: GroupSpec, G: Polynomial) -> Polynomial:
    """Recover the unique H with G = F - H + H*F, F the basic polynomial.

    Computed by exact division of G - F by F - 1 with graded-lex leading
    term reduction.  A nonzero remainder means G is not in the family
    generated by F and raises ``ValueError``.
    """
    F = basic_poly_closed(g)
    if G.nvars != F.nvars:
        raise DimensionMismatchError("polynomial dimension does not match group")
    divisor = F - Polynomial.one(F.nvars)
    lead_mono, lead_coeff = divisor.leading_term()
    remainder_terms = {}
    current = G - F
    quotient = Polynomial.zero(F.nvars)
    while not current.is_zero():
        mono, coeff = current.leading_term()
        if all(a >= b for a, b in zip(mono, lead_mono)):
            shift = tuple(a - b for a, b in zip(mono, lead_mono))
            q_term = Polynomial.monomial(F.nvars, shift, coeff / lead_coeff)
            quotient = quotient + q_term
            current = current - q_term * divisor
        else:
            remainder_terms[mono] = coeff
            current = current - Polynomial.monomial(F.nvars, mono, coeff)
    if remainder_terms:
        raise ValueError(
            "division left a nonzero remainder; the input is not of the form "
            f"F - H + H*F for this group (first stray term {next(iter(remainder_terms))})"
        )
    return quotient

"""Exact sparse multivariate polynomial arithmetic.

A polynomial is a finite map from exponent tuples to nonzero exact rational
coefficients, together with an explicit variable count.  The representation
is canonical: zero coefficients are never stored, and term iteration is
graded-lexicographic (total degree first, then exponent tuples with the
first variable most significant), leading term first.  All operations are
pure; polynomials are immutable after construction and safe to share across
threads or worker processes.

Supported variable counts are small (0 through 3 in practice): the intended
use is real polynomials in x, y, z that are constant on the hyperplane
x + y + z = 1 (or its lower-dimensional analogues).
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping, Tuple, Union

from .rat import Rat, RatLike, rat, rat_str

Monomial = Tuple[int, ...]

VAR_NAMES = ("x", "y", "z")


class DimensionMismatchError(ValueError):
    """Raised when operands disagree on the number of variables."""


def grlex_key(mono: Monomial) -> tuple:
    """Sort key for graded-lexicographic order with x > y > z."""
    return (sum(mono), mono)


def total_degree(mono: Monomial) -> int:
    return sum(mono)


def _validate_mono(mono, nvars: int) -> Monomial:
    mono = tuple(int(e) for e in mono)
    if len(mono) != nvars:
        raise DimensionMismatchError(
            f"monomial {mono} has {len(mono)} exponents, expected {nvars}"
        )
    if any(e < 0 for e in mono):
        raise ValueError(f"negative exponent in monomial {mono}")
    return mono


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients.

    ``nvars`` may be 0, in which case the polynomial is a constant (the
    empty exponent tuple is its only possible monomial).  The zero
    polynomial is the empty term map and has term count 0.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Union[Mapping, Iterable, None] = None):
        nvars = int(nvars)
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean: dict[Monomial, Rat] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, coeff in items:
                mono = _validate_mono(mono, nvars)
                c = rat(coeff)
                if mono in clean:
                    c = clean[mono] + c
                if c == 0:
                    clean.pop(mono, None)
                else:
                    clean[mono] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: RatLike) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: rat(value)})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} vars")
        expts = [0] * nvars
        expts[index] = 1
        return cls(nvars, {tuple(expts): 1})

    @classmethod
    def monomial(cls, nvars: int, expts: Iterable[int], coeff: RatLike = 1) -> "Polynomial":
        return cls(nvars, {tuple(expts): rat(coeff)})

    # -- basic queries -----------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Rat]:
        return self._terms

    def term_count(self) -> int:
        """Number of distinct monomials with nonzero coefficient."""
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def coefficient(self, mono: Iterable[int]) -> Rat:
        return self._terms.get(_validate_mono(mono, self.nvars), rat(0))

    def constant_term(self) -> Rat:
        return self._terms.get((0,) * self.nvars, rat(0))

    def min_degree(self) -> int:
        """Smallest total degree among the terms; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return min(sum(m) for m in self._terms)

    def iter_terms(self) -> Iterator[tuple[Monomial, Rat]]:
        """Terms in descending graded-lex order (leading term first)."""
        for mono in sorted(self._terms, key=grlex_key, reverse=True):
            yield mono, self._terms[mono]

    def leading_term(self) -> tuple[Monomial, Rat]:
        """Largest term in graded-lex order; error on the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self._terms, key=grlex_key)
        return mono, self._terms[mono]

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self._terms)

    # -- arithmetic --------------------------------------------------------

    def _check_same_dim(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatchError(
                f"operands have {self.nvars} and {other.nvars} variables"
            )

    def __add__(self, other):
        if isinstance(other, Polynomial):
            self._check_same_dim(other)
            out = dict(self._terms)
            for mono, c in other._terms.items():
                s = out.get(mono)
                s = c if s is None else s + c
                if s == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = s
            return Polynomial._raw(self.nvars, out)
        if isinstance(other, (int, str)) or type(other) is type(rat(0)):
            return self + Polynomial.constant(self.nvars, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, Polynomial):
            self._check_same_dim(other)
            out = dict(self._terms)
            for mono, c in other._terms.items():
                s = out.get(mono)
                s = -c if s is None else s - c
                if s == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = s
            return Polynomial._raw(self.nvars, out)
        if isinstance(other, (int, str)) or type(other) is type(rat(0)):
            return self - Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check_same_dim(other)
            out: dict[Monomial, Rat] = {}
            for ma, ca in self._terms.items():
                for mb, cb in other._terms.items():
                    mono = tuple(a + b for a, b in zip(ma, mb))
                    prod = ca * cb
                    s = out.get(mono)
                    s = prod if s is None else s + prod
                    if s == 0:
                        out.pop(mono, None)
                    else:
                        out[mono] = s
            return Polynomial._raw(self.nvars, out)
        # scalar
        try:
            c = rat(other)
        except TypeError:
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def scale(self, factor: RatLike) -> "Polynomial":
        c = rat(factor)
        if c == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {m: v * c for m, v in self._terms.items()})

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial power requires a nonnegative integer")
        result = Polynomial.one(self.nvars)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        """Internal constructor; terms must already be canonical."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "nvars", nvars)
        object.__setattr__(obj, "_terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    # -- structural operations ----------------------------------------------

    def restrict_to_hyperplane(self) -> "Polynomial":
        """Substitute the last variable by 1 minus the sum of the others.

        For one variable this substitutes x = 1; the result always has one
        variable fewer.  A polynomial is identically 1 on the hyperplane
        x + y (+ z) = 1 exactly when the result is the constant 1.
        """
        if self.nvars not in (1, 2, 3):
            raise DimensionMismatchError(
                f"hyperplane restriction supports 1-3 variables, got {self.nvars}"
            )
        k = self.nvars - 1
        # replacement = 1 - x - y ... in k variables
        repl_terms = {(0,) * k: rat(1)}
        for i in range(k):
            e = [0] * k
            e[i] = 1
            repl_terms[tuple(e)] = rat(-1)
        repl = Polynomial(k, repl_terms)
        powers = {0: Polynomial.one(k)}

        def repl_pow(e: int) -> Polynomial:
            if e not in powers:
                powers[e] = repl_pow(e - 1) * repl
            return powers[e]

        out = Polynomial.zero(k)
        for mono, c in self._terms.items():
            head = Polynomial.monomial(k, mono[:k], c)
            out = out + head * repl_pow(mono[k])
        return out

    def evaluate(self, point: Iterable[RatLike]) -> Rat:
        values = [rat(v) for v in point]
        if len(values) != self.nvars:
            raise DimensionMismatchError("evaluation point has wrong arity")
        total = rat(0)
        for mono, c in self._terms.items():
            term = c
            for v, e in zip(values, mono):
                if e:
                    term = term * v**e
            total += term
        return total

    def set_variable_zero(self, index: int) -> "Polynomial":
        """Drop all terms involving the given variable (set it to zero)."""
        return Polynomial._raw(
            self.nvars, {m: c for m, c in self._terms.items() if m[index] == 0}
        )

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.nvars, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"e": list(mono), "c": rat_str(c)} for mono, c in self.iter_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "Polynomial":
        if not isinstance(data, Mapping) or "nvars" not in data or "terms" not in data:
            raise ValueError("polynomial JSON must have 'nvars' and 'terms'")
        terms = {}
        for entry in data["terms"]:
            mono = tuple(int(e) for e in entry["e"])
            terms[mono] = rat(entry["c"])
        return cls(int(data["nvars"]), terms)

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def loads(cls, text: str) -> "Polynomial":
        return cls.from_json_dict(json.loads(text))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.iter_terms():
            factors = []
            for name, e in zip(VAR_NAMES, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                chunk = rat_str(c)
            elif c == 1:
                chunk = body
            elif c == -1:
                chunk = f"-{body}"
            else:
                chunk = f"{rat_str(c)}*{body}"
            parts.append(chunk)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self!s})"


def term_count(f: Polynomial) -> int:
    """Number of distinct monomials of f (0 for the zero polynomial)."""
    return f.term_count()


def dominates(g: Polynomial, h: Polynomial) -> bool:
    """True when every coefficient of h - g is nonnegative."""
    if g.nvars != h.nvars:
        raise DimensionMismatchError("dominates requires matching variable counts")
    for mono in set(g.terms) | set(h.terms):
        if h.terms.get(mono, rat(0)) - g.terms.get(mono, rat(0)) < 0:
            return False
    return True


def is_one_on_hyperplane(f: Polynomial) -> bool:
    """True when f is identically 1 on the hyperplane x + y (+ z) = 1."""
    return f.restrict_to_hyperplane() == Polynomial.one(f.nvars - 1)

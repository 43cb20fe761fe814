"""Coefficients of G = F - H + H*F as affine forms of H's free coefficients.

For a group with basic polynomial F and a symbolic invariant polynomial H
of bounded degree, every coefficient of G is an affine form (a rational
constant plus rational weights) over H's coefficients.  The list of these
forms, one per monomial that can occur in G, is an :class:`AffineFamily`.
Instantiating the family at a parameter point reproduces the tensor step
exactly; asking which subsets of forms can vanish simultaneously (with the
rest strictly positive, or merely nonzero) is an exact rational LP
question answered by :func:`pattern_feasible`.

Parameter naming for gamma7 follows the conventional letters for the
eleven invariant monomials of degree at most six: U for xyz; B, C, D for
the degree-4 monomials omitting x, y, z respectively; R, S, T and K, L, M
likewise in degrees 5 and 6; V for (xyz)^2.  Other monomials get
systematic names derived from their exponents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from . import ratlp
from .construct import basic_poly_closed
from .groups import GAMMA7, GroupSpec, enumerate_invariant_monomials, rotate_xyz
from .polycore import Monomial, Polynomial, grlex_key
from .rat import Rat, rat, rat_str
from .transform import tensor_step

NONNEG_H = "nonneg"
SIGNED_H = "signed"

_SIGN_MODE_ALIASES = {
    "nonneg": NONNEG_H,
    "nonneg_h": NONNEG_H,
    "signed": SIGNED_H,
    "signed_h": SIGNED_H,
}


class LinearForm:
    """Affine form: constant plus rational weights over named parameters."""

    __slots__ = ("const", "weights")

    def __init__(self, const=0, weights: Optional[Mapping[str, object]] = None):
        self.const = rat(const)
        clean: Dict[str, Rat] = {}
        if weights:
            for name, w in weights.items():
                w = rat(w)
                if w != 0:
                    clean[name] = w
        self.weights = clean

    def evaluate(self, point: Mapping[str, Rat]) -> Rat:
        total = self.const
        for name, w in self.weights.items():
            total += w * point[name]
        return total

    def substitute_zeros(self, zero_names) -> "LinearForm":
        return LinearForm(
            self.const,
            {n: w for n, w in self.weights.items() if n not in zero_names},
        )

    def rename(self, mapping: Mapping[str, str]) -> "LinearForm":
        return LinearForm(
            self.const, {mapping.get(n, n): w for n, w in self.weights.items()}
        )

    def is_zero(self) -> bool:
        return self.const == 0 and not self.weights

    def is_constant(self) -> bool:
        return not self.weights

    def single_param(self) -> Optional[Tuple[str, Rat]]:
        """(name, weight) when the form is exactly one weighted parameter."""
        if self.const == 0 and len(self.weights) == 1:
            return next(iter(self.weights.items()))
        return None

    def params(self) -> FrozenSet[str]:
        return frozenset(self.weights)

    def __eq__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.const == other.const and self.weights == other.weights

    def __hash__(self):
        return hash((self.const, frozenset(self.weights.items())))

    def to_json_dict(self) -> dict:
        data = {"const": rat_str(self.const)}
        for name in sorted(self.weights):
            data[name] = rat_str(self.weights[name])
        return data

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "LinearForm":
        const = data.get("const", "0")
        weights = {k: v for k, v in data.items() if k != "const"}
        return cls(const, weights)

    def __str__(self):
        parts = []
        if self.const != 0 or not self.weights:
            parts.append(rat_str(self.const))
        for name in sorted(self.weights):
            w = self.weights[name]
            if w == 1:
                parts.append(name)
            elif w == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{rat_str(w)}*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"LinearForm({self})"


@dataclass(frozen=True)
class ParamSpec:
    """A free coefficient of H: its name, monomial, and sign bounds.

    A ``structural`` zero lower bound records that the parameter appears
    alone as some slot's whole form, so it is forced nonnegative whenever
    all slots are; such a bound only applies to orthant-constrained
    queries and is ignored when slots may take either sign.
    """

    name: str
    mono: Optional[Monomial]
    lo: Optional[Rat] = None  # None = unbounded below, 0 = nonnegative
    hi: Optional[Rat] = None
    structural: bool = False

    @property
    def degree(self) -> int:
        return sum(self.mono) if self.mono is not None else 0

    def effective_lo(self, orthant: bool) -> Optional[Rat]:
        if self.structural and not orthant:
            return None
        return self.lo


@dataclass(frozen=True)
class SlotSpec:
    """One potential monomial of G with its affine coefficient form."""

    mono: Optional[Monomial]
    form: LinearForm


@dataclass(frozen=True)
class PatternResult:
    """Outcome of a vanishing-pattern feasibility query."""

    zero_set: FrozenSet[int]
    feasible: bool
    witness: Optional[Dict[str, Rat]]
    l0: Optional[int]


@dataclass
class AffineFamily:
    """Ordered parameters plus ordered (monomial, affine form) slots."""

    nvars: int
    params: List[ParamSpec]
    slots: List[SlotSpec]
    group: Optional[GroupSpec] = None
    orthant_default: bool = True
    symmetry: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = field(
        default=None, repr=False
    )  # (param index permutation, slot index permutation) of order 3

    def __post_init__(self):
        names = [p.name for p in self.params]
        if len(set(names)) != len(names):
            raise ValueError("duplicate parameter names")
        if "const" in names:
            raise ValueError("'const' is reserved and cannot name a parameter")
        self.slots = [s for s in self.slots if not s.form.is_zero()]

    @property
    def param_names(self) -> List[str]:
        return [p.name for p in self.params]

    def param_by_name(self, name: str) -> ParamSpec:
        for p in self.params:
            if p.name == name:
                return p
        raise KeyError(name)

    def slot_index(self, mono: Monomial) -> int:
        for i, s in enumerate(self.slots):
            if s.mono == tuple(mono):
                return i
        raise KeyError(f"no slot for monomial {mono}")

    def form_at(self, mono: Monomial) -> LinearForm:
        return self.slots[self.slot_index(mono)].form

    # -- evaluation ------------------------------------------------------------

    def check_point(self, point: Mapping) -> Dict[str, Rat]:
        clean = {}
        for p in self.params:
            if p.name not in point:
                raise KeyError(f"missing parameter {p.name}")
            clean[p.name] = rat(point[p.name])
        return clean

    def evaluate_slots(self, point: Mapping) -> List[Rat]:
        pt = self.check_point(point)
        return [s.form.evaluate(pt) for s in self.slots]

    def h_polynomial(self, point: Mapping) -> Polynomial:
        """The invariant polynomial H determined by a parameter point."""
        pt = self.check_point(point)
        terms = {}
        for p in self.params:
            if p.mono is None:
                raise ValueError("family parameters carry no monomials")
            if pt[p.name] != 0:
                terms[p.mono] = pt[p.name]
        return Polynomial(self.nvars, terms)

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "group": self.group.to_json_dict() if self.group else None,
            "orthant": self.orthant_default,
            "params": [
                {
                    "name": p.name,
                    "lo": None if p.lo is None else rat_str(p.lo),
                    "hi": None if p.hi is None else rat_str(p.hi),
                    "mono": None if p.mono is None else list(p.mono),
                    "structural": p.structural,
                }
                for p in self.params
            ],
            "slots": [
                {
                    "e": None if s.mono is None else list(s.mono),
                    "form": s.form.to_json_dict(),
                }
                for s in self.slots
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "AffineFamily":
        params = [
            ParamSpec(
                name=entry["name"],
                mono=None if entry.get("mono") is None else tuple(entry["mono"]),
                lo=None if entry.get("lo") is None else rat(entry["lo"]),
                hi=None if entry.get("hi") is None else rat(entry["hi"]),
                structural=bool(entry.get("structural", False)),
            )
            for entry in data["params"]
        ]
        slots = [
            SlotSpec(
                mono=None if entry.get("e") is None else tuple(entry["e"]),
                form=LinearForm.from_json_dict(entry["form"]),
            )
            for entry in data["slots"]
        ]
        fam = cls(
            nvars=int(data["nvars"]),
            params=params,
            slots=slots,
            group=GroupSpec.from_json_dict(data["group"]) if data.get("group") else None,
            orthant_default=bool(data.get("orthant", True)),
        )
        fam.symmetry = _detect_rotation_symmetry(fam)
        return fam

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"), sort_keys=True)


# -- gamma7 canonical parameter names -------------------------------------------

GAMMA7_PARAM_NAMES: Dict[Monomial, str] = {
    (1, 1, 1): "U",
    (0, 1, 3): "B",
    (3, 0, 1): "C",
    (1, 3, 0): "D",
    (0, 3, 2): "R",
    (2, 0, 3): "S",
    (3, 2, 0): "T",
    (0, 5, 1): "K",
    (1, 0, 5): "L",
    (5, 1, 0): "M",
    (2, 2, 2): "V",
}

_GAMMA7_PARAM_ORDER = ["U", "B", "C", "D", "R", "S", "T", "K", "L", "M", "V"]


def _param_name(g: GroupSpec, mono: Monomial) -> str:
    if g.family == GAMMA7 and mono in GAMMA7_PARAM_NAMES:
        return GAMMA7_PARAM_NAMES[mono]
    return "m" + "_".join(str(e) for e in mono)


def _param_sort_key(g: GroupSpec, mono: Monomial):
    name = _param_name(g, mono)
    if g.family == GAMMA7 and name in _GAMMA7_PARAM_ORDER:
        return (0, _GAMMA7_PARAM_ORDER.index(name))
    return (1, grlex_key(mono))


def build_coefficient_family(
    g: GroupSpec, h_degree: int, sign_mode: str = SIGNED_H
) -> AffineFamily:
    """Symbolic coefficients of G = F - H + H*F for H of degree <= h_degree.

    One parameter per nonconstant invariant monomial of degree at most
    ``h_degree``.  In "nonneg" mode every parameter is bounded below by
    zero (H itself must have nonnegative coefficients).  In "signed" mode
    parameters are free except for a sound structural tightening: a
    parameter that appears alone as some slot's entire form is forced
    nonnegative anyway whenever all slots are nonnegative, so it gets the
    zero lower bound explicitly.
    """
    if h_degree < 0:
        raise ValueError("h_degree must be nonnegative")
    mode = _SIGN_MODE_ALIASES.get(sign_mode.lower())
    if mode is None:
        raise ValueError(f"unknown sign mode {sign_mode!r}")

    F = basic_poly_closed(g)
    monos = sorted(
        enumerate_invariant_monomials(g, h_degree), key=lambda m: _param_sort_key(g, m)
    )
    names = [_param_name(g, m) for m in monos]

    # slot form accumulation: G = F - H + H*F
    acc: Dict[Monomial, Tuple[Rat, Dict[str, Rat]]] = {}

    def bump(mono: Monomial, const_delta: Rat, name: Optional[str], w: Rat) -> None:
        const, weights = acc.get(mono, (rat(0), {}))
        const = const + const_delta
        if name is not None:
            weights = dict(weights)
            weights[name] = weights.get(name, rat(0)) + w
        acc[mono] = (const, weights)

    for mono, coeff in F.terms.items():
        bump(mono, coeff, None, rat(0))
    for name, h_mono in zip(names, monos):
        bump(h_mono, rat(0), name, rat(-1))
        for f_mono, f_coeff in F.terms.items():
            prod = tuple(a + b for a, b in zip(h_mono, f_mono))
            bump(prod, rat(0), name, f_coeff)

    slots = []
    for mono in sorted(acc, key=grlex_key, reverse=True):
        const, weights = acc[mono]
        form = LinearForm(const, weights)
        if not form.is_zero():
            slots.append(SlotSpec(mono=mono, form=form))

    appears_alone = set()
    for s in slots:
        single = s.form.single_param()
        if single is not None and single[1] > 0:
            appears_alone.add(single[0])

    params = []
    for name, mono in zip(names, monos):
        if mode == NONNEG_H:
            params.append(ParamSpec(name=name, mono=mono, lo=rat(0), hi=None))
        elif name in appears_alone:
            params.append(
                ParamSpec(name=name, mono=mono, lo=rat(0), hi=None, structural=True)
            )
        else:
            params.append(ParamSpec(name=name, mono=mono, lo=None, hi=None))

    fam = AffineFamily(nvars=g.nvars, params=params, slots=slots, group=g)
    fam.symmetry = _detect_rotation_symmetry(fam)
    return fam


def _detect_rotation_symmetry(fam: AffineFamily):
    """Order-3 symmetry induced by rotating x -> y -> z -> x, if present."""
    if fam.nvars != 3 or not fam.params or any(p.mono is None for p in fam.params):
        return None
    mono_to_param = {p.mono: i for i, p in enumerate(fam.params)}
    mono_to_slot = {s.mono: i for i, s in enumerate(fam.slots)}
    try:
        param_perm = tuple(mono_to_param[rotate_xyz(p.mono)] for p in fam.params)
        slot_perm = tuple(mono_to_slot[rotate_xyz(s.mono)] for s in fam.slots)
    except KeyError:
        return None
    rename = {
        fam.params[i].name: fam.params[param_perm[i]].name
        for i in range(len(fam.params))
    }
    for i, s in enumerate(fam.slots):
        if fam.slots[slot_perm[i]].form != s.form.rename(rename):
            return None
    return (param_perm, slot_perm)


def instantiate(fam: AffineFamily, point: Mapping) -> Polynomial:
    """Evaluate every slot at the point; equals tensor_step(F, H(point))."""
    pt = fam.check_point(point)
    terms = {}
    for s in fam.slots:
        if s.mono is None:
            raise ValueError("family slots carry no monomials; use evaluate_slots")
        value = s.form.evaluate(pt)
        if value != 0:
            terms[s.mono] = value
    return Polynomial(fam.nvars, terms)


def cross_check_instantiate(fam: AffineFamily, point: Mapping) -> bool:
    """Verify instantiate(fam, point) against an explicit tensor step."""
    if fam.group is None:
        raise ValueError("cross-check requires a group-built family")
    F = basic_poly_closed(fam.group)
    return instantiate(fam, point) == tensor_step(F, fam.h_polynomial(point))


def l0_range(fam: AffineFamily, **kwargs):
    """Achievable sparsity values of the family; see :func:`invsp.sweep.run_l0_sweep`.

    Accepts the same keyword arguments (orthant, sought, budget, jobs,
    h_degree_exact, skip_all_zero) and returns an L0Report with witnessed
    values, certified absences, and an exhaustiveness flag.
    """
    from .sweep import run_l0_sweep

    return run_l0_sweep(fam, **kwargs)


# -- pattern feasibility ------------------------------------------------------


def _bound_rows(fam: AffineFamily, n: int, orthant: bool):
    """Constraint rows for declared parameter bounds (vars: params + t)."""
    rows = []
    for i, p in enumerate(fam.params):
        lo = p.effective_lo(orthant)
        if lo is not None:
            coeffs = [rat(0)] * n
            coeffs[i] = rat(1)
            rows.append((coeffs, ratlp.GE, lo))
        if p.hi is not None:
            coeffs = [rat(0)] * n
            coeffs[i] = rat(1)
            rows.append((coeffs, ratlp.LE, p.hi))
    return rows


def _form_row(form: LinearForm, index: Dict[str, int], n: int, t_coeff: Rat):
    coeffs = [rat(0)] * n
    for name, w in form.weights.items():
        coeffs[index[name]] = w
    if t_coeff != 0:
        coeffs[n - 1] = t_coeff
    return coeffs


def pattern_feasible(
    fam: AffineFamily, zero_set: Iterable[int], orthant: Optional[bool] = None
) -> PatternResult:
    """Decide whether exactly the given slots can vanish.

    With ``orthant`` true (the default for group families) the remaining
    slots must be strictly positive; otherwise they must merely be nonzero.
    Feasibility is decided by maximizing a shared slack t with exact
    rational LP; the pattern is feasible exactly when the optimum is
    positive.
    """
    if orthant is None:
        orthant = fam.orthant_default
    zset = frozenset(int(i) for i in zero_set)
    if any(i < 0 or i >= len(fam.slots) for i in zset):
        raise ValueError("zero_set index out of range")
    n = len(fam.params) + 1  # parameters plus the slack t
    index = {p.name: i for i, p in enumerate(fam.params)}
    objective = [rat(0)] * n
    objective[n - 1] = rat(1)

    base_rows = list(_bound_rows(fam, n, orthant))
    cap = [rat(0)] * n
    cap[n - 1] = rat(1)
    base_rows.append((cap, ratlp.LE, rat(1)))
    for i in zset:
        base_rows.append((_form_row(fam.slots[i].form, index, n, rat(0)), ratlp.EQ,
                          -fam.slots[i].form.const))

    others = [i for i in range(len(fam.slots)) if i not in zset]

    def finish(x):
        witness = {p.name: x[i] for i, p in enumerate(fam.params)}
        return PatternResult(zset, True, witness, len(fam.slots) - len(zset))

    if orthant:
        rows = list(base_rows)
        for i in others:
            form = fam.slots[i].form
            rows.append((_form_row(form, index, n, rat(-1)), ratlp.GE, -form.const))
        res = ratlp.solve_lp(objective, rows, n)
        if res.status == ratlp.OPTIMAL and res.objective > 0:
            return finish(res.x)
        return PatternResult(zset, False, None, None)

    # signed slots: branch over the sign of each nonzero slot
    def search(pos: int, rows) -> Optional[List[Rat]]:
        res = ratlp.solve_lp(objective, rows, n)
        if res.status != ratlp.OPTIMAL or res.objective <= 0:
            return None
        if pos == len(others):
            return res.x
        form = fam.slots[others[pos]].form
        for sign in (1, -1):
            coeffs = _form_row(form, index, n, rat(-1))
            if sign > 0:
                row = (coeffs, ratlp.GE, -form.const)
            else:
                row = ([-c for c in coeffs[:-1]] + [rat(-1)], ratlp.GE, form.const)
            hit = search(pos + 1, rows + [row])
            if hit is not None:
                return hit
        return None

    x = search(0, list(base_rows))
    if x is None:
        return PatternResult(zset, False, None, None)
    return finish(x)

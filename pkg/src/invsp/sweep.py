"""Exhaustive enumeration of achievable sparsity values over an affine family.

The search space is the set of parameter points of an :class:`AffineFamily`
(optionally restricted to the orthant where every slot is nonnegative).
Each point determines a vanishing pattern of slots; the quantity of
interest is the number of nonvanishing slots.  The sweep certifies, for a
requested set of candidate values, exactly which are attained.

Structure of the search, mirroring a by-hand case analysis:

1. Parameters are split by exact sign (zero / positive / negative where a
   negative value is allowed), giving a lattice of sign regions.  Within a
   region, zero parameters are substituted away.
2. Interval propagation over the region's parameter box decides most slot
   forms outright (always positive, identically zero, forced zero, or a
   witness that the region is empty); only genuinely ambiguous forms are
   branched on, with an exact rational LP as the feasibility oracle.
3. Branches whose attainable value interval cannot contribute a still
   undecided sought value are pruned.
4. An order-3 variable rotation, when the family is symmetric under it,
   cuts the region lattice by up to a factor of three.

Budgets are counted in search nodes and sliced deterministically per
region, so reports are reproducible and independent of worker count.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import ratlp
from .affinefamily import AffineFamily
from .rat import Rat, rat

DEFAULT_BUDGET = 200_000
REGION_ENUM_LIMIT = 200_000
REGION_NODE_FLOOR = 50_000

_POS_CHOICES = (0, 1)
_FULL_CHOICES = (0, 1, -1)
_CANON_RANK = {0: 0, 1: 1, -1: 2}


@dataclass
class SweepStats:
    nodes: int = 0
    lp_calls: int = 0
    regions_total: int = 0
    regions_explored: int = 0
    regions_infeasible: int = 0
    leaves: int = 0

    def merge(self, other: "SweepStats") -> None:
        self.nodes += other.nodes
        self.lp_calls += other.lp_calls
        self.regions_total += other.regions_total
        self.regions_explored += other.regions_explored
        self.regions_infeasible += other.regions_infeasible
        self.leaves += other.leaves


@dataclass
class L0Report:
    """Outcome of a sweep: witnessed values, certified absences, coverage."""

    achievable: Dict[int, Dict[str, Rat]]
    sought: FrozenSet[int]
    certified_absent: List[int]
    exhaustive: bool
    stats: SweepStats = field(default_factory=SweepStats)

    def to_json_dict(self) -> dict:
        from .rat import rat_str

        return {
            "achievable": {
                str(v): {k: rat_str(x) for k, x in sorted(pt.items())}
                for v, pt in sorted(self.achievable.items())
            },
            "sought": sorted(self.sought),
            "certified_absent": self.certified_absent,
            "exhaustive": self.exhaustive,
            "stats": {
                "nodes": self.stats.nodes,
                "lp_calls": self.stats.lp_calls,
                "regions_total": self.stats.regions_total,
                "regions_explored": self.stats.regions_explored,
            },
        }


class _BudgetExhausted(Exception):
    pass


# -- compiled family ------------------------------------------------------------


class _CompiledSlot:
    __slots__ = ("index", "const", "items")

    def __init__(self, index: int, const: Rat, items: Tuple[Tuple[int, Rat], ...]):
        self.index = index
        self.const = const
        self.items = items  # (param position, weight)


class _Compiled:
    """Family flattened to integer-indexed arrays for the search loops."""

    def __init__(self, fam: AffineFamily, orthant: bool):
        self.fam = fam
        self.orthant = orthant
        self.names = [p.name for p in fam.params]
        index = {n: i for i, n in enumerate(self.names)}
        self.lo = [p.effective_lo(orthant) for p in fam.params]
        self.hi = [p.hi for p in fam.params]
        self.degrees = [p.degree for p in fam.params]
        self.slots = [
            _CompiledSlot(
                i,
                s.form.const,
                tuple(sorted((index[n], w) for n, w in s.form.weights.items())),
            )
            for i, s in enumerate(fam.slots)
        ]
        self.choices = []
        for p in fam.params:
            if p.lo is None:
                self.choices.append(_FULL_CHOICES)
            elif p.lo == 0:
                self.choices.append(_POS_CHOICES)
            else:
                self.choices.append((1,))


# -- interval arithmetic (None = unbounded) -------------------------------------


def _interval_of(const, items, boxes):
    """(fmin, fmin_attained, fmax, fmax_attained) of a form over the box."""
    fmin, fmax = const, const
    min_att = max_att = True
    for pos, w in items:
        lo, hi, lo_excl, hi_excl = boxes[pos]
        if w > 0:
            if fmin is not None:
                if lo is None:
                    fmin = None
                else:
                    fmin += w * lo
                    if lo == 0 and lo_excl:
                        min_att = False
            if fmax is not None:
                if hi is None:
                    fmax = None
                else:
                    fmax += w * hi
                    if hi == 0 and hi_excl:
                        max_att = False
        else:
            if fmin is not None:
                if hi is None:
                    fmin = None
                else:
                    fmin += w * hi
                    if hi == 0 and hi_excl:
                        min_att = False
            if fmax is not None:
                if lo is None:
                    fmax = None
                else:
                    fmax += w * lo
                    if lo == 0 and lo_excl:
                        max_att = False
    return fmin, min_att, fmax, max_att


def _propagate_box(boxes, forms, rounds: int = 3) -> bool:
    """Tighten parameter boxes using form >= 0; False if a box empties."""
    for _ in range(rounds):
        changed = False
        for const, items in forms:
            for k, wk in items:
                rest_max = const
                for pos, w in items:
                    if pos == k:
                        continue
                    lo, hi, _, _ = boxes[pos]
                    bound = hi if w > 0 else lo
                    if bound is None:
                        rest_max = None
                        break
                    rest_max += w * bound
                if rest_max is None:
                    continue
                lo, hi, lo_excl, hi_excl = boxes[k]
                if wk > 0:
                    new_lo = -rest_max / wk
                    if lo is None or new_lo > lo:
                        boxes[k] = (new_lo, hi, lo_excl and new_lo == 0, hi_excl)
                        changed = True
                else:
                    new_hi = rest_max / (-wk)
                    if hi is None or new_hi < hi:
                        boxes[k] = (lo, new_hi, lo_excl, hi_excl and new_hi == 0)
                        changed = True
        for box in boxes:
            if box is None:
                continue
            lo, hi, _, _ = box
            if lo is not None and hi is not None and lo > hi:
                return False
        if not changed:
            break
    return True


# -- per-region search -----------------------------------------------------------


class _RegionOutcome:
    __slots__ = ("found", "complete", "stats")

    def __init__(self, found, complete, stats):
        self.found = found
        self.complete = complete
        self.stats = stats


def _explore_region(
    comp: _Compiled,
    sigma: Tuple[int, ...],
    sought: FrozenSet[int],
    cap: int,
) -> _RegionOutcome:
    stats = SweepStats(regions_explored=1)
    found: Dict[int, Dict[str, Rat]] = {}
    remaining = set(sought)

    support = [i for i, s in enumerate(sigma) if s != 0]
    zero_positions = {i for i, s in enumerate(sigma) if s == 0}

    # reduce slot forms over the support
    reduced = []  # (slot_index, const, items)
    n_base = 0  # slots decided nonzero for the whole region
    auto_zero = 0
    for slot in comp.slots:
        items = tuple((p, w) for p, w in slot.items if p not in zero_positions)
        if not items:
            if slot.const == 0:
                auto_zero += 1
            elif slot.const > 0 or not comp.orthant:
                n_base += 1
            else:
                stats.regions_infeasible += 1
                return _RegionOutcome({}, True, stats)
        else:
            reduced.append((slot.index, slot.const, items))

    # parameter boxes for the region
    boxes: List[Optional[tuple]] = [None] * len(comp.names)
    for i in support:
        lo, hi = comp.lo[i], comp.hi[i]
        if sigma[i] > 0:
            lo = rat(0) if lo is None or lo < 0 else lo
            boxes[i] = (lo, hi, lo == 0, False)
        else:
            hi = rat(0) if hi is None or hi > 0 else hi
            boxes[i] = (lo, hi, False, hi == 0)

    if comp.orthant:
        ok = _propagate_box(boxes, [(c, it) for _, c, it in reduced])
        if not ok:
            stats.regions_infeasible += 1
            return _RegionOutcome({}, True, stats)

    forced_zero: List[tuple] = []
    ambiguous: List[tuple] = []
    for entry in reduced:
        _, const, items = entry
        fmin, min_att, fmax, max_att = _interval_of(const, items, boxes)
        if comp.orthant:
            if fmax is not None and (fmax < 0 or (fmax == 0 and not max_att)):
                stats.regions_infeasible += 1
                return _RegionOutcome({}, True, stats)
            if fmax is not None and fmax == 0:
                forced_zero.append(entry)
                continue
            if fmin is not None and (fmin > 0 or (fmin == 0 and not min_att)):
                n_base += 1
                continue
            ambiguous.append(entry)
        else:
            if (fmin is not None and (fmin > 0 or (fmin == 0 and not min_att))) or (
                fmax is not None and (fmax < 0 or (fmax == 0 and not max_att))
            ):
                n_base += 1
            else:
                ambiguous.append(entry)

    n_vars = len(support) + 1  # support parameters plus slack t
    pos_of = {p: k for k, p in enumerate(support)}
    objective = [rat(0)] * n_vars
    objective[-1] = rat(1)

    def region_rows():
        rows = []
        for p in support:
            lo, hi, _, _ = boxes[p]
            unit = [rat(0)] * n_vars
            unit[pos_of[p]] = rat(1)
            if lo is not None:
                rows.append((list(unit), ratlp.GE, lo))
            if hi is not None:
                rows.append((list(unit), ratlp.LE, hi))
            strict = [rat(0)] * n_vars
            strict[pos_of[p]] = rat(1) if sigma[p] > 0 else rat(-1)
            strict[-1] = rat(-1)
            rows.append((strict, ratlp.GE, rat(0)))
        cap_row = [rat(0)] * n_vars
        cap_row[-1] = rat(1)
        rows.append((cap_row, ratlp.LE, rat(1)))
        for _, const, items in forced_zero:
            rows.append((_row(items, n_vars, pos_of, rat(0)), ratlp.EQ, -const))
        return rows

    base_rows = region_rows()

    def solve(zero_entries, pos_entries, open_entries):
        rows = list(base_rows)
        for _, const, items in zero_entries:
            rows.append((_row(items, n_vars, pos_of, rat(0)), ratlp.EQ, -const))
        for _, const, items in pos_entries:
            rows.append((_row(items, n_vars, pos_of, rat(-1)), ratlp.GE, -const))
        if comp.orthant:
            for _, const, items in open_entries:
                rows.append((_row(items, n_vars, pos_of, rat(0)), ratlp.GE, -const))
        stats.lp_calls += 1
        res = ratlp.solve_lp(objective, rows, n_vars)
        if res.status == ratlp.OPTIMAL and res.objective > 0:
            return res.x[:-1]
        return None

    def eval_entry(entry, point) -> Rat:
        _, const, items = entry
        total = const
        for p, w in items:
            total += w * point[pos_of[p]]
        return total

    def full_point(point) -> Dict[str, Rat]:
        out = {}
        for i, name in enumerate(comp.names):
            out[name] = point[pos_of[i]] if i in pos_of else rat(0)
        return out

    budget = [cap]

    def tick():
        stats.nodes += 1
        budget[0] -= 1
        if budget[0] < 0:
            raise _BudgetExhausted

    def leaf_sign_ok(entry, point) -> bool:
        value = eval_entry(entry, point)
        return value > 0 if comp.orthant else value != 0

    def signed_leaf_check(zero_entries, pos_entries):
        """Non-orthant leaf: branch the signs of the nonzero forms."""

        def rec(pos_idx, rows):
            stats.lp_calls += 1
            res = ratlp.solve_lp(objective, rows, n_vars)
            if res.status != ratlp.OPTIMAL or res.objective <= 0:
                return None
            if pos_idx == len(pos_entries):
                return res.x[:-1]
            _, const, items = pos_entries[pos_idx]
            plus = (_row(items, n_vars, pos_of, rat(-1)), ratlp.GE, -const)
            minus_coeffs = _row(items, n_vars, pos_of, rat(0))
            minus = ([-c for c in minus_coeffs[:-1]] + [rat(-1)], ratlp.GE, const)
            for row in (plus, minus):
                hit = rec(pos_idx + 1, rows + [row])
                if hit is not None:
                    return hit
            return None

        rows = list(base_rows)
        for _, const, items in zero_entries:
            rows.append((_row(items, n_vars, pos_of, rat(0)), ratlp.EQ, -const))
        return rec(0, rows)

    def dfs(zeros, positives, undecided, point):
        tick()
        lo_val = n_base + len(positives)
        hi_val = lo_val + len(undecided)
        if not any(lo_val <= v <= hi_val for v in remaining):
            return
        if not undecided:
            stats.leaves += 1
            if lo_val in remaining:
                if point is None or not comp.orthant:
                    point = (
                        signed_leaf_check(zeros, positives)
                        if not comp.orthant
                        else solve(zeros, positives, [])
                    )
                if point is not None:
                    found[lo_val] = full_point(point)
                    remaining.discard(lo_val)
            return
        head, rest = undecided[0], undecided[1:]

        # zero branch
        if point is not None and eval_entry(head, point) == 0 and comp.orthant:
            dfs(zeros + [head], positives, rest, point)
        else:
            child = solve(zeros + [head], positives, rest) if comp.orthant else None
            if comp.orthant:
                if child is not None:
                    dfs(zeros + [head], positives, rest, child)
            else:
                # cheap consistency check only; exact test happens at the leaf
                stats.lp_calls += 1
                rows = list(base_rows)
                for _, const, items in zeros + [head]:
                    rows.append((_row(items, n_vars, pos_of, rat(0)), ratlp.EQ, -const))
                res = ratlp.solve_lp(objective, rows, n_vars)
                if res.status == ratlp.OPTIMAL and res.objective > 0:
                    dfs(zeros + [head], positives, rest, None)

        # nonzero branch
        if comp.orthant:
            if point is not None and eval_entry(head, point) > 0:
                dfs(zeros, positives + [head], rest, point)
            else:
                child = solve(zeros, positives + [head], rest)
                if child is not None:
                    dfs(zeros, positives + [head], rest, child)
        else:
            dfs(zeros, positives + [head], rest, None)

    if not any(n_base <= v <= n_base + len(ambiguous) for v in remaining):
        return _RegionOutcome({}, True, stats)

    complete = True
    try:
        tick()
        if comp.orthant:
            start = solve([], [], ambiguous)
            if start is None:
                stats.regions_infeasible += 1
                return _RegionOutcome({}, True, stats)
            dfs([], [], ambiguous, start)
        else:
            dfs([], [], ambiguous, None)
    except _BudgetExhausted:
        complete = False
    return _RegionOutcome(found, complete, stats)


def _row(items, n_vars, pos_of, t_coeff):
    coeffs = [rat(0)] * n_vars
    for p, w in items:
        coeffs[pos_of[p]] = w
    coeffs[-1] = t_coeff
    return coeffs


# -- region enumeration and the public sweep -------------------------------------


def _canonical(sigma: Tuple[int, ...], perm: Sequence[int]) -> bool:
    """True when sigma is the lexicographic representative of its orbit."""
    code = tuple(_CANON_RANK[s] for s in sigma)
    image = sigma
    for _ in range(2):
        image = tuple(image[perm[i]] for i in range(len(perm)))
        if tuple(_CANON_RANK[s] for s in image) < code:
            return False
    return True


def _region_ok(comp: _Compiled, sigma, h_degree_exact, skip_all_zero) -> bool:
    if skip_all_zero and all(s == 0 for s in sigma):
        return False
    if h_degree_exact is not None:
        if not any(
            s != 0 and comp.degrees[i] == h_degree_exact for i, s in enumerate(sigma)
        ):
            return False
    return True


def _explore_block(args):
    comp, sigmas, sought, cap = args
    return [_explore_region(comp, sigma, sought, cap) for sigma in sigmas]


def run_l0_sweep(
    fam: AffineFamily,
    *,
    orthant: Optional[bool] = None,
    sought: Optional[Sequence[int]] = None,
    h_degree_exact: Optional[int] = None,
    skip_all_zero: bool = False,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> L0Report:
    """Determine which sought sparsity values the family attains.

    ``sought`` defaults to every value from 0 to the number of slots.  The
    report's ``certified_absent`` lists sought values proven unattainable;
    it is only populated when the sweep ran to completion (``exhaustive``).
    """
    if orthant is None:
        orthant = fam.orthant_default
    comp = _Compiled(fam, orthant)
    n_slots = len(fam.slots)
    sought_set = (
        frozenset(range(n_slots + 1)) if sought is None else frozenset(int(v) for v in sought)
    )

    total_regions = 1
    for ch in comp.choices:
        total_regions *= len(ch)

    stats = SweepStats()
    found: Dict[int, Dict[str, Rat]] = {}
    exhaustive = True

    if total_regions <= REGION_ENUM_LIMIT:
        perm = fam.symmetry[0] if fam.symmetry else None
        if perm is not None and any(
            comp.choices[i] != comp.choices[perm[i]] for i in range(len(perm))
        ):
            perm = None  # asymmetric bounds: orbit pruning would be unsound
        regions = []
        for sigma in itertools.product(*comp.choices):
            if not _region_ok(comp, sigma, h_degree_exact, skip_all_zero):
                continue
            if perm is not None and not _canonical(sigma, perm):
                continue
            regions.append(sigma)
        stats.regions_total = len(regions)
        cap = max(REGION_NODE_FLOOR, budget // max(1, len(regions)))
        if jobs > 1 and len(regions) > 1:
            blocks = [regions[i::jobs] for i in range(jobs)]
            ordered: Dict[Tuple[int, ...], _RegionOutcome] = {}
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for block, outcomes in zip(
                    blocks,
                    pool.map(
                        _explore_block,
                        [(comp, block, sought_set, cap) for block in blocks],
                    ),
                ):
                    for sigma, outcome in zip(block, outcomes):
                        ordered[sigma] = outcome
            outcomes = [ordered[sigma] for sigma in regions]
        else:
            outcomes = [
                _explore_region(comp, sigma, sought_set, cap) for sigma in regions
            ]
        for outcome in outcomes:
            stats.merge(outcome.stats)
            if not outcome.complete:
                exhaustive = False
            for value, point in outcome.found.items():
                found.setdefault(value, point)
    else:
        # lattice too large to enumerate: depth-first over parameter signs
        budget_left = [budget]

        def assign(idx: int, sigma: List[int]):
            budget_left[0] -= 1
            if budget_left[0] < 0:
                raise _BudgetExhausted
            if idx == len(comp.choices):
                tup = tuple(sigma)
                if not _region_ok(comp, tup, h_degree_exact, skip_all_zero):
                    return
                stats.regions_total += 1
                outcome = _explore_region(comp, tup, sought_set, budget_left[0])
                stats.merge(outcome.stats)
                budget_left[0] -= outcome.stats.nodes
                if not outcome.complete or budget_left[0] < 0:
                    raise _BudgetExhausted
                for value, point in outcome.found.items():
                    found.setdefault(value, point)
                return
            for choice in comp.choices[idx]:
                sigma.append(choice)
                assign(idx + 1, sigma)
                sigma.pop()

        try:
            assign(0, [])
        except _BudgetExhausted:
            exhaustive = False

    achievable = {v: found[v] for v in sorted(found)}
    certified = sorted(sought_set - set(found)) if exhaustive else []
    return L0Report(
        achievable=achievable,
        sought=sought_set,
        certified_absent=certified,
        exhaustive=exhaustive,
        stats=stats,
    )

"""Knuth Optimized Parallel codec and its finite-disparity extension.

An OP schedule is a lattice walk over ``(k, weight)``: each step either flips
one more data bit or raises the parity word weight by one.  Parity weights
span the window ``[p/2 - t, p/2 + t]``, so the walk has ``J = n + 2t`` steps
ending at ``k = n - 1``.  Along the walk the codeword disparity
``v(u_j) + v(w^(k_j))`` moves by exactly 2 per step and, because the window is
symmetric, starts and (one step past the end) finishes with opposite signs.
Hence it hits zero on the walk.  For ``d > 0`` a covering subset of steps is
kept, each walk step lying within ``d`` of a kept one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import islice
from math import ceil, comb

import numpy as np

from .bits import BitWord, popcount, prefix_masks
from .codec import PrefixFlipCodec
from .exceptions import ScheduleInfeasibleError
from .parity import iter_words_of_weight
from .sp import check_params

_INF = float("inf")


def _plan_walk(n: int, d: int, p: int, t: int):
    """Place weight transitions and kept steps for a ``(p, t)`` window.

    Returns a list of ``(level, kept)`` pairs, one per walk step, where
    ``level`` counts transitions taken so far; or ``None`` if no placement
    keeps every weight class within its ``comb(p, weight)`` capacity.

    Among feasible placements the fewest kept steps win; ties prefer lazy
    keeping and early transitions, which makes the plan deterministic.
    """
    J = n + 2 * t
    top = 2 * t
    caps = [comb(p, p // 2 - t + i) for i in range(top + 1)]
    # gap = steps since the last kept one; a virtual kept step sits at -(d+1)
    max_gap = 2 * d

    @lru_cache(maxsize=None)
    def cost(i, level, used, gap):
        if i == J - 1:
            return 0 if level == top and gap <= d else _INF
        best = _INF
        for up, keep in _OPTIONS:
            nxt = _advance(level, used, gap, up, keep)
            if nxt is not None:
                best = min(best, keep + cost(i + 1, *nxt))
        return best

    def _advance(level, used, gap, up, keep):
        level += up
        if level > top:
            return None
        used = 0 if up else used
        if keep:
            if used + 1 > caps[level]:
                return None
            return level, used + 1, 0
        if gap + 1 > max_gap:
            return None
        return level, used, gap + 1

    starts = []
    for keep in (0, 1):
        nxt = _advance(0, 0, d, 0, keep)
        if nxt is not None:
            starts.append((keep + cost(0, *nxt), keep, nxt))
    best = min((s[0] for s in starts), default=_INF)
    if best == _INF:
        return None
    _, keep, state = next(s for s in starts if s[0] == best)
    plan = [(0, bool(keep))]
    remaining = best - keep
    for i in range(J - 1):
        for up, keep in _OPTIONS:
            nxt = _advance(*state, up, keep)
            if nxt is not None and keep + cost(i + 1, *nxt) == remaining:
                break
        else:  # pragma: no cover - cost() guarantees a continuation
            raise AssertionError("walk reconstruction failed")
        plan.append((nxt[0], bool(keep)))
        remaining -= keep
        state = nxt
    cost.cache_clear()
    return plan


# preference order during reconstruction: lazy keeping first, then early transitions
_OPTIONS = ((1, 0), (0, 0), (1, 1), (0, 1))


@lru_cache(maxsize=None)
def _cached_plan(n, d, p, t):
    plan = _plan_walk(n, d, p, t)
    return None if plan is None else tuple(plan)


@lru_cache(maxsize=None)
def op_parity_bits(n: int, d: int) -> tuple[int, int]:
    """Smallest even ``p`` (then smallest ``t``) admitting a feasible schedule.

    Only sizes the code, so ``n`` may exceed the 64-bit codec limit.
    """
    check_params(n, d, limit=None)
    p = 2
    while True:
        for t in range(p // 2 + 1):
            if _cached_plan(n, d, p, t) is not None:
                return p, t
        p += 2


@dataclass(frozen=True)
class OpStep:
    j: int
    k: int
    weight: int
    selected: bool
    u: BitWord | None = None


@dataclass(frozen=True)
class OpSchedule:
    n: int
    d: int
    p: int
    steps: tuple[OpStep, ...]

    @property
    def m(self) -> int:
        return self.n + self.p

    @property
    def window(self) -> tuple[int, int]:
        weights = [s.weight for s in self.steps]
        return min(weights), max(weights)

    @property
    def transitions(self) -> int:
        lo, hi = self.window
        return hi - lo

    @property
    def selected(self) -> tuple[OpStep, ...]:
        return tuple(s for s in self.steps if s.selected)

    def dump(self) -> str:
        lines = []
        for s in self.steps:
            u = str(s.u) if s.u is not None else "-"
            lines.append(f"{s.j} {s.k} {u} {s.weight} {int(s.selected)}\n")
        return "".join(lines)


def build_op_schedule(n: int, d: int, p: int | None = None, t: int | None = None) -> OpSchedule:
    check_params(n, d)
    if p is None:
        p, t = op_parity_bits(n, d)
    elif t is None:
        raise ValueError("t is required when p is given")
    if p % 2 or p < 2 or not 0 <= t <= p // 2:
        raise ValueError(f"invalid parity window p={p}, t={t}")
    plan = _cached_plan(n, d, p, t)
    if plan is None:
        raise ScheduleInfeasibleError(f"no schedule for n={n}, d={d} with p={p}, t={t}")
    lo = p // 2 - t
    pools = {}
    steps = []
    for j, (level, keep) in enumerate(plan):
        weight = lo + level
        u = None
        if keep:
            pool = pools.setdefault(weight, iter_words_of_weight(p, weight))
            u = next(pool)
        steps.append(OpStep(j, j - level, weight, keep, u))
    return OpSchedule(n, d, p, tuple(steps))


@dataclass
class ValidationReport:
    errors: list[str] = field(default_factory=list)
    violations: list[BitWord] = field(default_factory=list)
    checked: int = 0
    exhaustive: bool = False

    @property
    def ok(self) -> bool:
        return not self.errors and not self.violations


def _structural_errors(s: OpSchedule) -> list[str]:
    errors = []
    steps = s.steps
    if not steps:
        return ["schedule has no steps"]
    if [st.j for st in steps] != list(range(len(steps))):
        errors.append("walk indices are not 0..J-1")
    if steps[0].k != 0:
        errors.append(f"walk starts at k={steps[0].k}, expected 0")
    if steps[-1].k != s.n - 1:
        errors.append(f"walk ends at k={steps[-1].k}, expected {s.n - 1}")
    for a, b in zip(steps, steps[1:]):
        if (b.k - a.k, b.weight - a.weight) not in ((1, 0), (0, 1)):
            errors.append(f"step {a.j}->{b.j} moves by ({b.k - a.k}, {b.weight - a.weight})")
    lo, hi = s.window
    if lo + hi != s.p:
        errors.append(f"weight window [{lo}, {hi}] is not symmetric about p/2")
    if steps[-1].weight != hi:
        errors.append("walk does not end at the top of the weight window")
    seen = set()
    usage = {}
    for st in steps:
        if not st.selected:
            continue
        if st.u is None or st.u.length != s.p:
            errors.append(f"step {st.j} has no {s.p}-bit parity word")
            continue
        if st.u.value.bit_count() != st.weight:
            errors.append(f"step {st.j}: parity word {st.u} does not have weight {st.weight}")
        if st.u.value in seen:
            errors.append(f"step {st.j}: parity word {st.u} is used twice")
        seen.add(st.u.value)
        usage[st.weight] = usage.get(st.weight, 0) + 1
    for weight, count in sorted(usage.items()):
        if count > comb(s.p, weight):
            errors.append(f"{count} steps at weight {weight} exceed capacity {comb(s.p, weight)}")
    kept = [st.j for st in steps if st.selected]
    if not kept:
        errors.append("no step is selected")
    else:
        for st in steps:
            if min(abs(st.j - j) for j in kept) > s.d:
                errors.append(f"walk step {st.j} is farther than {s.d} from every selected step")
                break
    return errors


def adversarial_words(n: int) -> np.ndarray:
    ones = (1 << n) - 1
    alt = int("10" * (n // 2), 2)
    return np.array([0, ones, alt, ones ^ alt], dtype=np.uint64)


def validate_op_schedule(s: OpSchedule, samples: int = 100_000, seed: int = 0,
                         exhaustive_limit: int = 16) -> ValidationReport:
    """Check the schedule invariants and that every input has an admissible step.

    Inputs are enumerated exhaustively for ``n <= exhaustive_limit``; beyond
    that a seeded random sample plus all-zeros/all-ones/alternating words.
    """
    report = ValidationReport(errors=_structural_errors(s))
    kept = s.selected
    if not kept or any(st.u is None for st in kept):
        return report
    if s.n <= exhaustive_limit:
        words = np.arange(1 << s.n, dtype=np.uint64)
        report.exhaustive = True
    else:
        rng = np.random.default_rng(seed)
        words = np.concatenate([adversarial_words(s.n), _random_words(rng, s.n, samples)])
    masks = prefix_masks(s.n)
    found = np.zeros(len(words), dtype=bool)
    for st in kept:
        dv = 2 * popcount(words ^ masks[st.k]) - s.n + (2 * st.weight - s.p)
        found |= np.abs(dv) <= 2 * s.d
    report.checked = len(words)
    report.violations = [BitWord(s.n, int(w)) for w in words[~found][:16]]
    return report


def _random_words(rng, n: int, count: int) -> np.ndarray:
    if n == 64:
        return rng.integers(0, 1 << 64, size=count, dtype=np.uint64, endpoint=False)
    return rng.integers(0, 1 << n, size=count, dtype=np.uint64)


@dataclass(frozen=True, eq=False)
class OpCodec(PrefixFlipCodec):
    schedule: OpSchedule
    scheme = "op"

    def __post_init__(self):
        self._init_tables((st.k, st.u) for st in self.schedule.selected)

    @property
    def n(self) -> int:
        return self.schedule.n

    @property
    def d(self) -> int:
        return self.schedule.d

    @property
    def p(self) -> int:
        return self.schedule.p


def build_op_codec(n: int, d: int) -> OpCodec:
    return OpCodec(build_op_schedule(n, d))


def op_encode(codec: OpCodec, w: BitWord) -> BitWord:
    return codec.encode(w)


def op_decode(codec: OpCodec, c: BitWord) -> BitWord:
    return codec.decode(c)

"""Dual-mode evaluation: restriction semantics and maximal-subset semantics.

Truth is relative to a world and an information state.  Box quantifies over
the state, diamond existentially; the two modes differ only on the
conditional:

* YALCIN: `a => c` restricts the state to the worlds satisfying `a` and
  requires `[]c` there (the update-then-test reading).
* KM: `a => c` requires `[]c` on every maximal subset of the state that
  accepts `a` (the Kolodny-MacFarlane reading).

`[a]b` evaluates `b` after restricting the state to the `a`-worlds, in
whichever mode is active.
"""

from __future__ import annotations

from enum import Enum

from .models import Model, PointedContext, WorldSet
from .syntax import (And, Atom, Bottom, Box, Cond, Diamond, Formula, Not, Or,
                     Update)


class SemanticsMode(Enum):
    YALCIN = "yalcin"
    KM = "km"


class _Session:
    """Per-model evaluator with truth masks memoized on (node, state).

    mask(f, x) is the set of *all* worlds w (inside or outside x) at which f
    is true relative to x, as a bitmask.  Modal formulas get the full mask or
    0, since their truth does not depend on the world of evaluation.
    """

    def __init__(self, model: Model, mode: SemanticsMode):
        self.model = model
        self.mode = mode
        self.full = model.full_state()
        self.memo: dict[tuple[int, WorldSet], WorldSet] = {}

    def mask(self, f: Formula, x: WorldSet) -> WorldSet:
        key = (id(f), x)
        got = self.memo.get(key)
        if got is not None:
            return got
        full = self.full
        if isinstance(f, Atom):
            result = self.model.atom_mask(f.name)
        elif isinstance(f, Bottom):
            result = 0
        elif isinstance(f, Not):
            result = full ^ self.mask(f.body, x)
        elif isinstance(f, And):
            result = self.mask(f.left, x) & self.mask(f.right, x)
        elif isinstance(f, Or):
            result = self.mask(f.left, x) | self.mask(f.right, x)
        elif isinstance(f, Box):
            result = full if self.mask(f.body, x) & x == x else 0
        elif isinstance(f, Diamond):
            result = full if self.mask(f.body, x) & x else 0
        elif isinstance(f, Update):
            restricted = self.mask(f.announcement, x) & x
            result = self.mask(f.body, restricted)
        elif isinstance(f, Cond):
            if self.mode is SemanticsMode.YALCIN:
                restricted = self.mask(f.antecedent, x) & x
                result = full if self.mask(f.consequent, restricted) & restricted == restricted else 0
            else:
                result = full
                for sub in self.maximal_subsets(f.antecedent, x):
                    if self.mask(f.consequent, sub) & sub != sub:
                        result = 0
                        break
        else:
            raise TypeError(f"not a formula: {f!r}")
        self.memo[key] = result
        return result

    def is_self_supporting(self, f: Formula, x: WorldSet) -> bool:
        """x accepts f: every world of x satisfies f relative to x itself."""
        return self.mask(f, x) & x == x

    def maximal_subsets(self, f: Formula, x: WorldSet) -> list[WorldSet]:
        supporting = []
        sub = x
        while True:
            if self.is_self_supporting(f, sub):
                supporting.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & x
        maximal = [s for s in supporting
                   if not any(s != t and s & t == s for t in supporting)]
        maximal.sort()
        return maximal


def evaluate(m: Model, ctx: PointedContext, f: Formula, mode: SemanticsMode) -> bool:
    """Truth of f at ctx.world relative to ctx.state."""
    _check_context(m, ctx)
    return bool(_Session(m, mode).mask(f, ctx.state) >> ctx.world & 1)


def truth_set(m: Model, x: WorldSet, f: Formula, mode: SemanticsMode) -> WorldSet:
    """The worlds *of x* at which f holds relative to x (a subset of x)."""
    _check_state(m, x)
    return _Session(m, mode).mask(f, x) & x


def accepts(m: Model, x: WorldSet, f: Formula, mode: SemanticsMode) -> bool:
    """True iff every world of x satisfies f relative to x (vacuous for empty x)."""
    _check_state(m, x)
    return _Session(m, mode).is_self_supporting(f, x)


def maximal_subsets(m: Model, x: WorldSet, f: Formula, mode: SemanticsMode) -> list[WorldSet]:
    """All maximal self-supporting f-subsets of x, in ascending mask order.

    The empty state is always an f-subset, so the result is nonempty, and it
    equals [0] exactly when no nonempty f-subset of x exists.
    """
    _check_state(m, x)
    return _Session(m, mode).maximal_subsets(f, x)


def _check_state(m: Model, x: WorldSet):
    if x & ~m.full_state():
        raise ValueError(f"state {x:#b} mentions worlds >= {m.world_count}")


def _check_context(m: Model, ctx: PointedContext):
    if not 0 <= ctx.world < m.world_count:
        raise ValueError(f"world {ctx.world} out of range")
    _check_state(m, ctx.state)

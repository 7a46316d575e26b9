"""Shared test utilities: seeded random formulas and tiny reference checks."""

from __future__ import annotations

import random

from mightif import (BOT, And, Atom, Box, Cond, Diamond, Formula, Model, Not,
                     Or, PointedContext, SemanticsMode, Update,
                     enumerate_contexts, enumerate_models, evaluate, parse,
                     parse_model)

EXAMPLE_TWO_MODEL = parse_model("worlds 2\nval p: 0\nval q: 1")
BOTH_WORLDS = 0b11


class FormulaGen:
    """Seeded random formula source with a conditional budget."""

    def __init__(self, seed: int, atoms: tuple[str, ...] = ("p", "q", "r"),
                 allow_update: bool = False):
        self.rng = random.Random(seed)
        self.atoms = atoms
        self.allow_update = allow_update

    def nonmodal(self, depth: int) -> Formula:
        if depth == 0 or self.rng.random() < 0.3:
            if self.rng.random() < 0.1:
                return BOT
            return Atom(self.rng.choice(self.atoms))
        op = self.rng.choice(("not", "and", "or"))
        if op == "not":
            return Not(self.nonmodal(depth - 1))
        left, right = self.nonmodal(depth - 1), self.nonmodal(depth - 1)
        return And(left, right) if op == "and" else Or(left, right)

    def modal(self, depth: int) -> Formula:
        """Conditional-free formula (atoms, boolean ops, box, diamond)."""
        if depth == 0 or self.rng.random() < 0.25:
            if self.rng.random() < 0.08:
                return BOT
            return Atom(self.rng.choice(self.atoms))
        op = self.rng.choice(("not", "and", "or", "box", "dia"))
        if op == "not":
            return Not(self.modal(depth - 1))
        if op == "box":
            return Box(self.modal(depth - 1))
        if op == "dia":
            return Diamond(self.modal(depth - 1))
        left, right = self.modal(depth - 1), self.modal(depth - 1)
        return And(left, right) if op == "and" else Or(left, right)

    def conditional(self, depth: int, cond_budget: int) -> Formula:
        """Formula from the full language with at most cond_budget conditionals."""
        f, _ = self._cond(depth, cond_budget)
        return f

    def _cond(self, depth: int, budget: int) -> tuple[Formula, int]:
        if depth == 0 or self.rng.random() < 0.2:
            if self.rng.random() < 0.08:
                return BOT, budget
            return Atom(self.rng.choice(self.atoms)), budget
        ops = ["not", "and", "or", "box", "dia"]
        if budget > 0:
            ops += ["cond", "cond"]
            if self.allow_update:
                ops.append("update")
        op = self.rng.choice(ops)
        if op == "not":
            body, budget = self._cond(depth - 1, budget)
            return Not(body), budget
        if op == "box":
            body, budget = self._cond(depth - 1, budget)
            return Box(body), budget
        if op == "dia":
            body, budget = self._cond(depth - 1, budget)
            return Diamond(body), budget
        if op in ("and", "or"):
            left, budget = self._cond(depth - 1, budget)
            right, budget = self._cond(depth - 1, budget)
            return (And(left, right) if op == "and" else Or(left, right)), budget
        left, budget = self._cond(depth - 1, budget - 1)
        right, budget = self._cond(depth - 1, budget)
        if op == "update":
            return Update(left, right), budget
        return Cond(left, right), budget


def naive_countermodel(f: Formula, mode: SemanticsMode, atoms: list[str],
                       max_worlds: int) -> tuple[Model, PointedContext] | None:
    """Reference search: plain nested loops over the enumerators."""
    for m in enumerate_models(atoms, max_worlds):
        for ctx in enumerate_contexts(m):
            if not evaluate(m, ctx, f, mode):
                return m, ctx
    return None


def assert_equivalent_everywhere(f: Formula, g: Formula, mode: SemanticsMode,
                                 atoms: list[str], max_worlds: int = 2) -> None:
    for m in enumerate_models(atoms, max_worlds):
        for ctx in enumerate_contexts(m):
            assert evaluate(m, ctx, f, mode) == evaluate(m, ctx, g, mode), (
                f"{f} vs {g} differ at {m}, {ctx}")


def p(text: str) -> Formula:
    return parse(text)

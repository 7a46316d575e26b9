"""Axiom schemas and elimination of conditionals for the restriction semantics.

The conditional axioms repackage as reduction biconditionals that push `=>`
inward until it disappears:

  A1:  (f => pi)          <->  [](f -> pi)          (pi nonmodal)
  A2:  (f => (a & b))     <->  (f => a) & (f => b)
  A3:  (f => (a | []b))   <->  (f => a) | (f => b)
  A4:  (f => (a | <>b))   <->  (f => a) | ~(f => ~b)

Elimination normalizes the consequent to depth-one CNF, splits the clauses
with A2, peels the diamond with A4 and each box with A3, and closes with A1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import SideConditionError
from .normal import to_k45_cnf
from .syntax import (BOT, And, Box, Cond, Diamond, Formula, Not, Or, Update,
                     children, conj, iff, implies, is_nonmodal, with_children)


@dataclass(frozen=True)
class AxiomSchema:
    name: str
    arity: int
    nonmodal_slots: tuple[int, ...]
    build: Callable[..., Formula]


def _schemas() -> dict[str, AxiomSchema]:
    defs: dict[str, tuple[int, tuple[int, ...], Callable[..., Formula]]] = {
        "K": (2, (), lambda f, g: implies(Box(implies(f, g)), implies(Box(f), Box(g)))),
        "4": (1, (), lambda f: implies(Diamond(Diamond(f)), Diamond(f))),
        "5": (1, (), lambda f: implies(Diamond(Box(f)), Box(f))),
        "I1": (2, (1,), lambda f, p: iff(Cond(f, p), Box(implies(f, p)))),
        "I2": (3, (), lambda f, a, b: iff(Cond(f, And(a, b)), And(Cond(f, a), Cond(f, b)))),
        "I3": (3, (), lambda f, a, b: implies(Cond(f, a), Cond(f, Or(a, b)))),
        "I4": (2, (), lambda f, a: implies(Cond(f, a), Cond(f, Box(a)))),
        "I5": (3, (), lambda f, a, b: implies(And(Cond(f, Or(a, Box(b))), Not(Cond(f, b))),
                                              Cond(f, a))),
        "I6": (3, (), lambda f, a, b: implies(And(Cond(f, Or(a, Diamond(b))), Cond(f, Not(b))),
                                              Cond(f, a))),
        "I7": (2, (), lambda f, b: implies(Not(Cond(f, b)), Cond(f, Diamond(Not(b))))),
        "A1": (2, (1,), lambda f, p: iff(Cond(f, p), Box(implies(f, p)))),
        "A2": (3, (), lambda f, a, b: iff(Cond(f, And(a, b)), And(Cond(f, a), Cond(f, b)))),
        "A3": (3, (), lambda f, a, b: iff(Cond(f, Or(a, Box(b))), Or(Cond(f, a), Cond(f, b)))),
        "A4": (3, (), lambda f, a, b: iff(Cond(f, Or(a, Diamond(b))),
                                          Or(Cond(f, a), Not(Cond(f, Not(b)))))),
    }
    return {name: AxiomSchema(name, arity, slots, build)
            for name, (arity, slots, build) in defs.items()}


SCHEMAS: dict[str, AxiomSchema] = _schemas()


def instantiate(schema: AxiomSchema | str, parts: list[Formula]) -> Formula:
    """Build a schema instance, enforcing nonmodality side-conditions."""
    if isinstance(schema, str):
        try:
            schema = SCHEMAS[schema]
        except KeyError:
            raise SideConditionError(f"unknown schema {schema!r}") from None
    if len(parts) != schema.arity:
        raise SideConditionError(
            f"{schema.name} takes {schema.arity} parts, got {len(parts)}")
    for slot in schema.nonmodal_slots:
        if not is_nonmodal(parts[slot]):
            raise SideConditionError(
                f"{schema.name} requires part {slot} to be nonmodal")
    return schema.build(*parts)


# ---------------------------------------------------------------------------
# Conditional elimination


def _require_cond_free(f: Formula, where: str):
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, (Cond, Update)):
            raise ValueError(f"reduce_step requires a conditional-free {where}")
        stack.extend(children(g))


def reduce_step(f: Cond) -> Formula:
    """Rewrite one conditional whose sides are conditional-free into the
    box/diamond fragment, preserving truth at every context."""
    if not isinstance(f, Cond):
        raise ValueError("reduce_step expects a conditional")
    _require_cond_free(f.antecedent, "antecedent")
    _require_cond_free(f.consequent, "consequent")
    antecedent = f.antecedent
    parts = []
    for clause in to_k45_cnf(f.consequent):
        # Base case by A1: f => pi becomes [](f -> pi).
        reduced: Formula = Box(implies(antecedent, clause.pi))
        # Peel each box via A3 then A1.
        for body in clause.boxes:
            reduced = Or(reduced, Box(implies(antecedent, body)))
        # Peel the diamond via A4 then A1 (skipped when vacuous).
        if clause.diamond_part != BOT:
            reduced = Or(reduced, Not(Box(implies(antecedent, Not(clause.diamond_part)))))
        parts.append(reduced)
    return conj(parts)


def eliminate_conditionals(f: Formula) -> Formula:
    """Equivalent conditional-free formula under the restriction semantics.

    Updates are admitted only in the `[a][]b` pattern, which this semantics
    treats as the same operator as `a => b`; any other update is rejected.
    Conditionals are rewritten innermost-first.
    """
    if isinstance(f, Update):
        if not isinstance(f.body, Box):
            raise ValueError("update elimination supports only the [a][]b pattern")
        return eliminate_conditionals(Cond(f.announcement, f.body.body))
    kids = tuple(eliminate_conditionals(k) for k in children(f))
    g = with_children(f, kids)
    if isinstance(g, Cond):
        return reduce_step(g)
    return g

"""Sound-and-complete decision procedures with verified witnesses.

Satisfiability for the box/diamond fragment reads the answer off the
depth-one DNF: a block  pi & []b & <>c_1 & ... & <>c_m  is satisfiable
exactly when pi is propositionally satisfiable and so is each b & c_n; the
witness takes one world for the evaluation point and one per diamond, with
the state being the diamond worlds (empty when m = 0).  Theoremhood for the
full conditional language goes through conditional elimination; validity
for the maximal-subset conditional goes through the translation.  Every
verdict's witness is re-checked by direct evaluation before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceLimitError
from .models import Model, PointedContext, world_mask
from .reduction import eliminate_conditionals
from .semantics import SemanticsMode, accepts, evaluate
from .normal import to_k45_dnf
from .syntax import (And, Box, Formula, Not, atom_names, conj, implies,
                     is_nonmodal)
from .translate import dagger

MAX_SAT_ATOMS = 20


@dataclass(frozen=True, slots=True)
class Verdict:
    """Decision outcome plus a witness: a countermodel for an invalid or
    non-theorem formula, a satisfying context for a satisfiable one."""

    result: bool
    witness: tuple[Model, PointedContext] | None = None


def _assignment_model(assignment: dict[str, bool]) -> Model:
    return Model(1, {name: 1 for name, value in assignment.items() if value})


def satisfying_assignment(f: Formula) -> dict[str, bool] | None:
    """First satisfying assignment of a nonmodal formula in binary counting
    order over its sorted atoms, or None."""
    if not is_nonmodal(f):
        raise ValueError("satisfying_assignment expects a nonmodal formula")
    atoms = sorted(atom_names(f))
    if len(atoms) > MAX_SAT_ATOMS:
        raise ResourceLimitError(f"more than {MAX_SAT_ATOMS} atoms in propositional check")
    k = len(atoms)
    for bits in range(1 << k):
        assignment = {name: bool(bits >> (k - 1 - j) & 1) for j, name in enumerate(atoms)}
        model = _assignment_model(assignment)
        if evaluate(model, PointedContext(0, 1), f, SemanticsMode.YALCIN):
            return assignment
    return None


def prop_sat(f: Formula) -> Verdict:
    """Brute-force propositional satisfiability; witness is a one-world model."""
    assignment = satisfying_assignment(f)
    if assignment is None:
        return Verdict(False)
    model = _assignment_model(assignment)
    ctx = PointedContext(0, 1)
    assert evaluate(model, ctx, f, SemanticsMode.YALCIN)
    return Verdict(True, (model, ctx))


def k45_satisfiable(f: Formula) -> Verdict:
    """Satisfiability of a conditional-free formula, with a small witness."""
    for block in to_k45_dnf(f):
        anchor = satisfying_assignment(block.pi)
        if anchor is None:
            continue
        witnesses = []
        for chi in block.diamonds:
            found = satisfying_assignment(And(block.box_part, chi))
            if found is None:
                break
            witnesses.append(found)
        else:
            atoms = sorted(atom_names(f))
            valuation = {}
            for name in atoms:
                mask = 1 if anchor.get(name) else 0
                for w, assignment in enumerate(witnesses, start=1):
                    if assignment.get(name):
                        mask |= 1 << w
                if mask:
                    valuation[name] = mask
            model = Model(1 + len(witnesses), valuation)
            ctx = PointedContext(0, world_mask(range(1, 1 + len(witnesses))))
            assert evaluate(model, ctx, f, SemanticsMode.YALCIN)
            return Verdict(True, (model, ctx))
    return Verdict(False)


def k45_valid(f: Formula) -> Verdict:
    """Validity of a conditional-free formula; countermodel on failure."""
    sat = k45_satisfiable(Not(f))
    if sat.result:
        model, ctx = sat.witness
        assert not evaluate(model, ctx, f, SemanticsMode.YALCIN)
        return Verdict(False, sat.witness)
    return Verdict(True)


def yalcin_theorem(f: Formula) -> Verdict:
    """Theoremhood for the full language under the restriction semantics.

    Decided by eliminating conditionals and checking validity of the result;
    a countermodel is re-verified against the original formula.
    """
    verdict = k45_valid(eliminate_conditionals(f))
    if not verdict.result:
        model, ctx = verdict.witness
        assert not evaluate(model, ctx, f, SemanticsMode.YALCIN)
    return verdict


def informational_consequence(premises: list[Formula], goal: Formula) -> Verdict:
    """Acceptance-preserving consequence, decided as theoremhood of
    ([]premise_1 & ... & []premise_n) -> []goal.

    A countermodel's state accepts every premise but not the goal.
    """
    boxed_goal = Box(goal)
    if premises:
        query = implies(conj([Box(p) for p in premises]), boxed_goal)
    else:
        query = boxed_goal
    verdict = yalcin_theorem(query)
    if not verdict.result:
        model, ctx = verdict.witness
        assert all(accepts(model, ctx.state, p, SemanticsMode.YALCIN) for p in premises)
        assert not accepts(model, ctx.state, goal, SemanticsMode.YALCIN)
    return verdict


def km_valid(f: Formula) -> Verdict:
    """Validity under the maximal-subset semantics, via the translation.

    A countermodel is re-verified against the original formula in that
    semantics.
    """
    verdict = k45_valid(dagger(f))
    if not verdict.result:
        model, ctx = verdict.witness
        assert not evaluate(model, ctx, f, SemanticsMode.KM)
    return verdict

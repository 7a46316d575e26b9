"""Supervenience checking and the two formulas that express it.

In a state, a target atom depends on (supervenes on) a basis of atoms when
any two worlds of the state agreeing on the basis agree on the target.  The
box fragment can say this with one conjunct per basis state-description
(exponentially many); the maximal-subset conditional says it with one
conjunct per basis atom.  The benchmark tabulates both sizes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceLimitError
from .models import Model, WorldSet, worlds_in
from .syntax import (Atom, Box, Cond, Formula, Not, Or, conj, implies,
                     metrics, valid_atom_name)
from .translate import dagger

MAX_EXPO_BASIS = 16


@dataclass(frozen=True, slots=True)
class DependenceQuery:
    target: str
    basis: tuple[str, ...]

    def __post_init__(self):
        if not self.basis:
            raise ValueError("basis must be nonempty")
        if len(set(self.basis)) != len(self.basis):
            raise ValueError("basis atoms must be distinct")
        if self.target in self.basis:
            raise ValueError("target must not occur in the basis")
        for name in (self.target, *self.basis):
            if not valid_atom_name(name):
                raise ValueError(f"bad atom name {name!r}")


def depends_on(m: Model, x: WorldSet, query: DependenceQuery) -> bool:
    """True iff all worlds of x agreeing on the basis agree on the target
    (vacuously true for states with at most one world)."""
    profiles: dict[tuple[bool, ...], bool] = {}
    target_mask = m.atom_mask(query.target)
    basis_masks = [m.atom_mask(p) for p in query.basis]
    for w in worlds_in(x):
        profile = tuple(bool(mask >> w & 1) for mask in basis_masks)
        value = bool(target_mask >> w & 1)
        if profiles.setdefault(profile, value) != value:
            return False
    return True


def depend_formula(query: DependenceQuery) -> Formula:
    """Linear-size conditional:  (&_i ([]p_i | []~p_i)) => ([]q | []~q)."""
    settled = [Or(Box(Atom(p)), Box(Not(Atom(p)))) for p in query.basis]
    q = Atom(query.target)
    return Cond(conj(settled), Or(Box(q), Box(Not(q))))


def expo_formula(query: DependenceQuery) -> Formula:
    """Exponential-size box formula:  &_s ([](s -> q) | [](s -> ~q))  with s
    ranging over all sign patterns of the basis, all-positive first."""
    n = len(query.basis)
    if n > MAX_EXPO_BASIS:
        raise ResourceLimitError(f"basis of {n} atoms exceeds {MAX_EXPO_BASIS}")
    q = Atom(query.target)
    conjuncts = []
    for bits in range(1 << n):
        literals = [Not(Atom(p)) if bits >> (n - 1 - j) & 1 else Atom(p)
                    for j, p in enumerate(query.basis)]
        s = conj(literals)
        conjuncts.append(Or(Box(implies(s, q)), Box(implies(s, Not(q)))))
    return conj(conjuncts)


@dataclass(frozen=True, slots=True)
class SuccinctnessRow:
    n: int
    depend_nodes: int
    expo_nodes: int
    dagger_nodes: int | None


def succinctness_report(max_n: int, dagger_max_n: int = 2) -> list[SuccinctnessRow]:
    """Size table for basis sizes 1..max_n.

    The translated size of the linear formula is included while the
    translation's subset loops stay small (its antecedent normal form has
    2^n blocks, so the default cutoff is low).
    """
    if not 1 <= max_n <= 12:
        raise ValueError("max_n must be in 1..12")
    rows = []
    for n in range(1, max_n + 1):
        query = DependenceQuery("q", tuple(f"p{i}" for i in range(1, n + 1)))
        linear = depend_formula(query)
        row = SuccinctnessRow(
            n=n,
            depend_nodes=metrics(linear).node_count,
            expo_nodes=metrics(expo_formula(query)).node_count,
            dagger_nodes=metrics(dagger(linear)).node_count if n <= dagger_max_n else None,
        )
        rows.append(row)
    return rows

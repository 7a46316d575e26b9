"""Translation of the maximal-subset conditional into the modal fragment.

A conditional whose sides are in depth-one DNF is compiled into a formula
saying: for every subset K of the antecedent blocks that names a maximal
self-supporting restriction of the current state, the restricted state
satisfies at least one consequent block.  The building pieces:

* info_K:  the nonmodal profile every world of the restriction satisfies;
* good_K:  the K-restriction really accepts the antecedent (its diamond
  conjuncts are witnessed inside the restriction);
* max_K:   no strictly larger info_L-restriction is good;
* state_S: which consequent blocks' nonmodal parts hold at a world.

Conventions for empty index sets: empty conjunction is ~bot, empty
disjunction is bot, applied uniformly.  Output is built literally, with no
simplification.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceLimitError
from .normal import DnfDisjunct, to_k45_dnf
from .syntax import (And, Atom, Bottom, Box, Cond, Diamond, Formula, Not, Or,
                     Update, conj, disj, implies)

SubsetIndex = int  # bitmask into a NamedDnf's disjunct list

# 2^|I| * 2^|J| guard on the translation's subset loops.
MAX_STAR_BLOCKS = 1 << 22


@dataclass(frozen=True, slots=True)
class NamedDnf:
    """An indexed family of depth-one disjuncts (the i-th block is
    disjuncts[i]); index subsets are bitmasks."""

    disjuncts: tuple[DnfDisjunct, ...]

    @classmethod
    def of(cls, f: Formula) -> "NamedDnf":
        return cls(tuple(to_k45_dnf(f)))

    def __len__(self) -> int:
        return len(self.disjuncts)


def _members(subset: SubsetIndex, family: NamedDnf) -> list[int]:
    if subset >> len(family):
        raise IndexError(f"subset {subset:#b} indexes past {len(family)} disjuncts")
    return [i for i in range(len(family)) if subset >> i & 1]


def build_info(subset: SubsetIndex, theta: NamedDnf) -> Formula:
    """(pi_k disjoined over K) & (box bodies conjoined over K)."""
    ks = _members(subset, theta)
    return And(disj([theta.disjuncts[k].pi for k in ks]),
               conj([theta.disjuncts[k].box_part for k in ks]))


def build_good(subset: SubsetIndex, theta: NamedDnf) -> Formula:
    """Each diamond conjunct of each K-block is witnessed inside the
    info_K-restriction."""
    return _good(subset, theta, {subset: build_info(subset, theta)})


def _good(subset: SubsetIndex, theta: NamedDnf, infos: dict[int, Formula]) -> Formula:
    info = infos[subset]
    return conj([Diamond(And(info, chi))
                 for k in _members(subset, theta)
                 for chi in theta.disjuncts[k].diamonds])


def build_max(subset: SubsetIndex, theta: NamedDnf) -> Formula:
    """good_K plus: every info_L-restriction strictly above info_K is not good."""
    infos = {k: build_info(k, theta) for k in range(1 << len(theta))}
    goods = {k: _good(k, theta, infos) for k in infos}
    return _max(subset, theta, infos, goods)


def _max(subset: SubsetIndex, theta: NamedDnf, infos, goods) -> Formula:
    _members(subset, theta)
    info = infos[subset]
    guards = [implies(And(Box(implies(info, infos[other])),
                          Diamond(And(Not(info), infos[other]))),
                      Not(goods[other]))
              for other in range(1 << len(theta))]
    return And(goods[subset], conj(guards))


def build_state(subset: SubsetIndex, omega: NamedDnf) -> Formula:
    """Conjunction fixing which blocks' nonmodal parts hold: alpha_s for s in
    the subset, negated outside it."""
    ss = set(_members(subset, omega))
    parts = [omega.disjuncts[j].pi if j in ss else Not(omega.disjuncts[j].pi)
             for j in range(len(omega))]
    return conj(parts)


def star(theta: NamedDnf, omega: NamedDnf) -> Formula:
    """Single-conditional translation of `theta-DNF => omega-DNF`."""
    n_i, n_j = len(theta), len(omega)
    if (1 << n_i) * (1 << n_j) > MAX_STAR_BLOCKS:
        raise ResourceLimitError(
            f"translation blowup: 2^{n_i} * 2^{n_j} subset blocks exceed the cap")
    infos = {k: build_info(k, theta) for k in range(1 << n_i)}
    goods = {k: _good(k, theta, infos) for k in infos}
    top_clauses = []
    for k in range(1 << n_i):
        info = infos[k]
        state_clauses = []
        for s in range(1 << n_j):
            picks = []
            for j in _members(s, omega):
                block = omega.disjuncts[j]
                picks.append(conj([Box(implies(info, block.box_part))]
                                  + [Diamond(And(info, gamma)) for gamma in block.diamonds]))
            state_clauses.append(implies(build_state(s, omega), disj(picks)))
        top_clauses.append(implies(_max(k, theta, infos, goods),
                                   Box(implies(info, conj(state_clauses)))))
    return conj(top_clauses)


def dagger(f: Formula) -> Formula:
    """Conditional-free equivalent under the maximal-subset semantics.

    Homomorphic on everything but conditionals; a conditional is translated
    by putting both (already translated) sides in depth-one DNF and applying
    the single-conditional translation.
    """
    if isinstance(f, (Atom, Bottom)):
        return f
    if isinstance(f, Not):
        return Not(dagger(f.body))
    if isinstance(f, And):
        return And(dagger(f.left), dagger(f.right))
    if isinstance(f, Or):
        return Or(dagger(f.left), dagger(f.right))
    if isinstance(f, Box):
        return Box(dagger(f.body))
    if isinstance(f, Diamond):
        return Diamond(dagger(f.body))
    if isinstance(f, Cond):
        return star(NamedDnf.of(dagger(f.antecedent)), NamedDnf.of(dagger(f.consequent)))
    if isinstance(f, Update):
        raise ValueError("the update operator has no translation; eliminate it first")
    raise TypeError(f"not a formula: {f!r}")

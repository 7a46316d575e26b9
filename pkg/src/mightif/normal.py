"""Negation normal form and depth-one modal normal forms.

Every box/diamond-only formula is equivalent (over these semantics) to a
disjunction of blocks  pi & []beta & <>chi_1 & ... & <>chi_m  and to a
conjunction of blocks  pi | <>beta | []beta_1 | ... | []beta_m  with all
components nonmodal.  The conversion flattens nesting bottom-up with the
extraction rules

  R1:  [](pi | M1 | ... | Mk)  <->  []pi | M1 | ... | Mk
  R2:  <>(pi & M1 & ... & Mk)  <->  <>pi & M1 & ... & Mk

(pi nonmodal, each Mi a box or diamond over a nonmodal body; pi defaults to
bot in R1 and ~bot in R2 when absent), then distributes into blocks.

Distribution prunes as it goes, using truth tables of the nonmodal
components: duplicate and unsatisfiable blocks are dropped (dually,
tautologous clauses), redundant diamonds inside a block and boxes inside a
clause are removed, and blocks that entail a surviving block are discarded.
Without the pruning, translating nested conditionals is hopeless; the
surviving components are kept literally, never rewritten.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceLimitError
from .syntax import (BOT, TOP, And, Atom, Bottom, Box, Cond, Diamond,
                     Formula, Not, Or, Update, conj, disj, render)

MAX_DISTRIBUTION_BLOCKS = 200_000


def _require_modal_only(f: Formula, op: str):
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, (Cond, Update)):
            raise ValueError(f"{op} is defined on conditional-free formulas only")
        if isinstance(g, (Not, Box, Diamond)):
            stack.append(g.body)
        elif isinstance(g, (And, Or)):
            stack.extend((g.left, g.right))


# ---------------------------------------------------------------------------
# Negation normal form


def to_nnf(f: Formula) -> Formula:
    """Push negations to atoms; ~[] becomes <>~ and ~<> becomes []~."""
    _require_modal_only(f, "to_nnf")
    return _nnf(f, False)


def _nnf(f: Formula, negate: bool) -> Formula:
    if isinstance(f, Not):
        return _nnf(f.body, not negate)
    if isinstance(f, (Atom, Bottom)):
        return Not(f) if negate else f
    if isinstance(f, And):
        left, right = _nnf(f.left, negate), _nnf(f.right, negate)
        return Or(left, right) if negate else And(left, right)
    if isinstance(f, Or):
        left, right = _nnf(f.left, negate), _nnf(f.right, negate)
        return And(left, right) if negate else Or(left, right)
    if isinstance(f, Box):
        body = _nnf(f.body, negate)
        return Diamond(body) if negate else Box(body)
    if isinstance(f, Diamond):
        body = _nnf(f.body, negate)
        return Box(body) if negate else Diamond(body)
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Depth-one block types


@dataclass(frozen=True, slots=True)
class DnfDisjunct:
    """pi & []box_part & <>d_1 & ... & <>d_m, all components nonmodal.

    An absent box part is represented as ~bot (so the box is vacuous).
    """

    pi: Formula
    box_part: Formula
    diamonds: tuple[Formula, ...]


@dataclass(frozen=True, slots=True)
class CnfClause:
    """pi | <>diamond_part | []b_1 | ... | []b_m, all components nonmodal.

    An absent diamond part is represented as bot (so the diamond is vacuous).
    """

    pi: Formula
    diamond_part: Formula
    boxes: tuple[Formula, ...]


def disjunct_to_formula(d: DnfDisjunct) -> Formula:
    parts = [d.pi, Box(d.box_part)] + [Diamond(c) for c in d.diamonds]
    return conj(parts)


def clause_to_formula(c: CnfClause) -> Formula:
    parts = [c.pi, Diamond(c.diamond_part)] + [Box(b) for b in c.boxes]
    return disj(parts)


def dnf_to_formula(disjuncts: list[DnfDisjunct]) -> Formula:
    return disj([disjunct_to_formula(d) for d in disjuncts], empty=BOT)


def cnf_to_formula(clauses: list[CnfClause]) -> Formula:
    return conj([clause_to_formula(c) for c in clauses], empty=TOP)


# ---------------------------------------------------------------------------
# Truth tables of nonmodal components (bit a of the table is the value under
# assignment a, atoms ordered as given)


class _Tables:
    def __init__(self, atoms: list[str]):
        self.full = (1 << (1 << len(atoms))) - 1
        self.patterns = {}
        for j, name in enumerate(atoms):
            pattern = 0
            for a in range(1 << len(atoms)):
                if a >> (len(atoms) - 1 - j) & 1:
                    pattern |= 1 << a
            self.patterns[name] = pattern
        self.memo: dict[int, int] = {}

    def of(self, f: Formula) -> int:
        got = self.memo.get(id(f))
        if got is not None:
            return got
        if isinstance(f, Atom):
            t = self.patterns.get(f.name, 0)
        elif isinstance(f, Bottom):
            t = 0
        elif isinstance(f, Not):
            t = self.full ^ self.of(f.body)
        elif isinstance(f, And):
            t = self.of(f.left) & self.of(f.right)
        elif isinstance(f, Or):
            t = self.of(f.left) | self.of(f.right)
        else:
            raise TypeError(f"modal operator in a nonmodal component: {f!r}")
        self.memo[id(f)] = t
        return t


def _antichain(items, tables, redundant):
    """Keep items not made redundant by a kept item; first-in-render-order
    wins among mutually redundant ones."""
    kept: list = []
    for item, table in zip(items, tables):
        if any(redundant(table, kt) for _, kt in kept):
            continue
        kept = [(ki, kt) for ki, kt in kept if not redundant(kt, table)]
        kept.append((item, table))
    return kept


# ---------------------------------------------------------------------------
# Pruned distribution.  A raw block is (lits, boxes, dias): tuples of
# formulas, conjunctive for DNF blocks and disjunctive for CNF clauses.


class _Distributor:
    def __init__(self, tab: _Tables, conjunctive: bool):
        self.tab = tab
        self.conjunctive = conjunctive  # True: DNF blocks; False: CNF clauses

    def blocks(self, f: Formula):
        spread, gather = (Or, And) if self.conjunctive else (And, Or)
        if isinstance(f, spread):
            return self.prune(self.blocks(f.left) + self.blocks(f.right))
        if isinstance(f, gather):
            left, right = self.blocks(f.left), self.blocks(f.right)
            if len(left) * len(right) > MAX_DISTRIBUTION_BLOCKS:
                raise ResourceLimitError("normal-form distribution blowup")
            merged = []
            for la, ba, da in left:
                for lb, bb, db in right:
                    block = self.make(la + lb, ba + bb, da + db)
                    if block is not None:
                        merged.append(block)
            return self.prune(merged)
        if isinstance(f, Box):
            return self.prune([self.make((), (f.body,), ())])
        if isinstance(f, Diamond):
            return self.prune([self.make((), (), (f.body,))])
        block = self.make((f,), (), ())
        return self.prune([block] if block is not None else [])

    def make(self, lits, boxes, dias):
        """Normalize one raw block; None when it is vacuous."""
        of = self.tab.of
        full = self.tab.full
        lits = _dedupe(lits)
        boxes = _dedupe(boxes)
        dias = _dedupe(dias)
        if self.conjunctive:
            t_pi = full
            for l in lits:
                t_pi &= of(l)
            if t_pi == 0:
                return None  # unsatisfiable literal part
            t_box = full
            for b in boxes:
                t_box &= of(b)
            # <>x is redundant when a kept <>y forces it: []box & <>y |= <>x
            dias = [d for d, _ in
                    _antichain(dias, [of(d) for d in dias],
                               lambda t_new, t_kept: _implied(t_box & t_kept, t_new))]
            if any(t_box & of(d) == 0 for d in dias):
                return None  # no world can witness this diamond under the box
        else:
            t_pi = 0
            for l in lits:
                t_pi |= of(l)
            if t_pi == full:
                return None  # tautologous literal part
            t_dia = 0
            for d in dias:
                t_dia |= of(d)
            # []x is redundant in a disjunction when it entails a kept []y
            boxes = [b for b, _ in
                     _antichain(boxes, [of(b) for b in boxes],
                                lambda t_new, t_kept: _implied(t_new, t_kept))]
            if any(t_dia | of(b) == full for b in boxes):
                return None  # the clause cannot be falsified
        return tuple(lits), tuple(boxes), tuple(dias)

    def prune(self, blocks):
        seen = {}
        for block in blocks:
            seen.setdefault(_key(block), block)
        ordered = [seen[k] for k in sorted(seen)]
        tables = [self.signature(b) for b in ordered]
        if self.conjunctive:
            # in a disjunction, a block entailing a kept block is redundant
            redundant = _dnf_entails
        else:
            # in a conjunction, a clause entailed by a kept clause is redundant
            redundant = lambda t_new, t_kept: _cnf_entails(t_kept, t_new)
        return [b for b, _ in _antichain(ordered, tables, redundant)]

    def signature(self, block):
        of = self.tab.of
        lits, boxes, dias = block
        if self.conjunctive:
            t_pi = self.tab.full
            for l in lits:
                t_pi &= of(l)
            t_box = self.tab.full
            for b in boxes:
                t_box &= of(b)
            return t_pi, t_box, tuple(of(d) for d in dias)
        t_pi = 0
        for l in lits:
            t_pi |= of(l)
        t_dia = 0
        for d in dias:
            t_dia |= of(d)
        return t_pi, t_dia, tuple(of(b) for b in boxes)


def _dnf_entails(sig_a, sig_b) -> bool:
    """Sufficient test that DNF block a entails DNF block b: literal and box
    parts strengthen, and each diamond of b is forced by one of a's."""
    t_pi_a, t_box_a, dias_a = sig_a
    t_pi_b, t_box_b, dias_b = sig_b
    return (_implied(t_pi_a, t_pi_b) and _implied(t_box_a, t_box_b)
            and all(any(_implied(t_box_a & xa, xb) for xa in dias_a)
                    for xb in dias_b))


def _cnf_entails(sig_a, sig_b) -> bool:
    """Sufficient test that CNF clause a entails CNF clause b: literal and
    diamond parts weaken, and each box of a entails one of b's."""
    t_pi_a, t_dia_a, boxes_a = sig_a
    t_pi_b, t_dia_b, boxes_b = sig_b
    return (_implied(t_pi_a, t_pi_b) and _implied(t_dia_a, t_dia_b)
            and all(any(_implied(xa, xb) for xb in boxes_b)
                    for xa in boxes_a))


def _implied(t_strong: int, t_weak: int) -> bool:
    return t_strong & ~t_weak == 0


def _dedupe(parts):
    seen = {}
    for part in parts:
        seen.setdefault(render(part), part)
    return [seen[k] for k in sorted(seen)]


def _key(block):
    lits, boxes, dias = block
    return (tuple(render(l) for l in lits), tuple(render(b) for b in boxes),
            tuple(render(d) for d in dias))


# ---------------------------------------------------------------------------
# Flattening to modal depth <= 1


def _flatten(f: Formula, tab: _Tables) -> Formula:
    if isinstance(f, (Atom, Bottom, Not)):
        return f
    if isinstance(f, And):
        return And(_flatten(f.left, tab), _flatten(f.right, tab))
    if isinstance(f, Or):
        return Or(_flatten(f.left, tab), _flatten(f.right, tab))
    if isinstance(f, Box):
        clauses = _Distributor(tab, conjunctive=False).blocks(_flatten(f.body, tab))
        rebuilt = []
        for lits, boxes, dias in clauses:
            rebuilt.append(disj([Box(disj(list(lits), empty=BOT))]
                                + [Box(b) for b in boxes]
                                + [Diamond(d) for d in dias]))
        return conj(rebuilt)
    if isinstance(f, Diamond):
        blocks = _Distributor(tab, conjunctive=True).blocks(_flatten(f.body, tab))
        rebuilt = []
        for lits, boxes, dias in blocks:
            rebuilt.append(conj([Diamond(conj(list(lits), empty=TOP))]
                                + [Box(b) for b in boxes]
                                + [Diamond(d) for d in dias]))
        return disj(rebuilt)
    raise TypeError(f"unexpected node in flattening: {f!r}")


# ---------------------------------------------------------------------------
# Public conversions


def _atoms_of(f: Formula) -> list[str]:
    from .syntax import atom_names
    return sorted(atom_names(f))


def to_k45_dnf(f: Formula) -> list[DnfDisjunct]:
    """Canonical depth-one DNF; the disjunction of the blocks is equivalent
    to f at every pointed context.  Blocks are sorted and duplicate-free."""
    _require_modal_only(f, "to_k45_dnf")
    tab = _Tables(_atoms_of(f))
    raw = _Distributor(tab, conjunctive=True).blocks(_flatten(to_nnf(f), tab))
    grouped = [_group_disjunct(*block) for block in raw]
    unique = {render(disjunct_to_formula(d)): d for d in grouped}
    return [unique[k] for k in sorted(unique)]


def to_k45_cnf(f: Formula) -> list[CnfClause]:
    """Canonical depth-one CNF, dual to to_k45_dnf."""
    _require_modal_only(f, "to_k45_cnf")
    tab = _Tables(_atoms_of(f))
    raw = _Distributor(tab, conjunctive=False).blocks(_flatten(to_nnf(f), tab))
    grouped = [_group_clause(*block) for block in raw]
    unique = {render(clause_to_formula(c)): c for c in grouped}
    return [unique[k] for k in sorted(unique)]


def _group_disjunct(lits, boxes, dias) -> DnfDisjunct:
    lits = [l for l in lits if l != TOP]
    boxes = [b for b in boxes if b != TOP]
    box_part = BOT if any(isinstance(b, Bottom) for b in boxes) else conj(list(boxes), empty=TOP)
    return DnfDisjunct(conj(lits, empty=TOP), box_part, tuple(dias))


def _group_clause(lits, boxes, dias) -> CnfClause:
    lits = [l for l in lits if not isinstance(l, Bottom)]
    dias = [d for d in dias if not isinstance(d, Bottom)]
    diamond_part = TOP if any(d == TOP for d in dias) else disj(list(dias), empty=BOT)
    return CnfClause(disj(lits, empty=BOT), diamond_part, tuple(boxes))

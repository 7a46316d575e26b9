"""Bounded brute-force searches over all small models.

The engine evaluates a formula DAG over *every* valuation of a given atom
set and every information state at once, one numpy table per subformula:
table[m, x] is the bitmask of worlds where the subformula is true in model
m relative to state x.  Witnesses are reported in the same order the naive
nested loops over enumerate_models / enumerate_contexts would find them.

These searches are sound refuters: a returned witness is a real
counterexample, while None only means "none within the bounds".
"""

from __future__ import annotations

import numpy as np

from .errors import ResourceLimitError
from .models import Model, PointedContext, WorldSet
from .semantics import SemanticsMode
from .syntax import (And, Atom, Bottom, Box, Cond, Diamond, Formula, Not, Or,
                     Update, atom_names)

# Hard cap on models * states per block, to keep table memory in check.
MAX_TABLE_CELLS = 1 << 23


# ---------------------------------------------------------------------------
# DAG compilation: postorder op list with last-use info for table freeing.


def _compile(roots: list[Formula]):
    index: dict[int, int] = {}
    ops: list[tuple] = []
    subjects: list[Formula] = []

    def visit(f: Formula) -> int:
        got = index.get(id(f))
        if got is not None:
            return got
        if isinstance(f, Atom):
            op = ("atom", f.name)
        elif isinstance(f, Bottom):
            op = ("bot",)
        elif isinstance(f, Not):
            op = ("not", visit(f.body))
        elif isinstance(f, And):
            op = ("and", visit(f.left), visit(f.right))
        elif isinstance(f, Or):
            op = ("or", visit(f.left), visit(f.right))
        elif isinstance(f, Box):
            op = ("box", visit(f.body))
        elif isinstance(f, Diamond):
            op = ("dia", visit(f.body))
        elif isinstance(f, Cond):
            op = ("cond", visit(f.antecedent), visit(f.consequent))
        elif isinstance(f, Update):
            op = ("update", visit(f.announcement), visit(f.body))
        else:
            raise TypeError(f"not a formula: {f!r}")
        idx = len(ops)
        ops.append(op)
        subjects.append(f)
        index[id(f)] = idx
        return idx

    # Iterative postorder so huge shared formulas cannot blow the stack.
    root_ids = []
    for root in roots:
        stack: list[tuple[Formula, bool]] = [(root, False)]
        while stack:
            node, expanded = stack.pop()
            if id(node) in index:
                continue
            if expanded:
                visit(node)
            else:
                stack.append((node, True))
                for kid in _kids(node):
                    stack.append((kid, False))
        root_ids.append(index[id(root)])
    return ops, root_ids


def _kids(f: Formula):
    if isinstance(f, (Atom, Bottom)):
        return ()
    if isinstance(f, (Not, Box, Diamond)):
        return (f.body,)
    if isinstance(f, (And, Or)):
        return (f.left, f.right)
    if isinstance(f, Cond):
        return (f.antecedent, f.consequent)
    return (f.announcement, f.body)


# ---------------------------------------------------------------------------
# Subset-lattice caches for the maximal-subset conditional.

_SUBSET_CACHE: dict[int, list[list[int]]] = {}
_SUPERSET_CACHE: dict[int, list[list[list[int]]]] = {}


def _subset_tables(n_states: int):
    subs = _SUBSET_CACHE.get(n_states)
    sups = _SUPERSET_CACHE.get(n_states)
    if subs is None:
        subs = []
        sups = []
        for x in range(n_states):
            members = []
            s = x
            while True:
                members.append(s)
                if s == 0:
                    break
                s = (s - 1) & x
            members.reverse()
            subs.append(members)
            sups.append([[t for t in members if t != s and t & s == s]
                         for s in members])
        _SUBSET_CACHE[n_states] = subs
        _SUPERSET_CACHE[n_states] = sups
    return subs, sups


# ---------------------------------------------------------------------------
# Batch evaluation of one (world count, atom set) block.


def _batch_tables(ops, root_ids, n: int, atom_vals: dict[str, np.ndarray],
                  n_models: int, mode: SemanticsMode):
    n_states = 1 << n
    full = np.uint32(n_states - 1)
    zero = np.uint32(0)
    shape = (n_models, n_states)
    xrow = np.arange(n_states, dtype=np.uint32)[None, :]

    # Free each table after its last consumer; keep root tables alive.
    last_use = [i for i in range(len(ops))]
    for i, op in enumerate(ops):
        for child in op[1:]:
            if isinstance(child, int):
                last_use[child] = i
    for r in root_ids:
        last_use[r] = len(ops)

    tables: list[np.ndarray | None] = [None] * len(ops)
    for i, op in enumerate(ops):
        kind = op[0]
        if kind == "atom":
            vals = atom_vals.get(op[1])
            if vals is None:
                # Atoms outside the search list denote the empty proposition,
                # matching Model.atom_mask on models that omit them.
                t = np.broadcast_to(zero, shape)
            else:
                t = np.broadcast_to(vals[:, None], shape)
        elif kind == "bot":
            t = np.broadcast_to(zero, shape)
        elif kind == "not":
            t = full ^ tables[op[1]]
        elif kind == "and":
            t = tables[op[1]] & tables[op[2]]
        elif kind == "or":
            t = tables[op[1]] | tables[op[2]]
        elif kind == "box":
            t = np.where((tables[op[1]] & xrow) == xrow, full, zero)
        elif kind == "dia":
            t = np.where((tables[op[1]] & xrow) != 0, full, zero)
        elif kind == "update":
            restricted = tables[op[1]] & xrow
            t = np.take_along_axis(np.ascontiguousarray(tables[op[2]]), restricted, axis=1)
        elif kind == "cond" and mode is SemanticsMode.YALCIN:
            restricted = tables[op[1]] & xrow
            body = np.take_along_axis(np.ascontiguousarray(tables[op[2]]), restricted, axis=1)
            t = np.where((body & restricted) == restricted, full, zero)
        elif kind == "cond":
            t = _km_table(tables[op[1]], tables[op[2]], n_states, full, zero)
        else:
            raise AssertionError(kind)
        tables[i] = t
        for child in op[1:]:
            if isinstance(child, int) and last_use[child] == i and child not in root_ids:
                tables[child] = None
    return [tables[r] for r in root_ids]


def _km_table(t_ant, t_cons, n_states, full, zero):
    xrow = np.arange(n_states, dtype=np.uint32)[None, :]
    self_supporting = (t_ant & xrow) == xrow        # state accepts the antecedent
    consequent_boxed = (t_cons & xrow) == xrow      # state accepts the consequent
    subs, sups = _subset_tables(n_states)
    n_models = t_ant.shape[0]
    out = np.empty((n_models, n_states), dtype=np.uint32)
    for x in range(n_states):
        ok = np.ones(n_models, dtype=bool)
        members = subs[x]
        for s, strict_sups in zip(members, sups[x]):
            if strict_sups:
                covered = self_supporting[:, strict_sups].any(axis=1)
                maximal = self_supporting[:, s] & ~covered
            else:
                maximal = self_supporting[:, s]
            ok &= ~maximal | consequent_boxed[:, s]
        out[:, x] = np.where(ok, full, zero)
    return out


# ---------------------------------------------------------------------------
# Block iteration over world counts and valuations.


def _infer_atoms(formulas) -> list[str]:
    names: set[str] = set()
    for f in formulas:
        names |= atom_names(f)
    return sorted(names)


def _blocks(atoms: list[str], max_worlds: int):
    """Yields (n, atom valuation arrays, model count) with the model index
    running in the same order as enumerate_models."""
    k = len(atoms)
    for n in range(1, max_worlds + 1):
        n_states = 1 << n
        n_models = 1 << (n * k)
        if n_models * n_states > MAX_TABLE_CELLS:
            raise ResourceLimitError(
                f"{n_models} models x {n_states} states exceeds the table cap; "
                f"reduce atoms or max_worlds")
        midx = np.arange(n_models, dtype=np.uint64)
        vals = {name: ((midx >> np.uint64(n * (k - 1 - j))) & np.uint64(n_states - 1)).astype(np.uint32)
                for j, name in enumerate(atoms)}
        yield n, vals, n_models


def _model_at(n: int, atoms: list[str], model_index: int) -> Model:
    k = len(atoms)
    n_states = 1 << n
    valuation = {}
    for j, name in enumerate(atoms):
        mask = (model_index >> (n * (k - 1 - j))) & (n_states - 1)
        if mask:
            valuation[name] = mask
    return Model(n, valuation)


def _first_context(fail_bits: np.ndarray, n: int) -> PointedContext:
    # Matches enumerate_contexts order: worlds outermost, states ascending.
    for w in range(n):
        hits = np.nonzero((fail_bits >> np.uint32(w)) & np.uint32(1))[0]
        if hits.size:
            return PointedContext(w, int(hits[0]))
    raise AssertionError("no failing context in a failing model")


# ---------------------------------------------------------------------------
# Public searches.


Countermodel = tuple[Model, PointedContext]


def validity_search(f: Formula, mode: SemanticsMode, atoms: list[str] | None = None,
                    max_worlds: int = 3) -> Countermodel | None:
    """First (model, context) falsifying f within the bounds, or None."""
    atoms = _infer_atoms([f]) if atoms is None else list(atoms)
    ops, roots = _compile([f])
    for n, vals, n_models in _blocks(atoms, max_worlds):
        (table,) = _batch_tables(ops, roots, n, vals, n_models, mode)
        full = np.uint32((1 << n) - 1)
        fails = table ^ full
        bad_models = fails.any(axis=1)
        if bad_models.any():
            m_idx = int(np.argmax(bad_models))
            return _model_at(n, atoms, m_idx), _first_context(fails[m_idx], n)
    return None


def equivalence_search(f: Formula, g: Formula, mode: SemanticsMode,
                       atoms: list[str] | None = None,
                       max_worlds: int = 3) -> Countermodel | None:
    """First (model, context) where f and g disagree, or None."""
    atoms = _infer_atoms([f, g]) if atoms is None else list(atoms)
    ops, roots = _compile([f, g])
    for n, vals, n_models in _blocks(atoms, max_worlds):
        tf, tg = _batch_tables(ops, roots, n, vals, n_models, mode)
        diff = tf ^ tg
        bad_models = diff.any(axis=1)
        if bad_models.any():
            m_idx = int(np.argmax(bad_models))
            return _model_at(n, atoms, m_idx), _first_context(diff[m_idx], n)
    return None


CounterState = tuple[Model, WorldSet]


def informational_consequence_bounded(premises: list[Formula], goal: Formula,
                                      atoms: list[str] | None = None,
                                      max_worlds: int = 3) -> CounterState | None:
    """First (model, state) accepting every premise but not the goal, or None.

    A sound refuter for informational consequence; completeness at all model
    sizes is the business of the decision procedures.
    """
    formulas = list(premises) + [goal]
    atoms = _infer_atoms(formulas) if atoms is None else list(atoms)
    ops, roots = _compile(formulas)
    for n, vals, n_models in _blocks(atoms, max_worlds):
        tables = _batch_tables(ops, roots, n, vals, n_models, SemanticsMode.YALCIN)
        xrow = np.arange(1 << n, dtype=np.uint32)[None, :]
        bad = (tables[-1] & xrow) != xrow
        for t in tables[:-1]:
            bad &= (t & xrow) == xrow
        bad_models = bad.any(axis=1)
        if bad_models.any():
            m_idx = int(np.argmax(bad_models))
            x = int(np.argmax(bad[m_idx]))
            return _model_at(n, atoms, m_idx), x
    return None

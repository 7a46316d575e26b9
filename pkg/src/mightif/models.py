"""Finite models, information states as bitmasks, and exhaustive enumeration.

A model is a set of worlds 0..n-1 plus an atom valuation; an information
state is a subset of worlds packed into an int bitmask (bit w set iff world
w is in the state).  Bitmasks make the subset enumeration that dominates
the maximal-subset semantics cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .errors import ModelFormatError
from .syntax import valid_atom_name

MAX_WORLDS = 62

WorldSet = int  # bitmask over worlds 0..n-1


def world_mask(worlds) -> WorldSet:
    mask = 0
    for w in worlds:
        mask |= 1 << w
    return mask


def worlds_in(mask: WorldSet) -> list[int]:
    out = []
    w = 0
    while mask:
        if mask & 1:
            out.append(w)
        mask >>= 1
        w += 1
    return out


@dataclass(frozen=True, slots=True)
class Model:
    """Worlds 0..world_count-1 with a valuation mask per atom.

    Atoms absent from the valuation denote the empty proposition.
    """

    world_count: int
    valuation: dict[str, WorldSet] = field(default_factory=dict)

    def __post_init__(self):
        if not 1 <= self.world_count <= MAX_WORLDS:
            raise ValueError(f"world_count must be in 1..{MAX_WORLDS}")
        full = self.full_state()
        for name, mask in self.valuation.items():
            if mask & ~full:
                raise ValueError(f"valuation of {name!r} mentions worlds >= {self.world_count}")
        # Canonical form: empty propositions are omitted, so equality is
        # semantic identity of the valuation.
        if not all(self.valuation.values()):
            object.__setattr__(self, "valuation",
                               {k: v for k, v in self.valuation.items() if v})

    def full_state(self) -> WorldSet:
        return (1 << self.world_count) - 1

    def atom_mask(self, name: str) -> WorldSet:
        return self.valuation.get(name, 0)


@dataclass(frozen=True, slots=True)
class PointedContext:
    """Evaluation point: a world together with an information state.

    The world is not required to belong to the state; validity quantifies
    over all pairs.
    """

    world: int
    state: WorldSet


# ---------------------------------------------------------------------------
# Model file format


def parse_model(text: str) -> Model:
    """Parse the line-oriented model format.

    `# comment` and blank lines are ignored; the first significant line is
    `worlds N`; each following line is `val <atom>: <i> <j> ...`.
    """
    world_count = None
    valuation: dict[str, WorldSet] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if world_count is None:
            if fields[0] != "worlds" or len(fields) != 2:
                raise ModelFormatError("expected 'worlds N'", lineno)
            try:
                world_count = int(fields[1])
            except ValueError:
                raise ModelFormatError(f"bad world count {fields[1]!r}", lineno) from None
            if not 1 <= world_count <= MAX_WORLDS:
                raise ModelFormatError(f"world count must be in 1..{MAX_WORLDS}", lineno)
            continue
        if fields[0] != "val":
            raise ModelFormatError(f"expected 'val <atom>: ...', got {fields[0]!r}", lineno)
        rest = line[len("val"):].strip()
        name, sep, indices = rest.partition(":")
        name = name.strip()
        if not sep:
            raise ModelFormatError("missing ':' in val line", lineno)
        if not valid_atom_name(name):
            raise ModelFormatError(f"bad atom name {name!r}", lineno)
        if name in valuation:
            raise ModelFormatError(f"duplicate val for atom {name!r}", lineno)
        mask = 0
        for tok in indices.split():
            try:
                w = int(tok)
            except ValueError:
                raise ModelFormatError(f"bad world index {tok!r}", lineno) from None
            if not 0 <= w < world_count:
                raise ModelFormatError(f"world index {w} out of range 0..{world_count - 1}", lineno)
            if mask >> w & 1:
                raise ModelFormatError(f"duplicate world index {w}", lineno)
            mask |= 1 << w
        valuation[name] = mask
    if world_count is None:
        raise ModelFormatError("empty model: no 'worlds N' line")
    return Model(world_count, valuation)


def render_model(m: Model) -> str:
    """Inverse of parse_model (atoms sorted, empty propositions omitted)."""
    lines = [f"worlds {m.world_count}"]
    for name in sorted(m.valuation):
        mask = m.valuation[name]
        if mask:
            lines.append(f"val {name}: " + " ".join(str(w) for w in worlds_in(mask)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Exhaustive enumeration (the oracle substrate)


def enumerate_models(atoms: list[str], max_worlds: int) -> Iterator[Model]:
    """All models with 1..max_worlds worlds and every valuation of `atoms`.

    Deterministic: world counts ascending, then valuations in binary counting
    order with the first atom varying slowest.
    """
    for n in range(1, max_worlds + 1):
        for masks in product(range(1 << n), repeat=len(atoms)):
            yield Model(n, dict(zip(atoms, masks)))


def enumerate_contexts(m: Model) -> Iterator[PointedContext]:
    """All n * 2^n pointed contexts, worlds outermost, states in mask order."""
    n_states = 1 << m.world_count
    for w in range(m.world_count):
        for x in range(n_states):
            yield PointedContext(w, x)

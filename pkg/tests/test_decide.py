import pytest

from mightif import (ResourceLimitError, SemanticsMode, accepts,
                     evaluate, informational_consequence, k45_satisfiable,
                     k45_valid, km_valid, prop_sat, to_k45_dnf, worlds_in,
                     yalcin_theorem)
from mightif.decide import satisfying_assignment
from mightif.oracle import validity_search
from mightif.reduction import SCHEMAS, instantiate

from helpers import FormulaGen, p

YALCIN = SemanticsMode.YALCIN
KM = SemanticsMode.KM


# ---------------------------------------------------------------------------
# Propositional satisfiability


def test_prop_sat_examples():
    assert not prop_sat(p("p & ~p")).result
    verdict = prop_sat(p("p | q"))
    assert verdict.result
    model, ctx = verdict.witness
    assert evaluate(model, ctx, p("p | q"), YALCIN)
    assert not prop_sat(p("(p->q) & (q->r) & p & ~r")).result


def test_prop_sat_requires_nonmodal():
    with pytest.raises(ValueError):
        prop_sat(p("[]p"))


def test_prop_sat_atom_budget():
    big = " & ".join(f"a{i}" for i in range(21))
    with pytest.raises(ResourceLimitError):
        prop_sat(p(big))


def test_satisfying_assignment_is_first_in_binary_order():
    assert satisfying_assignment(p("p | q")) == {"p": False, "q": True}
    assert satisfying_assignment(p("p")) == {"p": True}


# ---------------------------------------------------------------------------
# Modal satisfiability and validity


def test_k45_satisfiable_examples():
    assert not k45_satisfiable(p("[]p & <>~p")).result
    verdict = k45_satisfiable(p("~p & []p"))
    assert verdict.result
    model, ctx = verdict.witness
    assert not ctx.state >> ctx.world & 1, "evaluation world sits outside the state"
    assert evaluate(model, ctx, p("~p & []p"), YALCIN)
    assert not k45_satisfiable(p("bot")).result


def test_k45_satisfiable_rejects_conditionals():
    with pytest.raises(ValueError):
        k45_satisfiable(p("p => q"))


def test_k45_valid_examples():
    assert k45_valid(p("<>[]p -> []p")).result
    assert k45_valid(p("[](p -> q) -> ([]p -> []q)")).result
    verdict = k45_valid(p("[]p -> p"))
    assert not verdict.result
    model, ctx = verdict.witness
    assert not evaluate(model, ctx, p("[]p -> p"), YALCIN)


def test_k45_valid_duality():
    gen = FormulaGen(61)
    from mightif import Not
    for _ in range(60):
        f = gen.modal(3)
        assert k45_valid(f).result == (not k45_satisfiable(Not(f)).result)


def test_witness_state_is_small():
    # The constructed witness uses one world per diamond conjunct plus the
    # evaluation world.
    gen = FormulaGen(71)
    for _ in range(60):
        f = gen.modal(3)
        verdict = k45_satisfiable(f)
        if not verdict.result:
            continue
        model, ctx = verdict.witness
        bound = max((len(d.diamonds) for d in to_k45_dnf(f)), default=0)
        assert len(worlds_in(ctx.state)) <= bound
        assert model.world_count <= bound + 1


def test_decision_agrees_with_bounded_search():
    gen = FormulaGen(83)
    for _ in range(80):
        f = gen.modal(3)
        verdict = k45_valid(f)
        found = validity_search(f, YALCIN, None, 3)
        if verdict.result:
            assert found is None
        else:
            assert found is not None
            model, ctx = verdict.witness
            assert not evaluate(model, ctx, f, YALCIN)


# ---------------------------------------------------------------------------
# Theoremhood for the conditional language


def test_figure_axioms_are_theorems():
    gen = FormulaGen(97)
    for name in sorted(SCHEMAS):
        schema = SCHEMAS[name]
        parts = [gen.nonmodal(2) if slot in schema.nonmodal_slots
                 else gen.conditional(2, 1) for slot in range(schema.arity)]
        assert yalcin_theorem(instantiate(schema, parts)).result, name


def test_non_theorem_gets_a_countermodel():
    verdict = yalcin_theorem(p("(p => q) -> (q => p)"))
    assert not verdict.result
    model, ctx = verdict.witness
    assert not evaluate(model, ctx, p("(p => q) -> (q => p)"), YALCIN)


def test_conditional_negation_theorem():
    # Rejecting a conditional commits one to the possibility conditional.
    assert yalcin_theorem(p("~(p => q) -> (p => <>~q)")).result
    # and the biconditional repackaging of that inference is a theorem too
    assert yalcin_theorem(p("(p => <>~q) <-> ~(p => q) | (p => bot)")).result


# ---------------------------------------------------------------------------
# Informational consequence


def test_consequence_of_empty_premises_vs_validity():
    assert informational_consequence([], p("p | <>~p")).result
    assert not k45_valid(p("p | <>~p")).result


def test_consequence_counterexamples_accept_premises():
    verdict = informational_consequence([p("<>p")], p("p"))
    assert not verdict.result
    model, ctx = verdict.witness
    assert accepts(model, ctx.state, p("<>p"), YALCIN)
    assert not accepts(model, ctx.state, p("p"), YALCIN)


def test_consequence_is_reflexive():
    for text in ("p & q", "[]p | <>q", "p => q"):
        assert informational_consequence([p(text)], p(text)).result


# ---------------------------------------------------------------------------
# Validity for the maximal-subset conditional


def test_km_valid_examples():
    assert km_valid(p("(p & <>~p) => bot")).result
    assert km_valid(p("p => p")).result
    verdict = km_valid(p("([]p | []~p) => q"))
    assert not verdict.result
    model, ctx = verdict.witness
    assert not evaluate(model, ctx, p("([]p | []~p) => q"), KM)


def test_km_valid_agrees_with_bounded_search():
    gen = FormulaGen(113, atoms=("p", "q"))
    for _ in range(40):
        f = gen.conditional(3, 1)
        verdict = km_valid(f)
        found = validity_search(f, KM, None, 3)
        if verdict.result:
            assert found is None
        else:
            assert found is not None


def test_km_valid_rejects_updates():
    with pytest.raises(ValueError):
        km_valid(p("[p]q"))


def test_witnesses_reverify():
    gen = FormulaGen(127, atoms=("p", "q"))
    for _ in range(40):
        f = gen.conditional(2, 1)
        yv = yalcin_theorem(f)
        if not yv.result:
            model, ctx = yv.witness
            assert not evaluate(model, ctx, f, YALCIN)
        kv = km_valid(f)
        if not kv.result:
            model, ctx = kv.witness
            assert not evaluate(model, ctx, f, KM)

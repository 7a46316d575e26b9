"""Spot checks one world-count beyond the standard small-scope bounds.

The three-world bounds in the main suites already decide everything the
procedures claim; running a size up catches any bug hiding exactly at the
boundary (maximality interactions among subsets get strictly richer at
four worlds).
"""

from mightif import (SemanticsMode, cnf_to_formula, dagger as translate_away,
                     dnf_to_formula, eliminate_conditionals, k45_valid,
                     to_k45_cnf, to_k45_dnf)
from mightif.oracle import equivalence_search, validity_search

from helpers import FormulaGen

YALCIN = SemanticsMode.YALCIN
KM = SemanticsMode.KM


def test_translation_faithful_at_four_worlds():
    gen = FormulaGen(314_159, atoms=("p", "q"))
    for _ in range(40):
        f = gen.conditional(3, 2)
        assert equivalence_search(f, translate_away(f), KM, ["p", "q"], 4) is None


def test_elimination_faithful_at_four_worlds():
    gen = FormulaGen(271_828, atoms=("p", "q"))
    for _ in range(40):
        f = gen.conditional(3, 2)
        assert equivalence_search(f, eliminate_conditionals(f), YALCIN, None, 4) is None


def test_validity_decision_agrees_at_four_worlds():
    gen = FormulaGen(161_803, atoms=("p", "q"))
    for _ in range(80):
        f = gen.modal(3)
        assert k45_valid(f).result == (validity_search(f, YALCIN, None, 4) is None)


def test_normal_forms_equivalent_at_four_worlds():
    gen = FormulaGen(141_421, atoms=("p", "q"))
    for _ in range(80):
        f = gen.modal(3)
        assert equivalence_search(f, dnf_to_formula(to_k45_dnf(f)), YALCIN, None, 4) is None
        assert equivalence_search(f, cnf_to_formula(to_k45_cnf(f)), YALCIN, None, 4) is None

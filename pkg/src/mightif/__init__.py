"""Workbench for epistemic modals and indicative conditionals."""

from .decide import (Verdict, informational_consequence, k45_satisfiable,
                     k45_valid, km_valid, prop_sat, yalcin_theorem)
from .dependence import (DependenceQuery, depend_formula, depends_on,
                         expo_formula, succinctness_report)
from .errors import (MightifError, ModelFormatError, ParseError, PathError,
                     ResourceLimitError, SideConditionError)
from .models import (Model, PointedContext, WorldSet, enumerate_contexts,
                     enumerate_models, parse_model, render_model, world_mask,
                     worlds_in)
from .normal import (CnfClause, DnfDisjunct, clause_to_formula,
                     cnf_to_formula, disjunct_to_formula, dnf_to_formula,
                     to_k45_cnf, to_k45_dnf, to_nnf)
from .oracle import (equivalence_search, informational_consequence_bounded,
                     validity_search)
from .reduction import SCHEMAS, AxiomSchema, eliminate_conditionals, instantiate, reduce_step
from .semantics import (SemanticsMode, accepts, evaluate, maximal_subsets,
                        truth_set)
from .syntax import (BOT, TOP, And, Atom, Bottom, Box, Cond, Diamond, Formula,
                     FormulaMetrics, Not, Or, Update, atom_names, conj, disj,
                     iff, implies, is_nonmodal, metrics, parse, render,
                     subformula_at, substitute)
from .translate import NamedDnf, build_good, build_info, build_max, build_state, dagger, star

__version__ = "0.1.0"

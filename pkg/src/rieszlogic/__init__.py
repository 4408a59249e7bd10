"""Riesz Logic and the Logic of Equilibrium as a library.

The logic RL talks about abelian lattice-ordered groups: a formula
asserts that its value is positive.  Its sibling BAL asserts equality
with zero over the same models.  The package provides

* :mod:`rieszlogic.syntax` -- formula ASTs, grammar, schema matching
* :mod:`rieszlogic.semantics` -- exact rational vector models
* :mod:`rieszlogic.kernel` -- Hilbert-system proof checking and the
  shipped corpus of derivations
* :mod:`rieszlogic.decide` -- exact validity decisions with
  one-dimensional countermodels
* :mod:`rieszlogic.bridge` -- translations between RL and BAL
* :mod:`rieszlogic.fuzzy` -- the logistic bridge to the unit interval
* :mod:`rieszlogic.distrib` -- term-document count vectors as a lattice
* :mod:`rieszlogic.cli` -- the command-line front end
"""

from .syntax import (
    Formula,
    Imp,
    Join,
    MetaVar,
    ParseError,
    Pos,
    Var,
    Zero,
    ZERO,
    format_formula,
    match_schema,
    parse_bal,
    parse_bal_schema,
    parse_rl,
    parse_rl_schema,
    substitute,
)
from .semantics import (
    Valuation,
    eval_bal,
    eval_rl,
    holds_bal,
    holds_rl,
    parse_valuation,
    random_falsify,
    vector,
)
from .kernel import (
    BAL_AXIOMS,
    CheckReport,
    Proof,
    RL_AXIOMS,
    TheoremLibrary,
    check_proof,
    load_corpus,
    parse_proof,
    register_theorem,
)
from .decide import (
    BudgetExceededError,
    CounterExample,
    MeetJoinNormalForm,
    Valid,
    clause_valid,
    decide_bal_valid,
    decide_equal,
    decide_valid,
    linearize,
)
from .bridge import RlPair, bal_to_rl, check_equivalence, rl_to_bal

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"

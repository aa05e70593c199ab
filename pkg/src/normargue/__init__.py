"""Structured argumentation over a deontic-epistemic action language:
parse formulas, translate normative positions, load rule theories, build
arguments, compute preference-gated defeats, enumerate stable extensions.
"""

from .formula import (And, Atom, Box, Diamond, Formula, Implies, Know, Not,
                      Oblig, Or, Perm, Power, Right, RuleAtom, Stit,
                      UnknownOperator, agents_in, contrary, normalize, parse,
                      print_formula, subformulas)
from .hohfeld import (IncompleteCover, NormativePosition, PositionKind,
                      correlative, generalize, opposite, position_warnings,
                      to_formula)
from .theory import (DanglingRuleAtom, DuplicateId, Premise, Rule, RuleKind,
                     Schemes, Strength, Theory, UnknownAgent, ValidationError,
                     instantiate_schemes, load_theory)
from .arguments import (Argument, Ordering, Preference, classify, compare,
                        construct_arguments)
from .semantics import (ArgumentationFramework, Defeat, DefeatConfig,
                        DefeatKind, TooLarge, acceptance, brute_force_stable,
                        compute_defeats, grounded_extension,
                        stable_extensions, verify_extension)

__version__ = "0.1.0"

"""Argumentation semantics for extended logic programs."""

from .syntax import (Literal, Rule, Program, ParseError, complement, lit, parse_program,
                     render, herbrand_base, semi_normal)
from .arguments import Argument, is_argument, is_minimal, subarguments, minimal_arguments
from .attacks import AttackKind, AttackRelation, undercuts, rebuts, attacks_by, relation, inverse
from .semantics import (JustificationConfig, ArgumentLabelling, Consequences, acceptable,
                        f_operator, least_fixpoint, labelling, consequences)
from .wfsx import (Operator, PseudoInterpretation, ModelResult, Contradiction, gamma, gamma_s,
                   lfp_compose, wfm_p, wfm)
from .dialectic import Move, DialogueTree, legal_moves, prove, provable_conclusion, export_tree
from .generator import GeneratorConfig, gen_program, fixtures
from .suites import SuiteReport, run_suite

__version__ = "0.1.0"

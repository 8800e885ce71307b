"""Exact character-theory toolkit.

Computes character tables of finite groups, lambda-ring operations on
characters (Adams, symmetric and exterior powers), exact eigenvalue multisets,
and the eigenvalue-containment relation between representations; includes a
formal GL2 character ring with an isobaric-type case solver and a numeric
Satake-tuple containment checker.
"""

from .exact import CycNum, Fq, FqField, Rational, cyc_arith, cyc_make, cyc_promote, fq_arith
from .groups import (GroupModel, group_closure, make_alt, make_cyclic, make_dihedral,
                     make_gl2, make_pgl2, make_quaternion, make_sl2, make_sym,
                     parse_group_descriptor, subgroup_tori_and_unipotent)
from .chartab import (CharacterTable, ClassFunction, char_inner,
                      character_table_generic, character_table_gl2_closed_form,
                      trivial_character, regular_character)
from .lambdaops import (EigenMultiset, adams, cf_add, cf_sub, cf_tensor, decompose,
                        eigen_multiset, exterior_power, symmetric_power,
                        exterior_power_from_eigen, symmetric_power_from_eigen)
from .preceq import PreceqReport, preceq_check, preceq_search
from .gl2ring import GL2RingElem, RingExpr, SU2Elem, parse_expr, ring_ext, ring_mul, ring_sym, \
    sym6_isobaric_types, verify_identity
from .satake import SatakeRecord, check_containment, load_satake, sym_power_tuple

__version__ = "0.1.0"

"""Workbench for involutive residuated chains built from lexicographic
group products.

Modules
-------
groups
    Exact ordered abelian groups: integers, rationals, lex products,
    subgroup descriptions, convex-tail splitting.
build
    Constructors for the four partial lex product types and the two
    sublex variants, with precondition checks.
chains
    Element operations on built algebras: multiply, residuate,
    complement, covers, sampling.
decompose
    Peeling at the least strictly positive idempotent, group
    representation trees, rebuild, and lex-product embeddings.
lawcheck
    Seeded sampling checks for the structural laws, the named law
    registry, the four product tables, and homomorphisms.
parsing
    Text forms: algebra specs, element literals, expressions,
    representation trees.
cli
    Command-line front end over all of the above.
"""

from .build import Algebra, build_sublex, build_type, group_leaf, leaf
from .chains import (comp, le, lt, mul, positive_idempotents, res,
                     sample_elem, tau, unit, validate_elem, x_down, x_up)
from .decompose import (RepTree, branch, gamma, group_representation,
                        lex_embedding, phi_nucleus, rebuild,
                        representation_embedding, smallest_pos_idem)
from .errors import (DiscretenessViolated, InvalidElement, InvalidSubgroup,
                     OnlyUnitIdempotent, ParseError, PlexError,
                     PreconditionFailed, StructuralMismatch,
                     SubgroupChainViolated, UnknownLaw, WrongBranch)
from .groups import GroupDesc, lex_group, split_convex_tail
from .lawcheck import (check_fle_laws, check_hom, check_named, check_table,
                       named_law_ids)
from .parsing import (parse_algebra, parse_elem, parse_expr, parse_reptree,
                      print_algebra, print_elem, print_reptree)

__version__ = "0.1.0"

__all__ = [
    "Algebra", "DiscretenessViolated", "GroupDesc", "InvalidElement",
    "InvalidSubgroup", "OnlyUnitIdempotent", "ParseError", "PlexError",
    "PreconditionFailed", "RepTree", "StructuralMismatch",
    "SubgroupChainViolated", "UnknownLaw", "WrongBranch", "branch",
    "build_sublex", "build_type", "check_fle_laws", "check_hom",
    "check_named", "check_table", "comp", "gamma", "group_leaf",
    "group_representation", "le", "leaf", "lex_embedding", "lex_group",
    "lt", "mul", "named_law_ids", "parse_algebra", "parse_elem",
    "parse_expr", "parse_reptree", "phi_nucleus", "positive_idempotents",
    "print_algebra", "print_elem", "print_reptree", "rebuild",
    "representation_embedding", "res", "sample_elem", "smallest_pos_idem",
    "split_convex_tail", "tau", "unit", "validate_elem", "x_down", "x_up",
]

"""tradeforge: exact-arithmetic toolkit for latin bitrades.

Validates partial latin squares and bitrades, separates and classifies
them, computes the genus, constructs the canonical finite abelian group of
a spherical trade through the Smith normal form of its (0,1) presentation
matrix, produces and verifies the canonical embedding, and runs
brute-force embedding searches in cyclic and general finite abelian
groups.  All arithmetic is exact.
"""

from .embedding import (
    ConjectureReport,
    Embedding,
    FullGroupReport,
    Presentation,
    black_group,
    build_presentation,
    canonical_embedding,
    canonical_group,
    conjecture_check,
    full_group,
    verify_embedding,
)
from .errors import TradeForgeError
from .families import (
    fixture,
    fixture_ids,
    fixture_info,
    intercalate,
    non_embeddable,
    spherical_corpus,
    three_rows,
    torank,
    torank_doubled_rows,
    two_rows,
)
from .groups import AbelianGroup, GroupElement, groups_of_order
from .matrix import (
    IntMatrix,
    RationalVector,
    SnfResult,
    determinant,
    permanent,
    permanent_expansion,
    smith_normal_form,
    solve_rational,
)
from .pls import (
    Bitrade,
    Label,
    Pls,
    PsiPermutation,
    Triple,
    apply_isotopy,
    col,
    conjugate,
    is_connected,
    is_separated,
    psi,
    row,
    separate,
    sym,
    triple,
    validate_bitrade,
    validate_pls,
)
from .search import (
    Assignment,
    QuadrangleViolation,
    RowPermutationReport,
    abelian_embed,
    cyclic_embed,
    minimal_abelian_embedding,
    quadrangle_violations,
    row_permutation_test,
)
from .textio import (
    TradeDocument,
    parse_bitrade,
    parse_document,
    parse_pls,
    serialize_bitrade,
    serialize_pls,
)
from .topology import GenusReport, MateSearchResult, find_mates, genus, is_spherical

__version__ = "0.1.0"

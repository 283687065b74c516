"""Exact computation of superderivations, local superderivations and
super-biderivations on generalized quaternion algebras."""

from .algebra import (BASIS_LABELS, BASIS_PARITY, AlgebraParams, Quaternion,
                      algebra, grade_split, jordan_super, lie_super, parity_of)
from .biderivations import (BiderivationDefect, BiderivationSpec,
                            CanonicalFamily, CoefficientReport,
                            biderivation_defect, biderivation_space_maps,
                            canonical_bilinmap, canonical_eval,
                            certify_jj_coefficient, is_super_biderivation,
                            solve_biderivations, symmetry_split)
from .derivations import (DerivationDefect, DerivationParams,
                          derivation_matrix, derivation_space_maps,
                          graded_parts, inner_span_rank, inner_superderivation,
                          is_superderivation, outer_dimension, recover_params,
                          solve_superderivations, superbracket,
                          superderivation_defect)
from .errors import (DomainError, EnumerationTooLargeError,
                     InputNotDerivationError, InternalContradictionError,
                     SuperquatError, UnsupportedRingError)
from .linalg import (BilinMap, LinMap, SolutionSpace, nullspace, rank, rref,
                     solve_linear)
from .local import (LocalVerdict, classify_local, exhaustive_local_check,
                    pointwise_solvable, probe_set)
from .rings import (RingDescriptor, RingElement, prime_field, rationals,
                    residue_ring)

__version__ = "0.1.0"

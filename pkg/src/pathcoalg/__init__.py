"""Exact computations with path coalgebras of quivers and their subcoalgebras."""

from .scalars import QQ, Field, FieldMismatch, PrimeField, Rationals, Residue, parse_field
from .quiver import (Arrow, CondensedQuiver, InfiniteCondensation, Path, PathError, Quiver, QuiverError,
                     QuiverSyntaxError, concat, condense, connected_components, is_connected,
                     max_disjoint_occurrences, parse_quiver, power, reachable, strongly_connected,
                     strongly_connected_components, subpaths, trivial)
from .pathspace import Subspace, Vector, intersect, kernel, member, subspace_sum, tensor
from .coalg import (AmbientMismatch, CrossCheckFailure, CyclePowers, Decision, FiniteDim, NotASubcoalgebra,
                    PathSub, Subcoalgebra, TruncatedPC, arrows_of, associated_quiver, closure, convolve,
                    coradical, counit, delta, dual, hit_left, hit_right, homogeneous_components,
                    is_coidempotent, path_coalgebra_of, path_in_P, paths_of, span_of_paths, vertices_of,
                    wedge, wedge_bound, wedge_dual_oracle, wedge_power)
from .document import Document, DocumentError, format_element, parse_document, parse_element
from .prime import (PrimeVerdict, Status, brute_force_prime, common_superpath, derived_reps_prime,
                    enumerate_subcoalgebras, find_cycle_through, is_prime, ordered_embedding_condition,
                    verify_witness)
from .reduce import (Profile, Reduction, VertexIdempotent, local_prime_profile, phi, reduce_subcoalgebra,
                     reduced_delta)

__version__ = "0.1.0"

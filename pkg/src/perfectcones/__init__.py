"""Exact-arithmetic perfect quadratic forms: minimal vectors, unimodular
equivalence, the perfect-cone (first Voronoi) decomposition of the psd cone,
its face/strata combinatorics, and machine-checked boundary-structure
certificates.
"""

__version__ = "0.1.0"

from .errors import (PerfectConesError, DimensionMismatch, NotPositiveDefinite,
                     NotPSD, NotPerfect, RankTooLow, MinNormMismatch,
                     FacetUnbounded, SearchOverflow, SearchBoundExceeded,
                     DimensionTooLarge, NotMeetingInterior)
from .forms import (evaluate, bilinear, trace_pair, rank1, transform,
                    block_sum, psd_rank, is_positive_definite, root_form,
                    PsdInfo)
from .minvec import MinData, min_data, min_data_rational, vectors_up_to, size_reduce
from .equivalence import (Fingerprint, fingerprint, are_equivalent,
                          isometries_all, automorphisms)
from .voronoi import (PerfectDomain, PerfectClass, Enumeration, ConicCombination,
                      Location, is_perfect, domain, cached_domain, neighbor,
                      enumerate_perfect, locate, reduce_form)
from .facelattice import (Face, faces, subfaces, is_minimal_in_rank,
                          standardize_rays, faces_equivalent, StratumNode,
                          StrataPoset, strata_poset, restrict_poset,
                          posets_isomorphic, codim_complement_check)
from .verify import (Certificate, check_rank1_rays, check_interior,
                     check_product, check_closure, check_codim_one, reverify)

__all__ = [n for n in dir() if not n.startswith("_")]

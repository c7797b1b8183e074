"""Seifert surfaces, quasipositivity certificates and invariants of link diagrams."""

from .bands import BandWord, band_word_expand, band_word_positive_braid
from .bounds import (AlmostPositiveReport, BoundReport, almost_positive_analyze, bound_sbi,
                     bound_star, unknot_estimate, verify_first_invariant_of_cor1_proof)
from .certify import certify_positive, dumps, loads, verify_cert
from .diagram import (DiagramError, LinkDiagram, PreconditionError, add_kink, braid_closure,
                      connected_sum, crossing_sign, format_pd, mirror, parse_braid, parse_diagram,
                      parse_pd, reidemeister1_reduce)
from .embedding import Embedding, faces
from .invariants import alexander, chirality_witness, determinant, signature
from .laurent import LaurentPoly
from .oracle import jones, kauffman_bracket
from .seifert import classify_circles, seifert_smooth, stats
from .seifertform import cycle_basis, seifert_matrix

__version__ = "0.1.0"

"""
Canonical bases and characters for the queer Lie superalgebra q(n).

Modules:
  laurent     Laurent polynomials in q, quantum integers
  weights     weights, Bruhat and dominance orders, blocks
  crystal     crystal operators on Z^n and on dominant weights
  tensor      the natural module, tensor powers, the n = 2 bar involution
  wedge       the q-wedge space and straightening
  canonical   canonical basis, decomposition numbers, E/L transition matrices
  characters  Hall-Littlewood / Schur P functions and module characters
  cli         command-line interface
"""

from .laurent import LaurentPoly, parse_laurent, q, quantum_int, quantum_factorial
from .weights import (bruhat_leq, downarrow_reachable, gl_dominance_leq,
                      lower_block_set, parse_weight, stats)
from .wedge import act_wedge, straighten
from .canonical import (decomposition_column, decomposition_row, e_l_matrices,
                        ucb, ucb_q1, ucb_q1_closed)
from .characters import ch_euler, ch_irreducible, ch_verma_truncated, schur_p

__version__ = "0.1.0"

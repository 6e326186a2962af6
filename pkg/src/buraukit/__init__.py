"""Exact Burau representation of braid groups at roots of unity.

Submodules: ``laurent`` (Z[t, t^-1]), ``cyclotomic`` (Z[x]/Phi_tau),
``braid`` (words), ``burau`` (the representation), ``kernel`` (orders
and kernel witnesses), ``cli``.
"""

from ._core import BACKEND
from .braid import BraidWord, compose, exponent_sum, free_reduce, invert, kernel_word, parse_word
from .burau import (BurauMatrix, a_poly, block_embed, determinant, generator_image,
                    mat_identity, mat_mul, mat_pow, represent, zeta, zeta_power_closed_form)
from .cyclotomic import CyclotomicInt, cyclotomic_poly, embed_complex, eval_at_root
from .kernel import (EvaluatedMatrix, KernelWitness, NotFound, evaluate, make_witness,
                     order_of, predicted_min_k, probe_small_tau, verify_corollary_root)
from .laurent import LaurentPoly, div_exact, eval_complex, poly_from_terms

__version__ = "0.1.0"

"""Uniform block permutations: diagrams, modules, characters and symmetric functions."""
from .combinatorics import enumerate_Ik, enumerate_setpartitions, partitions
from .conjugacy import b_coeff, b_matrix, class_rep, cycletype, merge_set
from .diagram import Diagram, ResourceError, enumerate_monoid, factorize, monoid_size
from .repmod import UniformTableau, act, basis, dim, matrix
from .specht import character_sn, straighten
from .symfunc import E, MultiSym, frob_char, plethysm_schur_expansion

__version__ = "0.1.0"

"""Hecke insertion, growth diagrams and K-jeu de taquin, used to move rows of
stack polyominoes while keeping the longest ne- and se-chains."""
from .bijection import f, phi, phi_inverse, to_ferrers
from .hecke import HeckePair, hecke_insert, insert_word, recover_word
from .linked import LinkedPartition, cgp_bijection, our_bijection
from .polyomino import Filling, Polyomino, chain_stats, count_table, gen_poly
from .tableaux import SetValuedTableau, Tableau

__version__ = "0.1.0"

__all__ = ["Filling", "HeckePair", "LinkedPartition", "Polyomino", "SetValuedTableau", "Tableau",
           "cgp_bijection", "chain_stats", "count_table", "f", "gen_poly", "hecke_insert",
           "insert_word", "our_bijection", "phi", "phi_inverse", "recover_word", "to_ferrers"]

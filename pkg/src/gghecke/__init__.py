"""Generalized graded Hecke algebras of G(r,1,n), their Cherednik realization,
principal series modules, and an irreducibility criterion checked against a
brute-force simplicity oracle."""

from .cyclo import CycloNum, zeta_pow

__all__ = ["CycloNum", "zeta_pow"]

"""Exact-arithmetic invariants of the moduli space of principally polarized
abelian varieties and its compactifications.

Submodules:
  exact            rationals, Bernoulli/zeta values, cyclotomic and Laurent
                   polynomial arithmetic
  tautring         the 2^g-dimensional graded ring on the tautological Chern
                   classes, with socle pairing and rank-reduction quotient
  proportionality  exact top intersection numbers of the Hodge classes and
                   modular-form dimension asymptotics
  symplectic       irreducible symplectic representations: dimensions, weight
                   multiplicities, exact characters at torsion elements
  torsion          torsion conjugacy classes, mass-table ingestion, and the
                   elliptic term of the trace formula
  arthur           level-one cuspidal building blocks and parameter
                   enumeration
  spin             spin/half-spin branching and intersection-cohomology
                   Betti numbers and Hodge diamonds of the minimal
                   compactification
  tables           published reference tables and stable Poincare series
  cli              the `agcoh` command-line front end
"""
from .exact import (LaurentPoly, Rational, bernoulli, cyclotomic,
                    negate_cyclotomic_index, nu_character, zeta_negative)
from .tautring import (RingElement, normal_form, poincare_polynomial,
                       quotient_by_top, socle_pairing)
from .proportionality import (PiScaledRational, compact_dual_degree,
                              lambda1_power, lambda_intersection,
                              modular_form_asymptotics, siegel_volume)
from .symplectic import (HighestWeight, WeightSystem, character_at_torsion,
                         weight_multiplicities, weyl_dimension)
from .torsion import (MassTable, TorsionClass, elliptic_term,
                      enumerate_torsion_classes, parse_mass_table)
from .arthur import (ArthurParameter, BlockKind, BuildingBlock, Registry,
                     enumerate_parameters, ingest_cardinalities, weight_block)
from .spin import (IHResult, TwoVarCharacter, closed_form_oracle, hodge_diamond,
                   ih_betti, nu_decompose, rho_psi, spin_character,
                   standard_weight_lines)
from .tables import reference_table, stable_ih_series, stable_series

__version__ = "0.1.0"

__all__ = [
    "ArthurParameter", "BlockKind", "BuildingBlock", "HighestWeight",
    "IHResult", "LaurentPoly", "MassTable", "PiScaledRational", "Rational",
    "Registry", "RingElement", "TorsionClass", "TwoVarCharacter",
    "WeightSystem", "bernoulli", "character_at_torsion", "closed_form_oracle",
    "compact_dual_degree", "cyclotomic", "elliptic_term",
    "enumerate_parameters", "enumerate_torsion_classes", "hodge_diamond",
    "ih_betti", "ingest_cardinalities", "lambda1_power", "lambda_intersection",
    "modular_form_asymptotics", "negate_cyclotomic_index", "normal_form",
    "nu_character", "nu_decompose", "parse_mass_table", "poincare_polynomial",
    "quotient_by_top", "reference_table", "rho_psi", "siegel_volume",
    "socle_pairing", "spin_character", "stable_ih_series", "stable_series",
    "standard_weight_lines", "weight_block", "weight_multiplicities",
    "weyl_dimension", "zeta_negative",
]

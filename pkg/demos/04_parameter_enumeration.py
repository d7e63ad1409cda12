"""Enumerating level-one discrete parameters.

The built-in registry holds the eleven classified building blocks with top
weight at most 11: the trivial block, five elliptic eigenform blocks D11,
D15, D17, D19, D21, the symmetric square Sym2D11, and four vector-valued
genus-two blocks D19,7, D21,5, D21,9, D21,13.  A parameter is a partition
of the strictly decreasing vector lambda + rho into a central run plus runs
of consecutive integers centered at block weights; its multiplicity is the
product of the block cardinalities.
"""
from agcoh import arthur as ar
from agcoh.symplectic import HighestWeight

reg = ar.Registry.builtin()

print("== trivial coefficients, ranks 1..11 ==")
for g in range(1, 12):
    params = ar.enumerate_parameters(HighestWeight(g, (0,) * g), reg)
    shapes = ", ".join(p.canonical_shape() for p, _ in params)
    print(f"g={g:2d} ({sum(m for _, m in params):2d}): {shapes}")

print("\n== the rank-3 system with weights (1,1,0) is empty ==")
hw = HighestWeight(3, (1, 1, 0))
print(f"lambda + rho = {hw.tau}; parameters: {ar.enumerate_parameters(hw, reg)}")

print("\n== weight blocks of the rank-6 nontrivial shape ==")
hw = HighestWeight(6, (0,) * 6)
param = next(p for p, _ in ar.enumerate_parameters(hw, reg)
             if p.canonical_shape() == "D11[2]+[9]")
block0, d0 = param.principal
print(f"principal [{d0}] covers", sorted(ar.weight_block(block0.kind,
      block0.doubled_weights, d0), reverse=True))
for block, d in param.factors:
    print(f"factor {block.label}[{d}] covers",
          sorted(ar.weight_block(block.kind, block.doubled_weights, d),
                 reverse=True))

print("\n== nonzero systems with one nontrivial entry: rank 2 ==")
for a in range(10):
    hw = HighestWeight(2, (a, a))
    if hw.weight % 2:
        continue
    params = ar.enumerate_parameters(hw, reg)
    if params:
        print(f"lambda = (a,a) = ({a},{a}):",
              ", ".join(p.canonical_shape() for p, _ in params))

print("\n== registry extension ==")
extended = ar.ingest_cardinalities(
    '[{"kind": "symplectic", "doubled_weights": [23], "cardinality": 2}]', reg)
print("ingested a cardinality-2 block S(23); status of weight 23/2 is now",
      extended.center_status(ar.BlockKind.SYMPLECTIC, 23))
try:
    ar.enumerate_parameters(HighestWeight(12, (0,) * 12), reg)
except ar.RegistryIncompleteError as exc:
    print("rank 12 without data fails loudly:", exc)

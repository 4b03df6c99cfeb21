"""phi, mu, the generic gonality and Clifford index of polarizations.

Run:  python demos/04_gonality_invariants.py
"""

from enriques_bn import (
    DivisorClass,
    EXCEPTIONAL_SQUARE_PHI_PAIRS,
    clifford_generic,
    config_i,
    config_ii,
    decompose_isotropic,
    embed_configuration,
    gonality,
)
from enriques_bn.errors import GenusTooSmallError

e1, e2 = embed_configuration(config_ii(2))
f1, f2 = embed_configuration(config_i(2))
g1, g2, g3 = embed_configuration(config_i(3))

samples = [
    ("2E1 + 4E2,  E1.E2 = 1", DivisorClass(2 * f1 + 4 * f2, 0)),
    ("3E1 + 3E2,  E1.E2 = 2", DivisorClass(3 * (e1 + e2), 0)),
    ("E1 + E2 + E3, all pairings 1", DivisorClass(g1 + g2 + g3, 0)),
    ("E1 + E2,    E1.E2 = 2", DivisorClass(e1 + e2, 0)),
]

print("The generic gonality is min{2 phi, mu, floor(L^2/4) + 2}:\n")
for name, L in samples:
    rep = gonality(L)
    mu_str = str(rep.mu.value) if rep.mu.exact else f"> {rep.mu.cap - 2}"
    try:
        cliff = str(clifford_generic(L))
    except GenusTooSmallError as ex:
        cliff = f"{ex.convention_value} (small-genus convention)"
    print(f"  {name}")
    print(f"    L^2 = {L.square:3d}  genus = {rep.genus:3d}  phi = {rep.phi.value}"
          f"  mu = {mu_str}  floor term = {rep.floor_term}")
    print(f"    k = {rep.k}  ({rep.case_label}),  Clifford index {cliff}\n")

print("Exceptional pairs where the floor term wins (always 2 phi - 1):")
for sq, p in sorted(EXCEPTIONAL_SQUARE_PHI_PAIRS):
    print(f"  L^2 = {sq:2d}, phi = {p}:  floor(L^2/4) + 2 = {sq // 4 + 2}"
          f" = 2*{p} - 1")

print("\nEvery effective class decomposes into primitive isotropic pieces:")
for name, L in samples[:3]:
    dec = decompose_isotropic(L)
    parts = " + ".join(f"{a}*E{i+1}" for i, a in enumerate(dec.coefficients))
    print(f"  {name:32s} = {parts}   [{dec.configuration}]")

"""The family L = n(E1 + E2) with E1.E2 = 2: curves that are 4:1 plane
covers and carry a 1-parameter family of minimal pencils.

Run:  python demos/06_plane_cover_family.py
"""

from enriques_bn import (
    DivisorClass,
    config_ii,
    embed_configuration,
    plane_cover_family_report,
    predict_w1d,
)

print("For n >= 3 the class B = E1 + E2 (B^2 = 4, phi(B) = 2) maps the")
print("surface 4:1 to the plane; the curves in n*B pull back degree-n plane")
print("curves, and moving a point on the plane curve sweeps out infinitely")
print("many pencils of degree B.L - 4 = k - 2 on each of them.\n")

print(f"{'n':>3s} {'L^2':>5s} {'genus':>6s} {'phi':>4s} {'k':>4s}"
      f" {'special':>8s} {'g(C_pl)':>8s} {'CS bound':>9s} {'g<=CS':>6s}")
for n in range(3, 9):
    r = plane_cover_family_report(n)
    print(f"{r.n:3d} {r.l_square:5d} {r.genus:6d} {r.phi:4d} {r.k:4d}"
          f" {r.gon_special:8d} {r.plane_genus:8d} {r.cs_bound:9d}"
          f" {str(r.cs_holds):>6s}")

print("\nThe Castelnuovo-Severi inequality never forces these pencils to")
print("come from the plane curve (genus stays below the bound), which is")
print("what makes the family interesting.")

e1, e2 = embed_configuration(config_ii(2))
pred = predict_w1d(DivisorClass(3 * (e1 + e2), 0))
print(f"\nPrediction routing for n = 3: {pred.status} ({pred.reason});")
print(f"infinite family of minimal pencils detected: {pred.infinite_pencil}")

"""Positivity flags and cohomology profiles of divisor classes.

Run:  python demos/03_positivity_cohomology.py
"""

from enriques_bn import (
    DivisorClass,
    basis_vector,
    canonical_torsion_class,
    classify_positivity,
    cohomology,
    divisor_class,
    reference_ample,
)

f = basis_vector(0)
ks = canonical_torsion_class()

samples = [
    ("0", divisor_class([0] * 10)),
    ("K_S", ks),
    ("f (half-pencil)", DivisorClass(f, 0)),
    ("f + K_S", DivisorClass(f, 1)),
    ("2f", DivisorClass(2 * f, 0)),
    ("5f + K_S", DivisorClass(5 * f, 1)),
    ("f + g (reference ample)", reference_ample()),
    ("root class (square -2)", divisor_class([0, 0, 1, 0, 0, 0, 0, 0, 0, 0])),
    ("negative of an ample", -reference_ample()),
]

print(f"{'class':26s} {'square':>6s} {'eff':>4s} {'nef':>4s} {'amp':>4s}"
      f" {'h0':>3s} {'h1':>3s} {'h2':>3s} {'chi':>4s}")
for name, d in samples:
    st = classify_positivity(d)
    c = cohomology(d)
    print(f"{name:26s} {d.square:6d} {str(st.is_effective):>4s}"
          f" {str(st.is_nef):>4s} {str(st.is_ample):>4s}"
          f" {c.h0:3d} {c.h1:3d} {c.h2:3d} {c.chi:4d}")

print("\nThe h1 ladders along an isotropic ray (n*f and n*f + K_S):")
print("  n      :", "  ".join(f"{n}" for n in range(1, 9)))
print("  h1(nf) :", "  ".join(str(cohomology(DivisorClass(n * f, 0)).h1)
                              for n in range(1, 9)))
print("  +K_S   :", "  ".join(str(cohomology(DivisorClass(n * f, 1)).h1)
                              for n in range(1, 9)))

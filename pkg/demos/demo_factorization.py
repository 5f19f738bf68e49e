"""Factoring X^n - 1 through cyclotomic cosets and a pinned root of unity.

Run:  python demos/demo_factorization.py
"""

from addcyc import gf, polyring, structure

n = 7

# Exponent orbits under multiplication by the field size index the factors.
print("cosets mod 7, base 3: ", structure.cyclotomic_cosets(7, 3))
print("cosets mod 7, base 9: ", structure.cyclotomic_cosets(7, 9))

# Over GF(3): two factors, the second staying irreducible of degree 6.
F3 = gf.field(3, 1)
print("\nX^7 - 1 over GF(3):")
for p, coset in polyring.factor_xn_minus_1(7, F3, paper=True):
    print(f"   {str(p):24s} <-> {list(coset)}")

# Over GF(9) the degree-6 factor splits in two, one per 9-coset.
F9 = gf.field(3, 2, paper=True)
print("\nX^7 - 1 over GF(9):")
for p, coset in polyring.factor_xn_minus_1(7, F9, paper=True):
    print(f"   {str(p):24s} <-> {list(coset)}")

# The root everything is anchored to: a primitive 7th root of unity inside
# the splitting field GF(3^6), chosen as generator^((3^6 - 1)/7).
sd = polyring.splitting_data(7, F9, paper=True)
big = sd.splitting_field
print("\nsplitting field:", big)
print("eta' = generator^104; (eta')^7 =", big.pow(sd.eta_prime, 7))

# Coefficients are read back down into the right subfield; asking for an
# impossible target is an error:
try:
    polyring.minimal_poly((1, 2, 4), sd, F3)
except Exception as exc:
    print("\ncoercion of a GF(9)-only factor down to GF(3) fails as it should:")
    print("  ", type(exc).__name__, "-", exc)

"""Tour of the finite-field layer: arithmetic, traces, the twist element.

Run:  python demos/demo_fields.py
"""

from addcyc import gf

# GF(9) in its reference representation: x^2 + 2x + 2 is primitive, so the
# class of x (printed "w") generates the multiplicative group.
F9 = gf.field(3, 2, paper=True)
w = F9.generator
print("GF(9) =", F9)
print("generator w has order", F9.element_order(w))
w2 = F9.mul(w, w)
print("w * w =", gf.format_element(F9, w2), "with coordinates", F9.decode(w2),
      "i.e. w + 1: x^2 reduces to x + 1")

print("\npowers of w:")
print("  ", ", ".join(gf.format_element(F9, F9.pow(w, k)) for k in range(8)))

# The relative trace onto the prime field.
tp = gf.TraceParams(F9, 3, 2)
print("\ntrace onto GF(3):")
for a in [0, 1, w, F9.pow(w, 2)]:
    print(f"   Tr({gf.format_element(F9, a)}) = {gf.trace(a, tp)}")

# The twist element: the least generator power killed by the trace.
gamma = gf.find_gamma(F9, 3)
print("\ntwist element gamma =", gf.format_element(F9, gamma),
      " (gamma + gamma^3 =", F9.add(gamma, F9.pow(gamma, 3)), ")")

# The conjugate-sum bijection is plain Frobenius for quadratic extensions.
print("\nconjugate-sum map on GF(9):")
for a in [1, w, 5]:
    print(f"   psi({gf.format_element(F9, a)}) = "
          f"{gf.format_element(F9, gf.psi(a, F9, 3))}")

# Embeddings into a bigger field are honest ring homomorphisms.
F36 = gf.field(3, 6, paper=True)
sm = gf.subfield_map(F9, F36)
img = sm.embed(w)
print("\nembedding GF(9) -> GF(3^6): w maps to generator power", F36.dlog(img))
print("homomorphism spot check:",
      sm.embed(F9.add(w, 5)) == F36.add(sm.embed(w), sm.embed(5)))

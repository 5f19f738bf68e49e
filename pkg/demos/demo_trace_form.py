"""The twisted trace form, computed two independent ways.

Run:  python demos/demo_trace_form.py
"""

import random

from addcyc import gf
from addcyc.bilinear import context, delta_form, delta_inner, module_law_check

ctx = context(7, 3, 2, paper=True)
rng = random.Random(0)

print("ambient: length-7 vectors over GF(9), F_3-bilinear form")
print("twist gamma =", gf.format_element(ctx.field_qt, ctx.gamma))
print("position Gram block over F_3:\n", ctx.gram_block)

a = ctx.ring.element(rng.randrange(9) for _ in range(7))
b = ctx.ring.element(rng.randrange(9) for _ in range(7))
print("\na =", a)
print("b =", b)

# Route 1: the scalar form, a single F_3 value per vector pair.
print("\n(a, b) =", delta_inner(a, b, ctx))

# Route 2: the algebra-valued form; its coefficient at X^k is the scalar
# form against the k-fold cyclic shift, which ties the two routes together.
form = delta_form(a, b, ctx)
print("[a, b](X) =", form)
print("coefficients == shifted scalar values:",
      all(form.coeffs[k] == delta_inner(a, b.shift(k), ctx) for k in range(7)))

# The algebra form is a module map for the small group algebra.
f = ctx.ring_q.element([1, 2, 0, 1, 0, 0, 2])
print("module laws hold for f =", f, ":", module_law_check(f, a, b, ctx))

# The subfield block is isotropic: the twist kills traces of F_3 values,
# so the all-ones vector pairs to zero with every F_3 vector.
ones = ctx.ring.element([1] * 7)
print("\n(1...1, 1...1) =", delta_inner(ones, ones, ctx),
      "  (the whole F_3^7 subspace is self-orthogonal)")

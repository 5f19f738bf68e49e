"""Good codes: the showcase (7, 9^3, 5) code and the bundled table.

Run:  python demos/demo_good_codes.py           (fast rows only)
      python demos/demo_good_codes.py --all     (adds the sampled big rows)
"""

import sys

from addcyc import codes, refdata
from addcyc.bilinear import context

run_all = "--all" in sys.argv[1:]

# The showcase code: the cyclic span of one primitive idempotent.
ctx = context(7, 3, 2, paper=True)
C = codes.cyclic_span(ctx.atlas.idempotent(1, 0), ctx)
d, exact = codes.min_distance(C)
print(f"showcase code: length 7, |C| = 3^{C.k} = 9^3, d = {d} (exact={exact})")
print("self-orthogonal:", codes.is_self_orthogonal(C, ctx))
print("generator matrix:")
print(codes.generator_matrix_text(C))

dual = codes.dual_delta(C, ctx)
print(f"\ndual code dimension: {dual.k} (= 14 - {C.k}); contains C:",
      C.is_subspace_of(dual))

# The bundled table of good codes, each given by one cyclic generator.
print("\nbundled good-code table:")
for row in refdata.GOOD_CODE_TABLE:
    words = row.q ** (2 * row.k)
    if (row.q, row.n) in refdata.SMALL_EXACT_ROWS:
        rctx = context(row.n, row.q, 2, paper=True)
        code = codes.cyclic_span(row.generator, rctx)
        dd, ex = codes.min_distance(code)
        kind = "exact"
    elif run_all:
        rctx = context(row.n, row.q, 2, paper=True)
        code = codes.cyclic_span(row.generator, rctx)
        dd, ex = codes.min_distance(code, budget=1, samples=500_000, seed=0)
        kind = "sampled bound"
    else:
        print(f"   q={row.q:>2} n={row.n:>2}: (n, ({row.q}^2)^{row.k}, {row.d})"
              f"   [skipped: {words} words; rerun with --all]")
        continue
    print(f"   q={row.q:>2} n={row.n:>2}: (n, ({row.q}^2)^{row.k}, {row.d})"
          f"   computed d = {dd} [{kind}]")

"""Acceptance suite: the binding checks of the deliverable, one per criterion.

Each test prints a `[criterion N] PASS/FAIL` line.  Criterion 3 asserts the
published oracle totals (58 / 28) verbatim; the independent brute-force scan
actually finds 87 / 56 because the published identity-class case list omits
the isotropic prime-subfield option for odd q (Tr(gamma) = 0 makes it
self-orthogonal; three independent routes - the defining sum, the
algebra-valued form, and exact dual computation - all confirm it, and
enumerate_codes(complete=True) reproduces the oracle set exactly).  That
sub-check therefore fails honestly rather than being weakened.
"""

import os
import random
import time

import numpy as np
import pytest

from addcyc import classify, codes, gf, linalg, polyring, refdata
from addcyc.bilinear import context, delta_form, delta_inner, \
    component_split_check, module_law_check

RUN_EXTENDED = os.environ.get("ADDCYC_EXTENDED") == "1"

PROPERTY_INSTANCES = [(3, 2), (5, 2), (7, 3), (5, 3), (7, 5), (3, 5)]


def report(criterion, ok, detail):
    print(f"[criterion {criterion}] {'PASS' if ok else 'FAIL'}: {detail}")


def rand_vec(ctx, rng):
    return ctx.ring.element(rng.randrange(ctx.field_qt.order) for _ in range(ctx.n))


def test_c1_factorisation_reproduction():
    t0 = time.perf_counter()
    fq = gf.field(3, 1, paper=True)
    got_q = [str(p) for p, _ in polyring.factor_xn_minus_1(7, fq, paper=True)]
    fqt = gf.field(3, 2, paper=True)
    got_qt = [str(p) for p, _ in polyring.factor_xn_minus_1(7, fqt, paper=True)]
    elapsed = time.perf_counter() - t0
    ok = (got_q == ["2,1", "1,1,1,1,1,1,1"]
          and got_qt == ["2,1", "2,w^7,w,1", "2,w^5,w^3,1"]
          and elapsed < 1.0)
    report(1, ok, f"factors {got_q} / {got_qt} in {elapsed:.3f}s")
    assert got_q == ["2,1", "1,1,1,1,1,1,1"]
    assert got_qt == ["2,1", "2,w^7,w,1", "2,w^5,w^3,1"]
    assert elapsed < 1.0


def test_c2_idempotent_reproduction():
    t0 = time.perf_counter()
    ctx = context(7, 3, 2, paper=True)
    got = {f"{i},{j}": str(ctx.atlas.idempotents[(i, j)])
           for (i, j) in [(0, 0), (1, 0), (1, 1)]}
    elapsed = time.perf_counter() - t0
    ok = got == refdata.WORKED_IDEMPOTENTS and elapsed < 1.0
    report(2, ok, f"{got} in {elapsed:.3f}s")
    assert got == refdata.WORKED_IDEMPOTENTS
    assert elapsed < 1.0


def test_c3_counts_enumeration_and_oracle():
    t0 = time.perf_counter()
    ctx = context(7, 3, 2, paper=True)
    c_so = classify.count_codes(7, 3, "so", ctx)
    c_sd = classify.count_codes(7, 3, "sd", ctx)
    so_codes = list(classify.enumerate_codes(7, 3, "so", ctx))
    sd_codes = list(classify.enumerate_codes(7, 3, "sd", ctx))
    distinct_ok = (len({c.key() for c in so_codes}) == len(so_codes) == 58
                   and len({c.key() for c in sd_codes}) == len(sd_codes) == 28)
    direct_ok = (all(codes.is_self_orthogonal(c, ctx) for c in so_codes)
                 and all(codes.is_self_dual(c, ctx) for c in sd_codes))
    oracle_so, _ = classify.brute_force_oracle(7, 3, "so", ctx)
    oracle_sd, _ = classify.brute_force_oracle(7, 3, "sd", ctx)
    elapsed = time.perf_counter() - t0
    ok = ((c_so, c_sd) == (58, 28) and distinct_ok and direct_ok
          and (oracle_so, oracle_sd) == (58, 28) and elapsed < 60.0)
    report(3, ok,
           f"counts {c_so}/{c_sd}, enumerated {len(so_codes)}/{len(sd_codes)} "
           f"(distinct, direct checks pass), oracle {oracle_so}/{oracle_sd} "
           f"over 4392 cyclic codes in {elapsed:.1f}s"
           + ("" if (oracle_so, oracle_sd) == (58, 28) else
              " - oracle exceeds the published totals; the published case list"
              " omits the isotropic prime-subfield component at the identity"
              " class for odd q (see module docstring)"))
    assert (c_so, c_sd) == (58, 28)
    assert distinct_ok and direct_ok
    assert elapsed < 60.0
    assert (oracle_so, oracle_sd) == (58, 28), (
        f"brute force finds {oracle_so} self-orthogonal / {oracle_sd} self-dual "
        "cyclic codes; the published 58 / 28 miss the prime-subfield component "
        "option (the complete enumeration reproduces the oracle exactly)")


def test_c4_good_code():
    t0 = time.perf_counter()
    ctx = context(7, 3, 2, paper=True)
    C = codes.cyclic_span(ctx.atlas.idempotent(1, 0), ctx)
    ref = codes.code_from_vectors(refdata.WORKED_GOOD_MATRIX, ctx)
    d, exact = codes.min_distance(C)
    elapsed = time.perf_counter() - t0
    ok = C.k == 6 and C == ref and (d, exact) == (5, True) and elapsed < 5.0
    report(4, ok, f"n=7, |C|=9^3 (k_fq={C.k}), d={d} exact={exact}, "
                  f"row space equals the printed matrix: {C == ref}, {elapsed:.2f}s")
    assert C.k == 6
    assert (d, exact) == (5, True)
    assert C == ref
    assert elapsed < 5.0


def test_c5_table_small_rows_exact():
    t0 = time.perf_counter()
    results = []
    for (q, n) in refdata.SMALL_EXACT_ROWS:
        row = refdata.row_for(q, n)
        ctx = context(n, q, 2, paper=True)
        C = codes.cyclic_span(row.generator, ctx)
        d, exact = codes.min_distance(C)
        results.append((q, n, C.k == 2 * row.k, d, exact))
        assert C.k == 2 * row.k
        assert exact and d == row.d
    elapsed = time.perf_counter() - t0
    ok = elapsed < 120.0
    report(5, ok, f"exact rows {[(q, n, d) for q, n, _, d, _ in results]} "
                  f"in {elapsed:.1f}s")
    assert elapsed < 120.0


@pytest.mark.skipif(not RUN_EXTENDED, reason="3^18-word scan; set ADDCYC_EXTENDED=1")
def test_c5_table_extended_row():
    t0 = time.perf_counter()
    row = refdata.row_for(3, 19)
    ctx = context(19, 3, 2, paper=True)
    C = codes.cyclic_span(row.generator, ctx)
    d, exact = codes.min_distance(C, budget=3 ** 18)
    elapsed = time.perf_counter() - t0
    ok = exact and d == 10 and elapsed < 600.0
    report("5-extended", ok, f"(3,19): d={d} exact={exact} in {elapsed:.0f}s")
    assert exact and d == 10
    assert elapsed < 600.0


def test_c6_table_large_rows_bounded():
    t0 = time.perf_counter()
    small = set(refdata.SMALL_EXACT_ROWS) | set(refdata.EXTENDED_ROWS)
    checked = []
    for row in refdata.GOOD_CODE_TABLE:
        if (row.q, row.n) in small:
            continue
        ctx = context(row.n, row.q, 2, paper=True)
        C = codes.cyclic_span(row.generator, ctx)
        assert C.k == 2 * row.k                      # (a) exact cardinality
        assert codes.is_cyclic(C)                    # (b) cyclicity
        assert codes.is_self_orthogonal(C, ctx)      # (c) exact self-orthogonality
        d, exact = codes.min_distance(C, budget=1, samples=10_000_000, seed=0)
        assert not exact                             # (d) bound-only reporting
        assert d >= row.d, (row.q, row.n, d)
        checked.append((row.q, row.n, d))
    elapsed = time.perf_counter() - t0
    report(6, True, f"{len(checked)} bound-only rows, sampled bounds {checked} "
                    f"(never below the claimed d) in {elapsed:.0f}s")


def test_c7_property_suites():
    t0 = time.perf_counter()
    for (n, q) in PROPERTY_INSTANCES:
        ctx = context(n, q, 2, paper=True)
        fqt = ctx.field_qt
        rng = random.Random(1000 * n + q)

        # conjugate-sum bijection, exhaustive over the field
        images = {gf.psi(a, fqt, q) for a in fqt.elements()}
        assert len(images) == fqt.order
        for a in fqt.elements():
            assert gf.psi_inverse(gf.psi(a, fqt, q), fqt, q) == a

        # scalar-form bilinearity and F_q-valuedness, 1000 random triples
        for _ in range(1000):
            a, b, c = (rand_vec(ctx, rng) for _ in range(3))
            ab = delta_inner(a, b, ctx)
            assert delta_inner(a, b + c, ctx) == ctx.field_q.add(ab, delta_inner(a, c, ctx))
            assert delta_inner(a + b, c, ctx) == ctx.field_q.add(
                delta_inner(a, c, ctx), delta_inner(b, c, ctx))
            lam = rng.randrange(q)
            assert delta_inner(a.scale(lam), b, ctx) == ctx.field_q.mul(lam, ab)
            emb = ctx.embed_scalar(ab)
            assert fqt.pow(emb, q) == emb  # value lies in F_q

        # non-degeneracy: full-rank Gram matrix plus constructive witnesses
        tn = 2 * n
        assert linalg.rank(ctx.field_q, ctx.gram_apply(np.eye(tn, dtype=np.int64))) == tn
        for _ in range(25):
            a = rand_vec(ctx, rng)
            if a.is_zero():
                continue
            j = next(i for i, cc in enumerate(a.coeffs) if cc)
            hit = False
            for dval in range(1, fqt.order):
                vec = [0] * n
                vec[j] = dval
                if delta_inner(a, ctx.ring.element(vec), ctx) != 0:
                    hit = True
                    break
            assert hit

        # algebra form vs scalar form: coefficient identity, 500 pairs, all k
        for _ in range(500):
            a, b = rand_vec(ctx, rng), rand_vec(ctx, rng)
            form = delta_form(a, b, ctx)
            for k in range(n):
                assert form.coeffs[k] == delta_inner(a, b.shift(k), ctx)

        # module laws, 200 random (f, a, b)
        for _ in range(200):
            f = ctx.ring_q.element(rng.randrange(q) for _ in range(n))
            assert module_law_check(f, rand_vec(ctx, rng), rand_vec(ctx, rng), ctx)

        # component splitting, 200 random pairs
        for _ in range(200):
            assert component_split_check(rand_vec(ctx, rng), rand_vec(ctx, rng), ctx)

        # duality dimension identity on all enumerated codes
        tab = ctx.atlas.table
        for C in classify.enumerate_codes(n, q, "so", ctx):
            D = codes.dual_delta(C, ctx)
            kc = codes.decompose(C, ctx).k_over_K
            kd = codes.decompose(D, ctx).k_over_K
            assert all(kc[i] + kd[tab.mu[i]] == 2 for i in range(tab.num_classes))

        # idempotent laws, exhaustive per atlas
        items = sorted(ctx.atlas.idempotents.items())
        total = ctx.ring.zero()
        for (ij, e) in items:
            assert e * e == e
            total = total + e
        for x in range(len(items)):
            for y in range(x + 1, len(items)):
                assert (items[x][1] * items[y][1]).is_zero()
        assert total == ctx.ring.one()

        # automorphism law, 200 random pairs
        for _ in range(200):
            a, b = rand_vec(ctx, rng), rand_vec(ctx, rng)
            for (w, u) in [(q, 1), (1, -1)]:
                assert (a * b).tau(w, u) == a.tau(w, u) * b.tau(w, u)

        # dual dimensions on 100 random codes
        for _ in range(100):
            rows = [[rng.randrange(fqt.order) for _ in range(n)]
                    for _ in range(rng.randrange(1, 2 * n))]
            C = codes.code_from_vectors(rows, ctx)
            assert C.k + codes.dual_delta(C, ctx).k == 2 * n
    elapsed = time.perf_counter() - t0
    report(7, True, f"property suites on {PROPERTY_INSTANCES} in {elapsed:.0f}s")


def test_c8_derived_cross_check():
    t0 = time.perf_counter()
    ctx = context(3, 2, 2, paper=True)
    c_so = classify.count_codes(3, 2, "so", ctx)
    c_sd = classify.count_codes(3, 2, "sd", ctx)
    o_so, _ = classify.brute_force_oracle(3, 2, "so", ctx)
    o_sd, _ = classify.brute_force_oracle(3, 2, "sd", ctx)
    elapsed = time.perf_counter() - t0
    ok = (c_so, c_sd, o_so, o_sd) == (8, 3, 8, 3) and elapsed < 1.0
    report(8, ok, f"(3,2): formula {c_so}/{c_sd} == oracle {o_so}/{o_sd} "
                  f"over 35 cyclic codes in {elapsed:.2f}s")
    assert (c_so, c_sd) == (8, 3)
    assert (o_so, o_sd) == (8, 3)
    assert elapsed < 1.0

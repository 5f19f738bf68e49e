"""The t = 2 classification: option lists, counts, enumeration, oracle."""

import os

import pytest

from addcyc import classify, codes
from addcyc.bilinear import context
from addcyc.errors import InvalidParameterError, TooLargeError


CTX73 = context(7, 3, 2, paper=True)

RUN_SLOW = os.environ.get("ADDCYC_SLOW") == "1"

#: instances whose published option lists are complete as printed
#: (even base cardinality, and any transposed pair has odd d_j)
PUBLISHED_EXACT = [(3, 2), (5, 2), (7, 2), (9, 2), (11, 2)]
#: odd q: the published identity-class list omits the isotropic
#: prime-subfield option; complete=True restores it
PUBLISHED_UNDERCOUNTS = [(7, 3), (5, 3), (3, 5), (1, 3), (4, 3), (8, 3)]


def test_subcode_options_identity_class():
    opts = classify.subcode_options(0, "so", CTX73)
    assert [o.kind for o in opts] == ["zero", "dim1"]
    # q odd: exponent (q+1)/2, i.e. rho^2 = w^2 * e
    w2 = CTX73.field_qt.pow(CTX73.field_qt.generator, 2)
    assert opts[1].vector == CTX73.atlas.idempotent(0, 0).scale(w2)
    sd = classify.subcode_options(0, "sd", CTX73)
    assert [o.kind for o in sd] == ["dim1"]
    # complete mode adds the prime-subfield option
    comp = classify.subcode_options(0, "so", CTX73, complete=True)
    assert [o.kind for o in comp] == ["zero", "dim1", "dim1"]
    assert comp[1].vector == CTX73.atlas.idempotent(0, 0)


def test_subcode_options_swap_class():
    opts = classify.subcode_options(1, "so", CTX73)
    # zero, e_{1,0}, e_{1,1}, and e_{1,0} + rho_{1,1}^(28m) for 0 <= m <= 25
    assert len(opts) == 1 + 2 + 26
    e0, e1 = CTX73.atlas.idempotent(1, 0), CTX73.atlas.idempotent(1, 1)
    rho1 = CTX73.atlas.rho(1, 1)
    assert opts[1].vector == e0 and opts[2].vector == e1
    step = rho1.pow_with_identity(28, e1)
    cur = e1
    for k, choice in enumerate(opts[3:]):
        assert choice.vector == e0 + cur
        cur = cur * step
    # self-dual mode drops only the zero option
    assert len(classify.subcode_options(1, "sd", CTX73)) == 28


def test_subcode_options_q_even():
    ctx = context(3, 2, 2, paper=True)
    opts = classify.subcode_options(0, "so", ctx)
    assert [o.kind for o in opts] == ["zero", "dim1"]
    # k = 0 when q is even: the idempotent itself
    assert opts[1].vector == ctx.atlas.idempotent(0, 0)
    # complete mode adds nothing for even q
    assert len(classify.subcode_options(0, "so", ctx, complete=True)) == 2


def test_requires_t2():
    ctx4 = context(5, 2, 4)
    with pytest.raises(InvalidParameterError):
        classify.count_codes(5, 2, "so", ctx4)
    with pytest.raises(InvalidParameterError):
        list(classify.enumerate_codes(5, 2, "so", ctx4))


def test_counts_reference():
    assert classify.count_codes(7, 3, "so", CTX73) == 58
    assert classify.count_codes(7, 3, "sd", CTX73) == 28
    ctx32 = context(3, 2, 2, paper=True)
    assert classify.count_codes(3, 2, "so", ctx32) == 8   # 2 * (2 + 2)
    assert classify.count_codes(3, 2, "sd", ctx32) == 3


def test_counts_big_integers():
    # counts overflow 32/64-bit ranges for moderately long lengths; stay exact
    ctx = context(47, 2, 2)
    tab = ctx.atlas.table
    assert tab.paired == (1,) and tab.d[1] == 23
    assert classify.count_codes(47, 2, "so", ctx) == 2 * (3 * 2 ** 23 + 6)
    assert classify.count_codes(47, 2, "sd", ctx) == 2 ** 23 + 3
    ctx2 = context(49, 3, 2)
    tab2 = ctx2.atlas.table
    assert tab2.fixed == (1, 2) and tab2.d[1] == 42
    # 49 splits off the length-7 classes as well; evaluate the closed form
    want = 2
    for i in tab2.fixed:
        want *= 3 ** (tab2.d[i] // 2) + 2
    assert classify.count_codes(49, 3, "so", ctx2) == want
    assert want > 2 ** 34


@pytest.mark.parametrize("n,q", PUBLISHED_EXACT + PUBLISHED_UNDERCOUNTS)
def test_enumeration_matches_its_count(n, q):
    ctx = context(n, q, 2, paper=True)
    for mode in ("so", "sd"):
        for complete in (False, True):
            if (n, q) == (8, 3) and not complete:
                continue  # mixed regime: see test_published_pair_lists below
            want = classify.count_codes(n, q, mode, ctx, complete=complete)
            got = sum(1 for _ in classify.enumerate_codes(n, q, mode, ctx,
                                                          complete=complete))
            assert got == want, (n, q, mode, complete)


def test_published_pair_lists():
    # for an even-d transposition the published closed form undercounts even
    # the published-option enumeration (its pair bookkeeping is inconsistent);
    # the complete variants and the oracle agree with each other
    ctx = context(8, 3, 2)
    assert classify.count_codes(8, 3, "so", ctx) == 580
    assert sum(1 for _ in classify.enumerate_codes(8, 3, "so", ctx)) == 660


@pytest.mark.parametrize("n,q", [(3, 2), (5, 2), (7, 2), (7, 3), (5, 3), (3, 5), (4, 3)])
def test_complete_enumeration_equals_oracle(n, q):
    ctx = context(n, q, 2, paper=True)
    for mode in ("so", "sd"):
        keys = set(c.key() for c in classify.enumerate_codes(n, q, mode, ctx,
                                                             complete=True))
        count, oracle_keys = classify.brute_force_oracle(n, q, mode, ctx)
        assert keys == oracle_keys
        assert len(keys) == count == classify.count_codes(n, q, mode, ctx, complete=True)


@pytest.mark.parametrize("n,q", PUBLISHED_EXACT)
def test_published_formula_exact_on_even_q(n, q):
    ctx = context(n, q, 2, paper=True)
    for mode in ("so", "sd"):
        count, _ = classify.brute_force_oracle(n, q, mode, ctx)
        assert count == classify.count_codes(n, q, mode, ctx)


def test_oracle_reference_discrepancy():
    # ground truth at (7, 3): the brute force finds 87 / 56, the published
    # closed forms give 58 / 28; the published codes are a strict subset
    so, so_keys = classify.brute_force_oracle(7, 3, "so", CTX73)
    sd, sd_keys = classify.brute_force_oracle(7, 3, "sd", CTX73)
    assert (so, sd) == (87, 56)
    pub_so = set(c.key() for c in classify.enumerate_codes(7, 3, "so", CTX73))
    pub_sd = set(c.key() for c in classify.enumerate_codes(7, 3, "sd", CTX73))
    assert len(pub_so) == 58 and len(pub_sd) == 28
    assert pub_so < so_keys and pub_sd < sd_keys
    # every extra code is genuinely self-orthogonal: spot-check via duals
    extra = [k for k in so_keys - pub_so]
    assert len(extra) == 29


def test_enumerated_codes_are_sound():
    # soundness via the dual: C subset of its dual (and equality for sd)
    for C in classify.enumerate_codes(7, 3, "so", CTX73, complete=True):
        assert C.is_subspace_of(codes.dual_delta(C, CTX73))
    for C in classify.enumerate_codes(7, 3, "sd", CTX73, complete=True):
        assert codes.dual_delta(C, CTX73) == C


def test_sd_subset_of_so():
    so = set(c.key() for c in classify.enumerate_codes(7, 3, "so", CTX73))
    sd = set(c.key() for c in classify.enumerate_codes(7, 3, "sd", CTX73))
    assert sd < so


def test_duality_dimension_identity_on_enumerated():
    tab = CTX73.atlas.table
    for C in classify.enumerate_codes(7, 3, "so", CTX73):
        D = codes.dual_delta(C, CTX73)
        kc = codes.decompose(C, CTX73).k_over_K
        kd = codes.decompose(D, CTX73).k_over_K
        assert all(kc[i] + kd[tab.mu[i]] == 2 for i in range(tab.num_classes))


def test_pair_options_structure():
    # (7, 2): transposed pair with odd d: every 1-dim choice has exactly one
    # nonzero partner, and the pair count matches the closed form
    ctx = context(7, 2, 2, paper=True)
    pairs = classify.pair_options(1, "so", ctx)
    assert len(pairs) == 3 * 2 ** 3 + 6
    sd_pairs = classify.pair_options(1, "sd", ctx)
    assert len(sd_pairs) == 2 ** 3 + 3
    # each pair assembles to a self-orthogonal two-component code
    for cj, cmu in pairs[:20]:
        import numpy as np
        rows = np.concatenate([classify.component_rows(cj, ctx),
                               classify.component_rows(cmu, ctx)], axis=0)
        code = codes.AdditiveCode.from_expansion(ctx, rows)
        assert codes.is_self_orthogonal(code, ctx)


def test_oracle_too_large():
    ctx = context(13, 3, 2)
    with pytest.raises(TooLargeError):
        classify.brute_force_oracle(13, 3, "so", ctx)


def test_good_code_report_reference():
    report = classify.good_code_report(7, 3, CTX73)
    assert len(report) == 58
    assert any(r["k_fq"] == 6 and r["d"] == 5 and r["d_exact"] for r in report)
    ctx112 = context(11, 2, 2, paper=True)
    report112 = classify.good_code_report(11, 2, ctx112)
    assert any(r["k_fq"] == 10 and r["d"] == 6 and r["d_exact"] for r in report112)
    assert len(report112) == classify.count_codes(11, 2, "so", ctx112)


def test_good_code_report_finds_19_2_row():
    # the d = 8 code at (19, 2) appears in the classified stream (running the
    # full report with exact distances is deliberately avoided here: it scans
    # 2^18 words for each of 1028 codes)
    from addcyc import refdata
    ctx = context(19, 2, 2, paper=True)
    target = codes.cyclic_span(refdata.row_for(2, 19).generator, ctx)
    assert any(C == target for C in classify.enumerate_codes(19, 2, "so", ctx))
    d, exact = codes.min_distance(target)
    assert (d, exact) == (8, True)


@pytest.mark.parametrize("n,q", [(3, 4), (2, 9), (5, 4)])
def test_prime_power_base_cardinality(n, q):
    # q = p^e with e > 1 exercises the extension-field F_q lane end to end:
    # coordinate expansion over F_q, row reduction over a tabled field, and
    # the component dimension bookkeeping (dim_Fq K_i = d_i, not d_i * e)
    ctx = context(n, q, 2)
    for mode in ("so", "sd"):
        pkeys = set(c.key() for c in classify.enumerate_codes(n, q, mode, ctx))
        assert len(pkeys) == classify.count_codes(n, q, mode, ctx)
        ckeys = set(c.key() for c in classify.enumerate_codes(n, q, mode, ctx,
                                                              complete=True))
        count, okeys = classify.brute_force_oracle(n, q, mode, ctx)
        assert ckeys == okeys
        assert count == classify.count_codes(n, q, mode, ctx, complete=True)
    for C in classify.enumerate_codes(n, q, "sd", ctx):
        assert codes.dual_delta(C, ctx) == C
        dec = codes.decompose(C, ctx)
        assert sum(k * ctx.atlas.table.d[i] for i, k in enumerate(dec.k_over_K)) == C.k


@pytest.mark.skipif(not RUN_SLOW, reason="large oracle; set ADDCYC_SLOW=1")
def test_oracle_7_5():
    ctx = context(7, 5, 2, paper=True)
    so, _ = classify.brute_force_oracle(7, 5, "so", ctx)
    sd, _ = classify.brute_force_oracle(7, 5, "sd", ctx)
    assert so == classify.count_codes(7, 5, "so", ctx, complete=True)
    assert sd == classify.count_codes(7, 5, "sd", ctx, complete=True)

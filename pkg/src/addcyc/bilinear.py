"""The twisted trace bilinear form on GF(q^t)^n and on the group algebra.

Two deliberately independent implementations are kept side by side:

* ``delta_inner`` evaluates the defining sum
  (a, b) = sum_j Tr_{q,t}(gamma * a_j * psi(b_j^(q^(t/2)))) position by
  position, producing a scalar in F_q;
* ``delta_form`` evaluates the polynomial-valued expression
  [a, b] = sum_u tau_{q^u,1}(gamma * a(X) * sum_w tau_{q^(t/2+w),-1}(b(X)))
  inside the group algebra, producing an element with F_q coefficients.

The coefficient of X^k in the second equals (a, sigma^k(b)) under the first,
which the test suite exercises as the master cross-check between the two.

The context also precomputes the coordinate expansion GF(q^t)^n = F_q^(tn)
and the t x t block Gram matrix of the form, which back the vectorised bulk
operations the code layers run on.
"""

from __future__ import annotations

import functools
import math

import numpy as np

from . import gf, linalg
from .errors import (
    FieldMismatchError,
    InvalidParameterError,
    LengthMismatchError,
    NotCoprimeError,
)
from .ring import GroupAlgebraElement, cyclic_ring


class DeltaContext:
    """Ambient data for the twisted trace form on GF(q^t)^n.

    Holds the two fields, the twist element gamma, the F_q coordinate
    expansion of GF(q^t), and (lazily) the ideal atlas for the same
    parameters.
    """

    def __init__(self, n: int, q: int, t: int = 2, *, paper: bool = False,
                 rho_exponents=None):
        if math.gcd(n, q) != 1:
            raise NotCoprimeError(
                f"requires gcd(n, q) = 1 (semisimple group algebra); got n={n}, q={q}")
        import sympy
        fac = sympy.factorint(q)
        if len(fac) != 1:
            raise InvalidParameterError(f"q = {q} is not a prime power")
        (p, e), = fac.items()
        if t % 2 != 0 or t < 2:
            raise InvalidParameterError(f"t = {t} must be an even integer >= 2")
        if t % p == 1:
            raise InvalidParameterError(
                f"t = {t} with t = 1 (mod p = {p}) is outside the supported range")
        self.n, self.q, self.t = n, q, t
        self.p, self.e = p, e
        self.paper = paper
        self._rho_exponents = rho_exponents
        self.field_q = gf.field(p, e, paper=paper)
        self.field_qt = gf.field(p, e * t, paper=paper)
        self.gamma = gf.find_gamma(self.field_qt, q)
        self.ring = cyclic_ring(self.field_qt, n)
        self.ring_q = cyclic_ring(self.field_q, n)
        self._embed_q = gf.subfield_map(self.field_q, self.field_qt)
        self._build_expansion()
        self._build_gram()
        self._atlas = None

    # -- lazy atlas ---------------------------------------------------------------

    @property
    def atlas(self):
        if self._atlas is None:
            from .structure import build_atlas
            self._atlas = build_atlas(self.n, self.q, self.t, paper=self.paper,
                                      rho_exponents=self._rho_exponents)
        return self._atlas

    # -- F_q coordinates on GF(q^t) -------------------------------------------------

    def _build_expansion(self):
        """Choose an F_q-basis of GF(q^t) and tabulate both coordinate maps."""
        fqt, fq = self.field_qt, self.field_q
        p, e, t = self.p, self.e, self.t
        met = fqt.m
        basis = [fqt.pow(fqt.generator, s) for s in range(t)]
        M = self._basis_matrix(basis)
        if _rank_mod_p(M, p) != met:
            basis = self._greedy_basis()
            M = self._basis_matrix(basis)
        self.fq_basis = basis
        Minv = gf._invert_mod_p(M, p)
        assert Minv is not None
        # all-element digit matrix (Q_t x met) -> F_q coordinates (Q_t x t)
        vals = np.arange(fqt.order, dtype=np.int64)
        digs = np.stack([(vals // p ** i) % p for i in range(met)], axis=1)
        coords_p = (digs @ Minv.T) % p
        powers = p ** np.arange(e, dtype=np.int64)
        expand = np.zeros((fqt.order, t), dtype=np.int64)
        for s in range(t):
            expand[:, s] = coords_p[:, s * e:(s + 1) * e] @ powers
        self.expand_table = expand
        compress = {}
        for v in range(fqt.order):
            compress[tuple(int(c) for c in expand[v])] = v
        self._compress_map = compress

    def _basis_matrix(self, basis) -> np.ndarray:
        """Columns are vec_p(embed(w_u) * x_s) for the F_p basis w_u of F_q."""
        fqt = self.field_qt
        p, e = self.p, self.e
        cols = []
        for x in basis:
            for u in range(e):
                w_u = self._embed_q.embed(self.field_q.encode([0] * u + [1]))
                cols.append(fqt.decode(fqt.mul(w_u, x)))
        return np.array(cols, dtype=np.int64).T % p

    def _greedy_basis(self):
        fqt = self.field_qt
        p = self.p
        met = fqt.m
        basis: list[int] = []
        for cand in range(1, fqt.order):
            trial = basis + [cand]
            M = self._basis_matrix(trial)
            if _rank_mod_p(M, p) == len(trial) * self.e:
                basis.append(cand)
                if len(basis) == self.t:
                    return basis
        raise AssertionError("no F_q-basis of GF(q^t) found")

    def expand(self, symbols) -> np.ndarray:
        """GF(q^t) symbol array (..., n) -> F_q coordinate array (..., n*t)."""
        arr = np.asarray(symbols, dtype=np.int64)
        out = self.expand_table[arr]          # (..., n, t)
        return out.reshape(arr.shape[:-1] + (arr.shape[-1] * self.t,))

    def compress(self, coords) -> np.ndarray:
        arr = np.asarray(coords, dtype=np.int64)
        shape = arr.shape[:-1] + (arr.shape[-1] // self.t,)
        flat = arr.reshape(-1, self.t)
        out = np.fromiter((self._compress_map[tuple(int(c) for c in row)] for row in flat),
                          dtype=np.int64, count=flat.shape[0])
        return out.reshape(shape)

    def retract_scalar(self, y: int) -> int:
        return self._embed_q.retract(y)

    def embed_scalar(self, c: int) -> int:
        return self._embed_q.embed(c)

    def lift_to_big_ring(self, a: GroupAlgebraElement) -> GroupAlgebraElement:
        """R_n over F_q -> R_n over F_{q^t}, embedding coefficients."""
        return self.ring.element(self._embed_q.embed(c) for c in a.coeffs)

    # -- Gram data -------------------------------------------------------------------

    def _build_gram(self):
        """t x t position-block Gram matrix of the form, over F_q."""
        t = self.t
        G0 = np.zeros((t, t), dtype=np.int64)
        for c in range(t):
            for d in range(t):
                val = self._inner_term(self.fq_basis[c], self.fq_basis[d])
                G0[c, d] = self.retract_scalar(val)
        self.gram_block = G0

    def _inner_term(self, x: int, y: int) -> int:
        """Tr_{q,t}(gamma * x * psi(y^(q^(t/2)))) as an element of GF(q^t)."""
        fqt = self.field_qt
        q, t = self.q, self.t
        conj = fqt.pow(y, q ** (t // 2))
        val = fqt.mul(self.gamma, fqt.mul(x, gf.psi(conj, fqt, q)))
        return fqt.trace_map(val, q, t)

    def gram_apply(self, B_exp: np.ndarray, gram: np.ndarray | None = None) -> np.ndarray:
        """Right-multiply each position block of B_exp by the Gram block."""
        G = self.gram_block if gram is None else gram
        B = np.asarray(B_exp, dtype=np.int64)
        rows = B.shape[0]
        if rows == 0:
            return B.copy()
        t = self.t
        blocks = B.reshape(rows, -1, t)
        fq = self.field_q
        if fq.m == 1:
            out = (blocks @ G) % fq.p
        else:
            out = np.zeros_like(blocks)
            for c in range(t):
                acc = np.zeros(blocks.shape[:2], dtype=np.int64)
                for d in range(t):
                    acc = fq.vadd(acc, fq.vmul(blocks[:, :, d], np.int64(G[d, c])))
                out[:, :, c] = acc
        return out.reshape(rows, -1)

    def gram_apply_t(self, B_exp: np.ndarray) -> np.ndarray:
        """Like gram_apply but with the transposed block (the reversed-argument form)."""
        return self.gram_apply(B_exp, self.gram_block.T)

    def pair_matrix(self, A_exp: np.ndarray, B_exp: np.ndarray) -> np.ndarray:
        """Matrix of form values between the rows of two F_q-expanded matrices."""
        return linalg.matmul(self.field_q, self.gram_apply(A_exp), np.asarray(B_exp).T)


def _rank_mod_p(M: np.ndarray, p: int) -> int:
    from . import linalg as la
    return la.rank(gf.field(p, 1), M % p)


def _coerce_vector(v, ctx: DeltaContext) -> tuple[int, ...]:
    if isinstance(v, GroupAlgebraElement):
        if v.ring.field is not ctx.field_qt:
            raise FieldMismatchError("vector over a different field")
        return v.coeffs
    coeffs = tuple(int(c) for c in v)
    return coeffs


def delta_inner(a, b, ctx: DeltaContext) -> int:
    """The scalar form (a, b) in F_q, via the defining trace sum."""
    av = _coerce_vector(a, ctx)
    bv = _coerce_vector(b, ctx)
    if len(av) != len(bv):
        raise LengthMismatchError(f"lengths differ: {len(av)} vs {len(bv)}")
    fqt = ctx.field_qt
    total = 0
    for x, y in zip(av, bv):
        total = fqt.add(total, ctx._inner_term(x, y))
    return ctx.retract_scalar(total)


def delta_form(a: GroupAlgebraElement, b: GroupAlgebraElement,
               ctx: DeltaContext) -> GroupAlgebraElement:
    """The algebra-valued form [a, b], an element of R_n over F_q."""
    if a.ring.n != b.ring.n:
        raise LengthMismatchError("operands of different length")
    q, t = ctx.q, ctx.t
    inner = ctx.ring.zero()
    for w in range(1, t):
        inner = inner + b.tau(q ** (t // 2 + w), -1)
    prod = (a * inner).scale(ctx.gamma)
    acc = ctx.ring.zero()
    for u in range(t):
        acc = acc + prod.tau(q ** u, 1)
    return ctx.ring_q.element(ctx.retract_scalar(c) for c in acc.coeffs)


def module_law_check(f: GroupAlgebraElement, a: GroupAlgebraElement,
                     b: GroupAlgebraElement, ctx: DeltaContext) -> bool:
    """Both module laws of the algebra form, for f with F_q coefficients.

    [f a, b] = f [a, b] and [a, f b] = tau_{1,-1}(f) [a, b].
    """
    f_big = ctx.lift_to_big_ring(f)
    base = delta_form(a, b, ctx)
    left = delta_form(f_big * a, b, ctx)
    if left != f * base:
        return False
    right = delta_form(a, f_big * b, ctx)
    return right == f.tau(1, -1) * base


def component_split_check(a: GroupAlgebraElement, b: GroupAlgebraElement,
                          ctx: DeltaContext) -> bool:
    """[a, b] equals the sum over components of [a_i, b_mu(i)]; cross terms vanish."""
    atlas = ctx.atlas
    tab = atlas.table
    comps_a = [atlas.project(a, i) for i in range(tab.num_classes)]
    comps_b = [atlas.project(b, i) for i in range(tab.num_classes)]
    total = ctx.ring_q.zero()
    for i in range(tab.num_classes):
        total = total + delta_form(comps_a[i], comps_b[tab.mu[i]], ctx)
        for j in range(tab.num_classes):
            if j != tab.mu[i]:
                if not delta_form(comps_a[i], comps_b[j], ctx).is_zero():
                    return False
    return total == delta_form(a, b, ctx)


@functools.lru_cache(maxsize=None)
def context(n: int, q: int, t: int = 2, *, paper: bool = False) -> DeltaContext:
    """Cached DeltaContext constructor (the common entry point)."""
    return DeltaContext(n, q, t, paper=paper)

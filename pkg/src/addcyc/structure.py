"""Cyclotomic cosets and the minimal-ideal structure of F_q[X]/(X^n - 1).

For gcd(n, q) = 1 the group algebras R_n over F_q and over F_{q^t} are
semisimple and split into minimal ideals indexed by cyclotomic cosets.  The
IdealAtlas bundles everything downstream layers need: the cosets with their
dimension data, the negation-induced involution mu on coset indices, the
generator polynomials of the minimal ideals, their primitive idempotents,
designated primitive elements of each ideal-as-field, and the orientation of
the ideals under the coefficient-conjugating automorphisms tau.

Each minimal ideal I of the big algebra is a finite field; it is identified
with GF(q^(t*D)) through evaluation at a pinned root of unity.  The
designated primitive element of I is the preimage of the abstract field's
generator under that identification (optionally overridden per index to pin
alternative reference choices); primitive elements of the sibling ideals are
derived through tau so that tau_{q^j,1}(rho_{i,0}) = rho_{i,j}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import sympy

from . import gf, linalg
from .errors import (
    InvalidParameterError,
    NotCoprimeError,
    NotInIdealError,
    TooLargeError,
)
from .polyring import Poly, minimal_poly, splitting_data
from .ring import GroupAlgebraElement, cyclic_ring


def cyclotomic_cosets(n: int, base: int) -> list[tuple[int, ...]]:
    """All base-cyclotomic cosets mod n, sorted by least representative."""
    if math.gcd(n, base) != 1:
        raise NotCoprimeError(
            f"requires gcd(n, base) = 1 (semisimple group algebra); got n={n}, base={base}")
    seen = [False] * n
    cosets = []
    for l in range(n):
        if seen[l]:
            continue
        orbit = []
        k = l
        while not seen[k]:
            seen[k] = True
            orbit.append(k)
            k = (k * base) % n
        cosets.append(tuple(sorted(orbit)))
    assert sum(len(c) for c in cosets) == n
    return cosets


@dataclass(frozen=True)
class CosetTable:
    """Coset bookkeeping for length n with base cardinality q and degree t."""

    n: int
    q: int
    t: int
    cosets: tuple[tuple[int, ...], ...]        # q-cosets, by least representative
    reps: tuple[int, ...]                      # l_i = min of coset i
    d: tuple[int, ...]                         # d_i = |coset i|
    s: tuple[int, ...]                         # s_i = gcd(t, d_i)
    D: tuple[int, ...]                         # D_i = d_i / s_i
    subcosets: tuple[tuple[tuple[int, ...], ...], ...]  # q^t-cosets, j-indexed
    mu: tuple[int, ...]
    i_sharp: int | None
    fixed: tuple[int, ...]                     # fixed points of mu, excluding 0 and i_sharp
    paired: tuple[int, ...]                    # least index of each mu-transposition

    @property
    def num_classes(self) -> int:
        return len(self.cosets)

    def index_of(self, value: int) -> int:
        value %= self.n
        for i, c in enumerate(self.cosets):
            if value in c:
                return i
        raise AssertionError("cosets do not partition Z_n")

    def subindex_of(self, value: int) -> tuple[int, int]:
        value %= self.n
        for i, subs in enumerate(self.subcosets):
            for j, c in enumerate(subs):
                if value in c:
                    return i, j
        raise AssertionError("subcosets do not partition Z_n")

    def coset_split(self, i: int) -> tuple[tuple[int, ...], ...]:
        """The s_i base-q^t cosets refining the i-th base-q coset."""
        return self.subcosets[i]


def build_coset_table(n: int, q: int, t: int) -> CosetTable:
    cosets = tuple(cyclotomic_cosets(n, q))
    cosets_qt = cyclotomic_cosets(n, pow(q, t, n) if n > 1 else q)
    by_value = {}
    for c in cosets_qt:
        for v in c:
            by_value[v] = c
    reps, d, s, D, subcosets = [], [], [], [], []
    for c in cosets:
        l = c[0]
        di = len(c)
        si = math.gcd(t, di)
        reps.append(l)
        d.append(di)
        s.append(si)
        D.append(di // si)
        subs = []
        for j in range(si):
            sub = by_value[(l * q ** j) % n]
            assert sub not in subs, "subcosets of one q-coset must be disjoint"
            assert len(sub) == di // si
            subs.append(sub)
        assert sorted(v for sub in subs for v in sub) == list(c)
        subcosets.append(tuple(subs))
    mu = []
    for i, c in enumerate(cosets):
        target = (-reps[i]) % n
        mu_i = next(k for k, ck in enumerate(cosets) if target in ck)
        mu.append(mu_i)
    assert mu[0] == 0
    assert all(mu[mu[i]] == i for i in range(len(cosets)))
    i_sharp = None
    if n % 2 == 0:
        i_sharp = next(i for i, c in enumerate(cosets) if c == (n // 2,))
        assert d[i_sharp] == 1 and s[i_sharp] == 1 and mu[i_sharp] == i_sharp
    fixed = tuple(i for i in range(len(cosets))
                  if mu[i] == i and i != 0 and i != i_sharp)
    paired = tuple(sorted(i for i in range(len(cosets)) if mu[i] > i))
    return CosetTable(n, q, t, cosets, tuple(reps), tuple(d), tuple(s), tuple(D),
                      tuple(subcosets), tuple(mu), i_sharp, fixed, paired)


def mu_permutation(table: CosetTable):
    """(mu, i_sharp, fixed points excluding {0, i#}, transposition reps)."""
    return table.mu, table.i_sharp, table.fixed, table.paired


def tau_ideal_image(table: CosetTable, w: int, u: int, ij: tuple[int, int]) -> tuple[int, int]:
    """Index of tau_{q^w,u}(I_{i,j}), computed purely from coset arithmetic."""
    n, q = table.n, table.q
    if math.gcd(u % n, n) != 1:
        raise NotCoprimeError(f"requires gcd(u, n) = 1; got u={u}, n={n}")
    i, j = ij
    l = (table.reps[i] * q ** j) % n
    u_inv = pow(u % n, -1, n)
    return table.subindex_of(l * u_inv * pow(q, w, n))


class IdealAtlas:
    """Ideal decomposition data for R_n over F_q and F_{q^t}; built by build_atlas."""

    def __init__(self, n, q, t, field_q, field_qt, *, paper=False, rho_exponents=None):
        if t < 1:
            raise InvalidParameterError("t must be >= 1")
        if math.gcd(n, q) != 1:
            raise NotCoprimeError(
                f"requires gcd(n, q) = 1 (semisimple group algebra); got n={n}, q={q}")
        self.n, self.q, self.t = n, q, t
        self.paper = paper
        self.field_q = field_q
        self.field_qt = field_qt
        self.ring = cyclic_ring(field_qt, n)
        self.ring_q = cyclic_ring(field_q, n)
        self.table = build_coset_table(n, q, t)
        self.sd = splitting_data(n, field_qt, paper=paper)

        # irreducible factors and ideal generators over both fields; the
        # coarse factors m_i are built from the same splitting-field root as
        # the fine factors M_{i,j}, which keeps the coset <-> factor
        # associations of the two factorisations mutually consistent
        # (m_i = prod_j M_{i,j} holds by construction, and the coercion of
        # that product down to F_q checks it really has F_q coefficients).
        xn1_q = Poly.x_pow_n_minus_1(field_q, n)
        xn1_qt = Poly.x_pow_n_minus_1(field_qt, n)
        retract_q = gf.subfield_map(field_q, field_qt).retract
        self.M_poly: dict[tuple[int, int], Poly] = {}
        self.M_hat: dict[tuple[int, int], Poly] = {}
        self.m_poly: list[Poly] = []
        for i, subs in enumerate(self.table.subcosets):
            prod = Poly.one(field_qt)
            for j, sub in enumerate(subs):
                M = minimal_poly(sub, self.sd, field_qt)
                self.M_poly[(i, j)] = M
                self.M_hat[(i, j)] = xn1_qt // M
                prod = prod * M
            m_i = prod.map_coeffs(retract_q, field_q)
            assert m_i.degree == self.table.d[i]
            self.m_poly.append(m_i)
        self.m_hat = [xn1_q // p for p in self.m_poly]
        self.factors_q = list(zip(self.m_poly, self.table.cosets))
        check = Poly.one(field_q)
        for p_i in self.m_poly:
            check = check * p_i
        assert check == xn1_q, "coarse factors must multiply back to X^n - 1"

        # primitive idempotents e_{i,j} via the extended Euclidean identity
        self.idempotents: dict[tuple[int, int], GroupAlgebraElement] = {}
        for (i, j), Mhat in self.M_hat.items():
            g, u, _ = Mhat.xgcd(self.M_poly[(i, j)])
            assert g == Poly.one(field_qt), "generator and complement must be coprime"
            e = self.ring.from_poly((u * Mhat) % xn1_qt)
            self.idempotents[(i, j)] = e
        self._validate_idempotents()

        # J_i identities (tau_{q,1}-fixed, so they live in the small algebra too)
        self.j_idempotents: list[GroupAlgebraElement] = []
        for i in range(self.table.num_classes):
            f = self.ring.zero()
            for j in range(self.table.s[i]):
                f = f + self.idempotents[(i, j)]
            self.j_idempotents.append(f)

        # orientation of tau_{1,-1} on the split fixed classes (t = 2 only)
        self.tau_orientation: list[str | None] = []
        for i in range(self.table.num_classes):
            if (t == 2 and self.table.mu[i] == i and i != 0 and i != self.table.i_sharp
                    and self.table.s[i] == 2):
                _, j1 = tau_ideal_image(self.table, 0, -1, (i, 0))
                self.tau_orientation.append("fixes" if j1 == 0 else "swaps")
            else:
                self.tau_orientation.append(None)

        self._rho_exponents = dict(rho_exponents or {})
        self._rho: dict[tuple[int, int], GroupAlgebraElement] = {}
        self._ideal_fields: dict[int, gf.Field] = {}
        self._k_bases: dict[int, list[GroupAlgebraElement]] = {}
        self._validate_structure()

    # -- validation ------------------------------------------------------------

    def _validate_idempotents(self):
        one = self.ring.one()
        total = self.ring.zero()
        items = list(self.idempotents.items())
        for (i, j), e in items:
            assert e * e == e, f"e_{i},{j} is not idempotent"
            total = total + e
        for a in range(len(items)):
            for b in range(a + 1, len(items)):
                prod = items[a][1] * items[b][1]
                assert prod.is_zero(), "distinct primitive idempotents must annihilate"
        assert total == one, "idempotents must sum to 1"

    def _validate_structure(self):
        tab = self.table
        for i in range(tab.num_classes):
            if tab.mu[i] == i and i not in (0, tab.i_sharp) and self.t == 2:
                assert tab.d[i] % 2 == 0, "fixed classes away from 0/i# need even d_i"
            if (self.t == 2 and i not in (0, tab.i_sharp)
                    and self.tau_orientation[i] == "fixes"):
                # negation fixes I_{i,0} only when it acts as the middle
                # Frobenius power q^(t*D_i/2) on the coset
                Di = tab.D[i]
                assert Di % 2 == 0 or self.t % 2 == 0
                assert ((-tab.reps[i]) % tab.n
                        == (tab.reps[i] * self.q ** (self.t * Di // 2)) % tab.n)
        # negation acts trivially on J_0 (and J_{i#})
        trivial = [0] + ([tab.i_sharp] if tab.i_sharp is not None else [])
        for i in trivial:
            for j in range(tab.s[i]):
                e = self.idempotents[(i, j)]
                assert e.tau(1, -1) == e

    # -- component access --------------------------------------------------------

    def idempotent(self, i: int, j: int = 0) -> GroupAlgebraElement:
        return self.idempotents[(i, j)]

    def j_idempotent(self, i: int) -> GroupAlgebraElement:
        return self.j_idempotents[i]

    def project(self, a: GroupAlgebraElement, i: int) -> GroupAlgebraElement:
        """Component of a in J_i (multiplication by the J_i identity)."""
        return a * self.j_idempotents[i]

    def in_ideal(self, a: GroupAlgebraElement, i: int, j: int | None = None) -> bool:
        e = self.j_idempotents[i] if j is None else self.idempotents[(i, j)]
        return a * e == a

    def fixed_subfield_check(self, i: int, c: GroupAlgebraElement) -> bool:
        """True iff c (an element of J_i) lies in the small-algebra part K_i."""
        if not self.in_ideal(c, i):
            raise NotInIdealError(f"element is not in the component J_{i}")
        return c.tau(self.q, 1) == c

    def ideal_field(self, i: int) -> gf.Field:
        """The abstract finite field GF(q^(t*D_i)) a minimal ideal I_{i,j} realises."""
        f = self._ideal_fields.get(i)
        if f is None:
            e = self.field_q.m
            f = gf.field(self.field_q.p, e * self.t * self.table.D[i], paper=self.paper)
            self._ideal_fields[i] = f
        return f

    def eval_root(self, i: int, j: int) -> int:
        """Exponent r with I_{i,j} evaluated at eta'^r."""
        return (self.table.reps[i] * self.q ** j) % self.n

    def element_from_ideal_value(self, i: int, j: int, beta: int) -> GroupAlgebraElement:
        """Preimage of beta in GF(q^(t*D_i)) under evaluation of I_{i,j} at eta'^r.

        Solves the small F_p-linear system expressing beta in the basis
        {e_{i,j} X^s} of the ideal; the unique solution is returned as a ring
        element.
        """
        split = self.sd.splitting_field
        if split.order > gf.TABLE_LIMIT:
            raise TooLargeError("splitting field too large for ideal-value preimages")
        af = self.ideal_field(i)
        eta = self.sd.eta_prime
        r = self.eval_root(i, j)
        fqt = self.field_qt
        p = fqt.p
        mqt = fqt.m
        Di = self.table.D[i]
        emb_qt = gf.subfield_map(fqt, split).embed
        target = gf.subfield_map(af, split).embed(beta)
        cols = []
        for s in range(Di):
            root_pow = split.pow(eta, (r * s) % self.n) if self.n > 1 else 1
            for u in range(mqt):
                basis_u = fqt.encode([0] * u + [1])
                val = split.mul(emb_qt(basis_u), root_pow)
                cols.append(split.decode(val))
        A = np.array(cols, dtype=np.int64).T
        b = np.array(split.decode(target), dtype=np.int64)
        fp = gf.field(p, 1)
        x = linalg.solve(fp, A, b)
        assert x is not None, "evaluation basis must span the ideal"
        e = self.idempotents[(i, j)]
        out = self.ring.zero()
        for s in range(Di):
            lam = fqt.encode(x[s * mqt:(s + 1) * mqt].tolist())
            out = out + e.shift(s).scale(lam)
        assert out.eval_embedded(split.pow(eta, r) if self.n > 1 else 1, split) == target
        return out

    def rho(self, i: int, j: int = 0) -> GroupAlgebraElement:
        """Designated primitive element of I_{i,j} (order q^(t*D_i) - 1)."""
        got = self._rho.get((i, j))
        if got is not None:
            return got
        af = self.ideal_field(i)
        if af.order > gf.TABLE_LIMIT:
            raise TooLargeError(
                f"ideal field of order {af.order} exceeds the desk-scale table limit")
        exponent = self._rho_exponents.get(i, 1)
        base = self.element_from_ideal_value(i, 0, af.pow(af.generator, exponent))
        self._rho[(i, 0)] = base
        for jj in range(1, self.table.s[i]):
            self._rho[(i, jj)] = base.tau(self.q ** jj, 1)
        out = self._rho[(i, j)]
        self._check_rho_order(i)
        return out

    def _check_rho_order(self, i: int):
        af = self.ideal_field(i)
        q1 = af.order - 1
        e = self.idempotents[(i, 0)]
        r = self._rho[(i, 0)]
        for pr in sympy.primefactors(q1) if q1 > 1 else []:
            assert r.pow_with_identity(q1 // pr, e) != e, "primitive element has small order"

    def k_basis(self, i: int) -> list[GroupAlgebraElement]:
        """An F_q-basis of K_i, lifted into the big algebra."""
        got = self._k_bases.get(i)
        if got is not None:
            return got
        emb = gf.subfield_map(self.field_q, self.field_qt).embed
        gen = self.ring.from_poly(self.m_hat[i].map_coeffs(emb, self.field_qt))
        basis = [gen.shift(k) for k in range(self.table.d[i])]
        self._k_bases[i] = basis
        return basis

    def j_spanning(self, i: int) -> list[GroupAlgebraElement]:
        """An F_{q^t}-basis of J_i: the shifted idempotents e_{i,j} X^s."""
        out = []
        for j in range(self.table.s[i]):
            e = self.idempotents[(i, j)]
            out.extend(e.shift(s) for s in range(self.table.D[i]))
        return out

    # -- rendering ----------------------------------------------------------------

    def to_dict(self) -> dict:
        tab = self.table
        d = {
            "n": self.n, "q": self.q, "t": self.t,
            "field_q": self.field_q.spec_string(),
            "field_qt": self.field_qt.spec_string(),
            "splitting_field": self.sd.splitting_field.spec_string(),
            "eta_prime_log": (self.sd.splitting_field.order - 1) // self.n,
            "cosets": [list(c) for c in tab.cosets],
            "subcosets": [[list(c) for c in subs] for subs in tab.subcosets],
            "d": list(tab.d), "s": list(tab.s), "D": list(tab.D),
            "mu": list(tab.mu),
            "i_sharp": tab.i_sharp,
            "fixed_classes": list(tab.fixed),
            "paired_classes": list(tab.paired),
            "tau_orientation": list(self.tau_orientation),
            "factors_q": [str(p) for p in self.m_poly],
            "factors_qt": {f"{i},{j}": str(self.M_poly[(i, j)])
                           for (i, j) in sorted(self.M_poly)},
            "idempotents": {f"{i},{j}": str(e)
                            for (i, j), e in sorted(self.idempotents.items())},
        }
        return d


def build_atlas(n: int, q: int, t: int = 2, *, paper: bool = False,
                rho_exponents=None) -> IdealAtlas:
    """Construct the full ideal atlas for R_n over F_q and F_{q^t}."""
    fac = sympy.factorint(q)
    if len(fac) != 1:
        raise InvalidParameterError(f"q = {q} is not a prime power")
    (p, e), = fac.items()
    field_q = gf.field(p, e, paper=paper)
    field_qt = gf.field(p, e * t, paper=paper)
    return IdealAtlas(n, q, t, field_q, field_qt, paper=paper, rho_exponents=rho_exponents)

"""Exact arithmetic in finite fields GF(p^m).

An element of GF(p^m) is a plain Python int in [0, p^m): its base-p digits,
least significant first, are the coordinates in the polynomial basis
{1, x, ..., x^(m-1)} of F_p[x] modulo ``modulus``.  The zero element is 0 and
the prime subfield occupies 0..p-1.

Each field designates a primitive element ``generator``.  By default the
modulus is the lexicographically least monic primitive polynomial of degree m
over F_p (so x itself generates); a built-in table of reference moduli is
selected with ``paper=True`` for fields that appear in the bundled reference
data.  Fields with at most 2^20 elements build discrete-log tables on demand,
which also back the vectorised (numpy) operations used by the linear-algebra
layer.  Larger fields fall back to schoolbook polynomial arithmetic; they are
only used transiently as splitting fields.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np
import sympy

from .errors import (
    CoercionError,
    FieldMismatchError,
    InvalidParameterError,
    NotASubfieldError,
    TooLargeError,
)

#: fields whose modulus the bundled reference data pins down, keyed by (p, m);
#: coefficients low-to-high, monic.
PAPER_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),                # x^2 + x + 1
    (3, 2): (2, 2, 1),                # x^2 + 2x + 2
    (3, 6): (2, 2, 1, 0, 2, 0, 1),    # x^6 + 2x^4 + x^2 + 2x + 2
    (5, 2): (2, 4, 1),                # x^2 + 4x + 2
    (7, 2): (3, 6, 1),                # x^2 + 6x + 3
    (11, 2): (2, 7, 1),               # x^2 + 7x + 2
    (13, 2): (2, 12, 1),              # x^2 + 12x + 2
    (17, 2): (3, 16, 1),              # x^2 + 16x + 3
    (19, 2): (2, 18, 1),              # x^2 + 18x + 2
}

#: largest field that gets discrete-log tables (and hence vector ops).
TABLE_LIMIT = 1 << 20

#: fields at most this big build their tables eagerly at construction.
EAGER_TABLE_LIMIT = 1 << 12


# ---------------------------------------------------------------------------
# raw polynomial arithmetic over F_p (coefficient tuples, low-to-high)
# ---------------------------------------------------------------------------

def _pp_trim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _pp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pp_trim(tuple(out))


def _pp_mod(a, mod, p):
    # mod is monic
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return _pp_trim(tuple(a))


def _pp_powmod(a, e, mod, p):
    result = (1,)
    base = _pp_mod(a, mod, p)
    while e > 0:
        if e & 1:
            result = _pp_mod(_pp_mul(result, base, p), mod, p)
        base = _pp_mod(_pp_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _pp_monic(a, p):
    if not a:
        return a
    lead = a[-1]
    if lead == 1:
        return a
    inv = pow(lead, -1, p)
    return tuple((c * inv) % p for c in a)


def _pp_gcd(a, b, p):
    a, b = _pp_trim(tuple(x % p for x in a)), _pp_trim(tuple(x % p for x in b))
    while b:
        a, b = b, _pp_mod(a, _pp_monic(b, p), p)
        # _pp_mod requires monic divisor, so normalise as we go
    return _pp_monic(a, p)


def _pp_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return _pp_trim(tuple(out))


def _is_irreducible(mod: tuple[int, ...], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    m = len(mod) - 1
    if m <= 0:
        return False
    x = (0, 1)
    if _pp_powmod(x, p ** m, mod, p) != _pp_mod(x, mod, p):
        return False
    for r in sympy.primefactors(m):
        h = _pp_sub(_pp_powmod(x, p ** (m // r), mod, p), _pp_mod(x, mod, p), p)
        if _pp_gcd(h, mod, p) != (1,):
            return False
    return True


@functools.lru_cache(maxsize=None)
def _order_factors(q_minus_1: int) -> tuple[int, ...]:
    return tuple(sympy.primefactors(q_minus_1))


def _x_is_primitive(mod: tuple[int, ...], p: int) -> bool:
    m = len(mod) - 1
    q1 = p ** m - 1
    x = (0, 1)
    for r in _order_factors(q1):
        if _pp_powmod(x, q1 // r, mod, p) == (1,):
            return False
    return True


@functools.lru_cache(maxsize=None)
def least_primitive_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically least monic primitive polynomial of degree m over F_p.

    Candidates x^m + a_{m-1} x^{m-1} + ... + a_0 are ordered by the integer
    sum(a_i p^i); for m = 1 this yields x - g with g the least primitive root.
    """
    if m == 1:
        g = 1 if p == 2 else int(sympy.primitive_root(p))
        return ((-g) % p, 1)
    for c in range(1, p ** m):
        if c % p == 0:
            continue  # x divides the candidate
        digits = tuple((c // p ** i) % p for i in range(m)) + (1,)
        if _is_irreducible(digits, p) and _x_is_primitive(digits, p):
            return digits
    raise AssertionError(f"no primitive polynomial of degree {m} over F_{p}")


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class Field:
    """The finite field GF(p^m) in a fixed polynomial-basis representation.

    Immutable after construction; obtain instances through :func:`field` so
    that equal parameters yield the identical object.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...], generator: int | None = None):
        if not sympy.isprime(p):
            raise InvalidParameterError(f"characteristic {p} is not prime")
        if m < 1:
            raise InvalidParameterError("extension degree must be >= 1")
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise InvalidParameterError("modulus must be monic of degree m")
        if m > 1 and not _is_irreducible(modulus, p):
            raise InvalidParameterError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.order = p ** m
        self.modulus = modulus
        # _red[i] = digits of x^(m+i) mod modulus, to fold products below degree m
        self._red = []
        cur = tuple((-c) % p for c in modulus[:m])  # x^m
        for _ in range(max(m - 1, 0)):
            self._red.append(cur)
            cur = self._shift_reduce(cur)
        self._exp: np.ndarray | None = None
        self._log: np.ndarray | None = None
        self._pow_luts: dict[int, np.ndarray] = {}
        if generator is None:
            generator = self._default_generator()
        self.generator = generator
        if self.order <= EAGER_TABLE_LIMIT:
            self._build_tables()
        self._check_generator()

    # -- construction helpers -------------------------------------------------

    def _shift_reduce(self, digits: tuple[int, ...]) -> tuple[int, ...]:
        # multiply by x and reduce, digits has length m
        p, m = self.p, self.m
        carried = digits[m - 1]
        shifted = [0] + list(digits[: m - 1])
        if carried:
            xm = tuple((-c) % p for c in self.modulus[:m])
            for j in range(m):
                shifted[j] = (shifted[j] + carried * xm[j]) % p
        return tuple(shifted)

    def _default_generator(self) -> int:
        if self.m == 1:
            g = 1 if self.p == 2 else int(sympy.primitive_root(self.p))
            return g
        # x is primitive for every default and reference modulus; fall back
        # to an ascending search otherwise.
        if _x_is_primitive(self.modulus, self.p):
            return self.p  # the element x
        q1 = self.order - 1
        for cand in range(2, self.order):
            if all(self.pow(cand, q1 // r) != 1 for r in _order_factors(q1)):
                return cand
        raise AssertionError("no generator found")

    def _check_generator(self):
        q1 = self.order - 1
        if q1 == 1:
            return
        if self.pow(self.generator, q1) != 1:
            raise InvalidParameterError("designated generator has wrong order")
        for r in _order_factors(q1):
            if self.pow(self.generator, q1 // r) == 1:
                raise InvalidParameterError("designated generator is not primitive")

    # -- encode / decode ------------------------------------------------------

    def decode(self, a: int) -> tuple[int, ...]:
        p = self.p
        return tuple((a // p ** i) % p for i in range(self.m))

    def encode(self, digits) -> int:
        p = self.p
        return sum(int(d) % p * p ** i for i, d in enumerate(digits))

    def elements(self) -> range:
        return range(self.order)

    # -- scalar arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        while a:
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            q1 = self.order - 1
            return int(self._exp[(int(self._log[a]) + int(self._log[b])) % q1])
        return self._mul_digits(a, b)

    def _mul_digits(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da, db = self.decode(a), self.decode(b)
        out = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    out[i + j] = (out[i + j] + x * y) % p
        # fold degrees >= m using precomputed reductions of x^(m+i)
        for i in range(2 * m - 2, m - 1, -1):
            c = out[i]
            if c:
                red = self._red[i - m]
                for j in range(m):
                    out[j] = (out[j] + c * red[j]) % p
        return self.encode(out[:m])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self._exp is not None:
            q1 = self.order - 1
            return int(self._exp[(-int(self._log[a])) % q1])
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroDivisionError("zero to a negative power")
        q1 = self.order - 1
        e %= q1
        if self._exp is not None:
            return int(self._exp[(int(self._log[a]) * e) % q1])
        result = 1
        base = a
        while e > 0:
            if e & 1:
                result = self._mul_digits(result, base)
            base = self._mul_digits(base, base)
            e >>= 1
        return result

    def trace_map(self, a: int, sub_order: int, r: int) -> int:
        """sum of a^(sub_order^w) for w in 0..r-1."""
        acc = 0
        cur = a
        for _ in range(r):
            acc = self.add(acc, cur)
            cur = self.pow(cur, sub_order)
        return acc

    def dlog(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("discrete log of zero")
        self._build_tables()
        return int(self._log[a])

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("order of zero")
        q1 = self.order - 1
        o = q1
        for r in _order_factors(q1):
            while o % r == 0 and self.pow(a, o // r) == 1:
                o //= r
        return o

    # -- tables and vector operations -----------------------------------------

    def _build_tables(self):
        if self._exp is not None:
            return
        if self.order > TABLE_LIMIT:
            raise TooLargeError(
                f"field of order {self.order} exceeds the {TABLE_LIMIT} table limit")
        q1 = self.order - 1
        exp = np.zeros(max(q1, 1), dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        cur = 1
        for k in range(q1):
            exp[k] = cur
            log[cur] = k
            cur = self._mul_digits(cur, self.generator)
        if q1 == 0:
            exp[0] = 1
            log[1] = 0
        self._exp = exp
        self._log = log

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        mult = 1
        for _ in range(self.m):
            out += ((a + b) % p) * mult
            a, b = a // p, b // p
            mult *= p
        return out

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        out = np.zeros(a.shape, dtype=np.int64)
        mult = 1
        for _ in range(self.m):
            out += ((-a) % p) * mult
            a = a // p
            mult *= p
        return out

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a * b) % self.p
        self._build_tables()
        q1 = self.order - 1
        mask = (a == 0) | (b == 0)
        la = self._log[np.where(a == 0, 1, a)]
        lb = self._log[np.where(b == 0, 1, b)]
        out = self._exp[(la + lb) % q1]
        return np.where(mask, 0, out)

    def vpow(self, a, e: int) -> np.ndarray:
        """Element-wise a^e for a fixed exponent (vectorised via a cached LUT)."""
        a = np.asarray(a, dtype=np.int64)
        q1 = self.order - 1
        e_red = e % q1 if q1 else 0
        lut = self._pow_luts.get(e_red)
        if lut is None:
            self._build_tables()
            lut = np.zeros(self.order, dtype=np.int64)
            lut[0] = 0
            nz = self._exp[(self._log[1:] * e_red) % q1] if q1 else np.array([1])
            lut[1:] = nz
            if e_red == 0:
                lut[1:] = 1
            self._pow_luts[e_red] = lut
        return lut[a]

    # -- misc -----------------------------------------------------------------

    def spec_string(self) -> str:
        coeffs = ",".join(str(c) for c in self.modulus)
        return f"{self.p}^{self.m}/{coeffs}"

    def __repr__(self):
        return f"Field(GF({self.p}^{self.m}), modulus={list(self.modulus)})"


@functools.lru_cache(maxsize=None)
def _field_cached(p: int, m: int, modulus: tuple[int, ...] | None, generator: int | None) -> Field:
    if modulus is None:
        modulus = least_primitive_modulus(p, m)
    return Field(p, m, modulus, generator)


def field(p: int, m: int = 1, *, modulus=None, generator=None, paper: bool = False) -> Field:
    """Construct (or fetch the cached) GF(p^m).

    ``paper=True`` selects the bundled reference modulus when one exists for
    (p, m); otherwise the lexicographically least primitive modulus is used.
    """
    if modulus is None and paper and (p, m) in PAPER_MODULI:
        modulus = PAPER_MODULI[(p, m)]
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
    return _field_cached(p, m, modulus, generator)


def field_of_order(q: int, *, paper: bool = False) -> Field:
    fac = sympy.factorint(q)
    if len(fac) != 1:
        raise InvalidParameterError(f"{q} is not a prime power")
    (p, m), = fac.items()
    return field(p, m, paper=paper)


def parse_field_spec(spec: str) -> Field:
    """Parse a "p^m/c0,c1,...,cm" field description (see Field.spec_string)."""
    head, _, tail = spec.partition("/")
    if "^" in head:
        p_s, _, m_s = head.partition("^")
        p, m = int(p_s), int(m_s)
    else:
        p, m = int(head), 1
    modulus = tuple(int(c) for c in tail.split(",")) if tail else None
    return field(p, m, modulus=modulus)


# ---------------------------------------------------------------------------
# trace maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TraceParams:
    """Parameters of the relative trace from GF(Q^r) onto GF(Q).

    ``owner`` is the big field GF(Q^r) the argument lives in.
    """

    owner: Field
    Q: int
    r: int

    def __post_init__(self):
        if self.Q < 2 or self.r < 1 or self.owner.order != self.Q ** self.r:
            raise InvalidParameterError(
                f"field of order {self.owner.order} is not GF({self.Q}^{self.r})")


def trace(b: int, params: TraceParams) -> int:
    """Relative trace: sum of the Q-power conjugates b^(Q^w), w = 0..r-1.

    The result lies in the GF(Q) subfield (checked by the caller's tests via
    result^Q == result); it is returned in the owner field's encoding.
    """
    return params.owner.trace_map(b, params.Q, params.r)


# ---------------------------------------------------------------------------
# the twist element and the conjugate-sum bijection
# ---------------------------------------------------------------------------

def _even_part_split(t: int) -> tuple[int, int]:
    """t = 2^a * m_odd with a >= 1; returns (a, m_odd)."""
    a = 0
    m_odd = t
    while m_odd % 2 == 0:
        a += 1
        m_odd //= 2
    if a < 1:
        raise InvalidParameterError(f"degree t={t} must be even")
    return a, m_odd


def _check_t(field_qt: Field, q: int, t: int):
    if t < 2 or t % 2 != 0:
        raise InvalidParameterError(f"degree t={t} must be an even integer >= 2")
    if field_qt.order != q ** t:
        raise InvalidParameterError(
            f"field of order {field_qt.order} is not GF({q}^{t})")
    if t % field_qt.p == 1:
        raise InvalidParameterError(
            f"t={t} with t = 1 (mod {field_qt.p}) is outside the supported range")


def find_gamma(field_qt: Field, q: int) -> int:
    """The designated twist element of GF(q^t).

    Returns the nonzero gamma in the GF(q^(2^a)) subfield satisfying
    gamma + gamma^(q^(2^(a-1))) = 0, where t = 2^a * m_odd; among all
    solutions the one with least discrete log w.r.t. the field generator is
    chosen.  Orthogonality predicates are invariant under rescaling gamma by
    GF(q)*, so any deterministic choice works.
    """
    t = _degree_over(field_qt, q)
    _check_t(field_qt, q, t)
    a, _ = _even_part_split(t)
    sub_order = q ** (2 ** a)
    qA = q ** (2 ** (a - 1))
    step = (field_qt.order - 1) // (sub_order - 1)
    for u in range(sub_order - 1):
        gamma = field_qt.pow(field_qt.generator, u * step)
        if field_qt.add(gamma, field_qt.pow(gamma, qA)) == 0:
            return gamma
    raise AssertionError("no twist element found; hypotheses violated")


def _degree_over(field_qt: Field, q: int) -> int:
    t = 0
    order = field_qt.order
    cur = 1
    while cur < order:
        cur *= q
        t += 1
    if cur != order:
        raise InvalidParameterError(f"|field| = {order} is not a power of q = {q}")
    return t


def psi(alpha: int, field_qt: Field, q: int) -> int:
    """The conjugate-sum bijection a -> a^q + a^(q^2) + ... + a^(q^(t-1)).

    Equals Tr_{q,t}(a) - a; an F_q-linear bijection of GF(q^t) whenever t is
    even and t != 1 (mod p).  For t = 2 it is simply the q-power Frobenius.
    """
    t = _degree_over(field_qt, q)
    _check_t(field_qt, q, t)
    tr = field_qt.trace_map(alpha, q, t)
    return field_qt.sub(tr, alpha)


@functools.lru_cache(maxsize=None)
def _psi_inverse_matrix(field_qt: Field, q: int) -> np.ndarray:
    """Matrix of psi^(-1) on the F_p polynomial basis (columns = images)."""
    p, m = field_qt.p, field_qt.m
    cols = []
    for i in range(m):
        img = psi(field_qt.encode([0] * i + [1]), field_qt, q)
        cols.append(field_qt.decode(img))
    mat = np.array(cols, dtype=np.int64).T % p  # psi as m x m matrix over F_p
    inv = _invert_mod_p(mat, p)
    if inv is None:
        raise AssertionError("conjugate-sum map is singular; hypotheses violated")
    return inv


def _invert_mod_p(mat: np.ndarray, p: int) -> np.ndarray | None:
    n = mat.shape[0]
    aug = np.concatenate([mat % p, np.eye(n, dtype=np.int64)], axis=1)
    row = 0
    for col in range(n):
        piv = None
        for r in range(row, n):
            if aug[r, col] % p:
                piv = r
                break
        if piv is None:
            return None
        aug[[row, piv]] = aug[[piv, row]]
        aug[row] = (aug[row] * pow(int(aug[row, col]), -1, p)) % p
        for r in range(n):
            if r != row and aug[r, col]:
                aug[r] = (aug[r] - aug[r, col] * aug[row]) % p
        row += 1
    return aug[:, n:]


def psi_inverse(beta: int, field_qt: Field, q: int) -> int:
    """Inverse of :func:`psi`; for t = 2 this is again the Frobenius."""
    t = _degree_over(field_qt, q)
    _check_t(field_qt, q, t)
    if t == 2:
        return field_qt.pow(beta, q)
    inv = _psi_inverse_matrix(field_qt, q)
    vec = np.array(field_qt.decode(beta), dtype=np.int64)
    out = (inv @ vec) % field_qt.p
    return field_qt.encode(out.tolist())


# ---------------------------------------------------------------------------
# subfield embeddings
# ---------------------------------------------------------------------------

class SubfieldMap:
    """The designated field embedding GF(p^m) -> GF(p^M) for m | M.

    The source generator maps to a root of its own minimal polynomial inside
    the target (the root that is the least power of target_generator^ratio
    with ratio = (p^M-1)/(p^m-1)), so the map is a ring homomorphism, not
    merely a multiplicative one; the choice is deterministic.
    """

    def __init__(self, src: Field, dst: Field):
        if src.p != dst.p or dst.m % src.m != 0:
            raise NotASubfieldError(
                f"GF({src.p}^{src.m}) is not a subfield of GF({dst.p}^{dst.m})")
        self.src = src
        self.dst = dst
        self.ratio = (dst.order - 1) // (src.order - 1)
        self._forward: np.ndarray | None = None
        self._reverse: dict[int, int] | None = None

    def _generator_minpoly(self) -> tuple[int, ...]:
        """Minimal polynomial of the source generator over F_p (degree m)."""
        src = self.src
        if src.m == 1:
            return ((-src.generator) % src.p, 1)
        if src.generator == src.p:  # the element x: its minpoly is the modulus
            return src.modulus
        # primitive elements have full degree m; solve the linear dependence
        # among 1, g, ..., g^m over F_p
        powers = []
        cur = 1
        for _ in range(src.m + 1):
            powers.append(src.decode(cur))
            cur = src.mul(cur, src.generator)
        A = np.array(powers[:-1], dtype=np.int64).T  # m x m, columns g^0..g^(m-1)
        b = np.array(powers[-1], dtype=np.int64)
        inv = _invert_mod_p(A, src.p)
        assert inv is not None, "powers of a primitive element must be independent"
        coeffs = (inv @ b) % src.p  # g^m = sum coeffs[i] g^i
        return tuple(int((-c) % src.p) for c in coeffs) + (1,)

    def _find_image_generator(self) -> int:
        dst = self.dst
        if self.src is dst:
            return dst.generator
        minpoly = self._generator_minpoly()
        step = dst.pow(dst.generator, self.ratio)
        cur = 1
        for _ in range(self.src.order - 1):
            acc = 0
            for c in reversed(minpoly):
                acc = dst.add(dst.mul(acc, cur), c)
            if acc == 0:
                return cur
            cur = dst.mul(cur, step)
        raise AssertionError("source minimal polynomial has no root in the target")

    def _build(self):
        if self._forward is not None:
            return
        if self.src.order > TABLE_LIMIT:
            raise TooLargeError("source field too large to materialise the embedding")
        fwd = np.zeros(self.src.order, dtype=object)
        rev: dict[int, int] = {0: 0}
        img_gen = self._find_image_generator()
        cur_src, cur_dst = 1, 1
        for _ in range(self.src.order - 1):
            fwd[cur_src] = cur_dst
            rev[cur_dst] = cur_src
            cur_src = self.src.mul(cur_src, self.src.generator)
            cur_dst = self.dst.mul(cur_dst, img_gen)
        self._forward = fwd
        self._reverse = rev

    def embed(self, a: int) -> int:
        if a == 0:
            return 0
        if self.src is self.dst:
            return a
        self._build()
        return int(self._forward[a])

    def retract(self, y: int) -> int:
        """Inverse of embed; raises CoercionError when y is outside the image."""
        if y == 0:
            return 0
        if self.src is self.dst:
            return y
        self._build()
        try:
            return self._reverse[y]
        except KeyError:
            raise CoercionError(
                f"element {y} of GF({self.dst.p}^{self.dst.m}) does not lie in "
                f"the GF({self.src.p}^{self.src.m}) subfield") from None

    def contains(self, y: int) -> bool:
        return self.dst.pow(y, self.src.order) == y


@functools.lru_cache(maxsize=None)
def subfield_map(src: Field, dst: Field) -> SubfieldMap:
    return SubfieldMap(src, dst)


def embed(x: int, src: Field, dst: Field) -> int:
    return subfield_map(src, dst).embed(x)


# ---------------------------------------------------------------------------
# element text format ("0", prime-subfield integers, or generator powers w^k)
# ---------------------------------------------------------------------------

def format_element(f: Field, a: int) -> str:
    if a == 0:
        return "0"
    if a < f.p:
        return str(a)
    if f.order <= TABLE_LIMIT:
        k = f.dlog(a)
        return "w" if k == 1 else f"w^{k}"
    return "[" + ",".join(str(d) for d in f.decode(a)) + "]"


def parse_element(f: Field, token: str) -> int:
    token = token.strip()
    if token in ("w", "W"):
        return f.generator
    if token.startswith(("w^", "W^")):
        return f.pow(f.generator, int(token[2:]))
    if token.startswith("[") and token.endswith("]"):
        return f.encode(int(c) for c in token[1:-1].split(","))
    val = int(token)
    if 0 <= val < f.p:
        return val
    return val % f.p

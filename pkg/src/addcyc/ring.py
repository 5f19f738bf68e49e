"""The group algebra F[X]/(X^n - 1) over a finite field F.

Elements carry a fixed-length coefficient tuple (a_0, ..., a_{n-1}) of field
encodings and are read interchangeably as the vector (a_0, ..., a_{n-1}) in
F^n and the polynomial a(X).  Multiplication is cyclic convolution; the
shift sigma corresponds to multiplication by X.
"""

from __future__ import annotations

import functools
import math

import numpy as np

from . import gf
from .errors import FieldMismatchError, LengthMismatchError, NotCoprimeError
from .polyring import Poly


class CyclicRing:
    """Context object for F[X]/(X^n - 1); produces GroupAlgebraElement values.

    Obtain instances through :func:`cyclic_ring` so equal parameters share
    one object.
    """

    def __init__(self, field: gf.Field, n: int):
        self.field = field
        self.n = n
        # rotation index table: _rot[i, k] = (k - i) mod n, for convolution
        idx = np.arange(n)
        self._rot = (idx[None, :] - idx[:, None]) % n

    def element(self, coeffs) -> "GroupAlgebraElement":
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.n:
            raise LengthMismatchError(f"expected {self.n} coefficients, got {len(coeffs)}")
        return GroupAlgebraElement(self, coeffs)

    def zero(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self, (0,) * self.n)

    def one(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self, (1,) + (0,) * (self.n - 1))

    def x_power(self, k: int) -> "GroupAlgebraElement":
        coeffs = [0] * self.n
        coeffs[k % self.n] = 1
        return GroupAlgebraElement(self, tuple(coeffs))

    def from_poly(self, poly: Poly) -> "GroupAlgebraElement":
        if poly.field is not self.field:
            raise FieldMismatchError("polynomial over a different field")
        if poly.degree >= self.n:
            raise LengthMismatchError("polynomial degree exceeds n - 1")
        coeffs = poly.coeffs + (0,) * (self.n - len(poly.coeffs))
        return GroupAlgebraElement(self, coeffs)

    def from_tokens(self, text: str) -> "GroupAlgebraElement":
        vals = [gf.parse_element(self.field, tok) for tok in text.split(",")]
        return self.element(vals + [0] * (self.n - len(vals)))


@functools.lru_cache(maxsize=None)
def cyclic_ring(field: gf.Field, n: int) -> CyclicRing:
    return CyclicRing(field, n)


class GroupAlgebraElement:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CyclicRing, coeffs: tuple[int, ...]):
        self.ring = ring
        self.coeffs = coeffs

    # -- ring operations --------------------------------------------------------

    def _check(self, other: "GroupAlgebraElement"):
        if self.ring is not other.ring:
            if self.ring.n != other.ring.n:
                raise LengthMismatchError("elements of different length")
            if self.ring.field is not other.ring.field:
                raise FieldMismatchError("elements over different fields")

    def __add__(self, other):
        self._check(other)
        f = self.ring.field
        return GroupAlgebraElement(
            self.ring, tuple(f.vadd(np.array(self.coeffs), np.array(other.coeffs)).tolist()))

    def __neg__(self):
        f = self.ring.field
        return GroupAlgebraElement(self.ring, tuple(f.vneg(np.array(self.coeffs)).tolist()))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        f = self.ring.field
        n = self.ring.n
        a = np.array(self.coeffs, dtype=np.int64)
        b = np.array(other.coeffs, dtype=np.int64)
        # out[k] = sum_i a_i * b_{(k - i) mod n}
        brot = b[self.ring._rot]  # brot[i, k] = b[(k-i) % n]
        prods = f.vmul(a[:, None], brot)
        acc = np.zeros(n, dtype=np.int64)
        for i in range(n):
            acc = f.vadd(acc, prods[i])
        return GroupAlgebraElement(self.ring, tuple(int(v) for v in acc))

    def scale(self, c: int) -> "GroupAlgebraElement":
        f = self.ring.field
        return GroupAlgebraElement(
            self.ring, tuple(f.vmul(np.int64(c), np.array(self.coeffs)).tolist()))

    def shift(self, k: int = 1) -> "GroupAlgebraElement":
        """Multiplication by X^k: the cyclic coordinate shift sigma^k."""
        k %= self.ring.n
        return GroupAlgebraElement(self.ring, self.coeffs[-k:] + self.coeffs[:-k])

    def pow_with_identity(self, k: int, identity: "GroupAlgebraElement") -> "GroupAlgebraElement":
        """Power inside a subring whose multiplicative identity is ``identity``."""
        if k < 0:
            raise ValueError("negative powers are not supported here")
        result = identity
        base = self
        while k > 0:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def tau(self, frob_card: int, u: int) -> "GroupAlgebraElement":
        """The ring automorphism sum a_k X^k -> sum a_k^frob_card X^(u k mod n)."""
        n = self.ring.n
        if math.gcd(u % n, n) != 1:
            raise NotCoprimeError(f"requires gcd(u, n) = 1; got u={u}, n={n}")
        f = self.ring.field
        powered = f.vpow(np.array(self.coeffs, dtype=np.int64), frob_card)
        out = np.zeros(n, dtype=np.int64)
        idx = (np.arange(n) * (u % n)) % n
        out[idx] = powered
        return GroupAlgebraElement(self.ring, tuple(int(v) for v in out))

    # -- queries ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, GroupAlgebraElement)
                and self.ring.field is other.ring.field
                and self.ring.n == other.ring.n
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.ring.field), self.ring.n, self.coeffs))

    def __str__(self):
        return ",".join(gf.format_element(self.ring.field, c) for c in self.coeffs)

    def __repr__(self):
        return f"GroupAlgebraElement({self})"

    def eval_embedded(self, point: int, target: gf.Field) -> int:
        """Evaluate a(point) inside ``target`` (a field containing the coefficients)."""
        emb = gf.subfield_map(self.ring.field, target).embed
        acc = 0
        for c in reversed(self.coeffs):
            acc = target.add(target.mul(acc, point), emb(c))
        return acc

    def to_poly(self) -> Poly:
        return Poly(self.ring.field, self.coeffs)

"""Exact arithmetic in F_{p^r} and dense linear algebra over it.

An element with polynomial coordinates (c_0, ..., c_{r-1}) over F_p is encoded
as the integer sum(c_i * p**i), so elements of F_q live in range(q).  The
modulus is the lexicographically smallest monic irreducible polynomial of
degree r over F_p, coefficients compared constant term first; a field is
therefore determined by (p, r) alone and encodings are stable across runs.
For the common small cases this picks

    F_4 : x^2 + x + 1          F_8 : x^3 + x^2 + 1
    F_9 : x^2 + 1              F_16: x^4 + x^3 + 1

Matrices over F_q are plain numpy int64 arrays of encoded values; all matrix
routines live on the field object (``f.matmul``, ``f.rref``, ...).  Extension
field multiplication uses log/antilog tables for q <= 2**16 and coefficient
arithmetic above that; matrix products always use per-degree integer matmuls
followed by modulus reduction, which keeps everything vectorised and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import (
    DimensionMismatch,
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    LcdError,
    NotPrime,
)

MAX_FIELD_ORDER = 1 << 20
_TABLE_LIMIT = 1 << 16


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomial helpers over F_p (coefficient tuples, low degree first) ---

def _poly_trim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _poly_mulmod(a, b, mod, p):
    deg = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # reduce by the monic modulus
    for k in range(len(out) - 1, deg - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            for t in range(deg):
                out[k - deg + t] = (out[k - deg + t] - c * mod[t]) % p
    return _poly_trim(tuple(out))


def _poly_powmod(a, e, mod, p):
    result = (1,)
    base = a
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    return _poly_trim(tuple(((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                            for i in range(n)))


def _poly_divmod(a, b, p):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, p - 2, p)
    while len(a) - 1 >= db and _poly_trim(tuple(a)):
        a = list(_poly_trim(tuple(a)))
        if len(a) - 1 < db:
            break
        c = (a[-1] * inv_lb) % p
        shift = len(a) - 1 - db
        for t in range(len(b)):
            a[shift + t] = (a[shift + t] - c * b[t]) % p
    return _poly_trim(tuple(a))


def _poly_gcd(a, b, p):
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        a, b = b, _poly_divmod(a, b, p)
    return a


def _gf2_mulmod(a, b, mod, deg):
    """Carry-less product of bit-packed F_2 polynomials, reduced mod `mod`."""
    res = 0
    while a:
        if a & 1:
            res ^= b
        a >>= 1
        b <<= 1
        if (b >> deg) & 1:
            b ^= mod
    return res


def _gf2_powmod(a, e, mod, deg):
    res = 1
    while e:
        if e & 1:
            res = _gf2_mulmod(res, a, mod, deg)
        a = _gf2_mulmod(a, a, mod, deg)
        e >>= 1
    return res


def _gf2_gcd(a, b):
    while b:
        while a and a.bit_length() >= b.bit_length():
            a ^= b << (a.bit_length() - b.bit_length())
        a, b = b, a
    return a


def _is_irreducible_gf2(bits, r):
    xq = _gf2_powmod(2, 1 << r, bits, r)
    if xq != 2:
        return False
    for ell in _prime_factors(r):
        h = _gf2_powmod(2, 1 << (r // ell), bits, r) ^ 2
        if _gf2_gcd(bits, h) != 1:
            return False
    return True


def _is_irreducible(poly, p):
    """Rabin's test for a monic polynomial over F_p."""
    r = len(poly) - 1
    if r == 1:
        return True
    if p == 2:
        bits = 0
        for i, c in enumerate(poly):
            bits |= (c & 1) << i
        return _is_irreducible_gf2(bits, r)
    x = (0, 1)
    xq = _poly_powmod(x, p ** r, poly, p)
    if _poly_sub(xq, x, p):
        return False
    for ell in _prime_factors(r):
        h = _poly_sub(_poly_powmod(x, p ** (r // ell), poly, p), x, p)
        g = _poly_gcd(poly, h, p)
        if len(g) - 1 != 0:
            return False
    return True


def _smallest_irreducible(p, r):
    """Lexicographically smallest (constant term first) monic irreducible."""
    for tail in product(range(p), repeat=r):
        # zero constant term means x divides; value 1+sum(tail) = 0 at x=1
        # means (x-1) divides.  Both screens keep the lexicographic order.
        if tail[0] == 0 or (1 + sum(tail)) % p == 0:
            continue
        poly = tuple(tail) + (1,)
        if _is_irreducible(poly, p):
            return poly
    raise LcdError(f"no irreducible polynomial of degree {r} over F_{p}")  # unreachable


class GF:
    """The finite field F_{p^r} with a deterministic modulus.

    Instances are cheap to compare (by (p, r)); use :func:`field_new` for a
    cached instance.  All arithmetic methods accept encoded ints or int64
    numpy arrays and broadcast like numpy; scalars in, scalar out.
    """

    def __init__(self, p, r=1):
        if r < 1 or int(r) != r:
            raise LcdError(f"extension degree must be a positive integer, got {r}")
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        q = p ** r
        if q > MAX_FIELD_ORDER:
            raise FieldTooLarge(f"order {q} exceeds {MAX_FIELD_ORDER}")
        self.p = int(p)
        self.r = int(r)
        self.q = int(q)
        # prime fields use the convention modulus = x
        self.modulus = (0, 1) if r == 1 else _smallest_irreducible(p, r)
        self._pw = self.p ** np.arange(self.r, dtype=np.int64)
        self._redc = self._reduction_rows() if r > 1 else None
        self._exp = None
        self._log = None
        self.generator = None

    def _reduction_rows(self):
        """Row s holds the coefficients of x^(r+s) modulo the field modulus."""
        p, r = self.p, self.r
        rep = np.array([(-c) % p for c in self.modulus[:r]], dtype=np.int64)
        rows = np.zeros((r - 1, r), dtype=np.int64)
        if r > 1:
            rows[0] = rep
        for s in range(1, r - 1):
            prev = rows[s - 1]
            nxt = np.zeros(r, dtype=np.int64)
            nxt[1:] = prev[:-1]
            rows[s] = (nxt + prev[r - 1] * rep) % p
        return rows

    # --- bookkeeping ---

    def __repr__(self):
        return f"GF({self.q})" if self.r > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.r) == (other.p, other.r)

    def __hash__(self):
        return hash((GF, self.p, self.r))

    def element(self, val):
        val = int(val)
        if not 0 <= val < self.q:
            raise LcdError(f"encoded value {val} outside [0, {self.q})")
        return FieldElement(self, val)

    def elements(self):
        return [FieldElement(self, v) for v in range(self.q)]

    def coeffs(self, val):
        """Polynomial coordinates (c_0, ..., c_{r-1}) of an encoded value."""
        val = int(val)
        return tuple((val // self.p ** i) % self.p for i in range(self.r))

    def from_coeffs(self, coeffs):
        return sum((int(c) % self.p) * self.p ** i for i, c in enumerate(coeffs))

    # --- digit helpers (vectorised base-p decomposition) ---

    def _to_digits(self, a):
        return (a[..., None] // self._pw) % self.p

    def _from_digits(self, d):
        return (d * self._pw).sum(axis=-1)

    @staticmethod
    def _coerce2(a, b):
        scalar = np.isscalar(a) and np.isscalar(b)
        return np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64), scalar

    # --- scalar/elementwise arithmetic ---

    def add(self, a, b):
        a, b, scalar = self._coerce2(a, b)
        if self.p == 2:
            out = np.bitwise_xor(a, b)
        elif self.r == 1:
            out = (a + b) % self.p
        else:
            out = self._from_digits((self._to_digits(a) + self._to_digits(b)) % self.p)
        return int(out) if scalar else out

    def neg(self, a):
        scalar = np.isscalar(a)
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            out = a
        elif self.r == 1:
            out = (-a) % self.p
        else:
            out = self._from_digits((-self._to_digits(a)) % self.p)
        return int(out) if scalar else out

    def sub(self, a, b):
        a, b, scalar = self._coerce2(a, b)
        if self.p == 2:
            out = np.bitwise_xor(a, b)
        elif self.r == 1:
            out = (a - b) % self.p
        else:
            out = self._from_digits((self._to_digits(a) - self._to_digits(b)) % self.p)
        return int(out) if scalar else out

    def mul(self, a, b):
        a, b, scalar = self._coerce2(a, b)
        if self.r == 1:
            out = (a * b) % self.p
        elif self._ensure_tables():
            idx = (self._log[a] + self._log[b]) % (self.q - 1)
            out = np.where((a == 0) | (b == 0), 0, self._exp[idx])
        else:
            out = self._mul_digits(a, b)
        return int(out) if scalar else out

    def _mul_digits(self, a, b):
        """Coefficientwise product, any q; broadcasts like numpy."""
        da, db = self._to_digits(a), self._to_digits(b)
        da, db = np.broadcast_arrays(da, db)
        shape = da.shape[:-1]
        r = self.r
        conv = np.zeros(shape + (2 * r - 1,), dtype=np.int64)
        for i in range(r):
            for j in range(r):
                conv[..., i + j] += da[..., i] * db[..., j]
        conv %= self.p
        for s in range(2 * r - 2, r - 1, -1):
            c = conv[..., s]
            conv[..., :r] = (conv[..., :r] + c[..., None] * self._redc[s - r]) % self.p
            conv[..., s] = 0
        return self._from_digits(conv[..., :r])

    def inv(self, a):
        scalar = np.isscalar(a)
        arr = np.asarray(a, dtype=np.int64)
        if np.any(arr == 0):
            raise DivisionByZero("0 has no inverse")
        if self.r == 1:
            if scalar:
                return pow(int(arr), self.p - 2, self.p)
            out = np.array([pow(int(v), self.p - 2, self.p) for v in arr.ravel()],
                           dtype=np.int64).reshape(arr.shape)
            return out
        if self._ensure_tables():
            out = self._exp[(self.q - 1 - self._log[arr]) % (self.q - 1)]
            return int(out) if scalar else out
        if scalar:
            return self.pow(int(arr), self.q - 2)
        return np.array([self.pow(int(v), self.q - 2) for v in arr.ravel()],
                        dtype=np.int64).reshape(arr.shape)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        """Square-and-multiply; e may be negative for nonzero a."""
        a = int(a)
        e = int(e)
        if e < 0:
            a = self.inv(a)
            e = -e
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def _ensure_tables(self):
        if self.q > _TABLE_LIMIT:
            return False
        if self._exp is None:
            self._build_tables()
        return True

    def _build_tables(self):
        q = self.q
        order_factors = _prime_factors(q - 1)
        gen = None
        for g in range(1, q):
            if all(self._pow_slow(g, (q - 1) // ell) != 1 for ell in order_factors):
                gen = g
                break
        exp = np.zeros(max(q - 1, 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        cur = 1
        for i in range(q - 1):
            exp[i] = cur
            log[cur] = i
            cur = self._mul_slow(cur, gen)
        self.generator = gen
        self._exp = exp
        self._log = log

    def _mul_slow(self, a, b):
        return int(self._mul_digits(np.int64(a), np.int64(b)))

    def _pow_slow(self, a, e):
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_slow(result, base)
            base = self._mul_slow(base, base)
            e >>= 1
        return result

    # --- matrices (int64 arrays of encoded values) ---

    def asmatrix(self, M):
        A = np.asarray(M, dtype=np.int64)
        if A.ndim == 1:
            A = A[None, :]
        if A.ndim != 2:
            raise DimensionMismatch(f"expected a matrix, got ndim={A.ndim}")
        if A.size and (A.min() < 0 or A.max() >= self.q):
            raise LcdError(f"encoded entries must lie in [0, {self.q})")
        return A

    def matmul(self, A, B):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if A.ndim != 2 or B.ndim != 2 or A.shape[1] != B.shape[0]:
            raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
        if self.r == 1:
            return (A @ B) % self.p
        Ad = self._to_digits(A)
        Bd = self._to_digits(B)
        conv = np.zeros((A.shape[0], B.shape[1], 2 * self.r - 1), dtype=np.int64)
        for i in range(self.r):
            for j in range(self.r):
                conv[:, :, i + j] += Ad[:, :, i] @ Bd[:, :, j]
        conv %= self.p
        for s in range(2 * self.r - 2, self.r - 1, -1):
            c = conv[:, :, s]
            conv[:, :, :self.r] = (conv[:, :, :self.r] + c[:, :, None] * self._redc[s - self.r]) % self.p
            conv[:, :, s] = 0
        return self._from_digits(conv[:, :, :self.r])

    def rref(self, M):
        """Reduced row echelon form.  Returns (R, pivots)."""
        R = np.array(M, dtype=np.int64, copy=True)
        if R.ndim == 1:
            R = R[None, :]
        if R.ndim != 2:
            raise DimensionMismatch("rref expects a matrix")
        rows, cols = R.shape
        pivots = []
        rr = 0
        for c in range(cols):
            if rr == rows:
                break
            nz = np.flatnonzero(R[rr:, c])
            if nz.size == 0:
                continue
            pr = rr + int(nz[0])
            if pr != rr:
                R[[rr, pr]] = R[[pr, rr]]
            pv = int(R[rr, c])
            if pv != 1:
                R[rr] = self.mul(R[rr], self.inv(pv))
            f = R[:, c].copy()
            f[rr] = 0
            tgt = np.flatnonzero(f)
            if tgt.size:
                R[tgt] = self.sub(R[tgt], self.mul(f[tgt, None], R[rr][None, :]))
            pivots.append(c)
            rr += 1
        return R, tuple(pivots)

    def rank(self, M):
        return len(self.rref(M)[1])

    def det(self, M):
        A = np.array(M, dtype=np.int64, copy=True)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise DimensionMismatch("determinant needs a square matrix")
        n = A.shape[0]
        det = 1
        for c in range(n):
            nz = np.flatnonzero(A[c:, c])
            if nz.size == 0:
                return 0
            pr = c + int(nz[0])
            if pr != c:
                A[[c, pr]] = A[[pr, c]]
                det = self.neg(det)
            pv = int(A[c, c])
            det = self.mul(det, pv)
            if c + 1 < n:
                f = A[c + 1:, c]
                tgt = np.flatnonzero(f)
                if tgt.size:
                    mult = self.mul(f[tgt], self.inv(pv))
                    A[c + 1 + tgt] = self.sub(A[c + 1 + tgt], self.mul(mult[:, None], A[c][None, :]))
        return det

    def kernel(self, M):
        """Basis of the right null space {x : M x = 0}, rows in rref form."""
        A = np.asarray(M, dtype=np.int64)
        if A.ndim == 1:
            A = A[None, :]
        n = A.shape[1]
        if A.shape[0] == 0:
            return np.eye(n, dtype=np.int64)
        R, piv = self.rref(A)
        free = [c for c in range(n) if c not in piv]
        if not free:
            return np.zeros((0, n), dtype=np.int64)
        K = np.zeros((len(free), n), dtype=np.int64)
        for idx, fc in enumerate(free):
            K[idx, fc] = 1
            for i, pc in enumerate(piv):
                K[idx, pc] = self.neg(int(R[i, fc]))
        K, _ = self.rref(K)
        return K

    def solve(self, A, b):
        """One solution x of A x = b, or None if inconsistent."""
        A = self.asmatrix(A)
        b = np.asarray(b, dtype=np.int64).ravel()
        if b.shape[0] != A.shape[0]:
            raise DimensionMismatch("right-hand side length mismatch")
        aug = np.hstack([A, b[:, None]])
        R, piv = self.rref(aug)
        n = A.shape[1]
        if n in piv:
            return None
        x = np.zeros(n, dtype=np.int64)
        for i, pc in enumerate(piv):
            x[pc] = R[i, n]
        return x

    def inv_matrix(self, A):
        A = self.asmatrix(A)
        n = A.shape[0]
        if A.shape[0] != A.shape[1]:
            raise DimensionMismatch("inverse needs a square matrix")
        R, piv = self.rref(np.hstack([A, np.eye(n, dtype=np.int64)]))
        if piv != tuple(range(n)):
            raise LcdError("matrix is singular")
        return R[:, n:]


@lru_cache(maxsize=None)
def field_new(p, r=1):
    """Cached field constructor; repeated calls return the same object."""
    return GF(p, r)


def field_from_order(q):
    """Field of order q = p^r, inferring (p, r)."""
    q = int(q)
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = min(_prime_factors(q))
    r = 0
    m = q
    while m % p == 0:
        m //= p
        r += 1
    if m != 1:
        raise NotPrime(f"{q} is not a prime power")
    return field_new(p, r)


@dataclass(frozen=True)
class FieldElement:
    """A single field element: (field, encoded value) with operator sugar."""

    field: GF
    val: int

    def __post_init__(self):
        if not 0 <= self.val < self.field.q:
            raise LcdError(f"encoded value {self.val} outside [0, {self.field.q})")

    @property
    def coeffs(self):
        return self.field.coeffs(self.val)

    def _check(self, other):
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.add(self.val, other.val))

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.sub(self.val, other.val))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.mul(self.val, other.val))

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.div(self.val, other.val))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.val))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.val, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.val))

    def __bool__(self):
        return self.val != 0

    def __str__(self):
        return str(self.val)

"""Modular linear algebra and finite-field evaluation kernels.

Row reduction runs over a prime base field; large word-size primes
serve the characteristic-zero Monte Carlo mode, while small primes get
evaluation points in an extension field F_(p^k) big enough for the
usual random-evaluation bounds, with every extension coordinate
contributing one base-field row.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

try:
    import numba

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

__all__ = [
    "DEFAULT_PRIMES",
    "is_probable_prime",
    "rref_in_place",
    "kernel_basis",
    "matrix_rank",
    "PointField",
    "prime_point_field",
    "extension_point_field",
]

# word-size primes just below 2^31; products stay inside int64
DEFAULT_PRIMES = (2147483647, 2147483629)


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for anything that fits our use."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# row reduction over F_p


if _HAVE_NUMBA:

    @numba.njit(cache=True, nogil=True)
    def _rref_numba(M, p):  # pragma: no cover - exercised through rref_in_place
        nrows, ncols = M.shape
        pivot_cols = np.zeros(ncols, dtype=np.bool_)
        r = 0
        for c in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if M[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, ncols):
                    t = M[r, j]
                    M[r, j] = M[piv, j]
                    M[piv, j] = t
            # scale pivot row to 1
            inv = 1
            base = M[r, c] % p
            e = p - 2
            while e > 0:
                if e & 1:
                    inv = (inv * base) % p
                base = (base * base) % p
                e >>= 1
            for j in range(c, ncols):
                M[r, j] = (M[r, j] * inv) % p
            # clear the column everywhere else
            for i in range(nrows):
                if i != r and M[i, c] != 0:
                    f = M[i, c]
                    for j in range(c, ncols):
                        M[i, j] = (M[i, j] - f * M[r, j]) % p
            pivot_cols[c] = True
            r += 1
            if r == nrows:
                break
        return pivot_cols


def _rref_numpy(M, p):
    nrows, ncols = M.shape
    pivot_cols = np.zeros(ncols, dtype=bool)
    r = 0
    for c in range(ncols):
        nz = np.nonzero(M[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r, c:] = M[r, c:] * inv % p
        mask = M[:, c].copy()
        mask[r] = 0
        nzrows = np.nonzero(mask)[0]
        if len(nzrows):
            M[nzrows, c:] = (M[nzrows, c:] - mask[nzrows, None] * M[r, c:][None, :]) % p
        pivot_cols[c] = True
        r += 1
        if r == nrows:
            break
    return pivot_cols


def rref_in_place(M: np.ndarray, p: int) -> np.ndarray:
    """Reduced row echelon form mod p; returns the pivot-column mask."""
    if M.dtype != np.int64:
        raise TypeError("expected an int64 matrix")
    if _HAVE_NUMBA:
        return _rref_numba(M, p)
    return _rref_numpy(M, p)


def kernel_basis(M: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right nullspace of M over F_p, shape (ncols, dim).

    M is consumed (reduced in place).
    """
    nrows, ncols = M.shape
    if ncols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if nrows == 0:
        return np.eye(ncols, dtype=np.int64)
    pivot_cols = rref_in_place(M, p)
    free_cols = np.nonzero(~pivot_cols)[0]
    pivots = np.nonzero(pivot_cols)[0]
    basis = np.zeros((ncols, len(free_cols)), dtype=np.int64)
    for out_idx, f in enumerate(free_cols):
        basis[f, out_idx] = 1
        # pivot row r solves x[pivots[r]] = -M[r, f]
        basis[pivots, out_idx] = (-M[np.arange(len(pivots)), f]) % p
    return basis


def matrix_rank(M: np.ndarray, p: int) -> int:
    """Rank of M over F_p; M is consumed."""
    if 0 in M.shape:
        return 0
    return int(rref_in_place(M, p).sum())


# ---------------------------------------------------------------------------
# evaluation fields


class PointField:
    """Field of evaluation points, either F_p itself or F_(p^k).

    Elements are numpy arrays whose last axis holds k base-field
    coordinates (k = 1 collapses to plain residues).  Only the batch
    operations the oracle needs are provided.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.k = k
        if k == 1:
            self.modulus = None
            self._red = None
        else:
            if modulus is None or len(modulus) != k + 1:
                raise ValueError("extension field needs a monic modulus of degree k")
            self.modulus = tuple(int(c) % p for c in modulus[:-1]) + (1,)
            self._red = _reduction_rows(self.modulus, p, k)

    @property
    def size(self) -> int:
        return self.p**self.k

    def random_elements(self, rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
        return rng.integers(0, self.p, size=shape + (self.k,), dtype=np.int64)

    def zeros(self, shape: tuple[int, ...]) -> np.ndarray:
        return np.zeros(shape + (self.k,), dtype=np.int64)

    def ones(self, shape: tuple[int, ...]) -> np.ndarray:
        out = self.zeros(shape)
        out[..., 0] = 1
        return out

    def from_int(self, value: int, shape: tuple[int, ...]) -> np.ndarray:
        out = self.zeros(shape)
        out[..., 0] = value % self.p
        return out

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise product of batched field elements."""
        p, k = self.p, self.k
        if k == 1:
            return a * b % p
        lead = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
        conv = np.zeros(lead + (2 * k - 1,), dtype=np.int64)
        for i in range(k):
            conv[..., i : i + k] += a[..., i : i + 1] * b
        conv %= p
        low = conv[..., :k]
        high = conv[..., k:]
        if high.size:
            low = (low + high @ self._red) % p
        return low

    def add_scaled(self, acc: np.ndarray, a: np.ndarray, scalar: int) -> np.ndarray:
        return (acc + a * (scalar % self.p)) % self.p

    def stack_rows(self, values: np.ndarray) -> np.ndarray:
        """Spread extension coordinates into separate base-field rows.

        values has shape (npts, ncols, k); the result has shape
        (npts * k, ncols) over F_p.
        """
        npts, ncols, k = values.shape
        return values.transpose(0, 2, 1).reshape(npts * k, ncols)


def _reduction_rows(modulus: tuple[int, ...], p: int, k: int) -> np.ndarray:
    """Rows j = residue of t^(k+j) mod the modulus, j = 0 .. k-2."""
    red = np.zeros((k - 1, k), dtype=np.int64)
    # t^k = -(modulus minus leading term)
    current = [(-c) % p for c in modulus[:-1]]
    for j in range(k - 1):
        red[j] = current
        # multiply by t
        nxt = [0] + current[:-1]
        carry = current[-1]
        current = [(nxt[i] + carry * red[0][i]) % p for i in range(k)]
    return red


# -- irreducible modulus search ---------------------------------------------


def _poly_mulmod(a, b, mod, p):
    k = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    for i in range(len(out) - 1, k - 1, -1):
        coeff = out[i]
        if coeff:
            out[i] = 0
            for j in range(k + 1):
                out[i - k + j] = (out[i - k + j] - coeff * mod[j]) % p
    return out[:k]


def _poly_powmod_x(exp: int, mod, p):
    """x^exp mod (mod, p) by binary exponentiation; degree of mod is >= 2."""
    k = len(mod) - 1
    result = [1] + [0] * (k - 1)
    base = [0, 1] + [0] * (k - 2)
    while exp:
        if exp & 1:
            result = _poly_mulmod(result, base, mod, p)
        exp >>= 1
        if exp:
            base = _poly_mulmod(base, base, mod, p)
    return result


def _poly_trim(v):
    while v and v[-1] == 0:
        v.pop()
    return v


def _poly_mod(a, b, p):
    a = _poly_trim([x % p for x in a])
    b = _poly_trim([x % p for x in b])
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        coeff = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, x in enumerate(b):
            a[i + shift] = (a[i + shift] - coeff * x) % p
        a = _poly_trim(a)
        if not a:
            break
    return a


def _poly_gcd(a, b, p):
    a = _poly_trim([x % p for x in a])
    b = _poly_trim([x % p for x in b])
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _prime_factors(n):
    out = set()
    f = 2
    while f * f <= n:
        while n % f == 0:
            out.add(f)
            n //= f
        f += 1
    if n > 1:
        out.add(n)
    return out


def _is_irreducible(mod, p, k):
    # x^(p^k) == x mod f, and gcd(x^(p^(k/l)) - x, f) = 1 for primes l | k
    x_itself = [0, 1] + [0] * (k - 2)
    xq = _poly_powmod_x(p**k, mod, p)
    if _poly_trim(list(xq)) != _poly_trim(list(x_itself)):
        return False
    for ell in _prime_factors(k):
        xe = _poly_powmod_x(p ** (k // ell), mod, p)
        diff = [(a - b) % p for a, b in zip(xe, x_itself)]
        g = _poly_gcd(list(mod), diff, p)
        if len(g) - 1 != 0:
            return False
    return True


@lru_cache(maxsize=None)
def _find_modulus(p: int, k: int) -> tuple[int, ...]:
    """Deterministic search for a monic irreducible of degree k over F_p."""
    # enumerate lower coefficient vectors in counting order
    total = p**k
    for code in range(1, total):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        mod = tuple(coeffs) + (1,)
        if _is_irreducible(mod, p, k):
            return mod
    raise RuntimeError(f"no irreducible polynomial found for p={p}, k={k}")


def prime_point_field(p: int) -> PointField:
    return PointField(p, 1, None)


def extension_point_field(p: int, min_size: int = 2**31) -> PointField:
    """Smallest power of F_p of size at least min_size."""
    k = 1
    size = p
    while size < min_size:
        k += 1
        size *= p
    if k == 1:
        return prime_point_field(p)
    return PointField(p, k, _find_modulus(p, k))

"""Arithmetic in GF(p^k) on integer element codes.

An element of GF(p^k) = GF(p)[x]/(m(x)) is stored as the integer
sum(c_i * p**i), where c_i is the coefficient of x^i of its reduced
representative.  Code 0 is zero and code 1 is one, and the codes
0..p-1 form the prime subfield.

Fields with q <= 2**16 use log/antilog tables with the class of x as
generator (the moduli below are primitive).  Addition in odd-characteristic
extensions goes through Zech logarithms.  Larger fields fall back to
polynomial arithmetic on digit lists.
"""

from __future__ import annotations

from functools import lru_cache
import numpy as np

SUPPORTED_PRIMES = (2, 3, 5, 7, 11)
MAX_DEGREE = 16
TABLE_LIMIT = 2**16
# full q x q numpy tables for the vectorized helpers
DENSE_LIMIT = 1024

# Fixed moduli, coefficients listed from x^0 up to the leading 1.  Degrees not
# listed use the first primitive polynomial in order of increasing code.
MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),  # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
    (3, 2): (2, 2, 1),  # x^2 + 2x + 2
}


class FieldError(ValueError):
    pass


def _digits(value: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        value, d = divmod(value, p)
        out.append(d)
    return out


def _undigits(digits, p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


def _polymulmod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for deg in range(len(prod) - 1, k - 1, -1):
        c = prod[deg]
        if c:
            for i in range(k + 1):
                prod[deg - k + i] = (prod[deg - k + i] - c * modulus[i]) % p
    return prod[:k]


def _polypowmod(base: list[int], n: int, modulus: tuple[int, ...], p: int) -> list[int]:
    k = len(modulus) - 1
    result = [1] + [0] * (k - 1)
    while n:
        if n & 1:
            result = _polymulmod(result, base, modulus, p)
        base = _polymulmod(base, base, modulus, p)
        n >>= 1
    return result


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_primitive(modulus: tuple[int, ...], p: int) -> bool:
    """x generates the multiplicative group of GF(p)[x]/(modulus)."""
    k = len(modulus) - 1
    q = p**k
    if modulus[0] == 0:
        return False
    x = [0, 1] + [0] * (k - 2)
    one = [1] + [0] * (k - 1)
    if _polypowmod(x, q - 1, modulus, p) != one:
        return False
    return all(_polypowmod(x, (q - 1) // r, modulus, p) != one for r in _prime_factors(q - 1))


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    if (p, k) in MODULI:
        return MODULI[(p, k)]
    if k == 1:
        return (0, 1)
    for code in range(1, p**k):
        cand = tuple(_digits(code, p, k)) + (1,)
        if _is_primitive(cand, p):
            return cand
    raise FieldError(f"no primitive polynomial of degree {k} over GF({p})")


class GF:
    """Finite field context.  Immutable after construction; obtain via :func:`make_field`."""

    def __init__(self, p: int, k: int = 1):
        if p not in SUPPORTED_PRIMES:
            raise FieldError(f"unsupported characteristic {p}")
        if not 1 <= k <= MAX_DEGREE:
            raise FieldError(f"unsupported extension degree {k}")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = default_modulus(p, k)
        self.tabled = self.q <= TABLE_LIMIT
        self._dense = None
        if self.tabled:
            self._build_tables()

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (make_field, (self.p, self.k))

    @property
    def is_prime(self) -> bool:
        return self.k == 1

    # -- table construction ------------------------------------------------
    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        exp = [0] * (2 * (q - 1))
        log = [-1] * q
        if k == 1:
            g = _prime_generator(p)
            cur = 1
            for i in range(q - 1):
                exp[i] = cur
                log[cur] = i
                cur = cur * g % p
        else:
            digits = [1] + [0] * (k - 1)
            lead = self.modulus[:k]
            for i in range(q - 1):
                code = _undigits(digits, p)
                exp[i] = code
                log[code] = i
                # multiply by x
                top = digits[-1]
                digits = [0] + digits[:-1]
                if top:
                    digits = [(d - top * c) % p for d, c in zip(digits, lead)]
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        self._exp = exp
        self._log = log
        if p > 2 and k > 1:
            # zech[n] = log(1 + g^n), -1 when 1 + g^n = 0
            zech = [-1] * (q - 1)
            for n in range(q - 1):
                d = _digits(exp[n], p, k)
                d[0] = (d[0] + 1) % p
                s = _undigits(d, p)
                zech[n] = log[s] if s else -1
            self._zech = zech

    # -- scalar arithmetic --------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if not a:
            return b
        if not b:
            return a
        if not self.tabled:
            return _undigits([(x + y) % self.p for x, y in zip(_digits(a, self.p, self.k), _digits(b, self.p, self.k))], self.p)
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % (self.q - 1)]
        if z < 0:
            return 0
        return self._exp[la + z]

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return _undigits([(-d) % self.p for d in _digits(a, self.p, self.k)], self.p)

    def sub(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if not a or not b:
            return 0
        if not self.tabled:
            prod = _polymulmod(_digits(a, self.p, self.k), _digits(b, self.p, self.k), self.modulus, self.p)
            return _undigits(prod, self.p)
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError(f"inverse of zero in {self!r}")
        if self.k == 1:
            return pow(a, -1, self.p)
        if not self.tabled:
            return self.pow(a, self.q - 2)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        if n == 0:
            return 1
        if not a:
            return 0
        if self.tabled:
            return self._exp[self._log[a] * n % (self.q - 1)]
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def elements(self) -> range:
        return range(self.q)

    def log(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("log of zero")
        return self._log[a]

    def exp(self, n: int) -> int:
        return self._exp[n % (self.q - 1)]

    def sqrt(self, a: int) -> int | None:
        """Some square root of ``a`` or None."""
        if not a:
            return 0
        if self.p == 2:
            return self.pow(a, self.q // 2)
        la = self._log[a] if self.tabled else None
        if la is not None:
            return self._exp[la // 2] if la % 2 == 0 else None
        for x in range(1, self.q):
            if self.mul(x, x) == a:
                return x
        return None

    def dot(self, u, v) -> int:
        acc = 0
        for a, b in zip(u, v):
            if a and b:
                acc = self.add(acc, self.mul(a, b))
        return acc

    def scale(self, c: int, v) -> tuple[int, ...]:
        return tuple(self.mul(c, x) for x in v)

    def axpy(self, a: int, u, b: int, v) -> tuple[int, ...]:
        """a*u + b*v componentwise."""
        return tuple(self.add(self.mul(a, x), self.mul(b, y)) for x, y in zip(u, v))

    # -- dense numpy tables -------------------------------------------------
    @property
    def dense(self) -> "DenseTables":
        if self._dense is None:
            if self.q > DENSE_LIMIT:
                raise FieldError(f"{self!r} too large for dense tables")
            self._dense = DenseTables(self)
        return self._dense


class DenseTables:
    """q x q lookup arrays for vectorized arithmetic on arrays of codes."""

    def __init__(self, F: GF):
        q = F.q
        self.q = q
        self.p = F.p
        self.prime = F.k == 1
        els = range(q)
        self.add_t = np.array([[F.add(a, b) for b in els] for a in els], dtype=np.int32)
        self.mul_t = np.array([[F.mul(a, b) for b in els] for a in els], dtype=np.int32)
        self.neg_t = np.array([F.neg(a) for a in els], dtype=np.int32)
        self.inv_t = np.array([0] + [F.inv(a) for a in range(1, q)], dtype=np.int32)

    def add(self, a, b):
        if self.prime:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self.add_t[a, b]

    def sub(self, a, b):
        if self.prime:
            return (a - b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self.add_t[a, self.neg_t[b]]

    def mul(self, a, b):
        if self.prime:
            return (a * b) % self.p
        return self.mul_t[a, b]

    def sum(self, a, axis=-1):
        """Field sum along ``axis``."""
        if self.prime:
            return np.sum(a, axis=axis) % self.p
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        a = np.moveaxis(a, axis, 0)
        acc = a[0]
        for part in a[1:]:
            acc = self.add_t[acc, part]
        return acc


def _prime_generator(p: int) -> int:
    for g in range(1, p):
        if len({pow(g, i, p) for i in range(p - 1)}) == p - 1:
            return g
    raise FieldError(p)


@lru_cache(maxsize=None)
def _cached_field(p: int, k: int) -> GF:
    return GF(p, k)


def make_field(p: int, k: int = 1) -> GF:
    """Shared context for GF(p^k); the same object for equal (p, k)."""
    return _cached_field(int(p), int(k))


def field_of_order(q: int) -> GF:
    for p in SUPPORTED_PRIMES:
        k, n = 0, q
        while n % p == 0:
            n //= p
            k += 1
        if n == 1 and k >= 1:
            return make_field(p, k)
    raise FieldError(f"{q} is not a supported prime power")


def elements(F: GF) -> range:
    return F.elements()


def frobenius(F: GF, x: int) -> int:
    return F.frobenius(x)


@lru_cache(maxsize=None)
def _embedding_root(src: GF, dst: GF) -> int:
    if src.p != dst.p or dst.k % src.k:
        raise FieldError(f"cannot embed {src!r} into {dst!r}")
    if src.k == 1:
        return 0
    # smallest-code root in dst of the modulus of src
    for r in range(dst.q):
        acc = 0
        for c in reversed(src.modulus):
            acc = dst.add(dst.mul(acc, r), c)
        if acc == 0:
            return r
    raise FieldError("modulus has no root in target field")


@lru_cache(maxsize=None)
def embedding_table(src: GF, dst: GF) -> tuple[int, ...]:
    """Images of all codes of ``src`` under the fixed embedding into ``dst``."""
    r = _embedding_root(src, dst)
    if src.k == 1:
        return tuple(range(src.q))
    powers = [1]
    for _ in range(src.k - 1):
        powers.append(dst.mul(powers[-1], r))
    out = []
    for code in range(src.q):
        acc = 0
        for d, pw in zip(_digits(code, src.p, src.k), powers):
            if d:
                acc = dst.add(acc, dst.mul(d, pw))
        out.append(acc)
    return tuple(out)


def embed(src: GF, dst: GF, x: int) -> int:
    return embedding_table(src, dst)[x]


def minimal_polynomial(F: GF, x: int) -> tuple[int, ...]:
    """Minimal polynomial of x over the prime field, coefficients low to high."""
    conj = [x]
    while True:
        nxt = F.frobenius(conj[-1])
        if nxt == x:
            break
        conj.append(nxt)
    poly = [1]
    for c in conj:
        # multiply by (t - c)
        shifted = [0] + poly
        scaled = [F.mul(F.neg(c), a) for a in poly] + [0]
        poly = [F.add(a, b) for a, b in zip(shifted, scaled)]
    return tuple(poly)

"""Binary finite fields GF(2^m).

A FieldContext fixes the degree m and an irreducible modulus; elements are
m-bit ints (bit i = coefficient of t^i) wrapped in FieldElem for the public
API. Small fields (m <= 16) run on eagerly built exp/log tables; larger
fields use carryless multiplication with byte-chunked modular reduction.

Contexts are interned: field_make(m, modulus) returns the same object for
the same arguments, and a context is immutable after construction apart
from idempotent derived-value caches (generator, embeddings).
"""

from __future__ import annotations

import threading
from typing import Iterable, Optional

from . import gf2x
from ._ntheory import factorize

_TABLE_MAX = 16

_context_cache: dict[tuple[int, int], "FieldContext"] = {}
_cache_lock = threading.Lock()


def field_make(m: int, modulus: Optional[int] = None) -> "FieldContext":
    """Construct (or fetch the interned) GF(2^m) with the given modulus.

    With modulus=None the lexicographically smallest monic irreducible of
    degree m is used, so reconstruction is deterministic.
    """
    if m < 1:
        raise ValueError(f"field degree must be >= 1, got {m}")
    if modulus is None:
        modulus = gf2x.smallest_irreducible(m)
    key = (m, modulus)
    ctx = _context_cache.get(key)
    if ctx is None:
        with _cache_lock:
            ctx = _context_cache.get(key)
            if ctx is None:
                ctx = FieldContext(m, modulus)
                _context_cache[key] = ctx
    return ctx


def field_from_string(s: str) -> "FieldContext":
    """Parse a field description: "2^m" or "2^m/0xMOD"."""
    text = s.strip()
    mod = None
    if "/" in text:
        text, modtext = text.split("/", 1)
        mod = int(modtext, 16)
    if not text.startswith("2^"):
        raise ValueError(f"field description must look like 2^m, got {s!r}")
    return field_make(int(text[2:]), mod)


class FieldContext:
    """A concrete GF(2^m) with fixed irreducible modulus.

    Exposes int-level arithmetic (mul_i, inv_i, ...) used by the polynomial
    layer, plus the FieldElem factory for scalar work.
    """

    def __init__(self, degree: int, modulus: int):
        if gf2x.degree(modulus) != degree:
            raise ValueError(
                f"modulus 0x{modulus:x} does not have degree {degree}")
        if not gf2x.is_irreducible(modulus):
            raise ValueError(f"modulus 0x{modulus:x} is reducible over GF(2)")
        self.degree = degree
        self.modulus = modulus
        self.order = (1 << degree) - 1  # multiplicative group order
        self._mask = (1 << degree) - 1
        self._lock = threading.Lock()
        self._generator: Optional[int] = None
        self._order_factors: Optional[dict[int, int]] = None
        self._embed_cache: dict[tuple[int, int], tuple[int, ...]] = {}
        self._as_solver: Optional[tuple[list[int], list[int]]] = None
        if degree <= _TABLE_MAX:
            self._build_tables()
        else:
            self._exp = self._log = None
            self._red8 = tuple(
                gf2x.mod(b << degree, modulus) for b in range(256))

    # -- construction helpers -------------------------------------------------

    def _build_tables(self) -> None:
        g = self._find_generator_raw()
        order = self.order
        exp = [1] * (2 * order)
        v = 1
        for i in range(order):
            exp[i] = v
            exp[i + order] = v
            v = self._mul_raw(v, g)
        if v != 1:
            raise AssertionError("generator chain did not close (bug)")
        log = [-1] * (1 << self.degree)
        for i in range(order):
            log[exp[i]] = i
        self._exp = exp
        self._log = log
        self._generator = g

    def _mul_raw(self, a: int, b: int) -> int:
        return self._reduce(gf2x.mul(a, b))

    def _reduce(self, v: int) -> int:
        m = self.degree
        mod = self.modulus
        if self.degree <= _TABLE_MAX and self._exp is not None:
            while v.bit_length() > m:
                v ^= mod << (v.bit_length() - 1 - m)
            return v
        red8 = self._red8
        vb = v.bit_length()
        while vb > m:
            k = (vb - m - 1) >> 3
            chunk = (v >> (m + 8 * k)) & 0xFF
            v ^= (chunk << (m + 8 * k)) ^ (red8[chunk] << (8 * k))
            vb = v.bit_length()
        return v

    def _find_generator_raw(self) -> int:
        if self.order == 1:
            return 1
        factors = self._factored_order()
        cofactors = [self.order // p for p in factors]
        for g in range(2, 1 << self.degree):
            if all(self._pow_noreduce(g, cf) != 1 for cf in cofactors):
                return g
        raise AssertionError("no generator found (unreachable)")

    def _pow_noreduce(self, a: int, e: int) -> int:
        # square-and-multiply without table support (used pre-table-build)
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def _factored_order(self) -> dict[int, int]:
        if self._order_factors is None:
            self._order_factors = factorize(self.order) if self.order > 1 else {}
        return self._order_factors

    # -- int-level arithmetic --------------------------------------------------

    def mul_i(self, a: int, b: int) -> int:
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[self._log[a] + self._log[b]]
        return self._reduce(gf2x.mul(a, b))

    def sqr_i(self, a: int) -> int:
        if self._exp is not None:
            if a == 0:
                return 0
            return self._exp[self._log[a] * 2 % self.order]
        return self._reduce(gf2x.sqr(a))

    def inv_i(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        if self._exp is not None:
            return self._exp[self.order - self._log[a]]
        # binary extended Euclid on bit vectors
        t1, t2 = 0, 1
        r1, r2 = self.modulus, a
        r1l, r2l = self.degree + 1, r2.bit_length()
        while r2:
            q = r1l - r2l
            r1 ^= r2 << q
            t1 ^= t2 << q
            r1l = r1.bit_length()
            if r1 < r2:
                t1, t2 = t2, t1
                r1, r2 = r2, r1
                r1l, r2l = r2l, r1l
        assert r1 == 1
        return t1

    def div_i(self, a: int, b: int) -> int:
        return self.mul_i(a, self.inv_i(b))

    def pow_i(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv_i(a)
            e = -e
        if a == 0:
            return 0 if e else 1
        if self._exp is not None:
            return self._exp[self._log[a] * e % self.order]
        e %= self.order
        r = 1
        while e:
            if e & 1:
                r = self.mul_i(r, a)
            a = self.sqr_i(a)
            e >>= 1
        return r

    def sqrt_i(self, a: int) -> int:
        if self._exp is not None:
            if a == 0:
                return 0
            return self._exp[self._log[a] * ((self.order + 1) // 2) % self.order]
        for _ in range(self.degree - 1):
            a = self.sqr_i(a)
        return a

    def trace_i(self, a: int) -> int:
        t = a
        r = a
        for _ in range(self.degree - 1):
            t = self.sqr_i(t)
            r ^= t
        assert r in (0, 1)
        return r

    def ang_i(self, a: int) -> int:
        """a + 1/a (nonzero a)."""
        return a ^ self.inv_i(a)

    def frob_i(self, a: int, k: int = 1) -> int:
        """a^(2^k)."""
        for _ in range(k % self.degree if self.degree else 0):
            a = self.sqr_i(a)
        return a

    # -- element factories -----------------------------------------------------

    def elem(self, bits: int) -> "FieldElem":
        if not 0 <= bits <= self._mask:
            raise ValueError(
                f"element 0x{bits:x} out of range for GF(2^{self.degree})")
        return FieldElem(bits, self)

    def elem_from_hex(self, text: str) -> "FieldElem":
        return self.elem(int(text, 16))

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(0, self)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(1, self)

    def elements(self) -> Iterable["FieldElem"]:
        """All 2^m elements, ordered by encoding (desk-scale fields only)."""
        return (FieldElem(b, self) for b in range(1 << self.degree))

    def generator(self) -> "FieldElem":
        """Smallest-encoding element of multiplicative order 2^m - 1."""
        if self._generator is None:
            with self._lock:
                if self._generator is None:
                    self._generator = self._find_generator_raw()
        return FieldElem(self._generator, self)

    # -- Artin-Schreier solver (z^2 + z = c) ------------------------------------

    def _solve_as_i(self, c: int) -> Optional[int]:
        m = self.degree
        if m % 2 == 1:
            # half-trace
            h = c
            t = c
            for _ in range((m - 1) // 2):
                t = self.sqr_i(self.sqr_i(t))
                h ^= t
            return h if (self.sqr_i(h) ^ h) == c else None
        # even m: solve the GF(2)-linear system for z |-> z^2 + z
        if self._as_solver is None:
            with self._lock:
                if self._as_solver is None:
                    cols = [self.sqr_i(1 << j) ^ (1 << j) for j in range(m)]
                    self._as_solver = self._gauss_prepare(cols)
        pivots, rows = self._as_solver
        # rows are [col bits | rhs-combination bits]; solve on the fly
        z = 0
        r = c
        for pc, row in zip(pivots, rows):
            if (r >> pc) & 1:
                r ^= row & self._mask
                z ^= row >> self.degree
        return z if (self.sqr_i(z) ^ z) == c else None

    def _gauss_prepare(self, cols: list[int]) -> tuple[list[int], list[int]]:
        m = self.degree
        # augmented rows: low m bits = image column, high m bits = unit vector
        rows = [cols[j] | (1 << (m + j)) for j in range(m)]
        pivots: list[int] = []
        kept: list[int] = []
        for bit in range(m):
            piv = None
            for i, row in enumerate(rows):
                if (row >> bit) & 1:
                    piv = i
                    break
            if piv is None:
                continue
            prow = rows.pop(piv)
            rows = [r ^ prow if (r >> bit) & 1 else r for r in rows]
            pivots.append(bit)
            kept.append(prow)
        return pivots, kept

    # -- misc --------------------------------------------------------------------

    def __repr__(self) -> str:
        return f"FieldContext(2^{self.degree}/0x{self.modulus:x})"

    def describe(self) -> str:
        return f"2^{self.degree}/0x{self.modulus:x}"


class FieldElem:
    """Element of a FieldContext; a value type, never mixed across contexts."""

    __slots__ = ("bits", "ctx")

    def __init__(self, bits: int, ctx: FieldContext):
        self.bits = bits
        self.ctx = ctx

    def _check(self, other: "FieldElem") -> None:
        if not isinstance(other, FieldElem):
            raise TypeError(f"expected FieldElem, got {type(other).__name__}")
        if other.ctx is not self.ctx:
            raise ValueError(
                f"cross-context arithmetic: {self.ctx.describe()} vs "
                f"{other.ctx.describe()}")

    def __add__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.bits ^ other.bits, self.ctx)

    __sub__ = __add__

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.ctx.mul_i(self.bits, other.bits), self.ctx)

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.ctx.div_i(self.bits, other.bits), self.ctx)

    def __pow__(self, e: int) -> "FieldElem":
        return FieldElem(self.ctx.pow_i(self.bits, e), self.ctx)

    def inv(self) -> "FieldElem":
        return FieldElem(self.ctx.inv_i(self.bits), self.ctx)

    def square(self) -> "FieldElem":
        return FieldElem(self.ctx.sqr_i(self.bits), self.ctx)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.ctx is other.ctx and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.bits, id(self.ctx)))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __repr__(self) -> str:
        return f"0x{self.bits:x}"


# -- spec-surface operations ---------------------------------------------------

def trace_abs(x: FieldElem) -> int:
    """Absolute trace to GF(2): sum of x^(2^i), reported as 0/1."""
    return x.ctx.trace_i(x.bits)


def sqrt(x: FieldElem) -> FieldElem:
    """The unique square root x^(2^(m-1))."""
    return FieldElem(x.ctx.sqrt_i(x.bits), x.ctx)


def ang(x: FieldElem) -> FieldElem:
    """x + 1/x, defined for nonzero x."""
    return FieldElem(x.ctx.ang_i(x.bits), x.ctx)


def solve_artin_schreier(c: FieldElem) -> tuple[FieldElem, ...]:
    """Both solutions of z^2 + z = c, or () when trace_abs(c) = 1."""
    z = c.ctx._solve_as_i(c.bits)
    if z is None:
        return ()
    return (FieldElem(z, c.ctx), FieldElem(z ^ 1, c.ctx))


def embed(sub: FieldContext, sup: FieldContext, x: FieldElem) -> FieldElem:
    """Canonical injection GF(2^d) -> GF(2^E) for d | E.

    The residue class t of sub maps to the smallest-encoding root of
    sub.modulus in sup; the map is cached per (sub, sup) pair.
    """
    if x.ctx is not sub:
        raise ValueError("element does not belong to the source field")
    if sup.degree % sub.degree != 0:
        raise ValueError(
            f"degree {sub.degree} does not divide {sup.degree}; no embedding")
    if sub is sup:
        return x
    powers = _embed_powers(sub, sup)
    bits = x.bits
    acc = 0
    i = 0
    while bits:
        if bits & 1:
            acc ^= powers[i]
        bits >>= 1
        i += 1
    return FieldElem(acc, sup)


def _embed_powers(sub: FieldContext, sup: FieldContext) -> tuple[int, ...]:
    key = (sub.degree, sub.modulus)
    powers = sup._embed_cache.get(key)
    if powers is not None:
        return powers
    from .poly import UPoly, roots_in_field_i

    lifted = UPoly(sup, [(sub.modulus >> i) & 1
                         for i in range(sub.degree + 1)])
    roots = roots_in_field_i(lifted)
    if len(roots) != sub.degree:
        raise AssertionError("modulus did not split in the superfield (bug)")
    r = min(roots)
    pw = [1] * sub.degree
    for i in range(1, sub.degree):
        pw[i] = sup.mul_i(pw[i - 1], r)
    result = tuple(pw)
    with sup._lock:
        sup._embed_cache.setdefault(key, result)
    return sup._embed_cache[key]


def mu_subgroup(n: int, ambient: FieldContext) -> list[FieldElem]:
    """All q+1 elements of the cyclic group of (q+1)-th roots of unity
    (q = 2^n) inside ambient, sorted by encoding. Requires 2n | degree."""
    if ambient.degree % (2 * n) != 0:
        raise ValueError(
            f"need 2*{n} | {ambient.degree} so that GF(2^{2*n}) embeds")
    q = 1 << n
    step = ambient.order // (q + 1)
    prime_cofs = [(q + 1) // p for p in factorize(q + 1)]
    for x in range(2, 1 << ambient.degree):
        h = ambient.pow_i(x, step)
        if h != 1 and all(ambient.pow_i(h, cf) != 1 for cf in prime_cofs):
            out = []
            v = 1
            for _ in range(q + 1):
                out.append(v)
                v = ambient.mul_i(v, h)
            assert v == 1 and len(set(out)) == q + 1
            return [FieldElem(b, ambient) for b in sorted(out)]
    raise AssertionError("no element of full order q+1 found (unreachable)")


def fq_one_set(n: int, ctx: FieldContext) -> list[FieldElem]:
    """The q/2 elements of GF(2^n) with absolute trace 1, by encoding."""
    if ctx.degree != n:
        raise ValueError(f"context degree {ctx.degree} != {n}")
    return [FieldElem(b, ctx) for b in range(1 << n) if ctx.trace_i(b) == 1]


def fq_zero_set(n: int, ctx: FieldContext) -> list[FieldElem]:
    """The q/2 elements of GF(2^n) with absolute trace 0, by encoding."""
    if ctx.degree != n:
        raise ValueError(f"context degree {ctx.degree} != {n}")
    return [FieldElem(b, ctx) for b in range(1 << n) if ctx.trace_i(b) == 0]

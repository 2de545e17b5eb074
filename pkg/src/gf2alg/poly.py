"""Dense univariate polynomials over a FieldContext.

Coefficients are stored as raw int encodings (index = degree, trailing
entry nonzero; the zero polynomial has an empty list). The factorization
pipeline is squarefree -> distinct-degree -> equal-degree, with the
char-2 additive trace map doing the equal-degree splitting.
"""

from __future__ import annotations

import math
import random
from typing import Iterable, Optional, Sequence, Union

from .gf2 import FieldContext, FieldElem, embed, field_make

Coeffs = Sequence[Union[int, FieldElem]]


class UPoly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldContext, coeffs: Coeffs = ()):
        cs = [c.bits if isinstance(c, FieldElem) else c for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.ctx = ctx
        self.coeffs = cs

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ctx: FieldContext) -> "UPoly":
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx: FieldContext) -> "UPoly":
        return cls(ctx, (1,))

    @classmethod
    def x(cls, ctx: FieldContext) -> "UPoly":
        return cls(ctx, (0, 1))

    @classmethod
    def monomial(cls, ctx: FieldContext, coeff: int, deg: int) -> "UPoly":
        if coeff == 0:
            return cls(ctx, ())
        return cls(ctx, [0] * deg + [coeff])

    @classmethod
    def from_terms(cls, ctx: FieldContext,
                   terms: Iterable[tuple[int, int]]) -> "UPoly":
        """Build from (degree, coefficient) pairs (later pairs xor in)."""
        cs: list[int] = []
        for deg, coeff in terms:
            if deg >= len(cs):
                cs.extend([0] * (deg + 1 - len(cs)))
            cs[deg] ^= coeff
        return cls(ctx, cs)

    # -- basics ----------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.ctx is other.ctx and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((tuple(self.coeffs), id(self.ctx)))

    def __repr__(self) -> str:
        return f"UPoly(2^{self.ctx.degree}, [{to_string(self)}])"

    def _check(self, other: "UPoly") -> None:
        if other.ctx is not self.ctx:
            raise ValueError("polynomials belong to different field contexts")

    # -- ring operations ---------------------------------------------------------

    def __add__(self, other: "UPoly") -> "UPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return UPoly(self.ctx, out)

    __sub__ = __add__

    def __mul__(self, other: "UPoly") -> "UPoly":
        self._check(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly(ctx, ())
        if ctx.degree == 1:  # GF(2): pack into ints, carryless multiply
            from . import gf2x
            pa = sum(c << i for i, c in enumerate(a))
            pb = sum(c << i for i, c in enumerate(b))
            pc = gf2x.mul(pa, pb)
            return UPoly(ctx, [(pc >> i) & 1 for i in range(pc.bit_length())])
        if len(a) > len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        exp, log = ctx._exp, ctx._log
        if exp is not None:
            lb = len(b)
            for i, ai in enumerate(a):
                if ai:
                    la = log[ai]
                    seg = out[i:i + lb]
                    out[i:i + lb] = [
                        s ^ exp[la + log[bj]] if bj else s
                        for s, bj in zip(seg, b)
                    ]
        else:
            mul_i = ctx.mul_i
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        if bj:
                            out[i + j] ^= mul_i(ai, bj)
        return UPoly(ctx, out)

    def scale(self, c: int) -> "UPoly":
        if c == 0:
            return UPoly(self.ctx, ())
        if c == 1:
            return self
        mul_i = self.ctx.mul_i
        return UPoly(self.ctx, [mul_i(a, c) for a in self.coeffs])

    def shift(self, k: int) -> "UPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return UPoly(self.ctx, [0] * k + self.coeffs)

    def square(self) -> "UPoly":
        sqr_i = self.ctx.sqr_i
        out = [0] * (2 * len(self.coeffs) - 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            if c:
                out[2 * i] = sqr_i(c)
        return UPoly(self.ctx, out)

    def __pow__(self, e: int) -> "UPoly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = UPoly.one(self.ctx)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base.square()
        return result

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        ctx = self.ctx
        db = other.degree
        if self.degree < db:
            return UPoly(ctx, ()), self
        inv_lead = ctx.inv_i(other.coeffs[-1])
        rem = list(self.coeffs)
        quot = [0] * (len(rem) - db)
        mul_i = ctx.mul_i
        bcs = other.coeffs
        for top in range(len(rem) - 1, db - 1, -1):
            c = rem[top]
            if c:
                factor = mul_i(c, inv_lead)
                quot[top - db] = factor
                base = top - db
                for j in range(db + 1):
                    if bcs[j]:
                        rem[base + j] ^= mul_i(factor, bcs[j])
        return UPoly(ctx, quot), UPoly(ctx, rem[:db])

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[1]

    def monic(self) -> "UPoly":
        if self.is_zero() or self.coeffs[-1] == 1:
            return self
        return self.scale(self.ctx.inv_i(self.coeffs[-1]))

    def derivative(self) -> "UPoly":
        # char 2: even-degree terms vanish
        out = [0] * max(len(self.coeffs) - 1, 0)
        for i in range(1, len(self.coeffs), 2):
            out[i - 1] = self.coeffs[i]
        return UPoly(self.ctx, out)

    def eval_i(self, x: int) -> int:
        acc = 0
        mul_i = self.ctx.mul_i
        for c in reversed(self.coeffs):
            acc = mul_i(acc, x) ^ c
        return acc

    def eval(self, x: FieldElem) -> FieldElem:
        if x.ctx is not self.ctx:
            raise ValueError("evaluation point from a different context")
        return FieldElem(self.eval_i(x.bits), self.ctx)

    def compose(self, inner: "UPoly") -> "UPoly":
        """self(inner(x))."""
        self._check(inner)
        acc = UPoly(self.ctx, ())
        for c in reversed(self.coeffs):
            acc = acc * inner + UPoly(self.ctx, (c,))
        return acc

    def reverse(self) -> "UPoly":
        """x^deg * self(1/x)."""
        return UPoly(self.ctx, list(reversed(self.coeffs)))


def gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd."""
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def pow_mod(base: UPoly, e: int, modpoly: UPoly) -> UPoly:
    result = UPoly.one(base.ctx)
    base = base % modpoly
    while e:
        if e & 1:
            result = (result * base) % modpoly
        e >>= 1
        if e:
            base = (base * base) % modpoly
    return result


def frob_pow_mod(h: UPoly, times: int, modpoly: UPoly) -> UPoly:
    """h^(2^times) mod modpoly by repeated squaring."""
    for _ in range(times):
        h = h.square() % modpoly
    return h


def poly_from_roots(ctx: FieldContext, roots: Iterable[int]) -> UPoly:
    """Monic product of (x + r) over the given root encodings."""
    out = [1]  # lowest degree first throughout
    mul_i = ctx.mul_i
    for r in roots:
        out.append(0)
        for i in range(len(out) - 2, -1, -1):
            out[i + 1] ^= out[i]
            out[i] = mul_i(out[i], r)
    return UPoly(ctx, out)


def embed_poly(f: UPoly, sup: FieldContext) -> UPoly:
    """Coefficient-wise canonical embedding into a larger field."""
    sub = f.ctx
    return UPoly(sup, [embed(sub, sup, FieldElem(c, sub)).bits
                       for c in f.coeffs])


def from_string(ctx: FieldContext, text: str) -> UPoly:
    """Parse the CLI text format: comma-separated hex coefficients,
    lowest degree first."""
    parts = [p.strip() for p in text.split(",")]
    return UPoly(ctx, [int(p, 16) for p in parts if p])


def to_string(f: UPoly) -> str:
    if f.is_zero():
        return "0x0"
    return ",".join(f"0x{c:x}" for c in f.coeffs)


# -- factorization ------------------------------------------------------------


def _frobenius_root(f: UPoly) -> UPoly:
    """g with g^2 = f (requires all odd coefficients zero)."""
    sqrt_i = f.ctx.sqrt_i
    out = [0] * (f.degree // 2 + 1)
    for i, c in enumerate(f.coeffs):
        if c:
            if i % 2:
                raise ValueError("polynomial is not a square")
            out[i // 2] = sqrt_i(c)
    return UPoly(f.ctx, out)


def _squarefree_list(f: UPoly) -> list[tuple[UPoly, int]]:
    """Squarefree decomposition of monic f: [(g, multiplicity)] with the
    g pairwise coprime, squarefree, and prod g^mult = f."""
    if f.degree < 1:
        return []
    out: list[tuple[UPoly, int]] = []
    fp = f.derivative()
    if fp.is_zero():
        for g, m in _squarefree_list(_frobenius_root(f)):
            out.append((g, 2 * m))
        return out
    c = gcd(f, fp)
    w = f // c
    i = 1
    while w.degree > 0:
        y = gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((z, i))
        w = y
        c = c // y
        i += 1
    if c.degree > 0:
        for g, m in _squarefree_list(_frobenius_root(c)):
            out.append((g, 2 * m))
    return out


def _ddf(f: UPoly) -> list[tuple[UPoly, int]]:
    """Distinct-degree factorization of monic squarefree f:
    [(product of all irreducible factors of degree d, d)]."""
    ctx = f.ctx
    k = ctx.degree
    out: list[tuple[UPoly, int]] = []
    x = UPoly.x(ctx)
    h = x % f
    v = f
    d = 0
    while v.degree > 2 * (d + 1) - 1:
        d += 1
        h = frob_pow_mod(h, k, v)
        g = gcd(h + (x % v), v)
        if g.degree > 0:
            out.append((g, d))
            v = v // g
            h = h % v
    if v.degree > 0:
        out.append((v, v.degree))
    return out


def _edf(f: UPoly, d: int, rng: random.Random) -> list[UPoly]:
    """Equal-degree splitting: f = product of irreducibles of degree d."""
    ctx = f.ctx
    if f.degree == d:
        return [f.monic()]
    ext = ctx.degree * d
    while True:
        h = UPoly(ctx, [rng.randrange(1 << ctx.degree)
                        for _ in range(f.degree)])
        if h.is_zero():
            continue
        # additive trace from GF(2^(k*d)) down to GF(2)
        t = h % f
        acc = t
        for _ in range(ext - 1):
            t = t.square() % f
            acc = acc + t
        g = gcd(acc, f)
        if 0 < g.degree < f.degree:
            return _edf(g, d, rng) + _edf(f // g, d, rng)


def factor(f: UPoly, seed: int = 0) -> list[tuple[UPoly, int]]:
    """Complete factorization into monic irreducibles with multiplicities,
    deterministic for a given seed; sorted by (degree, coefficients)."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree < 1:
        return []
    rng = random.Random(seed)
    out: list[tuple[UPoly, int]] = []
    for part, mult in _squarefree_list(f.monic()):
        for prod_, d in _ddf(part):
            for irr in _edf(prod_, d, rng):
                out.append((irr, mult))
    out.sort(key=lambda gm: (gm[0].degree, list(reversed(gm[0].coeffs))))
    return out


def fact_type(f: UPoly, seed: int = 0) -> tuple[int, ...]:
    """Multiset of irreducible factor degrees (multiplicities expanded),
    sorted ascending."""
    degs: list[int] = []
    for g, m in factor(f, seed):
        degs.extend([g.degree] * m)
    return tuple(sorted(degs))


def squarefree_part(f: UPoly, seed: int = 0) -> UPoly:
    out = UPoly.one(f.ctx)
    for g, _ in _squarefree_list(f.monic()):
        out = out * g
    return out


def splitting_degree(f: UPoly, seed: int = 0) -> int:
    """lcm of irreducible factor degrees (of the squarefree part): the
    splitting field of f over GF(2^k) is GF(2^(k * this))."""
    if f.is_zero():
        raise ValueError("zero polynomial has no splitting field")
    out = 1
    for part, _ in _squarefree_list(f.monic()):
        for _, d in _ddf(part):
            out = math.lcm(out, d)
    return out


def _one_root_i(f: UPoly, rng: random.Random) -> int:
    """One root of monic f, all of whose roots lie in f.ctx."""
    ctx = f.ctx
    while f.degree > 1:
        h = UPoly(ctx, [rng.randrange(1 << ctx.degree)
                        for _ in range(f.degree)])
        if h.is_zero():
            continue
        t = h % f
        acc = t
        for _ in range(ctx.degree - 1):
            t = t.square() % f
            acc = acc + t
        g = gcd(acc, f)
        if 0 < g.degree < f.degree:
            f = g if g.degree <= f.degree - g.degree else f // g
    return f.coeffs[0]


def roots_in_field_i(f: UPoly, seed: int = 0) -> list[int]:
    """All roots of f lying in its own context, sorted by encoding."""
    ctx = f.ctx
    f = squarefree_part(f, seed)
    x = UPoly.x(ctx)
    h = frob_pow_mod(x % f, ctx.degree, f)
    lin = gcd(h + (x % f), f)
    rng = random.Random(seed)
    roots: list[int] = []
    while lin.degree > 0:
        r = _one_root_i(lin, rng)
        roots.append(r)
        lin = lin // UPoly(ctx, (r, 1))
    return sorted(roots)


def _roots_of_irreducible(g: UPoly, ambient: FieldContext,
                          rng: random.Random) -> list[int]:
    """All roots (in ambient) of g irreducible over its base GF(2^k);
    requires k*deg(g) | ambient.degree."""
    ctx = g.ctx
    d = g.degree
    if d == 1:
        r = embed(ctx, ambient, FieldElem(g.coeffs[0], ctx))
        return [r.bits]
    lifted = embed_poly(g.monic(), ambient)
    # find one root by trace splitting, then take Frobenius conjugates
    f = lifted
    while f.degree > 1:
        h = UPoly(ambient, [rng.randrange(1 << ambient.degree)
                            for _ in range(f.degree)])
        if h.is_zero():
            continue
        t = h % f
        acc = t
        for _ in range(ambient.degree - 1):
            t = t.square() % f
            acc = acc + t
        split = gcd(acc, f)
        if 0 < split.degree < f.degree:
            f = split if split.degree <= f.degree - split.degree \
                else f // split
    root = f.coeffs[0]
    out = [root]
    for _ in range(d - 1):
        root = ambient.frob_i(root, ctx.degree)
        out.append(root)
    assert len(set(out)) == d
    return out


def roots_in_given_field(f: UPoly, ambient: FieldContext,
                         seed: int = 0) -> list[FieldElem]:
    """All roots of squarefree f inside the given extension field, sorted
    by encoding; raises if some factor's roots do not live there."""
    ctx = f.ctx
    facs = factor(f, seed)
    if any(m > 1 for _, m in facs):
        raise ValueError("roots_in_given_field expects a squarefree input")
    rng = random.Random(seed)
    roots: list[int] = []
    for g, _ in facs:
        if ambient.degree % (ctx.degree * g.degree) != 0:
            raise ValueError(
                f"a degree-{g.degree} factor does not split in "
                f"GF(2^{ambient.degree})")
        roots.extend(_roots_of_irreducible(g, ambient, rng))
    lifted = embed_poly(f, ambient)
    for r in roots:
        if lifted.eval_i(r) != 0:
            raise AssertionError("root re-verification failed (bug)")
    return [FieldElem(r, ambient) for r in sorted(roots)]


def roots_in_splitting_field(
        f: UPoly, seed: int = 0,
        min_degree: int = 1) -> tuple[FieldContext, list[FieldElem]]:
    """Construct the splitting field of squarefree f and return all roots,
    sorted by encoding. min_degree forces extra divisibility of the
    ambient degree (e.g. so that GF(q^2) also embeds)."""
    ctx = f.ctx
    facs = factor(f, seed)
    if any(m > 1 for _, m in facs):
        raise ValueError("roots_in_splitting_field expects a squarefree input")
    s = 1
    for g, _ in facs:
        s = math.lcm(s, g.degree)
    ambient = field_make(math.lcm(ctx.degree * s, min_degree))
    rng = random.Random(seed)
    roots: list[int] = []
    for g, _ in facs:
        roots.extend(_roots_of_irreducible(g, ambient, rng))
    lifted = embed_poly(f, ambient)
    for r in roots:
        if lifted.eval_i(r) != 0:
            raise AssertionError("root re-verification failed (bug)")
    if len(set(roots)) != f.degree:
        raise AssertionError("splitting produced duplicate roots (bug)")
    return ambient, [FieldElem(r, ambient) for r in sorted(roots)]

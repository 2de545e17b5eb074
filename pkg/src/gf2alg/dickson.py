"""Dickson polynomials and the MCM family in characteristic 2.

D_k is the monic degree-k polynomial with D_k(u + 1/u) = u^k + 1/u^k.
T(x) = sum of x^(2^i - 1) for i < n, and the Mueller-Cohen-Matthews
polynomial is C(x) = x * T(x)^(q+1) of degree (q/2)(q-1), q = 2^n.
"""

from __future__ import annotations

import random

from .gf2 import FieldContext, field_make
from .poly import UPoly

_GF2 = None


def _gf2() -> FieldContext:
    global _GF2
    if _GF2 is None:
        _GF2 = field_make(1)
    return _GF2


def lift01(f: UPoly, ctx: FieldContext) -> UPoly:
    """Reinterpret a 0/1-coefficient polynomial in another context
    (0 and 1 encode identically in every binary field)."""
    if any(c > 1 for c in f.coeffs):
        raise ValueError("polynomial has coefficients outside GF(2)")
    return UPoly(ctx, list(f.coeffs))


def dickson_poly(k: int, ctx: FieldContext = None) -> UPoly:
    """D_k by the recurrence D_0 = 0, D_1 = x, D_k = x*D_{k-1} + D_{k-2}.

    D_0 is the zero polynomial: the integer value 2 vanishes in char 2,
    matching D_0(u + 1/u) = 2 = 0.
    """
    if k < 0:
        raise ValueError("Dickson index must be nonnegative")
    if ctx is None:
        ctx = _gf2()
    prev = UPoly.zero(ctx)  # D_0
    if k == 0:
        return prev
    cur = UPoly.x(ctx)  # D_1
    x = UPoly.x(ctx)
    for _ in range(k - 1):
        prev, cur = cur, x * cur + prev
    return cur


def dickson_qm1_closed(n: int, ctx: FieldContext = None) -> UPoly:
    """Closed form D_{q-1}(Y) = sum_{i=1}^{n} Y^(q - 2^i + 1), q = 2^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if ctx is None:
        ctx = _gf2()
    q = 1 << n
    return UPoly.from_terms(ctx, [(q - (1 << i) + 1, 1) for i in range(1, n + 1)])


def dickson_qp1_closed(n: int, ctx: FieldContext = None) -> UPoly:
    """Closed form D_{q+1}(Y) = Y^(q+1) + D_{q-1}(Y), q = 2^n."""
    if ctx is None:
        ctx = _gf2()
    q = 1 << n
    return UPoly.from_terms(ctx, [(q + 1, 1)]) + dickson_qm1_closed(n, ctx)


def t_poly(n: int, ctx: FieldContext = None) -> UPoly:
    """T(x) = sum of x^(2^i - 1), i = 0..n-1."""
    if n < 2:
        raise ValueError("the MCM family requires q = 2^n > 2")
    if ctx is None:
        ctx = _gf2()
    return UPoly.from_terms(ctx, [((1 << i) - 1, 1) for i in range(n)])


def t_rev_poly(n: int, ctx: FieldContext = None) -> UPoly:
    """T_rev(x) = x^deg(T) * T(1/x) = sum of x^(q/2 - 2^i)."""
    if n < 2:
        raise ValueError("the MCM family requires q = 2^n > 2")
    if ctx is None:
        ctx = _gf2()
    half = 1 << (n - 1)
    return UPoly.from_terms(ctx, [(half - (1 << i), 1) for i in range(n)])


def mcm_poly(n: int, ctx: FieldContext = None) -> UPoly:
    """C(x) = x * T(x)^(q+1), monic of degree (q/2)(q-1)."""
    if n < 2:
        raise ValueError("the MCM family requires q = 2^n > 2")
    if ctx is None:
        ctx = _gf2()
    q = 1 << n
    t = t_poly(n, ctx)
    return (t ** (q + 1)).shift(1)


def mcm_eval_i(n: int, ctx: FieldContext, x: int) -> int:
    """Evaluate C at a field element: with s = x*T(x) = sum x^(2^i),
    C(x) = s^(q+1) / x^q for x != 0 (and C(0) = 0)."""
    if x == 0:
        return 0
    s = x
    t = x
    for _ in range(n - 1):
        t = ctx.sqr_i(t)
        s ^= t
    if s == 0:
        return 0
    sq = ctx.frob_i(s, n)          # s^q
    num = ctx.mul_i(sq, s)         # s^(q+1)
    return ctx.div_i(num, ctx.frob_i(x, n))


def verify_dickson_relations(n: int, trials: int = 32,
                             seed: int = 0) -> list[str]:
    """Exact checks of the product rule D_k D_l = D_{k+l} + D_{k-l}, the
    Frobenius rule D_{2k} = D_k^2, and the defining property
    D_k(<u>) = <u^k> at random nonzero u in GF(2^(2n)).

    Returns a list of failure descriptions (empty = all identities hold).
    """
    failures: list[str] = []
    ctx = _gf2()
    q = 1 << n
    top = 2 * q
    table = [dickson_poly(i, ctx) for i in range(2 * top + 1)]
    for k in range(top + 1):
        for l in range(k + 1):
            if table[k] * table[l] != table[k + l] + table[k - l]:
                failures.append(f"product rule failed at k={k}, l={l}")
    for k in range(top + 1):
        if table[2 * k] != table[k].square():
            failures.append(f"Frobenius rule failed at k={k}")
    big = field_make(2 * n)
    rng = random.Random(seed)
    for _ in range(trials):
        u = rng.randrange(1, 1 << (2 * n))
        ang_u = big.ang_i(u)
        for k in (2, 3, q - 1, q, q + 1, 2 * q):
            lhs = lift01(table[k], big).eval_i(ang_u)
            rhs = big.ang_i(big.pow_i(u, k))
            if lhs != rhs:
                failures.append(
                    f"defining property failed at u=0x{u:x}, k={k}")
    return failures

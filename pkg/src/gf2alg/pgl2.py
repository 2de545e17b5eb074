"""PGL2(Fq) for q = 2^n: linear-fractional action on the projective line,
element orders and the trace classification, the cyclic subgroups of order
q+1 and their dihedral extensions, and the exhaustive stabilizer scan for
roots of the MCM polynomial.

Projective points are ints (field encodings) with INF = -1 for infinity;
group elements are canonicalized 2x2 matrices over Fq with the first
nonzero entry among (a, b, c) scaled to 1.
"""

from __future__ import annotations

import random
from typing import Iterable, NamedTuple, Optional

from .gf2 import FieldContext, field_make, fq_one_set

INF = -1

IDENTITY: "PGL2Elem"


class PGL2Elem(NamedTuple):
    a: int
    b: int
    c: int
    d: int


IDENTITY = PGL2Elem(1, 0, 0, 1)


def make(ctx: FieldContext, a: int, b: int, c: int, d: int) -> PGL2Elem:
    """Canonicalized element; rejects singular matrices."""
    det = ctx.mul_i(a, d) ^ ctx.mul_i(b, c)
    if det == 0:
        raise ValueError("singular matrix does not define a PGL2 element")
    lead = a or b or c
    if lead == 1:
        return PGL2Elem(a, b, c, d)
    il = ctx.inv_i(lead)
    mul = ctx.mul_i
    return PGL2Elem(mul(a, il), mul(b, il), mul(c, il), mul(d, il))


def act(ctx: FieldContext, g: PGL2Elem, w: int) -> int:
    """Linear-fractional action on P^1(Fq) (w = INF for infinity)."""
    if w == INF:
        if g.c == 0:
            return INF
        return ctx.div_i(g.a, g.c)
    num = ctx.mul_i(g.a, w) ^ g.b
    den = ctx.mul_i(g.c, w) ^ g.d
    if den == 0:
        return INF
    return ctx.div_i(num, den)


def mul(ctx: FieldContext, g: PGL2Elem, h: PGL2Elem) -> PGL2Elem:
    m = ctx.mul_i
    return make(ctx,
                m(g.a, h.a) ^ m(g.b, h.c),
                m(g.a, h.b) ^ m(g.b, h.d),
                m(g.c, h.a) ^ m(g.d, h.c),
                m(g.c, h.b) ^ m(g.d, h.d))


def inverse(ctx: FieldContext, g: PGL2Elem) -> PGL2Elem:
    # adjugate; signs vanish in characteristic 2
    return make(ctx, g.d, g.b, g.c, g.a)


def order(ctx: FieldContext, g: PGL2Elem) -> int:
    q = 1 << ctx.degree
    acc = g
    for e in range(1, q + 2):
        if acc == IDENTITY:
            return e
        acc = mul(ctx, acc, g)
    raise AssertionError("element order exceeded q+1 (bug)")


def classify(ctx: FieldContext, g: PGL2Elem) -> str:
    """'identity', 'involution', 'splits_qm1' (order | q-1) or
    'splits_qp1' (order | q+1), by the matrix-trace criterion."""
    if g == IDENTITY:
        return "identity"
    tr = g.a ^ g.d
    if tr == 0:
        return "involution"
    det = ctx.mul_i(g.a, g.d) ^ ctx.mul_i(g.b, g.c)
    val = ctx.div_i(det, ctx.sqr_i(tr))
    return "splits_qp1" if ctx.trace_i(val) == 1 else "splits_qm1"


def all_elements(ctx: FieldContext) -> Iterable[PGL2Elem]:
    """All q^3 - q canonical elements."""
    q = 1 << ctx.degree
    mul_i = ctx.mul_i
    for b in range(q):
        for c in range(q):
            bc = mul_i(b, c)
            for d in range(q):
                if d != bc:
                    yield PGL2Elem(1, b, c, d)
    for c in range(1, q):
        for d in range(q):
            yield PGL2Elem(0, 1, c, d)


def proj_points(ctx: FieldContext) -> list[int]:
    """P^1(Fq) with infinity first."""
    return [INF] + list(range(1 << ctx.degree))


def class_counts(n: int) -> tuple[int, int, int]:
    """(involutions, order | q-1, order | q+1) by exhaustive enumeration."""
    ctx = field_make(n)
    c2 = cm = cp = 0
    for g in all_elements(ctx):
        kind = classify(ctx, g)
        if kind == "involution":
            c2 += 1
        elif kind == "splits_qm1":
            cm += 1
        elif kind == "splits_qp1":
            cp += 1
    return c2, cm, cp


def expected_class_counts(n: int) -> tuple[int, int, int]:
    q = 1 << n
    return q * q - 1, (q + 1) * (q // 2) * (q - 2), q * q * (q - 1) // 2


def verify_class_counts(n: int, mutate: bool = False) -> list[str]:
    got = class_counts(n)
    want = expected_class_counts(n)
    if mutate:
        want = (want[0] + 1, want[1], want[2])
    failures = []
    if got != want:
        failures.append(f"class counts {got} != expected {want}")
    q = 1 << n
    if sum(got) + 1 != q ** 3 - q:
        failures.append(
            f"counts sum {sum(got) + 1} != |PGL2({q})| = {q ** 3 - q}")
    return failures


# -- cyclic and dihedral subgroups ---------------------------------------------


def cyclic_ma(ctx: FieldContext, j: int, cc: int, a) -> PGL2Elem:
    """The matrix (A, 1/C; C, A + 1/j) indexed by A in P^1(Fq),
    with A = INF giving the identity."""
    if j == 0:
        raise ValueError("j must be nonzero")
    if cc == 0:
        raise ValueError("C must be nonzero")
    if a == INF:
        return IDENTITY
    return make(ctx, a, ctx.inv_i(cc), cc, a ^ ctx.inv_i(j))


def cyclic_group(ctx: FieldContext, j: int, cc: int) -> list[PGL2Elem]:
    return [cyclic_ma(ctx, j, cc, a) for a in proj_points(ctx)]


def reflection(ctx: FieldContext, j: int, cc: int) -> PGL2Elem:
    return make(ctx, 1, ctx.inv_i(ctx.mul_i(j, cc)), 0, 1)


def dihedral_group(ctx: FieldContext, j: int, cc: int) -> list[PGL2Elem]:
    refl = reflection(ctx, j, cc)
    cyc = cyclic_group(ctx, j, cc)
    return cyc + [mul(ctx, m, refl) for m in cyc]


def verify_dihedral(n: int, j: int, cc: int,
                    mutate: bool = False) -> list[str]:
    """Closure law, group size and cyclicity, the reflection relation, and
    absence of fixed points for one (j, C) pair with trace(j) = 1."""
    ctx = field_make(n)
    q = 1 << n
    if ctx.trace_i(j) != 1:
        raise ValueError("j must have absolute trace 1")
    if cc == 0:
        raise ValueError("C must be nonzero")
    failures: list[str] = []
    inv_j = ctx.inv_i(j)
    points = proj_points(ctx)

    # (a) closure M_A * M_B = M_K with K = (1 + AB)/(1/j + A + B)
    for a in points:
        for b in points:
            if a == INF:
                k = b
            elif b == INF:
                k = a
            else:
                den = inv_j ^ a ^ b
                k = INF if den == 0 else ctx.div_i(ctx.mul_i(a, b) ^ 1, den)
            if mutate:
                k = 0 if k == INF else (k ^ 1 if k ^ 1 < q else INF)
            got = mul(ctx, cyclic_ma(ctx, j, cc, a), cyclic_ma(ctx, j, cc, b))
            if got != cyclic_ma(ctx, j, cc, k):
                failures.append(
                    f"closure failed at j=0x{j:x} C=0x{cc:x} "
                    f"A={a} B={b}: expected K={k}")

    # (b) size and cyclicity
    cyc = cyclic_group(ctx, j, cc)
    if len(set(cyc)) != q + 1:
        failures.append(f"cyclic subgroup size {len(set(cyc))} != {q + 1}")
    if max(order(ctx, g) for g in cyc) != q + 1:
        failures.append("no element of order q+1: subgroup not cyclic")

    # (c) reflection relation t M_A t = M_A^{-1} = M_{A + 1/j}
    refl = reflection(ctx, j, cc)
    for a in points:
        ma = cyclic_ma(ctx, j, cc, a)
        tat = mul(ctx, mul(ctx, refl, ma), refl)
        ia = INF if a == INF else a ^ inv_j
        if tat != inverse(ctx, ma) or tat != cyclic_ma(ctx, j, cc, ia):
            failures.append(f"reflection relation failed at A={a}")

    # (d) no nontrivial element fixes a point of P^1(Fq)
    for g in dihedral_group(ctx, j, cc):
        if g == IDENTITY:
            continue
        for w in points:
            if act(ctx, g, w) == w:
                failures.append(
                    f"element {g} fixes w={w} (j=0x{j:x} C=0x{cc:x})")
                break
    if len(set(dihedral_group(ctx, j, cc))) != 2 * (q + 1):
        failures.append("dihedral group size is not 2(q+1)")
    return failures


def verify_dihedral_all(n: int, mutate: bool = False) -> list[str]:
    """All j in Fq with trace 1, with C = 1 and C = a generator."""
    ctx = field_make(n)
    ccs = [1]
    gen = ctx.generator().bits
    if gen not in ccs:
        ccs.append(gen)
    failures = []
    for j in (e.bits for e in fq_one_set(n, ctx)):
        for cc in ccs:
            failures.extend(verify_dihedral(n, j, cc, mutate=mutate))
            mutate = False  # one perturbed run is enough to prove teeth
    return failures


def verify_decomposition(n: int, j: Optional[int] = None) -> list[str]:
    """Unique factorization g = delta * beta with delta in the cyclic
    subgroup (C = 1) and beta upper triangular, checked exhaustively."""
    ctx = field_make(n)
    q = 1 << n
    if j is None:
        j = min(e.bits for e in fq_one_set(n, ctx))
    failures = []
    cyc = cyclic_group(ctx, j, 1)
    seen = set()
    for delta in cyc:
        for a in range(1, q):
            for b in range(q):
                seen.add(mul(ctx, delta, make(ctx, a, b, 0, 1)))
    if len(seen) != q ** 3 - q:
        failures.append(
            f"products delta*beta cover {len(seen)} of {q ** 3 - q} elements")
    for g in all_elements(ctx):
        hits = [delta for delta in cyc
                if mul(ctx, inverse(ctx, delta), g).c == 0]
        if len(hits) != 1:
            failures.append(f"{g} has {len(hits)} decompositions")
    return failures


def verify_conjugation_formulas(n: int) -> list[str]:
    """The explicit effect of conjugating M_A (C = 1) by the transvection
    (1, b; 0, 1) and by diag(a, 1): target subgroup indices
    J = j + sqrt(bj) + bj (trace 1) and C-slot scaling."""
    ctx = field_make(n)
    q = 1 << n
    failures = []
    for j in (e.bits for e in fq_one_set(n, ctx)):
        for a_idx in range(q):
            ma = cyclic_ma(ctx, j, 1, a_idx)
            for b in range(1, q):
                tv = make(ctx, 1, b, 0, 1)
                conj = mul(ctx, mul(ctx, tv, ma), tv)  # tv is an involution
                u = 1 ^ ctx.sqr_i(b) ^ ctx.div_i(b, j)
                su = ctx.sqrt_i(u)
                if u == 0 or su == 0:
                    failures.append(f"u vanished at j=0x{j:x} b=0x{b:x}")
                    continue
                jj = ctx.mul_i(j, su)
                if ctx.trace_i(jj) != 1:
                    failures.append(
                        f"conjugated index J=0x{jj:x} has trace 0")
                expected = cyclic_ma(ctx, jj, ctx.inv_i(su),
                                     ctx.div_i(a_idx ^ b, su))
                if conj != expected:
                    failures.append(
                        f"transvection conjugation mismatch at "
                        f"j=0x{j:x} A=0x{a_idx:x} b=0x{b:x}")
            for s in range(2, q):
                dg = make(ctx, s, 0, 0, 1)
                conj = mul(ctx, mul(ctx, dg, ma), inverse(ctx, dg))
                if conj != cyclic_ma(ctx, j, ctx.div_i(1, s), a_idx):
                    failures.append(
                        f"diagonal conjugation mismatch at "
                        f"j=0x{j:x} A=0x{a_idx:x} s=0x{s:x}")
    return failures


# -- stabilizer of a root of C(x) + a ------------------------------------------


def stabilizer_scan(frame, c: int, j: int) -> set[PGL2Elem]:
    """All gamma in PGL2(Fq) with e(gamma^{-1} y, c, j) = e(y, c, j),
    by exhaustive scan in the frame's ambient field."""
    ctx = frame.fq
    if c == 0 or ctx.trace_i(j) != 1:
        raise ValueError("need c != 0 and trace(j) = 1")
    target = frame.e_root_i(c, j)
    out = set()
    for g in all_elements(ctx):
        yp = frame.inv_mobius_y_i(g)
        if frame.e_value_at_i(yp, c, j) == target:
            out.add(g)
    return out


def verify_stabilizer(frame, pairs=None, sample: int = 0, seed: int = 0,
                      mutate: bool = False) -> list[str]:
    """The scanned stabilizer equals the dihedral group indexed by
    (sqrt(j), c/sqrt(j)), elementwise, for each requested (c, j) pair."""
    ctx = frame.fq
    q = 1 << ctx.degree
    if pairs is None:
        pairs = frame.cj_pairs()
        if sample and sample < len(pairs):
            rng = random.Random(seed)
            pairs = sorted(rng.sample(pairs, sample))
    failures = []
    for c, j in pairs:
        got = stabilizer_scan(frame, c, j)
        d = ctx.sqrt_i(j)
        expected = set(dihedral_group(ctx, d, ctx.div_i(c, d)))
        if mutate:
            expected = set(list(expected)[:-1]) | {IDENTITY}
        if len(got) != 2 * (q + 1):
            failures.append(
                f"stabilizer size {len(got)} != {2 * (q + 1)} at "
                f"c=0x{c:x} j=0x{j:x}")
        if got != expected:
            failures.append(
                f"stabilizer set mismatch at c=0x{c:x} j=0x{j:x}")
    return failures

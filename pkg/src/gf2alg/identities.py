"""Exact verification of the polynomial identities tying the Dickson
family to the MCM polynomial: the bivariate product identity, the
(c, j)-product identity, the transformation laws of the root formula
e(y, c, j), and the product expansion over a materialized root frame.

All comparisons are coefficient-exact; rational functions are compared
by cross-multiplication, never by normalization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dickson import dickson_qp1_closed, lift01, mcm_poly, t_rev_poly
from .gf2 import FieldContext, FieldElem, field_make, fq_one_set, trace_abs
from .poly import UPoly, poly_from_roots


class BiPoly:
    """Polynomial in X whose coefficients are polynomials in Y.

    coeffs[d] is the UPoly-in-Y coefficient of X^d; the leading entry is
    nonzero.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldContext, coeffs):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ctx = ctx
        self.coeffs = cs

    @property
    def degree_x(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, d: int) -> UPoly:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return UPoly.zero(self.ctx)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.ctx is other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ctx), tuple(tuple(c.coeffs) for c in self.coeffs)))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if other.ctx is not self.ctx:
            raise ValueError("BiPoly contexts differ")
        n = max(len(self.coeffs), len(other.coeffs))
        return BiPoly(self.ctx,
                      [self.coeff(d) + other.coeff(d) for d in range(n)])

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        if other.ctx is not self.ctx:
            raise ValueError("BiPoly contexts differ")
        if not self.coeffs or not other.coeffs:
            return BiPoly(self.ctx, [])
        out = [UPoly.zero(self.ctx)
               for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return BiPoly(self.ctx, out)

    def eval_i(self, x: int, y: int) -> int:
        ctx = self.ctx
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.mul_i(acc, x) ^ c.eval_i(y)
        return acc

    def __repr__(self) -> str:
        return f"BiPoly(2^{self.ctx.degree}, deg_x={self.degree_x})"


def _xor_into(dst: list[int], src: list[int], offset: int) -> None:
    seg = dst[offset:offset + len(src)]
    dst[offset:offset + len(src)] = [s ^ v for s, v in zip(seg, src)]


def _scale_row(ctx: FieldContext, row: list[int], c: int) -> list[int]:
    if c == 1:
        return row
    exp, log = ctx._exp, ctx._log
    if exp is not None:
        lc = log[c]
        return [exp[lc + log[v]] if v else 0 for v in row]
    mul_i = ctx.mul_i
    return [mul_i(v, c) for v in row]


def main_identity_sides(n: int) -> tuple[BiPoly, BiPoly]:
    """Both sides of the bivariate product identity over GF(q), q = 2^n:

        prod_{w in Fq^x} (D_{q+1}(wX) + Y)
            = X^(q^2-1) + (sum_{i=1..n} Y^(q-2^i)) X^(q-1) + Y^(q-1)
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    ctx = field_make(n)
    q = 1 << n
    dq1 = dickson_qp1_closed(n)
    sparse = [(d, 1) for d, c in enumerate(dq1.coeffs) if c]

    # build the product with Y-degree-major rows of X-coefficients
    rows: list[list[int]] = [[1]]
    for w in range(1, q):
        terms = [(d, ctx.pow_i(w, d)) for d, _ in sparse]
        width = len(rows[0]) + q + 1
        new_rows: list[list[int]] = []
        for t in range(len(rows) + 1):
            row = [0] * width
            if t < len(rows):
                for d, c in terms:
                    _xor_into(row, _scale_row(ctx, rows[t], c), d)
            if t >= 1:
                _xor_into(row, rows[t - 1], 0)
            new_rows.append(row)
        rows = new_rows

    xdeg = q * q - 1
    lhs = BiPoly(ctx, [
        UPoly(ctx, [rows[t][d] if d < len(rows[t]) else 0
                    for t in range(len(rows))])
        for d in range(xdeg + 1)
    ])

    rhs_coeffs = [UPoly.zero(ctx) for _ in range(xdeg + 1)]
    rhs_coeffs[0] = UPoly.from_terms(ctx, [(q - 1, 1)])
    rhs_coeffs[q - 1] = UPoly.from_terms(
        ctx, [(q - (1 << i), 1) for i in range(1, n + 1)])
    rhs_coeffs[xdeg] = UPoly.one(ctx)
    rhs = BiPoly(ctx, rhs_coeffs)
    return lhs, rhs


def rhs_middle_matches_t_rev(n: int) -> bool:
    """The X^(q-1) coefficient of the right side equals T_rev(Y^2)."""
    ctx = field_make(n)
    _, rhs = main_identity_sides(n)
    q = 1 << n
    trev = t_rev_poly(n)
    spread = UPoly.from_terms(ctx, [(2 * d, c)
                                    for d, c in enumerate(trev.coeffs) if c])
    return rhs.coeff(q - 1) == spread


def verify_main_identity(n: int, mutate: bool = False) -> list[str]:
    """Coefficient-exact comparison of the two sides; empty list = pass.

    mutate=True deliberately deletes the Y^(q-1) term of the reference
    side, proving the comparison cannot pass vacuously.
    """
    lhs, rhs = main_identity_sides(n)
    if mutate:
        q = 1 << n
        rhs = BiPoly(rhs.ctx, [rhs.coeff(0) + UPoly.from_terms(rhs.ctx, [(q - 1, 1)])]
                     + rhs.coeffs[1:])
    if lhs == rhs:
        return []
    for d in range(max(lhs.degree_x, rhs.degree_x) + 1):
        if lhs.coeff(d) != rhs.coeff(d):
            return [f"X^{d} coefficient differs: "
                    f"lhs Y-poly has degree {lhs.coeff(d).degree}, "
                    f"rhs Y-poly has degree {rhs.coeff(d).degree}"]
    return ["sides differ"]


def cj_product_sides(n: int) -> tuple[UPoly, UPoly]:
    """Both sides of
        prod_{c in Fq^x, j in Fq_trace1} (c y^2 + y + j/c)
            = 1 + (y^q + y)^(q-1)
    as polynomials over GF(q)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    ctx = field_make(n)
    q = 1 << n
    ones = [e.bits for e in fq_one_set(n, ctx)]
    lhs = UPoly.one(ctx)
    for c in range(1, q):
        for j in ones:
            lhs = lhs * UPoly(ctx, (ctx.div_i(j, c), 1, c))
    core = UPoly.from_terms(ctx, [(q, 1), (1, 1)])  # y^q + y
    rhs = UPoly.one(ctx) + core ** (q - 1)
    return lhs, rhs


def verify_cj_product(n: int, mutate: bool = False) -> list[str]:
    lhs, rhs = cj_product_sides(n)
    if mutate:
        rhs = rhs + UPoly.one(rhs.ctx)
    q = 1 << n
    failures = []
    if lhs.degree != q * (q - 1) or rhs.degree != q * (q - 1):
        failures.append(
            f"degree mismatch: lhs {lhs.degree}, rhs {rhs.degree}, "
            f"expected {q * (q - 1)}")
    if lhs != rhs:
        d = next(i for i in range(max(len(lhs.coeffs), len(rhs.coeffs)))
                 if lhs[i] != rhs[i])
        failures.append(
            f"y^{d} coefficient differs: 0x{lhs[d]:x} vs 0x{rhs[d]:x}")
    return failures


@dataclass(frozen=True)
class RationalFn:
    """Quotient of polynomials in y; equality is by cross-multiplication."""

    num: UPoly
    den: UPoly

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")

    def equals(self, other: "RationalFn") -> bool:
        if self.den == other.den:
            return self.num == other.num
        # proportional denominators: compare scaled numerators
        ctx = self.num.ctx
        if self.den.degree == other.den.degree:
            lam = ctx.div_i(self.den.coeffs[-1], other.den.coeffs[-1])
            if self.den == other.den.scale(lam):
                return self.num == other.num.scale(lam)
        return self.num * other.den == other.num * self.den

    def subst_shift(self, b: int) -> "RationalFn":
        """y -> y + b."""
        lin = UPoly(self.num.ctx, (b, 1))
        return RationalFn(self.num.compose(lin), self.den.compose(lin))

    def subst_scale(self, b: int) -> "RationalFn":
        """y -> b*y."""
        ctx = self.num.ctx

        def scaled(f: UPoly) -> UPoly:
            pw = 1
            out = []
            for c in f.coeffs:
                out.append(ctx.mul_i(c, pw))
                pw = ctx.mul_i(pw, b)
            return UPoly(ctx, out)

        return RationalFn(scaled(self.num), scaled(self.den))

    def subst_recip(self) -> "RationalFn":
        """y -> 1/y, with the result cleared of negative powers."""
        num_r = self.num.reverse()
        den_r = self.den.reverse()
        dn, dd = self.num.degree, self.den.degree
        if dd >= dn:
            return RationalFn(num_r.shift(dd - dn), den_r)
        return RationalFn(num_r, den_r.shift(dn - dd))


def e_rational(n: int, c: FieldElem, j: FieldElem) -> RationalFn:
    """The root formula as a rational function of y over GF(q):
    (c y^2 + y + j/c)^(q+1) / (y^q + y)^2."""
    ctx = field_make(n)
    if c.ctx is not ctx or j.ctx is not ctx:
        raise ValueError("c and j must live in GF(2^n)")
    if not c:
        raise ValueError("c must be nonzero")
    if trace_abs(j) != 1:
        raise ValueError("j must have absolute trace 1")
    q = 1 << n
    quad = UPoly(ctx, (ctx.div_i(j.bits, c.bits), 1, c.bits))
    den = UPoly.from_terms(ctx, [(q, 1), (1, 1)]) ** 2
    return RationalFn(quad ** (q + 1), den)


def verify_e_transformations(n: int, mutate: bool = False) -> list[str]:
    """The shift, scaling, and inversion laws of the root formula, checked
    as exact cross-multiplied identities for every b, c in Fq^x and every
    trace-1 j. Also checks that the shifted index stays trace-1."""
    if n < 2:
        raise ValueError("n must be >= 2")
    ctx = field_make(n)
    q = 1 << n
    ones = [e.bits for e in fq_one_set(n, ctx)]
    failures: list[str] = []
    for c in range(1, q):
        for j in ones:
            base = e_rational(n, ctx.elem(c), ctx.elem(j))
            # inversion law: e(1/y, c, j) = e(y, j/c, j)
            tgt = e_rational(n, ctx.elem(ctx.div_i(j, c)), ctx.elem(j))
            if mutate:
                tgt = RationalFn(tgt.num + UPoly.one(ctx), tgt.den)
            if not base.subst_recip().equals(tgt):
                failures.append(f"inversion law failed at c=0x{c:x} j=0x{j:x}")
            for b in range(1, q):
                bc = ctx.mul_i(b, c)
                j2 = j ^ bc ^ ctx.sqr_i(bc)
                if ctx.trace_i(j2) != 1:
                    failures.append(
                        f"shifted index j+bc+(bc)^2 has trace 0 at "
                        f"b=0x{b:x} c=0x{c:x} j=0x{j:x}")
                    continue
                if not base.subst_shift(b).equals(
                        e_rational(n, ctx.elem(c), ctx.elem(j2))):
                    failures.append(
                        f"shift law failed at b=0x{b:x} c=0x{c:x} j=0x{j:x}")
                if not base.subst_scale(b).equals(
                        e_rational(n, ctx.elem(bc), ctx.elem(j))):
                    failures.append(
                        f"scaling law failed at b=0x{b:x} c=0x{c:x} j=0x{j:x}")
    return failures


def verify_root_product(frame, mutate: bool = False) -> list[str]:
    """Expand prod (X - e(y,c,j)) over the frame's ambient field and compare
    with the embedded C(X) + a, coefficient-exact; also checks the constant
    term equals a."""
    ambient = frame.ambient
    roots = [frame.e_root_i(c, j) for c, j in frame.cj_pairs()]
    product = poly_from_roots(ambient, roots)
    target = frame.mcm_plus_a_poly()
    if mutate:
        target = target + UPoly.one(ambient)
    failures = []
    if product != target:
        d = next(i for i in range(max(len(product.coeffs), len(target.coeffs)))
                 if product[i] != target[i])
        failures.append(
            f"X^{d} coefficient differs: 0x{product[d]:x} vs 0x{target[d]:x}")
    if product[0] != frame.a_ambient:
        failures.append(
            f"constant term 0x{product[0]:x} != a = 0x{frame.a_ambient:x}")
    return failures

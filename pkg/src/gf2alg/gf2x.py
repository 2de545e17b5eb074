"""Polynomials over GF(2) packed into Python ints (bit i = coeff of x^i).

Addition is ^, and the helpers below supply multiplication, division,
gcd, irreducibility, and the default-modulus sieve used by gf2.FieldContext.
"""

# byte -> 16-bit value with a zero interleaved after every bit (squaring map)
SPREAD8 = tuple(
    sum(((b >> i) & 1) << (2 * i) for i in range(8)) for b in range(256)
)


def degree(a: int) -> int:
    """Degree of a (−1 for the zero polynomial)."""
    return a.bit_length() - 1


def mul(a: int, b: int) -> int:
    """Carryless product of two GF(2) polynomials."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    r = 0
    while a:
        low = a & -a
        r ^= b << (low.bit_length() - 1)
        a ^= low
    return r


def sqr(a: int) -> int:
    """Square of a GF(2) polynomial (interleave zeros between bits)."""
    r = 0
    shift = 0
    while a:
        r |= SPREAD8[a & 0xFF] << shift
        a >>= 8
        shift += 16
    return r


def divmod_(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of a by nonzero b."""
    if b == 0:
        raise ZeroDivisionError("gf2x division by zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def mod(a: int, b: int) -> int:
    return divmod_(a, b)[1]


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, mod(a, b)
    return a


def mulmod(a: int, b: int, f: int) -> int:
    return mod(mul(a, b), f)


def powmod_x_2k(f: int, k: int, start: int = 2) -> int:
    """start^(2^k) mod f by repeated squaring (start defaults to x)."""
    h = mod(start, f)
    for _ in range(k):
        h = mod(sqr(h), f)
    return h


def is_irreducible(f: int) -> bool:
    """Rabin's test for a GF(2) polynomial of degree >= 1."""
    m = degree(f)
    if m < 1:
        return False
    if m == 1:
        return True
    if not f & 1:  # divisible by x
        return False
    if powmod_x_2k(f, m) != 2:  # x^(2^m) == x mod f
        return False
    from ._ntheory import factorize

    for p in factorize(m):
        h = powmod_x_2k(f, m // p)
        if gcd(h ^ 2, f) != 1:
            return False
    return True


def smallest_irreducible(m: int) -> int:
    """Monic irreducible of degree m with the smallest integer encoding."""
    if m < 1:
        raise ValueError("degree must be >= 1")
    if m == 1:
        return 0b11  # x + 1: the degree-1 modulus presenting GF(2) itself
    base = 1 << m
    for c in range(1, base, 2):  # constant term 1, else x divides
        if is_irreducible(base | c):
            return base | c
    raise AssertionError("no irreducible found (unreachable)")

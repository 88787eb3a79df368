"""Exact p-adic digit arithmetic: valuations and the two digit orders.

Digit lists are little-endian with no trailing zeros, so 10 in base 3
is [1, 0, 1].
"""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def check_prime_or_zero(p: int) -> int:
    """Characteristic: 0 or a prime."""
    if p == 0:
        return 0
    return check_prime(p)


def digits(a: int, p: int) -> list[int]:
    if a < 0:
        raise ValueError(f"p-adic digits of a negative number {a}")
    check_prime(p)
    out = []
    while a:
        out.append(a % p)
        a //= p
    return out


def nu_p(h: int, p: int) -> int:
    """Largest t with p^t dividing h; h must be positive."""
    if h < 1:
        raise ValueError(f"valuation needs a positive integer, got {h}")
    check_prime(p)
    t = 0
    while h % p == 0:
        h //= p
        t += 1
    return t


def leq_p(a: int, b: int, p: int) -> bool:
    """Digitwise order: every base-p digit of a is <= the digit of b."""
    da, db = digits(a, p), digits(b, p)
    if len(da) > len(db):
        return False
    return all(x <= y for x, y in zip(da, db))


def preceq_p(a: int, b: int, p: int) -> bool:
    """Digitwise zero-or-equal order: each digit of a is 0 or equals b's."""
    da, db = digits(a, p), digits(b, p)
    db = db + [0] * (len(da) - len(db))
    return all(x == 0 or x == y for x, y in zip(da, db))

"""Exact arithmetic in the prime field F_p, for odd primes p < 2^40."""

from .errors import NoRoot, ZeroInverse

MODULUS_CAP = 1 << 40

# Witness set proven deterministic for n < 3.3 * 10^24, well past 64 bits.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for the 64-bit range."""
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n % w == 0:
            return n == w
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_modulus(p: int) -> int:
    """Validate p as a field modulus (odd prime, 3 <= p < 2^40) and return it."""
    if not 3 <= p < MODULUS_CAP:
        raise ValueError(f"modulus {p} outside [3, 2^40)")
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


def ff_add(x: int, y: int, p: int) -> int:
    return (x + y) % p


def ff_sub(x: int, y: int, p: int) -> int:
    return (x - y) % p


def ff_mul(x: int, y: int, p: int) -> int:
    return x * y % p


def ff_pow(x: int, e: int, p: int) -> int:
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(x, e, p)


def ff_inv(x: int, p: int) -> int:
    """Multiplicative inverse of x mod p."""
    if x % p == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(x, -1, p)


def legendre(x: int, p: int) -> int:
    """Legendre symbol (x|p) in {-1, 0, +1}, by quadratic-reciprocity descent.

    Agrees with the Euler criterion x^((p-1)/2) mod p for odd primes p.
    """
    a = x % p
    if a == 0:
        return 0
    t = 1
    n = p
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t


def sqrt_mod(x: int, p: int) -> tuple[int, int]:
    """Both square roots of x mod p, smaller first; (0, 0) when p | x.

    Uses the (p+1)/4 shortcut for p = 3 (mod 4) and Tonelli-Shanks otherwise.
    """
    a = x % p
    if a == 0:
        return (0, 0)
    if legendre(a, p) == -1:
        raise NoRoot(f"{x} is not a square mod {p}")
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        r = _tonelli_shanks(a, p)
    return (r, p - r) if r <= p - r else (p - r, r)


def _tonelli_shanks(a: int, p: int) -> int:
    # p = 1 (mod 4), a a nonzero quadratic residue.
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        t2 = t
        i = 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return r

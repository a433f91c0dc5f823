"""Class numbers h, h*, and Hurwitz H by counting well configurations, plus
sums of three squares and the Upsilon counters.

The well-count formulas: for D < -4 put n = |D| (D odd) or |D|/4 (D even);
then h(D) is

    2#{e>f>g>0 : ef+fg+ge=n} + #{e,f>0 : e^2+2ef=n} + #{e>f>0 : ef=n}

with gcd 1 everywhere, the last sum for even D only, and the first two sums
restricted to all-odd solutions for odd D and to not-all-odd ones for even D.
Dropping the gcd conditions and weighting the extra solution families by
1/3 and 1/2 gives the Hurwitz count H; weighting them by 1 gives h*.
"""

from fractions import Fraction
from math import gcd

from .exact import DomainError, is_square, isqrt


def euler_phi(m):
    if m <= 0:
        raise DomainError("phi of non-positive integer")
    out = m
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


def mobius(m):
    if m <= 0:
        raise DomainError("mobius of non-positive integer")
    out = 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


def _check_disc_neg(D):
    if D >= 0:
        raise DomainError("needs D < 0")
    if D % 4 not in (0, 1):
        raise DomainError("discriminant must be 0 or 1 mod 4")


def _triples(nmax):
    # e > f > g > 0 with s = ef+fg+ge <= nmax
    g = 1
    while 3 * g * g + 6 * g + 2 <= nmax:
        f = g + 1
        while f * (f + 1) + g * (2 * f + 1) <= nmax:
            base = f * g
            stride = f + g
            e = f + 1
            s = base + e * stride
            while s <= nmax:
                yield s, e, f, g
                e += 1
                s += stride
            f += 1
        g += 1


def _pairs_sq(nmax):
    # e, f > 0 with s = e^2 + 2ef <= nmax
    e = 1
    while e * e + 2 * e <= nmax:
        f = 1
        s = e * e + 2 * e
        while s <= nmax:
            yield s, e, f
            f += 1
            s += 2 * e
        e += 1


def h_neg(D):
    """Primitive class number of a negative discriminant."""
    _check_disc_neg(D)
    if D in (-3, -4):
        return 1
    odd = D % 2 != 0
    n = -D if odd else -D // 4
    total = 0
    for s, e, f, g in _triples(n):
        if s != n:
            continue
        allodd = e & f & g & 1
        if (odd and not allodd) or (not odd and allodd):
            continue
        if gcd(gcd(e, f), g) == 1:
            total += 2
    for s, e, f in _pairs_sq(n):
        if s != n:
            continue
        allodd = e & f & 1
        if (odd and not allodd) or (not odd and allodd):
            continue
        if gcd(e, f) == 1:
            total += 1
    if not odd:
        f = 1
        while f * f < n:
            if n % f == 0 and gcd(f, n // f) == 1:
                total += 1
            f += 1
    return total


def hurwitz(n):
    """Hurwitz class number H(n) for n > 0, n = 0 or 3 mod 4 (n = |D|)."""
    if n <= 0:
        raise DomainError("hurwitz needs n > 0")
    if n % 4 not in (0, 3):
        raise DomainError("hurwitz needs n = 0 or 3 mod 4")
    odd = n % 4 == 3
    inner = n if odd else n // 4
    total = Fraction(0)
    for s, e, f, g in _triples(inner):
        if s != inner:
            continue
        if odd and not (e & f & g & 1):
            continue
        total += 2
    for s, e, f in _pairs_sq(inner):
        if s != inner or e == f:
            continue
        if odd and not (e & f & 1):
            continue
        total += 1
    if inner % 3 == 0 and is_square(inner // 3):
        total += Fraction(1, 3)
    if not odd:
        f = 1
        count = 0
        while f * f <= inner:
            if inner % f == 0:
                count += 2 if f * f != inner else 1
            f += 1
        total += Fraction(count, 2)
    return total


def hstar_neg(D):
    """Number of all (primitive and imprimitive) classes of D < 0."""
    _check_disc_neg(D)
    odd = D % 2 != 0
    n = -D if odd else -D // 4
    total = 0
    for s, e, f, g in _triples(n):
        if s != n:
            continue
        if odd and not (e & f & g & 1):
            continue
        total += 2
    for s, e, f in _pairs_sq(n):
        if s != n or e == f:
            continue
        if odd and not (e & f & 1):
            continue
        total += 1
    if n % 3 == 0 and is_square(n // 3):
        total += 1
    if not odd:
        f = 1
        while f * f <= n:
            if n % f == 0:
                total += 1
            f += 1
    return total


def h_square(D):
    """(h, h*) for a perfect-square discriminant; h*(0) is reported as None
    (there are infinitely many classes of discriminant zero)."""
    if D < 0 or not is_square(D):
        raise DomainError("h_square needs a perfect square >= 0")
    if D == 0:
        return 1, None
    m = isqrt(D)
    return euler_phi(m), m


def h_pos(D):
    """Primitive class count for non-square D > 0, via simply-reduced
    river cycles seeded from the Zagier * forms."""
    from .reduce import reduce_simple_cycle, zstar_forms

    if D <= 0 or is_square(D):
        raise DomainError("h_pos needs non-square D > 0")
    if D % 4 not in (0, 1):
        raise DomainError("discriminant must be 0 or 1 mod 4")
    cycles = set()
    for q in zstar_forms(D):
        if q.content() == 1:
            cycles.add(reduce_simple_cycle(q).canonical)
    return len(cycles)


# ------------------------------------------------------ sums of three squares

def r3(n):
    """Number of (x,y,z) in Z^3 with x^2+y^2+z^2 = n, brute force."""
    if n < 0:
        raise DomainError("r3 needs n >= 0")
    total = 0
    sx = isqrt(n)
    for x in range(-sx, sx + 1):
        rem_x = n - x * x
        sy = isqrt(rem_x)
        for y in range(-sy, sy + 1):
            rem = rem_x - y * y
            z = isqrt(rem)
            if z * z == rem:
                total += 1 if z == 0 else 2
    return total


def r3_primitive(n):
    """Same count restricted to gcd(x,y,z) = 1."""
    if n < 0:
        raise DomainError("r3 needs n >= 0")
    total = 0
    sx = isqrt(n)
    for x in range(-sx, sx + 1):
        rem_x = n - x * x
        sy = isqrt(rem_x)
        for y in range(-sy, sy + 1):
            rem = rem_x - y * y
            z = isqrt(rem)
            if z * z == rem:
                if z == 0:
                    if gcd(x, y) == 1:
                        total += 1
                elif gcd(gcd(x, y), z) == 1:
                    total += 2
    return total


def r3_via_class(n):
    """r3 by the Hurwitz class-number formula (with the n/4 recursion)."""
    if n <= 0:
        raise DomainError("needs n >= 1")
    if n % 4 == 0:
        return r3_via_class(n // 4)
    if n % 8 == 7:
        return 0
    if n % 8 == 3:
        v = 12 * (hurwitz(4 * n) - 2 * hurwitz(n))
    else:
        v = 12 * hurwitz(4 * n)
    assert v.denominator == 1
    return int(v)


def r3p_via_class(n):
    """Primitive r3 by the class-number formula, valid for n > 3."""
    if n <= 3:
        raise DomainError("formula needs n > 3")
    m = n % 8
    if m in (0, 4, 7):
        return 0
    if m == 3:
        return 12 * (h_neg(-4 * n) - h_neg(-n))
    return 12 * h_neg(-4 * n)


def upsilon(n):
    """Ordered nonnegative solutions of ef+fg+ge = n, zero coordinates
    weighted 1/2."""
    if n <= 0:
        raise DomainError("needs n >= 1")
    total = Fraction(0)
    for e in range(0, n + 1):
        fmax = n if e == 0 else n // e
        for f in range(0, fmax + 1):
            if e + f == 0:
                continue
            rem = n - e * f
            if rem < 0:
                break
            if rem % (e + f):
                continue
            g = rem // (e + f)
            total += Fraction(1, 2) if 0 in (e, f, g) else 1
    return total


def upsilon_odd(n):
    """Ordered positive all-odd solutions of ef+fg+ge = n."""
    if n <= 0:
        raise DomainError("needs n >= 1")
    total = 0
    for e in range(1, n + 1, 2):
        for f in range(1, n // e + 1, 2):
            rem = n - e * f
            if rem < 0:
                break
            if rem % (e + f):
                continue
            g = rem // (e + f)
            if g > 0 and g % 2 == 1:
                total += 1
    return total


# -------------------------------------------------------------- batch tables

def h_neg_table(limit):
    """h(D) for every discriminant -limit <= D < 0 in one shared sweep."""
    odd_h = [0] * (limit + 1)  # index n = |D| for odd D
    even_max = limit // 4
    even_h = [0] * (even_max + 1)  # index n = |D|/4 for even D
    for s, e, f, g in _triples(limit):
        if gcd(gcd(e, f), g) != 1:
            continue
        allodd = e & f & g & 1
        if allodd:
            if s % 4 == 3:
                odd_h[s] += 2
        else:
            if s <= even_max:
                even_h[s] += 2
    for s, e, f in _pairs_sq(limit):
        if gcd(e, f) != 1:
            continue
        allodd = e & f & 1
        if allodd:
            if s % 4 == 3:
                odd_h[s] += 1
        else:
            if s <= even_max:
                even_h[s] += 1
    for f in range(1, isqrt(even_max) + 1):
        for e in range(f + 1, even_max // f + 1):
            if gcd(e, f) == 1:
                even_h[e * f] += 1
    out = {}
    for D in range(-limit, 0):
        m4 = D % 4
        if m4 == 1:
            out[D] = 1 if D == -3 else odd_h[-D]
        elif m4 == 0:
            out[D] = 1 if D == -4 else even_h[-D // 4]
    return out


def hurwitz_table(nmax):
    """H(n) for every valid 0 < n <= nmax in one shared sweep."""
    vals = [Fraction(0)] * (nmax + 1)
    inner_max = nmax  # odd bucket uses n directly, even bucket n/4
    for s, e, f, g in _triples(inner_max):
        allodd = e & f & g & 1
        if allodd and s % 4 == 3:
            vals[s] += 2
        if 4 * s <= nmax:
            vals[4 * s] += 2
    for s, e, f in _pairs_sq(inner_max):
        if e == f:
            continue
        allodd = e & f & 1
        if allodd and s % 4 == 3:
            vals[s] += 1
        if 4 * s <= nmax:
            vals[4 * s] += 1
    e = 1
    while 3 * e * e <= inner_max:
        s = 3 * e * e
        if s % 4 == 3:
            vals[s] += Fraction(1, 3)
        if 4 * s <= nmax:
            vals[4 * s] += Fraction(1, 3)
        e += 1
    for f in range(1, inner_max + 1):
        if f * f > inner_max:
            break
        for e in range(f, inner_max // f + 1):
            s = e * f
            if 4 * s <= nmax:
                # ordered pairs at weight 1/2: (e,f) and (f,e) when distinct
                vals[4 * s] += 1 if e != f else Fraction(1, 2)
    out = {}
    for n in range(1, nmax + 1):
        if n % 4 in (0, 3):
            out[n] = vals[n]
    return out

"""Continued fractions: the classical algorithm for rationals and real surds,
and the general algorithm for complex surds that stops on reaching the
fundamental domain F' of the extended modular group.
"""

from .exact import DomainError, Rat, Surd, surd_floor


class CFExpansion:
    """Partial quotients a0, a1, ... plus either a repeating period (real
    quadratic surds) or a complex tail z0 in F' (complex inputs)."""

    __slots__ = ("terms", "period", "tail")

    def __init__(self, terms, period=None, tail=None):
        self.terms = list(terms)
        self.period = list(period) if period is not None else None
        self.tail = tail

    def __eq__(self, other):
        if not isinstance(other, CFExpansion):
            return NotImplemented
        return (self.terms == other.terms and self.period == other.period
                and self.tail == other.tail)

    def __repr__(self):
        bits = ",".join(str(a) for a in self.terms)
        if self.period:
            bits += ";(" + ",".join(str(a) for a in self.period) + ")"
        if self.tail is not None:
            bits += f";tail={self.tail!r}"
        return f"<{bits}>"


def _in_F(z):
    # -1/2 <= Re z < 1/2, |z| >= 1, and x <= 0 on the unit circle; Im z > 0
    if z.q <= 0:
        return False
    x2 = 2 * z.p  # compare Re = p/r against +-1/2 via 2p vs +-r
    if not (-z.r <= x2 < z.r):
        return False
    n2 = z.p * z.p - z.q * z.q * z.d  # |z|^2 * r^2
    rr = z.r * z.r
    if n2 < rr:
        return False
    if n2 == rr and x2 > 0:
        return False
    return True


def _in_SF(z):
    if z.is_zero():
        return False
    return _in_F(z.invert().__neg__())  # z in SF iff -1/z in F


def fd_member(z, which):
    """Exact membership of a complex surd in F, F' or F∪SF."""
    if z.d >= 0:
        raise DomainError("fundamental-domain test needs a complex surd")
    if which == "F":
        return _in_F(z)
    if which == "F_or_SF":
        return _in_F(z) or _in_SF(z)
    if which == "F_prime":
        if z.is_zero():
            return True
        nz = -z
        return _in_F(z) or _in_SF(z) or _in_F(nz) or _in_SF(nz)
    raise DomainError(f"unknown domain {which!r}")


def real_cf(x):
    """Continued fraction of a rational or a real quadratic surd.

    Rationals give a finite expansion; surds give preperiod + period, the
    period detected on the first repeated remainder.
    """
    if isinstance(x, int):
        x = Rat(x)
    if isinstance(x, Surd) and x.is_rational():
        x = Rat(x.p, x.r)
    if isinstance(x, Rat):
        if x.is_infinite():
            raise DomainError("continued fraction of infinity")
        terms = []
        num, den = x.num, x.den
        while True:
            a = num // den
            terms.append(a)
            num, den = den, num - a * den
            if den == 0:
                return CFExpansion(terms)
    if not isinstance(x, Surd):
        raise DomainError("real_cf wants a Rat or Surd")
    if x.d < 0:
        raise DomainError("real_cf wants a real value")
    terms = []
    seen = {}
    cur = x
    while True:
        key = cur.key()
        if key in seen:
            i = seen[key]
            return CFExpansion(terms[:i], period=terms[i:])
        seen[key] = len(terms)
        a = surd_floor(cur)
        terms.append(a)
        cur = (cur - a).invert()


def normalize_parity(cf, want_odd_index):
    """Rewrite a finite expansion so its last index n has the asked parity,
    using <...,a_n> = <...,a_n-1,1> and <...,a_{n-1},1> = <...,a_{n-1}+1>."""
    if cf.period is not None or cf.tail is not None:
        raise DomainError("parity normalization needs a finite expansion")
    terms = list(cf.terms)
    has_odd = (len(terms) - 1) % 2 == 1
    if has_odd == bool(want_odd_index):
        return CFExpansion(terms)
    if terms[-1] == 1 and len(terms) >= 2:
        terms = terms[:-2] + [terms[-2] + 1]
    else:
        terms = terms[:-1] + [terms[-1] - 1, 1]
    return CFExpansion(terms)


def general_cf(z):
    """General continued fraction of a complex surd: returns terms a0..ar and
    a tail z0 in F' \\ {0} with z = <a0,...,a_{r-1},a_r + z0>."""
    if z.d > 0:
        return real_cf(z)
    if z.is_zero():
        raise DomainError("general_cf of zero")
    if z.is_rational():
        return real_cf(Rat(z.p, z.r))
    cap = 10 * (z.p * z.p - z.q * z.q * z.d + z.r * z.r).bit_length() + 64
    terms = []
    cur = z
    for _ in range(cap):
        m = cur.p // cur.r  # floor of the real part
        for delta in (0, 1):
            w = cur - (m + delta)
            if fd_member(w, "F_prime"):
                terms.append(m + delta)
                return CFExpansion(terms, tail=w)
        terms.append(m)
        cur = (cur - m).invert()
    raise AssertionError("general_cf failed to terminate within its cap")


def lr_decompose(z):
    """Split an upper-half-plane surd as L^{a0} R^{a1} ... acting on z1 with
    z1 in F ∪ SF; needs_S is true when z1 lies in SF (append S to the word)."""
    if z.d >= 0 or z.q <= 0:
        raise DomainError("lr_decompose wants an upper-half-plane surd")
    cf = general_cf(z)
    terms, z0 = cf.terms, cf.tail
    word = [("L" if i % 2 == 0 else "R", a) for i, a in enumerate(terms)]
    r = len(terms) - 1
    z1 = z0 if r % 2 == 0 else z0.invert()
    if _in_F(z1):
        return word, z1, False
    if not _in_SF(z1):
        raise AssertionError("tail left F ∪ SF after parity fix")
    return word, z1, True

"""Quadratic forms [a,b,c], unimodular matrices, the substitution action q|M,
exact roots, and the elementary topograph moves L, R, S, U."""

from math import gcd

from .exact import INF, DomainError, Rat, Surd, is_square, isqrt


class QuadForm(tuple):
    """The form a x^2 + b x y + c y^2, stored as the triple (a, b, c)."""

    def __new__(cls, a, b, c):
        return tuple.__new__(cls, (int(a), int(b), int(c)))

    @property
    def a(self):
        return self[0]

    @property
    def b(self):
        return self[1]

    @property
    def c(self):
        return self[2]

    def discriminant(self):
        a, b, c = self
        return b * b - 4 * a * c

    def content(self):
        a, b, c = self
        return gcd(gcd(a, b), c)

    def __neg__(self):
        return QuadForm(-self[0], -self[1], -self[2])

    def __call__(self, x, y):
        a, b, c = self
        return a * x * x + b * x * y + c * y * y

    def __repr__(self):
        return f"[{self[0]},{self[1]},{self[2]}]"


class UniMat(tuple):
    """2x2 integer matrix (alpha, beta; gamma, delta) of determinant +-1."""

    def __new__(cls, alpha, beta, gamma, delta):
        m = tuple.__new__(cls, (int(alpha), int(beta), int(gamma), int(delta)))
        if m.det() not in (1, -1):
            raise DomainError(f"matrix {m} is not unimodular")
        return m

    @property
    def alpha(self):
        return self[0]

    @property
    def beta(self):
        return self[1]

    @property
    def gamma(self):
        return self[2]

    @property
    def delta(self):
        return self[3]

    def det(self):
        return self[0] * self[3] - self[1] * self[2]

    def __matmul__(self, other):
        a, b, c, d = self
        e, f, g, h = other
        return UniMat(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self):
        a, b, c, d = self
        det = self.det()
        if det == 1:
            return UniMat(d, -b, -c, a)
        return UniMat(-d, b, c, -a)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = ID
        base = self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def __repr__(self):
        return f"({self[0]} {self[1]}; {self[2]} {self[3]})"


ID = UniMat(1, 0, 0, 1)
MAT_L = UniMat(1, 1, 0, 1)
MAT_R = UniMat(1, 0, 1, 1)
MAT_S = UniMat(0, -1, 1, 0)
MAT_U = UniMat(1, -1, 1, 0)


def discriminant(q):
    return q.discriminant()


def act(q, m, allow_flip=False):
    """The right action q|M = q(alpha x + beta y, gamma x + delta y)."""
    det = m.det()
    if det == 0:
        raise DomainError("singular matrix")
    if det == -1 and not allow_flip:
        raise DomainError("determinant -1 needs the wide-sense entry point")
    a, b, c = q
    al, be, ga, de = m
    return QuadForm(
        a * al * al + b * al * ga + c * ga * ga,
        2 * a * al * be + b * (al * de + be * ga) + 2 * c * ga * de,
        a * be * be + b * be * de + c * de * de,
    )


class Roots(tuple):
    """Pair (first, second) of exact roots of q(x,1)=0; entries are Rat,
    Surd, or the infinite Rat."""

    def __new__(cls, first, second):
        return tuple.__new__(cls, (first, second))

    @property
    def first(self):
        return self[0]

    @property
    def second(self):
        return self[1]


def roots(q):
    """First and second roots zeta, zeta' of q; a=0 assigns -c/b and infinity
    by the sign of b, and b=0 there gives a double root at infinity."""
    a, b, c = q
    if a == 0 and b == 0 and c == 0:
        raise DomainError("zero form has no roots")
    D = q.discriminant()
    if a == 0:
        if b == 0:
            return Roots(INF, INF)
        val = Rat(-c, b)
        if b > 0:
            return Roots(val, INF)
        return Roots(INF, val)
    if is_square(D):
        m = isqrt(D)
        return Roots(Rat(-b + m, 2 * a), Rat(-b - m, 2 * a))
    return Roots(Surd(-b, 1, 2 * a, D), Surd(-b, -1, 2 * a, D))


def mobius(m, x):
    """Fractional-linear action (alpha x + beta)/(gamma x + delta) on a Rat,
    Surd, or infinity."""
    al, be, ga, de = m
    if isinstance(x, Rat):
        if x.is_infinite():
            return Rat(al * x.num, ga * x.num)
        return Rat(al * x.num + be * x.den, ga * x.num + de * x.den)
    num = x * al + be
    den = x * ga + de
    if den.is_zero():
        return INF
    return num * den.invert()


def turn_sequence_matrix(word):
    """Product of the word's letters: L^a0 R^a1 ... (S allowed, exponent 1)."""
    m = ID
    for letter, e in word:
        if letter == "L":
            m = m @ UniMat(1, e, 0, 1)
        elif letter == "R":
            m = m @ UniMat(1, 0, e, 1)
        elif letter == "S":
            m = m @ MAT_S
        else:
            raise DomainError(f"unknown letter {letter!r}")
    return m


def content_split(q):
    g = q.content()
    if g == 0:
        raise DomainError("zero form")
    return g, QuadForm(q[0] // g, q[1] // g, q[2] // g)

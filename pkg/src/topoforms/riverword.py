"""River periods, Pell fundamental solutions, automorphs, necklace and word
encodings of classes, symmetry flags, and wide-sense class numbers."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .classnum import euler_phi, h_neg, h_pos
from .exact import DomainError, Surd, is_square, isqrt
from .forms import MAT_L, MAT_R, ID, QuadForm, UniMat, act


@dataclass(frozen=True)
class PellSolution:
    t: int
    u: int
    sign: int  # +4 or -4


_SWITCH = {"L": "R", "R": "L", "0": "1", "1": "0"}


class Necklace:
    """A cyclic binary word (0=L, 1=R), stored as its least rotation;
    must be primitive (not a power of a shorter word) and of length >= 2."""

    __slots__ = ("bits",)

    def __init__(self, bits):
        bits = str(bits)
        if len(bits) < 2:
            raise DomainError("necklace needs length >= 2")
        if set(bits) - {"0", "1"}:
            raise DomainError("necklace bits must be 0/1")
        n = len(bits)
        for d in range(1, n):
            if n % d == 0 and bits == bits[:d] * (n // d):
                raise DomainError("necklace must be non-repeating")
        self.bits = min(bits[i:] + bits[:i] for i in range(n))

    def __eq__(self, other):
        return isinstance(other, Necklace) and self.bits == other.bits

    def __hash__(self):
        return hash(("necklace", self.bits))

    def __len__(self):
        return len(self.bits)

    def __repr__(self):
        return self.bits


def principal_form(D):
    if D % 4 == 0:
        return QuadForm(1, 0, -D // 4)
    if D % 4 == 1:
        return QuadForm(1, 1, (1 - D) // 4)
    raise DomainError("discriminant must be 0 or 1 mod 4")


def _check_real(D):
    if D <= 0 or is_square(D):
        raise DomainError("needs non-square D > 0")
    if D % 4 not in (0, 1):
        raise DomainError("discriminant must be 0 or 1 mod 4")


def _river_letters_from(q0):
    """L/R letters of one river period starting at the simple form q0."""
    letters = []
    m = ID
    cur = q0
    while True:
        if cur.a + cur.b + cur.c < 0:
            letters.append("L")
            m = m @ MAT_L
            cur = act(cur, MAT_L)
        else:
            letters.append("R")
            m = m @ MAT_R
            cur = act(cur, MAT_R)
        if cur == q0:
            return letters, m


def river_period(D):
    """One period of the principal river as a run-length word plus its
    matrix product M = L^a0 R^a1 ..."""
    _check_real(D)
    letters, m = _river_letters_from(principal_form(D))
    word = []
    for letter in letters:
        if word and word[-1][0] == letter:
            word[-1] = (letter, word[-1][1] + 1)
        else:
            word.append((letter, 1))
    return word, m


def pell_fundamental(D):
    """Smallest positive (t, u) with t^2 - D u^2 = 4, off the river matrix."""
    _, m = river_period(D)
    al, be, ga, de = m
    t = al + de
    u = gcd(gcd(ga, de - al), be)
    if t * t - D * u * u != 4:  # pragma: no cover
        raise AssertionError("river matrix did not solve the Pell equation")
    return PellSolution(t, u, 4)


def _word_matrix(letters):
    m = ID
    for x in letters:
        m = m @ (MAT_L if x in ("L", "0") else MAT_R)
    return m


def negative_pell(D):
    """The fundamental solution of t^2 - D u^2 = -4, if the river necklace
    factors as X followed by its letter-switched copy; None otherwise."""
    _check_real(D)
    letters, _ = _river_letters_from(principal_form(D))
    n = len(letters)
    if n % 2:
        return None
    for shift in range(n):
        rot = letters[shift:] + letters[:shift]
        half = n // 2
        x, y = rot[:half], rot[half:]
        if y == [_SWITCH[c] for c in x]:
            al, be, ga, de = _word_matrix(x)
            t = be + ga
            u = gcd(gcd(de, ga - be), al)
            if t > 0 and t * t - D * u * u == -4:
                return PellSolution(t, u, -4)
    return None


def epsilon(D):
    """The unit (t + u sqrt(D))/2 from the fundamental +4 solution."""
    s = pell_fundamental(D)
    return Surd(s.t, s.u, 2, D)


def epsilon_star(D):
    s = negative_pell(D)
    if s is None:
        return None
    return Surd(s.t, s.u, 2, D)


def automorph_generator(q):
    """G_q built from the fundamental Pell solution; fixes q exactly."""
    if q.content() != 1:
        raise DomainError("automorph generator needs a primitive form")
    D = q.discriminant()
    _check_real(D)
    s = pell_fundamental(D)
    a, b, c = q
    t, u = s.t, s.u
    if (t - b * u) % 2:  # pragma: no cover
        raise AssertionError("Pell parity mismatch")
    g = UniMat((t - b * u) // 2, -c * u, a * u, (t + b * u) // 2)
    if act(q, g) != q:  # pragma: no cover
        raise AssertionError("automorph does not fix the form")
    return g


def aut_structure(q):
    """Shape of the automorph group of a primitive form."""
    if q.content() != 1:
        raise DomainError("needs a primitive form")
    D = q.discriminant()
    if D == -3:
        return "order3"
    if D == -4:
        return "order2"
    if D < 0:
        return "trivial"
    if D == 0:
        return "infinite_T"
    if is_square(D):
        return "trivial"
    return "infinite_hyperbolic"


# ------------------------------------------------------------------ necklaces

def necklace_of(x):
    """Canonical river necklace of a discriminant (principal class) or of a
    given form's class."""
    if isinstance(x, QuadForm):
        from .reduce import reduce_simple_cycle

        D = x.discriminant()
        _check_real(D)
        anchor = reduce_simple_cycle(x).canonical[0]
        letters, _ = _river_letters_from(anchor)
    else:
        _check_real(x)
        letters, _ = _river_letters_from(principal_form(x))
    return Necklace("".join("0" if c == "L" else "1" for c in letters))


def topograph_of_necklace(n):
    """Primitive simple form whose river period reads the given necklace."""
    if not isinstance(n, Necklace):
        n = Necklace(n)
    al, be, ga, de = _word_matrix(n.bits)
    g = gcd(gcd(ga, de - al), be)
    return QuadForm(ga // g, (de - al) // g, -be // g)


# ---------------------------------------------------------------- square words

def word_of(q):
    """Binary word of a primitive square-discriminant topograph: the river's
    run-length letters with the first and last symbols removed.  D=1 has no
    river at all and returns None; D=4 returns the empty word."""
    from .contfrac import normalize_parity, real_cf
    from .exact import Rat
    from .reduce import reduce_square

    D = q.discriminant()
    if D <= 0 or not is_square(D):
        raise DomainError("word_of needs square D >= 1")
    if q.content() != 1:
        raise DomainError("word_of needs a primitive form")
    m = isqrt(D)
    if m == 1:
        return None
    r = reduce_square(q).canonical.c
    cf = normalize_parity(real_cf(Rat(m, r)), want_odd_index=True)
    letters = []
    for i, a in enumerate(cf.terms):
        letters.extend(["0" if i % 2 == 0 else "1"] * a)
    return "".join(letters[1:-1])


def topograph_of_word(w):
    """Inverse of word_of: pad a 0 at each end, read run lengths as the
    continued fraction of m/r, and return [0, m, r]."""
    if w is None:
        return QuadForm(0, 1, 1)
    if set(w) - {"0", "1"}:
        raise DomainError("word bits must be 0/1")
    padded = "0" + w + "0"
    terms = []
    prev = None
    for c in padded:
        if c == prev:
            terms[-1] += 1
        else:
            terms.append(1)
            prev = c
    val = Fraction(terms[-1])
    for t in reversed(terms[:-1]):
        val = t + 1 / val
    return QuadForm(0, val.numerator, val.denominator)


# ------------------------------------------------------------------- symmetry

def _neck_canon(bits):
    return min(bits[i:] + bits[:i] for i in range(len(bits)))


def symmetry(q):
    """Flags {q~q*, q~-q, q~-q*} read off the river sequence."""
    if q.content() != 1:
        raise DomainError("symmetry needs a primitive form")
    D = q.discriminant()
    if D <= 0:
        raise DomainError("symmetry is read from a river; needs D > 0")
    if is_square(D):
        w = word_of(q)
        if not w:
            return {"q~q*": True, "q~-q": True, "q~-q*": True}
        rev = w[::-1]
        sw = "".join(_SWITCH[c] for c in w)
        return {"q~q*": w == rev, "q~-q": w == sw[::-1], "q~-q*": w == sw}
    bits = necklace_of(q).bits
    rev = _neck_canon(bits[::-1])
    sw = _neck_canon("".join(_SWITCH[c] for c in bits))
    revsw = _neck_canon("".join(_SWITCH[c] for c in bits)[::-1])
    return {"q~q*": rev == bits, "q~-q": revsw == bits, "q~-q*": sw == bits}


def h1(D):
    """Wide-sense primitive class number."""
    if D % 4 not in (0, 1):
        raise DomainError("discriminant must be 0 or 1 mod 4")
    if D in (1, 4):
        return 1
    if D < 0:
        return h_neg(D)
    if D == 0:
        return 1
    if is_square(D):
        return euler_phi(isqrt(D)) // 2
    h = h_pos(D)
    if negative_pell(D) is not None:
        return h
    return h // 2

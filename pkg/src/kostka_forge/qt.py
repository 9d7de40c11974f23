"""Exact arithmetic in Z[q,t] and its fraction field Q(q,t).

QTPolynomial is a sparse bivariate polynomial with arbitrary-precision
integer coefficients, keyed by exponent pairs (a, b) for q^a * t^b and
kept in canonical form (no zero coefficients).  ExactScalar is a reduced
fraction of two QTPolynomials; reduction happens eagerly after every
operation so that equality is syntactic and integrality can be read off
the denominator.

The bivariate gcd is an interpolation-free primitive PRS (subresultant
style) computed recursively: the polynomial is viewed in the variable of
lower degree with coefficients in the other variable, whose gcds bottom
out in integer gcds.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd

from .errors import DivisionByZero, InternalNonDivisible, NotDivisible, PoleAtSpecialization

# ---------------------------------------------------------------------------
# univariate integer polynomials, represented as tuples low-to-high
# ---------------------------------------------------------------------------


def _utrim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _udeg(f):
    return len(f) - 1  # zero polynomial has degree -1


def _uadd(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return _utrim(out)


def _uneg(f):
    return tuple(-c for c in f)


def _usub(f, g):
    return _uadd(f, _uneg(g))


def _umul(f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] += a * b
    return _utrim(out)


def _uscale(f, c):
    if c == 0:
        return ()
    return tuple(a * c for a in f)


def _ucontent(f):
    g = 0
    for c in f:
        g = _igcd(g, c)
    return g


def _uprim(f):
    c = _ucontent(f)
    if c in (0, 1):
        return f
    return tuple(a // c for a in f)


def _uprem(f, g):
    """Pseudo-remainder of f by g (g nonzero)."""
    dg = _udeg(g)
    lg = g[-1]
    while f and _udeg(f) >= dg:
        shift = _udeg(f) - dg
        lf = f[-1]
        f = _usub(_uscale(f, lg), _uscale((0,) * shift + g, lf))
    return f


def _ugcd(f, g):
    if not f:
        return _upositive(g)
    if not g:
        return _upositive(f)
    cf, cg = _ucontent(f), _ucontent(g)
    f, g = _uprim(f), _uprim(g)
    if _udeg(f) < _udeg(g):
        f, g = g, f
    while g:
        f, g = g, _uprim(_uprem(f, g))
    f = _upositive(f)
    return _uscale(f, _igcd(cf, cg))


def _upositive(f):
    if f and f[-1] < 0:
        return _uneg(f)
    return f


def _uexact_div(f, g):
    """Exact division in Z[y]; raises if not exact (bug signal here)."""
    if not g:
        raise InternalNonDivisible("division by zero polynomial")
    if not f:
        return ()
    if g == (1,):
        return f
    dg = _udeg(g)
    lg = g[-1]
    out = [0] * (len(f) - dg)
    r = list(f)
    for k in range(len(out) - 1, -1, -1):
        c = r[k + dg]
        if c % lg:
            raise InternalNonDivisible("non-integer quotient coefficient")
        q = c // lg
        out[k] = q
        if q:
            for j, b in enumerate(g):
                r[k + j] -= q * b
    if any(r):
        raise InternalNonDivisible("nonzero remainder in exact division")
    return _utrim(out)


# ---------------------------------------------------------------------------
# bivariate layer: list of univariate coefficient polys, low-to-high in X
# ---------------------------------------------------------------------------


def _btrim(f):
    i = len(f)
    while i > 0 and not f[i - 1]:
        i -= 1
    return f[:i]


def _bsub(f, g):
    out = list(f) + [()] * (len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = _usub(out[i], c) if i < len(f) else _uneg(c)
    return _btrim(out)


def _bscale(f, c):
    return _btrim([_umul(a, c) for a in f])


def _bprem(f, g):
    dg = len(g) - 1
    lg = g[-1]
    while f and len(f) - 1 >= dg:
        shift = len(f) - 1 - dg
        lf = f[-1]
        f = _bsub(_bscale(f, lg), _bscale([()] * shift + list(g), lf))
    return f


def _bcontent(f):
    c = ()
    for a in f:
        c = _ugcd(c, a)
        if c == (1,):
            break
    return c


def _bprimdiv(f, c):
    if c == (1,):
        return list(f)
    return [_uexact_div(a, c) for a in f]


def _bgcd(f, g):
    f, g = _btrim(list(f)), _btrim(list(g))
    if not f:
        return g
    if not g:
        return f
    cf, cg = _bcontent(f), _bcontent(g)
    f, g = _bprimdiv(f, cf), _bprimdiv(g, cg)
    cont = _ugcd(cf, cg)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _bprem(f, g)
        r = _bprimdiv(r, _bcontent(r)) if r else []
        f, g = g, r
    return _bscale(f, cont)


# ---------------------------------------------------------------------------
# QTPolynomial
# ---------------------------------------------------------------------------


class QTPolynomial:
    """Sparse polynomial in Z[q,t]; terms map (a, b) -> nonzero int."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for k, c in terms.items():
                if c:
                    t[k] = c
        self._terms = t
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls):
        return _QT_ZERO

    @classmethod
    def one(cls):
        return _QT_ONE

    @classmethod
    def const(cls, c):
        return cls({(0, 0): int(c)})

    @classmethod
    def q(cls, power=1):
        return cls({(power, 0): 1})

    @classmethod
    def t(cls, power=1):
        return cls({(0, power): 1})

    @classmethod
    def monomial(cls, a, b, c=1):
        return cls({(a, b): c})

    # -- structure ----------------------------------------------------------

    def terms(self):
        """Terms as ((a, b), coeff) in increasing lexicographic order."""
        return sorted(self._terms.items())

    def __bool__(self):
        return bool(self._terms)

    def is_one(self):
        return self._terms == {(0, 0): 1}

    def is_const(self):
        return not self._terms or set(self._terms) == {(0, 0)}

    def const_value(self):
        return self._terms.get((0, 0), 0)

    def deg_q(self):
        return max((a for a, _ in self._terms), default=-1)

    def deg_t(self):
        return max((b for _, b in self._terms), default=-1)

    def leading(self):
        """Lexicographically largest term ((a, b), coeff); q before t."""
        k = max(self._terms)
        return k, self._terms[k]

    def content(self):
        g = 0
        for c in self._terms.values():
            g = _igcd(g, c)
        return g

    def __eq__(self, other):
        if not isinstance(other, QTPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return QTPolynomial(out)

    def __neg__(self):
        return QTPolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self._terms or not other._terms:
            return _QT_ZERO
        out = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return QTPolynomial(out)

    def scale(self, c):
        if not c:
            return _QT_ZERO
        return QTPolynomial({k: v * c for k, v in self._terms.items()})

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = _QT_ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- division and gcd ---------------------------------------------------

    def exact_divide(self, other):
        """Quotient self / other in Z[q,t]; raises NotDivisible otherwise."""
        if not other._terms:
            raise NotDivisible("division by zero")
        if not self._terms:
            return _QT_ZERO
        (la, lb), lc = other.leading()
        rem = dict(self._terms)
        quot = {}
        while rem:
            (a, b) = max(rem)
            c = rem[(a, b)]
            if a < la or b < lb or c % lc:
                raise NotDivisible("remainder is nonzero")
            k = (a - la, b - lb)
            qc = c // lc
            quot[k] = qc
            for (a2, b2), c2 in other._terms.items():
                kk = (k[0] + a2, k[1] + b2)
                s = rem.get(kk, 0) - qc * c2
                if s:
                    rem[kk] = s
                elif kk in rem:
                    del rem[kk]
        return QTPolynomial(quot)

    @staticmethod
    def gcd(a, b):
        """Gcd in Z[q,t], content included, lex-leading coefficient positive."""
        if not a._terms:
            return b._positive()
        if not b._terms:
            return a._positive()
        if a.is_const() or b.is_const():
            return QTPolynomial.const(_igcd(a.content(), b.content()))
        if a._terms == b._terms:
            return a._positive()
        # split off the monomial content q^aq * t^at * content on each side;
        # against a pure monomial the remaining gcd is just the integer content
        aq = min(x for x, _ in a._terms)
        at = min(y for _, y in a._terms)
        bq = min(x for x, _ in b._terms)
        bt = min(y for _, y in b._terms)
        mq, mt = min(aq, bq), min(at, bt)
        c = _igcd(a.content(), b.content())
        if len(a._terms) == 1 or len(b._terms) == 1:
            return QTPolynomial.monomial(mq, mt, c)
        if aq or at:
            a = QTPolynomial({(x - aq, y - at): v for (x, y), v in a._terms.items()})
        if bq or bt:
            b = QTPolynomial({(x - bq, y - bt): v for (x, y), v in b._terms.items()})
        # recurse in the variable of lower maximal degree
        dq = max(a.deg_q(), b.deg_q())
        dt = max(a.deg_t(), b.deg_t())
        main_q = dq <= dt
        fa, fb = a._to_b(main_q), b._to_b(main_q)
        g = _bgcd(fa, fb)
        g = QTPolynomial._from_b(g, main_q)._positive()
        if mq or mt:
            g = g * QTPolynomial.monomial(mq, mt)
        return g

    def _positive(self):
        if self._terms and self.leading()[1] < 0:
            return -self
        return self

    def _to_b(self, main_q):
        """Dense list in the main variable with tuple coefficients in the other."""
        if main_q:
            dm = self.deg_q()
            do = self.deg_t()
        else:
            dm = self.deg_t()
            do = self.deg_q()
        rows = [[0] * (do + 1) for _ in range(dm + 1)]
        for (a, b), c in self._terms.items():
            i, j = (a, b) if main_q else (b, a)
            rows[i][j] = c
        return _btrim([_utrim(r) for r in rows])

    @staticmethod
    def _from_b(f, main_q):
        terms = {}
        for i, coeff in enumerate(f):
            for j, c in enumerate(coeff):
                if c:
                    terms[(i, j) if main_q else (j, i)] = c
        return QTPolynomial(terms)

    # -- evaluation and specialization --------------------------------------

    def evaluate(self, qv, tv):
        return sum(c * qv**a * tv**b for (a, b), c in self._terms.items())

    def substitute(self, qv=None, tv=None):
        """Partially substitute rational values; returns (poly, denominator).

        The result is num_poly / denominator with num_poly in Z[q,t] (a
        surviving variable keeps its exponents) and denominator a positive int.
        """
        acc = {}
        for (a, b), c in self._terms.items():
            v = Fraction(c)
            if qv is not None:
                v *= Fraction(qv) ** a
                a = 0
            if tv is not None:
                v *= Fraction(tv) ** b
                b = 0
            acc[(a, b)] = acc.get((a, b), Fraction(0)) + v
        den = 1
        for v in acc.values():
            den = den * v.denominator // _igcd(den, v.denominator)
        terms = {k: int(v * den) for k, v in acc.items() if v}
        return QTPolynomial(terms), den

    # -- serialization ------------------------------------------------------

    def to_json_terms(self):
        return [[a, b, str(c)] for (a, b), c in self.terms()]

    @classmethod
    def from_json_terms(cls, data):
        return cls({(int(a), int(b)): int(c) for a, b, c in data})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(
                ([f"q^{a}" if a > 1 else "q"] if a else [])
                + ([f"t^{b}" if b > 1 else "t"] if b else [])
            )
            if not mono:
                frag = str(abs(c))
            elif abs(c) == 1:
                frag = mono
            else:
                frag = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + frag)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return f"QTPolynomial({self})"


_QT_ZERO = QTPolynomial()
_QT_ONE = QTPolynomial({(0, 0): 1})


# ---------------------------------------------------------------------------
# ExactScalar: reduced fractions in Q(q,t)
# ---------------------------------------------------------------------------


class ExactScalar:
    """Element of Q(q,t) as a reduced fraction of integer polynomials.

    Invariants: the denominator is nonzero, gcd(num, den) = 1 in Z[q,t]
    (integer content included) and the denominator's lex-leading
    coefficient is positive.  Zero is (0, 1).
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _reduced=False):
        if den is None:
            den = _QT_ONE
        if not den:
            raise DivisionByZero("zero denominator")
        if not _reduced:
            num, den = self._reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def _reduce(num, den):
        if not num:
            return _QT_ZERO, _QT_ONE
        if not den.is_one():
            g = QTPolynomial.gcd(num, den)
            if not g.is_one():
                num = num.exact_divide(g)
                den = den.exact_divide(g)
        if den.leading()[1] < 0:
            num, den = -num, -den
        return num, den

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls):
        return _ES_ZERO

    @classmethod
    def one(cls):
        return _ES_ONE

    @classmethod
    def from_int(cls, c):
        return cls(QTPolynomial.const(c), _QT_ONE, _reduced=c != 0)

    @classmethod
    def from_fraction(cls, f):
        f = Fraction(f)
        return cls(QTPolynomial.const(f.numerator), QTPolynomial.const(f.denominator))

    @classmethod
    def from_poly(cls, p):
        return cls(p, _QT_ONE, _reduced=True)

    @classmethod
    def q(cls, power=1):
        if power >= 0:
            return cls(QTPolynomial.q(power), _QT_ONE, _reduced=True)
        return cls(_QT_ONE, QTPolynomial.q(-power), _reduced=True)

    @classmethod
    def t(cls, power=1):
        if power >= 0:
            return cls(QTPolynomial.t(power), _QT_ONE, _reduced=True)
        return cls(_QT_ONE, QTPolynomial.t(-power), _reduced=True)

    @classmethod
    def qt_monomial(cls, a, b):
        """q^a * t^b with a, b in Z."""
        num = QTPolynomial.monomial(max(a, 0), max(b, 0))
        den = QTPolynomial.monomial(max(-a, 0), max(-b, 0))
        return cls(num, den, _reduced=True)

    # -- predicates ---------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_integral(self):
        """True iff the reduced denominator is a unit of Z[q,t]."""
        return self.den.is_one()

    def __eq__(self, other):
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- field operations ---------------------------------------------------

    def __add__(self, other):
        if not other:
            return self
        if not self:
            return other
        d1, d2 = self.den, other.den
        if d1 == d2:
            num = self.num + other.num
            if not num:
                return _ES_ZERO
            if d1.is_one():
                return ExactScalar(num, d1, _reduced=True)
            g = QTPolynomial.gcd(num, d1)
            if g.is_one():
                return ExactScalar(num, d1, _reduced=True)
            return ExactScalar(num.exact_divide(g), d1.exact_divide(g), _reduced=True)
        # with both operands reduced, any common factor of the combined
        # numerator and denominator must divide g = gcd(d1, d2)
        g = QTPolynomial.gcd(d1, d2)
        if g.is_one():
            num = self.num * d2 + other.num * d1
            if not num:
                return _ES_ZERO
            return ExactScalar(num, d1 * d2, _reduced=True)
        d1g = d1.exact_divide(g)
        d2g = d2.exact_divide(g)
        num = self.num * d2g + other.num * d1g
        if not num:
            return _ES_ZERO
        h = QTPolynomial.gcd(num, g)
        if not h.is_one():
            num = num.exact_divide(h)
            g = g.exact_divide(h)
        return ExactScalar(num, d1g * d2g * g, _reduced=True)

    def __neg__(self):
        return ExactScalar(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self or not other:
            return _ES_ZERO
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        # cross-cancel so the products below are already coprime
        if not d2.is_one():
            g1 = QTPolynomial.gcd(n1, d2)
            if not g1.is_one():
                n1 = n1.exact_divide(g1)
                d2 = d2.exact_divide(g1)
        if not d1.is_one():
            g2 = QTPolynomial.gcd(n2, d1)
            if not g2.is_one():
                n2 = n2.exact_divide(g2)
                d1 = d1.exact_divide(g2)
        return ExactScalar(n1 * n2, d1 * d2, _reduced=True)

    def __truediv__(self, other):
        if not other:
            raise DivisionByZero("division by zero scalar")
        if not self:
            return _ES_ZERO
        return self * other.inverse()

    def inverse(self):
        if not self:
            raise DivisionByZero("inverse of zero")
        num, den = self.den, self.num
        if den.leading()[1] < 0:
            num, den = -num, -den
        return ExactScalar(num, den, _reduced=True)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = _ES_ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, qv, tv):
        d = self.den.evaluate(qv, tv)
        if d == 0:
            raise PoleAtSpecialization(f"denominator vanishes at q={qv}, t={tv}")
        return self.num.evaluate(qv, tv) / d

    def specialize(self, qv=None, tv=None):
        """Substitute rational values for q and/or t, staying exact."""
        n, nd = self.num.substitute(qv, tv)
        d, dd = self.den.substitute(qv, tv)
        return ExactScalar(n.scale(dd), d.scale(nd))

    # -- serialization ------------------------------------------------------

    def to_json(self):
        return {"num": self.num.to_json_terms(), "den": self.den.to_json_terms()}

    @classmethod
    def from_json(cls, data):
        return cls(
            QTPolynomial.from_json_terms(data["num"]),
            QTPolynomial.from_json_terms(data["den"]),
        )

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"ExactScalar({self})"


_ES_ZERO = ExactScalar(_QT_ZERO, _QT_ONE, _reduced=True)
_ES_ONE = ExactScalar(_QT_ONE, _QT_ONE, _reduced=True)

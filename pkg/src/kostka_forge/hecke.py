"""Operator calculus on ZPolynomial: reflections, divided differences,
Hecke operators and inverses, the rotation Delta, the creation operators
Phi / Phi' / Phi_1, Cherednik operators xi_i, operator words and the
A-family building blocks of the box-adding recursion.

All operators are pure functions; indices are 1-based as in the usual
algebraic notation (s_i swaps z_i and z_{i+1}).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import IndexOutOfRange, ZeroComposition
from .qt import ExactScalar
from .weights import length, perm_length, spectral_vector
from .qt import QTPolynomial
from .zpoly import ZPolynomial

_ONE_MINUS_T = ExactScalar.from_poly(QTPolynomial.one() - QTPolynomial.t())


def _check_reflection_index(f, i):
    if not 1 <= i <= f.n - 1:
        raise IndexOutOfRange(f"reflection index {i} out of range for n={f.n}")


def apply_reflection(f, i):
    """s_i: swap z_i and z_{i+1}."""
    _check_reflection_index(f, i)
    out = {}
    for e, c in f.terms.items():
        k = list(e)
        k[i - 1], k[i] = k[i], k[i - 1]
        out[tuple(k)] = c
    return ZPolynomial(f.n, out)


def apply_divided_difference(f, i):
    """N_i = (z_i - z_{i+1})^{-1} (1 - s_i), via the per-term geometric sum.

    (z^a w^b - z^b w^a)/(z - w) expands exactly, so no polynomial division
    is needed and the result is always a (Laurent) polynomial.
    """
    _check_reflection_index(f, i)
    out = {}
    ii = i - 1
    for e, c in f.terms.items():
        a, b = e[ii], e[ii + 1]
        if a == b:
            continue
        neg = a < b
        if neg:
            a, b = b, a
            c = -c
        base = list(e)
        for k in range(a - b):
            base[ii], base[ii + 1] = a - 1 - k, b + k
            key = tuple(base)
            s = out[key] + c if key in out else c
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return ZPolynomial(f.n, out)


def apply_hecke(f, i, variant="H"):
    """H_i, Hbar_i and their closed-form inverses.

    H_i = s_i - (1-t) N_i z_i,  Hbar_i = s_i - (1-t) z_{i+1} N_i;
    the quadratic relation gives H_i^{-1} = t^{-1} Hbar_i and
    Hbar_i^{-1} = t^{-1} H_i.
    """
    _check_reflection_index(f, i)
    if variant == "H_inv":
        return apply_hecke(f, i, "Hbar").scalar_mul(ExactScalar.t(-1))
    if variant == "Hbar_inv":
        return apply_hecke(f, i, "H").scalar_mul(ExactScalar.t(-1))
    if variant == "H":
        zi = [0] * f.n
        zi[i - 1] = 1
        corr = apply_divided_difference(f.monomial_mul(zi), i)
    elif variant == "Hbar":
        zi1 = [0] * f.n
        zi1[i] = 1
        corr = apply_divided_difference(f, i).monomial_mul(zi1)
    else:
        raise ValueError(f"unknown Hecke variant {variant!r}")
    return apply_reflection(f, i) - corr.scalar_mul(_ONE_MINUS_T)


def apply_delta(f, direction="forward"):
    """Delta f(z_1,...,z_n) = f(q^{-1} z_n, z_1, ..., z_{n-1})."""
    n = f.n
    qinv = ExactScalar.q(-1)
    qpos = ExactScalar.q(1)

    def unit(j):
        e = [0] * n
        e[j] = 1
        return tuple(e)

    if direction == "forward":
        images = [(qinv, unit(n - 1))] + [(None, unit(j - 2)) for j in range(2, n + 1)]
    elif direction == "inverse":
        images = [(None, unit(j)) for j in range(1, n)] + [(qpos, unit(0))]
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return f.substitute(images)


def apply_phi(f, variant="Phi"):
    """Phi = z_n Delta;  Phi' = t^{1-n} z_n H_{n-1}...H_1;  Phi_1 = z_n s_{n-1}...s_1."""
    n = f.n
    zn = [0] * n
    zn[n - 1] = 1
    if variant == "Phi":
        return apply_delta(f, "forward").monomial_mul(zn)
    if variant == "Phi_prime":
        g = f
        for i in range(1, n):
            g = apply_hecke(g, i, "H")
        return g.monomial_mul(zn).scalar_mul(ExactScalar.t(1 - n))
    if variant == "Phi_one":
        g = f
        for i in range(1, n):
            g = apply_reflection(g, i)
        return g.monomial_mul(zn)
    raise ValueError(f"unknown Phi variant {variant!r}")


def apply_xi(f, i, direction="forward"):
    """Cherednik operator xi_i (forward) or its displayed inverse word.

    xi_i^{-1} = Hbar_i ... Hbar_{n-1} Delta H_1 ... H_{i-1}, applied
    right-to-left; the forward direction is the inverse-word composition,
    with eigenvalue lambda-bar_i on E_lambda.
    """
    n = f.n
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"xi index {i} out of range for n={n}")
    if direction == "inverse":
        g = f
        for j in range(i - 1, 0, -1):
            g = apply_hecke(g, j, "H")
        g = apply_delta(g, "forward")
        for j in range(n - 1, i - 1, -1):
            g = apply_hecke(g, j, "Hbar")
        return g
    if direction == "forward":
        g = f
        for j in range(i, n):
            g = apply_hecke(g, j, "Hbar_inv")
        g = apply_delta(g, "inverse")
        for j in range(1, i):
            g = apply_hecke(g, j, "H_inv")
        return g
    raise ValueError(f"unknown direction {direction!r}")


# ---------------------------------------------------------------------------
# operator words
# ---------------------------------------------------------------------------

_SYMBOL_TEXT = {
    "s": "s{}",
    "N": "N{}",
    "H": "H{}",
    "Hb": "Hb{}",
    "Hi": "Hinv{}",
    "Hbi": "Hbinv{}",
    "D": "D",
    "Di": "Dinv",
    "Phi": "Phi",
    "Phip": "Phi'",
    "Phi1": "Phi1",
    "z": "z{}",
    "c": "c",
}


@dataclass(frozen=True)
class OperatorWord:
    """A sequence of primitive operator symbols, applied right-to-left.

    Symbols are tuples: ("H", i), ("Hb", i), ("Hi", i), ("Hbi", i),
    ("s", i), ("N", i), ("D",), ("Di",), ("Phi",), ("Phip",), ("Phi1",),
    ("z", i) for multiplication by z_i and ("c", scalar).
    """

    symbols: tuple

    def __len__(self):
        return len(self.symbols)

    def to_text(self):
        frags = []
        for sym in self.symbols:
            tag = sym[0]
            if tag == "c":
                frags.append(f"c({sym[1]})")
            elif len(sym) > 1:
                frags.append(_SYMBOL_TEXT[tag].format(sym[1]))
            else:
                frags.append(_SYMBOL_TEXT[tag])
        return " ".join(frags)


def apply_symbol(f, sym):
    tag = sym[0]
    if tag == "s":
        return apply_reflection(f, sym[1])
    if tag == "N":
        return apply_divided_difference(f, sym[1])
    if tag == "H":
        return apply_hecke(f, sym[1], "H")
    if tag == "Hb":
        return apply_hecke(f, sym[1], "Hbar")
    if tag == "Hi":
        return apply_hecke(f, sym[1], "H_inv")
    if tag == "Hbi":
        return apply_hecke(f, sym[1], "Hbar_inv")
    if tag == "D":
        return apply_delta(f, "forward")
    if tag == "Di":
        return apply_delta(f, "inverse")
    if tag == "Phi":
        return apply_phi(f, "Phi")
    if tag == "Phip":
        return apply_phi(f, "Phi_prime")
    if tag == "Phi1":
        return apply_phi(f, "Phi_one")
    if tag == "z":
        e = [0] * f.n
        e[sym[1] - 1] = 1
        return f.monomial_mul(e)
    if tag == "c":
        return f.scalar_mul(sym[1])
    raise ValueError(f"unknown operator symbol {sym!r}")


def apply_word(f, word):
    """Apply an OperatorWord (or raw symbol sequence) right-to-left."""
    symbols = word.symbols if isinstance(word, OperatorWord) else tuple(word)
    for sym in reversed(symbols):
        f = apply_symbol(f, sym)
    return f


def hecke_word(f, reduced_word, variant="H"):
    """H_w (or Hbar_w) for a reduced word, rightmost letter first."""
    tag = {"H": "H", "Hbar": "Hbar"}[variant]
    for i in reversed(reduced_word):
        f = apply_hecke(f, i, tag)
    return f


def build_A_family(n, m, variant="A"):
    """A_m = H_m...H_{n-1} Phi and friends, as OperatorWords.

    m = n yields the bare Phi (resp. Phi') by the empty-product convention.
    """
    if not 1 <= m <= n:
        raise IndexOutOfRange(f"A-family index {m} out of range for n={n}")
    heads = {"A": "H", "Abar": "Hb", "Aprime": "H", "Abar_prime": "Hb"}
    tails = {"A": "Phi", "Abar": "Phi", "Aprime": "Phip", "Abar_prime": "Phip"}
    if variant not in heads:
        raise ValueError(f"unknown A-family variant {variant!r}")
    syms = tuple((heads[variant], i) for i in range(m, n)) + ((tails[variant],),)
    return OperatorWord(syms)


def apply_X_lambda(f, lam):
    """The normalized creation step q^{lam_m - 1} (Abar_m - lambda-bar_m t^m A_m)."""
    lam = tuple(lam)
    m = length(lam)
    if m == 0:
        raise ZeroComposition("X_lambda needs a nonzero composition")
    n = len(lam)
    ev = spectral_vector(lam).scalar(m) * ExactScalar.t(m)
    a = apply_word(f, build_A_family(n, m, "A"))
    abar = apply_word(f, build_A_family(n, m, "Abar"))
    out = abar - a.scalar_mul(ev)
    return out.scalar_mul(ExactScalar.q(lam[m - 1] - 1))


def hecke_symmetrize(f):
    """Sum of H_w(f) over all w in S_n, built along weak order."""
    n = f.n
    perms = sorted(itertools.permutations(range(n)), key=perm_length)
    results = {perms[0]: f}
    total = f
    for w in perms[1:]:
        for i in range(1, n):
            # w = s_i * w' with l(w') = l(w) - 1 iff i-1 appears after i
            wl = list(w)
            wl[wl.index(i - 1)], wl[wl.index(i)] = i, i - 1
            wp = tuple(wl)
            if perm_length(wp) < perm_length(w) and wp in results:
                hw = apply_hecke(results[wp], i, "H")
                results[w] = hw
                total = total + hw
                break
        else:
            raise RuntimeError("weak-order BFS failed")  # pragma: no cover
    return total

"""The solid-torus link invariant computed from braid words.

A braid word on n strands maps into the algebra (sigma_i to T_i, the loop
letter to B, inverses expanded by the quadratic relations); the Markov trace
of the image, rescaled by the exponent sum, is an isotopy invariant of the
closed link in the solid torus:

    value = D^(n-1) * s^e * trace,   D = 1 / (z * s),   s^2 = L,
    L = (z - (u - u^-1) x) / z,      e = exponent sum of the sigma letters.

Only integer powers of L ever need splitting: s is carried as a parity bit,
and a value is stored as

    s^parity * numer / (z^z_pow * (z - (u - u^-1) x)^l_pow)

with numer a Laurent polynomial and both denominator exponents nonnegative.
Powers of z shared between numer and the denominator are cancelled (z is a
monomial, no gcd machinery); no cancellation is attempted against the L
factor, so equality is decided by cross-multiplication, never by normal
forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import LaurentPoly, ZERO, var
from .coxeter import BraidWordB, exponent_sum
from .algebra import (
    AlgebraElement,
    GEN_B,
    GEN_B_INV,
    RingParams,
    SYMBOLIC,
    mul_gen,
    unit,
)
from .trace import markov_trace

L_NUMER = var("z") - (var("u") - var("u", -1)) * var("x")
"""The numerator of the rescaling constant L; its denominator is z."""


def pi_natural(word: BraidWordB, params: RingParams = SYMBOLIC) -> AlgebraElement:
    """The algebra image of a braid word (a homomorphism on words)."""
    e = unit(word.n)
    for letter in word.letters:
        if letter[0] == "r":
            g = GEN_B if letter[1] > 0 else GEN_B_INV
        else:
            g = ("T", letter[1]) if letter[2] > 0 else ("T-", letter[1])
        e = mul_gen(e, g, params)
    return e


@dataclass(frozen=True)
class InvariantValue:
    """Canonical form of an invariant value (see module docstring)."""

    s_parity: int
    numer: LaurentPoly
    z_pow: int
    l_pow: int

    def is_zero(self) -> bool:
        return self.numer.is_zero()

    def pretty(self) -> str:
        if self.is_zero():
            return "0"
        num = str(self.numer)
        if " " in num or "+" in num or "-" in num[1:]:
            num = f"({num})"
        parts = []
        if self.s_parity:
            parts.append("s")
        parts.append(num)
        out = " * ".join(parts)
        dens = []
        if self.z_pow:
            dens.append("z" if self.z_pow == 1 else f"z^{self.z_pow}")
        if self.l_pow:
            base = "(z - (u - u^-1) x)"
            dens.append(base if self.l_pow == 1 else f"{base}^{self.l_pow}")
        if dens:
            out += " / (" + " ".join(dens) + ")"
        return out

    def to_obj(self) -> dict:
        return {
            "s_parity": self.s_parity,
            "numer": self.numer.to_obj(),
            "z_pow": self.z_pow,
            "L_pow": self.l_pow,
            "pretty": self.pretty(),
        }

    def __str__(self) -> str:
        return self.pretty()


def _canonical(parity: int, numer: LaurentPoly, z_pow: int, l_pow: int) -> InvariantValue:
    if numer.is_zero():
        return InvariantValue(0, ZERO, 0, 0)
    # slide z powers so the numerator has no z at the bottom and z_pow >= 0
    lo, _ = numer.exponent_range("z")
    numer = numer * var("z", -lo)
    z_pow -= lo
    if z_pow < 0:
        numer = numer * var("z", -z_pow)
        z_pow = 0
    return InvariantValue(parity & 1, numer, z_pow, l_pow)


def delta_b(word: BraidWordB, params: RingParams = SYMBOLIC) -> InvariantValue:
    """The invariant of the closure of a braid word.

    Combines the Markov trace of the word's algebra image with the
    normalization D^(n-1) s^e; integer powers of s^2 = L are folded into the
    fraction and only the parity of e - n + 1 survives as the formal s.
    """
    n = word.n
    trace = markov_trace(pi_natural(word, params), params)
    e = exponent_sum(word)
    m = e - (n - 1)
    parity = m % 2
    half = (m - parity) // 2
    if half >= 0:
        numer = trace * L_NUMER ** half
        return _canonical(parity, numer, n - 1 + half, 0)
    return _canonical(parity, trace, n - 1 + half, -half)


def invariant_eq(p: InvariantValue, q: InvariantValue) -> bool:
    """Equality in the ring extended by s with s^2 = L.

    Parities are compared first (s is not a ring element, so values of
    different parity agree only when both vanish); then the two fractions are
    cross-multiplied.
    """
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    if p.s_parity != q.s_parity:
        return False
    left = p.numer * var("z", q.z_pow) * L_NUMER ** q.l_pow
    right = q.numer * var("z", p.z_pow) * L_NUMER ** p.l_pow
    return left == right

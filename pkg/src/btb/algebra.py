"""The tied braid algebra of type B in its normal-form basis.

An element is a finite linear combination of basis pairs (I, w) where I is a
set partition of {0,...,n} and w is a signed permutation: the pair stands for
the product (tie idempotents encoded by I) * (braid-word image of w).  The
generators are

- T_i, the braid generators, with T_i^2 = 1 + (u - u^-1) E_i T_i,
- B (the loop around the fixed strand), with B^2 = 1 + (v - v^-1) F_1 B,
- E_i, the tie between moving strands i and i+1: pair (join {i,i+1}, id),
- F_j, the tie between strand j and the fixed strand: pair (join {0,j}, id).

Multiplication is exact and works one generator at a time on normalized
terms.  Right-multiplying the pair (I, w) by a generator produces at most two
terms: idempotents conjugate leftward through w and merge into I (relabelled
by |w(.)|), a braid letter either extends w or, on a descent, splits into the
shorter word plus a quadratic correction.  Word independence of the result is
guaranteed by the braid relations (Matsumoto), so any reduced word may drive
the letter loop.

The module also maintains a second, descriptor-indexed basis used by the
relative traces: products m_1...m_n * (idempotents of I), where m_k is one of
1, B_k = T_{k-1}..T_1 B T_1^-1..T_{k-1}^-1, or T_{k-1}..T_j optionally
followed by B_j.  ``CBasis`` caches the expansions of these descriptors into
normal form; expansions are unitriangular (descriptor -> its leading pair
with coefficient one plus strictly shorter words), so elements are expressed
in descriptor coordinates by peeling leading terms, with no division at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .coeff import ONE, LaurentPoly, var
from .coxeter import (
    R_LETTER,
    Window,
    apply_letter,
    enumerate_group,
    eta,
    identity,
    length,
    normal_form,
    perm_inverse,
    reduced_word,
)
from .partitions import (
    SetPartition0,
    apply_perm,
    embed as embed_partition,
    enumerate_partitions,
    join,
    join_set,
    singletons,
)

BasisPair = tuple  # (SetPartition0, Window)

# -- quadratic constants -------------------------------------------------------

@dataclass(frozen=True)
class RingParams:
    """The two quadratic constants (and the T-eigenvalue used by the tensor
    module), symbolically by default, or specialized at a rational point.

    ``key`` identifies the parameter choice in expansion caches.
    """

    key: str
    qu: LaurentPoly  # coefficient of E_i T_i in T_i^2 - 1
    qv: LaurentPoly  # coefficient of F_1 B in B^2 - 1
    tu: LaurentPoly  # the variable u itself (tensor action needs it alone)


SYMBOLIC = RingParams(
    "symbolic",
    qu=var("u") - var("u", -1),
    qv=var("v") - var("v", -1),
    tu=var("u"),
)


def specialized_params(u0, v0) -> RingParams:
    """Parameters with u, v pinned to nonzero rationals (x, y, z, w stay
    symbolic)."""
    u0, v0 = Fraction(u0), Fraction(v0)
    if not u0 or not v0:
        raise ValueError("u and v must be specialized to nonzero values")
    from .coeff import const

    return RingParams(
        f"u={u0};v={v0}",
        qu=const(u0 - 1 / u0),
        qv=const(v0 - 1 / v0),
        tu=const(u0),
    )


# -- generators ----------------------------------------------------------------

def gen_T(i: int) -> tuple:
    return ("T", i)


def gen_T_inv(i: int) -> tuple:
    return ("T-", i)


def gen_E(i: int) -> tuple:
    return ("E", i)


def gen_F(j: int) -> tuple:
    return ("F", j)


GEN_B = ("B",)
GEN_B_INV = ("B-",)


def _check_gen(g: tuple, n: int) -> None:
    kind = g[0]
    if kind in ("T", "T-", "E"):
        if not (1 <= g[1] <= n - 1):
            raise ValueError(f"generator {g} out of range for n = {n}")
    elif kind == "F":
        if not (1 <= g[1] <= n):
            raise ValueError(f"generator {g} out of range for n = {n}")
    elif kind in ("B", "B-"):
        if n < 1:
            raise ValueError("loop generator needs at least one strand")
    else:
        raise ValueError(f"unknown generator {g!r}")


# -- elements -------------------------------------------------------------------

class AlgebraElement:
    """A linear combination of basis pairs with Laurent-polynomial
    coefficients.  Immutable by convention; no zero coefficients stored."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        cleaned: dict[BasisPair, LaurentPoly] = {}
        if terms:
            for (I, w), c in terms.items():
                if not isinstance(I, SetPartition0) or I.n != n or len(w) != n:
                    raise ValueError("term does not match the strand count")
                if c:
                    cleaned[(I, tuple(w))] = c
        self.n = n
        self.terms = cleaned

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "AlgebraElement":
        e = object.__new__(cls)
        e.n = n
        e.terms = terms
        return e

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.n != other.n:
            raise ValueError("elements live over different strand counts")
        out = dict(self.terms)
        for key, c in other.terms.items():
            _acc(out, key, c)
        return AlgebraElement._raw(self.n, out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.n != other.n:
            raise ValueError("elements live over different strand counts")
        out = dict(self.terms)
        for key, c in other.terms.items():
            _acc(out, key, -c)
        return AlgebraElement._raw(self.n, out)

    def scaled(self, c: LaurentPoly) -> "AlgebraElement":
        if isinstance(c, (int, Fraction)):
            from .coeff import const

            c = const(c)
        if not c:
            return AlgebraElement._raw(self.n, {})
        return AlgebraElement._raw(
            self.n, {key: coeff * c for key, coeff in self.terms.items()}
        )

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0].parent, kv[0][1]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (I, w), c in self.sorted_terms():
            bits.append(f"({c}) * [{I} ; {w}]")
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"<AlgebraElement n={self.n} with {len(self.terms)} terms>"

    def to_obj(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"partition": I.to_obj(), "window": list(w), "coeff": c.to_obj()}
                for (I, w), c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "AlgebraElement":
        n = int(obj["n"])
        terms: dict[BasisPair, LaurentPoly] = {}
        for entry in obj["terms"]:
            I = SetPartition0.from_obj(n, entry["partition"])
            w = tuple(int(m) for m in entry["window"])
            c = LaurentPoly.from_obj(entry["coeff"])
            _acc(terms, (I, w), c)
        return cls(n, terms)


def _acc(out: dict, key: BasisPair, c: LaurentPoly) -> None:
    acc = out.get(key)
    if acc is None:
        if c:
            out[key] = c
    else:
        acc = acc + c
        if acc:
            out[key] = acc
        else:
            del out[key]


def zero(n: int) -> AlgebraElement:
    return AlgebraElement._raw(n, {})


def unit(n: int) -> AlgebraElement:
    return AlgebraElement._raw(n, {(singletons(n), identity(n)): ONE})


def ef_elem(I: SetPartition0) -> AlgebraElement:
    """The idempotent product encoded by a partition, as a single basis term."""
    return AlgebraElement._raw(I.n, {(I, identity(I.n)): ONE})


def tw_elem(n: int, w: Window) -> AlgebraElement:
    """The braid-word image of a group element, as a single basis term."""
    return AlgebraElement._raw(n, {(singletons(n), tuple(w)): ONE})


def gen_elem(g: tuple, n: int, params: RingParams = SYMBOLIC) -> AlgebraElement:
    """A generator as an element; inverses expand by the quadratic relations:
    T_i^-1 = T_i - (u - u^-1) E_i and B^-1 = B - (v - v^-1) F_1."""
    _check_gen(g, n)
    kind = g[0]
    if kind == "E":
        i = g[1]
        return ef_elem(join_set(singletons(n), (i, i + 1)))
    if kind == "F":
        return ef_elem(join_set(singletons(n), (0, g[1])))
    if kind == "T":
        return tw_elem(n, apply_letter(identity(n), ("s", g[1])))
    if kind == "B":
        return tw_elem(n, apply_letter(identity(n), R_LETTER))
    if kind == "T-":
        i = g[1]
        return gen_elem(("T", i), n) - gen_elem(("E", i), n).scaled(params.qu)
    # kind == "B-"
    return gen_elem(GEN_B, n) - gen_elem(("F", 1), n).scaled(params.qv)


def embed(e: AlgebraElement, n: int) -> AlgebraElement:
    """View an element inside the algebra on more strands (new strands are
    untied and unmoved)."""
    if n < e.n:
        raise ValueError("cannot embed into fewer strands")
    if n == e.n:
        return e
    pad = tuple(range(e.n + 1, n + 1))
    return AlgebraElement._raw(
        n,
        {
            (embed_partition(I, n), w + pad): c
            for (I, w), c in e.terms.items()
        },
    )


# -- multiplication --------------------------------------------------------------

def mul_gen(e: AlgebraElement, g: tuple, params: RingParams = SYMBOLIC) -> AlgebraElement:
    """Right-multiply by a single generator.

    Idempotents conjugate through each term's group part and join the
    partition; braid letters extend the group part, or split on a descent
    into the shorter word plus the quadratic correction term.
    """
    _check_gen(g, e.n)
    kind = g[0]
    if kind == "T-":
        i = g[1]
        return mul_gen(e, ("T", i), params) - mul_gen(e, ("E", i), params).scaled(params.qu)
    if kind == "B-":
        return mul_gen(e, GEN_B, params) - mul_gen(e, ("F", 1), params).scaled(params.qv)

    out: dict[BasisPair, LaurentPoly] = {}
    if kind == "E":
        i = g[1]
        for (I, w), c in e.terms.items():
            _acc(out, (join_set(I, (abs(w[i - 1]), abs(w[i]))), w), c)
    elif kind == "F":
        j = g[1]
        for (I, w), c in e.terms.items():
            _acc(out, (join_set(I, (0, abs(w[j - 1]))), w), c)
    elif kind == "T":
        i = g[1]
        letter = ("s", i)
        for (I, w), c in e.terms.items():
            w2 = apply_letter(w, letter)
            if w[i - 1] > w[i]:  # descent: T_w T_i = T_{w2} + qu E.. T_w
                _acc(out, (I, w2), c)
                _acc(out, (join_set(I, (abs(w2[i - 1]), abs(w2[i]))), w), c * params.qu)
            else:
                _acc(out, (I, w2), c)
    else:  # "B"
        for (I, w), c in e.terms.items():
            w2 = apply_letter(w, R_LETTER)
            if w[0] < 0:  # descent: T_w B = T_{w2} + qv F.. T_w
                _acc(out, (I, w2), c)
                _acc(out, (join_set(I, (0, abs(w2[0]))), w), c * params.qv)
            else:
                _acc(out, (I, w2), c)
    return AlgebraElement._raw(e.n, out)


def word_product(n: int, gens: Iterable[tuple], params: RingParams = SYMBOLIC) -> AlgebraElement:
    """Multiply out a sequence of generators, left to right."""
    e = unit(n)
    for g in gens:
        e = mul_gen(e, g, params)
    return e


def mul(a: AlgebraElement, b: AlgebraElement, params: RingParams = SYMBOLIC) -> AlgebraElement:
    """The exact product, associative and bilinear.

    Per right-hand basis term (J, v): the idempotents J conjugate through
    each left term and join its partition, then the letters of any reduced
    word of v are applied one at a time.
    """
    if a.n != b.n:
        raise ValueError("elements live over different strand counts")
    n = a.n
    total: dict[BasisPair, LaurentPoly] = {}
    for (J, v), q in b.terms.items():
        tmp: dict[BasisPair, LaurentPoly] = {}
        for (I, w), c in a.terms.items():
            K = join(I, apply_perm(eta(w), J))
            _acc(tmp, (K, w), c * q)
        cur = AlgebraElement._raw(n, tmp)
        for letter in reduced_word(v):
            g = GEN_B if letter == R_LETTER else ("T", letter[1])
            cur = mul_gen(cur, g, params)
        for key, c in cur.terms.items():
            _acc(total, key, c)
    return AlgebraElement._raw(n, total)


def mul_many(factors: Sequence[AlgebraElement], params: RingParams = SYMBOLIC) -> AlgebraElement:
    out = factors[0]
    for f in factors[1:]:
        out = mul(out, f, params)
    return out


# -- the normal-form basis --------------------------------------------------------

def basis_pairs(n: int) -> Iterator[BasisPair]:
    """All (partition, group element) pairs in deterministic order."""
    for I in enumerate_partitions(n):
        for w in enumerate_group(n):
            yield (I, w)


def basis_B(n: int) -> list[AlgebraElement]:
    """All basis elements as single-term elements."""
    return [
        AlgebraElement._raw(n, {pair: ONE}) for pair in basis_pairs(n)
    ]


# -- the descriptor basis driving the traces ----------------------------------------

MCode = tuple  # (j, sign): sign +1 -> T_{k-1}..T_j (1 if j = k);
#                sign -1 -> T_{k-1}..T_j B_j (B_k if j = k)


def m_codes(k: int) -> Iterator[MCode]:
    """The 2k block choices at level k, in deterministic order."""
    yield (k, 1)
    yield (k, -1)
    for j in range(k - 1, 0, -1):
        yield (j, 1)
        yield (j, -1)


@lru_cache(maxsize=None)
def mword_of(w: Window) -> tuple:
    """The descriptor word whose leading group element is w (the block
    decomposition, forgetting the level indices)."""
    return tuple((j, sign) for (_, j, sign) in normal_form(w))


@lru_cache(maxsize=None)
def _eta_inv(w: Window) -> tuple:
    return perm_inverse(eta(w))


class CBasis:
    """Expansion cache for descriptor-basis computations at a fixed strand
    count and parameter choice.

    All cached elements are immutable; build once, read forever.
    """

    def __init__(self, n: int, params: RingParams = SYMBOLIC):
        self.n = n
        self.params = params
        self._bk: dict[int, AlgebraElement] = {}
        self._tee: dict[tuple, AlgebraElement] = {}
        self._prefix: dict[tuple, AlgebraElement] = {(): unit(n)}
        self._expansion: dict[tuple, AlgebraElement] = {}

    def bk_elem(self, k: int) -> AlgebraElement:
        """B_k = T_{k-1}..T_1 B T_1^-1..T_{k-1}^-1 as an element."""
        cached = self._bk.get(k)
        if cached is None:
            gens = [("T", i) for i in range(k - 1, 0, -1)]
            gens.append(GEN_B)
            gens.extend(("T-", i) for i in range(1, k))
            cached = word_product(self.n, gens, self.params)
            self._bk[k] = cached
        return cached

    def tee_elem(self, k: int, code: MCode) -> AlgebraElement:
        """The level-k block element for a descriptor entry."""
        j, sign = code
        assert 1 <= j <= k
        key = (k, j, sign)
        cached = self._tee.get(key)
        if cached is None:
            gens = [("T", i) for i in range(k - 1, j - 1, -1)]
            cached = word_product(self.n, gens, self.params)
            if sign < 0:
                cached = mul(cached, self.bk_elem(j), self.params)
            self._tee[key] = cached
        return cached

    def prefix(self, ms: tuple) -> AlgebraElement:
        """The product m_1 ... m_len(ms) as an element."""
        cached = self._prefix.get(ms)
        if cached is None:
            cached = mul(
                self.prefix(ms[:-1]),
                self.tee_elem(len(ms), ms[-1]),
                self.params,
            )
            self._prefix[ms] = cached
        return cached

    def expansion(self, ms: tuple, I: SetPartition0) -> AlgebraElement:
        """m_1 ... m_n followed by the idempotents of I, in normal form.

        The leading term is the pair (image of I under the projected group
        element, that group element) with coefficient exactly one; everything
        else is strictly shorter.
        """
        key = (ms, I)
        cached = self._expansion.get(key)
        if cached is None:
            prefix = self.prefix(ms)
            out: dict[BasisPair, LaurentPoly] = {}
            for (K, w), c in prefix.terms.items():
                _acc(out, (join(K, apply_perm(eta(w), I)), w), c)
            cached = AlgebraElement._raw(self.n, out)
            self._expansion[key] = cached
        return cached

    def express(self, e: AlgebraElement) -> dict:
        """Coordinates of e in the descriptor basis, by leading-term peeling.

        Exact: subtracting coefficient * expansion removes the current
        leading pair and only introduces strictly shorter group parts, so the
        loop sweeps lengths downward and terminates.
        """
        if e.n != self.n:
            raise ValueError("element does not match this cache")
        work = dict(e.terms)
        out: dict[tuple, LaurentPoly] = {}
        if not work:
            return out
        top = max(length(w) for (_, w) in work)
        for level in range(top, -1, -1):
            keys = [key for key in work if length(key[1]) == level]
            for key in keys:
                c = work.pop(key)
                J, w = key
                ms = mword_of(w)
                I = apply_perm(_eta_inv(w), J)
                expn = self.expansion(ms, I)
                lead = expn.terms.get(key)
                assert lead == ONE, "descriptor expansion lost unitriangularity"
                out[(ms, I)] = c
                for other, q in expn.terms.items():
                    if other == key:
                        continue
                    _acc(work, other, -(c * q))
        assert not work
        return out


_CBASIS_CACHE: dict[tuple, CBasis] = {}


def get_cbasis(n: int, params: RingParams = SYMBOLIC) -> CBasis:
    key = (n, params.key)
    cached = _CBASIS_CACHE.get(key)
    if cached is None:
        cached = CBasis(n, params)
        _CBASIS_CACHE[key] = cached
    return cached


def descriptor_pairs(n: int) -> Iterator[tuple]:
    """All (m-word, partition) descriptors in deterministic order."""
    def words(k: int) -> Iterator[tuple]:
        if k == 0:
            yield ()
            return
        for head in words(k - 1):
            for code in m_codes(k):
                yield head + (code,)

    for ms in words(n):
        for I in enumerate_partitions(n):
            yield (ms, I)


def basis_C(n: int, params: RingParams = SYMBOLIC) -> list:
    """The descriptor basis, each paired with its normal-form expansion."""
    cb = get_cbasis(n, params)
    return [((ms, I), cb.expansion(ms, I)) for (ms, I) in descriptor_pairs(n)]


def express_in_C(e: AlgebraElement, params: RingParams = SYMBOLIC) -> dict:
    """Exact coordinates of an element in the descriptor basis."""
    return get_cbasis(e.n, params).express(e)


def descriptor_rank(n: int, params: RingParams, point) -> int:
    """Rank of the descriptor-expansion matrix at a rational point, by sparse
    row reduction over exact rationals.

    Rows are the expansions of all descriptors with coefficients evaluated at
    ``point``; full rank certifies the change of basis is invertible there.
    """
    pivots: dict[tuple, dict] = {}

    def col_key(pair: BasisPair):
        I, w = pair
        return (-length(w), I.parent, w)

    rank = 0
    cb = get_cbasis(n, params)
    for (ms, I) in descriptor_pairs(n):
        row = {
            pair: value
            for pair, c in cb.expansion(ms, I).terms.items()
            if (value := c.evaluate(point))
        }
        while row:
            lead = min(row, key=col_key)
            hit = pivots.get(lead)
            if hit is None:
                scale = row[lead]
                pivots[lead] = {pair: val / scale for pair, val in row.items()}
                rank += 1
                break
            factor = row[lead]
            for pair, val in hit.items():
                acc = row.get(pair, Fraction(0)) - factor * val
                if acc:
                    row[pair] = acc
                else:
                    row.pop(pair, None)
    return rank

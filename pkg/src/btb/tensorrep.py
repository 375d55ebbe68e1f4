"""The faithful tensor representation: the independent multiplication oracle.

The algebra on n strands acts (on the right) on V^{⊗n}, where V has basis
vectors indexed by pairs (i, r) with i in {-n,...,-1,1,...,n} and a rank
r in {0,...,d-1}; d = n + 1 throughout (smaller d is kept available only as a
negative control, where independence is expected to fail).

Local rules, acting on one or two tensor factors and extended linearly:

- F kills rank > 0 and fixes rank 0;        E kills unequal ranks, fixes equal;
- B negates the index, with the correction (v - v^-1) * (unchanged) added when
  the index was negative at rank 0;
- T swaps the two factors, scaled by u when the pairs are identical, and with
  the correction (u - u^-1) * (unchanged) added when the left index exceeds
  the right at equal ranks.

Vectors are sparse maps from multi-indices to coefficients; operators are
never materialized as matrices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .coeff import ONE, LaurentPoly
from .coxeter import R_LETTER, Window, reduced_word
from .partitions import SetPartition0, enumerate_partitions, refines
from .algebra import (
    AlgebraElement,
    RingParams,
    SYMBOLIC,
    _check_gen,
)

MultiIndex = tuple  # tuple of (i, r) pairs, one per tensor factor


class TensorVector:
    """A sparse vector of V^{⊗n}; no zero entries stored."""

    __slots__ = ("n", "d", "entries")

    def __init__(self, n: int, entries: dict | None = None, d: int | None = None):
        self.n = n
        self.d = n + 1 if d is None else d
        cleaned: dict[MultiIndex, LaurentPoly] = {}
        if entries:
            for idx, c in entries.items():
                idx = tuple(idx)
                if len(idx) != n:
                    raise ValueError("multi-index length does not match n")
                for i, r in idx:
                    if i == 0 or abs(i) > n or not (0 <= r < self.d):
                        raise ValueError(f"index component {(i, r)} out of range")
                if c:
                    cleaned[idx] = c
        self.entries = cleaned

    @classmethod
    def _raw(cls, n: int, entries: dict, d: int) -> "TensorVector":
        v = object.__new__(cls)
        v.n = n
        v.d = d
        v.entries = entries
        return v

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.n == other.n and self.d == other.d and self.entries == other.entries

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __add__(self, other: "TensorVector") -> "TensorVector":
        out = dict(self.entries)
        for idx, c in other.entries.items():
            _acc(out, idx, c)
        return TensorVector._raw(self.n, out, self.d)

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        out = dict(self.entries)
        for idx, c in other.entries.items():
            _acc(out, idx, -c)
        return TensorVector._raw(self.n, out, self.d)

    def scaled(self, c: LaurentPoly) -> "TensorVector":
        if not c:
            return TensorVector._raw(self.n, {}, self.d)
        return TensorVector._raw(
            self.n, {idx: q * c for idx, q in self.entries.items()}, self.d
        )

    def __repr__(self) -> str:
        return f"<TensorVector n={self.n} with {len(self.entries)} entries>"


def _acc(out: dict, idx: MultiIndex, c: LaurentPoly) -> None:
    acc = out.get(idx)
    if acc is None:
        if c:
            out[idx] = c
    else:
        acc = acc + c
        if acc:
            out[idx] = acc
        else:
            del out[idx]


def basis_vector(n: int, idx: Iterable, d: int | None = None) -> TensorVector:
    return TensorVector(n, {tuple(idx): ONE}, d=d)


def all_multi_indices(n: int, d: int | None = None) -> Iterator[MultiIndex]:
    """All standard basis multi-indices, deterministically ordered."""
    d = n + 1 if d is None else d
    indices = [i for i in range(-n, n + 1) if i]

    def rec(k: int) -> Iterator[tuple]:
        if k == 0:
            yield ()
            return
        for rest in rec(k - 1):
            for i in indices:
                for r in range(d):
                    yield rest + ((i, r),)

    return rec(n)


def random_multi_index(rng, n: int, d: int | None = None) -> MultiIndex:
    d = n + 1 if d is None else d
    out = []
    for _ in range(n):
        i = rng.randint(1, n) * (1 if rng.random() < 0.5 else -1)
        out.append((i, rng.randrange(d)))
    return tuple(out)


# -- generator actions ---------------------------------------------------------

def apply_gen(vec: TensorVector, g: tuple, params: RingParams = SYMBOLIC) -> TensorVector:
    _check_gen(g, vec.n)
    kind = g[0]
    if kind == "T-":
        return apply_gen(vec, ("T", g[1]), params) - apply_gen(vec, ("E", g[1]), params).scaled(params.qu)
    if kind == "B-":
        return apply_gen(vec, ("B",), params) - apply_gen(vec, ("F", 1), params).scaled(params.qv)

    out: dict[MultiIndex, LaurentPoly] = {}
    if kind == "E":
        i = g[1]
        for idx, c in vec.entries.items():
            if idx[i - 1][1] == idx[i][1]:
                out[idx] = c
    elif kind == "F":
        j = g[1]
        for idx, c in vec.entries.items():
            if idx[j - 1][1] == 0:
                out[idx] = c
    elif kind == "T":
        i = g[1]
        for idx, c in vec.entries.items():
            a, r = idx[i - 1]
            b, s = idx[i]
            swapped = idx[: i - 1] + (idx[i], idx[i - 1]) + idx[i + 1 :]
            if r != s:
                _acc(out, swapped, c)
            elif a == b:
                _acc(out, idx, c * params.tu)
            elif a < b:
                _acc(out, swapped, c)
            else:
                _acc(out, swapped, c)
                _acc(out, idx, c * params.qu)
    else:  # "B"
        for idx, c in vec.entries.items():
            a, r = idx[0]
            flipped = ((-a, r),) + idx[1:]
            if r == 0 and a < 0:
                _acc(out, flipped, c)
                _acc(out, idx, c * params.qv)
            else:
                _acc(out, flipped, c)
    return TensorVector._raw(vec.n, out, vec.d)


def apply_word(vec: TensorVector, w: Window, params: RingParams = SYMBOLIC) -> TensorVector:
    for letter in reduced_word(w):
        g = ("B",) if letter == R_LETTER else ("T", letter[1])
        vec = apply_gen(vec, g, params)
    return vec


def ef_filter(vec: TensorVector, I: SetPartition0) -> TensorVector:
    """Project onto the vectors the idempotents of I fix: ranks must agree
    inside every block of I, and vanish on the block through 0."""
    out: dict[MultiIndex, LaurentPoly] = {}
    for idx, c in vec.entries.items():
        seen: dict[int, int] = {}
        ok = True
        for t in range(1, vec.n + 1):
            root = I.parent[t]
            r = idx[t - 1][1]
            if root == 0:
                if r != 0:
                    ok = False
                    break
            else:
                prev = seen.setdefault(root, r)
                if prev != r:
                    ok = False
                    break
        if ok:
            out[idx] = c
    return TensorVector._raw(vec.n, out, vec.d)


def apply_elem(vec: TensorVector, e: AlgebraElement, params: RingParams = SYMBOLIC) -> TensorVector:
    """Right action of an algebra element: idempotent projection per term,
    then the letters of the group part, linearly extended."""
    if e.n != vec.n:
        raise ValueError("element and vector strand counts differ")
    total = TensorVector._raw(vec.n, {}, vec.d)
    for (I, w), c in e.terms.items():
        cur = apply_word(ef_filter(vec, I), w, params)
        total = total + cur.scaled(c)
    return total


# -- the pure-tensor images of group elements ------------------------------------

def block_ranks(I: SetPartition0, d: int | None = None) -> tuple:
    """The rank labelling attached to a partition: the block through 0 gets
    rank 0 and the remaining blocks are numbered from 1 in order of their
    minima.  Ranks are clamped to d-1 when a smaller d is forced (negative
    control only)."""
    d = I.n + 1 if d is None else d
    label: dict[int, int] = {0: 0}
    nxt = 1
    ranks = []
    for t in range(1, I.n + 1):
        root = I.parent[t]
        if root not in label:
            label[root] = nxt
            nxt += 1
        ranks.append(min(label[root], d - 1))
    return tuple(ranks)


def partition_vector(I: SetPartition0, d: int | None = None) -> TensorVector:
    """The pure tensor whose t-th factor is (t, rank of t's block)."""
    ranks = block_ranks(I, d)
    idx = tuple((t, ranks[t - 1]) for t in range(1, I.n + 1))
    return basis_vector(I.n, idx, d=d)


def predicted_word_image(I: SetPartition0, w: Window, d: int | None = None) -> MultiIndex:
    """Where the group part sends the partition vector: factor t carries the
    index w(t) and the rank of |w(t)|'s block."""
    ranks = block_ranks(I, d)
    return tuple((w[t - 1], ranks[abs(w[t - 1]) - 1]) for t in range(1, I.n + 1))


# -- relation checking -----------------------------------------------------------

def defining_relations(n: int, params: RingParams = SYMBOLIC) -> list:
    """The full defining-relation catalog at every legal index.

    Each entry is (name, sides) where every side is a list of
    (coefficient, generator word) pairs; all sides of one entry must agree.
    """
    rels: list[tuple[str, list]] = []

    def plain(name: str, *words) -> None:
        rels.append((name, [[(ONE, tuple(word))] for word in words]))

    one = ONE
    if n >= 1:
        rels.append(
            ("quad-B", [[(one, (("B",), ("B",)))], [(one, ()), (params.qv, (("F", 1), ("B",)))]])
        )
        for j in range(1, n + 1):
            plain(f"idem-F[{j}]", (("F", j), ("F", j)), (("F", j),))
            plain(f"comm-BF[{j}]", (("B",), ("F", j)), (("F", j), ("B",)))
    for i in range(1, n):
        rels.append(
            (
                f"quad-T[{i}]",
                [
                    [(one, (("T", i), ("T", i)))],
                    [(one, ()), (params.qu, (("E", i), ("T", i)))],
                ],
            )
        )
        plain(f"idem-E[{i}]", (("E", i), ("E", i)), (("E", i),))
        plain(f"comm-ET[{i}]", (("E", i), ("T", i)), (("T", i), ("E", i)))
        plain(f"comm-BE[{i}]", (("B",), ("E", i)), (("E", i), ("B",)))
        if i > 1:
            plain(f"comm-BT[{i}]", (("B",), ("T", i)), (("T", i), ("B",)))
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1:
                plain(f"comm-TT[{i},{j}]", (("T", i), ("T", j)), (("T", j), ("T", i)))
                plain(f"far-ET[{i},{j}]", (("E", i), ("T", j)), (("T", j), ("E", i)))
            if abs(i - j) == 1:
                plain(
                    f"mixed-EET[{i},{j}]",
                    (("E", i), ("E", j), ("T", i)),
                    (("T", i), ("E", i), ("E", j)),
                    (("E", j), ("T", i), ("E", j)),
                )
                plain(
                    f"mixed-ETT[{i},{j}]",
                    (("E", i), ("T", j), ("T", i)),
                    (("T", j), ("T", i), ("E", j)),
                )
            if i < j:
                plain(f"comm-EE[{i},{j}]", (("E", i), ("E", j)), (("E", j), ("E", i)))
    for i in range(1, n - 1):
        plain(
            f"braid-TTT[{i}]",
            (("T", i), ("T", i + 1), ("T", i)),
            (("T", i + 1), ("T", i), ("T", i + 1)),
        )
    if n >= 2:
        plain(
            "braid-BTBT",
            (("B",), ("T", 1), ("B",), ("T", 1)),
            (("T", 1), ("B",), ("T", 1), ("B",)),
        )
    for i in range(1, n):
        for j in range(1, n + 1):
            plain(f"comm-FE[{j},{i}]", (("F", j), ("E", i)), (("E", i), ("F", j)))
            sj = j
            if j == i:
                sj = i + 1
            elif j == i + 1:
                sj = i
            plain(f"perm-FT[{j},{i}]", (("F", j), ("T", i)), (("T", i), ("F", sj)))
        plain(
            f"tie-EF[{i}]",
            (("E", i), ("F", i)),
            (("F", i), ("F", i + 1)),
            (("E", i), ("F", i + 1)),
        )
    return rels


def apply_side(vec: TensorVector, side: list, params: RingParams) -> TensorVector:
    total = TensorVector._raw(vec.n, {}, vec.d)
    for coeff, word in side:
        cur = vec
        for g in word:
            cur = apply_gen(cur, g, params)
        total = total + cur.scaled(coeff)
    return total


def check_relations(
    n: int,
    params: RingParams = SYMBOLIC,
    vectors: Sequence[TensorVector] | None = None,
    sample: int = 500,
    seed: int = 0,
) -> list[dict]:
    """Verify every defining relation on basis vectors of V^{⊗n}.

    Uses all standard basis vectors when the space is small, otherwise a
    seeded random sample of at least ``sample`` of them.  Returns one record
    per relation: {"relation", "index", "status"}.
    """
    if vectors is None:
        total = (2 * n * (n + 1)) ** n
        if total <= sample:
            vectors = [basis_vector(n, idx) for idx in all_multi_indices(n)]
        else:
            import random

            rng = random.Random(seed)
            vectors = [
                basis_vector(n, random_multi_index(rng, n)) for _ in range(sample)
            ]
    report = []
    for name, sides in defining_relations(n, params):
        status = "ok"
        for vec in vectors:
            images = [apply_side(vec, side, params) for side in sides]
            if any(img != images[0] for img in images[1:]):
                status = "fail"
                break
        base, _, idx = name.partition("[")
        report.append(
            {"relation": base, "index": "[" + idx if idx else "", "status": status}
        )
    return report


# -- linear-independence certificate ----------------------------------------------

def independence_certificate(
    n: int,
    points: Sequence,
    d: int | None = None,
    check_purity: bool = True,
) -> dict:
    """Certify that the images of all basis pairs are linearly independent.

    For every partition I the pure tensor attached to I is hit with the image
    of every basis pair (J, w); the coordinate rows (one block of columns per
    evaluation partition) are stacked and row-reduced exactly at each given
    rational (u, v) point.  Full row rank at a point certifies generic
    independence; deficiency at every point is a hard failure.

    With the genuine rank dimension d = n + 1, each surviving evaluation is a
    single pure tensor with unit coefficient, which is asserted (it is also
    why the reduction stays fast).
    """
    d_eff = n + 1 if d is None else d
    parts = sorted(
        enumerate_partitions(n),
        key=lambda I: (-len(set(I.parent)), I.parent),
    )
    part_index = {I: t for t, I in enumerate(parts)}
    group = list(_group_elements(n))

    # image of the group part on each partition vector, once
    images: dict[tuple, TensorVector] = {}
    for I in parts:
        vec = partition_vector(I, d=d_eff)
        for w in group:
            img = apply_word(vec, w)
            if check_purity and d_eff == n + 1:
                assert list(img.entries.values()) == [ONE], "group image is not pure"
                assert next(iter(img.entries)) == predicted_word_image(I, w, d_eff)
            images[(part_index[I], w)] = img

    # whether the idempotents of J fix the pure tensor attached to I; with the
    # genuine d this is exactly "J refines I", smaller d keeps more pairs alive
    def fixes(J: SetPartition0, I: SetPartition0) -> bool:
        ranks = block_ranks(I, d_eff)
        seen: dict[int, int] = {}
        for t in range(1, n + 1):
            root = J.parent[t]
            r = ranks[t - 1]
            if root == 0:
                if r != 0:
                    return False
            elif seen.setdefault(root, r) != r:
                return False
        return True

    expected = len(parts) * len(group)
    ranks = []
    for point in points:
        point6 = (Fraction(point[0]), Fraction(point[1]), 1, 1, 1, 1)
        pivots: dict[tuple, dict] = {}
        rank = 0
        for J in parts:
            touched = [I for I in parts if fixes(J, I)]
            if d_eff == n + 1:
                assert all(refines(J, I) for I in touched)
            for w in group:
                row: dict[tuple, Fraction] = {}
                for I in touched:
                    t = part_index[I]
                    for idx, c in images[(t, w)].entries.items():
                        val = c.evaluate(point6)
                        if val:
                            row[(t, idx)] = row.get((t, idx), Fraction(0)) + val
                rank += _reduce_row(row, pivots)
        ranks.append(rank)

    return {
        "n": n,
        "d": d_eff,
        "expected": expected,
        "points": [[str(Fraction(p[0])), str(Fraction(p[1]))] for p in points],
        "ranks": ranks,
        "full_rank": all(r == expected for r in ranks),
    }


def _group_elements(n: int):
    from .coxeter import enumerate_group

    return enumerate_group(n)


def _reduce_row(row: dict, pivots: dict) -> int:
    """Gaussian step: reduce ``row`` against ``pivots``; register and report 1
    if something nonzero remains."""
    while row:
        lead = min(row)
        hit = pivots.get(lead)
        if hit is None:
            scale = row[lead]
            pivots[lead] = {col: val / scale for col, val in row.items()}
            return 1
        factor = row[lead]
        for col, val in hit.items():
            acc = row.get(col, Fraction(0)) - factor * val
            if acc:
                row[col] = acc
            else:
                row.pop(col, None)
    return 0

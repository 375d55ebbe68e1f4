"""Set partitions: join lattice, contraction, the idempotent-pair bijection."""

import itertools
import random

import pytest

from btb import coxeter as cox
from btb import partitions as P


def brute_join(I, J):
    """Independent oracle: transitive closure over the union of block graphs."""
    n = I.n
    adj = {i: set() for i in range(n + 1)}
    for part in (I, J):
        for block in part.blocks():
            for a, b in zip(block, block[1:]):
                adj[a].add(b)
                adj[b].add(a)
    blocks = []
    seen = set()
    for start in range(n + 1):
        if start in seen:
            continue
        comp = []
        stack = [start]
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            comp.append(node)
            stack.extend(adj[node])
        blocks.append(comp)
    return P.from_blocks(n, blocks)


def brute_remove_top(I):
    """Independent oracle: rebuild from blocks with the top element deleted."""
    blocks = [[i for i in block if i != I.n] for block in I.blocks()]
    return P.from_blocks(I.n - 1, [b for b in blocks if b])


def test_join_set_worked_examples():
    I = P.from_blocks(8, [[1, 4], [2, 5], [3, 6, 7]])
    assert str(P.join_set(I, {4, 5, 8})) == "({1,2,4,5,8},{3,6,7})"
    assert str(P.join_set(I, {2, 3})) == "({1,4},{2,3,5,6,7})"
    assert P.join_set(I, {6, 7}) == I


def test_join_set_range_check():
    I = P.singletons(3)
    with pytest.raises(ValueError):
        P.join_set(I, {1, 7})


def test_join_basics():
    I = P.from_blocks(3, [[1, 2]])
    assert P.join(I, I) == I
    assert P.join(I, P.singletons(3)) == I
    got = P.join(P.from_blocks(3, [[1, 2]]), P.from_blocks(3, [[2, 3]]))
    assert got == P.from_blocks(3, [[1, 2, 3]])


def test_join_matches_closure_oracle():
    rng = random.Random(10)
    for _ in range(150):
        n = rng.randint(1, 6)
        I, J = P.random_partition(rng, n), P.random_partition(rng, n)
        assert P.join(I, J) == brute_join(I, J)


def test_join_size_mismatch():
    with pytest.raises(ValueError):
        P.join(P.singletons(2), P.singletons(3))


def test_remove_examples():
    assert str(P.remove(P.from_blocks(6, [[1, 2, 3], [4, 6]]), 6)) == "({1,2,3})"
    n = 4
    assert P.remove(P.singletons(n), n) == P.singletons(n - 1)
    assert P.remove(P.from_blocks(3, [[0, 3]]), 3) == P.singletons(2)


def test_remove_never_touches_zero():
    with pytest.raises(ValueError):
        P.remove(P.singletons(2), 0)


def test_remove_top_matches_oracle():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(1, 6)
        I = P.random_partition(rng, n)
        assert P.remove(I, n) == brute_remove_top(I)


def test_remove_below_top_parks_singleton():
    I = P.from_blocks(4, [[1, 2, 4]])
    got = P.remove(I, 2)
    assert got.n == 4
    assert got == P.from_blocks(4, [[1, 4]])


def test_apply_perm_examples():
    I = P.from_blocks(3, [[1, 2]])
    ident = (1, 2, 3)
    assert P.apply_perm(ident, I) == I
    s1 = (2, 1, 3)
    assert P.apply_perm(s1, I) == I
    s2 = (1, 3, 2)
    assert P.apply_perm(s2, I) == P.from_blocks(3, [[1, 3]])


def test_tau_examples():
    assert P.tau(P.singletons(2), 2, 1) == P.singletons(1)
    assert P.tau(P.from_blocks(3, [[1, 3]]), 3, 1) == P.singletons(2)
    assert P.tau(P.from_blocks(3, [[0, 3]]), 3, 2) == P.from_blocks(2, [[0, 2]])


def test_tau_argument_validation():
    with pytest.raises(ValueError):
        P.tau(P.singletons(3), 2, 1)  # larger index must be the top strand
    with pytest.raises(ValueError):
        P.tau(P.singletons(3), 3, 3)


def test_psi_examples():
    n = 6
    I = P.from_blocks(n, [[0, 2, 3, 5], [4, 6]])
    e_part, a_set = P.psi(I)
    assert a_set == frozenset({2, 3, 5})
    assert e_part == P.from_blocks(n, [[4, 6]])

    assert P.psi(P.singletons(4)) == (P.singletons(4), frozenset())
    e_part, a_set = P.psi(P.from_blocks(1, [[0, 1]]))
    assert e_part == P.singletons(1) and a_set == frozenset({1})


def test_phi_examples():
    n = 6
    J = P.from_blocks(n, [[2, 3, 5], [4, 6]])
    assert P.phi(J, {3}) == P.from_blocks(n, [[0, 2, 3, 5], [4, 6]])
    assert P.phi(P.singletons(3), set()) == P.singletons(3)


@pytest.mark.parametrize("n", range(0, 6))
def test_psi_phi_roundtrip(n):
    for I in P.enumerate_partitions(n):
        e_part, a_set = P.psi(I)
        assert P.phi(e_part, a_set) == I


def test_enumeration_census():
    # independent count: restricted growth strings generated naively
    def rgs_count(size):
        def grow(prefix, mx):
            if len(prefix) == size:
                return 1
            return sum(grow(prefix + [v], max(mx, v)) for v in range(mx + 2))
        return grow([0], 0)

    for n in range(0, 5):
        got = list(P.enumerate_partitions(n))
        assert len(got) == len(set(got)) == rgs_count(n + 1) == P.bell_number(n + 1)


def _all_perms(n):
    for tup in itertools.permutations(range(1, n + 1)):
        yield tup


@pytest.mark.parametrize("n", [2, 3, 4])
def test_perm_compatibilities_exhaustive(n):
    partitions = list(P.enumerate_partitions(n))
    for I in partitions:
        for sigma in _all_perms(n):
            for k in range(1, n + 1):
                assert P.apply_perm(sigma, P.isolate(I, k)) == \
                    P.isolate(P.apply_perm(sigma, I), sigma[k - 1])
            for jj in range(1, n + 1):
                for kk in range(1, n + 1):
                    assert P.apply_perm(sigma, P.join_set(I, (jj, kk))) == \
                        P.join_set(P.apply_perm(sigma, I), (sigma[jj - 1], sigma[kk - 1]))
            for kk in range(1, n):
                if sigma[kk - 1] < sigma[n - 1]:
                    assert P.apply_perm(sigma, P.tau_keep(I, n, kk)) == \
                        P.tau_keep(P.apply_perm(sigma, I), sigma[n - 1], sigma[kk - 1])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_contraction_exchange_exhaustive(n):
    """Sliding a lower-strand partition through the contraction commutes."""
    for J in P.enumerate_partitions(n - 1):
        Jn = P.embed(J, n)
        for I in P.enumerate_partitions(n):
            for k in range(1, n):
                sig_n = cox.eta(cox.sigma_shift_inv(n, n, k))
                lhs = P.tau(P.join(P.apply_perm(sig_n, Jn), I), n, k)
                if n - 1 > k:
                    sig_prev = cox.eta(cox.sigma_shift_inv(n - 1, n - 1, k))
                else:
                    sig_prev = tuple(range(1, n))
                rhs = P.join(P.apply_perm(sig_prev, J), P.tau(I, n, k))
                assert lhs == rhs


def test_join_semilattice_randomized():
    rng = random.Random(12)
    for _ in range(120):
        n = rng.randint(1, 5)
        a, b, c = (P.random_partition(rng, n) for _ in range(3))
        assert P.join(a, b) == P.join(b, a)
        assert P.join(P.join(a, b), c) == P.join(a, P.join(b, c))
        assert P.join(a, a) == a


def test_refines():
    fine = P.from_blocks(3, [[1, 2]])
    coarse = P.from_blocks(3, [[1, 2, 3]])
    assert P.refines(fine, coarse)
    assert not P.refines(coarse, fine)
    assert P.refines(P.singletons(3), coarse)


def test_text_and_json_forms():
    I = P.from_blocks(3, [[0, 2], [1, 3]])
    assert str(I) == "({0,2},{1,3})"
    assert P.SetPartition0.from_obj(3, I.to_obj()) == I
    assert str(P.singletons(2)) == "()"

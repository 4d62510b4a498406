"""Brute-force search oracles for covering and packing claims.

Everything here is independent of the closed-form machinery on purpose:
searches run over integer-encoded vectors with bitmask set arithmetic and
certify their own output, so they can cross-check the bound and geometry
modules at desk scales.  Budgets keep every search sound — an answer, when
returned, is exact; a search that would blow its budget raises
InconclusiveSearch instead of guessing.

Vectors in GF(q^m)^n are encoded as integers sum_i c_i * (q^m)^i, the same
odometer convention the code enumerators use; for q = 2 the encoding of a
difference is just the xor of encodings.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _batch
from .codes import make_code, make_codebook, make_zero_code
from .ffield import make_field
from .rankgeom import rank


class InconclusiveSearch(RuntimeError):
    """A search hit its budget before the answer was settled."""


@dataclass(frozen=True)
class SearchBudget:
    """Caps that keep searches sound rather than wrong.

    max_space caps the ambient size q^{mn} for covering scans, max_nodes
    caps branch-and-bound expansions (the practical stand-in for a
    binomial(q^{mn}, K) subset count), and clique_space caps the ambient
    size for maximum-clique packing searches.
    """
    max_space: int = 1 << 20
    max_nodes: int = 1 << 22
    clique_space: int = 1 << 8


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class CoveringDecision:
    """Outcome of a fixed-size covering search; witness is a sorted tuple
    of codewords when one exists."""
    exists: bool
    witness: Optional[tuple] = None


def _decode(order, n, v):
    return tuple((v // order ** i) % order for i in range(n))


def _vec_add(field, n, v, o):
    """Encoding of the coordinatewise sum of two encoded vectors."""
    if field.q == 2:
        return v ^ o
    B, out, scale = field.order, 0, 1
    for _ in range(n):
        out += field.add(v % B, o % B) * scale
        v, o, scale = v // B, o // B, scale * B
    return out


def _ball_offsets(field, n, rho):
    """Encodings of every vector of rank at most rho (a ball around 0)."""
    if field.q == 2:
        tab = _batch.rank_table_gf2(field, n)
        return [int(v) for v in (tab <= rho).nonzero()[0]]
    return [v for v in range(field.order ** n)
            if rank(field, _decode(field.order, n, v)) <= rho]


def _check_params(q, m, n, rho):
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    if rho < 0:
        raise ValueError("negative radius")


def is_covering(q, m, n, centers, rho):
    """Independent verification scan: every vector of GF(q^m)^n lies within
    rank distance rho of some center.  Deliberately avoids the bitmask
    machinery the searches use."""
    _check_params(q, m, n, rho)
    F = make_field(q, m)
    centers = [tuple(int(x) for x in c) for c in centers]
    for v in range(F.order ** n):
        w = _decode(F.order, n, v)
        if all(rank(F, tuple(F.sub(a, b) for a, b in zip(w, c))) > rho
               for c in centers):
            return False
    return True


def exhaustive_min_covering(q, m, n, rho, K, budget=DEFAULT_BUDGET):
    """Decide whether K balls of rank-radius rho can cover GF(q^m)^n.

    Exact branch-and-bound set cover: covering is translation invariant, so
    the zero vector is fixed as a center, and the search branches on the
    centers able to cover the first uncovered vector.  Monotone in K; the
    minimum covering size is settled by scanning K upward from a lower
    bound.  Raises InconclusiveSearch when the node budget runs out.
    """
    _check_params(q, m, n, rho)
    F = make_field(q, m)
    Q = F.order ** n
    if Q > budget.max_space:
        raise InconclusiveSearch(f"ambient size {Q} exceeds budget")
    if K < 1:
        return CoveringDecision(False)

    offsets = _ball_offsets(F, n, rho)
    V = len(offsets)
    full = (1 << Q) - 1
    masks = {}

    def ball(c):
        if c not in masks:
            acc = 0
            for o in offsets:
                acc |= 1 << _vec_add(F, n, c, o)
            masks[c] = acc
        return masks[c]

    nodes = 0
    chosen = [0]

    def extend(covered, depth):
        nonlocal nodes
        nodes += 1
        if nodes > budget.max_nodes:
            raise InconclusiveSearch(f"node budget {budget.max_nodes} hit")
        if covered == full:
            return True
        if depth == K:
            return False
        remaining = Q - covered.bit_count()
        if (K - depth) * V < remaining:
            return False
        u = (~covered & full).bit_length() - 1  # an uncovered vector
        cands = sorted({_vec_add(F, n, u, o) for o in offsets},
                       key=lambda c: (-(ball(c) & ~covered).bit_count(), c))
        for c in cands:
            chosen.append(c)
            if extend(covered | ball(c), depth + 1):
                return True
            chosen.pop()
        return False

    if extend(ball(0), 1):
        words = sorted(_decode(F.order, n, c) for c in chosen)
        return CoveringDecision(True, tuple(words))
    return CoveringDecision(False)


def greedy_covering(q, m, n, rho, budget=DEFAULT_BUDGET):
    """Covering code built by the greedy heuristic (largest new coverage,
    ties to the smallest vector encoding).  The result is a verified
    covering, hence a certified upper bound witness for K_R."""
    _check_params(q, m, n, rho)
    F = make_field(q, m)
    Q = F.order ** n
    if Q > budget.max_space:
        raise InconclusiveSearch(f"ambient size {Q} exceeds budget")

    offsets = _ball_offsets(F, n, rho)
    centers = []
    if F.q == 2:
        unc = np.ones(Q, dtype=bool)
        idx = np.arange(Q)
        while unc.any():
            gains = np.zeros(Q, dtype=np.int64)
            for o in offsets:
                gains += unc[idx ^ o]
            c = int(gains.argmax())  # argmax takes the first, smallest index
            centers.append(c)
            unc[[c ^ o for o in offsets]] = False
    else:
        covered, fullmask = 0, (1 << Q) - 1
        ball_cache = {}

        def ball(c):
            if c not in ball_cache:
                acc = 0
                for o in offsets:
                    acc |= 1 << _vec_add(F, n, c, o)
                ball_cache[c] = acc
            return ball_cache[c]

        while covered != fullmask:
            best_c, best_gain = None, -1
            for c in range(Q):
                gain = (ball(c) & ~covered).bit_count()
                if gain > best_gain:
                    best_c, best_gain = c, gain
            centers.append(best_c)
            covered |= ball(best_c)

    words = [_decode(F.order, n, c) for c in centers]
    if not is_covering(q, m, n, words, rho):
        raise AssertionError("greedy produced a non-covering; bug")
    return make_codebook(F, words)


def max_code_search(q, m, n, d, budget=DEFAULT_BUDGET):
    """Exact maximum cardinality of a code in GF(q^m)^n with minimum rank
    distance >= d, by maximum clique over the rank-distance graph.

    Translation invariance pins the zero vector into the code, so the
    clique search runs over the vectors of rank weight >= d with edges at
    pairwise distance >= d (Bron-Kerbosch with pivoting).
    """
    _check_params(q, m, n, 0)
    if d < 1:
        raise ValueError("distance must be positive")
    F = make_field(q, m)
    Q = F.order ** n
    if Q > budget.clique_space:
        raise InconclusiveSearch(f"ambient size {Q} exceeds clique budget")

    if F.q == 2:
        tab = _batch.rank_table_gf2(F, n)
        wt = lambda v: int(tab[v])
        dist = lambda u, v: int(tab[u ^ v])
    else:
        table = [rank(F, _decode(F.order, n, v)) for v in range(Q)]
        wt = lambda v: table[v]

        def dist(u, v):
            a = _decode(F.order, n, u)
            b = _decode(F.order, n, v)
            return rank(F, tuple(F.sub(x, y) for x, y in zip(a, b)))

    verts = [v for v in range(1, Q) if wt(v) >= d]
    adj = []
    for i, u in enumerate(verts):
        mask = 0
        for j, v in enumerate(verts):
            if i != j and dist(u, v) >= d:
                mask |= 1 << j
        adj.append(mask)

    best = 0
    nodes = 0

    def bk(size, P, X):
        nonlocal best, nodes
        nodes += 1
        if nodes > budget.max_nodes:
            raise InconclusiveSearch(f"node budget {budget.max_nodes} hit")
        if P == 0 and X == 0:
            best = max(best, size)
            return
        if size + P.bit_count() <= best:
            return
        # pivot on the candidate dominating the most of P
        pivot = max(((P & adj[i]).bit_count(), i) for i in _bits(P | X))[1]
        for i in _bits(P & ~adj[pivot]):
            bit = 1 << i
            bk(size + 1, P & adj[i], X & adj[i])
            P &= ~bit
            X |= bit

    bk(0, (1 << len(verts)) - 1 if verts else 0, 0)
    return best + 1  # the pinned zero vector


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def random_linear_code(q, m, n, k, seed=0):
    """Uniformly random (n, k) linear code over GF(q^m): rejection-sample
    k x n generator matrices until the rows are independent.  Deterministic
    per seed."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    F = make_field(q, m)
    if k == 0:
        return make_zero_code(F, n)
    rng = random.Random(seed)
    while True:
        G = [[rng.randrange(F.order) for _ in range(n)] for _ in range(k)]
        try:
            return make_code(F, G)
        except ValueError:
            continue

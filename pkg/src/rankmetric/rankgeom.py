"""Rank-metric geometry of GF(q^m)^n.

The rank weight of a vector over GF(q^m) is the GF(q)-rank of its m x n
coordinate expansion; the rank distance is the rank of the difference.  This
module provides the weight/distance themselves, the subspace combinatorics
used everywhere else (Gaussian binomials, the alpha/beta product kernels, and
sphere/ball volumes), elementary linear subspaces (ELS: subspaces admitting a
basis of vectors with all coordinates in the base field -- the rank-metric
analog of coordinate supports), and exact ball-intersection volumes (closed
forms where proved, brute force otherwise).
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass

import mpmath

from . import _linalg
from .ffield import make_field

BRUTE_GUARD = 1 << 24  # default cap on enumerated ambient size


class NoClosedFormError(ValueError):
    """Raised when no proved closed form covers the requested configuration."""


# ---------------------------------------------------------------------------
# combinatorial kernels
# ---------------------------------------------------------------------------

@functools.cache
def gaussian(n, k, q):
    """Gaussian binomial [n k]_q: number of k-dim subspaces of GF(q)^n.

    Returns 0 for k < 0 or k > n.  Exact integer arithmetic (every partial
    product below is itself a Gaussian binomial, hence an integer).
    """
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(k):
        out = out * (q ** (n - i) - 1) // (q ** (i + 1) - 1)
    return out


@functools.cache
def alpha(m, u, q):
    """alpha(m,u) = prod_{i<u} (q^m - q^i): u-tuples of independent vectors in GF(q)^m."""
    out = 1
    for i in range(u):
        out *= q ** m - q ** i
    return out


@functools.cache
def beta(m, u, q):
    """beta(m,u) = prod_{i<u} [m-i 1]_q; zero when u > m."""
    out = 1
    for i in range(u):
        out *= gaussian(m - i, 1, q)
    return out


def sigma(i):
    """sigma_i = i(i-1)/2, the q-exponent weight of i."""
    return i * (i - 1) // 2


@functools.cache
def _sigma_q_mp(q):
    """sigma(q) = (1/ln q) * sum_{k>=1} 1/(k(q^k-1)) as an mpmath value.

    The series is cut when the term drops below 10^-30; the tail is dominated
    by a geometric series with ratio 1/q <= 1/2, so the truncation error is
    below the last term, far inside the 1e-12 documented accuracy.
    """
    with mpmath.workdps(50):
        s = mpmath.mpf(0)
        k = 1
        while True:
            term = mpmath.mpf(1) / (k * (mpmath.mpf(q) ** k - 1))
            s += term
            if term < mpmath.mpf(10) ** -30:
                break
            k += 1
        return s / mpmath.log(q)


def sigma_q(q):
    """sigma(q), a decreasing function of q with sigma(2) ~ 1.7923; always < 2."""
    return float(_sigma_q_mp(q))


def tau_q(q):
    """tau(q) = log_q(q^2 / (q^2 - 1))."""
    return math.log(q * q / (q * q - 1), q)


def sphere_count(q, m, n, u):
    """N_u(q^m, n) = [n u]_q * alpha(m, u): vectors of rank exactly u."""
    return gaussian(n, u, q) * alpha(m, u, q)


def ball_counts(q, m, n, r):
    """(N_r, V_r): vectors at rank exactly r / at most r in GF(q^m)^n."""
    if not 0 <= r <= min(m, n):
        raise ValueError(f"radius {r} outside [0, min(m,n)={min(m, n)}]")
    nr = sphere_count(q, m, n, r)
    vr = sum(sphere_count(q, m, n, u) for u in range(r + 1))
    return nr, vr


def ball_volume_bounds(q, m, n, r):
    """(lower, upper) with q^{r(m+n-r)} <= V_r < q^{r(m+n-r)+sigma(q)}.

    The lower bound is an exact integer; the upper is an mpmath real (floats
    would overflow at the exponents reachable by the asymptotic checks).
    """
    if not 0 <= r <= min(m, n):
        raise ValueError(f"radius {r} outside [0, min(m,n)={min(m, n)}]")
    e = r * (m + n - r)
    with mpmath.workdps(40):
        upper = mpmath.power(q, e + _sigma_q_mp(q))
    return q ** e, upper


# ---------------------------------------------------------------------------
# rank weight and distance
# ---------------------------------------------------------------------------

def rank(field, vec):
    """Rank weight: GF(q)-rank of the m x n expansion of vec."""
    vec = tuple(int(x) for x in vec)  # tolerate numpy integers
    return _linalg.rank_mod_q(list(field.expand(vec)), field.q)


def rank_distance(field, u, v):
    return rank(field, tuple(field.sub(a, b) for a, b in zip(u, v)))


# ---------------------------------------------------------------------------
# elementary linear subspaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Els:
    """An elementary linear subspace of GF(q^m)^n in canonical form.

    The defining data is a reduced-row-echelon basis over GF(q)^n.  The same
    basis describes "the" ELS for every extension degree m (the subspace is
    the GF(q^m)-span of the rows), so m is not stored; methods that need the
    ambient field take it as an argument.
    """

    q: int
    n: int
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    def _pivots(self):
        return [next(j for j, x in enumerate(row) if x) for row in self.basis]

    def contains(self, field, vec):
        """Membership of a GF(q^m)^n vector: every expansion row of vec must
        lie in the GF(q)-row space of the basis."""
        if field.q != self.q:
            raise ValueError("field/ELS base mismatch")
        pivots = self._pivots()
        return all(
            _linalg.in_rowspace_mod_q(list(self.basis), pivots, row, self.q)
            for row in field.expand(vec)
        )

    def contains_els(self, other):
        if (self.q, self.n) != (other.q, other.n):
            raise ValueError("ambient mismatch")
        pivots = self._pivots()
        return all(
            _linalg.in_rowspace_mod_q(list(self.basis), pivots, row, self.q)
            for row in other.basis
        )

    def elements(self, field):
        """All q^{m * dim} vectors: GF(q^m)-combinations of the basis rows."""
        if field.q != self.q:
            raise ValueError("field/ELS base mismatch")
        for coeffs in itertools.product(field.elements(), repeat=self.dim):
            vec = [0] * self.n
            for c, row in zip(coeffs, self.basis):
                if c:
                    for j, b in enumerate(row):
                        if b:
                            vec[j] = field.add(vec[j], field.mul(c, b))
            yield tuple(vec)

    def __repr__(self):
        return f"Els(q={self.q}, n={self.n}, dim={self.dim}, basis={self.basis})"


def make_els(q, n, rows):
    """Canonical ELS spanned by the given GF(q)^n rows (row-reduced, deduped)."""
    if rows:
        rref, _ = _linalg.rref_mod_q([list(r) for r in rows], q)
    else:
        rref = []
    return Els(q, n, tuple(tuple(r) for r in rref))


def _subspaces(q, n, v):
    """All v-dim subspaces of GF(q)^n as RREF bases (tuples of rows)."""
    for pivots in itertools.combinations(range(n), v):
        free = [
            (i, c)
            for i in range(v)
            for c in range(pivots[i] + 1, n)
            if c not in pivots
        ]
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(v)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, c), val in zip(free, values):
                rows[i][c] = val
            yield tuple(tuple(r) for r in rows)


def enumerate_els(q, m, n, v):
    """All ELS's of dimension v in GF(q^m)^n (they biject with v-dim
    subspaces of GF(q)^n, so there are [n v]_q of them, independent of m)."""
    if not 0 <= v <= n:
        raise ValueError(f"dimension {v} outside [0, {n}]")
    return [Els(q, n, rows) for rows in _subspaces(q, n, v)]


def support_els(field, vec):
    """The unique ELS of dimension rank(vec) containing vec: the GF(q)-row
    space of the expansion, lifted back to GF(q^m)^n."""
    rref, _ = _linalg.rref_mod_q([list(r) for r in field.expand(vec)], field.q)
    return Els(field.q, len(vec), tuple(tuple(r) for r in rref))


def complements(els_a, els_v):
    """All ELS's B with A (+) B = V, for A inside V; there are q^{a(v-a)}."""
    if not els_v.contains_els(els_a):
        raise ValueError("A is not contained in V")
    a, v, n, q = els_a.dim, els_v.dim, els_v.n, els_v.q
    if a == 0:
        return [els_v]
    out = []
    rows_a = [list(r) for r in els_a.basis]
    for sub in _subspaces(q, v, v - a):
        # lift the internal subspace through V's basis
        rows_b = [
            [sum(c * rv for c, rv in zip(coeffs, col)) % q
             for col in zip(*els_v.basis)]
            for coeffs in sub
        ]
        if _linalg.rank_mod_q(rows_a + rows_b, q) == v:
            out.append(make_els(q, n, rows_b))
    return out


def project(field, u, els_a, els_b):
    """Decompose u = u_A + u_B along the direct sum A (+) B.

    The combined elementary bases stay independent over GF(q^m), so the
    coefficients are found by solving one linear system over the extension
    field.  Raises if A and B intersect nontrivially or u lies outside A+B.
    """
    rows = [list(r) for r in els_a.basis] + [list(r) for r in els_b.basis]
    if _linalg.rank_mod_q(rows, field.q) < len(rows):
        raise ValueError("A and B intersect nontrivially")
    coeffs = _linalg.solve_field(field, rows, list(u))
    if coeffs is None:
        raise ValueError("u does not lie in A + B")
    a = els_a.dim

    def combine(cs, basis):
        vec = [0] * len(u)
        for c, row in zip(cs, basis):
            if c:
                for j, b in enumerate(row):
                    if b:
                        vec[j] = field.add(vec[j], field.mul(c, b))
        return tuple(vec)

    return combine(coeffs[:a], els_a.basis), combine(coeffs[a:], els_b.basis)


# ---------------------------------------------------------------------------
# ball intersections
# ---------------------------------------------------------------------------

def intersection_volume_closed(q, m, n, r1, r2, dist):
    """|B_r1(c1) ∩ B_r2(c2)| for centers at rank distance dist -- the volume
    depends on the centers only through dist.

    Proved closed forms (anything else raises NoClosedFormError):

    - touching balls, dist == r1 + r2:  q^(r1*r2) * [dist r1]
    - a unit ball at the far rim, r2 == 1 and dist == r1 (or symmetrically):
      1 + (q^m - q^r1)*[r1 1] + (q^r1 - 1)*[n 1]
    """
    for a, b in ((r1, r2), (r2, r1)):
        if not 0 <= a <= min(m, n):
            raise ValueError("radius out of range")
    if not 0 <= dist <= min(m, n):
        raise ValueError("distance out of range")
    if dist == r1 + r2:
        return q ** (r1 * r2) * gaussian(dist, r1, q)
    for a, b in ((r1, r2), (r2, r1)):
        if b == 1 and dist == a:
            return 1 + (q ** m - q ** a) * gaussian(a, 1, q) \
                     + (q ** a - 1) * gaussian(n, 1, q)
    raise NoClosedFormError(
        f"no closed form for radii ({r1},{r2}) at distance {dist}")


def enumerate_vectors(field, n, budget=BRUTE_GUARD):
    total = field.order ** n
    if total > budget:
        raise ValueError(f"ambient size {total} exceeds guard {budget}")
    return itertools.product(field.elements(), repeat=n)


def intersection_vectors(field, balls, budget=BRUTE_GUARD):
    """All vectors within the given (center, radius) constraints, by full
    enumeration.  `balls` is a sequence of (center, radius) pairs."""
    balls = list(balls)
    if not balls:
        raise ValueError("need at least one ball")
    n = len(balls[0][0])
    out = []
    for x in enumerate_vectors(field, n, budget):
        if all(rank_distance(field, x, c) <= r for c, r in balls):
            out.append(x)
    return out


def intersection_volume_brute(field, balls, budget=BRUTE_GUARD):
    """Exact |∩ B_r_i(c_i)| by enumeration; accepts any number of balls."""
    return len(intersection_vectors(field, balls, budget))


def canonical_rank_vector(field, n, e):
    """(1, g, g^2, ..., g^{e-1}, 0, ..., 0) with g the polynomial generator:
    the canonical vector of rank e (its expansion is an identity block)."""
    if not 0 <= e <= min(field.m, n):
        raise ValueError(f"rank {e} outside [0, min(m,n)]")
    return field.polynomial_basis()[:e] + (0,) * (n - e)


def intersection_volume_at_distance(field, n, r1, r2, dist, budget=BRUTE_GUARD):
    """Brute-force |B_r1 ∩ B_r2| for centers at rank distance dist.

    The volume depends on the centers only through their distance, so the
    centers are canonicalized to 0 and the canonical rank-dist vector.
    """
    c2 = canonical_rank_vector(field, n, dist)
    return intersection_volume_brute(field, [((0,) * n, r1), (c2, r2)], budget)


def large_diameter_set(q, m, n, r):
    """A set of diameter <= 2r that outgrows every rank ball of radius r.

    S = {x : x_{2r} = ... = x_{n-1} = 0} has q^{2mr} elements (> V_r for the
    admissible parameters) yet any two members differ in at most the first
    2r coordinates, so their distance is at most 2r.
    """
    if not (3 <= n <= m):
        raise ValueError("requires 3 <= n <= m")
    if not 2 <= 2 * r < n:
        raise ValueError("requires 2 <= 2r < n")
    field = make_field(q, m)
    size = field.order ** (2 * r)
    if size > BRUTE_GUARD:
        raise ValueError(f"set size {size} exceeds guard {BRUTE_GUARD}")
    tail = (0,) * (n - 2 * r)
    return [head + tail for head in
            itertools.product(field.elements(), repeat=2 * r)]

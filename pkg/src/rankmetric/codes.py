"""Rank-metric codes over GF(q^m)^n: construction and brute-force evaluation.

A LinearCode is a generator matrix over GF(q^m); a Codebook is an explicit
codeword set (the transpose and field-embedding constructions need not stay
linear over their new ambient field, so they return Codebooks).  Exhaustive
quantities (rank distribution, minimum distance, covering radius) run on
vectorized bit-packed kernels when q = 2 and fall back to exact scalar
arithmetic otherwise; both paths are guarded by an enumeration cap.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import _batch, _linalg
from .ffield import Field, make_field
from .rankgeom import BRUTE_GUARD, enumerate_els, gaussian, rank


# ---------------------------------------------------------------------------
# code types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearCode:
    """An (n, k) linear code given by a k x n generator matrix of encodings."""

    field: Field
    n: int
    G: tuple  # k rows, each a tuple of n encodings

    @property
    def k(self):
        return len(self.G)

    @property
    def size(self):
        return self.field.order ** self.k

    def encode(self, msg):
        """Codeword for a message of k encodings: sum_i msg_i * G_i."""
        F = self.field
        word = [0] * self.n
        for c, row in zip(msg, self.G):
            if c:
                for j, g in enumerate(row):
                    if g:
                        word[j] = F.add(word[j], F.mul(c, g))
        return tuple(word)

    def contains(self, word):
        """Membership via the parity checks H . word = 0."""
        F = self.field
        for h in dual(self).G:
            acc = 0
            for a, b in zip(h, word):
                if a and b:
                    acc = F.add(acc, F.mul(a, b))
            if acc:
                return False
        return True

    def __repr__(self):
        return (f"LinearCode(q={self.field.q}, m={self.field.m}, "
                f"n={self.n}, k={self.k})")


@dataclass(frozen=True)
class Codebook:
    """An explicit (possibly nonlinear) set of codewords over one field."""

    field: Field
    words: tuple  # tuple of coordinate tuples, deduplicated

    @property
    def n(self):
        return len(self.words[0]) if self.words else 0

    @property
    def size(self):
        return len(self.words)

    def __repr__(self):
        return (f"Codebook(q={self.field.q}, m={self.field.m}, "
                f"n={self.n}, size={self.size})")


def make_code(field, G):
    """LinearCode from generator rows; rejects dependent rows."""
    G = tuple(tuple(int(x) for x in row) for row in G)
    if G:
        n = len(G[0])
        if any(len(row) != n for row in G):
            raise ValueError("ragged generator matrix")
        for row in G:
            for x in row:
                if not 0 <= x < field.order:
                    raise ValueError(f"encoding {x} outside field")
        if _linalg.rank_field(field, [list(r) for r in G]) < len(G):
            raise ValueError("generator rows are dependent")
    else:
        raise ValueError("empty generator needs an explicit length; "
                         "use make_zero_code")
    return LinearCode(field, n, G)


def make_zero_code(field, n):
    """The (n, 0) code {0}."""
    return LinearCode(field, n, ())


def make_codebook(field, words):
    words = sorted({tuple(int(x) for x in w) for w in words})
    if not words:
        raise ValueError("empty codebook")
    n = len(words[0])
    if any(len(w) != n for w in words):
        raise ValueError("ragged codewords")
    return Codebook(field, tuple(words))


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def codewords(code):
    """All codewords.  Linear codes stream in message-odometer order: message
    w in [0, q^{mk}) has symbols msg_i = (w // order^i) mod order."""
    if isinstance(code, Codebook):
        yield from code.words
        return
    F = code.field
    if code.size > BRUTE_GUARD:
        raise ValueError(f"codebook size {code.size} exceeds guard")
    for w in range(code.size):
        msg = [(w // F.order ** i) % F.order for i in range(code.k)]
        yield code.encode(msg)


def _packed_words_gf2(code):
    """(size,) int64 array of bit-packed codewords (q = 2 only)."""
    F = code.field
    m = F.m
    if isinstance(code, Codebook):
        return np.array(
            [sum(x << (j * m) for j, x in enumerate(w)) for w in code.words],
            dtype=np.int64)
    msgs = np.arange(code.size, dtype=np.int64)
    packed = np.zeros(code.size, dtype=np.int64)
    for i in range(code.k):
        sym = (msgs >> (i * m)) & (F.order - 1)
        for j, g in enumerate(code.G[i]):
            if g:
                packed ^= _batch.mul_lut(F, g)[sym] << (j * m)
    return packed


def rank_distribution(code):
    """(A_0, ..., A_n): codeword counts by rank weight, exact."""
    F, n = code.field, code.n
    if code.size > BRUTE_GUARD:
        raise ValueError(f"codebook size {code.size} exceeds guard")
    if F.q == 2:
        packed = _packed_words_gf2(code)
        ranks = _batch.rank_bits_gf2(_batch.bit_rows_gf2(F.m, n, packed), n)
        counts = np.bincount(ranks, minlength=n + 1)
        return tuple(int(c) for c in counts[:n + 1])
    counts = [0] * (n + 1)
    for w in codewords(code):
        counts[rank(F, w)] += 1
    return tuple(counts)


def min_rank_distance(code):
    """Minimum rank distance over distinct codeword pairs.

    For a linear code this is the minimum nonzero codeword rank; a Codebook
    is scanned pairwise.  Codes with fewer than two words have no pairs and
    return None.
    """
    if isinstance(code, LinearCode):
        if code.k == 0:
            return None
        dist = rank_distribution(code)
        return next(i for i in range(1, len(dist)) if dist[i])
    if code.size < 2:
        return None
    F = code.field
    best = None
    for i, u in enumerate(code.words):
        for v in code.words[i + 1:]:
            d = rank(F, tuple(F.sub(a, b) for a, b in zip(u, v)))
            if best is None or d < best:
                best = d
                if best == 1:
                    return 1
    return best


def hamming_distribution(code):
    """Codeword counts by Hamming weight (for d_R <= d_H comparisons)."""
    counts = [0] * (code.n + 1)
    for w in codewords(code):
        counts[sum(1 for x in w if x)] += 1
    return tuple(counts)


# ---------------------------------------------------------------------------
# duality
# ---------------------------------------------------------------------------

_dual_cache = {}


def dual(code):
    """The dual under the standard inner product sum_i u_i v_i over GF(q^m).

    Computed from the reduced echelon form of G: each free column f yields
    the parity row h with h[f] = 1 and h[p_i] = -R[i][f] at the pivots.
    """
    key = (code.field, code.n, code.G)
    if key in _dual_cache:
        return _dual_cache[key]
    F, n = code.field, code.n
    rref, pivots = _linalg.rref_field(F, [list(r) for r in code.G])
    free = [c for c in range(n) if c not in pivots]
    H = []
    for f in free:
        h = [0] * n
        h[f] = 1
        for i, p in enumerate(pivots):
            h[p] = F.neg(rref[i][f])
        H.append(tuple(h))
    out = LinearCode(F, n, tuple(H))
    _dual_cache[key] = out
    return out


def dot(field, u, v):
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = field.add(acc, field.mul(a, b))
    return acc


# ---------------------------------------------------------------------------
# covering radius
# ---------------------------------------------------------------------------

def covering_radius(code):
    """max over the ambient space of the rank distance to the code, exact.

    q = 2 linear codes use a vectorized syndrome scan (coset-leader weights);
    q = 2 codebooks use translated rank-table lookups; other fields fall back
    to scalar enumeration.  Guarded by the ambient size q^{mn}.
    """
    F, n = code.field, code.n
    ambient = F.order ** n
    if ambient > BRUTE_GUARD:
        raise ValueError(f"ambient size {ambient} exceeds guard")
    if F.q == 2:
        if isinstance(code, LinearCode):
            return _covering_radius_gf2_linear(code)
        return _covering_radius_gf2_book(code)
    words = list(codewords(code))
    best = 0
    for x in itertools.product(range(F.order), repeat=n):
        d = min(rank(F, tuple(F.sub(a, b) for a, b in zip(x, c)))
                for c in words)
        best = max(best, d)
    return best


def _covering_radius_gf2_linear(code):
    F, n = code.field, code.n
    m = F.m
    ranks = _batch.rank_table_gf2(F, n)
    H = dual(code).G
    if not H:  # k = n: the whole space covers itself
        return 0
    xs = np.arange(1 << (m * n), dtype=np.int64)
    key = np.zeros(len(xs), dtype=np.int64)
    for r, row in enumerate(H):
        acc = np.zeros(len(xs), dtype=np.int64)
        for j, h in enumerate(row):
            if h:
                acc ^= _batch.mul_lut(F, h)[(xs >> (j * m)) & (F.order - 1)]
        key |= acc << (r * m)
    minw = np.full(1 << (m * len(H)), 255, dtype=np.uint8)
    np.minimum.at(minw, key, ranks)
    return int(minw.max())


def _covering_radius_gf2_book(code):
    F, n = code.field, code.n
    ranks = _batch.rank_table_gf2(F, n)
    xs = np.arange(1 << (F.m * n), dtype=np.int64)
    best = np.full(len(xs), 255, dtype=np.uint8)
    for p in _packed_words_gf2(code):
        np.minimum(best, ranks[xs ^ p], out=best)
    return int(best.max())


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def gabidulin(field, g, k, a=1):
    """Generalized Gabidulin code: generator row i is (g_0^[i], ..., g_{n-1}^[i])
    with [i] the a*i-fold Frobenius x -> x^{q^{ai}}.  Requires n <= m,
    gcd(a, m) = 1 and g of full rank n; the result is MRD (d_R = n - k + 1).
    """
    g = tuple(int(x) for x in g)
    n = len(g)
    if n > field.m:
        raise ValueError(f"length {n} exceeds extension degree {field.m}")
    if math.gcd(a, field.m) != 1:
        raise ValueError(f"Frobenius power {a} not coprime to m={field.m}")
    if rank(field, g) < n:
        raise ValueError("generator vector must have full rank n")
    if not 1 <= k <= n:
        raise ValueError(f"dimension {k} outside [1, {n}]")
    G = tuple(tuple(field.frobenius(x, a * i) for x in g) for i in range(k))
    return LinearCode(field, n, G)


def cartesian_power(code, l):
    """The l-fold cartesian product: block-diagonal generator, length n*l,
    dimension k*l, and the same minimum distance."""
    if not isinstance(code, LinearCode):
        raise TypeError("cartesian_power needs a LinearCode")
    if l < 1:
        raise ValueError("l must be >= 1")
    n = code.n
    G = tuple(
        (0,) * (n * b) + row + (0,) * (n * (l - 1 - b))
        for b in range(l)
        for row in code.G
    )
    return LinearCode(code.field, n * l, G)


def transpose_code(code):
    """The transpose code over GF(q^n) of length m: each codeword's m x n
    expansion is transposed and reassembled.  Rank and covering radius are
    preserved, but linearity over the new field generally is not, so the
    result is an explicit Codebook.  Both ambients use polynomial bases.
    """
    F, n = code.field, code.n
    if F.order ** n > BRUTE_GUARD:
        raise ValueError("ambient exceeds guard")
    out_field = make_field(F.q, n)
    words = []
    for w in codewords(code):
        mat = F.expand(w)  # m x n over GF(q)
        transposed = [[mat[i][j] for i in range(F.m)] for j in range(n)]
        words.append(out_field.reassemble(transposed))
    return make_codebook(out_field, words)


def embed_code(code, target_m):
    """Image of a code over GF(q^mu) in GF(q^{target_m}) under the injection
    aligning the polynomial bases (beta_i -> alpha_i).

    Base-q digit vectors zero-extend, so the injection is the identity on
    integer encodings; ranks are preserved.  When the input is an
    (n, n - rho) MRD code and target_m = mu + rho, the image has covering
    radius exactly rho in the larger ambient.
    """
    F = code.field
    if target_m < F.m:
        raise ValueError("target extension degree smaller than the source")
    out_field = make_field(F.q, target_m)
    return make_codebook(out_field, list(codewords(code)))


def els_code(field, els):
    """The ELS itself as an (n, dim) linear code (generator = elementary basis)."""
    return make_code(field, els.basis) if els.basis else \
        make_zero_code(field, els.n)


def mrd_els_check(code):
    """True iff C (+) V = GF(q^m)^n for every ELS V of dimension n - k,
    i.e. no nonzero member of any such V passes the parity checks.  Agrees
    with min_rank_distance(code) == n - k + 1 (the MRD property)."""
    if not isinstance(code, LinearCode):
        raise TypeError("mrd_els_check needs a LinearCode")
    F, n, k = code.field, code.n, code.k
    if n > F.m:
        raise ValueError("requires n <= m")
    scan = gaussian(n, n - k, F.q) * F.order ** (n - k)
    if scan > BRUTE_GUARD:
        raise ValueError("ELS element scan exceeds guard")
    H = dual(code).G
    for els in enumerate_els(F.q, F.m, n, n - k):
        for v in els.elements(F):
            if any(v) and all(dot(F, h, v) == 0 for h in H):
                return False
    return True


def array_view(code, basis=None):
    """The m x n GF(q) expansion of every codeword (an array codebook)."""
    F = code.field
    if basis is not None and not F.is_basis(basis):
        raise ValueError("dependent basis")
    if code.size > BRUTE_GUARD:
        raise ValueError(f"codebook size {code.size} exceeds guard")
    return [F.expand(w, basis=basis) for w in codewords(code)]


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------

def format_code(code):
    """Text format: header "q m n k c_0 ... c_m" (modulus coefficients
    low-to-high), then k generator rows of n encodings."""
    if not isinstance(code, LinearCode):
        raise TypeError("only linear codes have a generator file format")
    F = code.field
    head = [F.q, F.m, code.n, code.k, *F.modulus]
    lines = [" ".join(map(str, head))]
    lines += [" ".join(map(str, row)) for row in code.G]
    return "\n".join(lines) + "\n"


def parse_code(text):
    lines = [ln for ln in text.splitlines()
             if ln.strip() and not ln.lstrip().startswith("#")]
    head = list(map(int, lines[0].split()))
    if len(head) < 4:
        raise ValueError("header needs q m n k [modulus]")
    q, m, n, k = head[:4]
    modulus = tuple(head[4:]) if len(head) > 4 else None
    field = make_field(q, m, modulus)
    if len(lines) != 1 + k:
        raise ValueError(f"expected {k} generator rows, got {len(lines) - 1}")
    rows = [tuple(map(int, ln.split())) for ln in lines[1:]]
    if any(len(r) != n for r in rows):
        raise ValueError("generator row of wrong length")
    if k == 0:
        return make_zero_code(field, n)
    return make_code(field, rows)


def write_code(path, code):
    with open(path, "w") as fh:
        fh.write(format_code(code))


def read_code(path):
    with open(path) as fh:
        return parse_code(fh.read())

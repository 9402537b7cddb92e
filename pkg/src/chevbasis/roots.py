"""Root systems generated from a Cartan matrix by height induction.

Roots are plain integer tuples over the simple roots, so the simple root
alpha_i is the i-th unit vector.  A root is added at height h+1 exactly
when the backward string length q and the pairing <alpha_i, beta> allow
it: beta + alpha_i is a root iff q - <alpha_i, beta> > 0.  Everything
here is exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cartan import CartanMatrix
from .errors import DegeneratePair, InternalInconsistency, NotARoot

Root = tuple[int, ...]


def root_height(alpha: Root) -> int:
    return sum(alpha)


def root_sign(alpha: Root) -> int:
    """+1 for positive roots, -1 for negative ones.

    Valid because every root has all coefficients of one sign.
    """
    for x in alpha:
        if x != 0:
            return 1 if x > 0 else -1
    raise NotARoot("zero vector has no sign")


def negate(alpha: Root) -> Root:
    return tuple(-x for x in alpha)


def add(alpha: Root, beta: Root) -> Root:
    return tuple(x + y for x, y in zip(alpha, beta))


def sub(alpha: Root, beta: Root) -> Root:
    return tuple(x - y for x, y in zip(alpha, beta))


@dataclass
class RootSystem:
    """The full root system of a Cartan matrix, with exact integer queries.

    ``roots`` lists the positive roots sorted by (height, coefficients)
    followed by their negatives in the same order, so index k and index
    k + positive_count are a root and its negative.  Instances are never
    mutated after construction and are safe to share between threads.
    """

    cartan: CartanMatrix
    roots: tuple[Root, ...]
    positive_count: int
    index: dict[Root, int] = field(repr=False)

    def __post_init__(self) -> None:
        self._coroots: list[Root | None] = [None] * len(self.roots)
        self._symmetrizer: tuple[int, ...] | None = None

    # -- lookups ------------------------------------------------------

    def contains(self, alpha: Root) -> bool:
        return alpha in self.index

    def index_of(self, alpha: Root) -> int:
        try:
            return self.index[alpha]
        except KeyError:
            raise NotARoot(f"{alpha} is not a root") from None

    def neg_index(self, k: int) -> int:
        p = self.positive_count
        return k + p if k < p else k - p

    def simple_root(self, i: int) -> Root:
        """The i-th simple root (1-based node id) as a unit vector."""
        return tuple(1 if j == i else 0 for j in self.cartan.nodes)

    @property
    def rank(self) -> int:
        return self.cartan.rank

    # -- strings and pairings -----------------------------------------

    def string_lengths(self, alpha: Root, beta: Root) -> tuple[int, int]:
        """(p, q) with p = max{i >= 0 : beta + i alpha root}, q backwards."""
        if beta == alpha or beta == negate(alpha):
            raise DegeneratePair("string through beta = +/- alpha is undefined")
        if not self.contains(alpha) or not self.contains(beta):
            raise NotARoot("string endpoints must be roots")
        p = 0
        gamma = add(beta, alpha)
        while gamma in self.index:
            p += 1
            gamma = add(gamma, alpha)
        q = 0
        gamma = sub(beta, alpha)
        while gamma in self.index:
            q += 1
            gamma = sub(gamma, alpha)
        return p, q

    def pairing_simple(self, i: int, beta: Root) -> int:
        """<alpha_i, beta> = beta(h_i), the i-th Cartan row applied to beta."""
        row = self.cartan.entries[i - 1]
        return sum(a * m for a, m in zip(row, beta))

    def pairing(self, alpha: Root, beta: Root) -> int:
        """<alpha, beta> = beta(h_alpha), via the co-root coordinates of alpha."""
        c = self.coroot(alpha)
        return sum(
            ci * self.pairing_simple(i, beta)
            for ci, i in zip(c, self.cartan.nodes)
        )

    # -- co-roots ------------------------------------------------------

    def symmetrizer(self) -> tuple[int, ...]:
        """Minimal positive integers s with s_i a_ij = s_j a_ji."""
        if self._symmetrizer is not None:
            return self._symmetrizer
        cm = self.cartan
        vals: dict[int, Fraction] = {1: Fraction(1)}
        stack = [1]
        while stack:
            i = stack.pop()
            for j in cm.neighbors(i):
                if j not in vals:
                    vals[j] = vals[i] * Fraction(cm.a(i, j), cm.a(j, i))
                    stack.append(j)
        lcm_den = math.lcm(*(v.denominator for v in vals.values()))
        ints = [int(vals[i] * lcm_den) for i in cm.nodes]
        g = math.gcd(*ints)
        s = tuple(v // g for v in ints)
        for i in cm.nodes:
            for j in cm.nodes:
                if s[i - 1] * cm.a(i, j) != s[j - 1] * cm.a(j, i):
                    raise InternalInconsistency("symmetrizer does not symmetrize")
        self._symmetrizer = s
        return s

    def coroot(self, alpha: Root) -> Root:
        """Integer coordinates c of h_alpha = sum c_i h_i.

        Simply laced systems return the coefficients of alpha unchanged.
        In general c_i = s_i n_i / s_alpha with s the symmetrizer and
        s_alpha the half square length; the division is always exact and
        the result satisfies alpha(h_alpha) = 2.
        """
        k = self.index_of(alpha)
        cached = self._coroots[k]
        if cached is not None:
            return cached
        if self.cartan.simply_laced:
            c = alpha
        else:
            s = self.symmetrizer()
            cm = self.cartan
            sq = sum(
                s[i] * cm.entries[i][j] * alpha[i] * alpha[j]
                for i in range(cm.rank)
                for j in range(cm.rank)
            )
            if sq <= 0 or sq % 2:
                raise InternalInconsistency(f"bad square length {sq} for {alpha}")
            s_alpha = sq // 2
            num = [s[i] * alpha[i] for i in range(cm.rank)]
            if any(v % s_alpha for v in num):
                raise InternalInconsistency(f"non-integral co-root for {alpha}")
            c = tuple(v // s_alpha for v in num)
        check = sum(
            ci * self.pairing_simple(i, alpha)
            for ci, i in zip(c, self.cartan.nodes)
        )
        if check != 2:
            raise InternalInconsistency(f"alpha(h_alpha) = {check} != 2 for {alpha}")
        self._coroots[k] = c
        return c


def generate_roots(cm: CartanMatrix) -> RootSystem:
    """Generate the whole root system by height induction.

    Starting from the simple roots, beta + alpha_i joins the positive
    system whenever the backward string length q_{alpha_i, beta} minus
    <alpha_i, beta> is positive; negatives are added by closure at the
    end.  Terminates for every finite type, and the result is independent
    of traversal order.
    """
    n = cm.rank
    simple = [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
    positive: set[Root] = set(simple)
    frontier = list(simple)
    while frontier:
        new: list[Root] = []
        for beta in frontier:
            for i in range(n):
                q = 0
                gamma = tuple(b - s for b, s in zip(beta, simple[i]))
                while gamma in positive:
                    q += 1
                    gamma = tuple(g - s for g, s in zip(gamma, simple[i]))
                pair = sum(a * m for a, m in zip(cm.entries[i], beta))
                if q - pair > 0:
                    cand = tuple(b + s for b, s in zip(beta, simple[i]))
                    if cand not in positive:
                        positive.add(cand)
                        new.append(cand)
        frontier = new
    ordered = sorted(positive, key=lambda r: (root_height(r), r))
    roots = tuple(ordered) + tuple(negate(r) for r in ordered)
    index = {r: k for k, r in enumerate(roots)}
    return RootSystem(cartan=cm, roots=roots, positive_count=len(ordered), index=index)
